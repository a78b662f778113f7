#include "simplang/tandem.hpp"

#include <algorithm>
#include <set>

namespace simplang {

namespace {

// z[i] = length of the longest common prefix of s and s[i..]; z[0] = |s|.
std::vector<int> z_function(const Word& s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> z(static_cast<std::size_t>(n), 0);
    if (n == 0) return z;
    z[0] = n;
    for (int i = 1, l = 0, r = 0; i < n; ++i) {
        int k = 0;
        if (i < r) k = std::min(r - i, z[static_cast<std::size_t>(i - l)]);
        while (i + k < n && s[static_cast<std::size_t>(k)] == s[static_cast<std::size_t>(i + k)]) ++k;
        z[static_cast<std::size_t>(i)] = k;
        if (i + k > r) {
            l = i;
            r = i + k;
        }
    }
    return z;
}

bool is_primitive(const Word& x, int start, int period) {
    for (int d = 1; d <= period / 2; ++d) {
        if (period % d != 0) continue;
        bool repeats = true;
        for (int i = d; i < period && repeats; ++i) {
            repeats = x[static_cast<std::size_t>(start + i)] == x[static_cast<std::size_t>(start + i - d)];
        }
        if (repeats) return false;
    }
    return true;
}

struct Interval {
    int start;
    int period;
    int end;
    auto operator<=>(const Interval&) const = default;
};

constexpr Symbol kSeparator = -1;

// Finds every run crossing mid inside the window [lo, hi). For a run with
// period p crossing the split, one of the anchor pairs (mid, mid+p) or
// (mid-p, mid) lies within it; extensions around the anchor are read off
// four z-arrays, two per direction, so each period costs O(1). Candidates
// cut short by the window boundary fail the full-string maximality test and
// are dropped here; the ancestor window whose split they cross reports them
// instead.
void crossing_runs(const Word& x, int lo, int mid, int hi, std::set<Interval>& out) {
    const int n = static_cast<int>(x.size());
    const int nu = mid - lo;
    const int nv = hi - mid;

    Word u(x.begin() + lo, x.begin() + mid);
    Word v(x.begin() + mid, x.begin() + hi);
    Word ru(u.rbegin(), u.rend());
    Word rv(v.rbegin(), v.rend());

    // forward[p] for right anchors: how far x[i] == x[i+p] continues for
    // i = mid, mid+1, ... (pairs inside v).
    std::vector<int> zv = z_function(v);

    // backward for right anchors: longest common suffix of x[lo..mid) and
    // x[lo..mid+p), i.e. LCP(ru, reverse(u v[0..p))) read from ru # rv ru.
    Word t_right = ru;
    t_right.push_back(kSeparator);
    t_right.insert(t_right.end(), rv.begin(), rv.end());
    t_right.insert(t_right.end(), ru.begin(), ru.end());
    std::vector<int> z_right = z_function(t_right);

    // backward[p] for left anchors: pairs strictly inside u.
    std::vector<int> zru = z_function(ru);

    // forward for left anchors: LCP(v, x[mid-p..hi)) read from v # u v.
    Word t_left = v;
    t_left.push_back(kSeparator);
    t_left.insert(t_left.end(), u.begin(), u.end());
    t_left.insert(t_left.end(), v.begin(), v.end());
    std::vector<int> z_left = z_function(t_left);

    auto consider = [&](int start, int period, int end) {
        if (end - start < 2 * period) return;
        // Maximality in the full string, not just the window.
        if (start > 0 &&
            x[static_cast<std::size_t>(start - 1)] == x[static_cast<std::size_t>(start - 1 + period)]) {
            return;
        }
        if (end < n && x[static_cast<std::size_t>(end)] == x[static_cast<std::size_t>(end - period)]) {
            return;
        }
        if (!is_primitive(x, start, period)) return;
        out.insert({start, period, end});
    };

    // Right anchors (mid, mid+p): catch runs keeping at least one full period
    // right of the split.
    for (int p = 1; p <= nv; ++p) {
        int fwd = p < nv ? zv[static_cast<std::size_t>(p)] : 0;
        int bwd = z_right[static_cast<std::size_t>(nu + 1 + (nv - p))];
        if (bwd + fwd >= p) {
            consider(mid - bwd, p, mid + p + fwd);
        }
    }

    // Left anchors (mid-p, mid): catch runs ending within one period of the
    // split.
    for (int p = 1; p <= nu; ++p) {
        int bwd = p < nu ? zru[static_cast<std::size_t>(p)] : 0;
        int fwd = z_left[static_cast<std::size_t>(nv + 1 + (nu - p))];
        if (bwd + fwd >= p) {
            consider(mid - p - bwd, p, mid + fwd);
        }
    }
}

void runs_rec(const Word& x, int lo, int hi, std::set<Interval>& out) {
    if (hi - lo < 2) return;
    int mid = lo + (hi - lo) / 2;
    runs_rec(x, lo, mid, out);
    runs_rec(x, mid, hi, out);
    crossing_runs(x, lo, mid, hi, out);
}

Run make_run(const Word& x, const Interval& iv) {
    Run r;
    r.start = iv.start;
    r.end = iv.end;
    r.root = Word(x.begin() + iv.start, x.begin() + iv.start + iv.period);
    r.exponent = (iv.end - iv.start) / iv.period;
    return r;
}

}  // namespace

std::vector<Run> find_runs(const Word& x) {
    std::set<Interval> intervals;
    runs_rec(x, 0, static_cast<int>(x.size()), intervals);
    std::vector<Run> runs;
    runs.reserve(intervals.size());
    for (const Interval& iv : intervals) runs.push_back(make_run(x, iv));
    // set ordering is (start, period, end) which matches (start, |root|).
    return runs;
}

std::vector<Run> brute_force_runs(const Word& x) {
    const int n = static_cast<int>(x.size());
    if (n > 64) {
        throw ArgumentError("brute-force run enumeration is limited to 64 symbols");
    }
    std::vector<Run> runs;
    for (int start = 0; start < n; ++start) {
        for (int period = 1; start + 2 * period <= n; ++period) {
            // Left-maximality makes start unique per (interval, period).
            if (start > 0 &&
                x[static_cast<std::size_t>(start - 1)] == x[static_cast<std::size_t>(start - 1 + period)]) {
                continue;
            }
            int end = start + period;
            while (end < n && x[static_cast<std::size_t>(end)] == x[static_cast<std::size_t>(end - period)]) {
                ++end;
            }
            if (end - start < 2 * period) continue;
            if (!is_primitive(x, start, period)) continue;
            runs.push_back(make_run(x, {start, period, end}));
        }
    }
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
        return std::tie(a.start, a.root, a.end) < std::tie(b.start, b.root, b.end);
    });
    return runs;
}

namespace {

Pattern decompose_rec(const Word& x, int depth) {
    if (depth <= 0 || x.size() < 2) return lit_seq(x);

    std::vector<Run> runs = find_runs(x);
    // Runs arrive sorted by (start, period), so keeping the first strict
    // maximum of covered length prefers smaller starts, then shorter roots.
    const Run* best = nullptr;
    for (const Run& r : runs) {
        if (!best || r.covered() > best->covered()) best = &r;
    }
    if (!best) return lit_seq(x);

    Word prefix(x.begin(), x.begin() + best->start);
    Word suffix(x.begin() + best->start + best->covered(), x.end());

    Pattern out = decompose_rec(prefix, depth - 1);
    Pattern body = decompose_rec(best->root, depth - 1);
    out.atoms.push_back(
        RepAtom{std::make_shared<const Pattern>(std::move(body)), Bound::exact(best->exponent)});
    Pattern tail = decompose_rec(suffix, depth - 1);
    out.atoms.insert(out.atoms.end(), tail.atoms.begin(), tail.atoms.end());
    return out;
}

}  // namespace

Pattern decompose(const Word& x, int max_depth) {
    if (max_depth < 1) throw ArgumentError("decompose needs max_depth >= 1");
    return decompose_rec(x, max_depth);
}

}  // namespace simplang
