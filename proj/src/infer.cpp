#include <algorithm>
#include <optional>

#include "simplang/pattern.hpp"
#include "simplang/tandem.hpp"

namespace simplang {

namespace {

bool covers_all(const Pattern& p, const std::vector<Word>& words, const Alphabet& a) {
    Dfa d = to_dfa(p, a);
    return std::all_of(words.begin(), words.end(), [&](const Word& w) { return run_dfa(d, w); });
}

// Same atom structure and literals; only multiplicities may differ.
// Positions where every member agrees keep their bound; positions with
// mixed multiplicities relax to one-or-more, which is how varying repeat
// counts are reported.
std::optional<Pattern> unify_shapes(const std::vector<const Pattern*>& ps) {
    const Pattern& first = *ps.front();
    for (const Pattern* p : ps) {
        if (p->universal || p->atoms.size() != first.atoms.size()) return std::nullopt;
    }
    Pattern out;
    for (std::size_t k = 0; k < first.atoms.size(); ++k) {
        if (const auto* lit = std::get_if<LitAtom>(&first.atoms[k])) {
            for (const Pattern* p : ps) {
                const auto* other = std::get_if<LitAtom>(&p->atoms[k]);
                if (!other || other->sym != lit->sym) return std::nullopt;
            }
            out.atoms.push_back(*lit);
            continue;
        }
        std::vector<const Pattern*> bodies;
        bodies.reserve(ps.size());
        bool bounds_equal = true;
        Bound bound = std::get<RepAtom>(first.atoms[k]).bound;
        for (const Pattern* p : ps) {
            const auto* rep = std::get_if<RepAtom>(&p->atoms[k]);
            if (!rep) return std::nullopt;
            bodies.push_back(rep->body.get());
            if (!(rep->bound == bound)) bounds_equal = false;
        }
        auto body = unify_shapes(bodies);
        if (!body) return std::nullopt;
        if (!bounds_equal) {
            int min_lo = bound.lo;
            for (const Pattern* p : ps) {
                min_lo = std::min(min_lo, std::get<RepAtom>(p->atoms[k]).bound.lo);
            }
            bound = Bound::at_least(std::min(min_lo, 1));
        }
        out.atoms.push_back(RepAtom{std::make_shared<const Pattern>(std::move(*body)), bound});
    }
    return out;
}

// Repeat bodies all consist of one symbol: the language family where
// same-symbol block alignment is sound.
bool single_symbol_structure(const Pattern& p) {
    for (const Atom& atom : p.atoms) {
        if (std::holds_alternative<LitAtom>(atom)) continue;
        const Pattern& body = *std::get<RepAtom>(atom).body;
        if (body.atoms.size() != 1 || !std::holds_alternative<LitAtom>(body.atoms[0])) return false;
    }
    return !p.universal;
}

std::vector<std::pair<Symbol, int>> blocks_of(const Word& x) {
    std::vector<std::pair<Symbol, int>> blocks;
    for (Symbol s : x) {
        if (!blocks.empty() && blocks.back().first == s) {
            ++blocks.back().second;
        } else {
            blocks.emplace_back(s, 1);
        }
    }
    return blocks;
}

// Aligns every member's block sequence against the longest one as a
// subsequence (greedy leftmost), then widens each reference block just
// enough to cover the observed counts. Blocks missing from some member
// become optional.
std::optional<Pattern> align_blocks(const std::vector<Word>& cluster) {
    std::vector<std::vector<std::pair<Symbol, int>>> seqs;
    seqs.reserve(cluster.size());
    for (const Word& w : cluster) seqs.push_back(blocks_of(w));

    std::size_t reference = 0;
    for (std::size_t i = 1; i < seqs.size(); ++i) {
        if (seqs[i].size() > seqs[reference].size()) reference = i;
    }
    const auto& ref = seqs[reference];
    if (ref.empty()) return std::nullopt;

    std::vector<int> lo(ref.size(), -1), hi(ref.size(), 0);
    for (const auto& seq : seqs) {
        std::vector<int> counts(ref.size(), 0);
        std::size_t at = 0;
        for (const auto& [sym, count] : seq) {
            while (at < ref.size() && ref[at].first != sym) ++at;
            if (at == ref.size()) return std::nullopt;  // not a subsequence
            counts[at++] = count;
        }
        for (std::size_t j = 0; j < ref.size(); ++j) {
            lo[j] = lo[j] < 0 ? counts[j] : std::min(lo[j], counts[j]);
            hi[j] = std::max(hi[j], counts[j]);
        }
    }

    Pattern out;
    for (std::size_t j = 0; j < ref.size(); ++j) {
        Symbol sym = ref[j].first;
        if (lo[j] == hi[j]) {
            for (int c = 0; c < lo[j]; ++c) out.atoms.push_back(LitAtom{sym});
            continue;
        }
        Pattern body;
        body.atoms.push_back(LitAtom{sym});
        Bound b = lo[j] >= 1               ? Bound::at_least(1)
                  : hi[j] == 1             ? Bound::range(0, 1)
                                           : Bound::at_least(0);
        out.atoms.push_back(RepAtom{std::make_shared<const Pattern>(std::move(body)), b});
    }
    return out;
}

}  // namespace

Pattern infer_language(const std::vector<Word>& cluster, const Alphabet& a, int max_depth) {
    if (cluster.empty()) throw ArgumentError("cannot infer a language from an empty cluster");

    std::vector<Pattern> decomps;
    decomps.reserve(cluster.size());
    for (const Word& w : cluster) decomps.push_back(canonicalize(decompose(w, max_depth)));

    if (cluster.size() == 1) return decomps.front();

    // Shared skeleton: unify multiplicities position by position.
    bool same_skeleton = true;
    std::string key = skeleton_key(decomps.front(), a);
    for (std::size_t i = 1; i < decomps.size() && same_skeleton; ++i) {
        same_skeleton = skeleton_key(decomps[i], a) == key;
    }
    if (same_skeleton) {
        std::vector<const Pattern*> ptrs;
        ptrs.reserve(decomps.size());
        for (const Pattern& p : decomps) ptrs.push_back(&p);
        if (auto unified = unify_shapes(ptrs)) {
            if (covers_all(*unified, cluster, a)) return *unified;
        }
    }

    // Same-symbol block alignment covers clusters whose members repeat
    // single symbols but disagree on which blocks appear (a+b+ together
    // with ab+a, for instance).
    if (std::all_of(decomps.begin(), decomps.end(), single_symbol_structure)) {
        if (auto aligned = align_blocks(cluster)) {
            if (covers_all(*aligned, cluster, a)) return *aligned;
        }
    }

    // Climb the ladder; first candidate whose language covers the whole
    // cluster wins.
    for (GeneralizationLevel level :
         {GeneralizationLevel::Ge2, GeneralizationLevel::Plus, GeneralizationLevel::Star,
          GeneralizationLevel::SymbolStar}) {
        for (const Pattern& d : decomps) {
            Pattern candidate = generalize(d, level);
            if (covers_all(candidate, cluster, a)) return candidate;
        }
    }
    return Pattern::sigma_star();
}

}  // namespace simplang
