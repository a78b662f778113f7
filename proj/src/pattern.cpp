#include "simplang/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace simplang {

Bound Bound::exact(int i) {
    if (i < 2) throw ArgumentError("exact repeat count must be >= 2; a single occurrence is a literal");
    return Bound{i, i};
}

Bound Bound::at_least(int m) {
    if (m < 0) throw ArgumentError("repeat lower bound must be >= 0");
    return Bound{m, kUnbounded};
}

Bound Bound::range(int lo, int hi) {
    if (lo < 0 || hi < lo) throw ArgumentError("invalid repeat range");
    return Bound{lo, hi};
}

bool operator==(const RepAtom& a, const RepAtom& b) {
    return a.bound == b.bound && (a.body == b.body || *a.body == *b.body);
}

bool operator==(const Pattern& a, const Pattern& b) {
    return a.universal == b.universal && a.atoms == b.atoms;
}

Pattern lit_seq(const Word& w) {
    Pattern p;
    p.atoms.reserve(w.size());
    for (Symbol s : w) p.atoms.push_back(LitAtom{s});
    return p;
}

Atom rep_atom(Pattern body, Bound b) {
    if (body.universal || body.atoms.empty()) {
        throw ArgumentError("repeat body must be a non-empty pattern");
    }
    return RepAtom{std::make_shared<const Pattern>(std::move(body)), b};
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_bound(const Bound& b, bool erase, std::string& out) {
    if (erase) {
        out += "{}";
        return;
    }
    if (b.unbounded()) {
        if (b.lo == 0) {
            out.push_back('*');
        } else if (b.lo == 1) {
            out.push_back('+');
        } else {
            out += "{>=" + std::to_string(b.lo) + "}";
        }
    } else if (b.lo == b.hi) {
        out += "{" + std::to_string(b.lo) + "}";
    } else {
        out += "{" + std::to_string(b.lo) + ".." + std::to_string(b.hi) + "}";
    }
}

void print_atoms(const Pattern& p, const Alphabet& a, bool erase_bounds, std::string& out) {
    for (const Atom& atom : p.atoms) {
        if (const auto* lit = std::get_if<LitAtom>(&atom)) {
            out.push_back(a.at(lit->sym));
        } else {
            const auto& rep = std::get<RepAtom>(atom);
            const Pattern& body = *rep.body;
            bool bare = body.atoms.size() == 1 && std::holds_alternative<LitAtom>(body.atoms[0]);
            if (bare) {
                out.push_back(a.at(std::get<LitAtom>(body.atoms[0]).sym));
            } else {
                out.push_back('(');
                print_atoms(body, a, erase_bounds, out);
                out.push_back(')');
            }
            print_bound(rep.bound, erase_bounds, out);
        }
    }
}

std::string print_impl(const Pattern& p, const Alphabet& a, bool erase_bounds) {
    if (p.universal) return "SIGMA*";
    if (p.atoms.empty()) return "EPS";
    std::string out;
    print_atoms(p, a, erase_bounds, out);
    return out;
}

}  // namespace

std::string print_pattern(const Pattern& p, const Alphabet& a) {
    return print_impl(p, a, false);
}

std::string skeleton_key(const Pattern& p, const Alphabet& a) {
    return print_impl(p, a, true);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PatternParser {
public:
    PatternParser(std::string_view text, const Alphabet& a) : text_(text), alphabet_(a) {}

    Pattern parse() {
        skip_ws();
        if (try_keyword("EPS")) {
            expect_end();
            return Pattern{};
        }
        if (try_keyword("SIGMA*")) {
            expect_end();
            return Pattern::sigma_star();
        }
        Pattern p;
        p.atoms = parse_atoms();
        expect_end();
        if (p.atoms.empty()) throw InputFormatError("empty pattern (write EPS for the empty word)");
        return p;
    }

private:
    std::vector<Atom> parse_atoms() {
        std::vector<Atom> atoms;
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] != ')') {
            char c = text_[pos_];
            if (c == '(') {
                ++pos_;
                Pattern body;
                body.atoms = parse_atoms();
                if (body.atoms.empty()) throw InputFormatError("empty group in pattern");
                if (pos_ >= text_.size() || text_[pos_] != ')') {
                    throw InputFormatError("unbalanced '(' in pattern");
                }
                ++pos_;
                Bound b = parse_bound_required();
                atoms.push_back(RepAtom{std::make_shared<const Pattern>(std::move(body)), b});
            } else if (alphabet_.contains(c)) {
                ++pos_;
                if (auto b = try_parse_bound()) {
                    Pattern body;
                    body.atoms.push_back(LitAtom{alphabet_.index_of(c)});
                    atoms.push_back(RepAtom{std::make_shared<const Pattern>(std::move(body)), *b});
                } else {
                    atoms.push_back(LitAtom{alphabet_.index_of(c)});
                }
            } else {
                throw InputFormatError(std::string("unexpected character '") + c + "' in pattern");
            }
            skip_ws();
        }
        return atoms;
    }

    Bound parse_bound_required() {
        if (auto b = try_parse_bound()) return *b;
        throw InputFormatError("expected a bound after ')'");
    }

    std::optional<Bound> try_parse_bound() {
        if (pos_ >= text_.size()) return std::nullopt;
        char c = text_[pos_];
        if (c == '+') {
            ++pos_;
            return Bound::at_least(1);
        }
        if (c == '*') {
            ++pos_;
            return Bound::at_least(0);
        }
        if (c != '{') return std::nullopt;
        ++pos_;
        if (pos_ + 1 < text_.size() && text_[pos_] == '>' && text_[pos_ + 1] == '=') {
            pos_ += 2;
            int m = parse_int();
            expect('}');
            return Bound::at_least(m);
        }
        int lo = parse_int();
        if (pos_ + 1 < text_.size() && text_[pos_] == '.' && text_[pos_ + 1] == '.') {
            pos_ += 2;
            int hi = parse_int();
            expect('}');
            return Bound::range(lo, hi);
        }
        expect('}');
        return lo >= 2 ? Bound::exact(lo) : Bound::range(lo, lo);
    }

    int parse_int() {
        std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == begin || pos_ - begin > 9) throw InputFormatError("bad integer in pattern bound");
        int v = 0;
        for (std::size_t i = begin; i < pos_; ++i) v = v * 10 + (text_[i] - '0');
        return v;
    }

    bool try_keyword(std::string_view kw) {
        if (text_.substr(pos_, kw.size()) == kw) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw InputFormatError(std::string("expected '") + c + "' in pattern");
        }
        ++pos_;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) {
            throw InputFormatError("trailing characters in pattern: '" + std::string(text_.substr(pos_)) + "'");
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

Pattern parse_pattern(std::string_view text, const Alphabet& a) {
    return PatternParser(text, a).parse();
}

// ---------------------------------------------------------------------------
// Compilation to automata

namespace {

constexpr std::size_t kMaxNfaStates = 200000;

struct Fragment {
    int start;
    int accept;
};

class NfaBuilder {
public:
    explicit NfaBuilder(int alphabet_size) : alphabet_size_(alphabet_size) {}

    Fragment build(const Pattern& p) {
        Fragment f = epsilon_fragment();
        for (const Atom& atom : p.atoms) {
            f = concat(f, build_atom(atom));
        }
        return f;
    }

    std::vector<int> closure(std::vector<int> states) const {
        std::vector<char> seen(eps_.size(), 0);
        std::vector<int> stack = states;
        for (int s : states) seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int t : eps_[static_cast<std::size_t>(q)]) {
                if (!seen[static_cast<std::size_t>(t)]) {
                    seen[static_cast<std::size_t>(t)] = 1;
                    stack.push_back(t);
                }
            }
        }
        std::vector<int> out;
        for (std::size_t q = 0; q < seen.size(); ++q) {
            if (seen[q]) out.push_back(static_cast<int>(q));
        }
        return out;
    }

    std::vector<int> move(const std::vector<int>& states, Symbol s) const {
        std::vector<int> out;
        for (int q : states) {
            for (const auto& [sym, t] : edges_[static_cast<std::size_t>(q)]) {
                if (sym == s) out.push_back(t);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    Fragment build_atom(const Atom& atom) {
        if (const auto* lit = std::get_if<LitAtom>(&atom)) {
            if (lit->sym < 0 || lit->sym >= alphabet_size_) {
                throw ArgumentError("pattern symbol outside the declared alphabet");
            }
            int s = new_state();
            int a = new_state();
            edges_[static_cast<std::size_t>(s)].emplace_back(lit->sym, a);
            return {s, a};
        }
        const auto& rep = std::get<RepAtom>(atom);
        const Bound& b = rep.bound;
        Fragment f = epsilon_fragment();
        for (int i = 0; i < b.lo; ++i) {
            f = concat(f, build(*rep.body));
        }
        if (b.unbounded()) {
            f = concat(f, star(*rep.body));
        } else {
            for (int i = b.lo; i < b.hi; ++i) {
                f = concat(f, optional(*rep.body));
            }
        }
        return f;
    }

    Fragment epsilon_fragment() {
        int s = new_state();
        return {s, s};
    }

    Fragment concat(Fragment a, Fragment b) {
        if (a.accept == b.start) return {a.start, b.accept};
        eps_[static_cast<std::size_t>(a.accept)].push_back(b.start);
        return {a.start, b.accept};
    }

    Fragment star(const Pattern& body) {
        Fragment inner = build(body);
        int s = new_state();
        int a = new_state();
        eps_[static_cast<std::size_t>(s)].push_back(inner.start);
        eps_[static_cast<std::size_t>(s)].push_back(a);
        eps_[static_cast<std::size_t>(inner.accept)].push_back(inner.start);
        eps_[static_cast<std::size_t>(inner.accept)].push_back(a);
        return {s, a};
    }

    Fragment optional(const Pattern& body) {
        Fragment inner = build(body);
        int s = new_state();
        int a = new_state();
        eps_[static_cast<std::size_t>(s)].push_back(inner.start);
        eps_[static_cast<std::size_t>(s)].push_back(a);
        eps_[static_cast<std::size_t>(inner.accept)].push_back(a);
        return {s, a};
    }

    int new_state() {
        if (eps_.size() >= kMaxNfaStates) {
            throw ArgumentError("pattern expands to too many automaton states");
        }
        eps_.emplace_back();
        edges_.emplace_back();
        return static_cast<int>(eps_.size()) - 1;
    }

    int alphabet_size_;
    std::vector<std::vector<int>> eps_;
    std::vector<std::vector<std::pair<Symbol, int>>> edges_;

    friend Dfa subset_construct(NfaBuilder& nb, Fragment f, int alphabet_size);
};

Dfa subset_construct(NfaBuilder& nb, Fragment f, int alphabet_size) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sets;   // id -> sorted NFA state set
    std::vector<std::vector<int>> trans;  // id -> per-symbol successor id
    std::vector<char> accepting;

    auto intern = [&](std::vector<int> set) {
        auto [it, inserted] = ids.try_emplace(set, static_cast<int>(sets.size()));
        if (inserted) sets.push_back(std::move(set));
        return it->second;
    };

    intern(nb.closure({f.start}));
    for (std::size_t id = 0; id < sets.size(); ++id) {
        std::vector<int> set = sets[id];  // copy: sets grows while we iterate
        accepting.push_back(std::binary_search(set.begin(), set.end(), f.accept) ? 1 : 0);
        trans.emplace_back(static_cast<std::size_t>(alphabet_size));
        for (Symbol s = 0; s < alphabet_size; ++s) {
            trans[id][static_cast<std::size_t>(s)] = intern(nb.closure(nb.move(set, s)));
        }
    }

    Dfa d;
    d.alphabet_size = alphabet_size;
    d.start = 0;
    d.accepting = std::move(accepting);
    d.delta.resize(sets.size() * static_cast<std::size_t>(alphabet_size));
    for (std::size_t q = 0; q < sets.size(); ++q) {
        for (int s = 0; s < alphabet_size; ++s) {
            d.delta[q * alphabet_size + static_cast<std::size_t>(s)] = trans[q][static_cast<std::size_t>(s)];
        }
    }
    return d;
}

}  // namespace

Dfa to_dfa(const Pattern& p, const Alphabet& a) {
    if (p.universal) return Dfa::all_words(a.size());
    NfaBuilder nb(a.size());
    Fragment f = nb.build(p);
    return minimize(subset_construct(nb, f, a.size()));
}

bool matches(const Pattern& p, const Word& x, const Alphabet& a) {
    return run_dfa(to_dfa(p, a), x);
}

bool equivalent(const Pattern& p, const Pattern& q, const Alphabet& a) {
    return same_language(to_dfa(p, a), to_dfa(q, a));
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

bool is_literal_only(const Pattern& p) {
    return !p.universal &&
           std::all_of(p.atoms.begin(), p.atoms.end(),
                       [](const Atom& a) { return std::holds_alternative<LitAtom>(a); });
}

// Smallest d such that the atom sequence is (prefix of length d)^(n/d).
std::size_t primitive_period(const std::vector<Atom>& atoms) {
    std::size_t n = atoms.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = atoms[i] == atoms[i - d];
        if (ok) return d;
    }
    return n;
}

// (v^inner)^outer collapsed to a single bound over v where the exponent set
// stays a contiguous interval; nullopt when collapsing would change the
// language (e.g. (v{2})+ is the even powers).
std::optional<Bound> collapse_bounds(const Bound& inner, const Bound& outer) {
    if (outer.is_exact()) {
        int k = outer.lo;
        if (inner.unbounded()) return Bound::at_least(inner.lo * k);
        int lo = inner.lo * k;
        int hi = inner.hi * k;
        // All sums of k terms from [inner.lo, inner.hi] form [lo, hi].
        return lo == hi ? (lo >= 2 ? Bound::exact(lo) : Bound::range(lo, lo)) : Bound::range(lo, hi);
    }
    if (outer.unbounded() && inner.unbounded()) {
        if (outer.lo >= 1) return Bound::at_least(inner.lo * outer.lo);
        if (inner.lo <= 1) return Bound::at_least(0);  // (v*)* and (v+)*
    }
    return std::nullopt;
}

Bound sum_bounds(const Bound& a, const Bound& b) {
    int lo = a.lo + b.lo;
    if (a.unbounded() || b.unbounded()) return Bound{lo, Bound::kUnbounded};
    return Bound{lo, a.hi + b.hi};
}

Bound shift_bound(const Bound& b, int delta) {
    return Bound{b.lo + delta, b.unbounded() ? Bound::kUnbounded : b.hi + delta};
}

const Pattern& rep_body(const Atom& a) { return *std::get<RepAtom>(a).body; }

bool is_rep(const Atom& a) { return std::holds_alternative<RepAtom>(a); }

bool is_single_lit_rep(const Atom& a, Symbol sym) {
    if (!is_rep(a)) return false;
    const Pattern& b = rep_body(a);
    return b.atoms.size() == 1 && std::holds_alternative<LitAtom>(b.atoms[0]) &&
           std::get<LitAtom>(b.atoms[0]).sym == sym;
}

}  // namespace

Pattern canonicalize(const Pattern& p) {
    if (p.universal) return p;

    // Bottom-up: canonical bodies, inlined trivial bounds, collapsed powers.
    std::vector<Atom> atoms;
    for (const Atom& atom : p.atoms) {
        if (std::holds_alternative<LitAtom>(atom)) {
            atoms.push_back(atom);
            continue;
        }
        const auto& rep = std::get<RepAtom>(atom);
        Pattern body = canonicalize(*rep.body);
        Bound bound = rep.bound;

        if (bound.lo == 0 && bound.hi == 0) continue;  // contributes nothing
        if (bound.lo == 1 && bound.hi == 1) {
            atoms.insert(atoms.end(), body.atoms.begin(), body.atoms.end());
            continue;
        }

        for (;;) {
            // Nested single repeat: ((v)^i)^j.
            if (body.atoms.size() == 1 && is_rep(body.atoms[0])) {
                const auto& inner = std::get<RepAtom>(body.atoms[0]);
                if (auto collapsed = collapse_bounds(inner.bound, bound)) {
                    Pattern inner_body = *inner.body;
                    bound = *collapsed;
                    body = std::move(inner_body);
                    continue;
                }
            }
            // Body that is itself a power of a shorter sequence.
            if (bound.is_exact() && body.atoms.size() >= 2) {
                std::size_t d = primitive_period(body.atoms);
                if (d < body.atoms.size()) {
                    int k = static_cast<int>(body.atoms.size() / d);
                    body.atoms.resize(d);
                    int count = bound.lo * k;
                    bound = count >= 2 ? Bound::exact(count) : Bound::range(count, count);
                    continue;
                }
            }
            break;
        }

        if (bound.lo == 1 && bound.hi == 1) {
            atoms.insert(atoms.end(), body.atoms.begin(), body.atoms.end());
        } else {
            atoms.push_back(RepAtom{std::make_shared<const Pattern>(std::move(body)), bound});
        }
    }

    // Local rewrites to a fixpoint: merge neighbouring repeats of the same
    // body, absorb literals into single-symbol repeats, and rotate repeats
    // left through their literal context so the preceding context is as
    // short as possible.
    bool changed = true;
    while (changed) {
        changed = false;

        for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
            if (is_rep(atoms[i]) && is_rep(atoms[i + 1]) &&
                rep_body(atoms[i]) == rep_body(atoms[i + 1])) {
                auto merged = RepAtom{std::get<RepAtom>(atoms[i]).body,
                                      sum_bounds(std::get<RepAtom>(atoms[i]).bound,
                                                 std::get<RepAtom>(atoms[i + 1]).bound)};
                atoms[i] = merged;
                atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
            const auto* lit = std::get_if<LitAtom>(&atoms[i]);
            if (lit && is_single_lit_rep(atoms[i + 1], lit->sym)) {
                auto merged = RepAtom{std::get<RepAtom>(atoms[i + 1]).body,
                                      shift_bound(std::get<RepAtom>(atoms[i + 1]).bound, 1)};
                atoms[i] = merged;
                atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
            const auto* lit_after = std::get_if<LitAtom>(&atoms[i + 1]);
            if (lit_after && is_single_lit_rep(atoms[i], lit_after->sym)) {
                auto merged = RepAtom{std::get<RepAtom>(atoms[i]).body,
                                      shift_bound(std::get<RepAtom>(atoms[i]).bound, 1)};
                atoms[i] = merged;
                atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // Rotation: u c (t c)^B w  ->  u (c t)^B c w.
        for (std::size_t i = 1; i < atoms.size(); ++i) {
            if (!is_rep(atoms[i])) continue;
            const Pattern& body = rep_body(atoms[i]);
            if (body.atoms.size() < 2 || !is_literal_only(body)) continue;
            const auto* prev = std::get_if<LitAtom>(&atoms[i - 1]);
            if (!prev) continue;
            const auto& last = std::get<LitAtom>(body.atoms.back());
            if (last.sym != prev->sym) continue;

            Pattern rotated;
            rotated.atoms.reserve(body.atoms.size());
            rotated.atoms.push_back(body.atoms.back());
            rotated.atoms.insert(rotated.atoms.end(), body.atoms.begin(), body.atoms.end() - 1);
            Bound b = std::get<RepAtom>(atoms[i]).bound;
            atoms[i - 1] = RepAtom{std::make_shared<const Pattern>(std::move(rotated)), b};
            atoms[i] = LitAtom{last.sym};
            changed = true;
            break;
        }
    }

    Pattern out;
    out.atoms = std::move(atoms);
    return out;
}

// ---------------------------------------------------------------------------
// Generalization

GeneralizationLevel level_from_name(const std::string& name) {
    if (name == "exact") return GeneralizationLevel::Exact;
    if (name == "ge2") return GeneralizationLevel::Ge2;
    if (name == "plus") return GeneralizationLevel::Plus;
    if (name == "star") return GeneralizationLevel::Star;
    if (name == "symbol-star") return GeneralizationLevel::SymbolStar;
    if (name == "sigma-star") return GeneralizationLevel::SigmaStar;
    throw ArgumentError("unknown generalization level '" + name + "'");
}

std::string level_name(GeneralizationLevel level) {
    switch (level) {
        case GeneralizationLevel::Exact: return "exact";
        case GeneralizationLevel::Ge2: return "ge2";
        case GeneralizationLevel::Plus: return "plus";
        case GeneralizationLevel::Star: return "star";
        case GeneralizationLevel::SymbolStar: return "symbol-star";
        case GeneralizationLevel::SigmaStar: return "sigma-star";
    }
    return "exact";
}

namespace {

Pattern relax_bounds(const Pattern& p, int floor_count) {
    Pattern out;
    out.universal = p.universal;
    for (const Atom& atom : p.atoms) {
        if (std::holds_alternative<LitAtom>(atom)) {
            out.atoms.push_back(atom);
            continue;
        }
        const auto& rep = std::get<RepAtom>(atom);
        Pattern body = relax_bounds(*rep.body, floor_count);
        out.atoms.push_back(RepAtom{std::make_shared<const Pattern>(std::move(body)),
                                    Bound::at_least(std::min(rep.bound.lo, floor_count))});
    }
    return out;
}

void collect_symbols(const Pattern& p, std::vector<Symbol>& order, std::vector<char>& seen) {
    for (const Atom& atom : p.atoms) {
        if (const auto* lit = std::get_if<LitAtom>(&atom)) {
            auto slot = static_cast<std::size_t>(lit->sym);
            if (slot >= seen.size()) seen.resize(slot + 1, 0);
            if (!seen[slot]) {
                seen[slot] = 1;
                order.push_back(lit->sym);
            }
        } else {
            collect_symbols(*std::get<RepAtom>(atom).body, order, seen);
        }
    }
}

}  // namespace

Pattern generalize(const Pattern& p, GeneralizationLevel level) {
    switch (level) {
        case GeneralizationLevel::Exact:
            return p;
        case GeneralizationLevel::Ge2:
            return relax_bounds(p, 2);
        case GeneralizationLevel::Plus:
            return relax_bounds(p, 1);
        case GeneralizationLevel::Star:
            return relax_bounds(p, 0);
        case GeneralizationLevel::SymbolStar: {
            if (p.universal) return p;
            std::vector<Symbol> order;
            std::vector<char> seen;
            collect_symbols(p, order, seen);
            if (order.empty()) return Pattern{};  // no symbols: still just the empty word
            Pattern blocks;
            for (Symbol s : order) {
                Pattern one;
                one.atoms.push_back(LitAtom{s});
                blocks.atoms.push_back(
                    RepAtom{std::make_shared<const Pattern>(std::move(one)), Bound::at_least(0)});
            }
            Pattern out;
            out.atoms.push_back(
                RepAtom{std::make_shared<const Pattern>(std::move(blocks)), Bound::at_least(0)});
            return out;
        }
        case GeneralizationLevel::SigmaStar:
            return Pattern::sigma_star();
    }
    return p;
}

}  // namespace simplang
