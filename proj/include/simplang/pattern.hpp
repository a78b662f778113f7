#pragma once

#include <memory>
#include <variant>

#include "simplang/dfa.hpp"

namespace simplang {

/// Multiplicity of a repeated unit. lo..hi occurrences, hi == kUnbounded
/// for no upper limit. Exact counts below 2 are not constructible: a unit
/// occurring once is just a literal sequence.
struct Bound {
    static constexpr int kUnbounded = -1;

    int lo = 0;
    int hi = kUnbounded;

    static Bound exact(int i);            // {i}, i >= 2
    static Bound at_least(int m);         // m, m+1, ...
    static Bound range(int lo, int hi);   // 0 <= lo <= hi

    bool unbounded() const { return hi == kUnbounded; }
    bool is_exact() const { return hi == lo; }
    bool contains(int count) const { return count >= lo && (unbounded() || count <= hi); }

    friend bool operator==(const Bound&, const Bound&) = default;
};

struct Pattern;

struct LitAtom {
    Symbol sym = 0;
    friend bool operator==(const LitAtom&, const LitAtom&) = default;
};

/// Repeated sub-pattern. The body is shared immutably, so copying patterns
/// is cheap and thread-safe.
struct RepAtom {
    std::shared_ptr<const Pattern> body;
    Bound bound;
};

using Atom = std::variant<LitAtom, RepAtom>;

/// A simple-language expression: a sequence of literals and bounded or
/// unbounded repeats of (possibly nested) sub-patterns. The empty sequence
/// denotes the empty word only; the universal flag denotes all words over
/// the alphabet.
struct Pattern {
    std::vector<Atom> atoms;
    bool universal = false;

    bool is_epsilon() const { return !universal && atoms.empty(); }

    static Pattern sigma_star() {
        Pattern p;
        p.universal = true;
        return p;
    }
};

bool operator==(const RepAtom& a, const RepAtom& b);
bool operator==(const Pattern& a, const Pattern& b);

Pattern lit_seq(const Word& w);
Atom rep_atom(Pattern body, Bound b);

/// Text syntax:
///   pattern := atom+ | "EPS" | "SIGMA*"
///   atom    := SYMBOL bound? | "(" pattern ")" bound
///   bound   := "{" INT "}" | "{>=" INT "}" | "+" | "*" | "{" INT ".." INT "}"
/// Examples: a(bc){4}d, (a{3}(bc){2}){3}, a+b+a{0..1}. print and parse
/// round-trip exactly.
std::string print_pattern(const Pattern& p, const Alphabet& a);
Pattern parse_pattern(std::string_view text, const Alphabet& a);

/// Minimal total automaton with L(dfa) = L(p): Thompson-style composition,
/// subset construction, minimization.
Dfa to_dfa(const Pattern& p, const Alphabet& a);

bool matches(const Pattern& p, const Word& x, const Alphabet& a);

/// Language equality, decided on automata.
bool equivalent(const Pattern& p, const Pattern& q, const Alphabet& a);

/// Canonical representative among trivially equal forms: exact powers are
/// flattened, adjacent repeats of one body are merged, and repeats absorb
/// rotations from their literal context so the preceding context is
/// shortest (abaabaab-style ambiguity: ab(aab)^i and a(baa)^i b both
/// normalize to (aba)^i ab). Always language-preserving.
Pattern canonicalize(const Pattern& p);

/// Relaxation ladder, coarse levels containing fine ones.
enum class GeneralizationLevel { Exact, Ge2, Plus, Star, SymbolStar, SigmaStar };

GeneralizationLevel level_from_name(const std::string& name);
std::string level_name(GeneralizationLevel level);

/// Exact: identity. Ge2 / Plus / Star: every multiplicity relaxes to
/// at-least-2 / 1 / 0 (never below an observed lower bound). SymbolStar:
/// all words over the pattern's own symbols, printed (a*b*...)*.
/// SigmaStar: the universal pattern.
Pattern generalize(const Pattern& p, GeneralizationLevel level);

/// Structure with multiplicities erased; equal keys mean two decompositions
/// differ only in repeat counts.
std::string skeleton_key(const Pattern& p, const Alphabet& a);

/// Tightest pattern in this family that every cluster member matches:
/// identical skeletons unify their multiplicities; same-symbol block
/// structures align with optional blocks; otherwise the generalization
/// ladder is climbed, with the universal pattern as last resort. Coverage
/// of every member is a postcondition.
Pattern infer_language(const std::vector<Word>& cluster, const Alphabet& a, int max_depth = 8);

}  // namespace simplang
