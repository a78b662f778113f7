#pragma once

#include <optional>
#include <string>

#include "simplang/types.hpp"

namespace simplang {

/// Deterministic finite automaton with a total transition function. "No
/// transition" is modelled by an explicit non-accepting sink state, which
/// keeps product constructions and complementation trivial.
struct Dfa {
    int alphabet_size = 0;
    int start = 0;
    std::vector<int> delta;        // state * alphabet_size + symbol -> state
    std::vector<char> accepting;   // one flag per state

    int num_states() const { return static_cast<int>(accepting.size()); }

    int next(int state, Symbol s) const {
        return delta[static_cast<std::size_t>(state) * alphabet_size + static_cast<std::size_t>(s)];
    }

    /// Pumping constant: every accepted word of at least this length can be
    /// written uvw with |uv| <= bound, |v| >= 1 and uv^iw accepted for all i.
    int pumping_bound() const { return num_states(); }

    /// Single non-accepting sink over the given alphabet (empty language).
    static Dfa empty_language(int alphabet_size);
    /// Single accepting state with self-loops (all words).
    static Dfa all_words(int alphabet_size);
};

/// Extended transition: true iff delta*(start, x) is accepting.
/// ArgumentError on a symbol outside the automaton's alphabet.
bool run_dfa(const Dfa& d, const Word& x);

/// Minimal automaton for the same language, states renumbered by
/// breadth-first search from the start in symbol order, so that two
/// minimized automata are equal iff they are isomorphic.
Dfa minimize(const Dfa& d);

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);  // L(a) minus L(b)

bool is_empty(const Dfa& d);
bool is_subset(const Dfa& a, const Dfa& b);  // L(a) subset of L(b)
bool same_language(const Dfa& a, const Dfa& b);

/// Shortest accepted word (by length, then lexicographic), if any.
std::optional<Word> shortest_accepted(const Dfa& d);

std::string to_dot(const Dfa& d, const Alphabet& alphabet);

}  // namespace simplang
