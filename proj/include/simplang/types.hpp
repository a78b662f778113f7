#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simplang {

/// A symbol is an index into a declared Alphabet.
using Symbol = int;

/// A word is a finite symbol sequence. Words are validated against an
/// Alphabet at the I/O boundary; algorithms assume in-range symbols.
using Word = std::vector<Symbol>;

/// Caller-side misuse: bad symbols, out-of-range parameters, impossible specs.
class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed external data: corpus files, spec files, reports.
class InputFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite ordered set of distinct single characters. Declared up front
/// (default: the 26 lowercase letters) so that symbol identity is stable
/// across every string of a corpus.
class Alphabet {
public:
    /// Lowercase a..z in order.
    Alphabet();

    /// Symbols in declared order; throws ArgumentError on duplicates or
    /// an empty set.
    explicit Alphabet(std::string_view symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    char at(Symbol s) const;
    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }

    /// Index of c in declared order; ArgumentError if absent.
    Symbol index_of(char c) const;

    /// Validates every character; ArgumentError on a foreign symbol.
    Word parse(std::string_view text) const;
    std::string format(const Word& w) const;

    const std::string& symbols() const { return symbols_; }

private:
    std::string symbols_;
    std::array<int, 256> index_;
};

struct RelabelResult {
    Word word;
    /// mapping[old] = new symbol, or -1 where old never occurs in the input.
    std::vector<Symbol> mapping;
};

/// Renames symbols so that first occurrences appear in declared alphabet
/// order: the i-th distinct symbol of x becomes symbol i. Throws
/// ArgumentError when x uses more distinct symbols than the target
/// alphabet can hold, or contains a negative symbol.
RelabelResult canonical_relabel(const Word& x, int target_alphabet_size);

}  // namespace simplang
