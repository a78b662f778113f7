#include "simplang/types.hpp"

#include <algorithm>

namespace simplang {

Alphabet::Alphabet() : Alphabet("abcdefghijklmnopqrstuvwxyz") {}

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.empty()) {
        throw ArgumentError("alphabet must not be empty");
    }
    index_.fill(-1);
    for (char c : symbols) {
        auto slot = static_cast<unsigned char>(c);
        if (index_[slot] >= 0) {
            throw ArgumentError(std::string("duplicate alphabet symbol '") + c + "'");
        }
        index_[slot] = static_cast<int>(symbols_.size());
        symbols_.push_back(c);
    }
}

char Alphabet::at(Symbol s) const {
    if (s < 0 || s >= size()) {
        throw ArgumentError("symbol index " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(size()));
    }
    return symbols_[static_cast<std::size_t>(s)];
}

Symbol Alphabet::index_of(char c) const {
    int idx = index_[static_cast<unsigned char>(c)];
    if (idx < 0) {
        throw ArgumentError(std::string("symbol '") + c + "' is not in the alphabet");
    }
    return idx;
}

Word Alphabet::parse(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        w.push_back(index_of(c));
    }
    return w;
}

std::string Alphabet::format(const Word& w) const {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) {
        out.push_back(at(s));
    }
    return out;
}

RelabelResult canonical_relabel(const Word& x, int target_alphabet_size) {
    if (target_alphabet_size <= 0) {
        throw ArgumentError("relabel target alphabet must be non-empty");
    }
    Symbol max_sym = -1;
    for (Symbol s : x) {
        if (s < 0) {
            throw ArgumentError("negative symbol in word");
        }
        max_sym = std::max(max_sym, s);
    }
    RelabelResult r;
    r.mapping.assign(static_cast<std::size_t>(max_sym + 1), -1);
    r.word.reserve(x.size());
    Symbol next = 0;
    for (Symbol s : x) {
        if (r.mapping[static_cast<std::size_t>(s)] < 0) {
            if (next >= target_alphabet_size) {
                throw ArgumentError("word uses more distinct symbols than the target alphabet holds");
            }
            r.mapping[static_cast<std::size_t>(s)] = next++;
        }
        r.word.push_back(r.mapping[static_cast<std::size_t>(s)]);
    }
    return r;
}

}  // namespace simplang
