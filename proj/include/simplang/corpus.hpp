#pragma once

#include <iosfwd>
#include <string>

#include "simplang/types.hpp"

namespace simplang {

/// One string per line; blank lines are skipped. Lines may carry a label in
/// the form `label<TAB>string`; either all non-blank lines are labelled or
/// none are.
struct Corpus {
    std::vector<Word> strings;
    std::vector<std::string> labels;  // empty unless labeled
    bool labeled = false;

    std::size_t size() const { return strings.size(); }
};

Corpus read_corpus(std::istream& in, const Alphabet& a);
Corpus read_corpus_file(const std::string& path, const Alphabet& a);
void write_corpus(std::ostream& out, const Corpus& c, const Alphabet& a);
void write_corpus_file(const std::string& path, const Corpus& c, const Alphabet& a);

}  // namespace simplang
