#include "simplang/corpus.hpp"

#include <fstream>
#include <sstream>

namespace simplang {

Corpus read_corpus(std::istream& in, const Alphabet& a) {
    Corpus c;
    std::string line;
    std::size_t line_no = 0;
    int labeled = -1;  // undecided
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        bool has_label = tab != std::string::npos;
        if (labeled == -1) {
            labeled = has_label ? 1 : 0;
        } else if (static_cast<bool>(labeled) != has_label) {
            throw InputFormatError("line " + std::to_string(line_no) +
                                   ": mixed labeled and unlabeled corpus lines");
        }
        std::string text = has_label ? line.substr(tab + 1) : line;
        try {
            c.strings.push_back(a.parse(text));
        } catch (const ArgumentError& e) {
            throw InputFormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (has_label) c.labels.push_back(line.substr(0, tab));
    }
    c.labeled = labeled == 1;
    return c;
}

Corpus read_corpus_file(const std::string& path, const Alphabet& a) {
    std::ifstream in(path);
    if (!in) throw InputFormatError("cannot open corpus file '" + path + "'");
    return read_corpus(in, a);
}

void write_corpus(std::ostream& out, const Corpus& c, const Alphabet& a) {
    for (std::size_t i = 0; i < c.strings.size(); ++i) {
        if (c.labeled) out << c.labels[i] << '\t';
        out << a.format(c.strings[i]) << '\n';
    }
}

void write_corpus_file(const std::string& path, const Corpus& c, const Alphabet& a) {
    std::ofstream out(path);
    if (!out) throw InputFormatError("cannot write corpus file '" + path + "'");
    write_corpus(out, c, a);
}

}  // namespace simplang
