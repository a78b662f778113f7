#pragma once

#include <optional>

#include "simplang/corpus.hpp"
#include "simplang/pattern.hpp"

namespace simplang {

struct LanguageSpec {
    std::string pattern_text;
    Pattern pattern;
    double weight = 1.0;
};

/// Sampling recipe for a synthetic labelled corpus. Languages must be
/// pairwise disjoint within the requested length window; weights are
/// proportions of the total count.
struct CorpusSpec {
    Alphabet alphabet;
    std::vector<LanguageSpec> languages;
    int min_len = 1;
    int max_len = 100;
    int count = 0;
    std::uint64_t seed = 0;
};

/// JSON object with keys alphabet, languages ([{pattern, weight}]),
/// min_len, max_len, count, seed.
CorpusSpec parse_corpus_spec(const std::string& json_text);
CorpusSpec read_corpus_spec_file(const std::string& path);

/// Deterministic for a given seed. Labels are language indices ("0", "1",
/// ...). Every emitted string is checked against its source pattern.
/// ArgumentError when a pattern cannot produce a string in the length
/// window, or when two languages overlap inside it.
Corpus generate_corpus(const CorpusSpec& spec, std::optional<std::uint64_t> seed_override = {});

}  // namespace simplang
