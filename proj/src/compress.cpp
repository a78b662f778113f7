#include "simplang/compress.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <unordered_map>

namespace simplang {

DictionaryCoder::DictionaryCoder(int alphabet_size) : alphabet_size_(alphabet_size) {
    if (alphabet_size <= 0) {
        throw ArgumentError("dictionary coder needs a non-empty alphabet");
    }
}

CodeLength DictionaryCoder::operator()(const Word& x) const {
    if (x.empty()) return 0;

    // Phrase trie. Node 0 is the root; the root's children are the alphabet
    // symbols, present implicitly from the start.
    std::vector<std::unordered_map<Symbol, int>> children(1);
    children[0].reserve(static_cast<std::size_t>(alphabet_size_));
    for (Symbol s = 0; s < alphabet_size_; ++s) {
        children[0].emplace(s, static_cast<int>(children.size()));
        children.emplace_back();
    }

    std::uint64_t dict_size = static_cast<std::uint64_t>(alphabet_size_);
    CodeLength bits = 0;
    std::size_t i = 0;
    const std::size_t n = x.size();
    while (i < n) {
        if (x[i] < 0 || x[i] >= alphabet_size_) {
            throw ArgumentError("symbol outside coder alphabet");
        }
        // Longest dictionary prefix of the remaining input. At least the
        // single symbol always matches.
        int node = 0;
        std::size_t j = i;
        while (j < n) {
            auto it = children[static_cast<std::size_t>(node)].find(x[j]);
            if (it == children[static_cast<std::size_t>(node)].end()) break;
            node = it->second;
            ++j;
        }
        // Code width for the dictionary size at emission time, pre-insertion.
        int width = std::max(1, static_cast<int>(std::bit_width(dict_size)) - 1);
        bits += static_cast<CodeLength>(width);
        // Insert matched phrase + next symbol, if any input remains.
        if (j < n) {
            children[static_cast<std::size_t>(node)].emplace(x[j], static_cast<int>(children.size()));
            children.emplace_back();
            ++dict_size;
        }
        i = j;
    }
    return bits;
}

namespace {

Word concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

double log_norm(double deviation, std::size_t longest) {
    double denom = std::log2(static_cast<double>(std::max<std::size_t>(longest, 2)));
    return deviation / denom;
}

}  // namespace

NormalityReport normality_report(const std::vector<Word>& corpus, const CodeLengthFn& coder,
                                 std::size_t max_pairs, std::uint64_t seed) {
    if (corpus.empty()) {
        throw ArgumentError("normality report needs a non-empty corpus");
    }
    NormalityReport rep;

    std::vector<CodeLength> single(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) single[i] = coder(corpus[i]);

    // Idempotency is per string.
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        double dev = std::abs(static_cast<double>(coder(concat(corpus[i], corpus[i]))) -
                              static_cast<double>(single[i]));
        rep.idempotency = std::max(rep.idempotency, dev);
        rep.idempotency_log = std::max(rep.idempotency_log, log_norm(dev, 2 * corpus[i].size()));
    }

    // Symmetry and subadditivity over unordered pairs, sampled when large.
    const std::size_t n = corpus.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t total = n * (n - 1) / 2;
    if (total <= max_pairs) {
        pairs.reserve(total);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    } else {
        std::mt19937_64 rng(seed);
        pairs.reserve(max_pairs);
        for (std::size_t k = 0; k < max_pairs; ++k) {
            std::size_t i = static_cast<std::size_t>(rng() % n);
            std::size_t j = static_cast<std::size_t>(rng() % n);
            if (i == j) j = (j + 1) % n;
            pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    for (auto [i, j] : pairs) {
        CodeLength cxy = coder(concat(corpus[i], corpus[j]));
        CodeLength cyx = coder(concat(corpus[j], corpus[i]));
        std::size_t len = corpus[i].size() + corpus[j].size();
        double sym = std::abs(static_cast<double>(cxy) - static_cast<double>(cyx));
        double sub = std::max(0.0, static_cast<double>(cxy) - static_cast<double>(single[i]) -
                                       static_cast<double>(single[j]));
        rep.symmetry = std::max(rep.symmetry, sym);
        rep.symmetry_log = std::max(rep.symmetry_log, log_norm(sym, len));
        rep.subadditivity = std::max(rep.subadditivity, sub);
        rep.subadditivity_log = std::max(rep.subadditivity_log, log_norm(sub, len));
    }
    rep.pairs = pairs.size();
    return rep;
}

}  // namespace simplang
