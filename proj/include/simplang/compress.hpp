#pragma once

#include <cstdint>
#include <functional>

#include "simplang/types.hpp"

namespace simplang {

/// Length of a compressed encoding, in bits.
using CodeLength = std::uint64_t;

/// Any deterministic code-word-length function with fn(empty) == 0 can be
/// plugged into the distance computations.
using CodeLengthFn = std::function<CodeLength(const Word&)>;

/// Incremental dictionary parser (LZW-flavoured), reporting code lengths
/// only; no encoded output is ever produced. The dictionary starts with all
/// single symbols of the declared alphabet. Each step takes the longest
/// dictionary prefix of the remaining input, charges the width of a code for
/// the dictionary size at emission time, then inserts the matched phrase
/// extended by the next input symbol. Pure integer arithmetic, so results
/// are identical across runs and platforms.
class DictionaryCoder {
public:
    explicit DictionaryCoder(int alphabet_size);

    /// C(x) in bits; 0 for the empty word.
    CodeLength operator()(const Word& x) const;

    int alphabet_size() const { return alphabet_size_; }

private:
    int alphabet_size_;
};

/// Worst observed deviations from the normal-compressor axioms over a
/// corpus, both raw (bits) and divided by log2 of the longest string
/// involved. These are diagnostics, not guarantees: a real coder only
/// approximates the axioms.
struct NormalityReport {
    double idempotency = 0.0;       // max |C(xx) - C(x)|
    double idempotency_log = 0.0;
    double symmetry = 0.0;          // max |C(xy) - C(yx)|
    double symmetry_log = 0.0;
    double subadditivity = 0.0;     // max max(0, C(xy) - C(x) - C(y))
    double subadditivity_log = 0.0;
    std::size_t pairs = 0;          // unordered pairs evaluated
};

/// Evaluates all unordered pairs, or a seeded sample of max_pairs when the
/// corpus is too large for the full quadratic sweep.
NormalityReport normality_report(const std::vector<Word>& corpus, const CodeLengthFn& coder,
                                 std::size_t max_pairs = 10000, std::uint64_t seed = 1);

}  // namespace simplang
