#pragma once

#include "simplang/compress.hpp"

namespace simplang {

/// Normalized compression distance:
///   max(C(xy) - C(x), C(yx) - C(y)) / max(C(x), C(y)).
/// Negative numerators (dictionary warm-up on tiny strings) clamp to 0, and
/// the degenerate all-empty case is defined as 0.
double ncd(const Word& x, const Word& y, const CodeLengthFn& coder);

/// Symmetric pairwise distances with a zero diagonal.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> values;  // row-major, n*n

    double at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
    }
    double& at(int i, int j) {
        return values[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
    }
};

/// Each unordered pair is evaluated once and mirrored; the diagonal is
/// forced to exactly 0 so linkage heights are not poisoned by the coder's
/// idempotency gap.
DistanceMatrix distance_matrix(const std::vector<Word>& corpus, const CodeLengthFn& coder);

/// Header row of string indices, then one row per string. Doubles printed
/// with enough digits to round-trip, so equal matrices serialize to equal
/// bytes.
std::string matrix_to_csv(const DistanceMatrix& m);
std::string matrix_to_json(const DistanceMatrix& m);

}  // namespace simplang
