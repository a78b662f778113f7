#pragma once

#include "simplang/pattern.hpp"

namespace simplang {

/// A maximal repetition: x[start..end) has smallest period |root|, covers at
/// least two full copies of root, and cannot be extended by one symbol on
/// either side without breaking that period. end includes any partial
/// trailing copy, so end - start = |root| * exponent + tail with
/// 0 <= tail < |root|. root is always primitive.
struct Run {
    int start = 0;
    int end = 0;
    Word root;
    int exponent = 0;

    int period() const { return static_cast<int>(root.size()); }
    int covered() const { return period() * exponent; }

    friend bool operator==(const Run&, const Run&) = default;
};

/// All maximal repetitions with primitive roots, each reported once, sorted
/// by (start, period). Divide and conquer over z-arrays, O(n log n).
std::vector<Run> find_runs(const Word& x);

/// Reference implementation: cubic enumeration of every (start, period)
/// candidate. Kept deliberately independent of find_runs; ArgumentError for
/// inputs longer than 64 symbols.
std::vector<Run> brute_force_runs(const Word& x);

/// Rewrites x as a pattern with exact multiplicities whose language is {x}:
/// repeatedly picks the run covering the most symbols (ties: smaller start,
/// then shorter root), rewrites x = u root^exponent w, and recurses on root,
/// u and w until no repetition remains or max_depth levels were spent.
Pattern decompose(const Word& x, int max_depth = 8);

}  // namespace simplang
