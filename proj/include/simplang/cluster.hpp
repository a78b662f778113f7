#pragma once

#include <string>

#include "simplang/ncd.hpp"

namespace simplang {

enum class Linkage { Single, Complete, Average };

Linkage linkage_from_name(const std::string& name);  // "single" | "complete" | "average"
std::string linkage_name(Linkage l);

/// One agglomerative merge. Nodes 0..n-1 are leaves; the merge recorded at
/// position k creates node n+k. left < right always.
struct Merge {
    int left = 0;
    int right = 0;
    double height = 0.0;
};

/// Binary merge tree over corpus indices. Heights are non-decreasing along
/// the merge sequence for all three linkages offered.
struct Dendrogram {
    int n_leaves = 0;
    std::vector<Merge> merges;  // n_leaves - 1 entries
};

/// Flat clustering: assignment[i] is the cluster of leaf i; ids are
/// 0..num_clusters-1, ordered by each cluster's smallest member.
struct Clustering {
    std::vector<int> assignment;
    int num_clusters = 0;
};

/// Repeatedly merges the pair of clusters with the lowest linkage value and
/// records that value as the new node's height. Inter-cluster distances are
/// updated as min / max / size-weighted mean of member pair distances for
/// single / complete / average linkage. Ties merge the pair with the
/// lexicographically smallest (min node id, max node id), which makes the
/// procedure fully deterministic.
Dendrogram agglomerate(const DistanceMatrix& m, Linkage linkage);

/// Clusters are the maximal subtrees all of whose merges lie strictly below
/// t; leaves whose every containing merge is at height >= t end up alone.
Clustering cut_threshold(const Dendrogram& d, double t);

/// Undoes the last k-1 merges. ArgumentError unless 1 <= k <= n.
Clustering cut_k(const Dendrogram& d, int k);

/// Branch lengths are height deltas between parent and child; leaves are
/// labelled with their corpus index.
std::string to_newick(const Dendrogram& d);

/// Merge list as [{"left": l, "right": r, "height": h}, ...].
std::string dendrogram_to_json(const Dendrogram& d);

}  // namespace simplang
