#include "simplang/cluster.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>

#include "json.hpp"

namespace simplang {

Linkage linkage_from_name(const std::string& name) {
    if (name == "single") return Linkage::Single;
    if (name == "complete") return Linkage::Complete;
    if (name == "average") return Linkage::Average;
    throw ArgumentError("unknown linkage '" + name + "' (single|complete|average)");
}

std::string linkage_name(Linkage l) {
    switch (l) {
        case Linkage::Single: return "single";
        case Linkage::Complete: return "complete";
        case Linkage::Average: return "average";
    }
    return "average";
}

Dendrogram agglomerate(const DistanceMatrix& m, Linkage linkage) {
    const int n = m.n;
    if (n < 1) throw ArgumentError("agglomerate needs at least one point");

    Dendrogram out;
    out.n_leaves = n;
    if (n == 1) return out;

    // Slot-based working state; the naive O(n^3) scan is plenty for the
    // corpus sizes this pipeline targets.
    std::vector<double> d = m.values;            // slot-indexed working copy
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> node(static_cast<std::size_t>(n));  // slot -> dendrogram node id
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::iota(node.begin(), node.end(), 0);
    auto dist = [&](int i, int j) -> double& {
        return d[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
    };

    out.merges.reserve(static_cast<std::size_t>(n - 1));
    for (int step = 0; step < n - 1; ++step) {
        int best_i = -1, best_j = -1;
        double best = std::numeric_limits<double>::infinity();
        std::pair<int, int> best_key{0, 0};
        for (int i = 0; i < n; ++i) {
            if (!alive[static_cast<std::size_t>(i)]) continue;
            for (int j = i + 1; j < n; ++j) {
                if (!alive[static_cast<std::size_t>(j)]) continue;
                double v = dist(i, j);
                std::pair<int, int> key{std::min(node[static_cast<std::size_t>(i)], node[static_cast<std::size_t>(j)]),
                                        std::max(node[static_cast<std::size_t>(i)], node[static_cast<std::size_t>(j)])};
                if (v < best || (v == best && key < best_key)) {
                    best = v;
                    best_key = key;
                    best_i = i;
                    best_j = j;
                }
            }
        }

        out.merges.push_back({best_key.first, best_key.second, best});

        // Fold slot best_j into best_i and update inter-cluster distances.
        int si = size[static_cast<std::size_t>(best_i)];
        int sj = size[static_cast<std::size_t>(best_j)];
        for (int k = 0; k < n; ++k) {
            if (!alive[static_cast<std::size_t>(k)] || k == best_i || k == best_j) continue;
            double dik = dist(best_i, k);
            double djk = dist(best_j, k);
            double v = 0.0;
            switch (linkage) {
                case Linkage::Single: v = std::min(dik, djk); break;
                case Linkage::Complete: v = std::max(dik, djk); break;
                case Linkage::Average:
                    v = (dik * si + djk * sj) / static_cast<double>(si + sj);
                    break;
            }
            dist(best_i, k) = v;
            dist(k, best_i) = v;
        }
        alive[static_cast<std::size_t>(best_j)] = 0;
        size[static_cast<std::size_t>(best_i)] = si + sj;
        node[static_cast<std::size_t>(best_i)] = n + step;
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

Clustering components_after(const Dendrogram& d, std::size_t applied_merges) {
    // Applied merges always form a prefix, so every child node of an applied
    // merge already has a representative leaf.
    UnionFind uf(d.n_leaves);
    std::vector<int> rep(static_cast<std::size_t>(d.n_leaves) + d.merges.size());
    std::iota(rep.begin(), rep.begin() + d.n_leaves, 0);
    for (std::size_t k = 0; k < d.merges.size(); ++k) {
        const Merge& m = d.merges[k];
        rep[static_cast<std::size_t>(d.n_leaves) + k] = rep[static_cast<std::size_t>(m.left)];
        if (k < applied_merges) {
            uf.unite(rep[static_cast<std::size_t>(m.left)], rep[static_cast<std::size_t>(m.right)]);
        }
    }
    // Cluster ids in order of each component's smallest member.
    Clustering c;
    c.assignment.assign(static_cast<std::size_t>(d.n_leaves), -1);
    std::vector<int> root_id(static_cast<std::size_t>(d.n_leaves), -1);
    int next = 0;
    for (int i = 0; i < d.n_leaves; ++i) {
        int root = uf.find(i);
        if (root_id[static_cast<std::size_t>(root)] < 0) root_id[static_cast<std::size_t>(root)] = next++;
        c.assignment[static_cast<std::size_t>(i)] = root_id[static_cast<std::size_t>(root)];
    }
    c.num_clusters = next;
    return c;
}

}  // namespace

Clustering cut_threshold(const Dendrogram& d, double t) {
    if (t < 0.0) throw ArgumentError("threshold must be >= 0");
    // Heights are non-decreasing, so the applied merges form a prefix.
    std::size_t applied = 0;
    while (applied < d.merges.size() && d.merges[applied].height < t) ++applied;
    return components_after(d, applied);
}

Clustering cut_k(const Dendrogram& d, int k) {
    if (k < 1 || k > d.n_leaves) {
        throw ArgumentError("cluster count " + std::to_string(k) + " out of range 1.." +
                            std::to_string(d.n_leaves));
    }
    return components_after(d, static_cast<std::size_t>(d.n_leaves - k));
}

namespace {

std::string format_height(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void newick_node(const Dendrogram& d, int node, double parent_height, std::string& out) {
    double h = node < d.n_leaves ? 0.0 : d.merges[static_cast<std::size_t>(node - d.n_leaves)].height;
    if (node < d.n_leaves) {
        out += std::to_string(node);
    } else {
        const Merge& m = d.merges[static_cast<std::size_t>(node - d.n_leaves)];
        out.push_back('(');
        newick_node(d, m.left, h, out);
        out.push_back(',');
        newick_node(d, m.right, h, out);
        out.push_back(')');
    }
    out.push_back(':');
    out += format_height(parent_height - h);
}

}  // namespace

std::string to_newick(const Dendrogram& d) {
    std::string out;
    if (d.n_leaves == 1) {
        return "0;\n";
    }
    int root = d.n_leaves + static_cast<int>(d.merges.size()) - 1;
    double root_h = d.merges.back().height;
    const Merge& m = d.merges[static_cast<std::size_t>(root - d.n_leaves)];
    out.push_back('(');
    newick_node(d, m.left, root_h, out);
    out.push_back(',');
    newick_node(d, m.right, root_h, out);
    out += ");\n";
    return out;
}

std::string dendrogram_to_json(const Dendrogram& d) {
    nlohmann::json merges = nlohmann::json::array();
    for (const Merge& m : d.merges) {
        merges.push_back({{"left", m.left}, {"right", m.right}, {"height", m.height}});
    }
    nlohmann::json j;
    j["n_leaves"] = d.n_leaves;
    j["merges"] = std::move(merges);
    return j.dump(2) + "\n";
}

}  // namespace simplang
