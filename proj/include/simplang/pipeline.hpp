#pragma once

#include <optional>

#include "json.hpp"
#include "simplang/cluster.hpp"
#include "simplang/corpus.hpp"
#include "simplang/pattern.hpp"

namespace simplang {

struct ClusterEntry {
    std::vector<int> members;  // corpus indices, ascending
    Pattern pattern;
    std::string pattern_text;
};

struct ClusterReport {
    std::string method;  // "ncd" | "tandem"
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<ClusterEntry> clusters;
    std::optional<double> purity;
    std::optional<std::string> dendrogram_path;
};

struct NcdOptions {
    Linkage linkage = Linkage::Average;
    std::optional<double> threshold;  // exactly one of threshold / k
    std::optional<int> k;
    int max_depth = 8;
};

/// Distance matrix -> dendrogram -> cut -> per-cluster inference. The
/// dendrogram is written to *out_dendrogram when given, for export.
ClusterReport run_ncd_method(const Corpus& corpus, const Alphabet& a, const CodeLengthFn& coder,
                             const NcdOptions& options, Dendrogram* out_dendrogram = nullptr);

/// Groups strings whose decompositions share a skeleton (multiplicities
/// ignored), then infers one pattern per group.
ClusterReport run_tandem_method(const Corpus& corpus, const Alphabet& a, int max_depth = 8);

/// Fraction of strings whose cluster majority label matches their own.
double purity(const std::vector<std::vector<int>>& clusters, const std::vector<std::string>& labels);
double purity(const ClusterReport& report, const std::vector<std::string>& labels);

std::string report_to_json(const ClusterReport& report);
ClusterReport report_from_json(const std::string& text);

}  // namespace simplang
