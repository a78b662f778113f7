#include "simplang/pipeline.hpp"

#include <algorithm>
#include <map>

#include "simplang/tandem.hpp"

namespace simplang {

namespace {

std::vector<ClusterEntry> clusters_from_assignment(const Clustering& clustering) {
    std::vector<ClusterEntry> entries(static_cast<std::size_t>(clustering.num_clusters));
    for (std::size_t i = 0; i < clustering.assignment.size(); ++i) {
        entries[static_cast<std::size_t>(clustering.assignment[i])].members.push_back(static_cast<int>(i));
    }
    return entries;
}

void infer_cluster_patterns(std::vector<ClusterEntry>& entries, const Corpus& corpus,
                            const Alphabet& a, int max_depth) {
    for (ClusterEntry& entry : entries) {
        std::vector<Word> members;
        members.reserve(entry.members.size());
        for (int idx : entry.members) members.push_back(corpus.strings[static_cast<std::size_t>(idx)]);
        entry.pattern = infer_language(members, a, max_depth);
        entry.pattern_text = print_pattern(entry.pattern, a);
    }
}

}  // namespace

ClusterReport run_ncd_method(const Corpus& corpus, const Alphabet& a, const CodeLengthFn& coder,
                             const NcdOptions& options, Dendrogram* out_dendrogram) {
    if (corpus.strings.empty()) throw ArgumentError("empty corpus");
    if (options.threshold.has_value() == options.k.has_value()) {
        throw ArgumentError("exactly one of threshold or k must be given");
    }

    DistanceMatrix m = distance_matrix(corpus.strings, coder);
    Dendrogram dendro = agglomerate(m, options.linkage);
    Clustering clustering =
        options.threshold ? cut_threshold(dendro, *options.threshold) : cut_k(dendro, *options.k);
    if (out_dendrogram) *out_dendrogram = dendro;

    ClusterReport report;
    report.method = "ncd";
    report.parameters["linkage"] = linkage_name(options.linkage);
    if (options.threshold) report.parameters["threshold"] = *options.threshold;
    if (options.k) report.parameters["k"] = *options.k;
    report.parameters["max_depth"] = options.max_depth;
    report.clusters = clusters_from_assignment(clustering);
    infer_cluster_patterns(report.clusters, corpus, a, options.max_depth);
    if (corpus.labeled) report.purity = purity(report, corpus.labels);
    return report;
}

ClusterReport run_tandem_method(const Corpus& corpus, const Alphabet& a, int max_depth) {
    if (corpus.strings.empty()) throw ArgumentError("empty corpus");

    // Group by decomposition skeleton; group ids in first-appearance order.
    std::map<std::string, int> key_to_group;
    std::vector<ClusterEntry> entries;
    for (std::size_t i = 0; i < corpus.strings.size(); ++i) {
        Pattern p = canonicalize(decompose(corpus.strings[i], max_depth));
        std::string key = skeleton_key(p, a);
        auto [it, inserted] = key_to_group.try_emplace(key, static_cast<int>(entries.size()));
        if (inserted) entries.emplace_back();
        entries[static_cast<std::size_t>(it->second)].members.push_back(static_cast<int>(i));
    }

    ClusterReport report;
    report.method = "tandem";
    report.parameters["max_depth"] = max_depth;
    report.clusters = std::move(entries);
    infer_cluster_patterns(report.clusters, corpus, a, max_depth);
    if (corpus.labeled) report.purity = purity(report, corpus.labels);
    return report;
}

double purity(const std::vector<std::vector<int>>& clusters, const std::vector<std::string>& labels) {
    std::size_t total = 0;
    std::size_t majority_sum = 0;
    for (const auto& members : clusters) {
        std::map<std::string, std::size_t> counts;
        for (int idx : members) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= labels.size()) {
                throw ArgumentError("cluster member index " + std::to_string(idx) +
                                    " outside the labelled corpus");
            }
            ++counts[labels[static_cast<std::size_t>(idx)]];
        }
        std::size_t best = 0;
        for (const auto& [label, count] : counts) best = std::max(best, count);
        majority_sum += best;
        total += members.size();
    }
    if (total != labels.size()) {
        throw ArgumentError("clusters cover " + std::to_string(total) + " items but " +
                            std::to_string(labels.size()) + " labels were given");
    }
    return static_cast<double>(majority_sum) / static_cast<double>(total);
}

double purity(const ClusterReport& report, const std::vector<std::string>& labels) {
    std::vector<std::vector<int>> clusters;
    clusters.reserve(report.clusters.size());
    for (const ClusterEntry& e : report.clusters) clusters.push_back(e.members);
    return purity(clusters, labels);
}

std::string report_to_json(const ClusterReport& report) {
    nlohmann::json j;
    j["method"] = report.method;
    j["parameters"] = report.parameters;
    nlohmann::json clusters = nlohmann::json::array();
    for (std::size_t i = 0; i < report.clusters.size(); ++i) {
        const ClusterEntry& e = report.clusters[i];
        clusters.push_back({{"id", i}, {"members", e.members}, {"pattern", e.pattern_text}});
    }
    j["clusters"] = std::move(clusters);
    if (report.purity) j["purity"] = *report.purity;
    if (report.dendrogram_path) j["dendrogram"] = *report.dendrogram_path;
    return j.dump(2) + "\n";
}

ClusterReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputFormatError(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        ClusterReport report;
        report.method = j.value("method", "");
        if (j.contains("parameters")) report.parameters = j["parameters"];
        for (const auto& c : j.at("clusters")) {
            ClusterEntry e;
            e.members = c.at("members").get<std::vector<int>>();
            e.pattern_text = c.value("pattern", "");
            report.clusters.push_back(std::move(e));
        }
        if (j.contains("purity")) report.purity = j["purity"].get<double>();
        if (j.contains("dendrogram")) report.dendrogram_path = j["dendrogram"].get<std::string>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw InputFormatError(std::string("report is missing fields: ") + e.what());
    }
}

}  // namespace simplang
