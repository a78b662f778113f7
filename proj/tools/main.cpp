// Command-line front end: corpus generation, distance matrices, the two
// clustering methods, decomposition, and cluster evaluation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "simplang/cluster.hpp"
#include "simplang/compress.hpp"
#include "simplang/corpus.hpp"
#include "simplang/generate.hpp"
#include "simplang/ncd.hpp"
#include "simplang/pattern.hpp"
#include "simplang/pipeline.hpp"
#include "simplang/tandem.hpp"

namespace {

constexpr int kExitArgument = 2;
constexpr int kExitInputFormat = 3;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw simplang::InputFormatError("cannot write to '" + path + "'");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw simplang::InputFormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonOptions {
    std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
    std::string compressor = "dict";
    bool relabel = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_compressor) {
    cmd->add_option("--alphabet", opts.alphabet, "Declared alphabet, in order")
        ->capture_default_str();
    if (with_compressor) {
        cmd->add_option("--compressor", opts.compressor, "Code length function")
            ->check(CLI::IsMember({"dict"}))
            ->capture_default_str();
    }
    cmd->add_flag("--relabel", opts.relabel,
                  "Rename symbols so first occurrences follow alphabet order");
}

simplang::Corpus load_corpus(const std::string& path, const simplang::Alphabet& alphabet,
                             bool relabel) {
    simplang::Corpus c = simplang::read_corpus_file(path, alphabet);
    if (c.strings.empty()) throw simplang::InputFormatError("corpus '" + path + "' is empty");
    if (relabel) {
        for (simplang::Word& w : c.strings) {
            w = simplang::canonical_relabel(w, alphabet.size()).word;
        }
    }
    return c;
}

int run(int argc, char** argv) {
    CLI::App app{"Learns pairwise-disjoint simple regular languages from positive examples"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Sample a labelled corpus from a spec file");
    std::string gen_spec, gen_out;
    std::int64_t gen_seed = -1;
    generate->add_option("--spec", gen_spec, "Corpus spec (JSON)")->required();
    generate->add_option("--out", gen_out, "Output corpus path")->required();
    generate->add_option("--seed", gen_seed, "Overrides the seed in the spec");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Write the pairwise distance matrix");
    CommonOptions matrix_opts;
    std::string matrix_in, matrix_out;
    matrix->add_option("--in", matrix_in, "Corpus path")->required();
    matrix->add_option("--out", matrix_out, "Output path (.json for JSON, CSV otherwise)")->required();
    add_common(matrix, matrix_opts, true);

    // cluster-ncd
    auto* ncd_cmd = app.add_subcommand("cluster-ncd", "Cluster by compression distance");
    CommonOptions ncd_opts;
    std::string ncd_in, ncd_report, ncd_dendrogram, ncd_linkage = "average";
    double ncd_threshold = -1;
    int ncd_k = -1;
    int ncd_depth = 8;
    ncd_cmd->add_option("--in", ncd_in, "Corpus path")->required();
    ncd_cmd->add_option("--linkage", ncd_linkage, "Linkage rule")
        ->check(CLI::IsMember({"single", "complete", "average"}))
        ->capture_default_str();
    auto* threshold_opt = ncd_cmd->add_option("--threshold", ncd_threshold, "Cut height");
    auto* k_opt = ncd_cmd->add_option("--k", ncd_k, "Number of clusters");
    threshold_opt->excludes(k_opt);
    ncd_cmd->add_option("--report", ncd_report, "Report path (JSON)")->required();
    ncd_cmd->add_option("--dendrogram", ncd_dendrogram, "Dendrogram path (Newick)");
    ncd_cmd->add_option("--max-depth", ncd_depth, "Decomposition recursion depth")
        ->capture_default_str();
    add_common(ncd_cmd, ncd_opts, true);

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "Write one pattern per corpus string");
    CommonOptions dec_opts;
    std::string dec_in, dec_out;
    int dec_depth = 8;
    decompose_cmd->add_option("--in", dec_in, "Corpus path")->required();
    decompose_cmd->add_option("--out", dec_out, "Output path")->required();
    decompose_cmd->add_option("--max-depth", dec_depth, "Decomposition recursion depth")
        ->capture_default_str();
    add_common(decompose_cmd, dec_opts, false);

    // cluster-tandem
    auto* tandem_cmd = app.add_subcommand("cluster-tandem", "Cluster by decomposition skeleton");
    CommonOptions tan_opts;
    std::string tan_in, tan_report;
    int tan_depth = 8;
    tandem_cmd->add_option("--in", tan_in, "Corpus path")->required();
    tandem_cmd->add_option("--report", tan_report, "Report path (JSON)")->required();
    tandem_cmd->add_option("--max-depth", tan_depth, "Decomposition recursion depth")
        ->capture_default_str();
    add_common(tandem_cmd, tan_opts, false);

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Print clustering purity against labels");
    std::string eval_report, eval_labels;
    evaluate->add_option("--report", eval_report, "Report path (JSON)")->required();
    evaluate->add_option("--labels", eval_labels, "Labelled corpus or one label per line")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitArgument;
    }

    if (*generate) {
        simplang::CorpusSpec spec = simplang::read_corpus_spec_file(gen_spec);
        std::optional<std::uint64_t> seed;
        if (generate->count("--seed")) seed = static_cast<std::uint64_t>(gen_seed);
        simplang::Corpus corpus = simplang::generate_corpus(spec, seed);
        std::ofstream out(gen_out);
        if (!out) throw simplang::InputFormatError("cannot write to '" + gen_out + "'");
        simplang::write_corpus(out, corpus, spec.alphabet);
        return 0;
    }

    if (*matrix) {
        simplang::Alphabet alphabet(matrix_opts.alphabet);
        simplang::Corpus corpus = load_corpus(matrix_in, alphabet, matrix_opts.relabel);
        simplang::DictionaryCoder coder(alphabet.size());
        simplang::DistanceMatrix m = simplang::distance_matrix(corpus.strings, coder);
        bool json = matrix_out.size() >= 5 && matrix_out.substr(matrix_out.size() - 5) == ".json";
        write_file(matrix_out, json ? simplang::matrix_to_json(m) : simplang::matrix_to_csv(m));
        return 0;
    }

    if (*ncd_cmd) {
        if (ncd_cmd->count("--threshold") + ncd_cmd->count("--k") != 1) {
            std::cerr << "cluster-ncd: exactly one of --threshold or --k is required\n";
            return kExitArgument;
        }
        simplang::Alphabet alphabet(ncd_opts.alphabet);
        simplang::Corpus corpus = load_corpus(ncd_in, alphabet, ncd_opts.relabel);
        simplang::DictionaryCoder coder(alphabet.size());
        simplang::NcdOptions options;
        options.linkage = simplang::linkage_from_name(ncd_linkage);
        if (ncd_cmd->count("--threshold")) options.threshold = ncd_threshold;
        if (ncd_cmd->count("--k")) options.k = ncd_k;
        options.max_depth = ncd_depth;
        simplang::Dendrogram dendro;
        simplang::ClusterReport report =
            simplang::run_ncd_method(corpus, alphabet, coder, options, &dendro);
        report.parameters["alphabet"] = alphabet.symbols();
        report.parameters["compressor"] = ncd_opts.compressor;
        report.parameters["relabel"] = ncd_opts.relabel;
        if (!ncd_dendrogram.empty()) {
            write_file(ncd_dendrogram, simplang::to_newick(dendro));
            report.dendrogram_path = ncd_dendrogram;
        }
        write_file(ncd_report, simplang::report_to_json(report));
        return 0;
    }

    if (*decompose_cmd) {
        simplang::Alphabet alphabet(dec_opts.alphabet);
        simplang::Corpus corpus = load_corpus(dec_in, alphabet, dec_opts.relabel);
        std::string out;
        for (const simplang::Word& w : corpus.strings) {
            out += simplang::print_pattern(
                simplang::canonicalize(simplang::decompose(w, dec_depth)), alphabet);
            out.push_back('\n');
        }
        write_file(dec_out, out);
        return 0;
    }

    if (*tandem_cmd) {
        simplang::Alphabet alphabet(tan_opts.alphabet);
        simplang::Corpus corpus = load_corpus(tan_in, alphabet, tan_opts.relabel);
        simplang::ClusterReport report = simplang::run_tandem_method(corpus, alphabet, tan_depth);
        report.parameters["alphabet"] = alphabet.symbols();
        report.parameters["relabel"] = tan_opts.relabel;
        write_file(tan_report, simplang::report_to_json(report));
        return 0;
    }

    if (*evaluate) {
        simplang::ClusterReport report = simplang::report_from_json(read_file(eval_report));
        // Labels: either `label<TAB>string` lines or bare labels.
        std::vector<std::string> labels;
        std::istringstream in(read_file(eval_labels));
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            std::size_t tab = line.find('\t');
            labels.push_back(tab == std::string::npos ? line : line.substr(0, tab));
        }
        double p = simplang::purity(report, labels);
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.10g", p);
        std::cout << "purity=" << buf << "\n";
        return 0;
    }

    return kExitArgument;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const simplang::InputFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputFormat;
    } catch (const simplang::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
