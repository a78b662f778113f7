#include "simplang/generate.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

namespace simplang {

namespace {

constexpr long long kInfLen = std::numeric_limits<long long>::max() / 4;

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kInfLen || b >= kInfLen || a > kInfLen / b) return kInfLen;
    return a * b;
}

long long sat_add(long long a, long long b) {
    return std::min(a + b, kInfLen);
}

long long pat_min_len(const Pattern& p) {
    if (p.universal) return 0;
    long long total = 0;
    for (const Atom& atom : p.atoms) {
        if (std::holds_alternative<LitAtom>(atom)) {
            ++total;
        } else {
            const auto& rep = std::get<RepAtom>(atom);
            total = sat_add(total, sat_mul(rep.bound.lo, pat_min_len(*rep.body)));
        }
    }
    return total;
}

long long pat_max_len(const Pattern& p) {
    if (p.universal) return kInfLen;
    long long total = 0;
    for (const Atom& atom : p.atoms) {
        if (std::holds_alternative<LitAtom>(atom)) {
            total = sat_add(total, 1);
        } else {
            const auto& rep = std::get<RepAtom>(atom);
            long long body = pat_max_len(*rep.body);
            if (rep.bound.unbounded()) {
                total = body == 0 ? total : kInfLen;
            } else {
                total = sat_add(total, sat_mul(rep.bound.hi, body));
            }
        }
    }
    return total;
}

// Rejection-sampled uniform integer: identical sequences on every platform,
// unlike std::uniform_int_distribution.
int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    if (lo >= hi) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
}

// One sampling attempt: repeat counts drawn uniformly from the bound
// intersected with what the remaining length budget allows.
bool materialize(const Pattern& p, const Alphabet& alphabet, std::mt19937_64& rng, long long budget,
                 Word& out) {
    if (p.universal) {
        int len = uniform_int(rng, 0, static_cast<int>(std::min<long long>(budget, 64)));
        for (int i = 0; i < len; ++i) {
            out.push_back(uniform_int(rng, 0, alphabet.size() - 1));
        }
        return true;
    }
    std::vector<long long> rest_min(p.atoms.size() + 1, 0);
    for (std::size_t i = p.atoms.size(); i-- > 0;) {
        const Atom& atom = p.atoms[i];
        long long own = std::holds_alternative<LitAtom>(atom)
                            ? 1
                            : sat_mul(std::get<RepAtom>(atom).bound.lo,
                                      pat_min_len(*std::get<RepAtom>(atom).body));
        rest_min[i] = sat_add(own, rest_min[i + 1]);
    }

    std::vector<int> reps_from(p.atoms.size() + 1, 0);
    for (std::size_t i = p.atoms.size(); i-- > 0;) {
        reps_from[i] = reps_from[i + 1] + (std::holds_alternative<RepAtom>(p.atoms[i]) ? 1 : 0);
    }

    for (std::size_t i = 0; i < p.atoms.size(); ++i) {
        if (const auto* lit = std::get_if<LitAtom>(&p.atoms[i])) {
            if (budget < 1) return false;
            out.push_back(lit->sym);
            --budget;
            continue;
        }
        const auto& rep = std::get<RepAtom>(p.atoms[i]);
        long long body_min = pat_min_len(*rep.body);
        // Spare length beyond everyone's minimum, split evenly across the
        // remaining repeats so no single repeat starves the others.
        long long spare = budget - rest_min[i + 1] - sat_mul(rep.bound.lo, body_min);
        long long share = spare / std::max(reps_from[i], 1);
        long long e_cap;
        if (body_min >= 1) {
            e_cap = rep.bound.lo + share / body_min;
        } else {
            e_cap = rep.bound.lo + 8;  // bodies that can be empty
        }
        if (!rep.bound.unbounded()) e_cap = std::min<long long>(e_cap, rep.bound.hi);
        if (e_cap < rep.bound.lo || spare < 0) return false;
        int e = uniform_int(rng, rep.bound.lo, static_cast<int>(std::min<long long>(e_cap, 1 << 20)));
        for (int k = 0; k < e; ++k) {
            long long copy_budget = budget - rest_min[i + 1] - static_cast<long long>(e - 1 - k) * body_min;
            std::size_t before = out.size();
            if (!materialize(*rep.body, alphabet, rng, copy_budget, out)) return false;
            budget -= static_cast<long long>(out.size() - before);
        }
    }
    return budget >= 0;
}

Dfa length_window_dfa(int min_len, int max_len, int alphabet_size) {
    // States count the prefix length, saturating one past max_len.
    int n = max_len + 2;
    Dfa d;
    d.alphabet_size = alphabet_size;
    d.start = 0;
    d.accepting.assign(static_cast<std::size_t>(n), 0);
    d.delta.resize(static_cast<std::size_t>(n) * alphabet_size);
    for (int q = 0; q < n; ++q) {
        int next = std::min(q + 1, max_len + 1);
        for (int s = 0; s < alphabet_size; ++s) {
            d.delta[static_cast<std::size_t>(q) * alphabet_size + static_cast<std::size_t>(s)] = next;
        }
        d.accepting[static_cast<std::size_t>(q)] = (q >= min_len && q <= max_len) ? 1 : 0;
    }
    return d;
}

}  // namespace

CorpusSpec parse_corpus_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputFormatError(std::string("corpus spec is not valid JSON: ") + e.what());
    }
    try {
        CorpusSpec spec;
        spec.alphabet = Alphabet(j.at("alphabet").get<std::string>());
        spec.min_len = j.at("min_len").get<int>();
        spec.max_len = j.at("max_len").get<int>();
        spec.count = j.at("count").get<int>();
        spec.seed = j.value("seed", std::uint64_t{0});
        for (const auto& lang : j.at("languages")) {
            LanguageSpec ls;
            ls.pattern_text = lang.at("pattern").get<std::string>();
            ls.pattern = parse_pattern(ls.pattern_text, spec.alphabet);
            ls.weight = lang.value("weight", 1.0);
            if (ls.weight <= 0) throw InputFormatError("language weights must be positive");
            spec.languages.push_back(std::move(ls));
        }
        if (spec.languages.empty()) throw InputFormatError("corpus spec needs at least one language");
        if (spec.min_len > spec.max_len || spec.min_len < 0) {
            throw InputFormatError("corpus spec length range is invalid");
        }
        if (spec.count < 1) throw InputFormatError("corpus spec count must be >= 1");
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InputFormatError(std::string("corpus spec is missing fields: ") + e.what());
    }
}

CorpusSpec read_corpus_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputFormatError("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus_spec(buf.str());
}

Corpus generate_corpus(const CorpusSpec& spec, std::optional<std::uint64_t> seed_override) {
    const Alphabet& alphabet = spec.alphabet;

    // Every language must fit the window, and the premise of the whole
    // pipeline is that the languages are pairwise disjoint; check both up
    // front rather than emitting corpora that silently break it.
    std::vector<Dfa> dfas;
    for (const LanguageSpec& lang : spec.languages) {
        if (pat_min_len(lang.pattern) > spec.max_len || pat_max_len(lang.pattern) < spec.min_len) {
            throw ArgumentError("pattern '" + lang.pattern_text + "' cannot produce strings of length " +
                                std::to_string(spec.min_len) + ".." + std::to_string(spec.max_len));
        }
        dfas.push_back(to_dfa(lang.pattern, alphabet));
    }
    Dfa window = length_window_dfa(spec.min_len, spec.max_len, alphabet.size());
    for (std::size_t i = 0; i < dfas.size(); ++i) {
        for (std::size_t j = i + 1; j < dfas.size(); ++j) {
            auto witness = shortest_accepted(intersect(intersect(dfas[i], dfas[j]), window));
            if (witness) {
                throw ArgumentError("languages '" + spec.languages[i].pattern_text + "' and '" +
                                    spec.languages[j].pattern_text + "' overlap within the length window: \"" +
                                    alphabet.format(*witness) + "\"");
            }
        }
    }

    // Weights become exact quotas (largest remainder) so equal weights give
    // equal per-language counts.
    double total_weight = 0;
    for (const LanguageSpec& lang : spec.languages) total_weight += lang.weight;
    std::vector<int> quota(spec.languages.size(), 0);
    std::vector<std::pair<double, std::size_t>> remainders;
    int assigned = 0;
    for (std::size_t i = 0; i < spec.languages.size(); ++i) {
        double share = spec.languages[i].weight / total_weight * spec.count;
        quota[i] = static_cast<int>(share);
        assigned += quota[i];
        remainders.emplace_back(-(share - quota[i]), i);
    }
    std::sort(remainders.begin(), remainders.end());
    for (int r = 0; r < spec.count - assigned; ++r) {
        ++quota[remainders[static_cast<std::size_t>(r) % remainders.size()].second];
    }

    std::mt19937_64 rng(seed_override.value_or(spec.seed));
    std::vector<int> order;
    for (std::size_t i = 0; i < quota.size(); ++i) {
        order.insert(order.end(), static_cast<std::size_t>(quota[i]), static_cast<int>(i));
    }
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))]);
    }

    Corpus corpus;
    corpus.labeled = true;
    for (int lang_index : order) {
        const LanguageSpec& lang = spec.languages[static_cast<std::size_t>(lang_index)];
        Word w;
        bool ok = false;
        for (int attempt = 0; attempt < 500 && !ok; ++attempt) {
            w.clear();
            if (!materialize(lang.pattern, alphabet, rng, spec.max_len, w)) continue;
            ok = static_cast<int>(w.size()) >= spec.min_len && static_cast<int>(w.size()) <= spec.max_len;
        }
        if (!ok) {
            throw ArgumentError("could not sample a string of length " + std::to_string(spec.min_len) +
                                ".." + std::to_string(spec.max_len) + " from pattern '" +
                                lang.pattern_text + "'");
        }
        if (!run_dfa(dfas[static_cast<std::size_t>(lang_index)], w)) {
            throw ArgumentError("internal sampling error: string does not match its pattern '" +
                                lang.pattern_text + "'");
        }
        corpus.strings.push_back(std::move(w));
        corpus.labels.push_back(std::to_string(lang_index));
    }
    return corpus;
}

}  // namespace simplang
