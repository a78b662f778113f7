#include "simplang/ncd.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace simplang {

namespace {

Word concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

double ncd_cached(const Word& x, const Word& y, CodeLength cx, CodeLength cy,
                  const CodeLengthFn& coder) {
    CodeLength cmax = std::max(cx, cy);
    if (cmax == 0) return 0.0;  // both empty
    CodeLength cxy = coder(concat(x, y));
    CodeLength cyx = coder(concat(y, x));
    double num_xy = static_cast<double>(cxy) - static_cast<double>(cx);
    double num_yx = static_cast<double>(cyx) - static_cast<double>(cy);
    double num = std::max({num_xy, num_yx, 0.0});
    return num / static_cast<double>(cmax);
}

}  // namespace

double ncd(const Word& x, const Word& y, const CodeLengthFn& coder) {
    return ncd_cached(x, y, coder(x), coder(y), coder);
}

DistanceMatrix distance_matrix(const std::vector<Word>& corpus, const CodeLengthFn& coder) {
    if (corpus.empty()) {
        throw ArgumentError("distance matrix needs a non-empty corpus");
    }
    const int n = static_cast<int>(corpus.size());
    std::vector<CodeLength> single(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) single[i] = coder(corpus[i]);

    DistanceMatrix m;
    m.n = n;
    m.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    // Pairs are independent; evaluation order cannot affect the result.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = ncd_cached(corpus[static_cast<std::size_t>(i)], corpus[static_cast<std::size_t>(j)],
                                  single[static_cast<std::size_t>(i)], single[static_cast<std::size_t>(j)], coder);
            m.at(i, j) = d;
            m.at(j, i) = d;
        }
    }
    return m;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string matrix_to_csv(const DistanceMatrix& m) {
    std::string out;
    for (int j = 0; j < m.n; ++j) {
        if (j) out.push_back(',');
        out += std::to_string(j);
    }
    out.push_back('\n');
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            if (j) out.push_back(',');
            out += format_double(m.at(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

std::string matrix_to_json(const DistanceMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["n"] = m.n;
    j["distances"] = std::move(rows);
    return j.dump(2) + "\n";
}

}  // namespace simplang
