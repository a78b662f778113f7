#include "simplang/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace simplang {

Dfa Dfa::empty_language(int alphabet_size) {
    Dfa d;
    d.alphabet_size = alphabet_size;
    d.start = 0;
    d.accepting = {0};
    d.delta.assign(static_cast<std::size_t>(alphabet_size), 0);
    return d;
}

Dfa Dfa::all_words(int alphabet_size) {
    Dfa d = empty_language(alphabet_size);
    d.accepting[0] = 1;
    return d;
}

bool run_dfa(const Dfa& d, const Word& x) {
    int q = d.start;
    for (Symbol s : x) {
        if (s < 0 || s >= d.alphabet_size) {
            throw ArgumentError("symbol " + std::to_string(s) + " outside automaton alphabet of size " +
                                std::to_string(d.alphabet_size));
        }
        q = d.next(q, s);
    }
    return d.accepting[static_cast<std::size_t>(q)] != 0;
}

namespace {

// Restrict to states reachable from the start; returns old->new ids (-1 =
// dropped). Keeps the automaton total.
Dfa drop_unreachable(const Dfa& d) {
    std::vector<int> id(static_cast<std::size_t>(d.num_states()), -1);
    std::deque<int> queue{d.start};
    id[static_cast<std::size_t>(d.start)] = 0;
    int count = 1;
    std::vector<int> order{d.start};
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int s = 0; s < d.alphabet_size; ++s) {
            int t = d.next(q, s);
            if (id[static_cast<std::size_t>(t)] < 0) {
                id[static_cast<std::size_t>(t)] = count++;
                order.push_back(t);
                queue.push_back(t);
            }
        }
    }
    Dfa out;
    out.alphabet_size = d.alphabet_size;
    out.start = 0;
    out.accepting.resize(static_cast<std::size_t>(count));
    out.delta.resize(static_cast<std::size_t>(count) * d.alphabet_size);
    for (int q = 0; q < count; ++q) {
        int old_q = order[static_cast<std::size_t>(q)];
        out.accepting[static_cast<std::size_t>(q)] = d.accepting[static_cast<std::size_t>(old_q)];
        for (int s = 0; s < d.alphabet_size; ++s) {
            out.delta[static_cast<std::size_t>(q) * d.alphabet_size + static_cast<std::size_t>(s)] =
                id[static_cast<std::size_t>(d.next(old_q, s))];
        }
    }
    return out;
}

}  // namespace

Dfa minimize(const Dfa& d) {
    Dfa r = drop_unreachable(d);
    int n = r.num_states();

    // Moore partition refinement: split classes by (class, successor classes)
    // signatures until stable.
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) cls[static_cast<std::size_t>(q)] = r.accepting[static_cast<std::size_t>(q)] ? 1 : 0;
    int num_classes = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig_to_class;
        std::vector<int> next_cls(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(r.alphabet_size) + 1);
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (int s = 0; s < r.alphabet_size; ++s) {
                sig.push_back(cls[static_cast<std::size_t>(r.next(q, s))]);
            }
            auto [it, _] = sig_to_class.try_emplace(std::move(sig), static_cast<int>(sig_to_class.size()));
            next_cls[static_cast<std::size_t>(q)] = it->second;
        }
        int next_count = static_cast<int>(sig_to_class.size());
        bool stable = (next_count == num_classes);
        cls = std::move(next_cls);
        num_classes = next_count;
        if (stable) break;
    }

    // Quotient automaton.
    Dfa q;
    q.alphabet_size = r.alphabet_size;
    q.accepting.assign(static_cast<std::size_t>(num_classes), 0);
    q.delta.assign(static_cast<std::size_t>(num_classes) * r.alphabet_size, 0);
    for (int state = 0; state < n; ++state) {
        int c = cls[static_cast<std::size_t>(state)];
        q.accepting[static_cast<std::size_t>(c)] = r.accepting[static_cast<std::size_t>(state)];
        for (int s = 0; s < r.alphabet_size; ++s) {
            q.delta[static_cast<std::size_t>(c) * r.alphabet_size + static_cast<std::size_t>(s)] =
                cls[static_cast<std::size_t>(r.next(state, s))];
        }
    }
    q.start = cls[static_cast<std::size_t>(r.start)];

    // BFS renumbering makes the result canonical up to isomorphism.
    return drop_unreachable(q);
}

namespace {

Dfa product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool)) {
    if (a.alphabet_size != b.alphabet_size) {
        throw ArgumentError("product of automata over different alphabets");
    }
    int bs = b.num_states();
    std::map<long long, int> id;  // a_state * bs + b_state -> new id
    std::vector<std::pair<int, int>> order;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int qa, int qb) {
        auto [it, inserted] = id.try_emplace(static_cast<long long>(qa) * bs + qb, static_cast<int>(order.size()));
        if (inserted) {
            order.emplace_back(qa, qb);
            queue.emplace_back(qa, qb);
        }
        return it->second;
    };
    intern(a.start, b.start);
    Dfa out;
    out.alphabet_size = a.alphabet_size;
    out.start = 0;
    while (!queue.empty()) {
        auto [qa, qb] = queue.front();
        queue.pop_front();
        for (int s = 0; s < a.alphabet_size; ++s) {
            intern(a.next(qa, s), b.next(qb, s));
        }
    }
    int n = static_cast<int>(order.size());
    out.accepting.resize(static_cast<std::size_t>(n));
    out.delta.resize(static_cast<std::size_t>(n) * a.alphabet_size);
    for (int q = 0; q < n; ++q) {
        auto [qa, qb] = order[static_cast<std::size_t>(q)];
        out.accepting[static_cast<std::size_t>(q)] =
            combine(a.accepting[static_cast<std::size_t>(qa)] != 0, b.accepting[static_cast<std::size_t>(qb)] != 0) ? 1 : 0;
        for (int s = 0; s < a.alphabet_size; ++s) {
            out.delta[static_cast<std::size_t>(q) * a.alphabet_size + static_cast<std::size_t>(s)] =
                id.at(static_cast<long long>(a.next(qa, s)) * bs + b.next(qb, s));
        }
    }
    return out;
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, +[](bool x, bool y) { return x && y; });
}

Dfa difference(const Dfa& a, const Dfa& b) {
    return product(a, b, +[](bool x, bool y) { return x && !y; });
}

bool is_empty(const Dfa& d) {
    return !shortest_accepted(d).has_value();
}

bool is_subset(const Dfa& a, const Dfa& b) {
    return is_empty(difference(a, b));
}

bool same_language(const Dfa& a, const Dfa& b) {
    return is_subset(a, b) && is_subset(b, a);
}

std::optional<Word> shortest_accepted(const Dfa& d) {
    int n = d.num_states();
    std::vector<std::pair<int, Symbol>> parent(static_cast<std::size_t>(n), {-1, -1});
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{d.start};
    seen[static_cast<std::size_t>(d.start)] = 1;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        if (d.accepting[static_cast<std::size_t>(q)]) {
            // Only the start state has no parent among visited states.
            Word w;
            for (int at = q; parent[static_cast<std::size_t>(at)].first >= 0;) {
                auto [p, s] = parent[static_cast<std::size_t>(at)];
                w.push_back(s);
                at = p;
            }
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int s = 0; s < d.alphabet_size; ++s) {
            int t = d.next(q, s);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                parent[static_cast<std::size_t>(t)] = {q, s};
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

std::string to_dot(const Dfa& d, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  __start [shape=point];\n  __start -> q" << d.start << ";\n";
    for (int q = 0; q < d.num_states(); ++q) {
        if (d.accepting[static_cast<std::size_t>(q)]) {
            out << "  q" << q << " [shape=doublecircle];\n";
        }
    }
    for (int q = 0; q < d.num_states(); ++q) {
        // Group parallel edges into one label.
        std::map<int, std::string> edges;
        for (int s = 0; s < d.alphabet_size; ++s) {
            std::string& lbl = edges[d.next(q, s)];
            if (!lbl.empty()) lbl.push_back(',');
            lbl.push_back(alphabet.at(s));
        }
        for (const auto& [t, lbl] : edges) {
            out << "  q" << q << " -> q" << t << " [label=\"" << lbl << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace simplang
