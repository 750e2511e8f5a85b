#include "kergrad/labeled_graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace kergrad {

LabeledGraph::LabeledGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

void LabeledGraph::add_edge(int to, int from, const Dyadic& label) {
    if (to < 0 || to >= n_ || from < 0 || from >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (label.is_zero()) throw std::invalid_argument("edge label must be nonzero");
    if (!edges_.emplace(std::make_pair(to, from), label).second)
        throw std::invalid_argument("edge already present");
}

Dyadic LabeledGraph::label(int to, int from) const {
    auto it = edges_.find({to, from});
    return it == edges_.end() ? Dyadic() : it->second;
}

ExactMatrix LabeledGraph::matrix(const FieldSpec& field) const {
    ExactMatrix m(field, n_, n_);
    for (const auto& [key, lab] : edges_) m.set(key.first, key.second, reduce_mod(lab, field));
    return m;
}

int64_t LabeledGraph::kernel_dim(const FieldSpec& field) const {
    return matrix(field).kernel_dim();
}

namespace {

// Isomorphism-invariant vertex colors: iterate signatures built from the
// multisets of labeled in- and out-edges until the partition stops refining.
std::vector<int> refined_colors(const LabeledGraph& g) {
    const int n = g.size();
    std::vector<int> color(n, 0);
    int classes = 1;
    while (true) {
        std::vector<std::string> sig(n);
        for (int v = 0; v < n; ++v) sig[v] = std::to_string(color[v]) + "#";
        std::vector<std::vector<std::string>> outs(n), ins(n);
        for (const auto& [key, lab] : g.edges()) {
            auto [to, from] = key;
            outs[from].push_back(lab.str() + "@" + std::to_string(color[to]));
            ins[to].push_back(lab.str() + "@" + std::to_string(color[from]));
        }
        for (int v = 0; v < n; ++v) {
            std::sort(outs[v].begin(), outs[v].end());
            std::sort(ins[v].begin(), ins[v].end());
            for (const auto& s : outs[v]) sig[v] += "o" + s + ";";
            for (const auto& s : ins[v]) sig[v] += "i" + s + ";";
        }
        std::vector<std::string> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        int next_classes = static_cast<int>(sorted.size());
        if (next_classes == classes) return next;
        color = std::move(next);
        classes = next_classes;
    }
}

}  // namespace

std::string canonical_encoding(const LabeledGraph& g) {
    const int n = g.size();
    std::vector<int> color = refined_colors(g);

    // Token stream for a vertex appended at position k of a partial order.
    auto block = [&](int v, const std::vector<int>& order) {
        std::vector<std::string> tokens;
        tokens.push_back("c" + std::to_string(color[v]));
        for (int u : order) {
            Dyadic out = g.label(u, v), in = g.label(v, u);
            tokens.push_back(out.is_zero() ? "-" : out.str());
            tokens.push_back(in.is_zero() ? "-" : in.str());
        }
        Dyadic self = g.label(v, v);
        tokens.push_back(self.is_zero() ? "-" : self.str());
        return tokens;
    };

    std::vector<std::string> best;
    bool have_best = false;
    std::vector<std::string> cur;
    std::vector<int> order;
    std::vector<bool> used(n, false);

    std::function<void()> rec = [&]() {
        if (have_best) {
            // Prune unless the current stream is <= the matching prefix of best.
            for (size_t i = 0; i < cur.size(); ++i) {
                if (cur[i] < best[i]) break;
                if (cur[i] > best[i]) return;
            }
        }
        if (static_cast<int>(order.size()) == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        int mincol = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (mincol < 0 || color[v] < mincol)) mincol = color[v];
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != mincol) continue;
            std::vector<std::string> tokens = block(v, order);
            size_t before = cur.size();
            cur.insert(cur.end(), tokens.begin(), tokens.end());
            used[v] = true;
            order.push_back(v);
            rec();
            order.pop_back();
            used[v] = false;
            cur.resize(before);
        }
    };
    rec();

    std::string out = std::to_string(n) + "|";
    for (const auto& t : best) out += t + ",";
    return out;
}

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    return a.size() == b.size() && canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace kergrad
