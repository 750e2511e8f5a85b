#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "kergrad/dyadic.hpp"
#include "kergrad/matrix.hpp"

namespace kergrad {

// Finite directed graph with dyadic edge labels, at most one edge per ordered
// pair.  Its matrix acts on functions of the vertices: entry (to, from) is
// the label of the edge from -> to.
class LabeledGraph {
public:
    explicit LabeledGraph(int n);

    int size() const { return n_; }
    void add_edge(int to, int from, const Dyadic& label);
    Dyadic label(int to, int from) const;
    const std::map<std::pair<int, int>, Dyadic>& edges() const { return edges_; }

    ExactMatrix matrix(const FieldSpec& field) const;
    int64_t kernel_dim(const FieldSpec& field) const;

private:
    int n_;
    std::map<std::pair<int, int>, Dyadic> edges_;  // (to, from) -> label
};

// A string equal for two graphs exactly when they are isomorphic as
// label-respecting directed graphs.  Computed by color refinement followed by
// a lexicographically minimal ordering search.
std::string canonical_encoding(const LabeledGraph& g);

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace kergrad
