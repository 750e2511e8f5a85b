#pragma once

#include <string>
#include <vector>

#include "kergrad/cylinder.hpp"
#include "kergrad/folner.hpp"
#include "kergrad/group_ring.hpp"
#include "kergrad/labeled_graph.hpp"

namespace kergrad {

// An operator written as a sum gamma_k * f_k with gamma_k a pure translation
// (shifts and automorphism only) and f_k supported on the abelian part.
// Terms are grouped so the gamma_k are distinct.
struct TDecomposition {
    struct Term {
        GroupElement gamma;
        GroupRingElement f;
        CylinderFunction fhat;
    };

    GroupSpec spec;
    std::vector<Term> terms;

    static TDecomposition from_operator(const GroupRingElement& T);
    GroupRingElement reassemble() const;
};

struct TGraphReport {
    bool ok = true;
    std::string detail;
};

// The common value of a transformed coefficient on the support of a vertex
// projection; throws std::domain_error if the function is not constant there.
Dyadic hat_value_on(const CylinderFunction& fhat, const CylinderFunction& vertex);

// Checks that the vertices are nonzero pairwise orthogonal projections, that
// every transformed coefficient is constant on every vertex, and that each
// move with a nonzero weight sends a vertex to another listed vertex.  Stops
// at the first violation.
TGraphReport validate_tgraph(const TDecomposition& dec,
                             const std::vector<CylinderFunction>& verts);

// Matrix of the operator restricted to the listed vertices: entry (q, p)
// accumulates the weight of every term whose translation maps vertex p onto
// vertex q.  Requires a valid vertex list.
LabeledGraph build_M(const TDecomposition& dec, const std::vector<CylinderFunction>& verts);

// Spanning translation labels: g[root] = identity per component, and an edge
// p -> q realized by gamma forces g[q] = gamma * g[p].  `consistent` drops to
// false when some edge contradicts the labels already assigned; the witness
// g(q)^{-1} gamma g(p) is then a nontrivial loop translation.
struct SpanningAssignment {
    bool consistent = true;
    std::vector<GroupElement> g;
    std::vector<int> component;
    GroupElement witness;
    std::string detail;
};

SpanningAssignment simply_connected(const TDecomposition& dec,
                                    const std::vector<CylinderFunction>& verts);

// Translations from vertex p to every vertex of its component, sorted.
std::vector<GroupElement> gamma_set(const GroupSpec& spec, const SpanningAssignment& sa, int p);

// Exact identity T w_r = sum_q M(q, r) w_q for w_r = g(r) * unhat(base) * a,
// for every vertex r of the component containing verts[0].  The base must be
// a nonzero projection lying under the cylinder of verts[0] (whose label is
// the identity).  Requires a valid, consistent vertex list.
TGraphReport intertwiner_check(const TDecomposition& dec,
                               const std::vector<CylinderFunction>& verts,
                               const CylinderFunction& base, const GroupElement& a);

// Whether every group element supporting w lies in the box.
bool supported_in_box(const GroupRingElement& w, const FolnerBox& box);

}  // namespace kergrad
