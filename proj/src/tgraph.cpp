#include "kergrad/tgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace kergrad {

TDecomposition TDecomposition::from_operator(const GroupRingElement& T) {
    const GroupSpec& spec = T.spec();
    std::map<GroupElement, GroupRingElement> grouped;
    for (const auto& [g, c] : T.terms()) {
        GroupElement gamma = identity(spec);
        gamma.shifts = g.shifts;
        gamma.aut = g.aut;
        GroupElement ab = identity(spec);
        ab.lamps = g.lamps;
        ab.fin = g.fin;
        // g = ab * gamma; move the abelian part to the right of gamma.
        GroupElement right = mul(spec, inverse(spec, gamma), mul(spec, ab, gamma));
        auto [it, fresh] = grouped.try_emplace(gamma, spec);
        (void)fresh;
        it->second.add_term(right, c);
    }
    TDecomposition dec{spec, {}};
    for (auto& [gamma, f] : grouped) {
        if (f.terms().empty()) continue;
        CylinderFunction fh = hat(f);
        dec.terms.push_back({gamma, std::move(f), std::move(fh)});
    }
    return dec;
}

GroupRingElement TDecomposition::reassemble() const {
    GroupRingElement out(spec);
    for (const auto& t : terms) {
        GroupRingElement g(spec);
        g.add_term(t.gamma, Dyadic(1));
        out = out + g * t.f;
    }
    return out;
}

Dyadic hat_value_on(const CylinderFunction& fhat, const CylinderFunction& vertex) {
    Window w = Window::merged(fhat.window(), vertex.window());
    CylinderFunction f = fhat.extended(w), v = vertex.extended(w);
    bool seen = false;
    Dyadic value;
    for (uint32_t x = 0; x < v.table().size(); ++x) {
        if (v.table()[x].is_zero()) continue;
        if (!seen) {
            value = f.table()[x];
            seen = true;
        } else if (!(value == f.table()[x])) {
            throw std::domain_error("coefficient is not constant on the vertex");
        }
    }
    if (!seen) throw std::domain_error("vertex has empty support");
    return value;
}

namespace {

int find_vertex(const std::vector<CylinderFunction>& verts, const CylinderFunction& p) {
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == p) return static_cast<int>(i);
    return -1;
}

struct Move {
    int from, to, term;
};

// All moves with nonzero weight; requires validate_tgraph to have passed.
std::vector<Move> collect_moves(const TDecomposition& dec,
                                const std::vector<CylinderFunction>& verts) {
    std::vector<Move> moves;
    for (size_t p = 0; p < verts.size(); ++p) {
        for (size_t k = 0; k < dec.terms.size(); ++k) {
            if (hat_value_on(dec.terms[k].fhat, verts[p]).is_zero()) continue;
            int q = find_vertex(verts, act(dec.terms[k].gamma, verts[p]));
            if (q < 0) throw std::invalid_argument("vertex list is not closed under moves");
            moves.push_back({static_cast<int>(p), q, static_cast<int>(k)});
        }
    }
    return moves;
}

}  // namespace

TGraphReport validate_tgraph(const TDecomposition& dec,
                             const std::vector<CylinderFunction>& verts) {
    for (size_t i = 0; i < verts.size(); ++i) {
        if (!verts[i].is_projection() || verts[i].is_zero())
            return {false, "vertex " + std::to_string(i) + " is not a nonzero projection"};
    }
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (proj_relate(verts[i], verts[j]) != ProjRelation::Orthogonal)
                return {false, "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                   " overlap"};
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t k = 0; k < dec.terms.size(); ++k) {
            try {
                hat_value_on(dec.terms[k].fhat, verts[i]);
            } catch (const std::domain_error&) {
                return {false, "term " + std::to_string(k) + " is not constant on vertex " +
                                   std::to_string(i)};
            }
        }
    }
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t k = 0; k < dec.terms.size(); ++k) {
            if (hat_value_on(dec.terms[k].fhat, verts[i]).is_zero()) continue;
            if (find_vertex(verts, act(dec.terms[k].gamma, verts[i])) < 0)
                return {false, "move of vertex " + std::to_string(i) + " by term " +
                                   std::to_string(k) + " leaves the vertex list"};
        }
    }
    return {};
}

LabeledGraph build_M(const TDecomposition& dec, const std::vector<CylinderFunction>& verts) {
    std::map<std::pair<int, int>, Dyadic> acc;
    for (const auto& mv : collect_moves(dec, verts))
        acc[{mv.to, mv.from}] =
            acc[{mv.to, mv.from}] + hat_value_on(dec.terms[mv.term].fhat, verts[mv.from]);
    LabeledGraph g(static_cast<int>(verts.size()));
    for (const auto& [key, w] : acc)
        if (!w.is_zero()) g.add_edge(key.first, key.second, w);
    return g;
}

SpanningAssignment simply_connected(const TDecomposition& dec,
                                    const std::vector<CylinderFunction>& verts) {
    const GroupSpec& spec = dec.spec;
    const int n = static_cast<int>(verts.size());
    std::vector<Move> moves = collect_moves(dec, verts);
    std::vector<std::vector<Move>> incident(n);
    for (const auto& mv : moves) {
        incident[mv.from].push_back(mv);
        if (mv.to != mv.from) incident[mv.to].push_back(mv);
    }

    SpanningAssignment sa;
    sa.g.assign(n, identity(spec));
    sa.component.assign(n, -1);
    int comps = 0;
    for (int root = 0; root < n; ++root) {
        if (sa.component[root] >= 0) continue;
        sa.component[root] = comps;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const auto& mv : incident[v]) {
                const GroupElement& gamma = dec.terms[mv.term].gamma;
                if (sa.component[mv.to] < 0) {
                    sa.g[mv.to] = mul(spec, gamma, sa.g[mv.from]);
                    sa.component[mv.to] = comps;
                    queue.push_back(mv.to);
                } else if (sa.component[mv.from] < 0) {
                    sa.g[mv.from] = mul(spec, inverse(spec, gamma), sa.g[mv.to]);
                    sa.component[mv.from] = comps;
                    queue.push_back(mv.from);
                } else {
                    GroupElement loop = mul(spec, inverse(spec, sa.g[mv.to]),
                                            mul(spec, gamma, sa.g[mv.from]));
                    if (!(loop == identity(spec))) {
                        sa.consistent = false;
                        sa.witness = loop;
                        sa.detail = "loop translation " + element_str(spec, loop) +
                                    " through vertices " + std::to_string(mv.from) + " -> " +
                                    std::to_string(mv.to);
                        return sa;
                    }
                }
            }
        }
        ++comps;
    }
    return sa;
}

std::vector<GroupElement> gamma_set(const GroupSpec& spec, const SpanningAssignment& sa, int p) {
    if (p < 0 || p >= static_cast<int>(sa.g.size())) throw std::invalid_argument("bad vertex");
    GroupElement inv = inverse(spec, sa.g[p]);
    std::vector<GroupElement> out;
    for (size_t q = 0; q < sa.g.size(); ++q)
        if (sa.component[q] == sa.component[p]) out.push_back(mul(spec, sa.g[q], inv));
    std::sort(out.begin(), out.end());
    return out;
}

TGraphReport intertwiner_check(const TDecomposition& dec,
                               const std::vector<CylinderFunction>& verts,
                               const CylinderFunction& base, const GroupElement& a) {
    if (verts.empty()) throw std::invalid_argument("need at least one vertex");
    const GroupSpec& spec = dec.spec;
    if (!base.is_projection() || base.is_zero() ||
        (!(base == verts[0]) && proj_relate(base, verts[0]) != ProjRelation::Below))
        throw std::invalid_argument("base must be a nonzero projection under the root vertex");
    SpanningAssignment sa = simply_connected(dec, verts);
    if (!sa.consistent) return {false, "translation labels inconsistent: " + sa.detail};

    GroupRingElement P = unhat(base);
    GroupRingElement ra(spec);
    ra.add_term(a, Dyadic(1));
    std::vector<GroupRingElement> w;
    for (size_t r = 0; r < verts.size(); ++r) {
        GroupRingElement gr(spec);
        gr.add_term(sa.g[r], Dyadic(1));
        w.push_back(gr * P * ra);
    }

    GroupRingElement T = dec.reassemble();
    LabeledGraph M = build_M(dec, verts);
    for (size_t r = 0; r < verts.size(); ++r) {
        if (sa.component[r] != sa.component[0]) continue;
        GroupRingElement lhs = T * w[r];
        GroupRingElement rhs(spec);
        for (size_t q = 0; q < verts.size(); ++q) {
            Dyadic lab = M.label(static_cast<int>(q), static_cast<int>(r));
            if (!lab.is_zero()) rhs = rhs + w[q].scaled(lab);
        }
        if (!(lhs == rhs))
            return {false, "operator image of vertex " + std::to_string(r) +
                               " does not match the matrix column"};
    }
    return {};
}

bool supported_in_box(const GroupRingElement& w, const FolnerBox& box) {
    for (const auto& [g, c] : w.terms())
        if (!box.contains(g)) return false;
    return true;
}

}  // namespace kergrad
