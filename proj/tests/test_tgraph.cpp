#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "kergrad/graph_families.hpp"
#include "kergrad/tgraph.hpp"
#include "kergrad/text_format.hpp"

using namespace kergrad;

namespace {

GroupRingElement lamplighter_op() {
    return parse_element("t + t^-1 + t u[0] + u[0] t^-1");
}

// Pattern 1 0 ... 0 1 on sites {0, .., k}, then slid down j steps.
CylinderFunction path_vertex(const GroupSpec& spec, int k, int j) {
    std::vector<int64_t> sites;
    for (int s = 0; s <= k; ++s) sites.push_back(s);
    std::vector<Dyadic> table(static_cast<size_t>(1) << (k + 1));
    table[1u | (1u << k)] = Dyadic(1);
    CylinderFunction base(spec, Window(spec, {sites}, {}), std::move(table));
    GroupElement down = shift_gen(spec, 0, -j);
    return act(down, base);
}

}  // namespace

TEST_CASE("decomposition groups terms by translation") {
    GroupRingElement T = lamplighter_op();
    TDecomposition dec = TDecomposition::from_operator(T);
    REQUIRE(dec.terms.size() == 2);
    const GroupSpec& spec = dec.spec;
    CHECK(dec.terms[0].gamma == shift_gen(spec, 0, -1));
    CHECK(dec.terms[1].gamma == shift_gen(spec, 0, 1));
    CHECK(dec.terms[0].f == parse_element("e + u[1]", spec));
    CHECK(dec.terms[1].f == parse_element("e + u[0]", spec));
    CHECK(dec.reassemble() == T);
}

TEST_CASE("three-vertex path component") {
    GroupRingElement T = lamplighter_op();
    TDecomposition dec = TDecomposition::from_operator(T);
    const GroupSpec& spec = dec.spec;
    std::vector<CylinderFunction> verts;
    for (int j = 0; j < 3; ++j) verts.push_back(path_vertex(spec, 3, j));

    TGraphReport rep = validate_tgraph(dec, verts);
    CHECK(rep.ok);
    CHECK(rep.detail.empty());

    LabeledGraph M = build_M(dec, verts);
    CHECK(M.label(1, 0) == Dyadic(2));
    CHECK(M.label(0, 1) == Dyadic(2));
    CHECK(M.label(2, 1) == Dyadic(2));
    CHECK(M.label(1, 2) == Dyadic(2));
    CHECK(M.edges().size() == 4);
    CHECK(isomorphic(M, path_graph(3)));
    CHECK(M.kernel_dim(FieldSpec::rationals()) == 1);
    CHECK(M.kernel_dim(FieldSpec::gf(5)) == 1);

    SpanningAssignment sa = simply_connected(dec, verts);
    REQUIRE(sa.consistent);
    CHECK(sa.component == std::vector<int>{0, 0, 0});
    CHECK(sa.g[0] == identity(spec));
    CHECK(sa.g[1] == shift_gen(spec, 0, -1));
    CHECK(sa.g[2] == shift_gen(spec, 0, -2));

    // Translations out of the low end of the path.
    std::vector<GroupElement> low = gamma_set(spec, sa, 2);
    REQUIRE(low.size() == 3);
    CHECK(low[0] == identity(spec));
    CHECK(low[1] == shift_gen(spec, 0, 1));
    CHECK(low[2] == shift_gen(spec, 0, 2));
    std::vector<GroupElement> high = gamma_set(spec, sa, 0);
    CHECK(high[0] == shift_gen(spec, 0, -2));
    CHECK(high[2] == identity(spec));

    // gamma_set(q) = gamma_set(p) * lambda^{-1} for q = lambda.p.
    GroupElement lambda = mul(spec, sa.g[2], inverse(spec, sa.g[0]));
    std::vector<GroupElement> translated;
    for (const auto& g : high) translated.push_back(mul(spec, g, inverse(spec, lambda)));
    std::sort(translated.begin(), translated.end());
    CHECK(translated == low);
}

TEST_CASE("validation reports the first violation") {
    GroupRingElement T = lamplighter_op();
    TDecomposition dec = TDecomposition::from_operator(T);
    const GroupSpec& spec = dec.spec;

    std::vector<CylinderFunction> open{path_vertex(spec, 3, 0), path_vertex(spec, 3, 1)};
    TGraphReport rep = validate_tgraph(dec, open);
    CHECK(!rep.ok);
    CHECK(rep.detail.find("leaves the vertex list") != std::string::npos);

    std::vector<CylinderFunction> overlap{path_vertex(spec, 3, 0), path_vertex(spec, 3, 0)};
    rep = validate_tgraph(dec, overlap);
    CHECK(!rep.ok);
    CHECK(rep.detail.find("overlap") != std::string::npos);

    std::vector<CylinderFunction> loose{hat(parse_element("1/2^1 e + 1/2^1 u[1]", spec))};
    rep = validate_tgraph(dec, loose);
    CHECK(!rep.ok);
    CHECK(rep.detail.find("not constant") != std::string::npos);

    std::vector<CylinderFunction> zero{CylinderFunction::constant(spec, Dyadic())};
    rep = validate_tgraph(dec, zero);
    CHECK(!rep.ok);
    CHECK(rep.detail.find("nonzero projection") != std::string::npos);
}

TEST_CASE("a fixed vertex with a nontrivial translation is caught") {
    BitMatrix swap;
    swap.dim = 2;
    swap.row = {2, 1};
    GroupSpec spec(0, 2, {BitMatrix::identity(2), swap});
    GroupElement alpha = identity(spec);
    alpha.aut = 1;
    GroupRingElement T(spec);
    T.add_term(alpha, Dyadic(1));
    TDecomposition dec = TDecomposition::from_operator(T);

    // Symmetric projection: the two finite bits agree.
    std::vector<Dyadic> table(4);
    table[0] = Dyadic(1);
    table[3] = Dyadic(1);
    CylinderFunction p(spec, Window(spec, {}, {0, 1}), std::move(table));
    std::vector<CylinderFunction> verts{p};
    CHECK(validate_tgraph(dec, verts).ok);
    SpanningAssignment sa = simply_connected(dec, verts);
    CHECK(!sa.consistent);
    CHECK(sa.witness == alpha);
    CHECK(!intertwiner_check(dec, verts, p, identity(spec)).ok);
}

TEST_CASE("intertwiner identity on the path component") {
    GroupRingElement T = lamplighter_op();
    TDecomposition dec = TDecomposition::from_operator(T);
    const GroupSpec& spec = dec.spec;
    std::vector<CylinderFunction> verts;
    for (int j = 0; j < 3; ++j) verts.push_back(path_vertex(spec, 3, j));

    CHECK(intertwiner_check(dec, verts, verts[0], identity(spec)).ok);
    GroupElement a = parse_element("u[0] t^2", spec).terms().begin()->first;
    CHECK(intertwiner_check(dec, verts, verts[0], a).ok);

    // A refinement of the root vertex pins one more site.
    CylinderFunction finer =
        verts[0] * act(shift_gen(spec, 0, 5), hat(parse_element("1/2^1 e + 1/2^1 u[0]", spec)));
    CHECK(proj_relate(finer, verts[0]) == ProjRelation::Below);
    CHECK(intertwiner_check(dec, verts, finer, identity(spec)).ok);
    CHECK(intertwiner_check(dec, verts, finer, a).ok);

    CHECK_THROWS_AS(
        intertwiner_check(dec, verts, hat(parse_element("1/2^1 e + 1/2^1 u[0]", spec)),
                          identity(spec)),
        std::invalid_argument);

    // Supports stay inside a box whose window covers the pattern sites, and
    // escape one whose shift range misses the translated copies.
    SpanningAssignment sa = simply_connected(dec, verts);
    GroupRingElement P = unhat(verts[0]);
    FolnerBox wide(spec, {{-2, 1}}, {{0, 1, 2, 3}});
    FolnerBox thin(spec, {{0, 1}}, {{0, 1, 2, 3}});
    CHECK(supported_in_box(P, wide));
    CHECK(supported_in_box(P, thin));
    GroupRingElement w2(spec);
    w2.add_term(sa.g[2], Dyadic(1));
    CHECK(supported_in_box(w2 * P, wide));
    CHECK(!supported_in_box(w2 * P, thin));
}
