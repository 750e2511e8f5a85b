#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>
#include "kergrad/cylinder.hpp"
#include "kergrad/text_format.hpp"

using namespace kergrad;

namespace {

GroupRingElement random_abelian(const GroupSpec& spec, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), pos(-1, 2), num(-3, 3), exp(0, 2), bit(0, 1);
    GroupRingElement f(spec);
    for (int i = 0, n = nterms(rng); i < n; ++i) {
        GroupElement g = identity(spec);
        for (int t = 0; t < spec.shift_rank; ++t)
            if (bit(rng)) g.lamps.emplace_back(t, pos(rng));
        for (int b = 0; b < spec.fin_bits; ++b) g.fin |= static_cast<uint32_t>(bit(rng)) << b;
        f.add_term(g, Dyadic(num(rng), exp(rng)));
    }
    return f;
}

BitMatrix swap2() {
    BitMatrix m;
    m.dim = 2;
    m.row = {2, 1};
    return m;
}

}  // namespace

TEST_CASE("transform of the half-lamp idempotent") {
    GroupRingElement f = parse_element("1/2^1 e + 1/2^1 u[0]");
    CylinderFunction c = hat(f);
    REQUIRE(c.window().sites.size() == 1);
    CHECK(c.window().sites[0] == std::vector<int64_t>{0});
    CHECK(c.window().fin_bits.empty());
    CHECK(c.table() == std::vector<Dyadic>{Dyadic(1), Dyadic()});
    CHECK(c.is_projection());
    CHECK(c.measure() == Dyadic(1, 1));
    CHECK(unhat(c) == f);
}

TEST_CASE("transform turns convolution into pointwise product") {
    GroupSpec spec(1, 2);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        GroupRingElement f = random_abelian(spec, rng);
        GroupRingElement g = random_abelian(spec, rng);
        CHECK(hat(f * g) == hat(f) * hat(g));
        CHECK(hat(f + g) == hat(f) + hat(g));
        CHECK(unhat(hat(f)) == f);
        CHECK(hat(f).integral() == f.coeff(identity(spec)));
    }
    GroupRingElement one(spec);
    one.add_term(identity(spec), Dyadic(1));
    CHECK(hat(one) == CylinderFunction::constant(spec, Dyadic(1)));
}

TEST_CASE("round trip from a random table") {
    GroupSpec spec(2, 1);
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> num(-4, 4), exp(0, 3);
    Window w(spec, {{0, 2}, {-1}}, {0});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Dyadic> table(16);
        for (auto& v : table) v = Dyadic(num(rng), exp(rng));
        CylinderFunction c(spec, w, table);
        CHECK(hat(unhat(c)) == c);
    }
}

TEST_CASE("translation matches conjugation through the transform") {
    GroupSpec spec(1, 2, {BitMatrix::identity(2), swap2()});
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> sh(-2, 2), a(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        GroupRingElement f = random_abelian(spec, rng);
        GroupElement gamma = identity(spec);
        gamma.shifts[0] = sh(rng);
        gamma.aut = a(rng);
        GroupRingElement ge(spec), gi(spec);
        ge.add_term(gamma, Dyadic(1));
        gi.add_term(inverse(spec, gamma), Dyadic(1));
        CHECK(hat(ge * f * gi) == act(gamma, hat(f)));
    }
}

TEST_CASE("shift and automorphism actions on generators") {
    GroupSpec lamp(1, 0);
    CHECK(act(shift_gen(lamp, 0), hat(parse_element("u[0]", lamp))) ==
          hat(parse_element("u[1]", lamp)));
    GroupSpec spec(0, 2, {BitMatrix::identity(2), swap2()});
    GroupElement alpha = identity(spec);
    alpha.aut = 1;
    CHECK(act(alpha, hat(parse_element("phi[0]", spec))) == hat(parse_element("phi[1]", spec)));
    GroupElement bad = lamp_gen(lamp, 0, 0);
    CHECK_THROWS_AS(act(bad, hat(parse_element("u[0]", lamp))), std::invalid_argument);
}

TEST_CASE("normalization drops coordinates the function ignores") {
    GroupSpec spec(1, 1);
    CylinderFunction c = hat(parse_element("1/2^1 e + 1/2^1 u[0]", spec));
    Window big(spec, {{-1, 0, 3}}, {0});
    CylinderFunction e = c.extended(big);
    CHECK(e.window().bit_count() == 4);
    CHECK(e == c);
    CylinderFunction n = e.normalized();
    CHECK(n.window().sites[0] == std::vector<int64_t>{0});
    CHECK(n.window().fin_bits.empty());
    CHECK(n == c);
    CHECK(CylinderFunction::constant(spec, Dyadic(1)).normalized().window().bit_count() == 0);
}

TEST_CASE("projection comparison") {
    GroupSpec spec(1, 0);
    CylinderFunction p = hat(parse_element("1/2^1 e + 1/2^1 u[0]", spec));
    CylinderFunction tp = act(shift_gen(spec, 0), p);
    CylinderFunction q = p * tp;
    CylinderFunction comp = CylinderFunction::constant(spec, Dyadic(1)) - p;
    CHECK(proj_relate(q, p) == ProjRelation::Below);
    CHECK(proj_relate(p, q) == ProjRelation::Mixed);
    CHECK(proj_relate(p, comp) == ProjRelation::Orthogonal);
    CHECK(q.measure() == Dyadic(1, 2));
    CHECK_THROWS_AS(p.scaled(Dyadic(1, 1)).measure(), std::domain_error);
}

TEST_CASE("refinement by translates of the half-lamp support") {
    GroupSpec spec(1, 0);
    CylinderFunction p = hat(parse_element("1/2^1 e + 1/2^1 u[0]", spec));
    std::vector<GroupElement> phis{identity(spec), inverse(spec, shift_gen(spec, 0))};
    auto parts = refine_partition({p}, phis);
    REQUIRE(parts.size() == 4);
    CylinderFunction sum = CylinderFunction::constant(spec, Dyadic());
    for (const auto& part : parts) {
        CHECK(part.is_projection());
        CHECK(part.window().sites[0] == std::vector<int64_t>{0, 1});
        CHECK(part.measure() == Dyadic(1, 2));
        sum = sum + part;
    }
    CHECK(sum == CylinderFunction::constant(spec, Dyadic(1)));
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            CHECK(proj_relate(parts[i], parts[j]) == ProjRelation::Orthogonal);
    // Each translate of each generator piece is a union of parts.
    CylinderFunction comp = CylinderFunction::constant(spec, Dyadic(1)) - p;
    for (const auto& part : parts)
        for (const auto& phi : phis)
            for (const auto& q : {p, comp}) CHECK(proj_relate(act(phi, part), q) != ProjRelation::Mixed);
    CHECK_THROWS_AS(refine_partition({p, p}, phis), std::invalid_argument);
}
