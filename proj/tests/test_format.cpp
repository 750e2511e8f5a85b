#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kergrad/text_format.hpp"

using namespace kergrad;

TEST_CASE("parse the lamplighter operator") {
    GroupRingElement T = parse_element("t + t^-1 + t*u[0] + u[0]*t^-1");
    const GroupSpec& spec = T.spec();
    CHECK(spec.shift_rank == 1);
    CHECK(spec.fin_bits == 0);
    CHECK(T.support_size() == 4);

    GroupElement t = shift_gen(spec, 0), u = lamp_gen(spec, 0, 0);
    CHECK(T.coeff(t) == Dyadic(1));
    CHECK(T.coeff(inverse(spec, t)) == Dyadic(1));
    CHECK(T.coeff(mul(spec, t, u)) == Dyadic(1));
    CHECK(T.coeff(mul(spec, u, inverse(spec, t))) == Dyadic(1));

    // t*u[0] in normal form carries the lamp at position 1.
    GroupElement tu = mul(spec, t, u);
    CHECK(tu.lamps == std::vector<std::pair<int, int64_t>>{{0, 1}});
}

TEST_CASE("parse dyadic coefficients and finite bits") {
    GroupRingElement p = parse_element("1/2^1 + 1/2^1 phi[0]");
    CHECK(p.spec().fin_bits == 1);
    CHECK(p.spec().shift_rank == 0);
    CHECK(p.coeff(identity(p.spec())) == Dyadic(mpz_class(1), 1));
    CHECK(p.coeff(fin_gen(p.spec(), 0)) == Dyadic(mpz_class(1), 1));
    CHECK(p * p == p);

    GroupRingElement q = parse_element("-3 e + 2 u[1,2] - 1/2^2 t2^-3");
    CHECK(q.spec().shift_rank == 3);
    CHECK(q.coeff(identity(q.spec())) == Dyadic(-3));
}

TEST_CASE("parse cancellation and multi-track atoms") {
    GroupRingElement z = parse_element("u[0]u[0] - e");
    CHECK(z.is_zero());

    GroupRingElement x = parse_element("t1^2 u1[5] t1^-2");
    GroupElement expect = lamp_gen(x.spec(), 1, 7);
    CHECK(x.coeff(expect) == Dyadic(1));
}

TEST_CASE("parse with an explicit spec") {
    GroupSpec spec(2, 1);
    GroupRingElement e = parse_element("t + phi[0]", spec);
    CHECK(e.spec() == spec);
    CHECK(e.coeff(shift_gen(spec, 0)) == Dyadic(1));
    CHECK(e.coeff(fin_gen(spec, 0)) == Dyadic(1));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_element(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("t +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("u"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("phi[0", GroupSpec(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("1/3 e"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("phi[1]", GroupSpec(0, 1)), std::invalid_argument);
}

TEST_CASE("format round trip") {
    for (const char* text : {"t + t^-1 + t*u[0] + u[0]*t^-1", "1/2^1 + 1/2^1 phi[0]",
                             "-3 + 2 u[1,2] - 1/2^2 t2^-3"}) {
        GroupRingElement e = parse_element(text);
        GroupRingElement round = parse_element(format_element(e), e.spec());
        CHECK(round == e);
    }
}
