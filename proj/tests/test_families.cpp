#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "kergrad/graph_families.hpp"

using namespace kergrad;

namespace {

const std::vector<FieldSpec> kFields{FieldSpec::rationals(), FieldSpec::gf(3), FieldSpec::gf(5),
                                     FieldSpec::gf(7)};

std::vector<Scalar> matvec(const ExactMatrix& m, const std::vector<Dyadic>& v) {
    std::vector<Scalar> out(m.rows(), Scalar::zero(m.field()));
    for (const auto& [key, s] : m.entries())
        out[key.first] = out[key.first] + s * reduce_mod(v[key.second], m.field());
    return out;
}

}  // namespace

TEST_CASE("closed forms at pinned parameters") {
    CHECK(family_g1_kernel(3, FieldSpec::gf(3)) == 1);
    CHECK(family_g3_kernel(4, 7, FieldSpec::rationals()) == 2);
    CHECK(family_g3_kernel(4, 2, FieldSpec::gf(5)) == 2);
    CHECK(family_g3_kernel(5, 15, FieldSpec::rationals()) == 2);
    for (const auto& f : kFields) {
        CHECK(family_g1_kernel(1, f) == 0);
        CHECK(family_g2_kernel(6, f) == 1);
    }
    CHECK(family_g1_kernel(3, FieldSpec::rationals()) == 0);
    CHECK(family_g3_kernel(3, 1, FieldSpec::gf(5)) == 1);
}

TEST_CASE("closed forms agree with elimination on a small grid") {
    for (const auto& f : kFields) {
        for (int k = 1; k <= 6; ++k) CHECK(family_g1(k).kernel_dim(f) == family_g1_kernel(k, f));
        for (int l = 1; l <= 9; ++l) CHECK(family_g2(l).kernel_dim(f) == family_g2_kernel(l, f));
        for (int k = 1; k <= 5; ++k)
            for (int l = 1; l <= 8; ++l)
                CHECK(family_g3(k, l).kernel_dim(f) == family_g3_kernel(k, l, f));
    }
}

TEST_CASE("path kernels alternate") {
    for (int k = 1; k <= 9; ++k) {
        CHECK(path_kernel(k) == k % 2);
        CHECK(path_graph(k).kernel_dim(FieldSpec::rationals()) == k % 2);
        CHECK(path_graph(k).kernel_dim(FieldSpec::gf(3)) == k % 2);
    }
}

TEST_CASE("vertex counts and sizes") {
    CHECK(family_g1(4).size() == 8);
    CHECK(family_g2(5).size() == 11);
    CHECK(family_g3(2, 3).size() == 12);
    CHECK_THROWS_AS(family_g1(0), std::invalid_argument);
    CHECK_THROWS_AS(family_g3(1, 0), std::invalid_argument);
}

TEST_CASE("loop tree pinned cases") {
    LoopTree single;
    single.parent = {-1};
    single.external = {false};
    single.root_loop = false;
    CHECK(single.expected_joint() == 1);
    CHECK(single.joint_dim(FieldSpec::rationals()) == 1);
    single.root_loop = true;
    CHECK(single.expected_joint() == 0);
    CHECK(single.joint_dim(FieldSpec::gf(3)) == 0);

    LoopTree fork;  // root with two bare leaves, companion row on the root
    fork.parent = {-1, 0, 0};
    fork.external = {false, false, false};
    fork.root_loop = true;
    CHECK(fork.expected_joint() == 1);
    for (const auto& f : kFields) CHECK(fork.joint_dim(f) == 1);

    LoopTree blocked;
    blocked.parent = {-1, 0};
    blocked.external = {false, true};
    blocked.root_loop = false;
    CHECK_THROWS_AS(blocked.expected_joint(), std::domain_error);
}

TEST_CASE("random loop trees match the leaf count formula") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        LoopTree t = random_loop_tree(rng, 12);
        int64_t want = t.expected_joint();
        CHECK(t.joint_dim(FieldSpec::rationals()) == want);
        CHECK(t.joint_dim(FieldSpec::gf(5)) == want);
    }
}

TEST_CASE("alternating path vectors span the looped kernel") {
    std::mt19937_64 rng(32);
    int looped = 0;
    for (int trial = 0; trial < 40; ++trial) {
        LoopTree t = random_loop_tree(rng, 10);
        if (!t.root_loop || t.size() < 2) {
            CHECK_THROWS_AS(t.xi_basis(), std::domain_error);
            continue;
        }
        ++looped;
        auto basis = t.xi_basis();
        CHECK(static_cast<int>(basis.size()) == t.free_leaf_count());
        for (const auto& f : {FieldSpec::rationals(), FieldSpec::gf(7)}) {
            ExactMatrix alpha = t.alpha_matrix(f);
            ExactMatrix span(f, static_cast<int64_t>(basis.size()), t.size());
            for (size_t i = 0; i < basis.size(); ++i) {
                for (const auto& s : matvec(alpha, basis[i])) CHECK(s.is_zero());
                for (int v = 0; v < t.size(); ++v)
                    if (!basis[i][v].is_zero()) span.set(static_cast<int64_t>(i), v, reduce_mod(basis[i][v], f));
            }
            CHECK(span.rank() == static_cast<int64_t>(basis.size()));
            CHECK(alpha.kernel_dim() == static_cast<int64_t>(basis.size()));
        }
    }
    CHECK(looped > 5);
}
