#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "kergrad/labeled_graph.hpp"
#include "oracles/dense_oracle.hpp"

using namespace kergrad;

namespace {

LabeledGraph random_graph(std::mt19937_64& rng, int n) {
    static const std::vector<Dyadic> labels{Dyadic(1), Dyadic(-1), Dyadic(2), Dyadic(-2),
                                            Dyadic(1, 1), Dyadic(3)};
    std::uniform_int_distribution<int> coin(0, 2), pick(0, static_cast<int>(labels.size()) - 1);
    LabeledGraph g(n);
    for (int to = 0; to < n; ++to)
        for (int from = 0; from < n; ++from)
            if (coin(rng) == 0) g.add_edge(to, from, labels[pick(rng)]);
    return g;
}

LabeledGraph permuted(const LabeledGraph& g, const std::vector<int>& pi) {
    LabeledGraph out(g.size());
    for (const auto& [key, lab] : g.edges()) out.add_edge(pi[key.first], pi[key.second], lab);
    return out;
}

}  // namespace

TEST_CASE("kernel dimensions of small graphs") {
    LabeledGraph g(1);
    CHECK(g.kernel_dim(FieldSpec::rationals()) == 1);
    g.add_edge(0, 0, Dyadic(1));
    CHECK(g.kernel_dim(FieldSpec::rationals()) == 0);

    LabeledGraph two(2);
    two.add_edge(1, 0, Dyadic(2));
    CHECK(two.kernel_dim(FieldSpec::rationals()) == 1);
    CHECK(two.kernel_dim(FieldSpec::gf(3)) == 1);

    LabeledGraph cyc(2);
    cyc.add_edge(0, 1, Dyadic(1));
    cyc.add_edge(1, 0, Dyadic(-1));
    CHECK(cyc.kernel_dim(FieldSpec::gf(5)) == 0);
}

TEST_CASE("matrix entries sit at (to, from)") {
    LabeledGraph g(3);
    g.add_edge(2, 1, Dyadic(3, 1));
    ExactMatrix m = g.matrix(FieldSpec::rationals());
    CHECK(m.get(2, 1).rational() == mpq_class(3, 2));
    CHECK(m.get(1, 2).is_zero());
    CHECK_THROWS_AS(g.add_edge(2, 1, Dyadic(1)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3, Dyadic(1)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 0, Dyadic()), std::invalid_argument);
}

TEST_CASE("random graphs agree with the dense oracle") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> size(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = size(rng);
        LabeledGraph g = random_graph(rng, n);

        std::vector<std::vector<mpq_class>> dq(n, std::vector<mpq_class>(n));
        for (const auto& [key, lab] : g.edges()) dq[key.first][key.second] = lab.to_rational();
        CHECK(g.kernel_dim(FieldSpec::rationals()) == n - dense_rank_q(dq));

        for (uint64_t p : {3u, 7u}) {
            FieldSpec f = FieldSpec::gf(p);
            std::vector<std::vector<uint64_t>> dp(n, std::vector<uint64_t>(n, 0));
            for (const auto& [key, lab] : g.edges())
                dp[key.first][key.second] = reduce_mod(lab, f).residue();
            CHECK(g.kernel_dim(f) == n - dense_rank_gf(p, dp));
        }
    }
}

TEST_CASE("canonical encoding is permutation invariant") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> size(1, 7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = size(rng);
        LabeledGraph g = random_graph(rng, n);
        std::vector<int> pi(n);
        for (int i = 0; i < n; ++i) pi[i] = i;
        std::shuffle(pi.begin(), pi.end(), rng);
        LabeledGraph h = permuted(g, pi);
        CHECK(canonical_encoding(g) == canonical_encoding(h));
        CHECK(isomorphic(g, h));
    }
}

TEST_CASE("canonical encoding separates") {
    LabeledGraph a(2), b(2);
    a.add_edge(1, 0, Dyadic(2));
    b.add_edge(1, 0, Dyadic(3));
    CHECK(!isomorphic(a, b));

    LabeledGraph c(2);
    c.add_edge(0, 1, Dyadic(2));
    CHECK(isomorphic(a, c));

    LabeledGraph p1(3), p2(3);
    p1.add_edge(1, 0, Dyadic(1));
    p1.add_edge(2, 1, Dyadic(2));
    p2.add_edge(1, 0, Dyadic(2));
    p2.add_edge(2, 1, Dyadic(1));
    CHECK(!isomorphic(p1, p2));
    CHECK(isomorphic(p1, permuted(p1, {2, 0, 1})));

    LabeledGraph path(3), tri(3);
    for (int i = 0; i + 1 < 3; ++i) path.add_edge(i + 1, i, Dyadic(1));
    for (int i = 0; i < 3; ++i) tri.add_edge((i + 1) % 3, i, Dyadic(1));
    CHECK(!isomorphic(path, tri));
}
