#include "kergrad/graph_families.hpp"

#include <stdexcept>

#include "kergrad/field.hpp"

namespace kergrad {

namespace {

void require_positive(int v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

}  // namespace

LabeledGraph family_g1(int k) {
    require_positive(k, "chain length");
    LabeledGraph g(2 * k);
    auto A = [&](int i) { return i - 1; };
    auto B = [&](int i) { return k + i - 1; };
    for (int v = 0; v < 2 * k; ++v) g.add_edge(v, v, Dyadic(1));
    if (k == 1) {
        g.add_edge(B(1), A(1), Dyadic(-2));
        g.add_edge(A(1), B(1), Dyadic(-1));
        return g;
    }
    for (int i = 1; i < k; ++i) g.add_edge(A(i + 1), A(i), Dyadic(-2));
    g.add_edge(B(1), A(k), Dyadic(-1));
    for (int i = 1; i < k; ++i) g.add_edge(B(i + 1), B(i), Dyadic(-1));
    g.add_edge(A(1), B(k), Dyadic(-1));
    return g;
}

LabeledGraph family_g2(int l) {
    require_positive(l, "chain length");
    LabeledGraph g(2 * l + 1);
    auto C = [&](int j) { return j - 1; };
    auto D = [&](int j) { return l + j - 1; };
    const int F = 2 * l;
    for (int v = 0; v < F; ++v) g.add_edge(v, v, Dyadic(1));
    for (int j = 1; j < l; ++j) {
        g.add_edge(C(j + 1), C(j), Dyadic(-1));
        g.add_edge(D(j + 1), D(j), Dyadic(-1));
    }
    for (int j = 1; j <= l; ++j) g.add_edge(D(j), C(j), Dyadic(1));
    g.add_edge(F, D(l), Dyadic(1));
    return g;
}

LabeledGraph family_g3(int k, int l) {
    require_positive(k, "loop length");
    require_positive(l, "chain length");
    LabeledGraph g(2 * k + 2 * l + 2);
    const int I = 0;
    auto A = [&](int i) { return i; };
    auto B = [&](int i) { return k + i; };
    auto C = [&](int j) { return 2 * k + j; };
    auto D = [&](int j) { return 2 * k + l + j; };
    const int F = 2 * k + 2 * l + 1;
    for (int v = 1; v < F; ++v) g.add_edge(v, v, Dyadic(1));
    for (int i = 1; i < k; ++i) g.add_edge(A(i + 1), A(i), Dyadic(-2));
    g.add_edge(B(1), A(k), Dyadic(-1));
    for (int i = 1; i < k; ++i) g.add_edge(B(i + 1), B(i), Dyadic(-1));
    g.add_edge(A(1), B(k), Dyadic(-1));
    g.add_edge(A(1), I, Dyadic(1));
    g.add_edge(C(1), A(1), Dyadic(-1));
    for (int j = 1; j < l; ++j) {
        g.add_edge(C(j + 1), C(j), Dyadic(-1));
        g.add_edge(D(j + 1), D(j), Dyadic(-1));
    }
    g.add_edge(D(1), I, Dyadic(-1));
    for (int j = 1; j <= l; ++j) g.add_edge(D(j), C(j), Dyadic(1));
    g.add_edge(F, D(l), Dyadic(1));
    return g;
}

LabeledGraph path_graph(int k) {
    require_positive(k, "path length");
    LabeledGraph g(k);
    for (int i = 0; i + 1 < k; ++i) {
        g.add_edge(i + 1, i, Dyadic(2));
        g.add_edge(i, i + 1, Dyadic(2));
    }
    return g;
}

int64_t family_g1_kernel(int k, const FieldSpec& field) {
    require_positive(k, "chain length");
    if (k == 1) return 0;
    if (field.is_rational()) return 0;
    return powmod(2, static_cast<uint64_t>(k - 1), field.p) == 1 ? 1 : 0;
}

int64_t family_g2_kernel(int l, const FieldSpec& field) {
    require_positive(l, "chain length");
    (void)field;
    return 1;
}

int64_t family_g3_kernel(int k, int l, const FieldSpec& field) {
    require_positive(k, "loop length");
    require_positive(l, "chain length");
    if (field.is_rational()) {
        mpz_class target = (mpz_class(1) << (k - 1)) - 1;
        return 1 + (target == l ? 1 : 0);
    }
    uint64_t lhs = powmod(2, static_cast<uint64_t>(k - 1), field.p);
    uint64_t rhs = (1 + static_cast<uint64_t>(l) % field.p) % field.p;
    return 1 + (lhs == rhs ? 1 : 0);
}

int64_t path_kernel(int k) {
    require_positive(k, "path length");
    return k % 2;
}

bool LoopTree::is_leaf(int v) const {
    for (int u = 0; u < size(); ++u)
        if (parent[u] == v) return false;
    return true;
}

int LoopTree::free_leaf_count() const {
    int a = 0;
    for (int v = 0; v < size(); ++v)
        if (is_leaf(v) && !external[v]) ++a;
    return a;
}

ExactMatrix LoopTree::alpha_matrix(const FieldSpec& field) const {
    const int n = size();
    ExactMatrix m(field, n, n);
    Scalar one = Scalar::one(field);
    for (int v = 1; v < n; ++v) m.set(parent[v], v, one);
    for (int v = 0; v < n; ++v) {
        bool loop = v == 0 ? root_loop : (is_leaf(v) ? static_cast<bool>(external[v]) : true);
        if (loop) m.add(v, v, one);
    }
    return m;
}

ExactMatrix LoopTree::beta_matrix(const FieldSpec& field) const {
    ExactMatrix m(field, size(), size());
    if (root_loop) m.set(0, 0, Scalar::one(field));
    return m;
}

int64_t LoopTree::joint_dim(const FieldSpec& field) const {
    return joint_kernel_dim(alpha_matrix(field), beta_matrix(field));
}

int64_t LoopTree::expected_joint() const {
    int a = free_leaf_count();
    if (a < 1) throw std::domain_error("needs at least one leaf without a loop");
    return a - (root_loop ? 1 : 0);
}

std::vector<std::vector<Dyadic>> LoopTree::xi_basis() const {
    if (!root_loop) throw std::domain_error("basis construction needs the root loop");
    // With a one-vertex tree the root row pins the only coordinate to zero.
    if (size() < 2) throw std::domain_error("basis construction needs a non-leaf root");
    std::vector<std::vector<Dyadic>> basis;
    for (int v = 0; v < size(); ++v) {
        if (!is_leaf(v) || external[v]) continue;
        std::vector<Dyadic> xi(size());
        int sign = 1, u = v;
        while (u != -1) {
            xi[u] = Dyadic(sign);
            sign = -sign;
            u = parent[u];
        }
        basis.push_back(std::move(xi));
    }
    return basis;
}

LoopTree random_loop_tree(std::mt19937_64& rng, int max_vertices) {
    if (max_vertices < 1) throw std::invalid_argument("need room for at least one vertex");
    std::uniform_int_distribution<int> count(1, max_vertices), coin(0, 1);
    LoopTree t;
    int n = count(rng);
    t.parent.resize(n);
    t.external.assign(n, false);
    t.parent[0] = -1;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        t.parent[v] = pick(rng);
    }
    t.root_loop = coin(rng) == 1;
    for (int v = 0; v < n; ++v)
        if (t.is_leaf(v)) t.external[v] = coin(rng) == 1;
    if (t.free_leaf_count() == 0) {
        for (int v = 0; v < n; ++v)
            if (t.is_leaf(v)) {
                t.external[v] = false;
                break;
            }
    }
    return t;
}

}  // namespace kergrad
