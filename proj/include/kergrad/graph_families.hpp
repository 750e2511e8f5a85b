#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kergrad/labeled_graph.hpp"

namespace kergrad {

// Two chains A_1..A_k and B_1..B_k closed into a loop, doubling labels along
// A.  Self-loops everywhere.  k = 1 degenerates to a two-vertex loop with the
// doubling on the connecting edge.
LabeledGraph family_g1(int k);
// Chains C_1..C_l and D_1..D_l with rungs C_j -> D_j and a sink F fed by D_l.
// Self-loops everywhere except F.
LabeledGraph family_g2(int l);
// The two previous patterns coupled through a source I: the A/B loop feeds C,
// I feeds A_1 and D_1, and D_l drains into the sink F.  Self-loops everywhere
// except I and F.
LabeledGraph family_g3(int k, int l);
// Path on k vertices, both directions labeled 2, no self-loops.
LabeledGraph path_graph(int k);

// Kernel dimensions in closed form.
int64_t family_g1_kernel(int k, const FieldSpec& field);
int64_t family_g2_kernel(int l, const FieldSpec& field);
int64_t family_g3_kernel(int k, int l, const FieldSpec& field);
int64_t path_kernel(int k);

// Rooted tree whose matrix has edges child -> parent (label 1), self-loops at
// every internal vertex, at the root exactly when root_loop is set, and at a
// leaf exactly when that leaf is marked external.  The companion matrix is
// zero, except for a single (root, root) entry 1 when root_loop is set.
struct LoopTree {
    std::vector<int> parent;     // parent[0] == -1; parent[v] < v otherwise
    std::vector<bool> external;  // consulted only at leaves
    bool root_loop = false;

    int size() const { return static_cast<int>(parent.size()); }
    bool is_leaf(int v) const;
    // Leaves without an external loop; the free parameters of the kernel.
    int free_leaf_count() const;

    ExactMatrix alpha_matrix(const FieldSpec& field) const;
    ExactMatrix beta_matrix(const FieldSpec& field) const;
    int64_t joint_dim(const FieldSpec& field) const;
    // free_leaf_count() - root_loop; needs at least one free leaf.
    int64_t expected_joint() const;

    // One alternating-sign vector per free leaf, supported on its path to the
    // root; a basis of the alpha kernel when root_loop is set and the root
    // has a child.
    std::vector<std::vector<Dyadic>> xi_basis() const;
};

LoopTree random_loop_tree(std::mt19937_64& rng, int max_vertices);

}  // namespace kergrad
