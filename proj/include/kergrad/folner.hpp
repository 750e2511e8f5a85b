#pragma once
#include "kergrad/group_ring.hpp"
#include "kergrad/matrix.hpp"
#include <string>

namespace kergrad {

// Box in the group: per track a shift interval [lo, hi) and a finite window of
// lamp sites pinned to the moving frame, plus the whole finite factor. The
// realized set is
//   B = { x * g : g has shifts inside the intervals and any automorphism,
//         x has lamps inside (window + shift of g) and any finite mask }.
// Membership needs no enumeration, so largeness only matters where a basis is
// actually materialized.
struct FolnerBox {
    GroupSpec spec;
    std::vector<std::pair<int64_t, int64_t>> intervals;
    std::vector<std::vector<int64_t>> windows;

    FolnerBox(GroupSpec s, std::vector<std::pair<int64_t, int64_t>> iv,
              std::vector<std::vector<int64_t>> win);

    bool contains(const GroupElement& g) const;
    mpz_class size() const;
    std::vector<GroupElement> enumerate(size_t cap = size_t(1) << 22) const;
    std::string label() const; // per track "<interval length>x<window size>", joined by ';'
};

// Interval [0, n) with window {-m, ..., -1} on every track. Anchoring the
// window strictly behind the frame keeps the truncation pattern of the bonds
// uniform along the interval, which is what makes successive estimates settle
// instead of oscillating.
FolnerBox standard_box(const GroupSpec& spec, int64_t n, int64_t m);

// |S.B \ B| / |B| where S collects the support elements of all entries of T.
mpq_class boundary_ratio(const GroupRingMatrix& T, const FolnerBox& box);

// Compression pi_B T pi_B as a matrix over k[B]^cols -> k[B]^rows in the
// sorted basis of B; entry ((i,h),(j,g)) is the T_ij coefficient at h g^-1.
ExactMatrix compression_matrix(const GroupRingMatrix& T, const FolnerBox& box,
                               const FieldSpec& field);

// Same compression over an explicit basis list (order preserved).
ExactMatrix compress(const GroupRingMatrix& T, const std::vector<GroupElement>& basis,
                     const FieldSpec& field);

struct BoxResult {
    std::string label;
    int64_t kernel_dim = 0;
    mpz_class box_size;
    mpq_class estimate; // kernel_dim / |B|
    mpq_class eps;      // boundary ratio
};

// Kernel dimension per box size along a schedule of boxes. Boxes are
// independent, so they run on up to KERGRAD_WORKERS threads (default 1,
// explicit workers argument overrides the environment).
std::vector<BoxResult> gradient_estimate(const GroupRingMatrix& T,
                                         const std::vector<FolnerBox>& boxes,
                                         const FieldSpec& field, int workers = 0);

// The box ladder used for the lamplighter acceptance run:
// (2,2) ... (8,8) growing both parameters, then (9,8), (10,8).
std::vector<std::pair<int64_t, int64_t>> default_schedule();

} // namespace kergrad
