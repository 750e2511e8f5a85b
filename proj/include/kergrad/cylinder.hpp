#pragma once

#include <cstdint>
#include <vector>

#include "kergrad/dyadic.hpp"
#include "kergrad/group.hpp"
#include "kergrad/group_ring.hpp"

namespace kergrad {

// A finite set of coordinates of the character space: lamp sites per track
// plus a subset of the finite bits.  Configurations over a window are packed
// into a uint32_t, one bit per coordinate: track 0 sites in ascending order
// first, then track 1, ..., then the finite bits in ascending order.
struct Window {
    std::vector<std::vector<int64_t>> sites;  // per track, strictly ascending
    std::vector<int> fin_bits;                // strictly ascending subset of [0, m)

    Window() = default;
    Window(const GroupSpec& spec, std::vector<std::vector<int64_t>> s, std::vector<int> f);

    int bit_count() const;
    int site_count() const;
    // Coordinate index of a lamp site, or -1 if absent.
    int site_coord(int track, int64_t pos) const;
    // Coordinate index of a finite bit, or -1 if absent.
    int fin_coord(int bit) const;
    bool contains(const Window& other) const;
    bool operator==(const Window& other) const;

    static Window merged(const Window& a, const Window& b);
};

// A function on the character space depending only on the coordinates of a
// window, tabulated exactly with dyadic values.  Tables are capped at 2^24
// entries.
class CylinderFunction {
public:
    CylinderFunction(GroupSpec spec, Window window, std::vector<Dyadic> table);
    static CylinderFunction constant(const GroupSpec& spec, const Dyadic& value);

    const GroupSpec& spec() const { return spec_; }
    const Window& window() const { return window_; }
    const std::vector<Dyadic>& table() const { return table_; }
    const Dyadic& value(uint32_t config) const { return table_[config]; }

    bool is_zero() const;
    bool is_projection() const;  // every value 0 or 1
    // Mean value over all configurations; for a projection this is the Haar
    // measure of its support.
    Dyadic integral() const;
    Dyadic measure() const;  // integral(), throws unless a projection

    // Same function on a larger window.
    CylinderFunction extended(const Window& bigger) const;
    // Smallest window: coordinates the function does not depend on are
    // dropped.
    CylinderFunction normalized() const;

    friend CylinderFunction operator+(const CylinderFunction& a, const CylinderFunction& b);
    friend CylinderFunction operator-(const CylinderFunction& a, const CylinderFunction& b);
    friend CylinderFunction operator*(const CylinderFunction& a, const CylinderFunction& b);
    CylinderFunction scaled(const Dyadic& c) const;
    // Equality as functions, regardless of window presentation.
    bool operator==(const CylinderFunction& other) const;
    bool operator!=(const CylinderFunction& other) const { return !(*this == other); }

private:
    GroupSpec spec_;
    Window window_;
    std::vector<Dyadic> table_;
};

// Transform of an element supported on the abelian part: the function
// x -> sum_a c_a (-1)^{<a,x>}.  Convolution becomes pointwise product.
CylinderFunction hat(const GroupRingElement& f);

// Inverse transform; hat(unhat(c)) == c and unhat(hat(f)) == f.
GroupRingElement unhat(const CylinderFunction& c);

// Left translation action of an element with no lamp and no finite part:
// shifts relabel lamp sites, a nontrivial automorphism reindexes the finite
// block (the window is first grown to all finite bits).
CylinderFunction act(const GroupElement& gamma, const CylinderFunction& f);

enum class ProjRelation { Below, Orthogonal, Mixed };

// How projection p sits relative to projection q: p*q == p, p*q == 0, or
// neither.
ProjRelation proj_relate(const CylinderFunction& p, const CylinderFunction& q);

// Coarsest partition of unity into cylinder projections such that for every
// phi in phis and every q among the generators (completed by the complement
// of their sum), the translate phi^{-1}.q is a union of parts.  Starts from
// the constant 1 and refines by intersecting; parts are returned normalized.
// The generators must be pairwise orthogonal projections with sum at most 1.
std::vector<CylinderFunction> refine_partition(const std::vector<CylinderFunction>& gens,
                                               const std::vector<GroupElement>& phis);

}  // namespace kergrad
