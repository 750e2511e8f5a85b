#pragma once
#include "kergrad/dyadic.hpp"
#include "kergrad/group.hpp"
#include <map>

namespace kergrad {

// Element of the group ring with dyadic coefficients. Dyadic coefficients are
// enough for everything here and reduce exactly into any accepted field.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(GroupSpec spec) : spec_(std::move(spec)) {}
    GroupRingElement(GroupSpec spec, const GroupElement& g, Dyadic c = Dyadic(1));

    const GroupSpec& spec() const { return spec_; }
    const std::map<GroupElement, Dyadic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }
    Dyadic coeff(const GroupElement& g) const;
    void add_term(const GroupElement& g, const Dyadic& c);

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    GroupRingElement scaled(const Dyadic& c) const;

    // True when every support element lies in the abelian subgroup A.
    bool supported_on_abelian_part() const;

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    GroupSpec spec_;
    std::map<GroupElement, Dyadic> terms_;
};

// Matrix over the group ring; all entries share one GroupSpec.
class GroupRingMatrix {
public:
    GroupRingMatrix(GroupSpec spec, int rows, int cols);

    const GroupSpec& spec() const { return spec_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GroupRingElement& at(int r, int c);
    const GroupRingElement& at(int r, int c) const;

    static GroupRingMatrix from_element(const GroupRingElement& e); // 1 x 1

private:
    GroupSpec spec_;
    int rows_, cols_;
    std::vector<GroupRingElement> data_;
};

// Left regular representation of the finite factor (finite bits + automorphisms):
// rewrites T over the full group as a lambda-indexed block matrix over the group
// without finite bits or automorphisms. Block entry ((i,v),(j,u)) collects the
// shift-lamp parts of the terms of T_ij whose finite factor maps lambda_u to
// lambda_v. For any box with full finite part the compressions of T and of the
// expansion are the same matrix up to basis relabeling, so kernel dimensions
// agree box by box.
GroupRingMatrix regular_rep_expand(const GroupRingMatrix& T);

// Index of a finite-factor element (fin mask, aut) in the enumeration used by
// regular_rep_expand: sorted by mask first, automorphism second.
int lambda_index(const GroupSpec& spec, uint32_t fin, int aut);

// Doubling trick: extend the group spec by one fresh finite bit w fixed by all
// automorphisms and form S = I (1-w)/2 + T (1+w)/2. Requires rows >= cols so
// the identity block is injective after compression; then the kernel of the
// compression of S over box x {1,w} matches the kernel of the compression of T
// over the original box, exactly and box by box.
GroupRingMatrix halving_construct(const GroupRingMatrix& T);

// The same element viewed over an extended spec (more finite bits / tracks).
GroupRingElement extend_spec(const GroupRingElement& e, const GroupSpec& bigger);

} // namespace kergrad
