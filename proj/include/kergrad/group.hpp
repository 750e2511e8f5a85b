#pragma once
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace kergrad {

// Invertible m x m matrix over F2; row i is a bit mask, bit j = entry (i, j).
struct BitMatrix {
    int dim = 0;
    std::vector<uint32_t> row;

    static BitMatrix identity(int m);
    uint32_t apply(uint32_t v) const;         // matrix * vector, vectors as bit masks
    BitMatrix compose(const BitMatrix& o) const; // this * o
    BitMatrix transpose() const;
    BitMatrix inverse() const;                // throws std::invalid_argument if singular
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

// The ambient group: d commuting shift generators, each acting on its own
// two-sided strip of lamp bits, a finite block of m lamp-like bits, and a
// finite group of F2-linear automorphisms of that block. The abelian part A
// consists of the lamp bits and the finite block; shifts translate lamp
// positions and automorphisms act on the finite block.
struct GroupSpec {
    int shift_rank = 0;
    int fin_bits = 0;
    std::vector<BitMatrix> auts; // auts[0] is the identity; closed under composition and inverse

    GroupSpec() { auts.push_back(BitMatrix::identity(0)); }
    GroupSpec(int d, int m, std::vector<BitMatrix> automorphisms = {});

    int aut_count() const { return static_cast<int>(auts.size()); }
    int aut_compose(int a, int b) const { return aut_mul_[a][b]; }   // index of auts[a] * auts[b]
    int aut_inverse(int a) const { return aut_inv_[a]; }
    int lambda_count() const { return aut_count() << fin_bits; }     // size of the finite factor

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.shift_rank == b.shift_rank && a.fin_bits == b.fin_bits && a.auts == b.auts;
    }

private:
    std::vector<std::vector<int>> aut_mul_;
    std::vector<int> aut_inv_;
    void build_tables();
};

// Group element in the normal form (lamps, fin) * (shifts, aut).
struct GroupElement {
    std::vector<int64_t> shifts;                   // size = shift_rank
    std::vector<std::pair<int, int64_t>> lamps;    // sorted, distinct (track, position)
    uint32_t fin = 0;
    int aut = 0;

    bool is_abelian_part() const; // lies in A: no shifts, identity automorphism

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        if (a.shifts != b.shifts) return a.shifts < b.shifts;
        if (a.lamps != b.lamps) return a.lamps < b.lamps;
        if (a.fin != b.fin) return a.fin < b.fin;
        return a.aut < b.aut;
    }
};

GroupElement identity(const GroupSpec& spec);
GroupElement shift_gen(const GroupSpec& spec, int track, int64_t power = 1);
GroupElement lamp_gen(const GroupSpec& spec, int track, int64_t pos);
GroupElement fin_gen(const GroupSpec& spec, int bit);

GroupElement mul(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupSpec& spec, const GroupElement& a);
std::string element_str(const GroupSpec& spec, const GroupElement& g);

void validate_element(const GroupSpec& spec, const GroupElement& g);

} // namespace kergrad
