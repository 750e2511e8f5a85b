#pragma once

#include "kergrad/dyadic.hpp"
#include "kergrad/field.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace kergrad {

// Multiplicative data of 2 modulo an odd prime: its order, the representative
// of each power of 2 inside {2, ..., p+1} (so residue 1 is written p+1), and
// the least exponent realizing each representative.
struct CharData {
    uint64_t p = 0;
    int ord2 = 0;
    std::vector<int64_t> L;    // ascending representatives
    std::map<int64_t, int> r;  // representative -> least exponent, r(p+1) = 0
};

// Throws std::invalid_argument unless p is an odd prime.
CharData char_data(uint64_t p);

// Two-sided enclosure of a series value; width() is the declared tail bound.
struct ValueBracket {
    mpq_class lower;
    mpq_class upper;
    mpq_class width() const { return upper - lower; }
};

// Characteristic-p gradient value in closed form:
//   47/64 + (1/128)/(2^ord2 - 1)
//         + (1/64) (2^p/(2^p-1)) (2^ord2/(2^ord2-1)) sum_{x in L} 2^-(x+r(x)),
// optionally scaled by 1344, the group order that converts the normalized
// value into the headline one.
mpq_class eval_thm13(uint64_t p, bool with_1344 = false);

// Partial sums of 1/64 - (1/8) sum_{k>=1} 2^-(k^2+4k+6); the bracket charges
// the whole remaining tail below the partial sum.
ValueBracket eval_thm12_partial(int kmax);

// 1/64 - (1/256) sum_{i in sigma} 2^-i for a finite set of naturals;
// strictly decreasing under set inclusion.  Throws std::invalid_argument on
// negative or repeated entries.
Dyadic eval_sigma(const std::vector<int64_t>& sigma);

// Truncated three-family series over GF(p):
//   45/64 + sum_k 2^-k/64 dim1(k) + sum_l 2^-l/64 + sum_{k,l} 2^-(k+l)/64 dim3(k,l)
// where dim1, dim3 are the closed-form kernel dimensions of the first and
// third graph family (the second family always contributes 1).  The upper
// bound adds exact geometric tails with the kernel caps 1 and 2.
ValueBracket eval_thm58_series(uint64_t p, int kmax, int lmax);

// Partial sums of 47/64 + (1/64) sum_{k>=1} 2^-(k+2^k), the characteristic-0
// limit of the prime values above; tail bound twice the first omitted term.
// kmax is capped at 24 (the denominators double in size with each term).
ValueBracket eval_q_gradient_partial(int kmax);

// Masses of the third graph family, as printed and with the /64 correction;
// only the corrected one fits into a probability series.
mpq_class g3_mass_verbatim(int k, int l);
mpq_class g3_mass_corrected(int k, int l);

// Truncated total mass of the bulk plus the three families under either mass
// convention: corrected truncations approach 1 from below, the verbatim ones
// overshoot 1.
mpq_class total_mass(int kmax, int lmax, bool corrected);

}  // namespace kergrad
