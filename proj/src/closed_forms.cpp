#include "kergrad/closed_forms.hpp"

#include "kergrad/graph_families.hpp"

#include <set>
#include <stdexcept>

namespace kergrad {

namespace {

mpq_class pow2_inv(int64_t e) {
    return mpq_class(mpz_class(1), mpz_class(1) << e);
}

}  // namespace

CharData char_data(uint64_t p) {
    if (p < 3 || p % 2 == 0 || p >= (uint64_t(1) << 31) || !is_prime_u64(p))
        throw std::invalid_argument("need an odd prime below 2^31");
    CharData cd;
    cd.p = p;
    cd.r[int64_t(p) + 1] = 0;  // residue 1 is represented by p + 1
    uint64_t v = 1;
    int r = 0;
    do {
        v = (v * 2) % p;
        ++r;
        if (v != 1) cd.r.emplace(int64_t(v), r);  // first visit = least exponent
    } while (v != 1);
    cd.ord2 = r;
    for (const auto& [x, rx] : cd.r) {
        (void)rx;
        cd.L.push_back(x);
    }
    return cd;
}

mpq_class eval_thm13(uint64_t p, bool with_1344) {
    if (p > 65536) throw std::invalid_argument("prime too large for exact evaluation");
    CharData cd = char_data(p);
    mpq_class sum = 0;
    for (const auto& [x, rx] : cd.r) sum += pow2_inv(x + rx);

    mpz_class two_p = mpz_class(1) << p;
    mpz_class two_o = mpz_class(1) << cd.ord2;
    mpq_class value = mpq_class(47, 64);
    value += mpq_class(1, 128) / mpq_class(two_o - 1);
    value += mpq_class(1, 64) * mpq_class(two_p, two_p - 1) * mpq_class(two_o, two_o - 1) * sum;
    if (with_1344) value *= 1344;
    return value;
}

ValueBracket eval_thm12_partial(int kmax) {
    if (kmax < 0 || kmax > 1000) throw std::invalid_argument("truncation out of range");
    mpq_class partial(1, 64);
    for (int64_t k = 1; k <= kmax; ++k)
        partial -= mpq_class(1, 8) * pow2_inv(k * k + 4 * k + 6);
    int64_t n = kmax + 1;
    mpq_class tail = mpq_class(1, 8) * pow2_inv(n * n + 4 * n + 5);
    return {partial - tail, partial};
}

Dyadic eval_sigma(const std::vector<int64_t>& sigma) {
    Dyadic value(mpz_class(1), 6);
    std::set<int64_t> seen;
    for (int64_t i : sigma) {
        if (i < 0 || i >= (int64_t(1) << 20)) throw std::invalid_argument("entry out of range");
        if (!seen.insert(i).second) throw std::invalid_argument("repeated entry");
        value = value - Dyadic(mpz_class(1), unsigned(8 + i));
    }
    return value;
}

ValueBracket eval_thm58_series(uint64_t p, int kmax, int lmax) {
    if (kmax < 1 || kmax > 4096 || lmax < 1 || lmax > 4096)
        throw std::invalid_argument("cutoffs out of range");
    FieldSpec field = FieldSpec::gf(p);

    mpq_class lower(45, 64);
    for (int k = 1; k <= kmax; ++k)
        lower += mpq_class(family_g1_kernel(k, field), 64) * pow2_inv(k);
    for (int l = 1; l <= lmax; ++l) lower += mpq_class(1, 64) * pow2_inv(l);
    for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= lmax; ++l)
            lower += mpq_class(family_g3_kernel(k, l, field), 64) * pow2_inv(k + l);

    // Kernel caps 1, 1, 2 on the three families give exact geometric tails.
    mpq_class tail = mpq_class(1, 64) * pow2_inv(kmax);
    tail += mpq_class(1, 64) * pow2_inv(lmax);
    tail += mpq_class(2, 64) * (pow2_inv(kmax) + (1 - pow2_inv(kmax)) * pow2_inv(lmax));
    return {lower, lower + tail};
}

ValueBracket eval_q_gradient_partial(int kmax) {
    if (kmax < 0 || kmax > 24) throw std::invalid_argument("truncation out of range");
    mpq_class partial(47, 64);
    for (int64_t k = 1; k <= kmax; ++k)
        partial += mpq_class(1, 64) * pow2_inv(k + (int64_t(1) << k));
    int64_t n = kmax + 1;
    mpq_class tail = mpq_class(1, 32) * pow2_inv(n + (int64_t(1) << n));
    return {partial, partial + tail};
}

mpq_class g3_mass_verbatim(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("family indices start at 1");
    return mpq_class(2 * k + 2 * l + 2, 1) * pow2_inv(k + l);
}

mpq_class g3_mass_corrected(int k, int l) {
    return g3_mass_verbatim(k, l) / 64;
}

mpq_class total_mass(int kmax, int lmax, bool corrected) {
    if (kmax < 0 || kmax > 4096 || lmax < 0 || lmax > 4096)
        throw std::invalid_argument("cutoffs out of range");
    mpq_class total(45, 64);
    for (int k = 1; k <= kmax; ++k) total += mpq_class(2 * k, 64) * pow2_inv(k);
    for (int l = 1; l <= lmax; ++l) total += mpq_class(2 * l + 1, 64) * pow2_inv(l);
    for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= lmax; ++l)
            total += corrected ? g3_mass_corrected(k, l) : g3_mass_verbatim(k, l);
    return total;
}

}  // namespace kergrad
