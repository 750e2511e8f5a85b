#include "kergrad/field.hpp"

namespace kergrad {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return (a * b) % p; // a, b < 2^31 so the product fits in 64 bits
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("invmod: zero");
    return powmod(a, p - 2, p);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin for n < 3.2e18 with these witnesses.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        // n < 2^32 here, so 128-bit products are unnecessary only if n < 2^31; use __int128 to be safe
        auto mm = [&](uint64_t x, uint64_t y) {
            return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % n);
        };
        uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mm(x, base);
            base = mm(base, base);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mm(x, x);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::gf(uint64_t p) {
    if (p == 2) throw std::invalid_argument("characteristic two is not supported");
    if (p < 3 || p >= (1ull << 31) || !is_prime_u64(p))
        throw std::invalid_argument("field order must be an odd prime below 2^31");
    return FieldSpec{p};
}

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) {
    return from_int(f, 1);
}

Scalar Scalar::from_int(const FieldSpec& f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.rat_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        s.res_ = static_cast<uint64_t>(m);
    }
    return s;
}

Scalar Scalar::from_rational(mpq_class q) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    q.canonicalize();
    s.rat_ = std::move(q);
    return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, uint64_t r) {
    if (f.is_rational()) throw std::invalid_argument("from_residue needs a finite field");
    Scalar s;
    s.field_ = f;
    s.res_ = r % f.p;
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational()) s.rat_ = -s.rat_;
    else if (s.res_ != 0) s.res_ = field_.p - s.res_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
    if (field_.is_rational()) rat_ += o.rat_;
    else res_ = (res_ + o.res_) % field_.p;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
    if (field_.is_rational()) rat_ *= o.rat_;
    else res_ = mulmod(res_, o.res_, field_.p);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational()) s.rat_ = 1 / rat_;
    else s.res_ = invmod(res_, field_.p);
    return s;
}

std::string Scalar::str() const {
    return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

Scalar reduce_mod(const Dyadic& d, const FieldSpec& f) {
    if (f.is_rational()) return Scalar::from_rational(d.to_rational());
    mpz_class m = d.numerator() % static_cast<unsigned long>(f.p);
    if (m < 0) m += static_cast<unsigned long>(f.p);
    uint64_t num = m.get_ui();
    uint64_t inv2 = invmod(2, f.p);
    uint64_t r = mulmod(num, powmod(inv2, d.log2_denominator(), f.p), f.p);
    return Scalar::from_residue(f, r);
}

} // namespace kergrad
