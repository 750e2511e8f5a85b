#pragma once
#include "kergrad/dyadic.hpp"
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kergrad {

// Coefficient field: the rationals (p == 0) or GF(p) for an odd prime p < 2^31.
// Characteristic two is rejected everywhere; the whole pipeline needs 2 invertible.
struct FieldSpec {
    uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec gf(uint64_t p); // throws std::invalid_argument unless p is an odd prime < 2^31

    bool is_rational() const { return p == 0; }
    uint64_t characteristic() const { return p; }
    std::string str() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime_u64(uint64_t n);

// Modular helpers, valid for moduli < 2^31.
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod(uint64_t a, uint64_t p); // a != 0 mod p

// A field element. For GF(p) the value is the residue in [0, p).
class Scalar {
public:
    Scalar() = default;
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long v);
    static Scalar from_rational(mpq_class q);             // rationals only
    static Scalar from_residue(const FieldSpec& f, uint64_t r);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    const mpq_class& rational() const { return rat_; }    // valid iff field is rational
    uint64_t residue() const { return res_; }             // valid iff field is GF(p)

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    Scalar inverse() const; // throws std::domain_error on zero

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.rat_ == b.rat_ && a.res_ == b.res_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    FieldSpec field_;
    mpq_class rat_ = 0;
    uint64_t res_ = 0;
};

// Image of a dyadic rational in the field; 2 is invertible in every accepted field.
Scalar reduce_mod(const Dyadic& d, const FieldSpec& f);

} // namespace kergrad
