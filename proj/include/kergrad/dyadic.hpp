#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <utility>

namespace kergrad {

// Rational number whose denominator is a power of two: num / 2^exp.
// Canonical form: num odd, or num == 0 with exp == 0.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long n) : num_(n), exp_(0) {}
    Dyadic(mpz_class n, unsigned exp = 0) : num_(std::move(n)), exp_(exp) { canonicalize(); }

    // 2^k for any integer k.
    static Dyadic pow2(int k);

    const mpz_class& numerator() const { return num_; }
    unsigned log2_denominator() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return exp_ == 0 && num_ == 1; }

    Dyadic operator-() const;
    Dyadic& operator+=(const Dyadic& o);
    Dyadic& operator-=(const Dyadic& o);
    Dyadic& operator*=(const Dyadic& o);
    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
    friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b);

    mpq_class to_rational() const;
    double to_double() const { return to_rational().get_d(); }
    std::string str() const;

private:
    mpz_class num_;
    unsigned exp_;
    void canonicalize();
};

} // namespace kergrad
