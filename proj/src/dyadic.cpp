#include "kergrad/dyadic.hpp"

namespace kergrad {

void Dyadic::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && mpz_even_p(num_.get_mpz_t())) {
        num_ >>= 1;
        --exp_;
    }
}

Dyadic Dyadic::pow2(int k) {
    if (k >= 0) {
        mpz_class n = 1;
        n <<= k;
        return Dyadic(n, 0);
    }
    return Dyadic(mpz_class(1), static_cast<unsigned>(-k));
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.num_ = -num_;
    r.exp_ = exp_;
    return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
    unsigned e = std::max(exp_, o.exp_);
    mpz_class a = num_ << (e - exp_);
    mpz_class b = o.num_ << (e - o.exp_);
    num_ = a + b;
    exp_ = e;
    canonicalize();
    return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) {
    return *this += -o;
}

Dyadic& Dyadic::operator*=(const Dyadic& o) {
    num_ *= o.num_;
    exp_ += o.exp_;
    canonicalize();
    return *this;
}

bool operator<(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    mpz_class x = a.num_ << (e - a.exp_);
    mpz_class y = b.num_ << (e - b.exp_);
    return x < y;
}

mpq_class Dyadic::to_rational() const {
    mpz_class den = 1;
    den <<= exp_;
    mpq_class q(num_, den);
    q.canonicalize();
    return q;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.get_str();
    return num_.get_str() + "/2^" + std::to_string(exp_);
}

} // namespace kergrad
