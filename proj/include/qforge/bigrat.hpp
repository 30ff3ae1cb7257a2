#ifndef QFORGE_BIGRAT_HPP
#define QFORGE_BIGRAT_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qforge/error.hpp"

namespace qforge {

using BigInt = mpz_class;

// Arbitrary-precision rational number.  The canonical form (coprime
// numerator and denominator, denominator positive) is maintained by
// construction, so structural equality is mathematical equality.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& n) : v_(n) {}  // NOLINT
    BigRational(long n, long d) : BigRational(BigInt(n), BigInt(d)) {}
    BigRational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw DivisionByZero("BigRational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational abs() const { return sign() < 0 ? -*this : *this; }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw DivisionByZero("BigRational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ + b.v_));
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ - b.v_));
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ * b.v_));
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw DivisionByZero("BigRational: division by zero");
        return BigRational(mpq_class(a.v_ / b.v_));
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) {
        return a.v_ != b.v_;
    }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.v_ < b.v_;
    }
    friend bool operator<=(const BigRational& a, const BigRational& b) {
        return a.v_ <= b.v_;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) {
        return a.v_ > b.v_;
    }
    friend bool operator>=(const BigRational& a, const BigRational& b) {
        return a.v_ >= b.v_;
    }

    BigRational pow(long e) const {
        if (e == 0) return BigRational(1);
        if (e < 0) {
            if (is_zero())
                throw DivisionByZero("BigRational: zero to a negative power");
            return (BigRational(1) / *this).pow(-e);
        }
        BigInt n;
        BigInt d;
        const BigInt base_num = v_.get_num();
        const BigInt base_den = v_.get_den();
        mpz_pow_ui(n.get_mpz_t(), base_num.get_mpz_t(),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), base_den.get_mpz_t(),
                   static_cast<unsigned long>(e));
        return BigRational(n, d);
    }

    // "7" or "-3/4"; matches mpq_get_str in base 10.
    std::string str() const { return v_.get_str(); }

private:
    explicit BigRational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

}  // namespace qforge

#endif  // QFORGE_BIGRAT_HPP
