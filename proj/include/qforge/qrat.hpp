#ifndef QFORGE_QRAT_HPP
#define QFORGE_QRAT_HPP

#include <string>
#include <utility>

#include "qforge/qpoly.hpp"

namespace qforge {

// Element of the field Q(q), stored as num/den with gcd(num, den) = 1 and a
// monic denominator.  The canonical form makes operator== mathematical
// equality and keeps negative powers of q exact: q^-k is 1/q^k.
class QRational {
public:
    QRational() : num_(), den_(QPolynomial::constant(BigRational(1))) {}
    QRational(const QPolynomial& num)  // NOLINT(google-explicit-constructor)
        : num_(num), den_(QPolynomial::constant(BigRational(1))) {}
    QRational(const BigRational& c)  // NOLINT
        : num_(QPolynomial::constant(c)),
          den_(QPolynomial::constant(BigRational(1))) {}
    QRational(QPolynomial num, QPolynomial den);

    static QRational integer(long n) { return QRational(BigRational(n)); }

    const QPolynomial& num() const { return num_; }
    const QPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // Sign of the leading numerator coefficient; the renderer pulls it out
    // front.
    bool negative_leading() const {
        return !num_.is_zero() && num_.leading().sign() < 0;
    }

    QRational operator-() const;
    QRational inverse() const;
    QRational pow(int e) const;

    QRational& operator+=(const QRational& o) { return *this = *this + o; }
    QRational& operator-=(const QRational& o) { return *this = *this - o; }
    QRational& operator*=(const QRational& o) { return *this = *this * o; }
    QRational& operator/=(const QRational& o) { return *this = *this / o; }

    friend QRational operator+(const QRational& a, const QRational& b);
    friend QRational operator-(const QRational& a, const QRational& b);
    friend QRational operator*(const QRational& a, const QRational& b);
    friend QRational operator/(const QRational& a, const QRational& b);
    bool operator==(const QRational&) const = default;

    // Throws EvaluationPole when the denominator vanishes at q0.  Canonical
    // form guarantees the pole is genuine, never removable.
    BigRational eval(const BigRational& q0) const;

    // "q + 1" when the denominator is 1, otherwise "(num)/(den)".
    std::string str() const;

private:
    struct raw_tag {};
    // Trusts that (num, den) is already canonical.
    QRational(QPolynomial num, QPolynomial den, raw_tag)
        : num_(std::move(num)), den_(std::move(den)) {}

    QPolynomial num_;
    QPolynomial den_;
};

// q^exponent as an element of Q(q); the exponent may be negative.
QRational q_power(int exponent);

inline BigRational qrat_eval(const QRational& r, const BigRational& q0) {
    return r.eval(q0);
}

}  // namespace qforge

#endif  // QFORGE_QRAT_HPP
