#include "qforge/qrat.hpp"

#include "qforge/error.hpp"

namespace qforge {

namespace {

QPolynomial poly_pow(const QPolynomial& base, int e) {
    QPolynomial acc = QPolynomial::constant(BigRational(1));
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

}  // namespace

QRational::QRational(QPolynomial num, QPolynomial den) : QRational() {
    if (den.is_zero()) throw DivisionByZero("QRational: zero denominator");
    if (num.is_zero()) return;
    const QPolynomial g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = QPolynomial::exact_div(num, g);
        den = QPolynomial::exact_div(den, g);
    }
    if (!den.leading().is_one()) {
        const BigRational inv_lc = BigRational(1) / den.leading();
        num = num.scaled(inv_lc);
        den = den.scaled(inv_lc);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

QRational QRational::operator-() const {
    return QRational(-num_, den_, raw_tag{});
}

QRational QRational::inverse() const {
    if (is_zero()) throw DivisionByZero("QRational: inverse of zero");
    QPolynomial n = den_;
    QPolynomial d = num_;
    if (!d.leading().is_one()) {
        const BigRational inv_lc = BigRational(1) / d.leading();
        n = n.scaled(inv_lc);
        d = d.scaled(inv_lc);
    }
    return QRational(std::move(n), std::move(d), raw_tag{});
}

QRational QRational::pow(int e) const {
    if (e == 0) return QRational(BigRational(1));
    if (e < 0) return inverse().pow(-e);
    // Powers of a canonical form stay canonical.
    return QRational(poly_pow(num_, e), poly_pow(den_, e), raw_tag{});
}

QRational operator+(const QRational& a, const QRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const QPolynomial g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) {
        QPolynomial num = a.num_ * b.den_ + b.num_ * a.den_;
        if (num.is_zero()) return QRational();
        return QRational(std::move(num), a.den_ * b.den_,
                         QRational::raw_tag{});
    }
    // Henrici's scheme: with coprime cofactors only one small gcd is left to
    // take, and the result needs no further reduction.
    const QPolynomial ad = QPolynomial::exact_div(a.den_, g);
    const QPolynomial bd = QPolynomial::exact_div(b.den_, g);
    QPolynomial t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero()) return QRational();
    const QPolynomial g2 = poly_gcd(t, g);
    if (g2.is_one()) {
        return QRational(std::move(t), a.den_ * bd, QRational::raw_tag{});
    }
    return QRational(QPolynomial::exact_div(t, g2),
                     QPolynomial::exact_div(a.den_, g2) * bd,
                     QRational::raw_tag{});
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
    if (a.is_zero() || b.is_zero()) return QRational();
    const QPolynomial g1 = poly_gcd(a.num_, b.den_);
    const QPolynomial g2 = poly_gcd(b.num_, a.den_);
    QPolynomial num = (g1.is_one() ? a.num_ : QPolynomial::exact_div(a.num_, g1)) *
                      (g2.is_one() ? b.num_ : QPolynomial::exact_div(b.num_, g2));
    QPolynomial den = (g2.is_one() ? a.den_ : QPolynomial::exact_div(a.den_, g2)) *
                      (g1.is_one() ? b.den_ : QPolynomial::exact_div(b.den_, g1));
    return QRational(std::move(num), std::move(den), QRational::raw_tag{});
}

QRational operator/(const QRational& a, const QRational& b) {
    if (b.is_zero()) throw DivisionByZero("QRational: division by zero");
    return a * b.inverse();
}

BigRational QRational::eval(const BigRational& q0) const {
    const BigRational d = den_.eval(q0);
    if (d.is_zero())
        throw EvaluationPole("QRational: pole at q = " + q0.str());
    return num_.eval(q0) / d;
}

std::string QRational::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QRational q_power(int exponent) {
    if (exponent >= 0) return QRational(QPolynomial::q_power(exponent));
    QPolynomial den = QPolynomial::q_power(-exponent);
    return QRational(QPolynomial::constant(BigRational(1)), std::move(den));
}

}  // namespace qforge
