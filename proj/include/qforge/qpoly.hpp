#ifndef QFORGE_QPOLY_HPP
#define QFORGE_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "qforge/bigrat.hpp"

namespace qforge {

// Univariate polynomial in q with BigRational coefficients.  Terms are kept
// sorted by ascending degree and never include a zero coefficient, so the
// defaulted operator== is coefficientwise equality.
class QPolynomial {
public:
    using Term = std::pair<int, BigRational>;

    QPolynomial() = default;  // zero polynomial

    static QPolynomial constant(const BigRational& c);
    static QPolynomial q_power(int degree);
    // Accepts unsorted input and duplicate degrees; merges and drops zeros.
    static QPolynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_[0].first == 0 && t_[0].second.is_one();
    }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_[0].first == 0);
    }
    bool is_single_term() const { return t_.size() == 1; }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return t_.empty() ? -1 : t_.back().first; }
    // Least degree with a nonzero coefficient (0 for the zero polynomial).
    int low_degree() const { return t_.empty() ? 0 : t_.front().first; }

    const BigRational& leading() const;
    BigRational coeff(int degree) const;
    const std::vector<Term>& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    QPolynomial operator-() const;
    QPolynomial scaled(const BigRational& c) const;
    QPolynomial shifted(int degrees) const;  // multiply by q^degrees
    QPolynomial monic() const;
    BigRational eval(const BigRational& q0) const;

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    bool operator==(const QPolynomial&) const = default;

    // Quotient of an exact division.  Throws InvalidArgument when b does not
    // divide a; callers use this only where divisibility is a theorem.
    static QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b);

    // Canonical text form, descending degree: "q^2 - 2*q + 1".
    std::string str() const;

private:
    std::vector<Term> t_;
};

// Monic greatest common divisor in Q[q]; gcd(0, 0) = 0.
QPolynomial poly_gcd(const QPolynomial& a, const QPolynomial& b);

}  // namespace qforge

#endif  // QFORGE_QPOLY_HPP
