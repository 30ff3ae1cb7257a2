#ifndef QFORGE_MPOLY_HPP
#define QFORGE_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qforge/qrat.hpp"
#include "qforge/vars.hpp"

namespace qforge {

// Exponent vector over the fixed alphabet.
struct Monomial {
    std::array<std::uint16_t, kVariableCount> e{};

    int total_degree() const {
        int s = 0;
        for (auto v : e) s += v;
        return s;
    }
    int exponent(Variable v) const { return e[static_cast<int>(v)]; }

    static Monomial unit(Variable v, int power = 1);
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial&) const = default;

    // "x^2*y", or "1" for the empty monomial; factors follow alphabet order.
    std::string str() const;
};

// Graded lexicographic order: total degree first, ties broken by the
// exponent vector with the earliest alphabet symbol most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.total_degree();
        const int db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

// Substitution payload for scale_substitute: v -> factor * variable.
using ScaledVariable = std::pair<QRational, Variable>;

// Multivariate polynomial over Q(q) in canonical sparse form: the term map
// never stores a zero coefficient.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, QRational, GrlexLess>;

    MultiPoly() = default;  // zero
    static MultiPoly constant(const QRational& c);
    static MultiPoly integer(long n);
    static MultiPoly variable(Variable v);
    static MultiPoly term(const Monomial& m, const QRational& c);

    bool is_zero() const { return t_.empty(); }
    bool is_single_term() const { return t_.size() == 1; }
    bool is_constant() const;
    // The value when the polynomial is constant (zero included).
    std::optional<QRational> as_constant() const;
    std::size_t term_count() const { return t_.size(); }
    int total_degree() const;  // -1 for zero
    const TermMap& terms() const { return t_; }
    QRational coeff(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly scaled(const QRational& c) const;
    MultiPoly pow(int n) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    bool operator==(const MultiPoly&) const = default;

    // Dilations v -> factor * v.  Every entry must map a variable to a
    // multiple of itself; anything else is InvalidSubstitution.
    MultiPoly scale_substitute(
        const std::map<Variable, ScaledVariable>& subs) const;

    // Evaluate at q = q0 and the given variable assignment.  Throws
    // UnboundVariable when a variable that occurs is missing from the point
    // and EvaluationPole when a coefficient has a pole at q0.
    BigRational eval(const std::map<Variable, BigRational>& point,
                     const BigRational& q0) const;

    // Canonical text form: graded-lex descending terms, signs pulled out of
    // the leading numerator coefficient.
    std::string str() const;

private:
    TermMap t_;
};

}  // namespace qforge

#endif  // QFORGE_MPOLY_HPP
