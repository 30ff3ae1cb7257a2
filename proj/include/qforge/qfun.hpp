#ifndef QFORGE_QFUN_HPP
#define QFORGE_QFUN_HPP

#include <vector>

#include "qforge/mpoly.hpp"
#include "qforge/series.hpp"

namespace qforge {

// n(n-1)/2; exact for negative n as well.
long long binom2(long long n);

// (q; q)_n.
QRational qq_factorial(int n);

// Gaussian binomial coefficient (q; q)_n / ((q; q)_k (q; q)_{n-k}),
// computed by interleaved exact division so every intermediate value is a
// polynomial.  Requires 0 <= k <= n.
QRational qbinom(int n, int k);

// (a; q)_n = prod_{j<n} (1 - a q^j) for a multivariate argument.
MultiPoly qpochhammer(const MultiPoly& a, int n);

// Cauchy polynomial P_n(x, y) = (x - y)(x - qy) ... (x - q^{n-1} y).
MultiPoly cauchy_P(int n, const MultiPoly& x, const MultiPoly& y);

// n-th power of the q-addition x (+) y:
// sum_k qbinom(n, k) q^(k(k-1)/2) x^{n-k} y^k, which equals P_n(x, -y).
MultiPoly q_add_pow(int n, const MultiPoly& x, const MultiPoly& y);

// e_q(c t) = 1 / (c t; q)_infinity, truncated.
TruncSeries eq_series(const MultiPoly& c, int order);

// E_q(c t) = (-c t; q)_infinity, truncated.
TruncSeries Eq_series(const MultiPoly& c, int order);

// Basic hypergeometric series phi(r, s) with argument z; the series
// variable t carries the powers of z.  Lower parameters must be scalars; a
// vanishing lower Pochhammer factor raises DenominatorDegeneracy.
TruncSeries phi_series(const std::vector<MultiPoly>& upper,
                       const std::vector<MultiPoly>& lower, const MultiPoly& z,
                       int order);

// G(m) with sum_m G(m) s^m / (q; q)_m =
// (alpha s; q)oo (beta s; q)oo / ((gamma s; q)oo (delta s; q)oo).
// Every coefficient of G(m) is a polynomial in q (the q-multinomial
// structure guarantees it), and the implementation checks that invariant.
MultiPoly ratio_coeff(int m, const MultiPoly& alpha, const MultiPoly& beta,
                      const MultiPoly& gamma, const MultiPoly& delta);

}  // namespace qforge

#endif  // QFORGE_QFUN_HPP
