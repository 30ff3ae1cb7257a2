#ifndef QFORGE_TRIVARIATE_HPP
#define QFORGE_TRIVARIATE_HPP

#include "qforge/mpoly.hpp"
#include "qforge/series.hpp"

namespace qforge {

// The trivariate family
//   F_n(x, y, z) = (-1)^n q^(-n(n-1)/2)
//       sum_k qbinom(n, k) (-1)^k q^(k(k-1)/2) P_{n-k}(y, x) z^k.
MultiPoly F_poly(int n, const MultiPoly& x, const MultiPoly& y,
                 const MultiPoly& z);

// Generating function (x t; q)oo (z t; q)oo / (y t; q)oo, whose t^n
// coefficient is F_n (-1)^n q^(n(n-1)/2) / (q; q)_n.
TruncSeries F_gf(int order, const MultiPoly& x, const MultiPoly& y,
                 const MultiPoly& z);

// Hahn-type member psi_n(a; x, y) = F_n(x, a x, y).
MultiPoly psi_poly(int n, const MultiPoly& a, const MultiPoly& x,
                   const MultiPoly& y);

// Two closely related q-difference operators on polynomials in x, y, z.
// The residual of the second variant vanishes on every F_n; the first
// (which carries an extra factor of z on one shift) does not, and the
// verifier records that separation.
enum class QDiffVariant { theorem1 = 1, theorem2 = 2 };

MultiPoly qdiff_residual(const MultiPoly& f, QDiffVariant variant);

}  // namespace qforge

#endif  // QFORGE_TRIVARIATE_HPP
