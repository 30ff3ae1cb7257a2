#ifndef QFORGE_SERIES_HPP
#define QFORGE_SERIES_HPP

#include <vector>

#include "qforge/mpoly.hpp"

namespace qforge {

// Truncated formal power series in the auxiliary variable t.  Coefficients
// 0..order are exact; nothing is known past the order.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    TruncSeries(int order, const MultiPoly& constant_term);
    static TruncSeries one(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const MultiPoly& coeff(int k) const;
    void set_coeff(int k, MultiPoly value);
    TruncSeries truncated(int new_order) const;

    TruncSeries operator-() const;
    TruncSeries scaled(const QRational& c) const;

    // Binary operations truncate to the shorter order.
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    bool operator==(const TruncSeries&) const = default;

    // Multiplicative inverse; the constant term must be a nonzero scalar.
    TruncSeries inverse() const;

    // "1 + (x - y)*t + ... + O(t^5)"
    std::string str() const;

private:
    std::vector<MultiPoly> c_;
};

// Rectangular truncation of a double series in u and t.
class BiTruncSeries {
public:
    BiTruncSeries(int order_u, int order_t);

    int order_u() const { return static_cast<int>(c_.size()) - 1; }
    int order_t() const { return static_cast<int>(c_[0].size()) - 1; }
    const MultiPoly& entry(int i, int j) const;
    void set_entry(int i, int j, MultiPoly value);
    bool operator==(const BiTruncSeries&) const = default;

private:
    std::vector<std::vector<MultiPoly>> c_;
};

// (c t; q)_infinity truncated at t^order: coefficient k is
// (-1)^k q^(k(k-1)/2) c^k / (q; q)_k.
TruncSeries pochhammer_product_series(const MultiPoly& c, int order);

// 1 / (c t; q)_infinity truncated at t^order: coefficient k is
// c^k / (q; q)_k.
TruncSeries euler_inv_series(const MultiPoly& c, int order);

// Image of sum_j F(j) (u + t)_q^j / (q; q)_j on the (order_u, order_t)
// rectangle: entry (p, s) is F(p + s) q^(s(s-1)/2) / ((q;q)_p (q;q)_s).
// seq must supply F(0) .. F(order_u + order_t).
BiTruncSeries jhc_substitute(const std::vector<MultiPoly>& seq, int order_u,
                             int order_t);

}  // namespace qforge

#endif  // QFORGE_SERIES_HPP
