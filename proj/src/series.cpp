#include "qforge/series.hpp"

#include <algorithm>
#include <string>

#include "qforge/error.hpp"
#include "qforge/qfun.hpp"

namespace qforge {

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw InvalidArgument("TruncSeries: negative order");
    c_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(int order, const MultiPoly& constant_term)
    : TruncSeries(order) {
    c_[0] = constant_term;
}

TruncSeries TruncSeries::one(int order) {
    return TruncSeries(order, MultiPoly::integer(1));
}

const MultiPoly& TruncSeries::coeff(int k) const {
    if (k < 0 || k > order()) {
        throw OrderExceeded("TruncSeries: coefficient " + std::to_string(k) +
                            " beyond truncation order " +
                            std::to_string(order()));
    }
    return c_[static_cast<std::size_t>(k)];
}

void TruncSeries::set_coeff(int k, MultiPoly value) {
    if (k < 0 || k > order()) {
        throw OrderExceeded("TruncSeries: coefficient " + std::to_string(k) +
                            " beyond truncation order " +
                            std::to_string(order()));
    }
    c_[static_cast<std::size_t>(k)] = std::move(value);
}

TruncSeries TruncSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw OrderExceeded("TruncSeries: cannot extend truncation order");
    }
    TruncSeries out(new_order);
    for (int k = 0; k <= new_order; ++k) out.c_[k] = c_[k];
    return out;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out(order());
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = -c_[k];
    return out;
}

TruncSeries TruncSeries::scaled(const QRational& c) const {
    TruncSeries out(order());
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k].scaled(c);
    return out;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries out(n);
    for (int k = 0; k <= n; ++k) out.c_[k] = a.c_[k] + b.c_[k];
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return a + (-b);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[j].is_zero()) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

TruncSeries TruncSeries::inverse() const {
    const auto c0 = c_[0].as_constant();
    if (!c0 || c0->is_zero()) {
        throw NonUnitConstantTerm(
            "TruncSeries::inverse: constant term must be a nonzero scalar");
    }
    const QRational inv0 = QRational(BigRational(1)) / *c0;
    TruncSeries out(order());
    out.c_[0] = MultiPoly::constant(inv0);
    for (int n = 1; n <= order(); ++n) {
        MultiPoly s;
        for (int k = 1; k <= n; ++k) s += c_[k] * out.c_[n - k];
        out.c_[n] = (-s).scaled(inv0);
    }
    return out;
}

std::string TruncSeries::str() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string piece;
        const std::string cs = c_[k].str();
        if (k == 0) {
            piece = c_[k].is_single_term() ? cs : "(" + cs + ")";
        } else {
            const std::string tpow =
                (k == 1) ? "t" : "t^" + std::to_string(k);
            if (cs == "1") {
                piece = tpow;
            } else if (c_[k].is_single_term()) {
                piece = cs + "*" + tpow;
            } else {
                piece = "(" + cs + ")*" + tpow;
            }
        }
        if (!out.empty()) out += " + ";
        out += piece;
    }
    if (!out.empty()) out += " + ";
    out += "O(t^" + std::to_string(order() + 1) + ")";
    return out;
}

BiTruncSeries::BiTruncSeries(int order_u, int order_t) {
    if (order_u < 0 || order_t < 0) {
        throw InvalidArgument("BiTruncSeries: negative order");
    }
    c_.assign(static_cast<std::size_t>(order_u) + 1,
              std::vector<MultiPoly>(static_cast<std::size_t>(order_t) + 1));
}

const MultiPoly& BiTruncSeries::entry(int i, int j) const {
    if (i < 0 || i > order_u() || j < 0 || j > order_t()) {
        throw OrderExceeded("BiTruncSeries: entry (" + std::to_string(i) +
                            ", " + std::to_string(j) +
                            ") beyond truncation rectangle");
    }
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void BiTruncSeries::set_entry(int i, int j, MultiPoly value) {
    if (i < 0 || i > order_u() || j < 0 || j > order_t()) {
        throw OrderExceeded("BiTruncSeries: entry (" + std::to_string(i) +
                            ", " + std::to_string(j) +
                            ") beyond truncation rectangle");
    }
    c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        std::move(value);
}

TruncSeries pochhammer_product_series(const MultiPoly& c, int order) {
    TruncSeries out(order);
    MultiPoly p = MultiPoly::integer(1);
    for (int k = 0; k <= order; ++k) {
        const QRational w = QRational(BigRational(k % 2 == 0 ? 1 : -1)) *
                            q_power(static_cast<int>(binom2(k))) /
                            qq_factorial(k);
        out.set_coeff(k, p.scaled(w));
        if (k < order) p = p * c;
    }
    return out;
}

TruncSeries euler_inv_series(const MultiPoly& c, int order) {
    TruncSeries out(order);
    MultiPoly p = MultiPoly::integer(1);
    for (int k = 0; k <= order; ++k) {
        out.set_coeff(k, p.scaled(qq_factorial(k).inverse()));
        if (k < order) p = p * c;
    }
    return out;
}

BiTruncSeries jhc_substitute(const std::vector<MultiPoly>& seq, int order_u,
                             int order_t) {
    if (order_u < 0 || order_t < 0) {
        throw InvalidArgument("jhc_substitute: negative order");
    }
    if (static_cast<int>(seq.size()) < order_u + order_t + 1) {
        throw InsufficientTerms(
            "jhc_substitute: sequence must supply order_u + order_t + 1 "
            "terms, got " +
            std::to_string(seq.size()));
    }
    BiTruncSeries out(order_u, order_t);
    for (int p = 0; p <= order_u; ++p) {
        for (int s = 0; s <= order_t; ++s) {
            const QRational w = q_power(static_cast<int>(binom2(s))) /
                                (qq_factorial(p) * qq_factorial(s));
            out.set_entry(p, s, seq[static_cast<std::size_t>(p + s)].scaled(w));
        }
    }
    return out;
}

}  // namespace qforge
