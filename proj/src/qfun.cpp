#include "qforge/qfun.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "qforge/error.hpp"

namespace qforge {

long long binom2(long long n) { return n * (n - 1) / 2; }

namespace {

std::mutex cache_mutex;

QPolynomial one_minus_q_power(int d) {
    return QPolynomial::from_terms({{0, BigRational(1)}, {d, BigRational(-1)}});
}

}  // namespace

QRational qq_factorial(int n) {
    if (n < 0) throw InvalidArgument("qq_factorial: negative index");
    static std::vector<QRational> cache{QRational(BigRational(1))};
    std::lock_guard<std::mutex> lock(cache_mutex);
    while (static_cast<int>(cache.size()) <= n) {
        const int k = static_cast<int>(cache.size());
        cache.push_back(cache.back() * QRational(one_minus_q_power(k)));
    }
    return cache[static_cast<std::size_t>(n)];
}

QRational qbinom(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw InvalidArgument("qbinom: require 0 <= k <= n");
    static std::map<std::pair<int, int>, QRational> cache;
    const std::pair<int, int> key{n, k};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // Interleaved factors keep every prefix equal to a smaller Gaussian
    // binomial, so each division is exact and no gcd is ever taken.
    const int kk = std::min(k, n - k);
    QPolynomial p = QPolynomial::constant(BigRational(1));
    for (int i = 1; i <= kk; ++i) {
        p = p * one_minus_q_power(n - kk + i);
        p = QPolynomial::exact_div(p, one_minus_q_power(i));
    }
    QRational v{p};
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(v)).first->second;
}

MultiPoly qpochhammer(const MultiPoly& a, int n) {
    if (n < 0) throw InvalidArgument("qpochhammer: negative index");
    MultiPoly out = MultiPoly::integer(1);
    for (int j = 0; j < n; ++j) {
        out = out * (MultiPoly::integer(1) - a.scaled(q_power(j)));
    }
    return out;
}

MultiPoly cauchy_P(int n, const MultiPoly& x, const MultiPoly& y) {
    if (n < 0) throw InvalidArgument("cauchy_P: negative index");
    MultiPoly out = MultiPoly::integer(1);
    for (int k = 0; k < n; ++k) {
        out = out * (x - y.scaled(q_power(k)));
    }
    return out;
}

MultiPoly q_add_pow(int n, const MultiPoly& x, const MultiPoly& y) {
    if (n < 0) throw InvalidArgument("q_add_pow: negative index");
    std::vector<MultiPoly> xp{MultiPoly::integer(1)};
    std::vector<MultiPoly> yp{MultiPoly::integer(1)};
    for (int i = 1; i <= n; ++i) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    MultiPoly out;
    for (int k = 0; k <= n; ++k) {
        const QRational c =
            qbinom(n, k) * q_power(static_cast<int>(binom2(k)));
        out += (xp[static_cast<std::size_t>(n - k)] *
                yp[static_cast<std::size_t>(k)])
                   .scaled(c);
    }
    return out;
}

TruncSeries eq_series(const MultiPoly& c, int order) {
    return euler_inv_series(c, order);
}

TruncSeries Eq_series(const MultiPoly& c, int order) {
    return pochhammer_product_series(-c, order);
}

TruncSeries phi_series(const std::vector<MultiPoly>& upper,
                       const std::vector<MultiPoly>& lower, const MultiPoly& z,
                       int order) {
    if (order < 0) throw InvalidArgument("phi_series: negative order");
    std::vector<QRational> lower_scalar;
    lower_scalar.reserve(lower.size());
    for (const MultiPoly& b : lower) {
        const auto v = b.as_constant();
        if (!v) {
            throw InvalidArgument(
                "phi_series: lower parameters must be scalars");
        }
        lower_scalar.push_back(*v);
    }
    const long long excess = 1 + static_cast<long long>(lower.size()) -
                             static_cast<long long>(upper.size());
    TruncSeries out(order);
    MultiPoly upper_prod = MultiPoly::integer(1);
    QRational lower_prod{BigRational(1)};
    MultiPoly zp = MultiPoly::integer(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            for (const MultiPoly& A : upper) {
                upper_prod =
                    upper_prod *
                    (MultiPoly::integer(1) - A.scaled(q_power(n - 1)));
            }
            for (const QRational& b : lower_scalar) {
                lower_prod *= QRational(BigRational(1)) -
                              b * q_power(n - 1);
            }
            zp = zp * z;
        }
        if (lower_prod.is_zero()) {
            throw DenominatorDegeneracy(
                "phi_series: lower Pochhammer factor vanishes at index " +
                std::to_string(n));
        }
        QRational w = QRational(BigRational((excess * n) % 2 == 0 ? 1 : -1)) *
                      q_power(static_cast<int>(binom2(n) * excess)) /
                      (qq_factorial(n) * lower_prod);
        out.set_coeff(n, (upper_prod * zp).scaled(w));
    }
    return out;
}

MultiPoly ratio_coeff(int m, const MultiPoly& alpha, const MultiPoly& beta,
                      const MultiPoly& gamma, const MultiPoly& delta) {
    if (m < 0) throw InvalidArgument("ratio_coeff: negative index");
    using Key = std::tuple<int, std::string, std::string, std::string,
                           std::string>;
    static std::map<Key, MultiPoly> cache;
    const Key key{m, alpha.str(), beta.str(), gamma.str(), delta.str()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const TruncSeries S = pochhammer_product_series(alpha, m) *
                          pochhammer_product_series(beta, m) *
                          euler_inv_series(gamma, m) *
                          euler_inv_series(delta, m);
    MultiPoly out = S.coeff(m).scaled(qq_factorial(m));
    for (const auto& [mono, c] : out.terms()) {
        (void)mono;
        if (!c.den().is_one()) {
            throw Error("ratio_coeff: kernel coefficient not a polynomial");
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace qforge
