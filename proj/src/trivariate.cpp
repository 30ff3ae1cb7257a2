#include "qforge/trivariate.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "qforge/error.hpp"
#include "qforge/qfun.hpp"

namespace qforge {

MultiPoly F_poly(int n, const MultiPoly& x, const MultiPoly& y,
                 const MultiPoly& z) {
    if (n < 0) throw InvalidArgument("F_poly: negative index");
    using Key = std::tuple<int, std::string, std::string, std::string>;
    static std::map<Key, MultiPoly> cache;
    static std::mutex cache_mutex;
    const Key key{n, x.str(), y.str(), z.str()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    MultiPoly out;
    MultiPoly zp = MultiPoly::integer(1);
    for (int k = 0; k <= n; ++k) {
        const QRational c = qbinom(n, k) *
                            QRational(BigRational(k % 2 == 0 ? 1 : -1)) *
                            q_power(static_cast<int>(binom2(k)));
        out += (cauchy_P(n - k, y, x) * zp).scaled(c);
        if (k < n) zp = zp * z;
    }
    out = out.scaled(QRational(BigRational(n % 2 == 0 ? 1 : -1)) *
                     q_power(static_cast<int>(-binom2(n))));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

TruncSeries F_gf(int order, const MultiPoly& x, const MultiPoly& y,
                 const MultiPoly& z) {
    return pochhammer_product_series(x, order) *
           pochhammer_product_series(z, order) * euler_inv_series(y, order);
}

MultiPoly psi_poly(int n, const MultiPoly& a, const MultiPoly& x,
                   const MultiPoly& y) {
    return F_poly(n, x, a * x, y);
}

MultiPoly qdiff_residual(const MultiPoly& f, QDiffVariant variant) {
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        for (int i = 0; i < kVariableCount; ++i) {
            const Variable v = static_cast<Variable>(i);
            if (m.e[i] != 0 && v != Variable::x && v != Variable::y &&
                v != Variable::z) {
                throw InvalidArgument(
                    "qdiff_residual: argument must involve only x, y, z");
            }
        }
    }
    const MultiPoly X = MultiPoly::variable(Variable::x);
    const MultiPoly Y = MultiPoly::variable(Variable::y);
    const MultiPoly Z = MultiPoly::variable(Variable::z);
    const MultiPoly fz = f.scale_substitute(
        {{Variable::z, {q_power(1), Variable::z}}});
    const MultiPoly fxz =
        f.scale_substitute({{Variable::x, {q_power(-1), Variable::x}},
                            {Variable::z, {q_power(1), Variable::z}}});
    const MultiPoly fyz =
        f.scale_substitute({{Variable::y, {q_power(1), Variable::y}},
                            {Variable::z, {q_power(1), Variable::z}}});
    const MultiPoly lead = X.scaled(q_power(-1)) - Y;
    const MultiPoly left = lead * (f - fz);
    const MultiPoly inner =
        variant == QDiffVariant::theorem1 ? fxz - Z * fyz : fxz - fyz;
    return left - Z * inner;
}

}  // namespace qforge
