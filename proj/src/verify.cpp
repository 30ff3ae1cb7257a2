#include "qforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>

#include <json.hpp>

#include "qforge/error.hpp"
#include "qforge/qfun.hpp"
#include "qforge/trivariate.hpp"

namespace qforge {

namespace {

using ojson = nlohmann::ordered_json;

struct Syms {
    MultiPoly x = MultiPoly::variable(Variable::x);
    MultiPoly y = MultiPoly::variable(Variable::y);
    MultiPoly z = MultiPoly::variable(Variable::z);
    MultiPoly xi = MultiPoly::variable(Variable::xi);
    MultiPoly zeta = MultiPoly::variable(Variable::zeta);
    MultiPoly X = MultiPoly::variable(Variable::X);
    MultiPoly Y = MultiPoly::variable(Variable::Y);
    MultiPoly Z = MultiPoly::variable(Variable::Z);
    MultiPoly Om = MultiPoly::variable(Variable::Omega);
    MultiPoly U = MultiPoly::variable(Variable::U);
    MultiPoly a = MultiPoly::variable(Variable::a);
    MultiPoly one = MultiPoly::integer(1);
};

const Syms& S() {
    static const Syms s;
    return s;
}

QRational sign(long e) { return QRational(BigRational(e % 2 == 0 ? 1 : -1)); }

// ----- identity right-hand sides, term by term ----------------------------

MultiPoly thm31_general_term(long k, long l, long n, long r) {
    const long long e = -binom2(n + 1) - r * (n + l + 1) - (k + l) * (n + r);
    const QRational c = qbinom(static_cast<int>(k), static_cast<int>(n)) *
                        qbinom(static_cast<int>(l), static_cast<int>(r)) *
                        sign(n + r) * q_power(static_cast<int>(e));
    return (ratio_coeff(static_cast<int>(n + r), S().y, S().zeta, S().xi,
                        S().z) *
            F_poly(static_cast<int>(k + l - n - r), S().x, S().y, S().z))
        .scaled(c);
}

MultiPoly thm31_l_term(long l, long r) {
    const QRational c = qbinom(static_cast<int>(l), static_cast<int>(r)) *
                        sign(r) *
                        q_power(static_cast<int>(-r * (2 * l + 1)));
    return (ratio_coeff(static_cast<int>(r), S().y, S().zeta, S().xi, S().z) *
            F_poly(static_cast<int>(l - r), S().x, S().y, S().z))
        .scaled(c);
}

MultiPoly cor32_term(long k, long l, long n, long r) {
    const long long e = -binom2(n + 1) - r * (n + l + 1) - (k + l) * (n + r);
    const QRational c = qbinom(static_cast<int>(k), static_cast<int>(n)) *
                        qbinom(static_cast<int>(l), static_cast<int>(r)) *
                        sign(n + r) * q_power(static_cast<int>(e));
    return (cauchy_P(static_cast<int>(n + r), S().xi, S().y) *
            F_poly(static_cast<int>(k + l - n - r), S().x, S().y, S().z))
        .scaled(c);
}

MultiPoly thm4_term(long n, long r, long k, long m) {
    const long long e = binom2(k + 1) + binom2(m + 1) - m * r - n * k;
    const QRational c = qbinom(static_cast<int>(n), static_cast<int>(k)) *
                        qbinom(static_cast<int>(r), static_cast<int>(m)) *
                        sign(k + m) * q_power(static_cast<int>(e));
    const MultiPoly t1 =
        ratio_coeff(static_cast<int>(k), S().zeta, S().y, S().xi, S().z) *
        F_poly(static_cast<int>(n - k), S().x, S().y, S().z);
    const MultiPoly t2 =
        ratio_coeff(static_cast<int>(m), S().U, S().Y, S().Om, S().Z) *
        F_poly(static_cast<int>(r - m), S().X, S().Y, S().Z);
    return (t1 * t2).scaled(c);
}

MultiPoly cor_psi_term(long k, long l, long n, long r) {
    const long long e =
        binom2(n + r) - binom2(n + 1) - r * (n + l + 1) - (k + l) * (n + r);
    const QRational c = qbinom(static_cast<int>(k), static_cast<int>(n)) *
                        qbinom(static_cast<int>(l), static_cast<int>(r)) *
                        q_power(static_cast<int>(e));
    return (cauchy_P(static_cast<int>(n + r), S().xi, S().y) *
            psi_poly(static_cast<int>(k + l - n - r), S().a, S().x, S().y))
        .scaled(c);
}

MultiPoly cor_psi_l_term(long l, long r) {
    const QRational c =
        qbinom(static_cast<int>(l), static_cast<int>(r)) *
        q_power(static_cast<int>(binom2(r) - r * (2 * l + 1)));
    return (cauchy_P(static_cast<int>(r), S().xi, S().y) *
            psi_poly(static_cast<int>(l - r), S().a, S().x, S().y))
        .scaled(c);
}

// ----- whole-identity checks ----------------------------------------------

std::optional<Mismatch> check_eq27(const ParamMap& p) {
    const int n = static_cast<int>(p.at("n"));
    return first_mismatch(q_add_pow(n, S().x, S().y),
                          cauchy_P(n, S().x, -S().y));
}

std::optional<Mismatch> check_eq212(const ParamMap& p) {
    const int N = static_cast<int>(p.at("N"));
    return first_mismatch(eq_series(S().x, N) * Eq_series(-S().x, N),
                          TruncSeries::one(N));
}

std::optional<Mismatch> check_gener(const ParamMap& p) {
    const int N = static_cast<int>(p.at("N"));
    TruncSeries lhs(N);
    for (int n = 0; n <= N; ++n) {
        lhs.set_coeff(n,
                      cauchy_P(n, S().x, S().y).scaled(
                          qq_factorial(n).inverse()));
    }
    return first_mismatch(lhs, euler_inv_series(S().x, N) *
                                   pochhammer_product_series(S().y, N));
}

std::optional<Mismatch> check_putt(const ParamMap& p) {
    const int N = static_cast<int>(p.at("N"));
    const TruncSeries lhs = phi_series({S().a}, {}, S().one, N);
    return first_mismatch(lhs, pochhammer_product_series(S().a, N) *
                                   euler_inv_series(S().one, N));
}

std::optional<Mismatch> check_gf36(const ParamMap& p) {
    const int N = static_cast<int>(p.at("N"));
    TruncSeries rhs(N);
    for (int k = 0; k <= N; ++k) {
        const QRational c = sign(k) *
                            q_power(static_cast<int>(binom2(k))) /
                            qq_factorial(k);
        rhs.set_coeff(k, F_poly(k, S().x, S().y, S().z).scaled(c));
    }
    return first_mismatch(F_gf(N, S().x, S().y, S().z), rhs);
}

MultiPoly jhc_sequence(int seq, int j) {
    switch (seq) {
        case 0:
            return S().one;
        case 1:
            return MultiPoly::constant(q_power(j));
        case 2:
            return cauchy_P(j, S().x, S().y);
        case 3:
            return MultiPoly::variable(scratch_variable(j % 10));
        default:
            throw InvalidArgument("jhc3.14: seq must be in [0, 3]");
    }
}

std::optional<Mismatch> check_jhc(const ParamMap& p) {
    const int M = static_cast<int>(p.at("M"));
    const int N = static_cast<int>(p.at("N"));
    const int seq = static_cast<int>(p.at("seq"));
    // Left side by the literal double-sum expansion of (u + t)_q^j, so the
    // comparison does not share the closed form it is checking.
    BiTruncSeries lhs(M, N);
    std::vector<MultiPoly> terms;
    terms.reserve(static_cast<std::size_t>(M + N) + 1);
    for (int j = 0; j <= M + N; ++j) {
        terms.push_back(jhc_sequence(seq, j));
        const QRational cj = qq_factorial(j).inverse();
        for (int s = 0; s <= j; ++s) {
            const int pw = j - s;
            if (pw > M || s > N) continue;
            const QRational w =
                qbinom(j, s) * q_power(static_cast<int>(binom2(s))) * cj;
            lhs.set_entry(pw, s, lhs.entry(pw, s) + terms.back().scaled(w));
        }
    }
    return first_mismatch(lhs, jhc_substitute(terms, M, N));
}

std::optional<Mismatch> check_thm31_general(const ParamMap& p) {
    const long k = p.at("k");
    const long l = p.at("l");
    MultiPoly rhs;
    for (long n = 0; n <= k; ++n) {
        for (long r = 0; r <= l; ++r) rhs += thm31_general_term(k, l, n, r);
    }
    return first_mismatch(
        F_poly(static_cast<int>(k + l), S().x, S().xi, S().zeta), rhs);
}

std::optional<Mismatch> check_thm31_l(const ParamMap& p) {
    const long l = p.at("l");
    MultiPoly rhs;
    for (long r = 0; r <= l; ++r) rhs += thm31_l_term(l, r);
    return first_mismatch(F_poly(static_cast<int>(l), S().x, S().xi, S().zeta),
                          rhs);
}

std::optional<Mismatch> check_cor32(const ParamMap& p) {
    const long k = p.at("k");
    const long l = p.at("l");
    MultiPoly rhs;
    for (long n = 0; n <= k; ++n) {
        for (long r = 0; r <= l; ++r) rhs += cor32_term(k, l, n, r);
    }
    return first_mismatch(
        F_poly(static_cast<int>(k + l), S().x, S().xi, S().z), rhs);
}

std::optional<Mismatch> check_thm4(const ParamMap& p) {
    const long n = p.at("n");
    const long r = p.at("r");
    MultiPoly rhs;
    for (long k = 0; k <= n; ++k) {
        for (long m = 0; m <= r; ++m) rhs += thm4_term(n, r, k, m);
    }
    const MultiPoly lhs =
        F_poly(static_cast<int>(n), S().x, S().xi, S().zeta) *
        F_poly(static_cast<int>(r), S().X, S().Om, S().U);
    return first_mismatch(lhs, rhs);
}

std::optional<Mismatch> check_cor_psi(const ParamMap& p) {
    const long k = p.at("k");
    const long l = p.at("l");
    MultiPoly rhs;
    for (long n = 0; n <= k; ++n) {
        for (long r = 0; r <= l; ++r) rhs += cor_psi_term(k, l, n, r);
    }
    return first_mismatch(
        psi_poly(static_cast<int>(k + l), S().a, S().x, S().xi), rhs);
}

std::optional<Mismatch> check_cor_psi_l(const ParamMap& p) {
    const long l = p.at("l");
    MultiPoly rhs;
    for (long r = 0; r <= l; ++r) rhs += cor_psi_l_term(l, r);
    return first_mismatch(
        psi_poly(static_cast<int>(l), S().a, S().x, S().xi), rhs);
}

std::optional<Mismatch> check_qdiff(const ParamMap& p, QDiffVariant variant) {
    const int n = static_cast<int>(p.at("n"));
    const MultiPoly f = F_poly(n, S().x, S().y, S().z);
    return first_mismatch(qdiff_residual(f, variant), MultiPoly());
}

// ----- fit-cell providers --------------------------------------------------

FitCell cell_eq27(const ParamMap& p) {
    const long n = p.at("n");
    FitCell cell;
    cell.params = {{"n", n}};
    cell.lhs = cauchy_P(static_cast<int>(n), S().x, -S().y);
    for (long k = 0; k <= n; ++k) {
        const QRational c =
            qbinom(static_cast<int>(n), static_cast<int>(k)) *
            q_power(static_cast<int>(binom2(k)));
        cell.terms.push_back(
            {{{"n", n}, {"k", k}},
             (S().x.pow(static_cast<int>(n - k)) *
              S().y.pow(static_cast<int>(k)))
                 .scaled(c)});
    }
    return cell;
}

FitCell cell_thm31_general(const ParamMap& p) {
    const long k = p.at("k");
    const long l = p.at("l");
    FitCell cell;
    cell.params = {{"k", k}, {"l", l}};
    cell.lhs = F_poly(static_cast<int>(k + l), S().x, S().xi, S().zeta);
    for (long n = 0; n <= k; ++n) {
        for (long r = 0; r <= l; ++r) {
            cell.terms.push_back({{{"k", k}, {"l", l}, {"n", n}, {"r", r}},
                                  thm31_general_term(k, l, n, r)});
        }
    }
    return cell;
}

FitCell cell_thm31_l(const ParamMap& p) {
    const long l = p.at("l");
    FitCell cell;
    cell.params = {{"l", l}};
    cell.lhs = F_poly(static_cast<int>(l), S().x, S().xi, S().zeta);
    for (long r = 0; r <= l; ++r) {
        cell.terms.push_back({{{"l", l}, {"r", r}}, thm31_l_term(l, r)});
    }
    return cell;
}

FitCell cell_cor32(const ParamMap& p) {
    const long k = p.at("k");
    const long l = p.at("l");
    FitCell cell;
    cell.params = {{"k", k}, {"l", l}};
    cell.lhs = F_poly(static_cast<int>(k + l), S().x, S().xi, S().z);
    for (long n = 0; n <= k; ++n) {
        for (long r = 0; r <= l; ++r) {
            cell.terms.push_back({{{"k", k}, {"l", l}, {"n", n}, {"r", r}},
                                  cor32_term(k, l, n, r)});
        }
    }
    return cell;
}

FitCell cell_thm4(const ParamMap& p) {
    const long n = p.at("n");
    const long r = p.at("r");
    FitCell cell;
    cell.params = {{"n", n}, {"r", r}};
    cell.lhs = F_poly(static_cast<int>(n), S().x, S().xi, S().zeta) *
               F_poly(static_cast<int>(r), S().X, S().Om, S().U);
    for (long k = 0; k <= n; ++k) {
        for (long m = 0; m <= r; ++m) {
            cell.terms.push_back({{{"n", n}, {"r", r}, {"k", k}, {"m", m}},
                                  thm4_term(n, r, k, m)});
        }
    }
    return cell;
}

FitCell cell_cor_psi(const ParamMap& p) {
    const long k = p.at("k");
    const long l = p.at("l");
    FitCell cell;
    cell.params = {{"k", k}, {"l", l}};
    cell.lhs = psi_poly(static_cast<int>(k + l), S().a, S().x, S().xi);
    for (long n = 0; n <= k; ++n) {
        for (long r = 0; r <= l; ++r) {
            cell.terms.push_back({{{"k", k}, {"l", l}, {"n", n}, {"r", r}},
                                  cor_psi_term(k, l, n, r)});
        }
    }
    return cell;
}

FitCell cell_cor_psi_l(const ParamMap& p) {
    const long l = p.at("l");
    FitCell cell;
    cell.params = {{"l", l}};
    cell.lhs = psi_poly(static_cast<int>(l), S().a, S().x, S().xi);
    for (long r = 0; r <= l; ++r) {
        cell.terms.push_back({{{"l", l}, {"r", r}}, cor_psi_l_term(l, r)});
    }
    return cell;
}

std::vector<long> iota_values(long lo, long hi) {
    std::vector<long> v;
    for (long i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

std::vector<IdentitySpec> build_registry() {
    std::vector<IdentitySpec> reg;

    reg.push_back({"eq2.7",
                   "the n-th q-addition power equals the Cauchy polynomial "
                   "with negated second argument: (x (+) y)^n = P_n(x, -y)",
                   {{"n", 0, 24}},
                   {iota_values(0, 12)},
                   {"n", "k"},
                   check_eq27,
                   cell_eq27});

    reg.push_back({"eq2.12",
                   "the q-exponentials are multiplicative inverses: "
                   "e_q(xt) E_q(-xt) = 1",
                   {{"N", 0, 32}},
                   {{16}},
                   {},
                   check_eq212,
                   nullptr});

    reg.push_back({"gener",
                   "Cauchy polynomial generating function: "
                   "sum P_n(x,y) t^n/(q;q)_n = (yt;q)oo/(xt;q)oo",
                   {{"N", 0, 16}},
                   {{10}},
                   {},
                   check_gener,
                   nullptr});

    reg.push_back({"gf3.6",
                   "trivariate generating function: sum F_n (-1)^n "
                   "q^(n(n-1)/2) t^n/(q;q)_n = (xt;q)oo(zt;q)oo/(yt;q)oo",
                   {{"N", 0, 16}},
                   {{10}},
                   {},
                   check_gf36,
                   nullptr});

    reg.push_back({"putt",
                   "q-binomial theorem via the phi series: "
                   "sum (a;q)_k z^k/(q;q)_k = (az;q)oo/(z;q)oo",
                   {{"N", 0, 16}},
                   {{12}},
                   {},
                   check_putt,
                   nullptr});

    reg.push_back({"jhc3.14",
                   "double-series rearrangement of sum F(j) (u (+) t)^j "
                   "/(q;q)_j on a truncation rectangle",
                   {{"M", 0, 12}, {"N", 0, 12}, {"seq", 0, 3}},
                   {{8}, {8}, iota_values(0, 3)},
                   {},
                   check_jhc,
                   nullptr});

    reg.push_back({"thm3.1-general",
                   "double-index connection formula expanding F_{k+l}(x, xi, "
                   "zeta) over four-product kernels in (y, z)",
                   {{"k", 0, 6}, {"l", 0, 6}},
                   {iota_values(0, 3), iota_values(0, 3)},
                   {"k", "l", "n", "r"},
                   check_thm31_general,
                   cell_thm31_general});

    reg.push_back({"thm3.1-l",
                   "single-index connection formula for F_l(x, xi, zeta) "
                   "with exponent -r(2l+1)",
                   {{"l", 0, 8}},
                   {iota_values(0, 4)},
                   {"l", "r"},
                   check_thm31_l,
                   cell_thm31_l});

    reg.push_back({"cor3.2",
                   "connection formula for F_{k+l}(x, xi, z) over plain "
                   "Cauchy kernels P_{n+r}(xi, y)",
                   {{"k", 0, 6}, {"l", 0, 6}},
                   {iota_values(0, 3), iota_values(0, 3)},
                   {"k", "l", "n", "r"},
                   check_cor32,
                   cell_cor32});

    reg.push_back({"thm4",
                   "product connection formula expanding F_n(x, xi, zeta) "
                   "F_r(X, Omega, U) over paired kernels",
                   {{"n", 0, 5}, {"r", 0, 5}},
                   {iota_values(0, 3), iota_values(0, 3)},
                   {"n", "r", "k", "m"},
                   check_thm4,
                   cell_thm4});

    reg.push_back({"cor-psi",
                   "double-index connection formula for psi_{k+l}(a; x, xi) "
                   "over Cauchy kernels, no sign factor",
                   {{"k", 0, 6}, {"l", 0, 6}},
                   {iota_values(0, 3), iota_values(0, 3)},
                   {"k", "l", "n", "r"},
                   check_cor_psi,
                   cell_cor_psi});

    reg.push_back({"cor-psi-l",
                   "single-index connection formula for psi_l(a; x, xi) with "
                   "exponent r(r-1)/2 - r(2l+1)",
                   {{"l", 0, 8}},
                   {iota_values(0, 4)},
                   {"l", "r"},
                   check_cor_psi_l,
                   cell_cor_psi_l});

    reg.push_back({"qdiff-thm1",
                   "first q-difference operator (extra z on the y-shift) "
                   "annihilates F_n",
                   {{"n", 0, 16}},
                   {iota_values(0, 8)},
                   {},
                   [](const ParamMap& p) {
                       return check_qdiff(p, QDiffVariant::theorem1);
                   },
                   nullptr});

    reg.push_back({"qdiff-thm2",
                   "second q-difference operator annihilates F_n",
                   {{"n", 0, 16}},
                   {iota_values(0, 8)},
                   {},
                   [](const ParamMap& p) {
                       return check_qdiff(p, QDiffVariant::theorem2);
                   },
                   nullptr});

    return reg;
}

std::string compose_power(const std::string& sym, int k) {
    if (k == 1) return sym;
    return sym + "^" + std::to_string(k);
}

std::string prefix_monomial(const std::string& prefix, int k,
                            const std::string& inner) {
    if (k == 0) return inner;
    const std::string p = compose_power(prefix, k);
    if (inner == "1") return p;
    return p + "*" + inner;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
    static const std::vector<IdentitySpec> reg = build_registry();
    return reg;
}

const IdentitySpec& find_identity(const std::string& id) {
    for (const IdentitySpec& spec : registry()) {
        if (spec.id == id) return spec;
    }
    throw UnknownIdentity("unknown identity '" + id + "'");
}

IdentityReport check_identity(const std::string& id, const ParamMap& params) {
    const IdentitySpec& spec = find_identity(id);
    for (const auto& [name, value] : params) {
        const bool known =
            std::any_of(spec.params.begin(), spec.params.end(),
                        [&](const ParamSpec& p) { return p.name == name; });
        if (!known) {
            throw InvalidArgument("check_identity: " + id +
                                  " has no parameter '" + name + "'");
        }
        (void)value;
    }
    IdentityReport r;
    r.id = id;
    for (const ParamSpec& p : spec.params) {
        const auto it = params.find(p.name);
        if (it == params.end()) {
            throw InvalidArgument("check_identity: " + id +
                                  " requires parameter '" + p.name + "'");
        }
        if (it->second < p.lo || it->second > p.hi) {
            throw InvalidArgument(
                "check_identity: " + id + " parameter " + p.name + "=" +
                std::to_string(it->second) + " outside [" +
                std::to_string(p.lo) + ", " + std::to_string(p.hi) + "]");
        }
        r.params.emplace_back(p.name, it->second);
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.mismatch = spec.check(params);
        r.status = r.mismatch ? CheckStatus::fail : CheckStatus::pass;
    } catch (const Error& e) {
        r.status = CheckStatus::error;
        r.message = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.elapsed_us =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    return r;
}

std::vector<SuiteCell> default_grid(const std::string& id) {
    const IdentitySpec& spec = find_identity(id);
    std::vector<SuiteCell> out;
    std::vector<std::size_t> idx(spec.params.size(), 0);
    while (true) {
        SuiteCell cell;
        cell.id = id;
        for (std::size_t i = 0; i < spec.params.size(); ++i) {
            cell.params[spec.params[i].name] = spec.default_values[i][idx[i]];
        }
        out.push_back(std::move(cell));
        std::size_t i = spec.params.size();
        while (i > 0) {
            --i;
            if (++idx[i] < spec.default_values[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (spec.params.empty()) return out;
    }
}

std::vector<SuiteCell> suite_grid(const std::string& suite) {
    std::vector<std::string> ids;
    if (suite == "foundational") {
        ids = {"eq2.12", "eq2.7", "gener", "gf3.6", "jhc3.14", "putt"};
    } else if (suite == "theorems") {
        ids = {"cor-psi", "cor3.2", "thm3.1-general", "thm3.1-l", "thm4"};
    } else if (suite == "qdiff") {
        ids = {"qdiff-thm1", "qdiff-thm2"};
    } else if (suite == "all") {
        for (const IdentitySpec& spec : registry()) ids.push_back(spec.id);
        std::sort(ids.begin(), ids.end());
    } else {
        throw InvalidArgument("unknown suite '" + suite + "'");
    }
    std::vector<SuiteCell> out;
    for (const std::string& id : ids) {
        auto grid = default_grid(id);
        out.insert(out.end(), grid.begin(), grid.end());
    }
    return out;
}

std::vector<IdentityReport> check_suite(const std::vector<SuiteCell>& grid) {
    std::vector<IdentityReport> out;
    out.reserve(grid.size());
    for (const SuiteCell& cell : grid) {
        out.push_back(check_identity(cell.id, cell.params));
    }
    return out;
}

std::optional<Mismatch> first_mismatch(const MultiPoly& lhs,
                                       const MultiPoly& rhs) {
    const GrlexLess less;
    auto il = lhs.terms().begin();
    auto ir = rhs.terms().begin();
    const auto el = lhs.terms().end();
    const auto er = rhs.terms().end();
    const QRational zero;
    while (il != el || ir != er) {
        if (ir == er || (il != el && less(il->first, ir->first))) {
            return Mismatch{il->first.str(), il->second.str(), zero.str()};
        }
        if (il == el || less(ir->first, il->first)) {
            return Mismatch{ir->first.str(), zero.str(), ir->second.str()};
        }
        if (il->second != ir->second) {
            return Mismatch{il->first.str(), il->second.str(),
                            ir->second.str()};
        }
        ++il;
        ++ir;
    }
    return std::nullopt;
}

std::optional<Mismatch> first_mismatch(const TruncSeries& lhs,
                                       const TruncSeries& rhs) {
    const int n = std::min(lhs.order(), rhs.order());
    for (int k = 0; k <= n; ++k) {
        auto mm = first_mismatch(lhs.coeff(k), rhs.coeff(k));
        if (mm) {
            mm->monomial = prefix_monomial("t", k, mm->monomial);
            return mm;
        }
    }
    return std::nullopt;
}

std::optional<Mismatch> first_mismatch(const BiTruncSeries& lhs,
                                       const BiTruncSeries& rhs) {
    const int nu = std::min(lhs.order_u(), rhs.order_u());
    const int nt = std::min(lhs.order_t(), rhs.order_t());
    for (int i = 0; i <= nu; ++i) {
        for (int j = 0; j <= nt; ++j) {
            auto mm = first_mismatch(lhs.entry(i, j), rhs.entry(i, j));
            if (mm) {
                mm->monomial = prefix_monomial(
                    "u", i, prefix_monomial("t", j, mm->monomial));
                return mm;
            }
        }
    }
    return std::nullopt;
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        default:
            return "error";
    }
}

}  // namespace

std::string report_to_json(const std::string& suite,
                           const std::vector<IdentityReport>& reports,
                           bool timing) {
    ojson doc;
    doc["suite"] = suite;
    ojson results = ojson::array();
    int npass = 0;
    int nfail = 0;
    int nerror = 0;
    for (const IdentityReport& r : reports) {
        ojson cell;
        cell["id"] = r.id;
        ojson ps = ojson::object();
        for (const auto& [name, value] : r.params) ps[name] = value;
        cell["params"] = std::move(ps);
        cell["status"] = status_name(r.status);
        if (r.mismatch) {
            ojson mm;
            mm["monomial"] = r.mismatch->monomial;
            mm["lhs"] = r.mismatch->lhs;
            mm["rhs"] = r.mismatch->rhs;
            cell["mismatch"] = std::move(mm);
        } else {
            cell["mismatch"] = nullptr;
        }
        if (r.status == CheckStatus::error) cell["error"] = r.message;
        if (timing) cell["elapsed_us"] = r.elapsed_us;
        switch (r.status) {
            case CheckStatus::pass:
                ++npass;
                break;
            case CheckStatus::fail:
                ++nfail;
                break;
            case CheckStatus::error:
                ++nerror;
                break;
        }
        results.push_back(std::move(cell));
    }
    doc["results"] = std::move(results);
    ojson summary;
    summary["pass"] = npass;
    summary["fail"] = nfail;
    summary["error"] = nerror;
    doc["summary"] = std::move(summary);
    return doc.dump() + "\n";
}

std::string report_to_text(const std::string& suite,
                           const std::vector<IdentityReport>& reports,
                           bool timing) {
    std::string out = "== suite " + suite + " ==\n";
    int npass = 0;
    int nfail = 0;
    int nerror = 0;
    for (const IdentityReport& r : reports) {
        std::string line = "[";
        line += status_name(r.status);
        line += "] " + r.id + " (";
        for (std::size_t i = 0; i < r.params.size(); ++i) {
            if (i > 0) line += ", ";
            line += r.params[i].first + "=" + std::to_string(r.params[i].second);
        }
        line += ")";
        if (r.mismatch) {
            line += ": mismatch at " + r.mismatch->monomial + ": lhs " +
                    r.mismatch->lhs + ", rhs " + r.mismatch->rhs;
        }
        if (r.status == CheckStatus::error) line += ": " + r.message;
        if (timing) line += " [" + std::to_string(r.elapsed_us) + " us]";
        switch (r.status) {
            case CheckStatus::pass:
                ++npass;
                break;
            case CheckStatus::fail:
                ++nfail;
                break;
            case CheckStatus::error:
                ++nerror;
                break;
        }
        out += line + "\n";
    }
    out += "summary: pass " + std::to_string(npass) + ", fail " +
           std::to_string(nfail) + ", error " + std::to_string(nerror) + "\n";
    return out;
}

long BasisMonomial::eval(const std::map<std::string, long>& indices) const {
    long v = 1;
    for (const auto& [name, power] : factors) {
        const auto it = indices.find(name);
        if (it == indices.end()) {
            throw InvalidArgument("basis monomial references unknown index '" +
                                  name + "'");
        }
        for (int i = 0; i < power; ++i) v *= it->second;
    }
    return v;
}

std::string BasisMonomial::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [name, power] : factors) {
        if (!out.empty()) out += "*";
        out += name;
        if (power != 1) out += "^" + std::to_string(power);
    }
    return out;
}

BasisMonomial parse_basis_monomial(const std::string& text) {
    if (text == "1") return BasisMonomial{};
    BasisMonomial out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t star = text.find('*', pos);
        if (star == std::string::npos) star = text.size();
        const std::string part = text.substr(pos, star - pos);
        std::size_t caret = part.find('^');
        std::string name = part.substr(0, caret);
        int power = 1;
        if (caret != std::string::npos) {
            const std::string ps = part.substr(caret + 1);
            if (ps.empty() ||
                ps.find_first_not_of("0123456789") != std::string::npos) {
                throw InvalidArgument("invalid basis monomial '" + text + "'");
            }
            power = std::stoi(ps);
        }
        const bool name_ok =
            !name.empty() &&
            name.find_first_not_of("abcdefghijklmnopqrstuvwxyz"
                                   "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789") ==
                std::string::npos &&
            (std::isalpha(static_cast<unsigned char>(name[0])) != 0);
        if (!name_ok || power < 1) {
            throw InvalidArgument("invalid basis monomial '" + text + "'");
        }
        out.factors.emplace_back(name, power);
        pos = star + 1;
        if (star == text.size()) break;
        if (pos >= text.size()) {
            throw InvalidArgument("invalid basis monomial '" + text + "'");
        }
    }
    if (out.factors.empty()) {
        throw InvalidArgument("invalid basis monomial '" + text + "'");
    }
    return out;
}

std::optional<std::vector<long>> fit_correction(
    const std::vector<FitCell>& cells, const std::vector<BasisMonomial>& basis,
    long lo, long hi) {
    if (basis.empty()) throw InvalidArgument("fit_correction: empty basis");
    if (lo > hi) throw InvalidArgument("fit_correction: empty range");
    const std::size_t B = basis.size();
    std::vector<std::map<std::vector<long>, bool>> memo(cells.size());
    std::vector<long> c(B, lo);
    const auto advance = [&]() -> bool {
        for (std::size_t i = B; i-- > 0;) {
            if (c[i] < hi) {
                ++c[i];
                std::fill(c.begin() + static_cast<long>(i) + 1, c.end(), lo);
                return true;
            }
        }
        return false;
    };
    do {
        bool ok = true;
        for (std::size_t ci = 0; ci < cells.size() && ok; ++ci) {
            const FitCell& cell = cells[ci];
            std::vector<long> key;
            key.reserve(cell.terms.size());
            for (const FitTerm& t : cell.terms) {
                long e = 0;
                for (std::size_t b = 0; b < B; ++b) {
                    e += c[b] * basis[b].eval(t.indices);
                }
                key.push_back(e);
            }
            const auto [it, inserted] = memo[ci].try_emplace(key, false);
            if (inserted) {
                MultiPoly rhs;
                for (std::size_t ti = 0; ti < cell.terms.size(); ++ti) {
                    rhs += cell.terms[ti].value.scaled(
                        q_power(static_cast<int>(key[ti])));
                }
                it->second = (rhs == cell.lhs);
            }
            ok = it->second;
        }
        if (ok) return c;
    } while (advance());
    return std::nullopt;
}

std::vector<FitCell> fit_cells(const std::string& id) {
    const IdentitySpec& spec = find_identity(id);
    if (!spec.fit_cell) {
        throw UnsupportedIdentity("identity '" + id +
                                  "' exposes no term decomposition");
    }
    std::vector<FitCell> out;
    for (const SuiteCell& cell : default_grid(id)) {
        out.push_back(spec.fit_cell(cell.params));
    }
    return out;
}

CorrectionFit fit_exponent_correction(const std::string& id,
                                      const std::vector<BasisMonomial>& basis,
                                      long lo, long hi) {
    const IdentitySpec& spec = find_identity(id);
    if (!spec.fit_cell) {
        throw UnsupportedIdentity("identity '" + id +
                                  "' exposes no term decomposition");
    }
    for (const BasisMonomial& b : basis) {
        for (const auto& [name, power] : b.factors) {
            (void)power;
            if (std::find(spec.index_names.begin(), spec.index_names.end(),
                          name) == spec.index_names.end()) {
                throw InvalidArgument("identity '" + id +
                                      "' has no index named '" + name + "'");
            }
        }
    }
    CorrectionFit fit;
    fit.id = id;
    fit.basis = basis;
    fit.lo = lo;
    fit.hi = hi;
    fit.coeffs = fit_correction(fit_cells(id), basis, lo, hi);
    return fit;
}

}  // namespace qforge
