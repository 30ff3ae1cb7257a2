#include "qforge/qpoly.hpp"

#include <algorithm>
#include <cstddef>

#include "qforge/error.hpp"

namespace qforge {

namespace {

std::vector<BigRational> to_dense(const QPolynomial& p) {
    std::vector<BigRational> out(static_cast<std::size_t>(p.degree() + 1));
    for (const auto& [d, c] : p.terms()) out[static_cast<std::size_t>(d)] = c;
    return out;
}

QPolynomial from_dense(const std::vector<BigRational>& v) {
    std::vector<QPolynomial::Term> terms;
    for (std::size_t d = 0; d < v.size(); ++d) {
        if (!v[d].is_zero()) terms.emplace_back(static_cast<int>(d), v[d]);
    }
    return QPolynomial::from_terms(std::move(terms));
}

void itrim(std::vector<BigInt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Clears denominators and strips integer content; leading coefficient made
// positive.  Input must be nonzero.
std::vector<BigInt> to_primitive_int(const QPolynomial& p) {
    BigInt lcm = 1;
    for (const auto& [d, c] : p.terms()) {
        (void)d;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    std::vector<BigInt> out(static_cast<std::size_t>(p.degree() + 1));
    for (const auto& [d, c] : p.terms()) {
        out[static_cast<std::size_t>(d)] = c.num() * (lcm / c.den());
    }
    BigInt content = 0;
    for (const BigInt& c : out) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    }
    if (out.back() < 0) content = -content;
    for (BigInt& c : out) c /= content;
    return out;
}

void make_primitive(std::vector<BigInt>& v) {
    BigInt content = 0;
    for (const BigInt& c : v) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    }
    if (content == 0) return;
    if (v.back() < 0) content = -content;
    for (BigInt& c : v) c /= content;
}

// Pseudo-remainder of u by v over Z (v nonzero, deg u >= deg v on entry is
// not required).
std::vector<BigInt> pseudo_rem(std::vector<BigInt> r,
                               const std::vector<BigInt>& v) {
    const std::size_t dv = v.size() - 1;
    const BigInt& lv = v.back();
    itrim(r);
    while (!r.empty() && r.size() - 1 >= dv) {
        const std::size_t shift = r.size() - 1 - dv;
        const BigInt lr = r.back();
        for (BigInt& c : r) c *= lv;
        for (std::size_t i = 0; i < v.size(); ++i) r[i + shift] -= lr * v[i];
        itrim(r);
    }
    return r;
}

QPolynomial from_int(const std::vector<BigInt>& v) {
    std::vector<QPolynomial::Term> terms;
    for (std::size_t d = 0; d < v.size(); ++d) {
        if (v[d] != 0) terms.emplace_back(static_cast<int>(d), BigRational(v[d]));
    }
    return QPolynomial::from_terms(std::move(terms));
}

}  // namespace

QPolynomial QPolynomial::constant(const BigRational& c) {
    QPolynomial p;
    if (!c.is_zero()) p.t_.emplace_back(0, c);
    return p;
}

QPolynomial QPolynomial::q_power(int degree) {
    if (degree < 0)
        throw InvalidArgument("QPolynomial::q_power: negative degree");
    QPolynomial p;
    p.t_.emplace_back(degree, BigRational(1));
    return p;
}

QPolynomial QPolynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    QPolynomial p;
    for (auto& [d, c] : terms) {
        if (d < 0) throw InvalidArgument("QPolynomial: negative degree");
        if (!p.t_.empty() && p.t_.back().first == d) {
            p.t_.back().second += c;
            if (p.t_.back().second.is_zero()) p.t_.pop_back();
        } else if (!c.is_zero()) {
            p.t_.emplace_back(d, std::move(c));
        }
    }
    return p;
}

const BigRational& QPolynomial::leading() const {
    if (t_.empty())
        throw InvalidArgument("QPolynomial::leading: zero polynomial");
    return t_.back().second;
}

BigRational QPolynomial::coeff(int degree) const {
    for (const auto& [d, c] : t_) {
        if (d == degree) return c;
        if (d > degree) break;
    }
    return BigRational(0);
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial p;
    p.t_.reserve(t_.size());
    for (const auto& [d, c] : t_) p.t_.emplace_back(d, -c);
    return p;
}

QPolynomial QPolynomial::scaled(const BigRational& c) const {
    if (c.is_zero()) return QPolynomial();
    QPolynomial p;
    p.t_.reserve(t_.size());
    for (const auto& [d, v] : t_) p.t_.emplace_back(d, v * c);
    return p;
}

QPolynomial QPolynomial::shifted(int degrees) const {
    if (degrees < 0)
        throw InvalidArgument("QPolynomial::shifted: negative shift");
    QPolynomial p;
    p.t_.reserve(t_.size());
    for (const auto& [d, c] : t_) p.t_.emplace_back(d + degrees, c);
    return p;
}

QPolynomial QPolynomial::monic() const {
    if (t_.empty()) return QPolynomial();
    return scaled(BigRational(1) / leading());
}

BigRational QPolynomial::eval(const BigRational& q0) const {
    BigRational acc(0);
    for (const auto& [d, c] : t_) acc += c * q0.pow(d);
    return acc;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out;
    out.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
        if (j == b.t_.size() ||
            (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
            out.t_.push_back(a.t_[i++]);
        } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
            out.t_.push_back(b.t_[j++]);
        } else {
            BigRational c = a.t_[i].second + b.t_[j].second;
            if (!c.is_zero()) out.t_.emplace_back(a.t_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    return a + (-b);
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial();
    std::vector<BigRational> acc(
        static_cast<std::size_t>(a.degree() + b.degree() + 1));
    for (const auto& [da, ca] : a.t_) {
        for (const auto& [db, cb] : b.t_) {
            acc[static_cast<std::size_t>(da + db)] += ca * cb;
        }
    }
    return from_dense(acc);
}

QPolynomial QPolynomial::exact_div(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero())
        throw DivisionByZero("QPolynomial: division by zero polynomial");
    if (a.is_zero()) return QPolynomial();
    if (a.degree() < b.degree())
        throw InvalidArgument("QPolynomial: inexact division");
    std::vector<BigRational> rem = to_dense(a);
    const std::vector<BigRational> div = to_dense(b);
    const std::size_t db = div.size() - 1;
    const BigRational& lb = div.back();
    std::vector<BigRational> quot(rem.size() - db);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigRational c = rem[k + db] / lb;
        if (!c.is_zero()) {
            for (std::size_t j = 0; j < div.size(); ++j) {
                rem[k + j] -= c * div[j];
            }
        }
        quot[k] = std::move(c);
    }
    for (const BigRational& c : rem) {
        if (!c.is_zero())
            throw InvalidArgument("QPolynomial: inexact division");
    }
    return from_dense(quot);
}

std::string QPolynomial::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [d, c] = *it;
        const bool neg = c.sign() < 0;
        const BigRational mag = c.abs();
        std::string body;
        if (d == 0) {
            body = mag.str();
        } else {
            if (!mag.is_one()) body = mag.str() + "*";
            body += (d == 1) ? "q" : "q^" + std::to_string(d);
        }
        if (first) {
            out += neg ? "-" : "";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

QPolynomial poly_gcd(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return QPolynomial();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant())
        return QPolynomial::constant(BigRational(1));
    if (a.is_single_term())
        return QPolynomial::q_power(std::min(a.degree(), b.low_degree()));
    if (b.is_single_term())
        return QPolynomial::q_power(std::min(b.degree(), a.low_degree()));

    // Common power of q comes out first; the primitive PRS then runs on
    // polynomials with nonzero constant term.
    const int common = std::min(a.low_degree(), b.low_degree());
    std::vector<BigInt> u = to_primitive_int(a);
    std::vector<BigInt> v = to_primitive_int(b);
    u.erase(u.begin(), u.begin() + a.low_degree());
    v.erase(v.begin(), v.begin() + b.low_degree());
    if (u.size() < v.size()) std::swap(u, v);
    while (true) {
        std::vector<BigInt> r = pseudo_rem(u, v);
        if (r.empty()) break;
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return from_int(v).shifted(common).monic();
}

}  // namespace qforge
