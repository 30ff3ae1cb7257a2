#include "qforge/mpoly.hpp"

#include <algorithm>

#include "qforge/error.hpp"

namespace qforge {

Monomial Monomial::unit(Variable v, int power) {
    if (power < 0) throw InvalidArgument("Monomial: negative exponent");
    Monomial m;
    m.e[static_cast<int>(v)] = static_cast<std::uint16_t>(power);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kVariableCount; ++i) {
        m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    }
    return m;
}

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < kVariableCount; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += variable_name(static_cast<Variable>(i));
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

MultiPoly MultiPoly::constant(const QRational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.t_.emplace(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::integer(long n) {
    return constant(QRational(BigRational(n)));
}

MultiPoly MultiPoly::variable(Variable v) {
    MultiPoly p;
    p.t_.emplace(Monomial::unit(v), QRational(BigRational(1)));
    return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const QRational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.t_.emplace(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{});
}

std::optional<QRational> MultiPoly::as_constant() const {
    if (t_.empty()) return QRational();
    if (t_.size() == 1 && t_.begin()->first == Monomial{}) {
        return t_.begin()->second;
    }
    return std::nullopt;
}

int MultiPoly::total_degree() const {
    if (t_.empty()) return -1;
    return t_.rbegin()->first.total_degree();
}

QRational MultiPoly::coeff(const Monomial& m) const {
    const auto it = t_.find(m);
    return it == t_.end() ? QRational() : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p;
    for (const auto& [m, c] : t_) p.t_.emplace(m, -c);
    return p;
}

MultiPoly MultiPoly::scaled(const QRational& c) const {
    if (c.is_zero()) return MultiPoly();
    MultiPoly p;
    for (const auto& [m, v] : t_) p.t_.emplace(m, v * c);
    return p;
}

MultiPoly MultiPoly::pow(int n) const {
    if (n < 0) throw InvalidArgument("MultiPoly::pow: negative exponent");
    MultiPoly acc = integer(1);
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.t_) {
        const auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out += b;
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out -= b;
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [m1, c1] : a.t_) {
        for (const auto& [m2, c2] : b.t_) {
            const Monomial m = m1 * m2;
            QRational c = c1 * c2;
            const auto it = out.t_.find(m);
            if (it == out.t_.end()) {
                if (!c.is_zero()) out.t_.emplace(m, std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) out.t_.erase(it);
            }
        }
    }
    return out;
}

MultiPoly MultiPoly::scale_substitute(
    const std::map<Variable, ScaledVariable>& subs) const {
    for (const auto& [v, sv] : subs) {
        if (sv.second != v) {
            throw InvalidSubstitution(
                std::string("scale_substitute: image of ") + variable_name(v) +
                " must be a multiple of itself, got a multiple of " +
                variable_name(sv.second));
        }
    }
    MultiPoly out;
    for (const auto& [m, c] : t_) {
        QRational f = c;
        for (const auto& [v, sv] : subs) {
            const int e = m.exponent(v);
            if (e != 0) f *= sv.first.pow(e);
        }
        if (!f.is_zero()) out.t_.emplace(m, std::move(f));
    }
    return out;
}

BigRational MultiPoly::eval(const std::map<Variable, BigRational>& point,
                            const BigRational& q0) const {
    BigRational acc(0);
    for (const auto& [m, c] : t_) {
        BigRational v = c.eval(q0);
        for (int i = 0; i < kVariableCount; ++i) {
            if (m.e[i] == 0) continue;
            const auto it = point.find(static_cast<Variable>(i));
            if (it == point.end()) {
                throw UnboundVariable(
                    std::string("eval: no value bound for ") +
                    variable_name(static_cast<Variable>(i)));
            }
            v *= it->second.pow(m.e[i]);
        }
        acc += v;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Monomial& m = it->first;
        const QRational& c = it->second;
        const bool neg = c.negative_leading();
        const QRational cm = neg ? -c : c;
        const std::string mono = m.str();
        const bool den_one = cm.den().is_one();
        const bool single = cm.num().term_count() == 1;
        std::string piece;
        if (mono == "1") {
            if (den_one && single) {
                piece = cm.num().str();
            } else if (den_one) {
                piece = "(" + cm.num().str() + ")";
            } else {
                piece = "(" + cm.num().str() + ")/(" + cm.den().str() + ")";
            }
        } else {
            if (den_one && cm.num().is_one()) {
                piece = mono;
            } else if (den_one && single) {
                piece = cm.num().str() + "*" + mono;
            } else if (den_one) {
                piece = "(" + cm.num().str() + ")*" + mono;
            } else {
                piece = "(" + cm.num().str() + ")/(" + cm.den().str() + ")*" +
                        mono;
            }
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += piece;
    }
    return out;
}

}  // namespace qforge
