#include "qforge/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "qforge/error.hpp"
#include "qforge/qfun.hpp"
#include "qforge/trivariate.hpp"

namespace qforge {

namespace {

struct CallSig {
    CallKind kind;
    int n_ints;
    int n_args;  // -1: determined by the integer parameters (phi)
};

const std::map<std::string, CallSig, std::less<>>& call_table() {
    static const std::map<std::string, CallSig, std::less<>> table{
        {"qpoch", {CallKind::qpoch, 1, 1}},
        {"qbinom", {CallKind::qbinom, 2, 0}},
        {"P", {CallKind::cauchy, 1, 2}},
        {"qaddpow", {CallKind::qaddpow, 1, 2}},
        {"F", {CallKind::trivariate, 1, 3}},
        {"psi", {CallKind::psi, 1, 3}},
        {"phi", {CallKind::phi, 3, -1}},
    };
    return table;
}

int expected_args(CallKind kind, const std::vector<long>& ints) {
    if (kind == CallKind::phi) {
        return static_cast<int>(ints[0] + ints[1] + 1);
    }
    for (const auto& [name, sig] : call_table()) {
        (void)name;
        if (sig.kind == kind) return sig.n_args;
    }
    return 0;
}

int expected_ints(CallKind kind) {
    for (const auto& [name, sig] : call_table()) {
        (void)name;
        if (sig.kind == kind) return sig.n_ints;
    }
    return 0;
}

std::string plural(int n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

void validate_call(CallKind kind, const std::vector<long>& ints,
                   std::size_t n_args) {
    const int want_ints = expected_ints(kind);
    if (static_cast<int>(ints.size()) != want_ints) {
        throw ArityError(std::string(call_name(kind)) + " expects " +
                         plural(want_ints, "integer parameter") + ", got " +
                         std::to_string(ints.size()));
    }
    if (kind == CallKind::phi && (ints[0] < 0 || ints[1] < 0)) {
        throw InvalidArgument("phi: parameter counts must be non-negative");
    }
    const int want_args = expected_args(kind, ints);
    if (static_cast<int>(n_args) != want_args) {
        const std::string what =
            kind == CallKind::phi
                ? "phi expects r+s+1 = " + plural(want_args, "argument") +
                      ", got " + std::to_string(n_args)
                : std::string(call_name(kind)) + " expects " +
                      plural(want_args, "argument") + ", got " +
                      std::to_string(n_args);
        throw ArityError(what);
    }
}

// ----- tokens ---------------------------------------------------------------

enum class Tok {
    integer,
    name,
    plus,
    minus,
    star,
    caret,
    slash,
    lparen,
    rparen,
    comma,
    semi,
    end,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    long value = 0;
    int line = 1;
    int col = 1;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    const auto single = [&](Tok k, char c) {
        out.push_back({k, std::string(1, c), 0, line, col});
        ++i;
        ++col;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
        } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
            ++col;
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const int start_col = col;
            long v = 0;
            std::string s;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
                if (v > 100000000L) {
                    throw ParseError(line, start_col, {"a smaller integer"},
                                     "an oversized literal");
                }
                v = v * 10 + (text[i] - '0');
                s += text[i];
                ++i;
                ++col;
            }
            out.push_back({Tok::integer, s, v, line, start_col});
        } else if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            const int start_col = col;
            std::string s;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) != 0)) {
                s += text[i];
                ++i;
                ++col;
            }
            out.push_back({Tok::name, s, 0, line, start_col});
        } else {
            switch (c) {
                case '+':
                    single(Tok::plus, c);
                    break;
                case '-':
                    single(Tok::minus, c);
                    break;
                case '*':
                    single(Tok::star, c);
                    break;
                case '^':
                    single(Tok::caret, c);
                    break;
                case '/':
                    single(Tok::slash, c);
                    break;
                case '(':
                    single(Tok::lparen, c);
                    break;
                case ')':
                    single(Tok::rparen, c);
                    break;
                case ',':
                    single(Tok::comma, c);
                    break;
                case ';':
                    single(Tok::semi, c);
                    break;
                default:
                    throw ParseError(line, col,
                                     {"a number", "a name", "an operator"},
                                     "'" + std::string(1, c) + "'");
            }
        }
    }
    out.push_back({Tok::end, "", 0, line, col});
    return out;
}

// ----- recursive descent ----------------------------------------------------

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    const Token& get() { return toks[pos++]; }

    [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
        throw ParseError(t.line, t.col, std::move(expected), describe(t));
    }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(peek(), {what});
        return get();
    }

    long parse_int_arg() {
        bool neg = false;
        if (peek().kind == Tok::minus) {
            get();
            neg = true;
        }
        if (peek().kind != Tok::integer) fail(peek(), {"an integer"});
        const long v = get().value;
        return neg ? -v : v;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const BinOp op =
                get().kind == Tok::plus ? BinOp::add : BinOp::sub;
            lhs = make_binary(op, std::move(lhs), parse_term());
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (peek().kind == Tok::star) {
            get();
            lhs = make_binary(BinOp::mul, std::move(lhs), parse_factor());
        }
        return lhs;
    }

    ExprPtr parse_call(const Token& name_tok, CallKind kind) {
        expect(Tok::lparen, "'('");
        std::vector<long> ints;
        if (peek().kind == Tok::integer || peek().kind == Tok::minus) {
            ints.push_back(parse_int_arg());
            while (peek().kind == Tok::comma) {
                get();
                ints.push_back(parse_int_arg());
            }
        }
        std::vector<ExprPtr> args;
        if (peek().kind == Tok::semi) {
            get();
            if (peek().kind != Tok::rparen) {
                args.push_back(parse_expr());
                while (peek().kind == Tok::comma) {
                    get();
                    args.push_back(parse_expr());
                }
            }
        }
        expect(Tok::rparen, "')'");
        (void)name_tok;
        return make_call(kind, std::move(ints), std::move(args));
    }

    ExprPtr parse_factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer: {
                const long num = get().value;
                if (peek().kind == Tok::slash) {
                    get();
                    if (peek().kind != Tok::integer) {
                        fail(peek(), {"an integer"});
                    }
                    const Token& den_tok = get();
                    if (den_tok.value == 0) {
                        throw ParseError(den_tok.line, den_tok.col,
                                         {"a nonzero denominator"}, "'0'");
                    }
                    return make_rational(BigRational(num, den_tok.value));
                }
                return make_rational(BigRational(num));
            }
            case Tok::name: {
                const Token name_tok = get();
                if (name_tok.text == "q") {
                    long e = 1;
                    if (peek().kind == Tok::caret) {
                        get();
                        e = parse_int_arg();
                    }
                    return make_q_power(e);
                }
                const auto call_it = call_table().find(name_tok.text);
                if (call_it != call_table().end() &&
                    peek().kind == Tok::lparen) {
                    return parse_call(name_tok, call_it->second.kind);
                }
                const auto v = variable_from_name(name_tok.text);
                if (!v) {
                    throw UnboundVariable(
                        std::to_string(name_tok.line) + ":" +
                        std::to_string(name_tok.col) + ": unknown symbol '" +
                        name_tok.text + "'");
                }
                return make_variable(*v);
            }
            case Tok::lparen: {
                get();
                ExprPtr inner = parse_expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            default:
                fail(t, {"a number", "a name", "'('"});
        }
    }
};

int precedence(const ExprAst& e) {
    if (e.kind != ExprAst::Kind::binary) return 3;
    return e.op == BinOp::mul ? 2 : 1;
}

std::string render(const ExprAst& e, int min_prec) {
    switch (e.kind) {
        case ExprAst::Kind::rational:
            return e.lit.str();
        case ExprAst::Kind::q_power:
            return e.exponent == 1 ? "q" : "q^" + std::to_string(e.exponent);
        case ExprAst::Kind::variable:
            return variable_name(e.var);
        case ExprAst::Kind::call: {
            std::string out = call_name(e.call);
            out += "(";
            for (std::size_t i = 0; i < e.int_args.size(); ++i) {
                if (i > 0) out += ", ";
                out += std::to_string(e.int_args[i]);
            }
            if (!e.args.empty()) {
                out += "; ";
                for (std::size_t i = 0; i < e.args.size(); ++i) {
                    if (i > 0) out += ", ";
                    out += render(*e.args[i], 0);
                }
            }
            out += ")";
            return out;
        }
        case ExprAst::Kind::binary: {
            const int p = precedence(e);
            const char* opstr = e.op == BinOp::add   ? " + "
                                : e.op == BinOp::sub ? " - "
                                                     : "*";
            std::string out =
                render(*e.args[0], p) + opstr + render(*e.args[1], p + 1);
            if (p < min_prec) return "(" + out + ")";
            return out;
        }
    }
    throw Error("render: unreachable");
}

MultiPoly expect_poly(Value v, const char* what) {
    if (auto* p = std::get_if<MultiPoly>(&v)) return std::move(*p);
    throw InvalidArgument(std::string(what) +
                          ": a series is not a valid argument here");
}

}  // namespace

const char* call_name(CallKind kind) {
    switch (kind) {
        case CallKind::qpoch:
            return "qpoch";
        case CallKind::qbinom:
            return "qbinom";
        case CallKind::cauchy:
            return "P";
        case CallKind::qaddpow:
            return "qaddpow";
        case CallKind::trivariate:
            return "F";
        case CallKind::psi:
            return "psi";
        default:
            return "phi";
    }
}

bool ExprAst::equals(const ExprAst& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::rational:
            return lit == other.lit;
        case Kind::q_power:
            return exponent == other.exponent;
        case Kind::variable:
            return var == other.var;
        case Kind::call:
            if (call != other.call || int_args != other.int_args ||
                args.size() != other.args.size()) {
                return false;
            }
            break;
        case Kind::binary:
            if (op != other.op) return false;
            break;
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!args[i]->equals(*other.args[i])) return false;
    }
    return args.size() == other.args.size();
}

ExprPtr make_rational(BigRational v) {
    auto e = std::make_unique<ExprAst>();
    e->kind = ExprAst::Kind::rational;
    e->lit = std::move(v);
    return e;
}

ExprPtr make_q_power(long exponent) {
    auto e = std::make_unique<ExprAst>();
    e->kind = ExprAst::Kind::q_power;
    e->exponent = exponent;
    return e;
}

ExprPtr make_variable(Variable v) {
    auto e = std::make_unique<ExprAst>();
    e->kind = ExprAst::Kind::variable;
    e->var = v;
    return e;
}

ExprPtr make_call(CallKind kind, std::vector<long> int_args,
                  std::vector<ExprPtr> args) {
    validate_call(kind, int_args, args.size());
    auto e = std::make_unique<ExprAst>();
    e->kind = ExprAst::Kind::call;
    e->call = kind;
    e->int_args = std::move(int_args);
    e->args = std::move(args);
    return e;
}

ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_unique<ExprAst>();
    e->kind = ExprAst::Kind::binary;
    e->op = op;
    e->args.push_back(std::move(lhs));
    e->args.push_back(std::move(rhs));
    return e;
}

ExprPtr parse_expression(std::string_view text) {
    Parser p{lex(text)};
    ExprPtr out = p.parse_expr();
    if (p.peek().kind != Tok::end) {
        p.fail(p.peek(), {"'+'", "'-'", "'*'", "end of input"});
    }
    return out;
}

std::string render_expression(const ExprAst& e) { return render(e, 0); }

Value evaluate(const ExprAst& e, int max_order) {
    switch (e.kind) {
        case ExprAst::Kind::rational:
            return MultiPoly::constant(QRational(e.lit));
        case ExprAst::Kind::q_power:
            return MultiPoly::constant(q_power(static_cast<int>(e.exponent)));
        case ExprAst::Kind::variable:
            return MultiPoly::variable(e.var);
        case ExprAst::Kind::call: {
            std::vector<MultiPoly> args;
            args.reserve(e.args.size());
            for (const ExprPtr& a : e.args) {
                args.push_back(
                    expect_poly(evaluate(*a, max_order), call_name(e.call)));
            }
            switch (e.call) {
                case CallKind::qpoch:
                    return qpochhammer(args[0],
                                       static_cast<int>(e.int_args[0]));
                case CallKind::qbinom:
                    return MultiPoly::constant(
                        qbinom(static_cast<int>(e.int_args[0]),
                               static_cast<int>(e.int_args[1])));
                case CallKind::cauchy:
                    return cauchy_P(static_cast<int>(e.int_args[0]), args[0],
                                    args[1]);
                case CallKind::qaddpow:
                    return q_add_pow(static_cast<int>(e.int_args[0]), args[0],
                                     args[1]);
                case CallKind::trivariate:
                    return F_poly(static_cast<int>(e.int_args[0]), args[0],
                                  args[1], args[2]);
                case CallKind::psi:
                    return psi_poly(static_cast<int>(e.int_args[0]), args[0],
                                    args[1], args[2]);
                case CallKind::phi: {
                    const long r = e.int_args[0];
                    const long s = e.int_args[1];
                    const long N = e.int_args[2];
                    if (N < 0) {
                        throw InvalidArgument(
                            "phi: truncation order must be non-negative");
                    }
                    if (N > max_order) {
                        throw OrderExceeded(
                            "phi: truncation order " + std::to_string(N) +
                            " exceeds the configured maximum " +
                            std::to_string(max_order));
                    }
                    const std::vector<MultiPoly> upper(
                        args.begin(), args.begin() + r);
                    const std::vector<MultiPoly> lower(
                        args.begin() + r, args.begin() + r + s);
                    return phi_series(upper, lower, args[r + s],
                                      static_cast<int>(N));
                }
            }
            throw Error("evaluate: unreachable");
        }
        case ExprAst::Kind::binary: {
            Value lv = evaluate(*e.args[0], max_order);
            Value rv = evaluate(*e.args[1], max_order);
            const bool ls = std::holds_alternative<TruncSeries>(lv);
            const bool rs = std::holds_alternative<TruncSeries>(rv);
            if (!ls && !rs) {
                const MultiPoly& a = std::get<MultiPoly>(lv);
                const MultiPoly& b = std::get<MultiPoly>(rv);
                switch (e.op) {
                    case BinOp::add:
                        return a + b;
                    case BinOp::sub:
                        return a - b;
                    default:
                        return a * b;
                }
            }
            int order = max_order;
            if (ls) order = std::min(order, std::get<TruncSeries>(lv).order());
            if (rs) order = std::min(order, std::get<TruncSeries>(rv).order());
            const auto lift = [order](Value v) -> TruncSeries {
                if (auto* s = std::get_if<TruncSeries>(&v)) {
                    return std::move(*s);
                }
                return TruncSeries(order, std::get<MultiPoly>(v));
            };
            const TruncSeries a = lift(std::move(lv));
            const TruncSeries b = lift(std::move(rv));
            switch (e.op) {
                case BinOp::add:
                    return a + b;
                case BinOp::sub:
                    return a - b;
                default:
                    return a * b;
            }
        }
    }
    throw Error("evaluate: unreachable");
}

std::string value_str(const Value& v) {
    if (const auto* p = std::get_if<MultiPoly>(&v)) return p->str();
    return std::get<TruncSeries>(v).str();
}

}  // namespace qforge
