#ifndef QFORGE_EXPR_HPP
#define QFORGE_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qforge/mpoly.hpp"
#include "qforge/series.hpp"

namespace qforge {

enum class BinOp { add, sub, mul };

// Callable q-objects of the small expression language:
//   qpoch(n; a)      (a; q)_n
//   qbinom(n, k)     Gaussian binomial
//   P(n; x, y)       Cauchy polynomial
//   qaddpow(n; x, y) n-th q-addition power
//   F(n; x, y, z)    trivariate family
//   psi(n; a, x, y)  Hahn-type member
//   phi(r, s, N; a_1..a_r, b_1..b_s, z)  basic hypergeometric series
enum class CallKind { qpoch, qbinom, cauchy, qaddpow, trivariate, psi, phi };

const char* call_name(CallKind kind);

struct ExprAst;
using ExprPtr = std::unique_ptr<ExprAst>;

struct ExprAst {
    enum class Kind { rational, q_power, variable, call, binary };

    Kind kind = Kind::rational;
    BigRational lit;                   // rational
    long exponent = 1;                 // q_power
    Variable var = Variable::x;        // variable
    CallKind call = CallKind::qpoch;   // call
    std::vector<long> int_args;        // call
    std::vector<ExprPtr> args;         // call arguments / binary children
    BinOp op = BinOp::add;             // binary

    bool equals(const ExprAst& other) const;
};

ExprPtr make_rational(BigRational v);
ExprPtr make_q_power(long exponent);
ExprPtr make_variable(Variable v);
// Validates the argument counts for the call kind (ArityError).
ExprPtr make_call(CallKind kind, std::vector<long> int_args,
                  std::vector<ExprPtr> args);
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs);

// Grammar (whitespace free between tokens):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT ('/' INT)? | 'q' ('^' '-'? INT)? | NAME
//           | NAME '(' ints (';' exprs)? ')' | '(' expr ')'
// Throws ParseError for syntax, UnboundVariable for unknown symbols,
// ArityError for wrong argument counts.
ExprPtr parse_expression(std::string_view text);

// Canonical text: parse_expression(render_expression(e)) reproduces e
// structurally for every renderable tree.
std::string render_expression(const ExprAst& e);

// A polynomial, or a truncated series when the expression involves phi.
using Value = std::variant<MultiPoly, TruncSeries>;

// max_order bounds the truncation order a phi call may request; beyond it
// the evaluation fails with OrderExceeded.
Value evaluate(const ExprAst& e, int max_order);

std::string value_str(const Value& v);

}  // namespace qforge

#endif  // QFORGE_EXPR_HPP
