#ifndef QFORGE_VARS_HPP
#define QFORGE_VARS_HPP

#include <optional>
#include <string_view>

namespace qforge {

// The fixed symbol alphabet.  Enumerator order is the canonical variable
// order used by the term order and by every renderer, so it must never be
// rearranged.  c0..c9 are scratch symbols for coefficient sequences.
enum class Variable : int {
    x,
    y,
    z,
    xi,
    zeta,
    X,
    Y,
    Z,
    Omega,
    U,
    a,
    c0,
    c1,
    c2,
    c3,
    c4,
    c5,
    c6,
    c7,
    c8,
    c9,
};

inline constexpr int kVariableCount = 21;

const char* variable_name(Variable v);
std::optional<Variable> variable_from_name(std::string_view name);

// c0..c9 by index.
Variable scratch_variable(int i);

}  // namespace qforge

#endif  // QFORGE_VARS_HPP
