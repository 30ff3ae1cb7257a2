#include "qforge/vars.hpp"

#include <array>
#include <string_view>

#include "qforge/error.hpp"

namespace qforge {

namespace {

constexpr std::array<const char*, kVariableCount> kNames = {
    "x",  "y",  "z",  "xi", "zeta", "X",  "Y",  "Z",  "Omega", "U", "a",
    "c0", "c1", "c2", "c3", "c4",   "c5", "c6", "c7", "c8",    "c9",
};

}  // namespace

const char* variable_name(Variable v) {
    return kNames[static_cast<int>(v)];
}

std::optional<Variable> variable_from_name(std::string_view name) {
    for (int i = 0; i < kVariableCount; ++i) {
        if (name == kNames[i]) return static_cast<Variable>(i);
    }
    return std::nullopt;
}

Variable scratch_variable(int i) {
    if (i < 0 || i > 9)
        throw InvalidArgument("scratch_variable: index must be in [0, 9]");
    return static_cast<Variable>(static_cast<int>(Variable::c0) + i);
}

}  // namespace qforge
