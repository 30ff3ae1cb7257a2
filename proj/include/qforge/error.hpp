#ifndef QFORGE_ERROR_HPP
#define QFORGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qforge {

// Base for all errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QFORGE_ERROR_KIND(Name)                                 \
    struct Name : Error {                                       \
        explicit Name(const std::string& what) : Error(what) {} \
    }

QFORGE_ERROR_KIND(DivisionByZero);
QFORGE_ERROR_KIND(EvaluationPole);
QFORGE_ERROR_KIND(InvalidSubstitution);
QFORGE_ERROR_KIND(UnboundVariable);
QFORGE_ERROR_KIND(OrderExceeded);
QFORGE_ERROR_KIND(NonUnitConstantTerm);
QFORGE_ERROR_KIND(InsufficientTerms);
QFORGE_ERROR_KIND(InvalidArgument);
QFORGE_ERROR_KIND(DenominatorDegeneracy);
QFORGE_ERROR_KIND(UnknownIdentity);
QFORGE_ERROR_KIND(UnsupportedIdentity);
QFORGE_ERROR_KIND(ArityError);

#undef QFORGE_ERROR_KIND

// Parse failure carrying the source position and the token classes that
// would have been accepted at that point.
struct ParseError : Error {
    int line;
    int column;
    std::vector<std::string> expected;
    std::string got;

    ParseError(int line_, int column_, std::vector<std::string> expected_,
               std::string got_)
        : Error(format(line_, column_, expected_, got_)),
          line(line_),
          column(column_),
          expected(std::move(expected_)),
          got(std::move(got_)) {}

private:
    static std::string format(int line, int column,
                              const std::vector<std::string>& expected,
                              const std::string& got) {
        std::string msg = std::to_string(line) + ":" + std::to_string(column) +
                          ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", got ";
        msg += got;
        return msg;
    }
};

}  // namespace qforge

#endif  // QFORGE_ERROR_HPP
