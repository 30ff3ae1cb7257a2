#ifndef QFORGE_VERIFY_HPP
#define QFORGE_VERIFY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qforge/mpoly.hpp"
#include "qforge/series.hpp"

namespace qforge {

// Evidence for a failed check: the graded-lex-least monomial whose
// coefficients differ, with both sides rendered canonically.
struct Mismatch {
    std::string monomial;
    std::string lhs;
    std::string rhs;
};

enum class CheckStatus { pass, fail, error };

using ParamMap = std::map<std::string, long>;

struct IdentityReport {
    std::string id;
    std::vector<std::pair<std::string, long>> params;  // declared order
    CheckStatus status = CheckStatus::pass;
    std::optional<Mismatch> mismatch;
    std::string message;  // only for status == error
    long long elapsed_us = 0;
};

struct ParamSpec {
    std::string name;
    long lo;
    long hi;
};

// One summand of an identity's expanded side, tagged with the values of the
// indices that produced it.  The value carries every declared factor, so a
// candidate exponent correction is a plain q-power rescaling.
struct FitTerm {
    std::map<std::string, long> indices;
    MultiPoly value;
};

struct FitCell {
    std::vector<std::pair<std::string, long>> params;
    MultiPoly lhs;
    std::vector<FitTerm> terms;
};

struct IdentitySpec {
    std::string id;
    std::string description;
    std::vector<ParamSpec> params;
    // Per-parameter value lists of the default grid, in declared order.
    std::vector<std::vector<long>> default_values;
    // Index names a correction basis may reference; empty when the identity
    // exposes no term decomposition.
    std::vector<std::string> index_names;
    std::function<std::optional<Mismatch>(const ParamMap&)> check;
    std::function<FitCell(const ParamMap&)> fit_cell;  // may be empty
};

const std::vector<IdentitySpec>& registry();
const IdentitySpec& find_identity(const std::string& id);

// Validates parameters against the declared ranges (InvalidArgument on a
// missing, unknown, or out-of-range value), then runs the check.  Library
// errors raised during evaluation are captured as an error-status report.
IdentityReport check_identity(const std::string& id, const ParamMap& params);

struct SuiteCell {
    std::string id;
    ParamMap params;
};

std::vector<SuiteCell> default_grid(const std::string& id);
// "foundational", "theorems", "qdiff", or "all"; cells are ordered by id and
// then by parameter tuple.
std::vector<SuiteCell> suite_grid(const std::string& suite);
std::vector<IdentityReport> check_suite(const std::vector<SuiteCell>& grid);

std::optional<Mismatch> first_mismatch(const MultiPoly& lhs,
                                       const MultiPoly& rhs);
std::optional<Mismatch> first_mismatch(const TruncSeries& lhs,
                                       const TruncSeries& rhs);
std::optional<Mismatch> first_mismatch(const BiTruncSeries& lhs,
                                       const BiTruncSeries& rhs);

// Compact single-line JSON document (plus trailing newline); byte-stable
// across runs.  elapsed_us fields appear only when timing is set.
std::string report_to_json(const std::string& suite,
                           const std::vector<IdentityReport>& reports,
                           bool timing = false);
std::string report_to_text(const std::string& suite,
                           const std::vector<IdentityReport>& reports,
                           bool timing = false);

// Product of powers of summation indices: "1", "r", "r*l", "r^2".
struct BasisMonomial {
    std::vector<std::pair<std::string, int>> factors;
    long eval(const std::map<std::string, long>& indices) const;
    std::string str() const;
};
BasisMonomial parse_basis_monomial(const std::string& text);

struct CorrectionFit {
    std::string id;
    std::vector<BasisMonomial> basis;
    long lo = 0;
    long hi = 0;
    std::optional<std::vector<long>> coeffs;
};

// Exhaustive search over integer coefficient vectors in [lo, hi]^basis,
// lexicographically least first, for a correction making every cell satisfy
//   lhs == sum_t q^(sum_i c_i basis_i(indices_t)) term_t.
// Cell checks are memoized by the induced exponent tuple, so candidates
// that produce the same rescaling are only expanded once.
std::optional<std::vector<long>> fit_correction(
    const std::vector<FitCell>& cells, const std::vector<BasisMonomial>& basis,
    long lo, long hi);

// Cells of id's default grid (UnsupportedIdentity when the identity has no
// term decomposition).
std::vector<FitCell> fit_cells(const std::string& id);

CorrectionFit fit_exponent_correction(const std::string& id,
                                      const std::vector<BasisMonomial>& basis,
                                      long lo, long hi);

}  // namespace qforge

#endif  // QFORGE_VERIFY_HPP
