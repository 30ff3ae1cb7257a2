#include "qforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "qforge/error.hpp"
#include "qforge/expr.hpp"
#include "qforge/verify.hpp"

namespace qforge {
namespace {

using ojson = nlohmann::ordered_json;

constexpr long kDefaultMaxOrder = 16;

// Reads the QFORGE_MAX_ORDER cap from the environment.  An unset or empty
// variable means the default; anything unparseable is a usage error.
bool max_order_from_env(long& cap, std::ostream& err) {
    const char* env = std::getenv("QFORGE_MAX_ORDER");
    if (env == nullptr || *env == '\0') {
        cap = kDefaultMaxOrder;
        return true;
    }
    char* endp = nullptr;
    const long v = std::strtol(env, &endp, 10);
    if (endp == env || *endp != '\0' || v < 0 || v > 1000000) {
        err << "qforge: invalid QFORGE_MAX_ORDER value '" << env << "'\n";
        return false;
    }
    cap = v;
    return true;
}

bool parse_long(const std::string& s, long& value) {
    if (s.empty()) return false;
    char* endp = nullptr;
    value = std::strtol(s.c_str(), &endp, 10);
    return endp == s.c_str() + s.size();
}

// NAME=VALUE with an integer VALUE.
bool parse_param_assignment(const std::string& s, std::string& name,
                            long& value) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) return false;
    name = s.substr(0, eq);
    return parse_long(s.substr(eq + 1), value);
}

// "LO..HI" with integer bounds, LO <= HI.
bool parse_range(const std::string& s, long& lo, long& hi) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) return false;
    if (!parse_long(s.substr(0, dots), lo)) return false;
    if (!parse_long(s.substr(dots + 2), hi)) return false;
    return lo <= hi;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

// Writes the payload to stdout, or to --out when given (nothing else goes to
// stdout in that case).
int emit(const std::string& payload, const std::string& outfile,
         std::ostream& out, std::ostream& err) {
    if (outfile.empty()) {
        out << payload;
        return 0;
    }
    std::ofstream f(outfile, std::ios::binary);
    if (!f) {
        err << "qforge: cannot open '" << outfile << "' for writing\n";
        return 2;
    }
    f << payload;
    f.flush();
    if (!f) {
        err << "qforge: error while writing '" << outfile << "'\n";
        return 2;
    }
    return 0;
}

struct VerifyOptions {
    std::string suite;
    std::string id;
    std::vector<std::string> params;
    long order = -1;
    bool order_set = false;
    std::string format = "text";
    std::string outfile;
    bool timing = false;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out,
               std::ostream& err) {
    long cap = 0;
    if (!max_order_from_env(cap, err)) return 2;
    if (opt.suite.empty() == opt.id.empty()) {
        err << "qforge verify: exactly one of --suite or --id is required\n";
        return 2;
    }
    try {
        std::vector<SuiteCell> grid;
        std::string label;
        if (!opt.suite.empty()) {
            if (opt.order_set) {
                err << "qforge verify: --order applies to a single identity, "
                       "not a suite\n";
                return 2;
            }
            if (!opt.params.empty()) {
                err << "qforge verify: --param applies to a single identity, "
                       "not a suite\n";
                return 2;
            }
            label = opt.suite;
            grid = suite_grid(opt.suite);
        } else {
            label = opt.id;
            const IdentitySpec& spec = find_identity(opt.id);
            if (!opt.params.empty()) {
                ParamMap values;
                for (const auto& assignment : opt.params) {
                    std::string name;
                    long value = 0;
                    if (!parse_param_assignment(assignment, name, value)) {
                        err << "qforge verify: malformed --param '"
                            << assignment << "' (expected NAME=VALUE)\n";
                        return 2;
                    }
                    values[name] = value;
                }
                grid.push_back(SuiteCell{opt.id, values});
            } else {
                grid = default_grid(opt.id);
            }
            if (opt.order_set) {
                bool has_n = false;
                for (const auto& p : spec.params) has_n |= (p.name == "N");
                if (!has_n) {
                    err << "qforge verify: --order requires an identity with "
                           "a truncation parameter N\n";
                    return 2;
                }
                for (auto& cell : grid) cell.params["N"] = opt.order;
            }
        }
        for (const auto& cell : grid) {
            for (const auto& [name, value] : cell.params) {
                if ((name == "N" || name == "M") && value > cap) {
                    err << "qforge verify: " << cell.id << " " << name << "="
                        << value << " exceeds QFORGE_MAX_ORDER (" << cap
                        << ")\n";
                    return 2;
                }
            }
        }
        const std::vector<IdentityReport> reports = check_suite(grid);
        const std::string payload =
            opt.format == "json" ? report_to_json(label, reports, opt.timing)
                                 : report_to_text(label, reports, opt.timing);
        const int io = emit(payload, opt.outfile, out, err);
        if (io != 0) return io;
        for (const auto& r : reports) {
            if (r.status != CheckStatus::pass) return 1;
        }
        return 0;
    } catch (const Error& e) {
        err << "qforge verify: " << e.what() << "\n";
        return 2;
    }
}

struct ExpandOptions {
    std::string expr;
    std::string format = "text";
    std::string outfile;
};

int cmd_expand(const ExpandOptions& opt, std::ostream& out,
               std::ostream& err) {
    long cap = 0;
    if (!max_order_from_env(cap, err)) return 2;
    try {
        const auto ast = parse_expression(opt.expr);
        const Value value = evaluate(*ast, static_cast<int>(cap));
        std::string payload;
        if (opt.format == "json") {
            ojson doc;
            doc["canonical"] = value_str(value);
            payload = doc.dump() + "\n";
        } else {
            payload = value_str(value) + "\n";
        }
        return emit(payload, opt.outfile, out, err);
    } catch (const ParseError& e) {
        err << "qforge expand: parse error at " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "qforge expand: " << e.what() << "\n";
        return 2;
    }
}

struct FitOptions {
    std::string id;
    std::string basis;
    std::string range = "-5..5";
    std::string format = "text";
    std::string outfile;
};

int cmd_fit(const FitOptions& opt, std::ostream& out, std::ostream& err) {
    long lo = 0;
    long hi = 0;
    if (!parse_range(opt.range, lo, hi)) {
        err << "qforge fit: malformed --range '" << opt.range
            << "' (expected LO..HI with LO <= HI)\n";
        return 2;
    }
    try {
        std::vector<BasisMonomial> basis;
        for (const auto& part : split_csv(opt.basis)) {
            basis.push_back(parse_basis_monomial(part));
        }
        const CorrectionFit fit =
            fit_exponent_correction(opt.id, basis, lo, hi);
        const bool found = fit.coeffs.has_value();
        std::string payload;
        if (opt.format == "json") {
            ojson doc;
            doc["id"] = opt.id;
            ojson basis_names = ojson::array();
            for (const auto& b : basis) basis_names.push_back(b.str());
            doc["basis"] = basis_names;
            doc["range"] = ojson::array({lo, hi});
            doc["found"] = found;
            if (found) {
                ojson coeffs = ojson::array();
                for (const long c : *fit.coeffs) coeffs.push_back(c);
                doc["coeffs"] = coeffs;
            } else {
                doc["coeffs"] = nullptr;
            }
            payload = doc.dump() + "\n";
        } else {
            std::string line = "fit " + opt.id + " basis";
            for (std::size_t i = 0; i < basis.size(); ++i) {
                line += (i == 0 ? " " : ", ") + basis[i].str();
            }
            line += " range [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]: ";
            if (found) {
                line += "found coefficients [";
                for (std::size_t i = 0; i < fit.coeffs->size(); ++i) {
                    if (i > 0) line += ", ";
                    line += std::to_string((*fit.coeffs)[i]);
                }
                line += "]";
            } else {
                line += "no correction in range";
            }
            payload = line + "\n";
        }
        const int io = emit(payload, opt.outfile, out, err);
        if (io != 0) return io;
        return found ? 0 : 1;
    } catch (const Error& e) {
        err << "qforge fit: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact q-series expansion and identity verification",
                 "qforge"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand(
        "verify", "check identities by exact expansion");
    verify->add_option("--suite", vopt.suite,
                       "suite name: foundational, theorems, qdiff, or all");
    verify->add_option("--id", vopt.id, "single identity id");
    verify->add_option("--param", vopt.params,
                       "parameter assignment NAME=VALUE (repeatable)")
        ->delimiter(',');
    verify->add_option("--order", vopt.order, "override truncation order N")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--format", vopt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", vopt.outfile, "write the report to a file");
    verify->add_flag("--timing", vopt.timing,
                     "include per-check elapsed time");

    ExpandOptions eopt;
    CLI::App* expand = app.add_subcommand(
        "expand", "expand an expression to canonical form");
    expand->add_option("expr", eopt.expr, "expression to expand")
        ->required();
    expand->add_option("--format", eopt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    expand->add_option("--out", eopt.outfile, "write the result to a file");

    FitOptions fopt;
    CLI::App* fit = app.add_subcommand(
        "fit", "search for a monomial exponent correction q^(sum c_i b_i)");
    fit->add_option("--id", fopt.id, "identity id")->required();
    fit->add_option("--basis", fopt.basis,
                    "comma-separated exponent basis, e.g. 1,r,l,r*l,r^2")
        ->required();
    fit->add_option("--range", fopt.range,
                    "coefficient range LO..HI (default -5..5)");
    fit->add_option("--format", fopt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    fit->add_option("--out", fopt.outfile, "write the result to a file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()),
                  const_cast<char**>(argv.data()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    vopt.order_set = verify->count("--order") > 0;

    if (verify->parsed()) return cmd_verify(vopt, out, err);
    if (expand->parsed()) return cmd_expand(eopt, out, err);
    return cmd_fit(fopt, out, err);
}

}  // namespace qforge
