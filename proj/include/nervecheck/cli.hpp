#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "nervecheck/fields.hpp"

namespace nervecheck::cli {

/// Exit codes shared by every subcommand.
enum ExitCode {
    exit_ok = 0,         // pass, or informational (e.g. failed hypotheses)
    exit_property = 1,   // a checked property is false
    exit_input = 2,      // unreadable/invalid file, flag, or option value
    exit_cover = 3,      // cover conditions (subcomplex/union) violated
    exit_falsified = 4,  // hypotheses held but a conclusion failed
};

/// "z", "q", or "p:<prime>".  Throws io::ParseError on anything else.
CoefficientSpec parse_coeff(const std::string& text);

struct CheckOptions {
    std::string mode = "theorem";  // theorem | prop1 | collapse | dowker | gmap
    std::optional<int> k;          // theorem level / gmap top degree
    CoefficientSpec coeff = CoefficientSpec::integers();
    bool coeff_given = false;
    bool trace = false;
    std::optional<int> max_dim;  // dowker truncation
};

/// Each command writes one JSON report to `out` and a one-line human summary
/// to `err`, and returns an ExitCode.  No command throws.
int cmd_homology(const std::string& path, const CoefficientSpec& coeff, bool reduced,
                 std::ostream& out, std::ostream& err);
int cmd_nerve(const std::string& path, std::optional<int> max_dim, std::ostream& out,
              std::ostream& err);
int cmd_rips(const std::string& path, const std::string& r_text, std::optional<int> max_dim,
             const CoefficientSpec& coeff, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace nervecheck::cli
