#ifndef BASINLAB_REPORT_HPP
#define BASINLAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "basinlab/dynamics.hpp"
#include "basinlab/methods.hpp"

namespace basinlab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Claim groups accepted by --claims.
const std::vector<std::string>& known_claims();

struct VerifyOptions {
    MethodKind method = MethodKind::Halley;
    int d_from = 2;
    int d_to = 2;
    /// Empty means every claim group.
    std::vector<std::string> claims;
    /// Window used by the grid-based audits (boundedness, shared-boundary, symmetry).
    GridSpec grid;
    Connectivity connectivity = Connectivity::Four;
    int symmetry_trials = 500;
};

struct VerifyOutcome {
    Json report;
    int verdicts = 0;
    int failed = 0;
    bool all_pass() const { return failed == 0; }
};

/// Runs the selected audits and assembles the report. Throws DomainError on an
/// unknown claim name or an empty degree range.
VerifyOutcome run_verify(const VerifyOptions& opts);

/// printf-style %.{digits}g.
std::string format_g(double x, int digits);
/// {"re": "...", "im": "..."} with 15 significant digits.
Json point_json(cplx z);

}  // namespace basinlab

#endif  // BASINLAB_REPORT_HPP
