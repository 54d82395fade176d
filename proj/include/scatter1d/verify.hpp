#ifndef SCATTER1D_VERIFY_HPP
#define SCATTER1D_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace scatter1d {

/// Outcome of one verification criterion. `worst` is the largest residual
/// (or comparison error) observed, checked against `tolerance`.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double worst = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// Runs the full verification suite: delta golden values, bound states,
/// unitarity and optical theorems, the differential-equation cross-check,
/// the two-route amplitude comparison, parity reconstruction, grid
/// convergence and the narrow-well limit.
std::vector<CriterionResult> run_verification();

nlohmann::json verification_to_json(const std::vector<CriterionResult>& results);

} // namespace scatter1d

#endif
