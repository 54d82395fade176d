#ifndef SCATTER1D_CONFIG_HPP
#define SCATTER1D_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scatter1d/potential.hpp"

namespace scatter1d {

enum class Task { Observables, Wavefunction, BoundStates, Verify };

struct SweepSpec {
    double k_min = 1.0;
    double k_max = 1.0;
    std::size_t n_k = 1;
    enum class Spacing { Linear, Log } spacing = Spacing::Linear;

    std::vector<double> points() const;
};

struct SolverTolerances {
    double unitarity_warn = 1e-3;  // ||S| - 1| above this flags the channel
    double rt_warn = 1e-8;         // |R + T - 1| above this flags the row
    double condition_warn = 1e12;
    double rspace_resolution = 1e-6;
};

struct SolverSpec {
    std::size_t n_grid = 200;
    double map_scale = 0.0; // 0 = max(1, k)
    SolverTolerances tolerances;
};

struct BoundStateSpec {
    double e_min = -10.0;
    double e_max = -1e-4;
    std::size_t n_scan = 200;
};

struct OutputSpec {
    std::string directory = ".";
    bool csv = true;
    bool json = false;
    int precision = 17; // significant digits in CSV
};

struct RunConfig {
    std::optional<PotentialModel> potential_model;
    SweepSpec sweep;
    SolverSpec solver;
    BoundStateSpec bound_states;
    OutputSpec output;
    std::vector<Task> tasks;

    const PotentialModel& potential() const { return *potential_model; }
    bool has_task(Task t) const;
};

/// Applies one `--set path=value` override to the raw JSON document.
/// The path is dot-separated; the value is parsed as JSON when possible
/// and treated as a string otherwise.
void apply_set_override(nlohmann::json& doc, const std::string& assignment);

/// Parses and validates a configuration document. Throws ConfigError with
/// the offending field in the message.
RunConfig parse_config(const nlohmann::json& doc);

/// Reads the file, applies overrides in order, then parses.
RunConfig load_config(const std::string& path,
                      const std::vector<std::string>& overrides = {});

} // namespace scatter1d

#endif
