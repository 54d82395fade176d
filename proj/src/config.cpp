#include "scatter1d/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "scatter1d/errors.hpp"

namespace scatter1d {

using nlohmann::json;

std::vector<double> SweepSpec::points() const
{
    std::vector<double> ks;
    ks.reserve(n_k);
    if (n_k == 1) {
        ks.push_back(k_min);
        return ks;
    }
    for (std::size_t i = 0; i < n_k; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n_k - 1);
        if (spacing == Spacing::Log)
            ks.push_back(k_min * std::pow(k_max / k_min, t));
        else
            ks.push_back(k_min + (k_max - k_min) * t);
    }
    return ks;
}

bool RunConfig::has_task(Task t) const
{
    for (Task task : tasks)
        if (task == t)
            return true;
    return false;
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why)
{
    throw ConfigError("config field '" + field + "': " + why);
}

double need_number(const json& obj, const std::string& field, const std::string& ctx)
{
    if (!obj.contains(field))
        fail(ctx + "." + field, "missing");
    if (!obj[field].is_number())
        fail(ctx + "." + field, "must be a number");
    return obj[field].get<double>();
}

double number_or(const json& obj, const std::string& field, double fallback,
                 const std::string& ctx)
{
    if (!obj.contains(field))
        return fallback;
    if (!obj[field].is_number())
        fail(ctx + "." + field, "must be a number");
    return obj[field].get<double>();
}

PotentialModel parse_potential(const json& block)
{
    if (!block.is_object())
        fail("potential", "must be an object");
    if (!block.contains("kind") || !block["kind"].is_string())
        fail("potential.kind", "missing or not a string");
    const std::string kind = block["kind"].get<std::string>();

    try {
        if (kind == "delta")
            return PotentialModel::delta(need_number(block, "strength", "potential"));
        if (kind == "square_well")
            return PotentialModel::square_well(need_number(block, "depth", "potential"),
                                               need_number(block, "half_width", "potential"));
        if (kind == "gaussian")
            return PotentialModel::gaussian(need_number(block, "amplitude", "potential"),
                                            need_number(block, "width", "potential"),
                                            number_or(block, "range", 0.0, "potential"));
        if (kind == "exponential")
            return PotentialModel::exponential(need_number(block, "amplitude", "potential"),
                                               need_number(block, "decay_range", "potential"),
                                               number_or(block, "range", 0.0, "potential"));
        if (kind == "tabulated") {
            if (!block.contains("r") || !block["r"].is_array())
                fail("potential.r", "missing sample array");
            if (!block.contains("v") || !block["v"].is_array())
                fail("potential.v", "missing sample array");
            return PotentialModel::tabulated(block["r"].get<std::vector<double>>(),
                                             block["v"].get<std::vector<double>>(),
                                             need_number(block, "range", "potential"));
        }
    } catch (const std::invalid_argument& e) {
        fail("potential", e.what());
    }
    fail("potential.kind", "unknown kind '" + kind + "'");
}

} // namespace

void apply_set_override(json& doc, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("--set expects path=value, got '" + assignment + "'");

    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    json value;
    try {
        value = json::parse(raw);
    } catch (const json::parse_error&) {
        value = raw; // plain string
    }

    json* node = &doc;
    std::stringstream ss(path);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.')) {
        if (part.empty())
            throw ConfigError("--set path '" + path + "' has an empty segment");
        parts.push_back(part);
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        node = &(*node)[parts[i]];
    (*node)[parts.back()] = value;
}

RunConfig parse_config(const json& doc)
{
    if (!doc.is_object())
        throw ConfigError("config root must be a JSON object");

    RunConfig cfg;

    if (!doc.contains("potential"))
        fail("potential", "missing");
    cfg.potential_model = parse_potential(doc["potential"]);

    if (doc.contains("sweep")) {
        const json& sw = doc["sweep"];
        cfg.sweep.k_min = need_number(sw, "k_min", "sweep");
        cfg.sweep.k_max = number_or(sw, "k_max", cfg.sweep.k_min, "sweep");
        cfg.sweep.n_k = static_cast<std::size_t>(number_or(sw, "n_k", 1, "sweep"));
        if (sw.contains("spacing")) {
            const std::string sp = sw["spacing"].is_string() ? sw["spacing"].get<std::string>() : "";
            if (sp == "linear")
                cfg.sweep.spacing = SweepSpec::Spacing::Linear;
            else if (sp == "log")
                cfg.sweep.spacing = SweepSpec::Spacing::Log;
            else
                fail("sweep.spacing", "must be 'linear' or 'log'");
        }
    }
    if (cfg.sweep.k_min <= 0.0)
        fail("sweep.k_min", "must be > 0");
    if (cfg.sweep.k_max < cfg.sweep.k_min)
        fail("sweep.k_max", "must be >= k_min");
    if (cfg.sweep.n_k < 1)
        fail("sweep.n_k", "must be >= 1");
    if (cfg.sweep.spacing == SweepSpec::Spacing::Log && cfg.sweep.k_min == cfg.sweep.k_max &&
        cfg.sweep.n_k > 1)
        fail("sweep.spacing", "log spacing needs k_min < k_max");

    if (doc.contains("solver")) {
        const json& so = doc["solver"];
        cfg.solver.n_grid = static_cast<std::size_t>(number_or(so, "n_grid", 200, "solver"));
        cfg.solver.map_scale = number_or(so, "map_scale", 0.0, "solver");
        if (so.contains("tolerances")) {
            const json& tol = so["tolerances"];
            cfg.solver.tolerances.unitarity_warn =
                number_or(tol, "unitarity_warn", 1e-3, "solver.tolerances");
            cfg.solver.tolerances.rt_warn = number_or(tol, "rt_warn", 1e-8, "solver.tolerances");
            cfg.solver.tolerances.condition_warn =
                number_or(tol, "condition_warn", 1e12, "solver.tolerances");
            cfg.solver.tolerances.rspace_resolution =
                number_or(tol, "rspace_resolution", 1e-6, "solver.tolerances");
        }
    }
    if (cfg.solver.n_grid < 8)
        fail("solver.n_grid", "must be >= 8");

    if (doc.contains("bound_states")) {
        const json& bs = doc["bound_states"];
        cfg.bound_states.e_min = number_or(bs, "e_min", -10.0, "bound_states");
        cfg.bound_states.e_max = number_or(bs, "e_max", -1e-4, "bound_states");
        cfg.bound_states.n_scan =
            static_cast<std::size_t>(number_or(bs, "n_scan", 200, "bound_states"));
        if (!(cfg.bound_states.e_min < cfg.bound_states.e_max && cfg.bound_states.e_max < 0.0))
            fail("bound_states", "window must satisfy e_min < e_max < 0");
        if (cfg.bound_states.n_scan < 2)
            fail("bound_states.n_scan", "must be >= 2");
    }

    if (!doc.contains("tasks") || !doc["tasks"].is_array())
        fail("tasks", "missing task list");
    for (const json& t : doc["tasks"]) {
        const std::string name = t.is_string() ? t.get<std::string>() : "";
        if (name == "observables")
            cfg.tasks.push_back(Task::Observables);
        else if (name == "wavefunction")
            cfg.tasks.push_back(Task::Wavefunction);
        else if (name == "bound-states")
            cfg.tasks.push_back(Task::BoundStates);
        else if (name == "verify")
            cfg.tasks.push_back(Task::Verify);
        else
            fail("tasks", "unknown task '" + name + "'");
    }
    if (cfg.tasks.empty())
        fail("tasks", "no tasks requested");

    if (doc.contains("output")) {
        const json& out = doc["output"];
        if (out.contains("directory")) {
            if (!out["directory"].is_string())
                fail("output.directory", "must be a string");
            cfg.output.directory = out["directory"].get<std::string>();
        }
        if (out.contains("formats")) {
            if (!out["formats"].is_array())
                fail("output.formats", "must be an array");
            cfg.output.csv = false;
            cfg.output.json = false;
            for (const json& f : out["formats"]) {
                const std::string fmt = f.is_string() ? f.get<std::string>() : "";
                if (fmt == "csv")
                    cfg.output.csv = true;
                else if (fmt == "json")
                    cfg.output.json = true;
                else
                    fail("output.formats", "unknown format '" + fmt + "'");
            }
            if (!cfg.output.csv && !cfg.output.json)
                fail("output.formats", "must request at least one format");
        }
        cfg.output.precision = static_cast<int>(number_or(out, "precision", 17, "output"));
        if (cfg.output.precision < 2 || cfg.output.precision > 17)
            fail("output.precision", "must be in [2, 17]");
    }

    return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
    for (const auto& ov : overrides)
        apply_set_override(doc, ov);
    return parse_config(doc);
}

} // namespace scatter1d
