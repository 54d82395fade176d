#include "scatter1d/runner.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numbers>
#include <thread>

#include "scatter1d/errors.hpp"
#include "scatter1d/lssolver.hpp"
#include "scatter1d/observables.hpp"
#include "scatter1d/rspace.hpp"
#include "scatter1d/verify.hpp"

namespace scatter1d {

namespace fs = std::filesystem;
using nlohmann::json;

const char* const kResultColumns[] = {
    "k", "E", "delta0", "delta1",
    "re_f_plus", "im_f_plus", "re_f_minus", "im_f_minus",
    "sigma_plus", "sigma_minus", "sigma_tot", "R", "T",
    "optical_residual_13", "optical_residual_14", "unitarity_residual",
    "condition_estimate", "warning",
};
const std::size_t kResultColumnCount = std::size(kResultColumns);

namespace {

std::string format_double(double v, int precision)
{
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, precision - 1);
    return std::string(buf, res.ptr);
}

std::size_t sweep_thread_count(std::size_t n_items)
{
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SCATTER1D_THREADS")) {
        std::size_t requested = 0;
        const auto res = std::from_chars(env, env + std::char_traits<char>::length(env), requested);
        if (res.ec == std::errc() && requested > 0)
            hw = requested;
    }
    return std::max<std::size_t>(1, std::min(hw, n_items));
}

ResultRow compute_row(const RunConfig& config, double k)
{
    const auto& tol = config.solver.tolerances;
    const HalfOffShellT t0 =
        solve_halfoffshell(config.potential(), 0, k, config.solver.n_grid, config.solver.map_scale);
    const HalfOffShellT t1 =
        solve_halfoffshell(config.potential(), 1, k, config.solver.n_grid, config.solver.map_scale);

    const ChannelResult even = phase_shift(t0.on_shell(), k, 0);
    const ChannelResult odd = phase_shift(t1.on_shell(), k, 1);
    const ScatteringReport rep = cross_sections_and_rt(even, odd);

    ResultRow row;
    row.k = k;
    row.E = k * k;
    row.delta0 = even.delta;
    row.delta1 = odd.delta;
    row.f_plus = rep.f_plus;
    row.f_minus = rep.f_minus;
    row.sigma_plus = rep.sigma_plus;
    row.sigma_minus = rep.sigma_minus;
    row.sigma_tot = rep.sigma_tot;
    row.reflection = rep.reflection;
    row.transmission = rep.transmission;
    row.optical_residual_13 = rep.optical_residual_13;
    row.optical_residual_14 = rep.optical_residual_14;
    row.unitarity_residual = rep.unitarity_residual;
    row.condition_estimate = std::max(t0.condition_estimate, t1.condition_estimate);

    std::string warn;
    auto add_warning = [&](const char* w) {
        if (!warn.empty())
            warn += ';';
        warn += w;
    };
    if (std::abs(row.reflection + row.transmission - 1.0) > tol.rt_warn)
        add_warning("rt_deviation");
    if (!even.unitary || !odd.unitary)
        add_warning("non_unitary");
    if (row.condition_estimate > tol.condition_warn)
        add_warning("ill_conditioned");
    row.warning = warn;
    return row;
}

void write_text_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out.good())
        throw std::ios_base::failure("write failed for '" + path.string() + "'");
}

std::string format_compact(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_wavefunction_files(const RunConfig& config)
{
    const PotentialModel& model = config.potential();
    const double span = model.range() > 0.0 ? 3.0 * model.range() : 3.0;

    for (double k : config.sweep.points()) {
        const double per_wavelength = 20.0 * (2.0 * span * k) / (2.0 * std::numbers::pi);
        const std::size_t n =
            std::clamp<std::size_t>(static_cast<std::size_t>(per_wavelength), 241, 4001);
        std::vector<double> xs(n);
        for (std::size_t i = 0; i < n; ++i)
            xs[i] = -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(n - 1);

        const WavefunctionProfile profile = solve_wavefunction(model, k, xs);

        std::string csv = "x,re_psi,im_psi,abs2_psi\n";
        for (std::size_t i = 0; i < n; ++i) {
            csv += format_double(xs[i], config.output.precision);
            csv += ',';
            csv += format_double(profile.psi[i].real(), config.output.precision);
            csv += ',';
            csv += format_double(profile.psi[i].imag(), config.output.precision);
            csv += ',';
            csv += format_double(std::norm(profile.psi[i]), config.output.precision);
            csv += '\n';
        }
        const fs::path path =
            fs::path(config.output.directory) / ("wavefunction_k" + format_compact(k) + ".csv");
        write_text_file(path, csv);
    }
}

void write_bound_states_file(const RunConfig& config)
{
    json doc;
    doc["states"] = json::array();
    doc["warnings"] = json::array();
    for (int parity = 0; parity <= 1; ++parity) {
        const BoundStateScan scan =
            find_bound_states(config.potential(), parity, config.bound_states.e_min,
                              config.bound_states.e_max, config.bound_states.n_scan,
                              config.solver.n_grid);
        for (const auto& s : scan.states) {
            doc["states"].push_back({{"parity", s.parity},
                                     {"energy", s.energy},
                                     {"det_residual", s.det_residual}});
        }
        for (const auto& w : scan.warnings)
            doc["warnings"].push_back(w);
    }
    write_text_file(fs::path(config.output.directory) / "bound_states.json", doc.dump(2) + "\n");
}

} // namespace

std::vector<ResultRow> run_sweep(const RunConfig& config)
{
    const std::vector<double> ks = config.sweep.points();
    std::vector<ResultRow> rows(ks.size());

    const std::size_t n_threads = sweep_thread_count(ks.size());
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < ks.size(); ++i)
            rows[i] = compute_row(config, ks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= ks.size())
                    return;
                try {
                    rows[i] = compute_row(config, ks[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    // Continue the phase shifts along the sweep by minimal pi jumps.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        rows[i].delta0 = unwrap_phase(rows[i - 1].delta0, rows[i].delta0);
        rows[i].delta1 = unwrap_phase(rows[i - 1].delta1, rows[i].delta1);
    }
    return rows;
}

std::string format_results_csv(const std::vector<ResultRow>& rows, int precision)
{
    std::string out;
    for (std::size_t c = 0; c < kResultColumnCount; ++c) {
        if (c)
            out += ',';
        out += kResultColumns[c];
    }
    out += '\n';

    for (const auto& r : rows) {
        const double cols[] = {
            r.k, r.E, r.delta0, r.delta1,
            r.f_plus.real(), r.f_plus.imag(), r.f_minus.real(), r.f_minus.imag(),
            r.sigma_plus, r.sigma_minus, r.sigma_tot, r.reflection, r.transmission,
            r.optical_residual_13, r.optical_residual_14, r.unitarity_residual,
            r.condition_estimate,
        };
        for (double v : cols) {
            out += format_double(v, precision);
            out += ',';
        }
        out += r.warning;
        out += '\n';
    }
    return out;
}

json results_to_json(const std::vector<ResultRow>& rows)
{
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({
            {"k", r.k},
            {"E", r.E},
            {"delta0", r.delta0},
            {"delta1", r.delta1},
            {"re_f_plus", r.f_plus.real()},
            {"im_f_plus", r.f_plus.imag()},
            {"re_f_minus", r.f_minus.real()},
            {"im_f_minus", r.f_minus.imag()},
            {"sigma_plus", r.sigma_plus},
            {"sigma_minus", r.sigma_minus},
            {"sigma_tot", r.sigma_tot},
            {"R", r.reflection},
            {"T", r.transmission},
            {"optical_residual_13", r.optical_residual_13},
            {"optical_residual_14", r.optical_residual_14},
            {"unitarity_residual", r.unitarity_residual},
            {"condition_estimate", r.condition_estimate},
            {"warning", r.warning},
        });
    }
    return arr;
}

ConvergenceStudy convergence_study(const RunConfig& config,
                                   const std::vector<std::size_t>& n_list)
{
    if (n_list.size() < 3)
        throw ConfigError("convergence study needs at least 3 grid sizes");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw ConfigError("convergence study grid sizes must be strictly increasing");

    ConvergenceStudy study;
    study.k = config.sweep.points().front();

    std::vector<std::array<double, 2>> deltas;
    for (std::size_t n : n_list) {
        const auto t0 = solve_halfoffshell(config.potential(), 0, study.k, n, config.solver.map_scale);
        const auto t1 = solve_halfoffshell(config.potential(), 1, study.k, n, config.solver.map_scale);
        deltas.push_back({phase_shift(t0.on_shell(), study.k, 0).delta,
                          phase_shift(t1.on_shell(), study.k, 1).delta});
    }

    const auto& richest = deltas.back();
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        ConvergenceRow row;
        row.n_grid = n_list[i];
        row.delta0 = deltas[i][0];
        row.delta1 = deltas[i][1];
        row.diff_from_richest = std::max(std::abs(deltas[i][0] - richest[0]),
                                         std::abs(deltas[i][1] - richest[1]));
        study.rows.push_back(row);
    }
    for (std::size_t i = 1; i + 1 < study.rows.size(); ++i)
        if (study.rows[i].diff_from_richest >= study.rows[i - 1].diff_from_richest)
            study.monotone = false;
    return study;
}

int run_tasks(const RunConfig& config)
{
    const fs::path out_dir(config.output.directory);
    fs::create_directories(out_dir);

    int status = 0;
    if (config.has_task(Task::Observables)) {
        const auto rows = run_sweep(config);
        if (config.output.csv)
            write_text_file(out_dir / "observables.csv",
                            format_results_csv(rows, config.output.precision));
        if (config.output.json)
            write_text_file(out_dir / "observables.json", results_to_json(rows).dump(2) + "\n");
    }
    if (config.has_task(Task::Wavefunction))
        write_wavefunction_files(config);
    if (config.has_task(Task::BoundStates))
        write_bound_states_file(config);
    if (config.has_task(Task::Verify)) {
        const auto results = run_verification();
        write_text_file(out_dir / "verify_report.json",
                        verification_to_json(results).dump(2) + "\n");
        for (const auto& r : results)
            if (!r.pass)
                status = 1;
    }
    return status;
}

} // namespace scatter1d
