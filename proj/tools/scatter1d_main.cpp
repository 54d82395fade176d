#include <charconv>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scatter1d/config.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

std::vector<std::size_t> parse_grid_list(const std::string& csv)
{
    std::vector<std::size_t> grids;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', pos), csv.size());
        std::size_t value = 0;
        const auto res = std::from_chars(csv.data() + pos, csv.data() + comma, value);
        if (res.ec != std::errc() || res.ptr != csv.data() + comma || value == 0)
            throw scatter1d::ConfigError("--grids expects a comma-separated list of sizes");
        grids.push_back(value);
        pos = comma + 1;
        if (comma == csv.size())
            break;
    }
    return grids;
}

int dispatch(const std::string& mode, const std::string& config_path,
             const std::vector<std::string>& overrides, const std::string& grids_csv)
{
    scatter1d::RunConfig config = scatter1d::load_config(config_path, overrides);

    if (mode == "run")
        return scatter1d::run_tasks(config);

    if (mode == "verify") {
        config.tasks = {scatter1d::Task::Verify};
        const int status = scatter1d::run_tasks(config);
        std::cout << (status == 0 ? "verification passed" : "verification FAILED")
                  << " (see verify_report.json)\n";
        return status;
    }

    // converge
    const auto grids = parse_grid_list(grids_csv);
    const scatter1d::ConvergenceStudy study = scatter1d::convergence_study(config, grids);
    std::cout << "k = " << study.k << "\n";
    std::cout << "n_grid,delta0,delta1,diff_from_richest\n";
    for (const auto& row : study.rows)
        std::cout << row.n_grid << ',' << row.delta0 << ',' << row.delta1 << ','
                  << row.diff_from_richest << "\n";
    if (!study.monotone)
        std::cout << "warning: convergence is not monotone over the requested grids\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"1D scattering observables from the momentum-space integral equation"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string grids_csv;

    CLI::App* run = app.add_subcommand("run", "execute the tasks listed in the config");
    run->add_option("config", config_path, "JSON run configuration")->required();
    run->add_option("--set", overrides, "override a config field, e.g. --set solver.n_grid=256");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("config", config_path, "JSON run configuration")->required();
    verify->add_option("--set", overrides, "override a config field");

    CLI::App* converge = app.add_subcommand("converge", "grid-refinement study at the first sweep k");
    converge->add_option("config", config_path, "JSON run configuration")->required();
    converge->add_option("--set", overrides, "override a config field");
    converge->add_option("--grids", grids_csv, "comma-separated grid sizes, e.g. 32,64,128,256")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfig : 0;
    }

    const std::string mode = app.get_subcommands().front()->get_name();
    try {
        return dispatch(mode, config_path, overrides, grids_csv);
    } catch (const scatter1d::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const scatter1d::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
