// bouncer: command-line front end.
//
// Exit codes: 0 success, 1 usage/domain error, 2 I/O error,
// 3 accuracy budget exceeded.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bouncer/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Quantum bouncer: densities, Fourier coefficients, and the classical limit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the common options after the subcommand too

    bouncer::cli::CommonOptions common;
    if (const char* env = std::getenv("BOUNCER_CONFIG")) common.config_path = env;
    app.add_option("--out-dir", common.out_dir, "output directory")->capture_default_str();
    app.add_flag("--reproducible", common.reproducible,
                 "omit timestamps so reruns are byte-identical");
    app.add_option("--tol", common.tol, "quadrature tolerance")->capture_default_str();
    app.add_option("--config", common.config_path,
                   "species config file (default: $BOUNCER_CONFIG or builtin table)");

    int n = 1;
    int grid = 400;
    double q_max = 30.0;
    std::vector<int> n_list;
    std::vector<std::string> routes;
    std::vector<std::string> species;
    std::optional<double> lg_um, height_mm;

    auto* zeros = app.add_subcommand("zeros", "Airy zeros vs their asymptotic estimate");
    zeros->add_option("--n", n, "largest index")->required();

    auto* density = app.add_subcommand("density", "quantum and classical densities for one state");
    density->add_option("--n", n, "eigenstate index")->required();
    density->add_option("--grid", grid, "number of grid intervals")->capture_default_str();

    auto* tailprob = app.add_subcommand("tailprob", "probability above the turning point");
    tailprob->add_option("--n-list", n_list, "eigenstate indices")->required()->expected(-1);

    auto* fourier = app.add_subcommand("fourier", "Fourier coefficients by route over a Q grid");
    fourier->add_option("--n", n, "eigenstate index")->required();
    fourier->add_option("--q-max", q_max, "largest Q = q h_n")->capture_default_str();
    fourier->add_option("--routes", routes,
                        "subset of numeric albright0 albright1 closed classical");

    auto* limit = app.add_subcommand("limit", "convergence study across eigenstate indices");
    limit->add_option("--n-list", n_list, "eigenstate indices (at least two)")
        ->required()
        ->expected(-1);

    auto* regime = app.add_subcommand("regime", "macroscopic regime estimates");
    regime->add_option("--species", species, "species labels from the config table");
    auto* lg_opt = regime->add_option("--lg-um", "gravitational length in micrometers");
    regime->add_option("--height-mm", "drop height in millimeters (default 1)");

    CLI11_PARSE(app, argc, argv);

    if (regime->count("--lg-um")) lg_um = lg_opt->as<double>();
    if (regime->count("--height-mm"))
        height_mm = regime->get_option("--height-mm")->as<double>();

    try {
        if (zeros->parsed()) return bouncer::cli::cmd_zeros(n, common);
        if (density->parsed()) return bouncer::cli::cmd_density(n, grid, common);
        if (tailprob->parsed()) return bouncer::cli::cmd_tailprob(n_list, common);
        if (fourier->parsed()) return bouncer::cli::cmd_fourier(n, q_max, routes, common);
        if (limit->parsed()) return bouncer::cli::cmd_limit(n_list, common);
        if (regime->parsed())
            return bouncer::cli::cmd_regime(species, lg_um, height_mm, common);
    } catch (const bouncer::accuracy_error& e) {
        std::cerr << "accuracy budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
