// Implementations of the CLI subcommands. Each command writes its data
// files plus a run manifest into the output directory and returns one of
// the documented exit codes: 0 ok, 1 usage/domain error, 2 I/O error,
// 3 accuracy budget exceeded.

#ifndef BOUNCER_COMMANDS_HPP
#define BOUNCER_COMMANDS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bouncer/csv.hpp"
#include "bouncer/fourier.hpp"
#include "bouncer/model.hpp"
#include "bouncer/species.hpp"
#include "bouncer/svg.hpp"

namespace bouncer::cli {

inline constexpr const char* kVersion = "0.1.0";

struct CommonOptions {
    std::string out_dir = ".";
    bool reproducible = false;
    double tol = 1e-10;
    std::string config_path;  // empty: builtin species table
};

namespace cli_detail {

inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

inline std::string config_hash(const std::string& config_path) {
    if (config_path.empty()) return "builtin";
    std::ifstream in(config_path);
    if (!in) return "unreadable";
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(content)));
    return buf;
}

inline void write_manifest(const CommonOptions& opts, const std::string& command,
                           const nlohmann::json& parameters,
                           const std::vector<std::string>& outputs) {
    nlohmann::json manifest;
    manifest["command"] = command;
    manifest["parameters"] = parameters;
    manifest["outputs"] = outputs;
    manifest["version"] = kVersion;
    manifest["config_hash"] = config_hash(opts.config_path);
    if (!opts.reproducible) {
        const auto now = std::chrono::system_clock::now();
        manifest["timestamp_unix"] =
            std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
                .count();
    }
    std::ofstream out(std::filesystem::path(opts.out_dir) /
                      (command + "_manifest.json"));
    if (!out) throw std::ios_base::failure("cannot write manifest");
    out << manifest.dump(2) << '\n';
}

inline std::ofstream open_output(const CommonOptions& opts, const std::string& name) {
    std::filesystem::create_directories(opts.out_dir);
    std::ofstream out(std::filesystem::path(opts.out_dir) / name);
    if (!out) throw std::ios_base::failure("cannot open " + name + " for writing");
    return out;
}

}  // namespace cli_detail

/// zeros: table of refined Airy zeros against the asymptotic estimate.
inline int cmd_zeros(int n_max, const CommonOptions& opts) {
    if (n_max < 1) {
        std::cerr << "zeros: --n must be >= 1\n";
        return 1;
    }
    auto out = cli_detail::open_output(opts, "zeros.csv");
    CsvWriter csv(out, {"n", "a_n", "a_n_asymptotic", "rel_error", "ai_prime"});
    for (int n = 1; n <= n_max; ++n) {
        const AiryZero zero = airy_zero(n);
        const double asym = airy_zero_asymptotic(n);
        csv.row({static_cast<double>(n), zero.value, asym,
                 std::abs(asym - zero.value) / std::abs(zero.value), zero.ai_prime});
    }
    cli_detail::write_manifest(opts, "zeros", {{"n_max", n_max}}, {"zeros.csv"});
    return 0;
}

/// density: quantum vs classical probability density for one eigenstate,
/// as CSV plus an overlay chart with the turning point marked.
inline int cmd_density(int n, int grid_size, const CommonOptions& opts) {
    if (n < 1 || grid_size < 8) {
        std::cerr << "density: need --n >= 1 and --grid >= 8\n";
        return 1;
    }
    const BouncerState state = make_state(n);
    const double h = state.turning_point;

    auto out = cli_detail::open_output(opts, "density_n" + std::to_string(n) + ".csv");
    CsvWriter csv(out, {"zeta_over_h", "rho_quantum", "rho_classical"});
    SvgSeries quantum{{}, "#1f77b4", "quantum", false};
    SvgSeries classical{{}, "#e6b012", "classical", true};
    for (int i = 0; i <= grid_size; ++i) {
        const double frac = 1.2 * static_cast<double>(i) / grid_size;
        // grids exclude a small neighbourhood of the classical singularity
        if (std::abs(frac - 1.0) < 1e-3) continue;
        const double zeta = frac * h;
        const double rho_q = quantum_density_value(state, zeta) * h;  // per zeta/h
        const double rho_c = classical_density_value(h, zeta) * h;
        csv.row({frac, rho_q, rho_c});
        quantum.points.emplace_back(frac, rho_q);
        if (frac <= 1.0) classical.points.emplace_back(frac, rho_c);
    }

    SvgChartOptions chart;
    chart.title = "probability density, n = " + std::to_string(n);
    chart.x_label = "z / h_n";
    chart.y_label = "rho * h_n";
    chart.vertical_markers = {1.0};
    chart.y_clip = 4.0;
    if (!opts.reproducible) chart.comment = "generated " + std::to_string(std::time(nullptr));
    auto svg = cli_detail::open_output(opts, "density_n" + std::to_string(n) + ".svg");
    write_line_chart(svg, {quantum, classical}, chart);

    cli_detail::write_manifest(opts, "density", {{"n", n}, {"grid", grid_size}},
                               {"density_n" + std::to_string(n) + ".csv",
                                "density_n" + std::to_string(n) + ".svg"});
    return 0;
}

/// tailprob: probability above the classical turning point, closed form and
/// quadrature side by side. Decimals quoted elsewhere for n in {1,2,10,30}
/// are attached as annotations only; they are not oracles (and for n = 10
/// and 30 they disagree with the closed form they accompany).
inline int cmd_tailprob(const std::vector<int>& n_list, const CommonOptions& opts) {
    if (n_list.empty()) {
        std::cerr << "tailprob: --n-list must not be empty\n";
        return 1;
    }
    const std::map<int, double> quoted = {{1, 0.25}, {2, 0.20}, {10, 0.016}, {30, 0.0077}};
    nlohmann::json records = nlohmann::json::array();
    for (int n : n_list) {
        if (n < 1) {
            std::cerr << "tailprob: indices must be >= 1\n";
            return 1;
        }
        const TailProbability tail = tail_probability(make_state(n));
        nlohmann::json rec;
        rec["n"] = n;
        rec["closed_form"] = tail.closed_form;
        rec["quadrature"] = tail.quadrature;
        if (auto it = quoted.find(n); it != quoted.end())
            rec["quoted_value"] = it->second;
        records.push_back(rec);
    }
    nlohmann::json doc;
    doc["records"] = records;
    doc["note"] =
        "closed_form is [Ai'(0)/Ai'(a_n)]^2; quadrature integrates the density "
        "above the turning point independently. quoted_value entries are "
        "commonly quoted decimals attached as annotations only; those for "
        "n=10 and n=30 do not match the closed form.";
    auto out = cli_detail::open_output(opts, "tailprob.json");
    out << doc.dump(2) << '\n';
    cli_detail::write_manifest(opts, "tailprob", {{"n_list", n_list}},
                               {"tailprob.json"});
    return 0;
}

/// fourier: coefficient table over a Q grid for the requested routes, with
/// pairwise deviation columns.
inline int cmd_fourier(int n, double q_max, std::vector<std::string> routes,
                       const CommonOptions& opts) {
    if (n < 1 || !(q_max > 0.0)) {
        std::cerr << "fourier: need --n >= 1 and --q-max > 0\n";
        return 1;
    }
    if (routes.empty())
        routes = {"numeric", "albright0", "albright1", "closed", "classical"};
    for (const auto& r : routes) {
        if (r != "numeric" && r != "albright0" && r != "albright1" &&
            r != "closed" && r != "classical") {
            std::cerr << "fourier: unknown route '" << r << "'\n";
            return 1;
        }
    }
    const BouncerState state = make_state(n);
    const double h = state.turning_point;

    std::vector<std::string> header = {"Q"};
    for (const auto& r : routes) {
        header.push_back("re_" + r);
        header.push_back("im_" + r);
    }
    const bool dev_closed_albright0 =
        std::count(routes.begin(), routes.end(), "closed") &&
        std::count(routes.begin(), routes.end(), "albright0");
    const bool dev_numeric_albright1 =
        std::count(routes.begin(), routes.end(), "numeric") &&
        std::count(routes.begin(), routes.end(), "albright1");
    const bool dev_numeric_classical =
        std::count(routes.begin(), routes.end(), "numeric") &&
        std::count(routes.begin(), routes.end(), "classical");
    if (dev_closed_albright0) header.push_back("dev_closed_albright0");
    if (dev_numeric_albright1) header.push_back("dev_numeric_albright1");
    if (dev_numeric_classical) header.push_back("dev_numeric_classical");

    auto out = cli_detail::open_output(opts, "fourier_n" + std::to_string(n) + ".csv");
    CsvWriter csv(out, header);
    const int points = 100;
    for (int i = 0; i <= points; ++i) {
        const double Q = q_max * static_cast<double>(i) / points;
        const double q = Q / h;
        std::map<std::string, std::complex<double>> values;
        for (const auto& r : routes) {
            if (r == "numeric")
                values[r] = quantum_coefficient_numeric(state, q, opts.tol).value;
            else if (r == "albright0")
                values[r] = quantum_coefficient_albright(state, q, 0).value;
            else if (r == "albright1")
                values[r] = quantum_coefficient_albright(state, q, 1).value;
            else if (r == "closed")
                values[r] = quantum_coefficient_closed(state, q).value;
            else
                values[r] = classical_coefficient(h, q, opts.tol).value;
        }
        std::vector<double> row = {Q};
        for (const auto& r : routes) {
            row.push_back(values[r].real());
            row.push_back(values[r].imag());
        }
        if (dev_closed_albright0)
            row.push_back(std::abs(values["closed"] - values["albright0"]));
        if (dev_numeric_albright1)
            row.push_back(std::abs(values["numeric"] - values["albright1"]));
        if (dev_numeric_classical)
            row.push_back(std::abs(values["numeric"] - values["classical"]));
        csv.row(row);
    }
    cli_detail::write_manifest(
        opts, "fourier", {{"n", n}, {"q_max", q_max}, {"routes", routes}},
        {"fourier_n" + std::to_string(n) + ".csv"});
    return 0;
}

/// limit: convergence study over a list of eigenstate indices; JSON reports
/// plus a log-log chart of coefficient deviation against |a_n|.
inline int cmd_limit(const std::vector<int>& n_list, const CommonOptions& opts) {
    if (n_list.size() < 2) {
        std::cerr << "limit: --n-list needs at least two indices\n";
        return 1;
    }
    const WindowPolicy policy;
    const auto reports = convergence_study(n_list, policy);

    nlohmann::json json_reports = nlohmann::json::array();
    SvgSeries deviation{{}, "#d62728", "|numeric - classical|", false};
    for (const auto& r : reports) {
        nlohmann::json rec;
        rec["n"] = r.n;
        rec["epsilon_policy"] = r.epsilon_policy;
        rec["interior_fraction"] = r.interior_fraction;
        rec["l1_error"] = r.l1_error;
        rec["coefficient_deviation"] = r.coefficient_deviation;
        rec["fitted_exponent"] = r.fitted_exponent;
        json_reports.push_back(rec);
        const double abs_a = std::abs(airy_zero(r.n).value);
        deviation.points.emplace_back(abs_a, r.coefficient_deviation);
    }
    nlohmann::json doc;
    doc["reports"] = json_reports;
    doc["fitted_exponent"] = reports.front().fitted_exponent;
    auto out = cli_detail::open_output(opts, "limit.json");
    out << doc.dump(2) << '\n';

    SvgChartOptions chart;
    chart.title = "coefficient deviation vs |a_n|, fitted slope " +
                  std::to_string(reports.front().fitted_exponent);
    chart.x_label = "|a_n|";
    chart.y_label = "max_Q |deviation|";
    chart.log_x = true;
    chart.log_y = true;
    if (!opts.reproducible) chart.comment = "generated " + std::to_string(std::time(nullptr));
    auto svg = cli_detail::open_output(opts, "limit.svg");
    write_line_chart(svg, {deviation}, chart);

    cli_detail::write_manifest(opts, "limit", {{"n_list", n_list}},
                               {"limit.json", "limit.svg"});
    return 0;
}

/// regime: macroscopic quantum numbers and correction suppression for the
/// species table (or explicit gravitational length / drop height).
inline int cmd_regime(const std::vector<std::string>& species_labels,
                      std::optional<double> lg_um, std::optional<double> height_mm,
                      const CommonOptions& opts) {
    const double height_m = height_mm.value_or(1.0) * 1e-3;
    std::vector<RegimeEstimate> estimates;
    if (lg_um) {
        estimates.push_back(regime_estimate(*lg_um * 1e-6, height_m, "custom"));
    } else {
        const auto table = load_species(opts.config_path);
        std::vector<std::string> labels = species_labels;
        if (labels.empty())
            for (const auto& s : table) labels.push_back(s.label);
        for (const auto& label : labels) {
            const Species* species = find_species(table, label);
            if (!species) {
                std::cerr << "regime: unknown species '" << label << "'\n";
                return 1;
            }
            const PhysicalParams params{species->mass_kg, species->gravity,
                                        1.054571817e-34};
            estimates.push_back(regime_estimate(gravitational_length(params),
                                                height_m, species->label));
        }
    }
    auto out = cli_detail::open_output(opts, "regime.csv");
    CsvWriter csv(out, {"label", "l_g_um", "height_mm", "n_estimate", "suppression"});
    for (const auto& e : estimates) {
        csv.row_mixed({e.species_label, format_double(e.l_g_m * 1e6),
                       format_double(e.drop_height_m * 1e3),
                       format_double(e.n_estimate), format_double(e.suppression)});
    }
    nlohmann::json params;
    params["species"] = species_labels;
    if (lg_um) params["lg_um"] = *lg_um;
    params["height_mm"] = height_mm.value_or(1.0);
    cli_detail::write_manifest(opts, "regime", params, {"regime.csv"});
    return 0;
}

}  // namespace bouncer::cli

#endif  // BOUNCER_COMMANDS_HPP
