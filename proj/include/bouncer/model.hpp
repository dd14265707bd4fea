// The bouncing-particle model: eigenstates, spectrum, classical and quantum
// probability densities, tail probability, moments, and the macroscopic
// regime estimator.
//
// All internal computation is dimensionless: lengths in units of the
// gravitational length l_g, energies in m*g*l_g, momenta in hbar/l_g.
// Physical units enter only through gravitational_length() and the CLI.

#ifndef BOUNCER_MODEL_HPP
#define BOUNCER_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bouncer/airy.hpp"
#include "bouncer/quadrature.hpp"

namespace bouncer {

struct PhysicalParams {
    double mass_kg;
    double gravity;          // m/s^2
    double planck_reduced;   // J*s

    void validate() const {
        if (!(mass_kg > 0.0) || !std::isfinite(mass_kg) ||
            !(gravity > 0.0) || !std::isfinite(gravity) ||
            !(planck_reduced > 0.0) || !std::isfinite(planck_reduced))
            throw std::domain_error("PhysicalParams: all fields must be positive and finite");
    }
};

/// l_g = (hbar^2 / (2 m^2 g))^(1/3), in meters.
inline double gravitational_length(const PhysicalParams& params) {
    params.validate();
    const double hbar2 = params.planck_reduced * params.planck_reduced;
    return std::cbrt(hbar2 / (2.0 * params.mass_kg * params.mass_kg * params.gravity));
}

/// Energy eigenstate n with its Airy zero and dimensionless turning point.
/// energy == turning_point is the dimensionless form of E_n = m g h_n.
struct BouncerState {
    int n;
    AiryZero zero;
    double turning_point;   // -a_n, in units of l_g
    double energy;          // -a_n, in units of m*g*l_g
};

inline BouncerState make_state(int n) {
    const AiryZero zero = airy_zero(n);
    return {n, zero, -zero.value, -zero.value};
}

/// Dimensionless eigenfunction Ai(a_n + zeta) / Ai'(a_n) for zeta >= 0.
inline double wavefunction(const BouncerState& state, double zeta) {
    if (!(zeta >= 0.0))
        throw std::domain_error("wavefunction: zeta must be nonnegative");
    return airy_ai(state.zero.value + zeta) / state.zero.ai_prime;
}

inline double quantum_density_value(const BouncerState& state, double zeta) {
    const double psi = wavefunction(state, zeta);
    return psi * psi;
}

/// Classical time-fraction density for drop height h: 1/(2 sqrt(h(h-zeta)))
/// on [0, h), zero beyond. Divergent exactly at zeta = h.
inline double classical_density_value(double h, double zeta) {
    if (!(h > 0.0)) throw std::domain_error("classical_density: h must be positive");
    if (zeta == h)
        throw std::domain_error("classical_density: zeta = h is the singular point");
    if (zeta > h || zeta < 0.0) return 0.0;
    return 0.5 / std::sqrt(h * (h - zeta));
}

enum class DensityKind { quantum, classical, averaged, reconstructed };

struct DensityGrid {
    std::vector<double> coordinates;  // strictly increasing, all >= 0
    std::vector<double> values;       // all >= 0
    DensityKind kind;
};

namespace model_detail {

inline void check_grid(std::span<const double> grid) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0))
            throw std::domain_error("density grid: coordinates must be nonnegative");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::domain_error("density grid: coordinates must be strictly increasing");
    }
}

// Smallest offset d beyond the turning point with
// scale * Ai^2-bound(d) * exp-tail below `target`, from the bound
// Ai(x) <= e^{-(2/3) x^{3/2}} / (2 sqrt(pi) x^{1/4}).
inline double tail_cutoff_offset(double scale, double target) {
    for (double d = 4.0; d < 60.0; d += 1.0) {
        const double bound = std::exp(-(4.0 / 3.0) * d * std::sqrt(d)) /
                             (4.0 * detail::kPi * std::sqrt(d));
        if (scale * bound < target) return d;
    }
    return 60.0;
}

}  // namespace model_detail

inline DensityGrid quantum_density(const BouncerState& state,
                                   std::span<const double> grid) {
    model_detail::check_grid(grid);
    DensityGrid result;
    result.kind = DensityKind::quantum;
    result.coordinates.assign(grid.begin(), grid.end());
    result.values.reserve(grid.size());
    for (double zeta : grid)
        result.values.push_back(quantum_density_value(state, zeta));
    return result;
}

inline DensityGrid classical_density(double h, std::span<const double> grid) {
    model_detail::check_grid(grid);
    DensityGrid result;
    result.kind = DensityKind::classical;
    result.coordinates.assign(grid.begin(), grid.end());
    result.values.reserve(grid.size());
    for (double zeta : grid)
        result.values.push_back(classical_density_value(h, zeta));
    return result;
}

/// Upper integration limit covering the quantum density support: the
/// turning point plus a margin chosen so the neglected tail is below target.
inline double density_support_cutoff(const BouncerState& state, double target = 1e-12) {
    const double scale = 1.0 / (state.zero.ai_prime * state.zero.ai_prime);
    return state.turning_point + model_detail::tail_cutoff_offset(scale, target);
}

struct TailProbability {
    double closed_form;  // [Ai'(0)/Ai'(a_n)]^2
    double quadrature;   // independent oracle for the same integral
};

/// Probability of finding the particle above its classical turning point.
/// Throws accuracy_error if the two routes disagree beyond 1e-8.
inline TailProbability tail_probability(const BouncerState& state) {
    const double aip0 = airy_ai_prime(0.0);
    const double closed = (aip0 * aip0) /
                          (state.zero.ai_prime * state.zero.ai_prime);
    const double norm = state.zero.ai_prime * state.zero.ai_prime;
    auto integrand = [&](double zeta) {
        const double ai = airy_ai(state.zero.value + zeta);
        return ai * ai / norm;
    };
    const double cutoff = density_support_cutoff(state, 1e-13);
    auto r = integrate_semi_infinite<double>(integrand, state.turning_point,
                                             1e-10, cutoff);
    if (std::abs(r.value - closed) > 1e-8)
        throw accuracy_error("tail_probability: routes disagree beyond 1e-8",
                             {r.value, 0.0}, std::abs(r.value - closed));
    return {closed, r.value};
}

/// <zeta^k> over the quantum density, by quadrature. k <= 12.
inline double moment_z_quantum(const BouncerState& state, int k) {
    if (k < 0 || k > 12)
        throw std::domain_error("moment_z_quantum: k must be in [0, 12]");
    const double norm = state.zero.ai_prime * state.zero.ai_prime;
    auto integrand = [&](double zeta) {
        const double ai = airy_ai(state.zero.value + zeta);
        return std::pow(zeta, k) * ai * ai / norm;
    };
    const double h = state.turning_point;
    const double scale = std::pow(h + 40.0, k) / norm;
    const double cutoff = h + model_detail::tail_cutoff_offset(scale, 1e-12);
    auto r = integrate_adaptive<double>(integrand, 0.0, cutoff,
                                        1e-10 * std::pow(std::max(h, 1.0), k));
    return r.value;
}

/// Classical moment <zeta^k> = h^k k! sqrt(pi) / (2 Gamma(k + 3/2)).
inline double moment_z_classical(double h, int k) {
    if (!(h > 0.0)) throw std::domain_error("moment_z_classical: h must be positive");
    if (k < 0) throw std::domain_error("moment_z_classical: k must be nonnegative");
    return std::pow(h, k) * std::tgamma(k + 1.0) * detail::kSqrtPi /
           (2.0 * std::tgamma(k + 1.5));
}

/// Even momentum moment <p^{2k}> = int [2(E_n - zeta)]^k rho_qm dzeta,
/// momenta in units of hbar/l_g. Odd moments vanish by parity. k <= 6.
inline double moment_p_even_quantum(const BouncerState& state, int k) {
    if (k < 0 || k > 6)
        throw std::domain_error("moment_p_even_quantum: k must be in [0, 6]");
    const double norm = state.zero.ai_prime * state.zero.ai_prime;
    const double energy = state.energy;
    auto integrand = [&](double zeta) {
        const double ai = airy_ai(state.zero.value + zeta);
        return std::pow(2.0 * (energy - zeta), k) * ai * ai / norm;
    };
    const double h = state.turning_point;
    const double scale = std::pow(2.0 * (h + 40.0), k) / norm;
    const double cutoff = h + model_detail::tail_cutoff_offset(scale, 1e-12);
    auto r = integrate_adaptive<double>(integrand, 0.0, cutoff,
                                        1e-10 * std::pow(std::max(2.0 * h, 1.0), k));
    return r.value;
}

struct RegimeEstimate {
    std::string species_label;
    double l_g_m;
    double drop_height_m;
    double n_estimate;
    double suppression;   // 1/|a_n|^3 at n = round(n_estimate)
};

/// Macroscopic-regime estimate n ~ (2/(3 pi)) (h/l_g)^(3/2) and the
/// suppression factor of the first correction layer.
inline RegimeEstimate regime_estimate(double l_g_m, double drop_height_m,
                                      const std::string& label) {
    if (!(l_g_m > 0.0) || !(drop_height_m > 0.0))
        throw std::domain_error("regime_estimate: inputs must be positive");
    const double ratio = drop_height_m / l_g_m;
    const double n_est = (2.0 / (3.0 * detail::kPi)) * ratio * std::sqrt(ratio);
    const int n_round = std::max(1, static_cast<int>(std::llround(n_est)));
    const double a = airy_zero_asymptotic(n_round);
    const double suppression = 1.0 / std::abs(a * a * a);
    return {label, l_g_m, drop_height_m, n_est, suppression};
}

}  // namespace bouncer

#endif  // BOUNCER_MODEL_HPP
