// Fourier coefficients of the bouncer densities by independent routes, the
// integration-by-parts moment recursion, the closed-form leading term, and
// the local-averaging convergence study.
//
// Convention: the forward transform carries 1/(2 pi) and kernel e^{-i q zeta}
// (q = p l_g / hbar dimensionless); Q = q * h_n. Every route below shares it.

#ifndef BOUNCER_FOURIER_HPP
#define BOUNCER_FOURIER_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bouncer/airy.hpp"
#include "bouncer/double_double.hpp"
#include "bouncer/model.hpp"
#include "bouncer/quadrature.hpp"
#include "bouncer/rotated_erf.hpp"

namespace bouncer {

inline constexpr double kTwoPi = 6.28318530717958647692;

enum class CoeffRoute { numeric, albright, closed_form, classical };

struct FourierCoefficient {
    double q;                     // dimensionless momentum
    double Q;                     // q * h_n
    std::complex<double> value;
    CoeffRoute route;
    int order = 0;                // correction layers kept (albright route)
};

/// I_k = int_{a_n}^inf x^k Ai^2(x) dx by the integration-by-parts recursion
///   I_k = a_n^k Ai'^2(a_n)/(2k+1) + [k(k-1)(k-2)/(2(2k+1))] I_{k-3},
/// exact for k in {0,1,2} where the correction factor vanishes.
struct AlbrightMoment {
    int n;
    int k;
    double value;
};

inline AlbrightMoment albright_moment(const BouncerState& state, int k) {
    if (k < 0) throw std::domain_error("albright_moment: k must be nonnegative");
    const double a = state.zero.value;
    const double aip2 = state.zero.ai_prime * state.zero.ai_prime;
    const int base = k % 3;
    double value = std::pow(a, base) * aip2 / (2.0 * base + 1.0);
    for (int j = base + 3; j <= k; j += 3) {
        value = std::pow(a, j) * aip2 / (2.0 * j + 1.0) +
                (static_cast<double>(j) * (j - 1) * (j - 2)) /
                    (2.0 * (2.0 * j + 1.0)) * value;
    }
    return {state.n, k, value};
}

namespace fourier_detail {

// Sum of (iQ)^k / (k! (2k+1)) in double-double arithmetic. The series is
// entire but its largest term is ~e^{|Q|} times the sum, so plain double
// summation loses everything beyond |Q| ~ 15.
inline std::complex<double> leading_series(double Q) {
    ComplexDD term{DD(1.0), DD(0.0)};
    ComplexDD sum{DD(0.0), DD(0.0)};
    double max_term = 1.0;
    for (int k = 0; k < 400; ++k) {
        sum += term / (2.0 * k + 1.0);
        term = mul_iq(term, Q) / (k + 1.0);
        const double mag = std::abs(term.re.hi) + std::abs(term.im.hi);
        if (mag > max_term) max_term = mag;
        // double-double carries ~32 digits; truncating earlier than that
        // relative to the largest term leaks the cancellation error back in
        if (mag < 1e-32 * max_term && k > std::abs(Q)) break;
    }
    return {sum.re.to_double(), sum.im.to_double()};
}

// Sum of (iQ)^k / k! * k(k-1)(k-2) / (2(2k+1)(2k-5)); the first correction
// layer before the overall a_n^{-3} factor.
inline std::complex<double> correction_series(double Q) {
    ComplexDD term{DD(1.0), DD(0.0)};
    ComplexDD sum{DD(0.0), DD(0.0)};
    double max_term = 1.0;
    for (int k = 0; k < 400; ++k) {
        if (k >= 3) {
            const double num = static_cast<double>(k) * (k - 1) * (k - 2);
            const double den = 2.0 * (2.0 * k + 1.0) * (2.0 * k - 5.0);
            sum += (term * num) / den;
        }
        term = mul_iq(term, Q) / (k + 1.0);
        const double mag = std::abs(term.re.hi) + std::abs(term.im.hi);
        if (mag > max_term) max_term = mag;
        // double-double carries ~32 digits; truncating earlier than that
        // relative to the largest term leaks the cancellation error back in
        if (mag < 1e-32 * max_term && k > std::abs(Q)) break;
    }
    return {sum.re.to_double(), sum.im.to_double()};
}

inline std::complex<double> phase(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace fourier_detail

/// Direct oscillatory quadrature of (1/2pi) int_0^inf rho_qm e^{-i q zeta}.
inline FourierCoefficient quantum_coefficient_numeric(const BouncerState& state,
                                                     double q,
                                                     double tol = 1e-10) {
    const double Q = q * state.turning_point;
    if (std::abs(Q) > 1.1e3)
        throw accuracy_error("quantum_coefficient_numeric: oscillation budget exceeded",
                             {0.0, 0.0}, std::abs(Q));
    const double norm = state.zero.ai_prime * state.zero.ai_prime;
    const double a = state.zero.value;
    auto density = [a, norm](double zeta) {
        const double ai = airy_ai(a + zeta);
        return ai * ai / norm;
    };
    const double cutoff = density_support_cutoff(state, tol * 0.1);
    auto r = integrate_oscillatory(density, q, 0.0, cutoff, tol);
    return {q, Q, r.value / kTwoPi, CoeffRoute::numeric, 0};
}

/// Series route: e^{-iQ}/(2 pi) [ sum_k (iQ)^k/(k!(2k+1))
///   + order >= 1: a_n^{-3} sum_k (iQ)^k/k! k(k-1)(k-2)/(2(2k+1)(2k-5)) ].
inline FourierCoefficient quantum_coefficient_albright(const BouncerState& state,
                                                      double q, int order) {
    if (order < 0 || order > 1)
        throw std::domain_error("quantum_coefficient_albright: order must be 0 or 1");
    const double Q = q * state.turning_point;
    std::complex<double> sum = fourier_detail::leading_series(Q);
    if (order >= 1) {
        const double a = state.zero.value;
        sum += fourier_detail::correction_series(Q) / (a * a * a);
    }
    const std::complex<double> value = fourier_detail::phase(-Q) * sum / kTwoPi;
    return {q, Q, value, CoeffRoute::albright, order};
}

/// Closed-form leading coefficient for a given Q = q h:
///   (1/2pi) e^{-i(Q - pi/4)} sqrt(pi)/(2 sqrt(Q)) erf(e^{-i pi/4} sqrt(Q)),
/// with the removable singularity at Q = 0 giving 1/(2 pi).
inline std::complex<double> leading_coefficient_closed(double Q) {
    const double aQ = std::abs(Q);
    if (aQ < 1e-150) return {1.0 / kTwoPi, 0.0};
    const std::complex<double> value =
        fourier_detail::phase(-(aQ - detail::kPi / 4.0)) *
        (detail::kSqrtPi / (2.0 * std::sqrt(aQ))) * erf_rotated(aQ) / kTwoPi;
    return (Q >= 0.0) ? value : std::conj(value);
}

inline FourierCoefficient quantum_coefficient_closed(const BouncerState& state,
                                                    double q) {
    const double Q = q * state.turning_point;
    return {q, Q, leading_coefficient_closed(Q), CoeffRoute::closed_form, 0};
}

/// Classical coefficient by quadrature after the substitution
/// zeta = h (1 - u^2), which removes the turning-point singularity exactly:
///   (1/2pi) int_0^h e^{-i q zeta} / (2 sqrt(h(h - zeta))) dzeta
///     = (1/2pi) e^{-iQ} int_0^1 e^{i Q u^2} du.
inline FourierCoefficient classical_coefficient(double h, double q,
                                                double tol = 1e-10) {
    if (!(h > 0.0)) throw std::domain_error("classical_coefficient: h must be positive");
    if (!std::isfinite(q)) throw std::domain_error("classical_coefficient: q must be finite");
    const double Q = q * h;
    const double aQ = std::abs(Q);
    auto integrand = [aQ](double u) -> std::complex<double> {
        return fourier_detail::phase(aQ * u * u);
    };
    auto r = integrate_adaptive<std::complex<double>>(integrand, 0.0, 1.0, tol,
                                                      20'000'000);
    std::complex<double> value = fourier_detail::phase(-aQ) * r.value / kTwoPi;
    if (Q < 0.0) value = std::conj(value);
    return {q, Q, value, CoeffRoute::classical, 0};
}

/// Windowed mean (1/2eps) int_{c-eps}^{c+eps} of a density callable.
template <class F>
double local_average(F&& density, double center, double eps, double domain_lo,
                     double domain_hi, double tol = 1e-8) {
    if (!(eps > 0.0)) throw std::domain_error("local_average: eps must be positive");
    if (center - eps < domain_lo || center + eps > domain_hi)
        throw std::domain_error("local_average: window escapes the density domain");
    auto r = integrate_adaptive<double>(density, center - eps, center + eps,
                                        tol * 2.0 * eps);
    return r.value / (2.0 * eps);
}

/// Window policy for the local-average comparison: eps(zeta) spans `periods`
/// local oscillation periods pi/sqrt(h - zeta) of the squared eigenfunction,
/// clipped so the window stays inside [0, clip * h].
struct WindowPolicy {
    double periods = 2.0;
    double interior_lo = 0.05;   // fractions of the turning point
    double interior_hi = 0.90;
    double clip = 0.95;
    int samples = 240;
    double q_fit = 5.0;          // Q at which the deviation-scaling fit is made
    std::vector<double> deviation_Q = {2.0, 5.0, 10.0, 20.0};

    std::string describe() const {
        return "eps(zeta) = " + std::to_string(periods) +
               " * pi / sqrt(h - zeta), clipped to [0, " + std::to_string(clip) +
               " h]";
    }
};

struct ConvergenceReport {
    int n;
    std::string epsilon_policy;
    double interior_fraction;
    double l1_error;              // relative interior L1 distance
    double coefficient_deviation; // max over Q grid of |numeric - classical|
    double fitted_exponent;       // slope of log|dev| vs log|a_n| across the list
};

namespace fourier_detail {

inline double window_halfwidth(const WindowPolicy& policy, double h, double zeta) {
    double eps = policy.periods * detail::kPi / std::sqrt(h - zeta);
    eps = std::min(eps, zeta);
    eps = std::min(eps, policy.clip * h - zeta);
    return eps;
}

inline double interior_l1_error(const BouncerState& state,
                                const WindowPolicy& policy) {
    const double h = state.turning_point;
    const double norm = state.zero.ai_prime * state.zero.ai_prime;
    const double a = state.zero.value;
    auto density = [a, norm](double zeta) {
        const double ai = airy_ai(a + zeta);
        return ai * ai / norm;
    };
    const double lo = policy.interior_lo * h;
    const double hi = policy.interior_hi * h;
    const int m = policy.samples;
    double err_sum = 0.0;
    double ref_sum = 0.0;
    double prev_diff = 0.0, prev_ref = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double zeta = lo + (hi - lo) * static_cast<double>(i) / m;
        const double eps = window_halfwidth(policy, h, zeta);
        const double avg = local_average(density, zeta, eps, 0.0, h, 1e-7);
        const double cl = classical_density_value(h, zeta);
        const double diff = std::abs(avg - cl);
        if (i > 0) {
            err_sum += 0.5 * (diff + prev_diff);
            ref_sum += 0.5 * (cl + prev_ref);
        }
        prev_diff = diff;
        prev_ref = cl;
    }
    return err_sum / ref_sum;
}

}  // namespace fourier_detail

/// Per-n comparison of the locally averaged quantum density against the
/// classical density, and of the numeric Fourier coefficient against the
/// classical/closed ones, with a log-log fit of the deviation against |a_n|.
inline std::vector<ConvergenceReport> convergence_study(
    std::span<const int> n_list, const WindowPolicy& policy = {}) {
    if (n_list.size() < 2)
        throw std::domain_error("convergence_study: need at least two indices");

    std::vector<ConvergenceReport> reports;
    std::vector<double> log_a, log_dev;
    for (int n : n_list) {
        const BouncerState state = make_state(n);
        const double h = state.turning_point;

        double max_dev = 0.0;
        for (double Q : policy.deviation_Q) {
            const double q = Q / h;
            const auto numeric = quantum_coefficient_numeric(state, q);
            const auto classical = classical_coefficient(h, q);
            max_dev = std::max(max_dev, std::abs(numeric.value - classical.value));
        }

        const double q_fit = policy.q_fit / h;
        const auto numeric_fit = quantum_coefficient_numeric(state, q_fit);
        const auto closed_fit = quantum_coefficient_closed(state, q_fit);
        const double dev_fit = std::abs(numeric_fit.value - closed_fit.value);
        log_a.push_back(std::log(h));
        log_dev.push_back(std::log(std::max(dev_fit, 1e-300)));

        ConvergenceReport report;
        report.n = n;
        report.epsilon_policy = policy.describe();
        report.interior_fraction = policy.interior_hi - policy.interior_lo;
        report.l1_error = fourier_detail::interior_l1_error(state, policy);
        report.coefficient_deviation = max_dev;
        report.fitted_exponent = 0.0;
        reports.push_back(std::move(report));
    }

    // least-squares slope of log|deviation| against log|a_n|
    const std::size_t m = log_a.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += log_a[i];
        sy += log_dev[i];
        sxx += log_a[i] * log_a[i];
        sxy += log_a[i] * log_dev[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    for (auto& report : reports) report.fitted_exponent = slope;
    return reports;
}

}  // namespace bouncer

#endif  // BOUNCER_FOURIER_HPP
