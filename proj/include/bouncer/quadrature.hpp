// Adaptive Gauss-Kronrod quadrature (G7/K15 pair), a semi-infinite wrapper,
// and a panelized integrator for Fourier-type kernels f(x) e^{-i omega x}.

#ifndef BOUNCER_QUADRATURE_HPP
#define BOUNCER_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace bouncer {

template <class T>
struct IntegrationResult {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Thrown when the requested tolerance could not be reached within the
/// evaluation budget; carries the best estimate obtained so far.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, std::complex<double> best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
    std::complex<double> best_estimate;
    double error_estimate;
};

namespace quad_detail {

inline constexpr double kPi = 3.14159265358979323846;

// Kronrod 15-point nodes/weights on [-1, 1]; Gauss 7 weights at the odd nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T, class F>
IntegrationResult<T> gauss_kronrod(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(center);
    T kronrod = kKronrodWeights[7] * fc;
    T gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const T fsum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    const double diff = std::abs(kronrod - gauss);
    // QUADPACK-style sharpened estimate
    const double err = std::pow(200.0 * diff, 1.5);
    IntegrationResult<T> r;
    r.value = kronrod;
    r.error_estimate = (err < diff) ? err : diff;
    r.evaluations = 15;
    return r;
}

}  // namespace quad_detail

/// Globally adaptive integration of f over [a, b].
template <class T, class F>
IntegrationResult<T> integrate_adaptive(F&& f, double a, double b, double tol,
                                        std::size_t max_evaluations = 2'000'000) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("integrate_adaptive: need finite a < b");
    if (!(tol > 0.0)) throw std::domain_error("integrate_adaptive: tol must be positive");

    struct Node {
        double a, b, error;
        T value;
    };
    auto cmp = [](const Node& x, const Node& y) { return x.error < y.error; };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);

    auto first = quad_detail::gauss_kronrod<T>(f, a, b);
    std::size_t evals = first.evaluations;
    double total_err = first.error_estimate;
    heap.push({a, b, first.error_estimate, first.value});

    while (total_err > tol && evals < max_evaluations) {
        Node worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) break;  // machine resolution
        heap.pop();
        auto left = quad_detail::gauss_kronrod<T>(f, worst.a, mid);
        auto right = quad_detail::gauss_kronrod<T>(f, mid, worst.b);
        evals += left.evaluations + right.evaluations;
        total_err += left.error_estimate + right.error_estimate - worst.error;
        heap.push({worst.a, mid, left.error_estimate, left.value});
        heap.push({mid, worst.b, right.error_estimate, right.value});
    }

    // clean re-sum over the settled partition, smallest errors first
    std::vector<Node> nodes;
    nodes.reserve(heap.size());
    while (!heap.empty()) {
        nodes.push_back(heap.top());
        heap.pop();
    }
    T sum{};
    double err_sum = 0.0;
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
        sum += it->value;
        err_sum += it->error;
    }

    if (err_sum > tol)
        throw accuracy_error("integrate_adaptive: tolerance not reached",
                             std::complex<double>(sum), err_sum);
    return {sum, err_sum, evals};
}

/// Integration of f over [a, infinity).
///
/// If `cutoff` is finite the caller guarantees the remainder beyond it is
/// below tol/10 (e.g. from a decay bound) and only [a, cutoff] is integrated,
/// with the remainder bound folded into the error estimate. Otherwise the
/// tail is mapped to [0, 1) via x = a + t/(1-t); f must decay fast enough
/// that the mapped integrand vanishes as t -> 1.
template <class T, class F>
IntegrationResult<T> integrate_semi_infinite(
    F&& f, double a, double tol,
    double cutoff = std::numeric_limits<double>::quiet_NaN(),
    std::size_t max_evaluations = 2'000'000) {
    if (!(tol > 0.0)) throw std::domain_error("integrate_semi_infinite: tol must be positive");
    if (std::isfinite(cutoff)) {
        auto r = integrate_adaptive<T>(f, a, cutoff, tol, max_evaluations);
        r.error_estimate += tol / 10.0;
        return r;
    }
    auto mapped = [&f, a](double t) -> T {
        const double om = 1.0 - t;
        if (om < 1e-14) return T{};
        const double x = a + t / om;
        return f(x) / (om * om);
    };
    return integrate_adaptive<T>(mapped, 0.0, 1.0, tol, max_evaluations);
}

/// Integral of f(x) e^{-i omega x} over [a, b], panelized on half periods of
/// the kernel so adaptive refinement never straddles many oscillations.
/// Panel results are accumulated with compensated summation in a fixed order.
template <class F>
IntegrationResult<std::complex<double>> integrate_oscillatory(
    F&& f, double omega, double a, double b, double tol,
    std::size_t max_evaluations = 50'000'000) {
    if (!(a < b)) throw std::domain_error("integrate_oscillatory: need a < b");
    if (!(tol > 0.0)) throw std::domain_error("integrate_oscillatory: tol must be positive");

    const double span = b - a;
    const double period = (omega != 0.0) ? quad_detail::kPi / std::abs(omega) : span;
    std::size_t panels = static_cast<std::size_t>(std::ceil(span / period));
    if (panels < 1) panels = 1;
    if (panels > 100'000)
        throw accuracy_error("integrate_oscillatory: oscillation budget exceeded",
                             {0.0, 0.0}, std::abs(span));
    const double width = span / static_cast<double>(panels);
    const double panel_tol = tol / static_cast<double>(panels);

    auto integrand = [&f, omega](double x) -> std::complex<double> {
        const double phase = -omega * x;
        return f(x) * std::complex<double>(std::cos(phase), std::sin(phase));
    };

    std::complex<double> sum{}, comp{};
    double err = 0.0;
    std::size_t evals = 0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double pa = a + width * static_cast<double>(i);
        const double pb = (i + 1 == panels) ? b : pa + width;
        auto r = integrate_adaptive<std::complex<double>>(
            integrand, pa, pb, panel_tol, max_evaluations / panels);
        const std::complex<double> y = r.value - comp;
        const std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += r.error_estimate;
        evals += r.evaluations;
    }
    return {sum, err, evals};
}

}  // namespace bouncer

#endif  // BOUNCER_QUADRATURE_HPP
