// Airy function Ai, its derivative, and its negative-axis zeros.
//
// Evaluation scheme:
//   x >  9.5   exponential asymptotic expansion (DLMF 9.7.5/9.7.6)
//   x < -9.5   oscillatory asymptotic expansion (DLMF 9.7.9/9.7.10)
//   otherwise  Taylor propagation of y'' = x*y from a table of anchor
//              points spaced 0.25 apart on [-10, 10]; the table itself is
//              built once by marching downward from x = 10, where the
//              exponential expansion is accurate to ~1e-19.
//
// Downward marching is stable for Ai (it is the solution that grows as x
// decreases), so the anchor table carries no Bi contamination.

#ifndef BOUNCER_AIRY_HPP
#define BOUNCER_AIRY_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace bouncer {

/// The n-th negative zero of Ai together with Ai' there.
struct AiryZero {
    int index;            // n >= 1
    double value;         // a_n < 0
    double ai_prime;      // Ai'(a_n), alternates sign with n
};

struct AiryPair {
    double ai;
    double ai_prime;
};

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrtPi = 1.7724538509055160273;

// Taylor propagation of y'' = x*y: given (y, y') at point a, evaluate at a + t.
// Coefficient recursion: c_{k+2} = (a*c_k + c_{k-1}) / ((k+1)(k+2)).
template <std::size_t NTerms>
inline AiryPair airy_taylor_step(double a, double y, double yp, double t) {
    std::array<double, NTerms + 2> c{};
    c[0] = y;
    c[1] = yp;
    for (std::size_t k = 0; k + 2 < c.size(); ++k) {
        const double cm1 = (k >= 1) ? c[k - 1] : 0.0;
        c[k + 2] = (a * c[k] + cm1) / (static_cast<double>((k + 1) * (k + 2)));
    }
    double yv = 0.0;
    double ypv = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) {
        yv = yv * t + c[k];
        ypv = ypv * t + static_cast<double>(k) * c[k];
    }
    yv = yv * t + c[0];
    return {yv, ypv};
}

// Exponential expansion for large positive x.
inline AiryPair airy_asymptotic_positive(double x) {
    const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    double u = 1.0;            // u_k
    double s = 0.0, sp = 0.0;
    double zk = 1.0;           // zeta^k
    double prev = 1e308;
    double sign = 1.0;
    for (int k = 0;; ++k) {
        const double v = (k > 0) ? -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u : 1.0;
        const double t = sign * u / zk;
        const double tp = sign * v / zk;
        if (std::abs(t) > prev) break;          // past the minimal term
        s += t;
        sp += tp;
        if (std::abs(t) < 1e-19 * std::abs(s)) break;
        prev = std::abs(t);
        const double kk = k + 1.0;
        u *= (3.0 * kk - 2.5) * (3.0 * kk - 1.5) * (3.0 * kk - 0.5) /
             (54.0 * kk * (kk - 0.5));
        zk *= zeta;
        sign = -sign;
    }
    const double e = std::exp(-zeta);
    const double x4 = std::pow(x, 0.25);
    return {e / (2.0 * kSqrtPi * x4) * s, -e * x4 / (2.0 * kSqrtPi) * sp};
}

// Oscillatory expansion for large negative x; argument is z = -x > 0.
inline AiryPair airy_asymptotic_negative(double z) {
    const double zeta = (2.0 / 3.0) * z * std::sqrt(z);
    const double zeta2 = zeta * zeta;
    double s_even = 0.0, s_odd = 0.0;   // Ai sums
    double p_even = 0.0, p_odd = 0.0;   // Ai' sums
    double u = 1.0;                     // u_{2k}
    double z2k = 1.0;                   // zeta^{2k}
    double prev = 1e308;
    double sign = 1.0;
    for (int k = 0;; ++k) {
        const int m = 2 * k;
        const double u2k = u;
        double u2k1 = u2k * (3.0 * (m + 1) - 2.5) * (3.0 * (m + 1) - 1.5) *
                      (3.0 * (m + 1) - 0.5) / (54.0 * (m + 1) * (m + 0.5));
        const double v2k = (m > 0) ? -(6.0 * m + 1.0) / (6.0 * m - 1.0) * u2k : 1.0;
        const double v2k1 = -(6.0 * (m + 1) + 1.0) / (6.0 * (m + 1) - 1.0) * u2k1;
        const double t = sign * u2k / z2k;
        if (std::abs(t) > prev) break;
        s_even += t;
        s_odd += sign * u2k1 / (z2k * zeta);
        p_even += sign * v2k / z2k;
        p_odd += sign * v2k1 / (z2k * zeta);
        if (std::abs(t) < 1e-19) break;
        prev = std::abs(t);
        u = u2k1 * (3.0 * (m + 2) - 2.5) * (3.0 * (m + 2) - 1.5) *
            (3.0 * (m + 2) - 0.5) / (54.0 * (m + 2) * (m + 1.5));
        z2k *= zeta2;
        sign = -sign;
    }
    const double c = std::cos(zeta + kPi / 4.0);
    const double s = std::sin(zeta + kPi / 4.0);
    const double z4 = std::pow(z, 0.25);
    return {(s * s_even - c * s_odd) / (kSqrtPi * z4),
            -(c * p_even + s * p_odd) * z4 / kSqrtPi};
}

// Anchor table on [-10, 10], spacing 0.25, index 0 at x = +10.
struct AiryAnchorTable {
    static constexpr double x_top = 10.0;
    static constexpr double x_bottom = -10.0;
    static constexpr double spacing = 0.25;
    static constexpr std::size_t count = 81;
    std::array<AiryPair, count> anchors;

    AiryAnchorTable() {
        AiryPair p = airy_asymptotic_positive(x_top);
        anchors[0] = p;
        double x = x_top;
        for (std::size_t i = 1; i < count; ++i) {
            p = airy_taylor_step<26>(x, p.ai, p.ai_prime, -spacing);
            x -= spacing;
            anchors[i] = p;
        }
    }
};

inline const AiryAnchorTable& airy_anchors() {
    static const AiryAnchorTable table;
    return table;
}

inline AiryPair airy_middle(double x) {
    const auto& table = airy_anchors();
    const double idxf = (AiryAnchorTable::x_top - x) / AiryAnchorTable::spacing;
    std::size_t i = static_cast<std::size_t>(idxf + 0.5);
    if (i >= AiryAnchorTable::count) i = AiryAnchorTable::count - 1;
    const double xa = AiryAnchorTable::x_top - static_cast<double>(i) * AiryAnchorTable::spacing;
    const AiryPair& p = table.anchors[i];
    return airy_taylor_step<20>(xa, p.ai, p.ai_prime, x - xa);
}

inline AiryPair airy_pair(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("airy: non-finite argument");
    if (x > 9.5) return airy_asymptotic_positive(x);
    if (x < -9.5) return airy_asymptotic_negative(-x);
    return airy_middle(x);
}

}  // namespace detail

inline double airy_ai(double x) { return detail::airy_pair(x).ai; }

inline double airy_ai_prime(double x) { return detail::airy_pair(x).ai_prime; }

/// Closed-form large-n estimate of the n-th negative zero of Ai.
inline double airy_zero_asymptotic(int n) {
    if (n < 1) throw std::domain_error("airy_zero_asymptotic: n must be >= 1");
    const double arg = 1.5 * detail::kPi * (static_cast<double>(n) - 0.25);
    return -std::pow(arg, 2.0 / 3.0);
}

/// The n-th negative zero of Ai, refined by Newton iteration from the
/// asymptotic seed. The seed is within 1% of the zero already for n = 1.
inline AiryZero airy_zero(int n) {
    if (n < 1) throw std::domain_error("airy_zero: n must be >= 1");
    double x = airy_zero_asymptotic(n);
    AiryPair p{};
    for (int iter = 0; iter < 20; ++iter) {
        p = detail::airy_pair(x);
        const double dx = p.ai / p.ai_prime;
        x -= dx;
        if (std::abs(dx) < 1e-14 * std::abs(x)) break;
    }
    p = detail::airy_pair(x);
    return {n, x, p.ai_prime};
}

}  // namespace bouncer

#endif  // BOUNCER_AIRY_HPP
