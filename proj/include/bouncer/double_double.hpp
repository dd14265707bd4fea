// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where an entire but strongly cancelling power series must be summed
// to an absolute accuracy far below max_term * DBL_EPSILON.

#ifndef BOUNCER_DOUBLE_DOUBLE_HPP
#define BOUNCER_DOUBLE_DOUBLE_HPP

#include <cmath>

namespace bouncer {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

namespace dd_detail {

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DD operator+(DD x, DD y) {
    DD s = dd_detail::two_sum(x.hi, y.hi);
    s.lo += x.lo + y.lo;
    return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD x) { return {-x.hi, -x.lo}; }

inline DD operator-(DD x, DD y) { return x + (-y); }

inline DD operator*(DD x, double c) {
    DD p = dd_detail::two_prod(x.hi, c);
    p.lo += x.lo * c;
    return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD x, double c) {
    const double q1 = x.hi / c;
    const DD r = x - dd_detail::two_prod(q1, c);
    const double q2 = (r.hi + r.lo) / c;
    return dd_detail::quick_two_sum(q1, q2);
}

/// Complex number with double-double components.
struct ComplexDD {
    DD re;
    DD im;

    ComplexDD& operator+=(const ComplexDD& o) {
        re = re + o.re;
        im = im + o.im;
        return *this;
    }
};

/// Multiply by (i * q): (re, im) -> (-im*q, re*q).
inline ComplexDD mul_iq(const ComplexDD& z, double q) {
    return {-(z.im * q), z.re * q};
}

inline ComplexDD operator*(const ComplexDD& z, double c) {
    return {z.re * c, z.im * c};
}

inline ComplexDD operator/(const ComplexDD& z, double c) {
    return {z.re / c, z.im / c};
}

}  // namespace bouncer

#endif  // BOUNCER_DOUBLE_DOUBLE_HPP
