#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <type_traits>

#include "pcf/errors.hpp"

namespace pcf {

struct QuadratureResult {
    double value_re = 0.0;
    double value_im = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;

    std::complex<double> value() const { return {value_re, value_im}; }
};

struct QuadratureOptions {
    double tol_rel = 1e-13;
    double tol_abs = 0.0;
    int max_level = 14;
};

enum class IntervalKind { finite, half_line, half_line_down, full_line };

struct Interval {
    IntervalKind kind = IntervalKind::finite;
    double lo = 0.0;
    double hi = 0.0;
    // Characteristic width of the integrand on infinite intervals.
    double scale = 1.0;

    static Interval finite(double a, double b) { return {IntervalKind::finite, a, b, 1.0}; }
    static Interval half_line(double a, double scale = 1.0) { return {IntervalKind::half_line, a, 0.0, scale}; }
    static Interval half_line_down(double b, double scale = 1.0) {
        return {IntervalKind::half_line_down, 0.0, b, scale};
    }
    static Interval full_line(double scale = 1.0) { return {IntervalKind::full_line, 0.0, 0.0, scale}; }
};

namespace detail {

// Neumaier-compensated accumulator; order of additions fixed by the caller.
template <class T>
struct CompensatedSum {
    T sum{};
    T comp{};

    static void add1(double& s, double& c, double x) {
        double t = s + x;
        if (std::fabs(s) >= std::fabs(x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }

    void add(const T& x) {
        if constexpr (std::is_same_v<T, double>) {
            add1(sum, comp, x);
        } else {
            double s_re = sum.real(), s_im = sum.imag();
            double c_re = comp.real(), c_im = comp.imag();
            add1(s_re, c_re, x.real());
            add1(s_im, c_im, x.imag());
            sum = T(s_re, s_im);
            comp = T(c_re, c_im);
        }
    }

    T value() const { return sum + comp; }
};

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }
inline bool finite_value(double x) { return std::isfinite(x); }
inline bool finite_value(const std::complex<double>& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
}

// Node (abscissa data + weight) generator for the three transformations, in the
// transformed variable tau with step h.
struct Node {
    double x;
    double dl;  // distance to the left endpoint (finite intervals, half-line)
    double dr;  // distance to the right endpoint (finite intervals)
    double w;
};

constexpr double kHalfPi = std::numbers::pi / 2.0;

inline Node tanh_sinh_node(double tau, double a, double b) {
    double half = 0.5 * (b - a);
    double u = kHalfPi * std::sinh(tau);
    double e = std::exp(-2.0 * std::fabs(u));
    double one_minus = 2.0 * e / (1.0 + e);  // 1 - |x|
    double one_plus = 2.0 / (1.0 + e);       // 1 + |x|
    double w = half * kHalfPi * std::cosh(tau) * one_minus * one_plus;
    Node n{};
    if (tau >= 0.0) {
        n.dr = half * one_minus;
        n.dl = half * one_plus;
        n.x = b - n.dr;
    } else {
        n.dl = half * one_minus;
        n.dr = half * one_plus;
        n.x = a + n.dl;
    }
    n.w = w;
    return n;
}

inline Node exp_sinh_node(double tau, double a, double scale) {
    double u = kHalfPi * std::sinh(tau);
    double eu = std::exp(u);
    Node n{};
    n.dl = scale * eu;
    n.dr = std::numeric_limits<double>::infinity();
    n.x = a + n.dl;
    n.w = scale * kHalfPi * std::cosh(tau) * eu;
    return n;
}

inline Node sinh_sinh_node(double tau, double scale) {
    double u = kHalfPi * std::sinh(tau);
    Node n{};
    n.x = scale * std::sinh(u);
    n.dl = std::numeric_limits<double>::infinity();
    n.dr = std::numeric_limits<double>::infinity();
    n.w = scale * kHalfPi * std::cosh(tau) * std::cosh(u);
    return n;
}

// Level-doubling trapezoidal driver over tau in [tau_lo, tau_hi].
template <class T, class NodeFn, class Eval>
QuadratureResult trapezoid_levels(double tau_lo, double tau_hi, NodeFn node_fn, Eval eval,
                                  const QuadratureOptions& opt) {
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    double h0 = 0.5;
    int k_lo = static_cast<int>(std::ceil(tau_lo / h0));
    int k_hi = static_cast<int>(std::floor(tau_hi / h0));

    CompensatedSum<T> acc;
    CompensatedSum<double> abs_acc;
    long evals = 0;

    auto visit = [&](double tau) {
        Node n = node_fn(tau);
        if (!(n.w > 0.0) || !std::isfinite(n.w)) return;
        T fx = eval(n);
        ++evals;
        if (!finite_value(fx)) {
            throw ConvergenceError("quadrature: non-finite integrand value", 0.0, evals);
        }
        T term = fx * n.w;
        acc.add(term);
        abs_acc.add(magnitude(term));
    };

    for (int k = k_lo; k <= k_hi; ++k) visit(k * h0);

    double h = h0;
    T prev = acc.value() * h;
    QuadratureResult res;
    for (int level = 1; level <= opt.max_level; ++level) {
        h *= 0.5;
        // new nodes: odd multiples of h
        long m_lo = static_cast<long>(std::ceil((tau_lo / h - 1.0) / 2.0));
        long m_hi = static_cast<long>(std::floor((tau_hi / h - 1.0) / 2.0));
        for (long m = m_lo; m <= m_hi; ++m) visit((2 * m + 1) * h);
        T cur = acc.value() * h;
        double diff = magnitude(cur - prev);
        double mag = magnitude(cur);
        double floor_err = 64.0 * kEps * abs_acc.value() * h;
        double target = std::max(opt.tol_abs + opt.tol_rel * mag, floor_err);
        res.err_estimate = std::max(diff, floor_err);
        prev = cur;
        if (level >= 2 && diff <= target) {
            res.converged = true;
            break;
        }
    }
    if constexpr (std::is_same_v<T, double>) {
        res.value_re = prev;
        res.value_im = 0.0;
    } else {
        res.value_re = prev.real();
        res.value_im = prev.imag();
    }
    res.evaluations = evals;
    return res;
}

template <class F, class... Args>
using result_t = std::conditional_t<
    std::is_same_v<std::decay_t<std::invoke_result_t<F, Args...>>, double>, double, std::complex<double>>;

}  // namespace detail

// Integral over [a, b]; f(x, dl, dr) receives the distances to both endpoints.
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    using T = detail::result_t<F, double, double, double>;
    if (!(b > a)) return QuadratureResult{0.0, 0.0, 0.0, 0, true};
    return detail::trapezoid_levels<T>(
        -4.0, 4.0, [a, b](double tau) { return detail::tanh_sinh_node(tau, a, b); },
        [&f](const detail::Node& n) { return T(f(n.x, n.dl, n.dr)); }, opt);
}

// Integral over [a, +inf); f(x, dl) with dl = x - a.
template <class F>
QuadratureResult exp_sinh(F&& f, double a, double scale, const QuadratureOptions& opt = {}) {
    using T = detail::result_t<F, double, double>;
    return detail::trapezoid_levels<T>(
        -4.0, 3.0, [a, scale](double tau) { return detail::exp_sinh_node(tau, a, scale); },
        [&f](const detail::Node& n) { return T(f(n.x, n.dl)); }, opt);
}

// Integral over the real line.
template <class F>
QuadratureResult sinh_sinh(F&& f, double scale, const QuadratureOptions& opt = {}) {
    using T = detail::result_t<F, double>;
    return detail::trapezoid_levels<T>(
        -3.0, 3.0, [scale](double tau) { return detail::sinh_sinh_node(tau, scale); },
        [&f](const detail::Node& n) { return T(f(n.x)); }, opt);
}

template <std::size_t N>
struct MultiQuadratureResult {
    std::array<std::complex<double>, N> values{};
    double err_estimate = 0.0;  // largest component error
    long evaluations = 0;
    bool converged = false;
};

// Several complex integrands sharing one set of nodes; each component must meet the
// tolerance. The integrand returns std::array<std::complex<double>, N>.
namespace detail {

template <std::size_t N, class NodeFn, class Eval>
MultiQuadratureResult<N> multi_levels(double tau_lo, double tau_hi, NodeFn node_fn, Eval eval,
                                      const QuadratureOptions& opt) {
    using C = std::complex<double>;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    MultiQuadratureResult<N> res;
    std::array<detail::CompensatedSum<C>, N> acc{};
    std::array<detail::CompensatedSum<double>, N> abs_acc{};
    long evals = 0;
    auto visit = [&](double tau) {
        detail::Node n = node_fn(tau);
        if (!(n.w > 0.0) || !std::isfinite(n.w)) return;
        std::array<C, N> fx = eval(n);
        ++evals;
        for (std::size_t j = 0; j < N; ++j) {
            if (!detail::finite_value(fx[j])) {
                throw ConvergenceError("quadrature: non-finite integrand value", 0.0, evals);
            }
            C term = fx[j] * n.w;
            acc[j].add(term);
            abs_acc[j].add(std::abs(term));
        }
    };
    const double h0 = 0.5;
    for (int k = static_cast<int>(std::ceil(tau_lo / h0)); k <= static_cast<int>(std::floor(tau_hi / h0)); ++k)
        visit(k * h0);
    double h = h0;
    std::array<C, N> prev{};
    for (std::size_t j = 0; j < N; ++j) prev[j] = acc[j].value() * h;
    for (int level = 1; level <= opt.max_level; ++level) {
        h *= 0.5;
        long m_lo = static_cast<long>(std::ceil((tau_lo / h - 1.0) / 2.0));
        long m_hi = static_cast<long>(std::floor((tau_hi / h - 1.0) / 2.0));
        for (long m = m_lo; m <= m_hi; ++m) visit((2 * m + 1) * h);
        bool ok = true;
        double worst = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            C cur = acc[j].value() * h;
            double diff = std::abs(cur - prev[j]);
            double floor_err = 64.0 * kEps * abs_acc[j].value() * h;
            double target = std::max(opt.tol_abs + opt.tol_rel * std::abs(cur), floor_err);
            if (diff > target) ok = false;
            worst = std::max(worst, std::max(diff, floor_err));
            prev[j] = cur;
        }
        res.err_estimate = worst;
        if (level >= 2 && ok) {
            res.converged = true;
            break;
        }
    }
    res.values = prev;
    res.evaluations = evals;
    return res;
}

}  // namespace detail

template <std::size_t N, class F>
MultiQuadratureResult<N> tanh_sinh_multi(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    if (!(b > a)) {
        MultiQuadratureResult<N> res;
        res.converged = true;
        return res;
    }
    return detail::multi_levels<N>(
        -4.0, 4.0, [a, b](double tau) { return detail::tanh_sinh_node(tau, a, b); },
        [&f](const detail::Node& n) { return f(n.x, n.dl, n.dr); }, opt);
}

// Half-line [a, +inf) counterpart; f(x, dl).
template <std::size_t N, class F>
MultiQuadratureResult<N> exp_sinh_multi(F&& f, double a, double scale, const QuadratureOptions& opt = {}) {
    return detail::multi_levels<N>(
        -4.0, 3.0, [a, scale](double tau) { return detail::exp_sinh_node(tau, a, scale); },
        [&f](const detail::Node& n) { return f(n.x, n.dl); }, opt);
}

// Generic entry point for integrands of one variable.
template <class F>
QuadratureResult integrate(F&& f, const Interval& iv, double tol_rel = 1e-13, double tol_abs = 0.0) {
    QuadratureOptions opt;
    opt.tol_rel = tol_rel;
    opt.tol_abs = tol_abs;
    switch (iv.kind) {
        case IntervalKind::finite:
            return tanh_sinh([&f](double x, double, double) { return f(x); }, iv.lo, iv.hi, opt);
        case IntervalKind::half_line:
            return exp_sinh([&f](double x, double) { return f(x); }, iv.lo, iv.scale, opt);
        case IntervalKind::half_line_down:
            return exp_sinh([&f, &iv](double x, double) { return f(2.0 * iv.hi - x); }, iv.hi, iv.scale, opt);
        case IntervalKind::full_line:
            return sinh_sinh(f, iv.scale, opt);
    }
    return {};
}

}  // namespace pcf
