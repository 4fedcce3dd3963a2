#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "pcf/errors.hpp"
#include "pcf/quadrature.hpp"
#include "pcf/steepest.hpp"

namespace pcf::detail {

// e^{-46} is below 1e-20: integrand weights beyond this are dropped.
inline constexpr double kSigmaMax2 = 46.0;

struct QuadTally {
    long evaluations = 0;
    double err_estimate = 0.0;

    template <std::size_t N>
    void add(const MultiQuadratureResult<N>& r, const char* what) {
        evaluations += r.evaluations;
        err_estimate = std::max(err_estimate, r.err_estimate);
        if (!r.converged) throw ConvergenceError(what, r.err_estimate, evaluations);
    }
};

inline QuadratureOptions quad_options(double tol) {
    QuadratureOptions opt;
    opt.tol_rel = tol;
    return opt;
}

// Largest leg parameter needed for exponent a * tau * s^2.
inline double leg_reach(double a) { return std::sqrt(kSigmaMax2 / a); }

// Integral over s in [0, s_hi] of exp(a tau s^2 + log_offset) f(w, log w) dl/ds,
// where w = w_s e^l on the leg. f returns std::array<cplx, N>.
template <std::size_t N, class F>
std::array<cplx, N> leg_integral(const SteepestLeg& leg, double a, double s_hi, double log_offset, F&& f,
                                 double tol, QuadTally& tally, const char* what) {
    const double tau = leg.tau();
    auto integrand = [&](double s, double, double) {
        auto p = leg.at(s);
        cplx w = leg.w(p);
        cplx lw = leg.log_w(p);
        double weight = std::exp(a * tau * s * s + log_offset);
        std::array<cplx, N> v = f(w, lw);
        for (auto& x : v) x *= weight * p.dell;
        return v;
    };
    auto r = tanh_sinh_multi<N>(integrand, 0.0, s_hi, quad_options(tol));
    tally.add(r, what);
    return r.values;
}

}  // namespace pcf::detail
