#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "pcf/quadrature.hpp"
#include "pcf/scalar.hpp"
#include "support.hpp"

using namespace pcf;
using pcf::test::rel;

constexpr double kPi = std::numbers::pi;

TEST_CASE("Gaussian on the half line") {
    auto r = integrate([](double u) { return std::exp(-u * u); }, Interval::half_line(0.0));
    CHECK(r.converged);
    CHECK(rel(r.value_re, std::sqrt(kPi) / 2.0) <= 1e-13);
    CHECK(r.err_estimate <= 1e-13 * r.value_re);
}

TEST_CASE("Gaussian on the full line and the lower half line") {
    auto r = integrate([](double u) { return std::exp(-u * u); }, Interval::full_line());
    CHECK(rel(r.value_re, std::sqrt(kPi)) <= 1e-13);
    auto d = integrate([](double u) { return std::exp(-(u - 1.0) * (u - 1.0)); }, Interval::half_line_down(1.0));
    CHECK(rel(d.value_re, std::sqrt(kPi) / 2.0) <= 1e-13);
}

TEST_CASE("endpoint singularity") {
    auto r = integrate([](double p) { return 1.0 / std::sqrt(p); }, Interval::finite(0.0, 1.0));
    CHECK(r.converged);
    CHECK(rel(r.value_re, 2.0) <= 1e-12);
    // distance-to-endpoint form keeps full accuracy
    auto s = tanh_sinh([](double, double dl, double) { return 1.0 / std::sqrt(dl); }, 0.0, 1.0);
    CHECK(rel(s.value_re, 2.0) <= 1e-14);
}

TEST_CASE("complex integrand") {
    auto r = integrate([](double u) { return std::exp(std::complex<double>(-u * u, u)); }, Interval::full_line());
    CHECK(rel(r.value_re, std::sqrt(kPi) * std::exp(-0.25)) <= 1e-13);
    CHECK(std::fabs(r.value_im) <= 1e-15);
}

TEST_CASE("saddle integrand at t = 1, level agreement and reference value") {
    const double w0 = 1.0 + std::sqrt(2.0);
    auto f = [w0](double u, double dl) {
        if (dl == 0.0) return 0.0;
        // ln(1+u) from the endpoint distance, exact near u = -1
        return std::exp(-2.0 * (0.5 * w0 * w0 * u * u + u - std::log(dl))) / std::sqrt(dl);
    };
    auto run = [&](int levels) {
        QuadratureOptions opt;
        opt.tol_rel = 1e-16;
        opt.max_level = levels;
        auto left = tanh_sinh([&](double, double dl, double) { return f(dl - 1.0, dl); }, -1.0, 0.0, opt);
        auto right = exp_sinh([&](double u, double) { return f(u, 1.0 + u); }, 0.0, 0.3, opt);
        return left.value_re + right.value_re;
    };
    double v12 = run(12), v14 = run(14);
    CHECK(std::fabs(v12 - v14) <= 1e-13 * std::fabs(v14));
    CHECK(rel(v14, 0.68894532219422568382) <= 1e-14);
}

TEST_CASE("result contract") {
    QuadratureOptions opt;
    opt.tol_rel = 1e-10;
    opt.tol_abs = 1e-12;
    opt.max_level = 6;
    auto r = exp_sinh([](double u, double) { return std::exp(-u) * std::cos(u); }, 0.0, 1.0, opt);
    CHECK(r.converged);
    CHECK(r.err_estimate <= opt.tol_abs + opt.tol_rel * std::fabs(r.value_re));
    CHECK(rel(r.value_re, 0.5) <= 1e-10);
    // node count bounded by the level cap
    CHECK(r.evaluations <= (7.0 / 0.5 + 1.0) * (1 << opt.max_level));
    auto e = tanh_sinh([](double, double, double) { return 1.0; }, 1.0, 1.0);
    CHECK(e.value_re == 0.0);
    CHECK(e.evaluations == 0);
}

TEST_CASE("shared-node multi integrand") {
    auto r = exp_sinh_multi<2>(
        [](double u, double) {
            return std::array<std::complex<double>, 2>{std::exp(-u), std::complex<double>(0.0, u * std::exp(-u))};
        },
        0.0, 1.0);
    CHECK(r.converged);
    CHECK(rel(r.values[0].real(), 1.0) <= 1e-13);
    CHECK(rel(r.values[1].imag(), 1.0) <= 1e-13);
}

TEST_CASE("non-finite integrand raises") {
    CHECK_THROWS_AS(integrate([](double u) { return 1.0 / (u - u); }, Interval::finite(0.0, 1.0)), ConvergenceError);
}
