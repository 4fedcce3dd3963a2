#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pcf/contours.hpp"
#include "pcf/errors.hpp"
#include "pcf/ureg.hpp"
#include "support.hpp"

using namespace pcf;
using pcf::test::find_uv;
using pcf::test::rel;
using pcf::test::x_of;

constexpr double kPi = std::numbers::pi;

namespace {

// Compares both sides of a U/V result with the oracle at (-a or a, +-x).
void check_uv(const UVResult& r, double a_signed, double x, double tol) {
    const auto& p = find_uv(a_signed, x);
    const auto& m = find_uv(a_signed, -x);
    INFO("a = " << a_signed << ", x = " << x);
    CHECK(rel(r.plus.U, p.U) <= tol);
    CHECK(rel(r.plus.Up, p.Up) <= tol);
    CHECK(rel(r.plus.V, p.V) <= tol);
    CHECK(rel(r.plus.Vp, p.Vp) <= tol);
    CHECK(rel(r.minus.U, m.U) <= tol);
    CHECK(rel(r.minus.Up, m.Up) <= tol);
    CHECK(rel(r.minus.V, m.V) <= tol);
    CHECK(rel(r.minus.Vp, m.Vp) <= tol);
}

}  // namespace

TEST_CASE("U_POS kernels") {
    for (double t : {0.0, 0.4, 3.0}) {
        auto k = kernels_upos(0.0, t);
        double w0 = t + std::sqrt(t * t + 1.0);
        CHECK(std::fabs(k.psi) <= 1e-15);
        CHECK(rel(k.g, std::sqrt(w0)) <= 1e-14);
    }
    CHECK(kernels_upos(1.2, 1.0).psi < 0.0);
    CHECK(kernels_upos(-1.2, 1.0).psi < 0.0);
}

TEST_CASE("quad_I and quad_J") {
    for (double a : {0.5, 3.0, 100.0})
        for (double t : {0.0, 0.3, 2.0}) CHECK(quad_I(a, x_of(a, t)).value > 0.0);
    const double a = 1e4, t = 1.0;
    double pin = std::sqrt(kPi) / (std::sqrt(a) * std::pow(t * t + 1.0, 0.25));
    CHECK(rel(quad_I(a, x_of(a, t)).value, pin) <= 1e-3);
    auto j = quad_J(2.0, 1.0);
    CHECK(std::isfinite(j.value));
    CHECK(j.value > 0.0);
    CHECK(j.evaluations > 0);
    CHECK_THROWS_AS(quad_I(2.0, -1.0), DomainError);
}

TEST_CASE("u_pos_assemble") {
    for (double a : {1.0, 5.0, 25.0, 1e3})
        for (double t : {0.01, 1.0, 5.0}) {
            CAPTURE(a);
            CAPTURE(t);
            CHECK(u_pos_assemble(a, x_of(a, t)).wronskian_residual <= 1e-10);
        }
    check_uv(u_pos_assemble(2.0, 1.0), 2.0, 1.0, 1e-10);
    check_uv(u_pos_assemble(3.0, -2.0), 3.0, -2.0, 1e-10);
    check_uv(u_pos_assemble(10.0, x_of(10.0, 1.0)), 10.0, x_of(10.0, 1.0), 1e-10);
    auto z = u_pos_assemble(4.0, 0.0);
    const auto& o = find_uv(4.0, 0.0);
    CHECK(rel(z.plus.U, o.U) <= 1e-10);
    CHECK(rel(z.minus.U, o.U) <= 1e-10);
    CHECK(rel_diff(z.plus.U, z.minus.U) <= 1e-10);
    // U(1, x) ~ e^{-x^2/4} x^{-3/2}
    ScaledReal u = u_pos_assemble(1.0, 50.0).plus.U;
    ScaledReal pin = ScaledReal::from_log(1, -625.0 - 1.5 * std::log(50.0));
    CHECK(rel_diff(u, pin) <= 5e-3);
}

TEST_CASE("U_NEG_MID kernels") {
    const double t = 0.5;
    double th_p = std::asin(t);
    CHECK(std::fabs(kernels_uneg_mid(th_p, t).psi) <= 1e-14);
    double theta0 = kPi / 2.0 - 2.0 * eta_of_t(t);
    for (double th : {0.05, 0.3, th_p + 0.1, theta0 - 0.05}) CHECK(kernels_uneg_mid(th, t).psi > 0.0);
    // h = (t + i w) g with g = g1 - i g2
    const double th = 0.4;
    auto k = kernels_uneg_mid(th, t);
    double r = r_uneg_mid(th, t).r;
    double u = r * std::cos(th), v = r * std::sin(th);
    CHECK(std::fabs(k.h1 - ((t - v) * k.g1 + u * k.g2)) <= 1e-13 * (std::fabs(k.h1) + 1.0));
    CHECK(std::fabs(k.h2 - ((t - v) * k.g2 - u * k.g1)) <= 1e-13 * (std::fabs(k.h2) + 1.0));
}

TEST_CASE("uv_neg_mid") {
    for (double a : {5.0, 25.0, 1e3})
        for (double t : {0.2, -0.2, 0.7, -0.7}) {
            CAPTURE(a);
            CAPTURE(t);
            CHECK(uv_neg_mid(a, x_of(a, t)).wronskian_residual <= 1e-9);
        }
    check_uv(uv_neg_mid(4.0, x_of(4.0, 0.25)), -4.0, x_of(4.0, 0.25), 1e-9);
    check_uv(uv_neg_mid(25.0, 0.0), -25.0, 0.0, 1e-9);
    check_uv(uv_neg_mid(10.0, -3.0), -10.0, -3.0, 1e-9);
    CHECK(uv_neg_mid(25.0, 0.0).regime == Regime::UNegMid);
}

TEST_CASE("uv_neg_near1") {
    const double a = 10.0;
    for (double t : {0.95, -0.95}) {
        auto m = uv_neg_mid(a, x_of(a, t));
        auto n = uv_neg_near1(a, x_of(a, t));
        CAPTURE(t);
        CHECK(rel_diff(m.plus.U, n.plus.U) <= 1e-10);
        CHECK(rel_diff(m.plus.V, n.plus.V) <= 1e-10);
        CHECK(rel_diff(m.plus.Up, n.plus.Up) <= 1e-10);
        CHECK(rel_diff(m.plus.Vp, n.plus.Vp) <= 1e-10);
    }
    check_uv(uv_neg_near1(5.0, x_of(5.0, 0.95)), -5.0, x_of(5.0, 0.95), 1e-9);
    check_uv(uv_neg_near1(10.0, x_of(10.0, -0.93)), -10.0, x_of(10.0, -0.93), 1e-9);
    // both sides of t = 1 bridged by the oracle
    check_uv(uv_neg_near1(10.0, x_of(10.0, 0.999)), -10.0, x_of(10.0, 0.999), 1e-8);
    check_uv(uv_neg_right(10.0, x_of(10.0, 1.001)), -10.0, x_of(10.0, 1.001), 1e-8);
}

TEST_CASE("uv_neg_right") {
    for (double a : {5.0, 100.0})
        for (double t : {1.2, 3.0, 10.0}) {
            CAPTURE(a);
            CAPTURE(t);
            CHECK(uv_neg_right(a, x_of(a, t)).wronskian_residual <= 1e-9);
        }
    check_uv(uv_neg_right(3.0, x_of(3.0, 1.1)), -3.0, x_of(3.0, 1.1), 1e-9);
    check_uv(uv_neg_right(10.0, x_of(10.0, 1.0)), -10.0, x_of(10.0, 1.0), 1e-9);
    auto gh = gh_uneg_right(5.0, 2.0);
    CHECK(std::isfinite(gh.G1));
    CHECK(std::isfinite(gh.H3));
}

TEST_CASE("uv_neg_left") {
    check_uv(uv_neg_left(3.0, x_of(3.0, -1.05)), -3.0, x_of(3.0, -1.05), 1e-8);
    check_uv(uv_neg_left(2.3, x_of(2.3, -1.4)), -2.3, x_of(2.3, -1.4), 1e-9);
    // connection with the right-hand assembly:
    // pi V(-a, x) / Gamma(1/2 - a) = sin(-pi a) U(-a, x) + U(-a, -x)
    const double a = 2.3, x = x_of(a, 1.4);
    auto right = uv_neg_right(a, x);
    auto left = uv_neg_left(a, -x);
    double rg = 1.0 / std::tgamma(0.5 - a);
    double lhs = kPi * rg * right.plus.V.to_double();
    double rhs = -std::sin(kPi * a) * right.plus.U.to_double() + left.plus.U.to_double();
    CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(std::fabs(lhs), std::fabs(left.plus.U.to_double())));
    // half-integer a: U(-5/2, x) = e^{-x^2/4} (x^2 - 1)
    const double h = 2.5, xh = x_of(h, 1.4);
    auto l = uv_neg_left(h, -xh);
    double exact = std::exp(-xh * xh / 4.0) * (xh * xh - 1.0);
    CHECK(rel(l.plus.U, exact) <= 1e-9);
    CHECK(rel(l.minus.U, exact) <= 1e-9);
}

TEST_CASE("ureg arguments are checked") {
    CHECK_THROWS(uv_neg_right(5.0, x_of(5.0, 0.5)));
    CHECK_THROWS(uv_neg_left(5.0, x_of(5.0, 0.5)));
    CHECK_THROWS(u_pos_assemble(0.2, 1.0));
}
