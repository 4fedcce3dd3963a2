#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "pcf/contours.hpp"
#include "pcf/errors.hpp"
#include "pcf/series.hpp"
#include "pcf/wreg.hpp"
#include "support.hpp"

using namespace pcf;
using pcf::test::find_w;
using pcf::test::rel;
using pcf::test::x_of;

namespace {

void check_plus(const WResult& r, double a_signed, double x, double tol) {
    const auto& p = find_w(a_signed, x);
    INFO("a = " << a_signed << ", x = " << x);
    CHECK(rel(r.W_plus, p.W) <= tol);
    CHECK(rel(r.Wp_plus, p.Wp) <= tol);
}

void check_minus(const WResult& r, double a_signed, double x, double tol) {
    const auto& m = find_w(a_signed, -x);
    INFO("a = " << a_signed << ", -x = " << -x);
    CHECK(rel(r.W_minus, m.W) <= tol);
    CHECK(rel(r.Wp_minus, m.Wp) <= tol);
}

void check_both(const WResult& r, double a_signed, double x, double tol) {
    check_plus(r, a_signed, x, tol);
    check_minus(r, a_signed, x, tol);
}

}  // namespace

TEST_CASE("small-q expansion of the a < 0 exponent") {
    const double t = 0.7;
    const double up = (t + std::sqrt(t * t + 1.0)) / std::sqrt(2.0);
    const cplx c2 = (1.0 + 2.0 * up * up) / (4.0 * up * up);
    const cplx c3 = cplx(1.0, -1.0) / (12.0 * up * up * up);
    CHECK(std::abs(w_neg_psi(0.0, t)) <= 1e-16);
    // even and odd parts with one Richardson step
    auto even = [&](double q) { return (w_neg_psi(q, t) + w_neg_psi(-q, t)) / (2.0 * q * q); };
    auto odd = [&](double q) { return (w_neg_psi(q, t) - w_neg_psi(-q, t)) / (2.0 * q * q * q); };
    const double q = 1e-2;
    cplx e2 = (4.0 * even(q / 2.0) - even(q)) / 3.0;
    cplx e3 = (4.0 * odd(q / 2.0) - odd(q)) / 3.0;
    CHECK(std::abs(e2 - c2) <= 1e-6);
    CHECK(std::abs(e3 - c3) <= 1e-6);
}

TEST_CASE("w_neg") {
    for (double a : {1.0, 10.0, 1e3})
        for (double t : {0.0, 0.5, 3.0}) {
            CAPTURE(a);
            CAPTURE(t);
            auto r = w_neg(a, x_of(a, t));
            CHECK(r.wronskian_residual <= 1e-9);
            CHECK(r.accuracy_loss_digits >= 0.0);
            CHECK(r.regime == Regime::WNeg);
        }
    check_both(w_neg(2.0, 1.0), -2.0, 1.0, 1e-9);
    check_both(w_neg(4.0, 2.0), -4.0, 2.0, 1e-9);
    check_both(w_neg(1.0, 0.0), -1.0, 0.0, 1e-9);
    check_both(w_neg(0.7, 0.9), -0.7, 0.9, 1e-9);
    check_both(w_neg(5.0, -3.0), -5.0, -3.0, 1e-9);
    check_both(w_neg(10.0, x_of(10.0, 0.5)), -10.0, x_of(10.0, 0.5), 1e-9);
}

TEST_CASE("w_pos_right") {
    // descent along the vertical line through w_+
    const double t = 2.0;
    const cplx wp = kRot * (t + std::sqrt(t * t - 1.0));
    for (double q : {0.5, -0.5, 2.0, -2.0}) {
        cplx u = cplx(0.0, q) / wp;
        cplx psi = -0.5 * wp * wp * u * u + cplx(0.0, 1.0) * ln1p_minus(u);
        CHECK(psi.real() > 0.0);
    }
    for (double a : {2.0, 50.0})
        for (double tt : {1.5, 4.0}) {
            CAPTURE(a);
            CAPTURE(tt);
            CHECK(w_pos_right(a, x_of(a, tt)).wronskian_residual <= 1e-9);
        }
    check_both(w_pos_right(1.0, 2.4), 1.0, 2.4, 1e-9);
    check_both(w_pos_right(9.0, 10.0), 9.0, 10.0, 1e-9);
    check_both(w_pos_right(3.0, x_of(3.0, -1.1)), 3.0, x_of(3.0, -1.1), 1e-9);
    check_both(w_pos_right(10.0, x_of(10.0, 1.01)), 10.0, x_of(10.0, 1.01), 1e-9);
}

TEST_CASE("w_pos_mid") {
    const double a = 2.0, x = x_of(2.0, 0.3);
    auto r = w_pos_mid(a, x);
    check_plus(r, a, x, 1e-9);
    check_minus(r, a, x, std::pow(10.0, r.accuracy_loss_digits - 12.0));
    CHECK(r.loss_minus >= r.loss_plus);
    CHECK(r.wronskian_residual <= 1e-9);
    // t = 0: initial values
    for (double aa : {1.0, 2.0, 7.5}) {
        auto z = w_pos_mid(aa, 0.0);
        double w0, w0p;
        series::w_origin(aa, w0, w0p);
        CHECK(rel(z.W_plus, w0) <= 1e-10);
        CHECK(rel(z.Wp_plus, w0p) <= 1e-10);
    }
    check_both(w_pos_mid(5.0, x_of(5.0, 0.7)), 5.0, x_of(5.0, 0.7), 1e-9);
    check_both(w_pos_mid(1.0, 1.0), 1.0, 1.0, 1e-9);
    auto n = w_pos_mid(3.0, x_of(3.0, -0.5));
    check_plus(n, 3.0, x_of(3.0, -0.5), 1e-9);
    check_minus(n, 3.0, x_of(3.0, -0.5), std::pow(10.0, n.loss_minus - 12.0));
}

TEST_CASE("w_pos_turn") {
    for (double t : {0.999, 1.0, 1.001}) {
        CAPTURE(t);
        auto r = w_pos_turn(2.0, x_of(2.0, t));
        CHECK(r.regime == Regime::WPosTurn);
        check_plus(r, 2.0, x_of(2.0, t), 1e-9);
        check_minus(r, 2.0, x_of(2.0, t), std::max(1e-9, std::pow(10.0, r.loss_minus - 12.0)));
        CHECK(r.wronskian_residual <= 1e-9);
    }
    for (double t : {0.997, 1.003}) check_plus(w_pos_turn(10.0, x_of(10.0, t)), 10.0, x_of(10.0, t), 1e-9);
}

TEST_CASE("W Wronskian helper") {
    auto r = w_neg(3.0, 1.0);
    CHECK(w_wronskian_residual(r) == doctest::Approx(r.wronskian_residual).epsilon(1e-12));
    CHECK_THROWS(w_neg(0.2, 1.0));
}
