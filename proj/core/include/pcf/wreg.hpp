#pragma once

#include <complex>

#include "pcf/regime.hpp"
#include "pcf/scalar.hpp"
#include "pcf/ureg.hpp"

namespace pcf {

// W and W' at the requested x (plus) and at -x (minus).
struct WResult {
    ScaledReal W_plus, Wp_plus, W_minus, Wp_minus;
    Regime regime = Regime::WNeg;
    // Phase of the oscillatory factor where the representation has one.
    double chi = 0.0;
    // Estimated decimal digits lost on each side; accuracy_loss_digits is the larger.
    double loss_plus = 0.0;
    double loss_minus = 0.0;
    double accuracy_loss_digits = 0.0;
    // |-W(x) W'(-x) - W'(x) W(-x) - 1|
    double wronskian_residual = 0.0;
    long evaluations = 0;
    double err_estimate = 0.0;
};

// W(-a, +-x) for a >= 0.5.
WResult w_neg(double a, double x, double tol = kDefaultTol);
// W(a, +-x) for a >= 0.5: |t| >= 1, |t| near 1, |t| < 1.
WResult w_pos_right(double a, double x, double tol = kDefaultTol);
WResult w_pos_turn(double a, double x, double tol = kDefaultTol);
WResult w_pos_mid(double a, double x, double tol = kDefaultTol);

// phi(w_+) - phi(w_+ + i q) of the a < 0 representation, t >= 0.
std::complex<double> w_neg_psi(double q, double t);

double w_wronskian_residual(const WResult& r);

}  // namespace pcf
