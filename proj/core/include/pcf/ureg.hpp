#pragma once

#include <optional>

#include "pcf/regime.hpp"
#include "pcf/scalar.hpp"

namespace pcf {

inline constexpr double kDefaultTol = 1e-13;

struct UVValues {
    ScaledReal U, Up, V, Vp;
};

// Values at the requested x (plus) and at -x (minus).
struct UVResult {
    UVValues plus, minus;
    Regime regime = Regime::UPos;
    // Relative residual of the integral-level Wronskian of the regime.
    double wronskian_residual = 0.0;
    // Relative residual of U V' - U' V = sqrt(2/pi) on the assembled values.
    double assembled_residual = 0.0;
    long evaluations = 0;
    double err_estimate = 0.0;
    std::optional<double> oracle_gap;
};

struct UPosKernel {
    double psi, g, h;
};
struct UNegMidKernel {
    double psi, g1, g2, h1, h2;
};

// Integrands of the theta forms: U_POS (|theta| < pi/2, t >= 0) and U_NEG_MID (0 < theta < theta0, 0 < t < 1).
UPosKernel kernels_upos(double theta, double t);
UNegMidKernel kernels_uneg_mid(double theta, double t);

struct IntegralPair {
    double value = 0.0;
    double derivative = 0.0;
    long evaluations = 0;
};

// I, I_d and J, J_d for a > 0, x >= 0.
IntegralPair quad_I(double a, double x, double tol = kDefaultTol);
IntegralPair quad_J(double a, double x, double tol = kDefaultTol);

// G_j, H_j (j = 1, 2, 3) of the a < 0 representations; G3 = H3 = 0 where absent.
struct GHSet {
    double G1 = 0, G2 = 0, G3 = 0, H1 = 0, H2 = 0, H3 = 0;
};
GHSet gh_uneg_mid(double a, double t, double tol = kDefaultTol);
GHSet gh_uneg_near1(double a, double t, double tol = kDefaultTol);
GHSet gh_uneg_right(double a, double t, double tol = kDefaultTol);

// U(a, +-x), V(a, +-x) for a >= 0.5.
UVResult u_pos_assemble(double a, double x, double tol = kDefaultTol);

// U(-a, +-x), V(-a, +-x) for a >= 0.5 with t = x / (2 sqrt(a)) in the regime's range.
UVResult uv_neg_mid(double a, double x, double tol = kDefaultTol);
UVResult uv_neg_near1(double a, double x, double tol = kDefaultTol);
UVResult uv_neg_right(double a, double x, double tol = kDefaultTol);
UVResult uv_neg_left(double a, double x, double tol = kDefaultTol);

// Relative residual of U V' - U' V = sqrt(2/pi).
double uv_wronskian_residual(const UVValues& v);

}  // namespace pcf
