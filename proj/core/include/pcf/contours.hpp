#pragma once

#include <complex>
#include <vector>

#include "pcf/regime.hpp"
#include "pcf/steepest.hpp"

namespace pcf {

using cplx = std::complex<double>;

// e^{-i pi/4}
inline const cplx kRot{0.70710678118654752440, -0.70710678118654752440};

struct SaddleData {
    Regime regime = Regime::UPos;
    double t = 0.0;
    cplx w_plus;   // w0 (U_POS) or w_+
    cplx w_minus;  // second saddle where the regime has one
    double xi_tilde = 0.0;
    double xi = 0.0;
    double eta = 0.0;
    double theta0 = 0.0;
    double r_minus = 0.0;
    double r_plus = 0.0;

    double lambda(double a) const;
};

struct RPoint {
    double r = 0.0;
    double drdtheta = 0.0;
    int sigma = 1;
};

struct ContourPoint {
    double param = 0.0;
    double u = 0.0;
    double v = 0.0;
    double r = 0.0;
    double drdtheta = 0.0;
    // |Im phi - level|, divided by 1 + |phi| on closed-form paths
    double on_path_residual = 0.0;
};

struct TracedPath {
    std::vector<ContourPoint> points;
    double worst_residual = 0.0;
    bool v_monotone = true;
};

// eta(t) for |t| <= 1, xi(t) for t >= 1, xi_tilde(t) for all t.
double eta_of_t(double t);
double xi_of_t(double t);
double xi_tilde_of_t(double t);

SaddleData geometry(Regime regime, double t);

RPoint r_upos(double theta, double t);
RPoint r_uneg_mid(double theta, double t);
RPoint r_uneg_right(double theta, double t);
double approx_path_v_of_u(double u, double t);

// Legs of the W_POS_MID contour  -i inf -> w_- -> w_+ -> +i inf  for e^{a(phi - phi(w_+))}.
// The arc is split where Re(phi - phi(w_+)) = -2 eta; legs at w_- carry the weight e^{-4 a eta}.
struct WpmLegs {
    double t = 0.0;
    double eta = 0.0;
    double s_mid = 0.0;
    cplx w_plus, w_minus;
    SteepestLeg up;      // w_+ -> +i inf
    SteepestLeg arc_p;   // w_+ -> arc midpoint (descent)
    SteepestLeg arc_m;   // w_- -> arc midpoint (ascent)
    SteepestLeg down;    // w_- -> -i inf
};
WpmLegs make_wpm_legs(double t, double s_far);

// Steepest-descent path of the W_POS_MID integrand through both saddles.
TracedPath trace_wpm_path(double t, int samples);

// Sampled contour for dumps: U_POS, U_NEG_MID, U_NEG_RIGHT (closed forms), W_NEG and W_POS_RIGHT
// (vertical line through w_+), W_POS_MID (traced).
TracedPath contour_samples(Regime regime, double t, int samples);

}  // namespace pcf
