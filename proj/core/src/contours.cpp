#include "pcf/contours.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "pcf/errors.hpp"
#include "pcf/scalar.hpp"

namespace pcf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
const cplx kI{0.0, 1.0};

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

// cos(theta) accurate near |theta| = pi/2.
double cos_accurate(double theta) {
    double d = kHalfPi - std::fabs(theta);
    return d < kPi / 4.0 ? std::sin(d) : std::cos(theta);
}

double tcot(double theta, double cos_theta) {
    if (std::fabs(theta) < 1.0) return theta_cot_theta(theta);
    return theta * cos_theta / std::sin(theta);
}

// Im of phi(w) = w^2/2 - 2 i t w - ln w on w = r e^{i theta} (principal theta).
double im_phi_uneg(double r, double theta, double t) {
    return 0.5 * r * r * std::sin(2.0 * theta) - 2.0 * t * r * std::cos(theta) - theta;
}

// 1 + |phi(w)| for phi = w^2/2 - 2 c t w - ln w at w = r e^{i theta}.
double phi_scale(double r, double theta, double t, cplx c) {
    cplx w = std::polar(r, theta);
    return 1.0 + std::abs(0.5 * w * w - 2.0 * c * t * w - cplx(std::log(r), theta));
}

// Im of w^2/2 - 2 t e^{-i pi/4} w - i ln w; independent of the log branch.
double im_phi_wpos(cplx w, double t) {
    cplx p = 0.5 * w * w - 2.0 * t * kRot * w;
    return p.imag() - std::log(std::abs(w));
}

// Im of w^2/2 - 2 t e^{-i pi/4} w + i ln w.
double im_phi_wneg(cplx w, double t) {
    cplx p = 0.5 * w * w - 2.0 * t * kRot * w;
    return p.imag() + std::log(std::abs(w));
}

}  // namespace

double eta_of_t(double t) {
    require(std::fabs(t) <= 1.0, "eta: |t| must not exceed 1");
    double theta = 2.0 * std::asin(std::sqrt(0.5 * (1.0 - t)));
    return 0.25 * x_minus_sin(2.0 * theta);
}

double xi_of_t(double t) {
    require(t >= 1.0, "xi: t must be at least 1");
    double beta = std::log1p((t - 1.0) + std::sqrt((t - 1.0) * (t + 1.0)));
    return 0.25 * sinh_minus_x(2.0 * beta);
}

double xi_tilde_of_t(double t) {
    require(std::isfinite(t), "xi_tilde: non-finite t");
    return 0.5 * (t * std::sqrt(t * t + 1.0) + std::asinh(t));
}

double SaddleData::lambda(double a) const { return 2.0 * a * eta + kPi / 4.0; }

SaddleData geometry(Regime regime, double t) {
    require(std::isfinite(t), "geometry: non-finite t");
    SaddleData g;
    g.regime = regime;
    g.t = t;
    switch (regime) {
        case Regime::UPos: {
            require(t >= 0.0, "geometry: U_POS needs t >= 0");
            double w0 = t + std::sqrt(t * t + 1.0);
            g.w_plus = w0;
            g.w_minus = -1.0 / w0;
            g.xi_tilde = xi_tilde_of_t(t);
            break;
        }
        case Regime::UNegMid:
        case Regime::UNegNear1: {
            require(std::fabs(t) <= 1.0, "geometry: U_NEG_MID needs |t| <= 1");
            double s = std::sqrt((1.0 - t) * (1.0 + t));
            g.w_plus = cplx(s, t);
            g.w_minus = cplx(-s, t);
            g.eta = eta_of_t(t);
            g.theta0 = kHalfPi - 2.0 * g.eta;
            break;
        }
        case Regime::UNegRight:
        case Regime::UNegLeft: {
            double at = regime == Regime::UNegLeft ? -t : t;
            require(at >= 1.0, "geometry: U_NEG_RIGHT needs t >= 1 (U_NEG_LEFT t <= -1)");
            double rp = at + std::sqrt((at - 1.0) * (at + 1.0));
            g.r_plus = rp;
            g.r_minus = 1.0 / rp;
            g.w_plus = cplx(0.0, rp);
            g.w_minus = cplx(0.0, g.r_minus);
            g.xi = xi_of_t(at);
            break;
        }
        case Regime::WNeg: {
            double rho = t >= 0.0 ? t + std::sqrt(t * t + 1.0) : 1.0 / (std::sqrt(t * t + 1.0) - t);
            g.w_plus = kRot * rho;
            g.w_minus = -kRot / rho;
            g.xi_tilde = xi_tilde_of_t(t);
            break;
        }
        case Regime::WPosRight: {
            require(t >= 1.0, "geometry: W_POS_RIGHT needs t >= 1");
            double rp = t + std::sqrt((t - 1.0) * (t + 1.0));
            g.w_plus = kRot * rp;
            g.w_minus = kRot / rp;
            g.r_plus = rp;
            g.r_minus = 1.0 / rp;
            g.xi = xi_of_t(t);
            break;
        }
        case Regime::WPosTurn: {
            require(t > 0.0, "geometry: W_POS_TURN needs t > 0");
            g.w_plus = kRot * t;
            if (t <= 1.0) g.eta = eta_of_t(t);
            else g.xi = xi_of_t(t);
            break;
        }
        case Regime::WPosMid: {
            require(std::fabs(t) <= 1.0, "geometry: W_POS_MID needs |t| <= 1");
            double th = std::acos(t);
            g.w_plus = std::exp(kI * (th - kPi / 4.0));
            g.w_minus = std::exp(kI * (-th - kPi / 4.0));
            g.eta = eta_of_t(t);
            g.theta0 = kHalfPi - 2.0 * g.eta;
            break;
        }
        case Regime::Series:
            throw DomainError("geometry: no saddle data for the series regime");
    }
    return g;
}

RPoint r_upos(double theta, double t) {
    require(std::fabs(theta) < kHalfPi, "r_upos: |theta| must be below pi/2");
    require(t >= 0.0, "r_upos: t must be non-negative");
    double c = cos_accurate(theta);
    double tc = tcot(theta, c);
    double sq = std::sqrt(t * t + tc);
    RPoint p;
    p.r = (t + sq) / c;
    p.drdtheta = theta_cot_theta_deriv(theta) / (2.0 * sq * c) + p.r * std::sin(theta) / c;
    return p;
}

RPoint r_uneg_right(double theta, double t) {
    require(theta > 0.0 && theta <= kHalfPi, "r_uneg_right: theta must lie in (0, pi/2]");
    require(t >= 1.0, "r_uneg_right: t must be at least 1");
    double d = kHalfPi - theta;
    double q = (t - 1.0) * (t + 1.0) + one_minus_theta_cot_theta(d);
    double sq = std::sqrt(q);
    double cd = std::cos(d);
    RPoint p;
    p.r = (t + sq) / cd;
    double slope;
    if (sq > 0.0) {
        slope = -theta_cot_theta_deriv(d) / (2.0 * sq);
    } else {
        slope = 1.0 / std::sqrt(3.0);
    }
    double drdd = slope / cd + p.r * std::tan(d);
    p.drdtheta = -drdd;
    return p;
}

RPoint r_uneg_mid(double theta, double t) {
    require(t > 0.0 && t < 1.0, "r_uneg_mid: t must lie in (0, 1)");
    double eta = eta_of_t(t);
    double theta0 = kHalfPi - 2.0 * eta;
    require(theta >= 0.0 && theta <= theta0, "r_uneg_mid: theta outside [0, theta0]");
    double tau = std::asin(t);
    RPoint p;
    p.sigma = theta <= tau ? 1 : -1;
    double c = std::cos(theta), s = std::sin(theta);
    double disc = t * t * c * c + s * c * (theta - theta0);
    double sq = std::sqrt(std::max(disc, 0.0));
    if (p.sigma > 0) {
        p.r = theta == 0.0 ? std::numeric_limits<double>::infinity() : (t * c + sq) / (s * c);
    } else {
        p.r = (theta0 - theta) / (t * c + sq);
    }
    if (std::fabs(theta - tau) < 1e-6) {
        cplx wp(std::sqrt((1.0 - t) * (1.0 + t)), t);
        cplx d = 1.0 / std::sqrt(1.0 + 1.0 / (wp * wp));
        cplx rot = d * std::conj(wp);
        p.drdtheta = rot.real() / rot.imag();
    } else if (theta == 0.0) {
        p.drdtheta = -std::numeric_limits<double>::infinity();
    } else {
        double fr = p.r * std::sin(2.0 * theta) - 2.0 * t * c;
        double ft = p.r * p.r * std::cos(2.0 * theta) + 2.0 * t * p.r * s - 1.0;
        p.drdtheta = -ft / fr;
    }
    return p;
}

double approx_path_v_of_u(double u, double t) {
    require(u > 0.0, "approx_path_v_of_u: u must be positive");
    require(std::fabs(t) < 1.0, "approx_path_v_of_u: |t| must be below 1");
    double up = std::sqrt((1.0 - t) * (1.0 + t));
    return u * t * (1.0 + up) / (u + up * up);
}

WpmLegs make_wpm_legs(double t, double s_far) {
    require(std::fabs(t) < 1.0, "W_POS_MID path: |t| must be below 1");
    const double th = std::acos(t);
    const double sn = std::sin(th);
    const cplx wp = std::exp(kI * (th - kPi / 4.0));
    const cplx wm = std::exp(kI * (-th - kPi / 4.0));
    const cplx lwp = kI * (th - kPi / 4.0);
    const cplx lwm = kI * (-th - kPi / 4.0);
    const cplx k = -kI;
    const cplx cmk_p = 2.0 * sn * std::exp(kI * th);
    const cplx cmk_m = -2.0 * sn * std::exp(-kI * th);
    const double eta = eta_of_t(t);
    const double s_mid = std::sqrt(2.0 * eta);

    SteepestLeg up(wp * wp, k, cmk_p, -1, wp, lwp, kI, s_far);
    SteepestLeg arc_p(wp * wp, k, cmk_p, -1, wp, lwp, wm - wp, std::sqrt(3.0 * eta));
    cplx near_m = arc_p.w(arc_p.at(std::sqrt(3.0 * eta)));
    SteepestLeg arc_m(wm * wm, k, cmk_m, +1, wm, lwm, near_m - wm, s_mid);
    SteepestLeg down(wm * wm, k, cmk_m, -1, wm, lwm, -kI, s_far);
    return WpmLegs{t, eta, s_mid, wp, wm, std::move(up), std::move(arc_p), std::move(arc_m), std::move(down)};
}

namespace {

ContourPoint leg_point(const SteepestLeg& leg, double s, double t, double level, bool wpos) {
    auto p = leg.at(s);
    cplx w = leg.w(p);
    cplx dw = w * p.dell;
    ContourPoint c;
    c.u = w.real();
    c.v = w.imag();
    c.param = c.v;
    c.r = std::abs(w);
    c.drdtheta = dw.imag() != 0.0 ? dw.real() / dw.imag() : 0.0;
    double im = wpos ? im_phi_wpos(w, t) : im_phi_wneg(w, t);
    c.on_path_residual = std::fabs(im - level);
    return c;
}

void finalize(TracedPath& path) {
    path.worst_residual = 0.0;
    path.v_monotone = true;
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        path.worst_residual = std::max(path.worst_residual, path.points[i].on_path_residual);
        if (i > 0 && path.points[i].v < path.points[i - 1].v) path.v_monotone = false;
    }
}

}  // namespace

TracedPath trace_wpm_path(double t, int samples) {
    require(samples >= 16, "trace_wpm_path: at least 16 samples");
    require(std::fabs(t) < 1.0, "trace_wpm_path: |t| must be below 1");
    // far end where e^{-s^2} reaches eps^2 for a = 1
    const double s_far = std::sqrt(-2.0 * std::log(std::numeric_limits<double>::epsilon()));
    WpmLegs legs = make_wpm_legs(t, s_far);
    const double level = 0.5 + t * t;
    int n_far = samples / 3;
    int n_arc = samples - 2 * n_far;
    int n_half = std::max(2, n_arc / 2);
    TracedPath path;
    for (int i = n_far; i >= 1; --i)
        path.points.push_back(leg_point(legs.down, s_far * i / n_far, t, level, true));
    for (int i = 0; i < n_half; ++i)
        path.points.push_back(leg_point(legs.arc_m, legs.s_mid * i / n_half, t, level, true));
    for (int i = n_arc - n_half; i >= 0; --i)
        path.points.push_back(leg_point(legs.arc_p, legs.s_mid * i / std::max(1, n_arc - n_half), t, level, true));
    for (int i = 1; i <= n_far; ++i)
        path.points.push_back(leg_point(legs.up, s_far * i / n_far, t, level, true));
    finalize(path);
    return path;
}

TracedPath contour_samples(Regime regime, double t, int samples) {
    require(samples >= 2, "contour: at least 2 samples");
    TracedPath path;
    switch (regime) {
        case Regime::UPos: {
            for (int i = 0; i < samples; ++i) {
                double th = -kHalfPi + kPi * (i + 0.5) / samples;
                RPoint p = r_upos(th, t);
                ContourPoint c;
                c.param = th;
                c.r = p.r;
                c.u = p.r * cos_accurate(th);
                c.v = p.r * std::sin(th);
                c.drdtheta = p.drdtheta;
                double im = 0.5 * p.r * p.r * std::sin(2.0 * th) - 2.0 * t * c.v - th;
                c.on_path_residual = std::fabs(im) / phi_scale(p.r, th, t, 1.0);
                path.points.push_back(c);
            }
            break;
        }
        case Regime::UNegMid: {
            double theta0 = kHalfPi - 2.0 * eta_of_t(t);
            for (int i = 0; i < samples; ++i) {
                double th = theta0 * (i + 0.5) / samples;
                RPoint p = r_uneg_mid(th, t);
                ContourPoint c;
                c.param = th;
                c.r = p.r;
                c.u = p.r * std::cos(th);
                c.v = p.r * std::sin(th);
                c.drdtheta = p.drdtheta;
                c.on_path_residual = std::fabs(im_phi_uneg(p.r, th, t) + theta0) / phi_scale(p.r, th, t, kI);
                path.points.push_back(c);
            }
            break;
        }
        case Regime::UNegRight: {
            for (int i = 0; i < samples; ++i) {
                double th = kHalfPi * (i + 0.5) / samples;
                RPoint p = r_uneg_right(th, t);
                ContourPoint c;
                c.param = th;
                c.r = p.r;
                c.u = p.r * std::cos(th);
                c.v = p.r * std::sin(th);
                c.drdtheta = p.drdtheta;
                c.on_path_residual = std::fabs(im_phi_uneg(p.r, th, t) + kHalfPi) / phi_scale(p.r, th, t, kI);
                path.points.push_back(c);
            }
            break;
        }
        case Regime::WNeg:
        case Regime::WPosRight: {
            require(t >= 0.0, "contour: vertical-line regimes need t >= 0");
            cplx wp = geometry(regime, t).w_plus;
            const double q_far = 6.0;
            for (int i = 0; i < samples; ++i) {
                double q = -q_far + 2.0 * q_far * i / (samples - 1);
                ContourPoint c;
                c.param = q;
                c.u = wp.real();
                c.v = wp.imag() + q;
                c.r = std::hypot(c.u, c.v);
                path.points.push_back(c);
            }
            break;
        }
        case Regime::WPosMid:
            return trace_wpm_path(t, samples);
        default:
            throw DomainError("contour: no contour dump for this regime");
    }
    finalize(path);
    return path;
}

}  // namespace pcf
