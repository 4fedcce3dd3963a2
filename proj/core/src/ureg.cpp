#include "pcf/ureg.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "leg_quad.hpp"
#include "pcf/contours.hpp"
#include "pcf/errors.hpp"
#include "pcf/steepest.hpp"

namespace pcf {

namespace {

using detail::leg_integral;
using detail::leg_reach;
using detail::QuadTally;

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);

void require_a(double a) {
    if (!(a >= 0.5) || !std::isfinite(a)) throw DomainError("quadrature path needs finite a >= 0.5");
}

void require_x(double x) {
    if (!std::isfinite(x)) throw DomainError("x must be finite");
}

// ln(1+u) - u given 1+u separately, accurate near u = -1.
double ln1p_minus_at(double u, double one_plus_u) {
    if (one_plus_u < 0.5) return std::log(one_plus_u) - u;
    return ln1p_minus(u);
}

double t_of(double a, double x) { return x / (2.0 * std::sqrt(a)); }

// (pi/a) Gamma*(a+1/2), the value of the a < 0 integral Wronskians.
double neg_wronskian_target(double a) { return kPi / a * std::exp(log_gamma_star(a)); }

struct NegLogs {
    double c, cd, gamma_half;
};

NegLogs neg_logs(double a) {
    double base = 0.5 * std::log(2.0 / kPi) + log_gamma_aux(a);
    double la = std::log(a);
    return {base + 0.25 * la, base + 0.75 * la, ln_gamma_real(a + 0.5)};
}

UVValues swap_if(bool neg, UVValues& p, UVValues& m, bool want_plus) {
    if (neg) return want_plus ? m : p;
    return want_plus ? p : m;
}

// U(-a, x), V(-a, x) from the G/H set computed at |t|, evaluated at t = sign |t|.
UVValues assemble_mid(double a, double tabs, const GHSet& gh, int sign) {
    NegLogs L = neg_logs(a);
    double eta = eta_of_t(tabs);
    double G1 = gh.G1, G2 = gh.G2, H1 = gh.H1, H2 = gh.H2;
    double sl, cl;
    if (sign >= 0) {
        double lam = 2.0 * a * eta + kPi / 4.0;
        sl = std::sin(lam);
        cl = std::cos(lam);
    } else {
        // lambda(-t) = a pi - mu
        double mu = 2.0 * a * eta - kPi / 4.0;
        double sa = sin_pi(a), ca = cos_pi(a);
        sl = sa * std::cos(mu) - ca * std::sin(mu);
        cl = ca * std::cos(mu) + sa * std::sin(mu);
        G2 = -G2;
        H1 = -H1;
    }
    UVValues v;
    v.U = ScaledReal(sl * G1 + cl * G2, L.c);
    v.V = ScaledReal(cl * G1 - sl * G2, L.c - L.gamma_half);
    v.Up = ScaledReal(sl * H1 + cl * H2, L.cd);
    v.Vp = ScaledReal(cl * H1 - sl * H2, L.cd - L.gamma_half);
    return v;
}

UVValues assemble_right(double a, double xi, const GHSet& gh) {
    NegLogs L = neg_logs(a);
    double e4 = std::exp(-4.0 * a * xi);
    double two = 2.0 * a * xi;
    UVValues v;
    v.U = ScaledReal(gh.G1, L.c - two);
    v.Up = ScaledReal(gh.H1, L.cd - two);
    v.V = ScaledReal(e4 * gh.G2 + gh.G3, L.c - L.gamma_half + two);
    v.Vp = ScaledReal(e4 * gh.H2 + gh.H3, L.cd - L.gamma_half + two);
    return v;
}

UVValues assemble_left(double a, double xi, const GHSet& gh) {
    NegLogs L = neg_logs(a);
    double e4 = std::exp(-4.0 * a * xi);
    double two = 2.0 * a * xi;
    double ca = cos_pi(a), sa = sin_pi(a);
    UVValues v;
    v.U = ScaledReal(e4 * (ca * gh.G2 + sa * gh.G1) + ca * gh.G3, L.c + two);
    v.Up = ScaledReal(-(e4 * (ca * gh.H2 + sa * gh.H1) + ca * gh.H3), L.cd + two);
    v.V = ScaledReal(e4 * (ca * gh.G1 - sa * gh.G2) - sa * gh.G3, L.c - L.gamma_half + two);
    v.Vp = ScaledReal(-(e4 * (ca * gh.H1 - sa * gh.H2) - sa * gh.H3), L.cd - L.gamma_half + two);
    return v;
}

double mid_residual(double a, const GHSet& gh) {
    double target = neg_wronskian_target(a);
    return std::fabs(gh.H1 * gh.G2 - gh.G1 * gh.H2 - target) / target;
}

double right_residual(double a, double xi, const GHSet& gh) {
    double target = neg_wronskian_target(a);
    double e4 = std::exp(-4.0 * a * xi);
    double w = e4 * (gh.G1 * gh.H2 - gh.H1 * gh.G2) + (gh.G1 * gh.H3 - gh.H1 * gh.G3);
    return std::fabs(w - target) / target;
}

thread_local QuadTally* g_tally = nullptr;

QuadTally& tally_ref(QuadTally& local) { return g_tally ? *g_tally : local; }

struct TallyScope {
    QuadTally tally;
    QuadTally* saved;
    TallyScope() : saved(g_tally) { g_tally = &tally; }
    ~TallyScope() { g_tally = saved; }
};

}  // namespace

UPosKernel kernels_upos(double theta, double t) {
    RPoint p = r_upos(theta, t);
    double r = p.r;
    double w0 = t + std::sqrt(t * t + 1.0);
    double c = std::cos(theta);
    double re_phi = 0.5 * r * r * std::cos(2.0 * theta) - 2.0 * t * r * c - std::log(r);
    double re_phi0 = 0.5 * w0 * w0 - 2.0 * t * w0 - std::log(w0);
    double tc = theta_cot_theta(theta);
    double den = 4.0 * std::sqrt(r) * std::cos(0.5 * theta) * std::sqrt(t * t + tc);
    UPosKernel k;
    k.psi = re_phi - re_phi0;
    k.g = ((2.0 * c + 1.0) * r * r - 2.0 * t * r + 1.0) / den;
    k.h = (r * r * r - t * r * r * (2.0 * c - 1.0) + r * (2.0 * t * t + 1.0 + 2.0 * c) - t) / den;
    return k;
}

UNegMidKernel kernels_uneg_mid(double theta, double t) {
    RPoint p = r_uneg_mid(theta, t);
    double r = p.r;
    cplx e = std::exp(kI * theta);
    cplx w = r * e;
    double psi = 0.5 * r * r * std::cos(2.0 * theta) + 2.0 * t * r * std::sin(theta) - std::log(r) - 0.5 - t * t;
    cplx g = -std::exp(0.5 * kI * theta) / std::sqrt(r) * (p.drdtheta + kI * r);
    cplx h = (t + kI * w) * g;
    return {psi, g.real(), -g.imag(), h.real(), -h.imag()};
}

IntegralPair quad_I(double a, double x, double tol) {
    require_a(a);
    if (!(x >= 0.0)) throw DomainError("quad_I: x must be non-negative");
    QuadTally local;
    QuadTally& tally = tally_ref(local);
    long before = tally.evaluations;
    double t = t_of(a, x);
    double w0 = t + std::sqrt(t * t + 1.0);
    double s_end = leg_reach(a);
    SteepestLeg up(w0 * w0, -1.0, w0 * w0 + 1.0, -1, w0, std::log(w0), kI, s_end);
    auto f = [t](cplx w, cplx lw) {
        cplx sq = std::exp(0.5 * lw);
        return std::array<cplx, 2>{sq, sq * (w - t)};
    };
    auto r = leg_integral<2>(up, a, s_end, 0.0, f, tol, tally, "U_POS: I integral did not converge");
    return {2.0 * r[0].imag(), 2.0 * r[1].imag(), tally.evaluations - before};
}

IntegralPair quad_J(double a, double x, double tol) {
    require_a(a);
    if (!(x >= 0.0)) throw DomainError("quad_J: x must be non-negative");
    QuadTally local;
    QuadTally& tally = tally_ref(local);
    long before = tally.evaluations;
    double t = t_of(a, x);
    double st = std::sqrt(t * t + 1.0);
    double w0 = t + st;
    auto term = [&](double u, double one_plus_u) {
        double psi = 0.5 * w0 * w0 * u * u - ln1p_minus_at(u, one_plus_u);
        double e = std::exp(-a * psi) / std::sqrt(one_plus_u);
        return std::array<cplx, 2>{e, e * (st + w0 * u)};
    };
    auto opt = detail::quad_options(tol);
    double scale = 1.0 / std::sqrt(a * (w0 * w0 + 1.0));
    auto right = exp_sinh_multi<2>([&](double u, double) { return term(u, 1.0 + u); }, 0.0, scale, opt);
    tally.add(right, "U_POS: J integral did not converge");
    auto left = tanh_sinh_multi<2>([&](double u, double dl, double) { return term(u, dl); }, -1.0, 0.0, opt);
    tally.add(left, "U_POS: J integral did not converge");
    return {right.values[0].real() + left.values[0].real(), right.values[1].real() + left.values[1].real(),
            tally.evaluations - before};
}

GHSet gh_uneg_mid(double a, double t, double tol) {
    require_a(a);
    if (!(t >= 0.0 && t < 1.0)) throw DomainError("U_NEG_MID integrals need 0 <= t < 1");
    QuadTally local;
    QuadTally& tally = tally_ref(local);
    double s = std::sqrt((1.0 - t) * (1.0 + t));
    cplx wp(s, t);
    cplx lwp(0.0, std::atan2(t, s));
    double s_end = leg_reach(a);
    cplx c = -wp * wp;
    cplx cmk = -2.0 * s * wp;
    SteepestLeg to_inf(c, 1.0, cmk, -1, wp, lwp, wp, s_end);
    SteepestLeg to_zero(c, 1.0, cmk, -1, wp, lwp, -wp, s_end);
    auto f = [t](cplx w, cplx lw) {
        cplx sq = std::exp(0.5 * lw);
        return std::array<cplx, 2>{sq, sq * (t + kI * w)};
    };
    auto r1 = leg_integral<2>(to_inf, a, s_end, 0.0, f, tol, tally, "U_NEG_MID: G integral did not converge");
    auto r0 = leg_integral<2>(to_zero, a, s_end, 0.0, f, tol, tally, "U_NEG_MID: G integral did not converge");
    cplx G = r1[0] - r0[0], H = r1[1] - r0[1];
    GHSet gh;
    gh.G1 = G.real();
    gh.G2 = -G.imag();
    gh.H1 = H.real();
    gh.H2 = -H.imag();
    return gh;
}

GHSet gh_uneg_near1(double a, double t, double tol) {
    require_a(a);
    if (!(t > 0.0 && t < 1.0)) throw DomainError("U_NEG_NEAR1 integrals need 0 < t < 1");
    QuadTally local;
    QuadTally& tally = tally_ref(local);
    double s = std::sqrt((1.0 - t) * (1.0 + t));
    double tau = std::asin(t);
    auto opt = detail::quad_options(tol);
    // leg 1: p in (0, 1)
    auto leg1 = [&](double p, double, double dr) {
        double rest = p < 0.5 ? -ln1p_minus(-p) : -p - std::log(dr);
        double psr = 0.5 * p * p * (1.0 - 2.0 * t * t) + rest;
        double psi = p * p * t * s;
        cplx g = std::exp(-a * psr) * std::exp(kI * (0.5 * tau - a * psi)) / std::sqrt(dr);
        return std::array<cplx, 2>{g, (t * p + kI * (dr * s)) * g};
    };
    auto r1 = tanh_sinh_multi<2>(leg1, 0.0, 1.0, opt);
    tally.add(r1, "U_NEG_NEAR1: first leg did not converge");
    // leg 2: u in (0, inf)
    auto leg2 = [&](double u, double) {
        double z = u * (2.0 * s + u);
        double psr = -0.5 * ln1p_minus(z);
        double at = std::atan2(u * t, 1.0 + u * s);
        double psi = at - t * u;
        double damp = std::pow(1.0 + z, -0.25);
        cplx g = std::exp(-a * psr) * damp * std::exp(kI * (-0.5 * tau - a * psi + 0.5 * at));
        return std::array<cplx, 2>{g, kI * (u + s) * g};
    };
    auto r2 = exp_sinh_multi<2>(leg2, 0.0, 1.0 / std::sqrt(a), opt);
    tally.add(r2, "U_NEG_NEAR1: second leg did not converge");
    cplx G = r1.values[0] + r2.values[0], H = r1.values[1] + r2.values[1];
    GHSet gh;
    gh.G1 = G.real();
    gh.G2 = -G.imag();
    gh.H1 = H.real();
    gh.H2 = -H.imag();
    return gh;
}

GHSet gh_uneg_right(double a, double t, double tol) {
    require_a(a);
    if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("U_NEG_RIGHT integrals need t >= 1");
    QuadTally local;
    QuadTally& tally = tally_ref(local);
    double sq = std::sqrt((t - 1.0) * (t + 1.0));
    double rp = t + sq;
    double rm = 1.0 / rp;
    cplx wp(0.0, rp);
    cplx lwp(std::log(rp), kPi / 2.0);
    double s_end = leg_reach(a);
    SteepestLeg leg(rp * rp, 1.0, (rp - 1.0) * (rp + 1.0), -1, wp, lwp, 1.0, s_end);
    auto f = [t](cplx w, cplx lw) {
        cplx sw = std::exp(0.5 * lw);
        return std::array<cplx, 2>{sw, sw * (t + kI * w)};
    };
    auto r = leg_integral<2>(leg, a, s_end, 0.0, f, tol, tally, "U_NEG_RIGHT: G integral did not converge");
    const cplx rot = std::exp(kI * (kPi / 4.0));
    cplx G = rot * r[0], H = rot * r[1];
    GHSet gh;
    gh.G1 = G.real();
    gh.G2 = G.imag();
    gh.H1 = H.real();
    gh.H2 = H.imag();

    // G3, H3: real integrals over (0, r_-) and (r_-, r_+), peak at r_-
    auto opt = detail::quad_options(tol);
    auto term = [&](double v, double u) {
        double lt = 0.5 * rm * rm * u * u + ln1p_minus_at(u, v / rm);
        double e = std::exp(a * lt) / std::sqrt(v);
        return std::array<cplx, 2>{e, e * (t - v)};
    };
    auto left = tanh_sinh_multi<2>([&](double v, double, double dr) { return term(v, -dr / rm); }, 0.0, rm, opt);
    tally.add(left, "U_NEG_RIGHT: G3 integral did not converge");
    auto right =
        tanh_sinh_multi<2>([&](double v, double dl, double) { return term(v, dl / rm); }, rm, rp, opt);
    tally.add(right, "U_NEG_RIGHT: G3 integral did not converge");
    gh.G3 = left.values[0].real() + right.values[0].real();
    gh.H3 = left.values[1].real() + right.values[1].real();
    return gh;
}

double uv_wronskian_residual(const UVValues& v) {
    ScaledReal w = v.U * v.Vp - v.Up * v.V;
    return rel_diff(w, ScaledReal::from_double(kSqrt2OverPi));
}

UVResult u_pos_assemble(double a, double x, double tol) {
    require_a(a);
    require_x(x);
    TallyScope scope;
    double xa = std::fabs(x);
    double t = t_of(a, xa);
    double w0 = t + std::sqrt(t * t + 1.0);
    double xit = xi_tilde_of_t(t);
    IntegralPair I = quad_I(a, xa, tol);
    IntegralPair J = quad_J(a, xa, tol);
    double la = std::log(a);
    double lg = log_gamma_aux(a);
    double lgh = ln_gamma_real(a + 0.5);
    double lp = 0.25 * la - 2.0 * a * xit - 0.5 * std::log(2.0 * kPi) - lg;
    double lm = 0.25 * la + 0.5 * std::log(w0) + lg + 2.0 * a * xit - lgh;
    double sa = std::sqrt(a);
    ScaledReal u_p(I.value, lp), up_p(-sa * I.derivative, lp);
    ScaledReal u_m(J.value, lm), up_m(-sa * J.derivative, lm);
    ScaledReal gp = ScaledReal::from_log(1, lgh - std::log(kPi));
    double s = sin_pi(a);
    UVValues p{u_p, up_p, gp * (s * u_p + u_m), gp * (s * up_p - up_m)};
    UVValues m{u_m, up_m, gp * (s * u_m + u_p), gp * (s * up_m - up_p)};
    UVResult res;
    bool neg = x < 0.0;
    res.plus = swap_if(neg, p, m, true);
    res.minus = swap_if(neg, p, m, false);
    res.regime = Regime::UPos;
    double target = 2.0 * kPi / (a * std::sqrt(w0));
    res.wronskian_residual = std::fabs(I.value * J.derivative + I.derivative * J.value - target) / target;
    res.assembled_residual = std::max(uv_wronskian_residual(res.plus), uv_wronskian_residual(res.minus));
    res.evaluations = scope.tally.evaluations;
    res.err_estimate = scope.tally.err_estimate;
    return res;
}

namespace {

UVResult finish_mid(double a, double x, const GHSet& gh, Regime regime, const QuadTally& tally) {
    double tabs = t_of(a, std::fabs(x));
    int sign = x < 0.0 ? -1 : 1;
    UVResult res;
    res.plus = assemble_mid(a, tabs, gh, sign);
    res.minus = assemble_mid(a, tabs, gh, -sign);
    res.regime = regime;
    res.wronskian_residual = mid_residual(a, gh);
    res.assembled_residual = std::max(uv_wronskian_residual(res.plus), uv_wronskian_residual(res.minus));
    res.evaluations = tally.evaluations;
    res.err_estimate = tally.err_estimate;
    return res;
}

UVResult finish_right(double a, double x, const GHSet& gh, bool left, const QuadTally& tally) {
    double tabs = t_of(a, std::fabs(x));
    double xi = xi_of_t(tabs);
    UVValues r = assemble_right(a, xi, gh);
    UVValues l = assemble_left(a, xi, gh);
    UVResult res;
    res.plus = left ? l : r;
    res.minus = left ? r : l;
    res.regime = left ? Regime::UNegLeft : Regime::UNegRight;
    res.wronskian_residual = right_residual(a, xi, gh);
    res.assembled_residual = std::max(uv_wronskian_residual(res.plus), uv_wronskian_residual(res.minus));
    res.evaluations = tally.evaluations;
    res.err_estimate = tally.err_estimate;
    return res;
}

}  // namespace

UVResult uv_neg_mid(double a, double x, double tol) {
    require_a(a);
    require_x(x);
    double tabs = t_of(a, std::fabs(x));
    if (!(tabs < 1.0)) throw DomainError("U_NEG_MID needs |t| < 1");
    TallyScope scope;
    GHSet gh = gh_uneg_mid(a, tabs, tol);
    return finish_mid(a, x, gh, Regime::UNegMid, scope.tally);
}

UVResult uv_neg_near1(double a, double x, double tol) {
    require_a(a);
    require_x(x);
    double tabs = t_of(a, std::fabs(x));
    if (!(tabs > 0.0 && tabs < 1.0)) throw DomainError("U_NEG_NEAR1 needs 0 < |t| < 1");
    TallyScope scope;
    GHSet gh = gh_uneg_near1(a, tabs, tol);
    return finish_mid(a, x, gh, Regime::UNegNear1, scope.tally);
}

UVResult uv_neg_right(double a, double x, double tol) {
    require_a(a);
    require_x(x);
    double t = t_of(a, x);
    if (!(t >= 1.0)) throw DomainError("U_NEG_RIGHT needs t >= 1");
    TallyScope scope;
    GHSet gh = gh_uneg_right(a, t, tol);
    return finish_right(a, x, gh, false, scope.tally);
}

UVResult uv_neg_left(double a, double x, double tol) {
    require_a(a);
    require_x(x);
    double t = t_of(a, x);
    if (!(t <= -1.0)) throw DomainError("U_NEG_LEFT needs t <= -1");
    TallyScope scope;
    GHSet gh = gh_uneg_right(a, -t, tol);
    return finish_right(a, x, gh, true, scope.tally);
}

}  // namespace pcf
