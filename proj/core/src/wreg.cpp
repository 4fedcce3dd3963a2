#include "pcf/wreg.hpp"

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
constexpr double kLn10 = 2.302585092994046;
const cplx kI{0.0, 1.0};

void require_args(double a, double x) {
    if (!(a >= 0.5) || !std::isfinite(a)) throw DomainError("quadrature path needs finite a >= 0.5");
    if (!std::isfinite(x)) throw DomainError("x must be finite");
}

void finish(WResult& r, bool swap, const QuadTally& tally) {
    if (swap) {
        std::swap(r.W_plus, r.W_minus);
        std::swap(r.Wp_plus, r.Wp_minus);
        std::swap(r.loss_plus, r.loss_minus);
    }
    r.accuracy_loss_digits = std::max(r.loss_plus, r.loss_minus);
    r.wronskian_residual = w_wronskian_residual(r);
    r.evaluations = tally.evaluations;
    r.err_estimate = tally.err_estimate;
}

// Assembly shared by the two-saddle and wedge forms from Q = e^{2 a eta} K and Qd.
void assemble_k(WResult& r, double a, cplx q, cplx qd, double log_pre) {
    double rs = rho_star(a);
    double lk = 0.5 * log_k_of_a(a);
    double lda = 0.5 * std::log(a);
    cplx f = std::exp(kI * (rs + kPi / 8.0)) * q;
    cplx fd = std::exp(kI * (rs - kPi / 8.0)) * qd;
    r.W_plus = ScaledReal(f.real(), log_pre + lk);
    r.W_minus = ScaledReal(f.imag(), log_pre - lk);
    r.Wp_plus = ScaledReal(fd.real(), log_pre + lda + lk);
    r.Wp_minus = ScaledReal(-fd.imag(), log_pre + lda - lk);
    r.chi = rs;
}

// Integral over the real q line of f(q), with Re psi ~ c2 q^2 near q = 0.
template <std::size_t N, class F>
std::array<cplx, N> vertical_line(double a, double c2, F&& f, double tol, QuadTally& tally, const char* what) {
    double scale = std::min(1.0 / std::sqrt(a * c2), std::cbrt(3.0 / a));
    auto opt = detail::quad_options(tol);
    auto pos = exp_sinh_multi<N>([&](double q, double) { return f(q); }, 0.0, scale, opt);
    tally.add(pos, what);
    auto neg = exp_sinh_multi<N>([&](double q, double) { return f(-q); }, 0.0, scale, opt);
    tally.add(neg, what);
    std::array<cplx, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = pos.values[i] + neg.values[i];
    return out;
}

}  // namespace

double w_wronskian_residual(const WResult& r) {
    ScaledReal w = -(r.W_plus * r.Wp_minus) - r.Wp_plus * r.W_minus;
    return rel_diff(w, ScaledReal::from_double(1.0));
}

cplx w_neg_psi(double q, double t) {
    double rho = t + std::sqrt(t * t + 1.0);
    cplx wp = kRot * rho;
    cplx u = kI * q / wp;
    return -0.5 * wp * wp * u * u - kI * ln1p_minus(u);
}

WResult w_neg(double a, double x, double tol) {
    require_args(a, x);
    QuadTally tally;
    double t = std::fabs(x) / (2.0 * std::sqrt(a));
    double st = std::sqrt(t * t + 1.0);
    double rho = t + st;
    cplx wp = kRot * rho;
    double c2 = 0.5 * (1.0 + 1.0 / (rho * rho));
    auto ig = vertical_line<2>(a, c2, [&](double q) {
        cplx u = kI * q / wp;
        cplx psi = -0.5 * wp * wp * u * u - kI * ln1p_minus(u);
        cplx g = std::exp(-a * psi) / std::sqrt(1.0 + u);
        return std::array<cplx, 2>{g, g * (st - kRot * q)};
    }, tol, tally, "W_NEG: integral did not converge");
    double chi = rho_star(-a) + kPi / 4.0 + 2.0 * a * xi_tilde_of_t(t);
    cplx e = std::exp(kI * chi);
    double lp = 0.25 * std::log(a) - 0.5 * std::log(kPi * rho);
    double lk = 0.5 * log_k_of_a(-a);
    double lda = 0.5 * std::log(a);
    cplx fg = e * ig[0], fh = kI * e * ig[1];
    WResult r;
    r.regime = Regime::WNeg;
    r.chi = chi;
    r.W_plus = ScaledReal(fg.real(), lp + lk);
    r.W_minus = ScaledReal(fg.imag(), lp - lk);
    r.Wp_plus = ScaledReal(fh.real(), lp + lda + lk);
    r.Wp_minus = ScaledReal(-fh.imag(), lp + lda - lk);
    finish(r, x < 0.0, tally);
    return r;
}

WResult w_pos_right(double a, double x, double tol) {
    require_args(a, x);
    double t = std::fabs(x) / (2.0 * std::sqrt(a));
    if (!(t >= 1.0)) throw DomainError("W_POS_RIGHT needs |t| >= 1");
    QuadTally tally;
    double sq = std::sqrt((t - 1.0) * (t + 1.0));
    double rp = t + sq;
    cplx wp = kRot * rp;
    double c2 = sq / rp;
    const cplx esq = kRot * sq;
    auto ig = vertical_line<2>(a, c2, [&](double q) {
        cplx u = kI * q / wp;
        cplx psi = -0.5 * wp * wp * u * u + kI * ln1p_minus(u);
        cplx g = std::exp(-a * psi) / std::sqrt(1.0 + u);
        return std::array<cplx, 2>{g, g * (esq + kI * q)};
    }, tol, tally, "W_POS_RIGHT: integral did not converge");
    double ph = rho_star(a) + kPi / 4.0 + 2.0 * a * xi_of_t(t);
    cplx e = std::exp(kI * ph);
    cplx F = e * ig[0], G = e * kRot * ig[1];
    double lp = 0.25 * std::log(a) - 0.5 * std::log(kPi * rp);
    double lk = 0.5 * log_k_of_a(a);
    double lda = 0.5 * std::log(a);
    WResult r;
    r.regime = Regime::WPosRight;
    r.chi = ph;
    r.W_plus = ScaledReal(F.real(), lp + lk);
    r.W_minus = ScaledReal(F.imag(), lp - lk);
    r.Wp_plus = ScaledReal(-G.real(), lp + lda + lk);
    r.Wp_minus = ScaledReal(G.imag(), lp + lda - lk);
    finish(r, x < 0.0, tally);
    return r;
}

WResult w_pos_mid(double a, double x, double tol) {
    require_args(a, x);
    double t = x / (2.0 * std::sqrt(a));
    if (!(std::fabs(t) < 1.0)) throw DomainError("W_POS_MID needs |t| < 1");
    QuadTally tally;
    double s_far = leg_reach(a);
    WpmLegs legs = make_wpm_legs(t, s_far);
    const double eta = legs.eta;
    const cplx et = kRot * t;
    auto f = [&](cplx w, cplx lw) {
        cplx e = std::exp(0.5 * lw);
        return std::array<cplx, 2>{e, e * (et - w)};
    };
    const char* what = "W_POS_MID: integral did not converge";
    const double lower = -4.0 * a * eta;
    std::array<cplx, 2> sum{};
    auto add = [&](const std::array<cplx, 2>& v, double sign) {
        sum[0] += sign * v[0];
        sum[1] += sign * v[1];
    };
    add(leg_integral<2>(legs.up, a, s_far, 0.0, f, tol, tally, what), 1.0);
    add(leg_integral<2>(legs.arc_p, a, std::min(legs.s_mid, s_far), 0.0, f, tol, tally, what), -1.0);
    if (2.0 * a * eta < detail::kSigmaMax2) {
        add(leg_integral<2>(legs.arc_m, a, legs.s_mid, lower, f, tol, tally, what), 1.0);
    }
    if (4.0 * a * eta < detail::kSigmaMax2 + 40.0) {
        add(leg_integral<2>(legs.down, a, s_far, lower, f, tol, tally, what), -1.0);
    }
    cplx K = -kI * sum[0], Kd = -kI * sum[1];
    WResult r;
    r.regime = Regime::WPosMid;
    assemble_k(r, a, K, Kd, 0.25 * std::log(a) + 2.0 * a * eta - 0.5 * std::log(kPi));
    r.loss_minus = 4.0 * a * eta / kLn10;
    finish(r, false, tally);
    return r;
}

WResult w_pos_turn(double a, double x, double tol) {
    require_args(a, x);
    double t = std::fabs(x) / (2.0 * std::sqrt(a));
    if (!(t > 0.5 && t < 1.5)) throw DomainError("W_POS_TURN needs |t| near 1");
    QuadTally tally;
    const cplx wc = kRot * t;
    const double lin = (t - 1.0) * (t + 1.0);
    const cplx et = kRot * t;
    auto ray = [&](cplx dir) {
        return [&, dir](double r, double) {
            cplx w = wc + r * dir;
            cplx u = r * dir / wc;
            cplx phi = 0.5 * wc * wc * u * u - kI * ln1p_minus(u) + kI * lin * u;
            cplx g = std::exp(a * phi) / std::sqrt(w) * dir;
            return std::array<cplx, 2>{g, g * (et - w)};
        };
    };
    auto opt = detail::quad_options(tol);
    double scale = std::cbrt(3.0 / a);
    auto out = exp_sinh_multi<2>(ray(std::exp(kI * (kPi / 4.0))), 0.0, scale, opt);
    tally.add(out, "W_POS_TURN: integral did not converge");
    auto in = exp_sinh_multi<2>(ray(std::exp(kI * (-5.0 * kPi / 12.0))), 0.0, scale, opt);
    tally.add(in, "W_POS_TURN: integral did not converge");
    double d = t - 1.0;
    double phase0 = -kPi / 2.0 + a * (0.5 * d * d - ln1p_minus(d));
    cplx rot = std::exp(kI * phase0);
    cplx q = rot * (out.values[0] - in.values[0]);
    cplx qd = rot * (out.values[1] - in.values[1]);
    WResult r;
    r.regime = Regime::WPosTurn;
    assemble_k(r, a, q, qd, 0.25 * std::log(a) - 0.5 * std::log(kPi));
    if (t < 1.0) r.loss_minus = 4.0 * a * eta_of_t(t) / kLn10;
    finish(r, x < 0.0, tally);
    return r;
}

}  // namespace pcf
