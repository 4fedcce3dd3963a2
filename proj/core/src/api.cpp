#include "pcf/api.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>

#include "pcf/errors.hpp"
#include "pcf/series.hpp"
#include "pcf/wreg.hpp"

namespace pcf {

namespace {

constexpr double kSqrt2OverPi = 0.79788456080286535588;

struct Side {
    ScaledReal f, fp;
    double loss = 0.0;
};

struct Raw {
    Side plus, minus;
    Regime regime = Regime::Series;
    double residual = 0.0;
    long evaluations = 0;
};

void require_finite(double a, double x) {
    if (!std::isfinite(a) || !std::isfinite(x)) throw DomainError("a and x must be finite");
}

void require_tol(double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-6)) throw DomainError("tol must lie in [1e-14, 1e-6]");
}

ScaledReal sd(double v) { return ScaledReal::from_double(v); }

Raw from_uv(const UVResult& r, Func func) {
    Raw out;
    bool u = func == Func::U;
    out.plus = {u ? r.plus.U : r.plus.V, u ? r.plus.Up : r.plus.Vp, 0.0};
    out.minus = {u ? r.minus.U : r.minus.V, u ? r.minus.Up : r.minus.Vp, 0.0};
    out.regime = r.regime;
    out.residual = r.wronskian_residual;
    out.evaluations = r.evaluations;
    return out;
}

Raw from_w(const WResult& r) {
    Raw out;
    out.plus = {r.W_plus, r.Wp_plus, r.loss_plus};
    out.minus = {r.W_minus, r.Wp_minus, r.loss_minus};
    out.regime = r.regime;
    out.residual = r.wronskian_residual;
    out.evaluations = r.evaluations;
    return out;
}

Raw series_path(Func func, double a, double x) {
    Raw out;
    out.regime = Regime::Series;
    if (func == Func::W) {
        series::WSeries w = series::w_series(a, x);
        out.plus = {sd(w.plus.value), sd(w.plus.derivative), w.plus.cancellation_loss};
        out.minus = {sd(w.minus.value), sd(w.minus.derivative), w.minus.cancellation_loss};
        double wr = -w.plus.value * w.minus.derivative - w.plus.derivative * w.minus.value;
        out.residual = std::fabs(wr - 1.0);
        return out;
    }
    series::UVSeries p = series::uv_series(a, x);
    series::UVSeries m = series::uv_series(a, -x);
    const series::SeriesResult& fp = func == Func::U ? p.U : p.V;
    const series::SeriesResult& fm = func == Func::U ? m.U : m.V;
    out.plus = {sd(fp.value), sd(fp.derivative), fp.cancellation_loss};
    out.minus = {sd(fm.value), sd(fm.derivative), fm.cancellation_loss};
    double wr = p.U.value * p.V.derivative - p.U.derivative * p.V.value;
    out.residual = std::fabs(wr - kSqrt2OverPi) / kSqrt2OverPi;
    return out;
}

Raw quad_path(Regime regime, Func func, double a, double x, double tol) {
    double m = std::fabs(a);
    switch (regime) {
        case Regime::UPos: return from_uv(u_pos_assemble(m, x, tol), func);
        case Regime::UNegMid: return from_uv(uv_neg_mid(m, x, tol), func);
        case Regime::UNegNear1: return from_uv(uv_neg_near1(m, x, tol), func);
        case Regime::UNegRight: return from_uv(uv_neg_right(m, x, tol), func);
        case Regime::UNegLeft: return from_uv(uv_neg_left(m, x, tol), func);
        case Regime::WNeg: return from_w(w_neg(m, x, tol));
        case Regime::WPosRight: return from_w(w_pos_right(m, x, tol));
        case Regime::WPosTurn: return from_w(w_pos_turn(m, x, tol));
        case Regime::WPosMid: return from_w(w_pos_mid(m, x, tol));
        case Regime::Series: break;
    }
    throw DomainError("no quadrature form for this regime");
}

// Largest relative gap between quadrature and series on the sides where both are trustworthy.
void cross_check(Raw& raw, Func func, double a, double x, double tol, Diagnostics& d) {
    if (!series::in_window(a, x)) return;
    Raw s = series_path(func, a, x);
    double gap = 0.0;
    bool failed = false;
    auto side = [&](const Side& q, const Side& o) {
        if (o.loss > series::kMaxLoss) return;
        double g = std::max(rel_diff(q.f, o.f), rel_diff(q.fp, o.fp));
        double allowed = 10.0 * std::max(tol * std::pow(10.0, q.loss), 2.2e-16 * std::pow(10.0, o.loss));
        gap = std::max(gap, g);
        if (g > allowed) failed = true;
    };
    side(raw.plus, s.plus);
    side(raw.minus, s.minus);
    d.oracle_gap = gap;
    d.cross_check_failed = failed;
}

EvalOutput make_output(const Side& s, const Raw& raw, const Diagnostics& d) {
    EvalOutput o;
    o.value = s.f;
    o.derivative = s.fp;
    o.regime = raw.regime;
    o.diagnostics = d;
    o.diagnostics.accuracy_loss_digits = s.loss;
    return o;
}

PairOutput run(Func func, double a, double x, double tol, const Config& cfg) {
    require_finite(a, x);
    require_tol(tol);
    Regime regime = classify(func, a, x, cfg);
    Raw raw = regime == Regime::Series ? series_path(func, a, x) : quad_path(regime, func, a, x, tol);
    Diagnostics d;
    d.wronskian_residual = raw.residual;
    d.evaluations = raw.evaluations;
    if (cfg.cross_check && regime != Regime::Series) cross_check(raw, func, a, x, tol, d);
    return {make_output(raw.plus, raw, d), make_output(raw.minus, raw, d)};
}

}  // namespace

std::string_view func_name(Func f) {
    switch (f) {
        case Func::U: return "U";
        case Func::V: return "V";
        case Func::W: return "W";
    }
    return "?";
}

Regime classify(Func func, double a, double x, const Config& cfg) {
    require_finite(a, x);
    if (std::fabs(a) < cfg.series_cut) {
        if (std::fabs(x) > cfg.x_series) throw DomainError("|a| below the quadrature range and |x| outside the series window");
        return Regime::Series;
    }
    double t = x / (2.0 * std::sqrt(std::fabs(a)));
    if (a > 0.0) {
        if (func != Func::W) return Regime::UPos;
        double ta = std::fabs(t);
        if (ta >= 1.0 + cfg.collar) return Regime::WPosRight;
        if (ta <= 1.0 - cfg.collar) return Regime::WPosMid;
        return Regime::WPosTurn;
    }
    if (func == Func::W) return Regime::WNeg;
    if (t <= -1.0) return Regime::UNegLeft;
    if (t >= 1.0) return Regime::UNegRight;
    return std::fabs(t) < cfg.t_near1 ? Regime::UNegMid : Regime::UNegNear1;
}

PairOutput evaluate_pair(Func func, double a, double x, double tol, const Config& cfg) {
    return run(func, a, x, tol, cfg);
}

ConnectionResiduals connection_residuals(double a, double x, double tol, const Config& cfg) {
    PairOutput u = evaluate_pair(Func::U, a, x, tol, cfg);
    PairOutput v = evaluate_pair(Func::V, a, x, tol, cfg);
    auto resid = [](const ScaledReal& lhs, const ScaledReal& rhs, std::initializer_list<ScaledReal> terms) {
        double den = std::max(lhs.log_abs(), rhs.log_abs());
        for (const auto& t : terms) den = std::max(den, t.log_abs());
        ScaledReal diff = lhs - rhs;
        if (diff.is_zero()) return 0.0;
        return std::exp(diff.log_abs() - den);
    };
    const ScaledReal c10 = sd(kSqrt2OverPi);
    ConnectionResiduals r;
    r.regime = u.plus.regime;
    for (int s = 0; s < 2; ++s) {
        const EvalOutput& uu = s == 0 ? u.plus : u.minus;
        const EvalOutput& vv = s == 0 ? v.plus : v.minus;
        ScaledReal t1 = uu.value * *vv.derivative, t2 = *uu.derivative * vv.value;
        r.wronskian_uv = std::max(r.wronskian_uv, resid(t1 - t2, c10, {t1, t2}));
    }
    // 1 / Gamma(a + 1/2), with the reflection formula below zero
    double h = a + 0.5;
    ScaledReal rg = h > 0.0 ? ScaledReal::from_log(1, -ln_gamma_real(h))
                            : ScaledReal(sin_pi(h) / std::numbers::pi, ln_gamma_real(1.0 - h));
    ScaledReal t1 = u.plus.value * *u.minus.derivative, t2 = *u.plus.derivative * u.minus.value;
    ScaledReal rhs11 = rg * std::sqrt(2.0 * std::numbers::pi);
    r.wronskian_uu = resid(-t1 - t2, rhs11, {t1, t2});
    ScaledReal lhs12 = rg * std::numbers::pi * v.plus.value;
    ScaledReal s1 = u.plus.value * sin_pi(a);
    r.connection_v = resid(lhs12, s1 + u.minus.value, {s1, u.minus.value});
    double c = cos_pi(a);
    ScaledReal sv = v.plus.value * sin_pi(a);
    ScaledReal rhs_u = rg * std::numbers::pi * (v.minus.value - sv);
    ScaledReal lhs_u = u.plus.value * (c * c);
    r.connection_u = resid(lhs_u, rhs_u, {rg * std::numbers::pi * v.minus.value, rg * std::numbers::pi * sv});
    return r;
}

EvalOutput evaluate(const EvalRequest& req, const Config& cfg) {
    EvalOutput out = run(req.func, req.a, req.x, req.tol, cfg).plus;
    if (!req.want_derivative) out.derivative.reset();
    if (!req.want_scaled) {
        if (out.value.overflows_double() || (out.derivative && out.derivative->overflows_double()))
            throw OverflowError("value exceeds the double range; request scaled output");
    }
    return out;
}

}  // namespace pcf
