#include "pcf/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pcf/errors.hpp"
#include "pcf/scalar.hpp"

namespace pcf::series {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kStop = kEps * 1e-2;

struct Kummer {
    double m = 1.0;   // M(alpha, b, zeta)
    double dm = 0.0;  // dM/dzeta
    int terms = 1;
    double loss = 0.0;
};

double loss_digits(double peak, double value) {
    if (peak == 0.0) return 0.0;
    if (value == 0.0) return 16.0;
    return std::max(0.0, std::log10(peak / std::fabs(value)));
}

Kummer kummer(double alpha, double b, double zeta) {
    Kummer r;
    double t = 1.0;
    double d = alpha / b;
    double sum = 1.0, dsum = d;
    double peak = 1.0, dpeak = std::fabs(d);
    int quiet = 0;
    int k = 0;
    for (; k < 5000; ++k) {
        // advance T_k -> T_{k+1}, D_{k+1} -> D_{k+2}
        t *= (alpha + k) / (b + k) * zeta / (k + 1);
        d *= (alpha + k + 1) / (b + k + 1) * zeta / (k + 1);
        sum += t;
        dsum += d;
        peak = std::max(peak, std::fabs(sum));
        dpeak = std::max(dpeak, std::fabs(dsum));
        bool past_peak = k + 1 > std::fabs(alpha) + std::fabs(zeta);
        bool small = std::fabs(t) <= kStop * std::fabs(sum) && std::fabs(d) <= kStop * std::fabs(dsum);
        if (past_peak && (small || (t == 0.0 && d == 0.0))) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    r.m = sum;
    r.dm = dsum;
    r.terms = k + 2;
    r.loss = std::max(loss_digits(peak, sum), loss_digits(dpeak, dsum));
    return r;
}

void check_finite(double a, double x) {
    if (!std::isfinite(a) || !std::isfinite(x)) throw DomainError("series: non-finite input");
}

}  // namespace

bool in_window(double a, double x) { return std::fabs(a) <= kASer && std::fabs(x) <= kXSer; }

double rgamma(double x) {
    if (!std::isfinite(x)) throw DomainError("rgamma: non-finite argument");
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x > 0.0) {
        if (x > 170.0) return std::exp(-std::lgamma(x));
        return 1.0 / std::tgamma(x);
    }
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    double g = 1.0 - x > 170.0 ? std::exp(std::lgamma(1.0 - x)) : std::tgamma(1.0 - x);
    return sin_pi(x) * g / kPi;
}

OriginValues origin_values_uv(double a) {
    if (!std::isfinite(a)) throw DomainError("origin_values_uv: non-finite a");
    const double sp = std::sqrt(kPi);
    OriginValues o{};
    o.U0 = sp * std::exp2(-(0.5 * a + 0.25)) * rgamma(0.75 + 0.5 * a);
    o.U0p = -sp * std::exp2(-(0.5 * a - 0.25)) * rgamma(0.25 + 0.5 * a);
    double r1 = rgamma(0.75 - 0.5 * a);
    double r2 = rgamma(0.25 - 0.5 * a);
    o.V0 = kPi * std::exp2(0.5 * a + 0.25) * r1 * r1 * rgamma(0.25 + 0.5 * a);
    o.V0p = kPi * std::exp2(0.5 * a + 0.75) * r2 * r2 * rgamma(0.75 + 0.5 * a);
    return o;
}

EvenOdd y12(double a, double z) {
    check_finite(a, z);
    EvenOdd r{};
    double zeta = 0.5 * z * z;
    bool first_branch = a < 0.0 && -a > zeta;
    if (!first_branch) {
        double e = std::exp(-0.25 * z * z);
        Kummer m1 = kummer(0.5 * a + 0.25, 0.5, zeta);
        Kummer m2 = kummer(0.5 * a + 0.75, 1.5, zeta);
        r.y1 = e * m1.m;
        r.y1p = e * z * (m1.dm - 0.5 * m1.m);
        r.y2 = e * z * m2.m;
        r.y2p = e * (m2.m * (1.0 - zeta) + z * z * m2.dm);
        r.terms_used = std::max(m1.terms, m2.terms);
        r.loss1 = m1.loss;
        r.loss2 = m2.loss;
    } else {
        double e = std::exp(0.25 * z * z);
        Kummer m1 = kummer(0.25 - 0.5 * a, 0.5, -zeta);
        Kummer m2 = kummer(0.75 - 0.5 * a, 1.5, -zeta);
        r.y1 = e * m1.m;
        r.y1p = e * z * (0.5 * m1.m - m1.dm);
        r.y2 = e * z * m2.m;
        r.y2p = e * (m2.m * (1.0 + zeta) - z * z * m2.dm);
        r.terms_used = std::max(m1.terms, m2.terms);
        r.loss1 = m1.loss;
        r.loss2 = m2.loss;
    }
    return r;
}

namespace {

SeriesResult combine(double c1, double c2, const EvenOdd& y) {
    SeriesResult s;
    double p1 = c1 * y.y1, p2 = c2 * y.y2;
    double d1 = c1 * y.y1p, d2 = c2 * y.y2p;
    s.value = p1 + p2;
    s.derivative = d1 + d2;
    s.terms_used = y.terms_used;
    double base = std::max(y.loss1, y.loss2);
    double lv = loss_digits(std::fabs(p1) + std::fabs(p2), s.value);
    double ld = loss_digits(std::fabs(d1) + std::fabs(d2), s.derivative);
    s.cancellation_loss = base + std::max(lv, ld);
    return s;
}

}  // namespace

UVSeries uv_series(double a, double x) {
    check_finite(a, x);
    if (!in_window(a, x)) throw WindowError("uv_series: (a, x) outside the series window");
    OriginValues o = origin_values_uv(a);
    EvenOdd y = y12(a, x);
    UVSeries r;
    r.U = combine(o.U0, o.U0p, y);
    r.V = combine(o.V0, o.V0p, y);
    return r;
}

void w_origin(double a, double& w0, double& w0p) {
    double l1 = ln_gamma_complex(cplx(0.25, 0.5 * a)).real();
    double l3 = ln_gamma_complex(cplx(0.75, 0.5 * a)).real();
    w0 = std::exp2(-0.75) * std::exp(0.5 * (l1 - l3));
    w0p = -std::exp2(-0.25) * std::exp(0.5 * (l3 - l1));
}

WSeries w_series(double a, double x) {
    check_finite(a, x);
    if (!in_window(a, x)) throw WindowError("w_series: (a, x) outside the series window");
    double w0, w0p;
    w_origin(a, w0, w0p);

    // A_n = alpha_n x^{2n}/(2n)!, B_n = beta_n x^{2n+1}/(2n+1)!
    const double x2 = x * x, x4 = x2 * x2;
    double A0 = 1.0, A1 = a * x2 / 2.0;
    double B0 = x, B1 = a * x * x2 / 6.0;
    double w1 = A0 + A1, w2 = B0 + B1;
    // derivative sums: w1' = sum 2n A_n / x, w2' = sum (2n+1) B_n / x
    double d1 = 2.0 * A1, d2 = B0 + 3.0 * B1;
    // majorant series from the recursion in absolute values; bounds the rounding growth
    double M0 = 1.0, M1 = std::fabs(A1), N0 = std::fabs(x), N1 = std::fabs(B1);
    double pk1 = M0 + M1, pk2 = N0 + N1;
    double pd1 = 2.0 * M1, pd2 = N0 + 3.0 * N1;
    int quiet = 0;
    int n = 0;
    const double lim = std::max(std::fabs(x), std::sqrt(std::fabs(a)) * std::fabs(x)) + 2.0;
    for (; n < 5000; ++n) {
        double A2 = a * x2 * A1 / ((2.0 * n + 3.0) * (2.0 * n + 4.0)) -
                    x4 * A0 / (4.0 * (2.0 * n + 3.0) * (2.0 * n + 4.0));
        double B2 = a * x2 * B1 / ((2.0 * n + 4.0) * (2.0 * n + 5.0)) -
                    x4 * B0 / (4.0 * (2.0 * n + 4.0) * (2.0 * n + 5.0));
        int m = n + 2;
        w1 += A2;
        w2 += B2;
        d1 += 2.0 * m * A2;
        d2 += (2.0 * m + 1.0) * B2;
        double M2 = (std::fabs(a) * x2 * M1 + 0.25 * x4 * M0) / ((2.0 * n + 3.0) * (2.0 * n + 4.0));
        double N2 = (std::fabs(a) * x2 * N1 + 0.25 * x4 * N0) / ((2.0 * n + 4.0) * (2.0 * n + 5.0));
        pk1 += M2;
        pk2 += N2;
        pd1 += 2.0 * m * M2;
        pd2 += (2.0 * m + 1.0) * N2;
        M0 = M1;
        M1 = M2;
        N0 = N1;
        N1 = N2;
        A0 = A1;
        A1 = A2;
        B0 = B1;
        B1 = B2;
        double big = std::fabs(w1) + std::fabs(w2);
        double step = std::fabs(A2) + std::fabs(B2) + (2.0 * m + 1.0) * (std::fabs(A2) + std::fabs(B2));
        if (2.0 * m > lim && step <= kStop * (big + std::fabs(d1) + std::fabs(d2))) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    if (x != 0.0) {
        d1 /= x;
        d2 /= x;
    } else {
        d1 = 0.0;
        d2 = 1.0;
    }

    double base = std::max({loss_digits(pk1, w1), loss_digits(pk2, w2)});
    if (x != 0.0) base = std::max({base, loss_digits(pd1, d1 * x), loss_digits(pd2, d2 * x)});

    auto make = [&](double s) {
        // s = +1: at x, s = -1: at -x (w1 even, w2 odd)
        SeriesResult r;
        double p1 = w0 * w1, p2 = s * w0p * w2;
        double q1 = s * w0 * d1, q2 = w0p * d2;
        r.value = p1 + p2;
        r.derivative = q1 + q2;
        r.terms_used = n + 3;
        r.cancellation_loss = base + std::max(loss_digits(std::fabs(p1) + std::fabs(p2), r.value),
                                              loss_digits(std::fabs(q1) + std::fabs(q2), r.derivative));
        return r;
    };
    WSeries out;
    out.plus = make(1.0);
    out.minus = make(-1.0);
    return out;
}

}  // namespace pcf::series
