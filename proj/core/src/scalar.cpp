#include "pcf/scalar.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;
constexpr double kLnMax = 709.782712893384;

void normalize(double& sig, double& ls) {
    if (sig == 0.0) {
        ls = 0.0;
        return;
    }
    if (!std::isfinite(sig) || !std::isfinite(ls)) {
        throw DomainError("ScaledReal: non-finite component");
    }
    double n = std::floor(ls);
    double f = ls - n;
    if (f != 0.0) sig *= std::exp(f);
    double k = std::floor(std::log(std::fabs(sig)));
    if (k != 0.0) {
        if (std::fabs(k) > 600.0) {
            double h = std::floor(k / 2.0);
            sig *= std::exp(-h);
            sig *= std::exp(-(k - h));
        } else {
            sig *= std::exp(-k);
        }
    }
    while (std::fabs(sig) >= kE) {
        sig /= kE;
        k += 1.0;
    }
    while (std::fabs(sig) < 1.0) {
        sig *= kE;
        k -= 1.0;
    }
    ls = n + k;
}

}  // namespace

ScaledReal::ScaledReal(double significand, double log_scale) : sig_(significand), ls_(log_scale) {
    normalize(sig_, ls_);
}

ScaledReal ScaledReal::from_log(int sign, double log_abs) {
    if (sign == 0) return ScaledReal();
    if (std::isinf(log_abs) && log_abs < 0) return ScaledReal();
    return ScaledReal(sign > 0 ? 1.0 : -1.0, log_abs);
}

double ScaledReal::log_abs() const {
    if (sig_ == 0.0) return -std::numeric_limits<double>::infinity();
    return ls_ + std::log(std::fabs(sig_));
}

bool ScaledReal::overflows_double() const { return sig_ != 0.0 && log_abs() > kLnMax; }

double ScaledReal::to_double() const {
    if (sig_ == 0.0) return 0.0;
    if (overflows_double()) throw OverflowError("value exceeds the double range");
    if (ls_ < -800.0) return 0.0;
    if (ls_ < -700.0) return sig_ * std::exp(ls_ + 100.0) * std::exp(-100.0);
    return sig_ * std::exp(ls_);
}

ScaledReal ScaledReal::operator-() const {
    ScaledReal r = *this;
    r.sig_ = -r.sig_;
    return r;
}

ScaledReal operator*(const ScaledReal& x, const ScaledReal& y) {
    return ScaledReal(x.sig_ * y.sig_, x.ls_ + y.ls_);
}

ScaledReal operator/(const ScaledReal& x, const ScaledReal& y) {
    if (y.sig_ == 0.0) throw DomainError("ScaledReal: division by zero");
    return ScaledReal(x.sig_ / y.sig_, x.ls_ - y.ls_);
}

ScaledReal operator*(const ScaledReal& x, double y) { return ScaledReal(x.sig_ * y, x.ls_); }

ScaledReal operator+(const ScaledReal& x, const ScaledReal& y) {
    if (x.sig_ == 0.0) return y;
    if (y.sig_ == 0.0) return x;
    const ScaledReal& big = x.ls_ >= y.ls_ ? x : y;
    const ScaledReal& small = x.ls_ >= y.ls_ ? y : x;
    double d = small.ls_ - big.ls_;
    if (d < -800.0) return big;
    return ScaledReal(big.sig_ + small.sig_ * std::exp(d), big.ls_);
}

ScaledReal operator-(const ScaledReal& x, const ScaledReal& y) { return x + (-y); }

double rel_diff(const ScaledReal& x, const ScaledReal& y) {
    if (x.is_zero() && y.is_zero()) return 0.0;
    ScaledReal d = x - y;
    if (d.is_zero()) return 0.0;
    double m = std::max(x.log_abs(), y.log_abs());
    return std::exp(d.log_abs() - m);
}

double ln1p_minus(double u) {
    if (!(u > -1.0)) throw DomainError("ln1p_minus: u must exceed -1");
    if (u >= -0.7 && u <= 1.5) {
        // ln(1+u) = 2 atanh(s), s = u/(2+u); ln(1+u) - u = -s u + 2 s^3 sum s^(2k)/(2k+3)
        double s = u / (2.0 + u);
        double s2 = s * s;
        double term = 1.0;
        double sum = 0.0;
        for (int k = 0; k < 200; ++k) {
            double add = term / (2.0 * k + 3.0);
            sum += add;
            if (std::fabs(add) <= 1e-18 * std::fabs(sum)) break;
            term *= s2;
        }
        return -s * u + 2.0 * s * s2 * sum;
    }
    return std::log1p(u) - u;
}

cplx ln1p_minus(cplx u) {
    if (std::abs(u) <= 0.5) {
        cplx s = u / (2.0 + u);
        cplx s2 = s * s;
        cplx term = 1.0;
        cplx sum = 0.0;
        for (int k = 0; k < 100; ++k) {
            cplx add = term / (2.0 * k + 3.0);
            sum += add;
            if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
            term *= s2;
        }
        return -s * u + 2.0 * s * s2 * sum;
    }
    return std::log(1.0 + u) - u;
}

cplx ln1p_minus(cplx u, cplx log1p_u) {
    if (std::abs(u) <= 0.5) {
        cplx principal = ln1p_minus(u);
        double turns = std::round((log1p_u.imag() - std::log(1.0 + u).imag()) / (2.0 * kPi));
        return principal + cplx(0.0, 2.0 * kPi * turns);
    }
    return log1p_u - u;
}

double theta_cot_theta(double theta) {
    if (!(std::fabs(theta) < kPi)) throw DomainError("theta_cot_theta: |theta| must be below pi");
    if (theta == 0.0) return 1.0;
    return theta * std::cos(theta) / std::sin(theta);
}

namespace {
// theta cot theta = 1 - sum c_n theta^(2n)
constexpr double kTcotCoef[] = {
    0.33333333333333333333, 0.022222222222222222222, 0.0021164021164021164021,
    0.00021164021164021164021, 0.000021377799155576933355, 2.1644042808063972085e-6,
    2.19259478518737778e-7, 2.2214608789979679076e-8, 2.2507846516808992854e-9,
    2.2805151204592182866e-10, 2.3106432599002624097e-11, 2.3411706819824883959e-12,
    2.3721017400233654295e-13, 2.4034415333307706179e-14, 2.4351954029183368731e-15};
}  // namespace

double theta_cot_theta_deriv(double theta) {
    if (!(std::fabs(theta) < kPi)) throw DomainError("theta_cot_theta: |theta| must be below pi");
    if (std::fabs(theta) < 0.5) {
        double t2 = theta * theta;
        double p = 1.0;
        double sum = 0.0;
        for (int n = 1; n <= 15; ++n) {
            sum += 2.0 * n * kTcotCoef[n - 1] * p;
            p *= t2;
        }
        return -theta * sum;
    }
    double s = std::sin(theta);
    return std::cos(theta) / s - theta / (s * s);
}

double one_minus_theta_cot_theta(double theta) {
    if (!(std::fabs(theta) < kPi)) throw DomainError("theta_cot_theta: |theta| must be below pi");
    if (std::fabs(theta) < 0.5) {
        double t2 = theta * theta;
        double p = t2;
        double sum = 0.0;
        for (double c : kTcotCoef) {
            sum += c * p;
            p *= t2;
        }
        return sum;
    }
    return 1.0 - theta_cot_theta(theta);
}

double x_minus_sin(double y) {
    if (std::fabs(y) < 1.0) {
        double y2 = y * y;
        double term = y * y2 / 6.0;
        double sum = 0.0;
        for (int k = 1; k < 30; ++k) {
            sum += term;
            if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
            term *= -y2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        }
        return sum;
    }
    return y - std::sin(y);
}

double sinh_minus_x(double y) {
    if (std::fabs(y) < 1.0) {
        double y2 = y * y;
        double term = y * y2 / 6.0;
        double sum = 0.0;
        for (int k = 1; k < 30; ++k) {
            sum += term;
            if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
            term *= y2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        }
        return sum;
    }
    return std::sinh(y) - y;
}

namespace {
std::atomic<double> g_gamma_perturbation{0.0};
}  // namespace

void set_gamma_aux_perturbation(double rel) { g_gamma_perturbation.store(rel); }
double gamma_aux_perturbation() { return g_gamma_perturbation.load(); }

double log_gamma_aux(double a) {
    if (!(a > 0.0)) throw DomainError("gamma_aux: a must be positive");
    double v = 0.5 * a * (std::log(a) - 1.0);
    double p = g_gamma_perturbation.load(std::memory_order_relaxed);
    if (p != 0.0) v += std::log1p(p);
    return v;
}

ScaledReal gamma_aux(double a) { return ScaledReal::from_log(1, log_gamma_aux(a)); }

double log_gamma_star(double a) {
    if (!(a > 0.0)) throw DomainError("gamma_star: a must be positive");
    if (a >= 10.0) {
        // B_{2k}(1/2) / (2k (2k-1))
        constexpr double c[] = {-0.041666666666666666667, 0.0024305555555555555556,
                                -0.00076884920634920634921, 0.00059058779761904761905,
                                -0.00084010679713804713805, 0.0019165906250867188367,
                                -0.0064094739082532051282, 0.029549751780391518587};
        double inv = 1.0 / a;
        double inv2 = inv * inv;
        double p = inv;
        double sum = 0.0;
        for (double ck : c) {
            sum += ck * p;
            p *= inv2;
        }
        return sum;
    }
    return std::lgamma(a + 0.5) - 0.5 * std::log(2.0 * kPi) + a - a * std::log(a);
}

double gamma_star(double a) { return std::exp(log_gamma_star(a)); }

double log_k_of_a(double a) {
    if (a > 0.0) {
        // k = e^{-pi a} / (sqrt(1 + e^{-2 pi a}) + 1)
        double e2 = std::exp(-2.0 * kPi * a);
        return -kPi * a - std::log(std::sqrt(1.0 + e2) + 1.0);
    }
    double e1 = std::exp(kPi * a);
    return -std::log(std::sqrt(1.0 + e1 * e1) + e1);
}

double k_of_a(double a) { return std::exp(log_k_of_a(a)); }

cplx ln_gamma_complex(cplx z) {
    if (!(z.real() > 0.0)) throw DomainError("ln_gamma_complex: Re z must be positive");
    cplx shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    // B_{2k} / (2k (2k-1))
    constexpr double c[] = {1.0 / 12.0,      -1.0 / 360.0,       1.0 / 1260.0,  -1.0 / 1680.0,
                            1.0 / 1188.0,    -691.0 / 360360.0,  1.0 / 156.0,   -3617.0 / 122400.0,
                            43867.0 / 244188.0};
    cplx inv = 1.0 / z;
    cplx inv2 = inv * inv;
    cplx p = inv;
    cplx sum = 0.0;
    for (double ck : c) {
        sum += ck * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + sum - shift;
}

double phase_gamma_half(double a) {
    if (a == 0.0) return 0.0;
    double v = ln_gamma_complex(cplx(0.5, std::fabs(a))).imag();
    return a > 0 ? v : -v;
}

double rho_star_direct(double a) {
    if (a == 0.0) return 0.0;
    double b = std::fabs(a);
    double v = 0.5 * phase_gamma_half(b) + 0.5 * b - 0.5 * b * std::log(b);
    return a > 0 ? v : -v;
}

double rho_star_series(double a) {
    if (a == 0.0) return 0.0;
    double b = std::fabs(a);
    double inv2 = 1.0 / (b * b);
    double p = 1.0;
    double sum = 0.0;
    for (double dk : kRhoStarD) {
        sum += dk * p;
        p *= inv2;
    }
    double v = 0.25 * b * std::log1p(0.25 * inv2) - sum / (2.0 * b);
    return a > 0 ? v : -v;
}

double rho_star(double a) {
    return std::fabs(a) >= kRhoStarAsyA ? rho_star_series(a) : rho_star_direct(a);
}

double ln_gamma_real(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma_real: x must be positive");
    return std::lgamma(x);
}

double sin_pi(double a) {
    double r = std::remainder(a, 2.0);  // exact, in [-1, 1]
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

double cos_pi(double a) { return sin_pi(std::remainder(a, 2.0) + 0.5); }

}  // namespace pcf
