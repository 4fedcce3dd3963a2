#pragma once

#include <complex>

namespace pcf {

using cplx = std::complex<double>;

// Value represented as significand * exp(log_scale), |significand| in [1, e) or exactly 0.
class ScaledReal {
public:
    ScaledReal() = default;
    ScaledReal(double significand, double log_scale);

    static ScaledReal from_double(double x) { return ScaledReal(x, 0.0); }
    static ScaledReal from_log(int sign, double log_abs);

    double significand() const { return sig_; }
    double log_scale() const { return ls_; }
    bool is_zero() const { return sig_ == 0.0; }
    int sign() const { return sig_ > 0 ? 1 : (sig_ < 0 ? -1 : 0); }
    // ln|value|; -inf for zero.
    double log_abs() const;
    // Native value; throws OverflowError when the exponent exceeds the double range.
    double to_double() const;
    bool overflows_double() const;

    ScaledReal operator-() const;
    friend ScaledReal operator*(const ScaledReal& x, const ScaledReal& y);
    friend ScaledReal operator/(const ScaledReal& x, const ScaledReal& y);
    friend ScaledReal operator*(const ScaledReal& x, double y);
    friend ScaledReal operator*(double y, const ScaledReal& x) { return x * y; }
    friend ScaledReal operator+(const ScaledReal& x, const ScaledReal& y);
    friend ScaledReal operator-(const ScaledReal& x, const ScaledReal& y);

private:
    double sig_ = 0.0;
    double ls_ = 0.0;
};

// |x - y| / max(|x|, |y|), evaluated without leaving scaled arithmetic.
double rel_diff(const ScaledReal& x, const ScaledReal& y);

// ln(1+u) - u.
double ln1p_minus(double u);
// Principal-branch complex ln(1+u) - u.
cplx ln1p_minus(cplx u);
// ln(1+u) - u where log1p_u is ln(1+u) on the branch selected by the caller.
cplx ln1p_minus(cplx u, cplx log1p_u);

double theta_cot_theta(double theta);
// 1 - theta*cot(theta) without cancellation near 0.
double one_minus_theta_cot_theta(double theta);
// d/dtheta of theta*cot(theta).
double theta_cot_theta_deriv(double theta);

// y - sin(y) and sinh(y) - y without cancellation.
double x_minus_sin(double y);
double sinh_minus_x(double y);

// gamma(a) = exp(-a/2) a^(a/2).
ScaledReal gamma_aux(double a);
double log_gamma_aux(double a);

// Test hook: multiplies gamma(a) by (1 + rel). Zero restores exact behaviour.
void set_gamma_aux_perturbation(double rel);
double gamma_aux_perturbation();

// Gamma*(a+1/2) from Gamma(a+1/2) = sqrt(2 pi) gamma(a)^2 Gamma*(a+1/2).
double gamma_star(double a);
double log_gamma_star(double a);

double k_of_a(double a);
double log_k_of_a(double a);

// Continuous phase of Gamma(1/2 + i a), zero at a = 0.
double phase_gamma_half(double a);

inline constexpr double kRhoStarAsyA = 12.0;
double rho_star(double a);
double rho_star_series(double a);
double rho_star_direct(double a);

inline constexpr double kRhoStarD[5] = {1.0 / 12.0, -13.0 / 720.0, 37.0 / 20160.0, -29.0 / 26880.0,
                                        -1129.0 / 1520640.0};

double ln_gamma_real(double x);
// ln Gamma(z) for Re z > 0, imaginary part continuous from the real axis.
cplx ln_gamma_complex(cplx z);

// sin(pi a), cos(pi a) with exact reduction of a modulo 2.
double sin_pi(double a);
double cos_pi(double a);

}  // namespace pcf
