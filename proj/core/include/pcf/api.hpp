#pragma once

#include <optional>
#include <string_view>

#include "pcf/regime.hpp"
#include "pcf/scalar.hpp"
#include "pcf/ureg.hpp"

namespace pcf {

enum class Func { U, V, W };

std::string_view func_name(Func f);

// Routing thresholds and evaluation options.
struct Config {
    // |a| below this uses the power series.
    double series_cut = 0.5;
    // |x| limit of the series path.
    double x_series = 6.0;
    // Half-width of the |t| = 1 band handled by the wedge form (W, a > 0).
    double collar = 0.005;
    // |t| where U/V for a < 0 switch from the mid to the near-turning-point form.
    double t_near1 = 0.9;
    // Compare quadrature results against the series inside its window.
    bool cross_check = false;
};

struct EvalRequest {
    Func func = Func::U;
    double a = 0.0;
    double x = 0.0;
    bool want_derivative = false;
    bool want_scaled = false;
    double tol = kDefaultTol;
};

struct Diagnostics {
    double wronskian_residual = 0.0;
    double accuracy_loss_digits = 0.0;
    long evaluations = 0;
    // Relative gap to the series when cross-checked.
    std::optional<double> oracle_gap;
    bool cross_check_failed = false;
};

struct EvalOutput {
    ScaledReal value;
    std::optional<ScaledReal> derivative;
    Regime regime = Regime::Series;
    Diagnostics diagnostics;
};

struct PairOutput {
    EvalOutput plus;   // at x
    EvalOutput minus;  // at -x
};

// Regime that evaluate() uses for (func, a, x).
Regime classify(Func func, double a, double x, const Config& cfg = {});

// Throws DomainError, OverflowError (unscaled value out of double range) or ConvergenceError.
EvalOutput evaluate(const EvalRequest& req, const Config& cfg = {});

// Both values from one evaluation; derivatives always filled.
PairOutput evaluate_pair(Func func, double a, double x, double tol = kDefaultTol, const Config& cfg = {});

// Relative residuals of the U/V identities at (a, x) from evaluate_pair:
// W[U, V] = sqrt(2/pi) (worst of +-x), W[U(x), U(-x)] = sqrt(2 pi) / Gamma(a + 1/2),
// pi V(x) / Gamma(a + 1/2) = sin(pi a) U(x) + U(-x),
// cos^2(pi a) U(x) = pi / Gamma(a + 1/2) (V(-x) - sin(pi a) V(x)).
struct ConnectionResiduals {
    double wronskian_uv = 0.0;
    double wronskian_uu = 0.0;
    double connection_v = 0.0;
    double connection_u = 0.0;
    Regime regime = Regime::Series;
};
ConnectionResiduals connection_residuals(double a, double x, double tol = kDefaultTol, const Config& cfg = {});

}  // namespace pcf
