#pragma once

#include <complex>
#include <vector>

namespace pcf {

using cplx = std::complex<double>;

// One steepest leg leaving the saddle w_s of an exponent a*Phi with
//   Phi(w_s e^l) - Phi(w_s) = C u^2/2 + K (l - u),  u = e^l - 1,
// parameterized by s >= 0 through Phi = tau s^2 (tau = -1 descent, +1 ascent).
class SteepestLeg {
public:
    struct Point {
        double s = 0.0;
        cplx ell;   // ln(w / w_s) on the branch continued from the saddle
        cplx dell;  // d ell / ds
    };

    // cmk = C - K supplied separately to avoid cancellation near coalescing saddles.
    // hint: w-plane direction the leg should leave in. s_end: largest s needed.
    SteepestLeg(cplx c, cplx k, cplx cmk, int tau, cplx w_s, cplx log_w_s, cplx hint, double s_end);

    Point at(double s) const;
    cplx w(const Point& p) const { return w_s_ * std::exp(p.ell); }
    cplx log_w(const Point& p) const { return log_w_s_ + p.ell; }
    double s_end() const { return s_end_; }
    int tau() const { return tau_; }
    std::size_t table_size() const { return table_.size(); }

    // Phi relative to the saddle, for residual checks.
    cplx phi(cplx ell) const;

private:
    cplx c_, k_, cmk_;
    int tau_;
    cplx w_s_, log_w_s_;
    double s_end_;
    std::vector<Point> table_;
    cplx u0_dir_;

    cplx dphi(cplx ell) const;
    bool newton(double s, cplx& ell) const;
    cplx start_guess(double s, cplx dir) const;
    Point finish(double s, cplx ell) const;
    void build(cplx hint);
};

// e^z - 1 without cancellation.
cplx expm1c(cplx z);

}  // namespace pcf
