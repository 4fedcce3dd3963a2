#include "pcf/steepest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// l - u + u^2/2 with u = e^l - 1: sum_{n>=3} (2^{n-1} - 2) l^n / n!
cplx third_order_rest(cplx ell, cplx u) {
    if (std::abs(ell) < 0.5) {
        cplx p = ell * ell * ell / 6.0;
        cplx sum = 0.0;
        double two = 4.0;  // 2^{n-1}
        for (int n = 3; n < 40; ++n) {
            cplx term = (two - 2.0) * p;
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
            p *= ell / double(n + 1);
            two *= 2.0;
        }
        return sum;
    }
    return ell - u + 0.5 * u * u;
}

std::array<cplx, 3> cubic_roots(cplx c3, cplx c2, cplx c0) {
    // Durand-Kerner on the monic polynomial u^3 + p u^2 + r
    cplx p = c2 / c3, r = c0 / c3;
    auto poly = [&](cplx u) { return (u + p) * u * u + r; };
    double rad = std::max({std::abs(p), std::cbrt(std::abs(r)), 1e-300}) * 2.0;
    std::array<cplx, 3> z{cplx(0.4, 0.9) * rad, cplx(-0.9, 0.3) * rad, cplx(0.2, -0.8) * rad};
    for (int it = 0; it < 500; ++it) {
        double move = 0.0;
        for (int i = 0; i < 3; ++i) {
            cplx den = 1.0;
            for (int j = 0; j < 3; ++j)
                if (j != i) den *= (z[i] - z[j]);
            if (den == 0.0) den = 1e-300;
            cplx dz = poly(z[i]) / den;
            z[i] -= dz;
            move = std::max(move, std::abs(dz) / (std::abs(z[i]) + 1e-300));
        }
        if (move < 1e-15) break;
    }
    return z;
}

cplx log1pc(cplx u) {
    if (std::abs(u) < 1e-4) return u * (1.0 - u * (0.5 - u * (1.0 / 3.0 - 0.25 * u)));
    return std::log(1.0 + u);
}

cplx unit(cplx z) {
    double m = std::abs(z);
    return m > 0.0 ? z / m : cplx(1.0, 0.0);
}

}  // namespace

cplx expm1c(cplx z) {
    double x = z.real(), y = z.imag();
    double sh = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * sh * sh, std::exp(x) * std::sin(y)};
}

SteepestLeg::SteepestLeg(cplx c, cplx k, cplx cmk, int tau, cplx w_s, cplx log_w_s, cplx hint, double s_end)
    : c_(c), k_(k), cmk_(cmk), tau_(tau), w_s_(w_s), log_w_s_(log_w_s), s_end_(s_end) {
    build(hint);
}

cplx SteepestLeg::phi(cplx ell) const {
    cplx u = expm1c(ell);
    return 0.5 * cmk_ * u * u + k_ * third_order_rest(ell, u);
}

cplx SteepestLeg::dphi(cplx ell) const {
    cplx u = expm1c(ell);
    return u * (cmk_ + c_ * u);
}

bool SteepestLeg::newton(double s, cplx& ell) const {
    const double target = tau_ * s * s;
    for (int it = 0; it < 60; ++it) {
        cplx d = dphi(ell);
        if (d == 0.0) return false;
        cplx step = (phi(ell) - target) / d;
        ell -= step;
        if (!std::isfinite(ell.real()) || !std::isfinite(ell.imag())) return false;
        double tol = 8.0 * kEps * std::abs(ell);
        if (std::abs(step) <= tol || (it >= 6 && std::abs(step) <= 1e3 * tol)) return true;
    }
    return false;
}

cplx SteepestLeg::start_guess(double s, cplx dir) const {
    if (cmk_ != 0.0) {
        // quadratic model when the cubic term is negligible
        cplx uq = s * std::sqrt(cplx(2.0 * tau_, 0.0) / cmk_);
        if (std::abs(uq) * std::abs(k_) < 1e-3 * std::abs(cmk_)) {
            if (std::real(std::conj(uq) * dir) < 0.0) uq = -uq;
            return log1pc(uq);
        }
    }
    auto roots = cubic_roots(k_ / 3.0, 0.5 * cmk_, cplx(-tau_ * s * s, 0.0));
    double mn = std::numeric_limits<double>::infinity();
    for (const auto& r : roots) mn = std::min(mn, std::abs(r));
    cplx best = roots[0];
    double score = -2.0;
    for (const auto& r : roots) {
        if (std::abs(r) > 3.0 * mn) continue;
        double sc = std::real(std::conj(unit(r)) * dir);
        if (sc > score) {
            score = sc;
            best = r;
        }
    }
    return log1pc(best);
}

SteepestLeg::Point SteepestLeg::finish(double s, cplx ell) const {
    Point p;
    p.s = s;
    p.ell = ell;
    p.dell = 2.0 * tau_ * s / dphi(ell);
    return p;
}

void SteepestLeg::build(cplx hint) {
    cplx dir_u = unit(hint / w_s_);
    double s0a = 1e-3 * std::sqrt(std::abs(cmk_) / 2.0);
    double s0b = std::sqrt(std::abs(k_) / 3.0) * 3.1622776601683795e-5;
    double s0 = std::max(s0a, s0b);
    cplx ell0 = start_guess(s0, dir_u);
    if (!newton(s0, ell0)) throw TraceError("steepest leg: start point did not converge", 0.0);
    u0_dir_ = unit(expm1c(ell0));
    table_.push_back(finish(s0, ell0));

    double h = s0;
    while (table_.back().s < s_end_) {
        const Point& last = table_.back();
        double step = std::min(h, s_end_ - last.s);
        double s_new = last.s + step;
        if (s_end_ - s_new < 1e-9 * s_end_) s_new = s_end_, step = s_end_ - last.s;
        cplx pred = last.ell + step * last.dell;
        if (table_.size() >= 2) {
            const Point& prev = table_[table_.size() - 2];
            pred += 0.5 * step * step * (last.dell - prev.dell) / (last.s - prev.s);
        }
        cplx ell = pred;
        bool ok = newton(s_new, ell);
        double moved = std::abs(ell - last.ell);
        double err = std::abs(ell - pred);
        if (!ok || moved > 0.3 || err > 0.02 * moved + 1e-14) {
            h = 0.5 * step;
            if (h < 1e-13 * std::max(1.0, s_new)) throw TraceError("steepest leg: continuation stalled", err);
            continue;
        }
        table_.push_back(finish(s_new, ell));
        if (table_.size() > 200000) throw TraceError("steepest leg: table limit reached", err);
        if (err <= 0.002 * moved) {
            h = 2.0 * step;
        } else if (err <= 0.01 * moved) {
            h = 1.25 * step;
        } else {
            h = step;
        }
    }
}

SteepestLeg::Point SteepestLeg::at(double s) const {
    if (s <= 1e-100) {
        Point p;
        p.s = 0.0;
        p.ell = 0.0;
        p.dell = cmk_ != 0.0 ? u0_dir_ * std::sqrt(std::abs(2.0 / cmk_)) : cplx(0.0);
        return p;
    }
    if (s < table_.front().s) {
        cplx ell = start_guess(s, u0_dir_);
        if (!newton(s, ell)) throw TraceError("steepest leg: no convergence near the saddle", s);
        return finish(s, ell);
    }
    auto it = std::upper_bound(table_.begin(), table_.end(), s,
                               [](double v, const Point& p) { return v < p.s; });
    if (it == table_.end()) {
        if (s > s_end_ * (1.0 + 1e-12)) throw DomainError("steepest leg: s beyond the traced range");
        return table_.back();
    }
    const Point& p1 = *it;
    const Point& p0 = *(it - 1);
    double hh = p1.s - p0.s;
    double x = (s - p0.s) / hh;
    double h00 = (1 + 2 * x) * (1 - x) * (1 - x), h10 = x * (1 - x) * (1 - x);
    double h01 = x * x * (3 - 2 * x), h11 = x * x * (x - 1);
    cplx ell = h00 * p0.ell + h10 * hh * p0.dell + h01 * p1.ell + h11 * hh * p1.dell;
    cplx guess = ell;
    if (newton(s, ell) && std::abs(ell - guess) <= 0.05 * (std::abs(p1.ell - p0.ell) + 1e-12)) {
        return finish(s, ell);
    }
    // fallback: march from the left table point in small steps
    ell = p0.ell;
    double sc = p0.s;
    cplx d = p0.dell;
    const int n = 16;
    for (int i = 1; i <= n; ++i) {
        double sn = p0.s + (s - p0.s) * i / n;
        ell += (sn - sc) * d;
        if (!newton(sn, ell)) throw TraceError("steepest leg: query did not converge", s);
        sc = sn;
        d = 2.0 * tau_ * sn / dphi(ell);
    }
    return finish(s, ell);
}

}  // namespace pcf
