#!/usr/bin/env python3
"""Regenerates oracle_values.hpp from high-precision mpmath evaluations.

Run from this directory: python3 generate.py > oracle_values.hpp
"""
import math

import mpmath as mp


def uv(a, x, dps):
    """U, U', V, V' from the Maclaurin form with Kummer functions."""
    with mp.workdps(dps):
        a = mp.mpf(a)
        x = mp.mpf(x)
        q = mp.mpf(1) / 4
        rg = mp.rgamma
        u0 = mp.sqrt(mp.pi) * 2 ** (-(a / 2 + q)) * rg(3 * q + a / 2)
        u0d = -mp.sqrt(mp.pi) * 2 ** (-(a / 2 - q)) * rg(q + a / 2)
        v0 = mp.pi * 2 ** (a / 2 + q) * rg(3 * q - a / 2) ** 2 * rg(q + a / 2)
        v0d = mp.pi * 2 ** (a / 2 + 3 * q) * rg(q - a / 2) ** 2 * rg(3 * q + a / 2)
        e = mp.exp(-x * x / 4)
        h = mp.mpf(1) / 2
        a1 = a / 2 + q
        a2 = a / 2 + 3 * q
        z = x * x / 2
        M = lambda *args: mp.hyp1f1(*args, zeroprec=mp.mp.prec * 4)
        y1 = e * M(a1, h, z)
        y2 = x * e * M(a2, 3 * h, z)
        d1 = e * (-x / 2 * M(a1, h, z) + x * (a1 / h) * M(a1 + 1, h + 1, z))
        d2 = e * (M(a2, 3 * h, z) - z * M(a2, 3 * h, z) + x * x * (a2 / (3 * h)) * M(a2 + 1, 3 * h + 1, z))
        return u0 * y1 + u0d * y2, u0 * d1 + u0d * d2, v0 * y1 + v0d * y2, v0 * d1 + v0d * d2


def w(a, x, dps):
    """W, W' from the power series with the alpha/beta recursions."""
    with mp.workdps(dps):
        a = mp.mpf(a)
        x = mp.mpf(x)
        w0 = 2 ** mp.mpf(-0.75) * mp.sqrt(abs(mp.gamma(0.25 + 0.5j * a) / mp.gamma(0.75 + 0.5j * a)))
        w0d = -2 ** mp.mpf(-0.25) * mp.sqrt(abs(mp.gamma(0.75 + 0.5j * a) / mp.gamma(0.25 + 0.5j * a)))
        al = [mp.mpf(1), a]
        be = [mp.mpf(1), a]
        w1 = w2 = d1 = d2 = mp.mpf(0)
        n = 0
        while True:
            if n + 2 >= len(al):
                al.append(a * al[n + 1] - mp.mpf(n + 1) * (2 * n + 1) / 2 * al[n])
                be.append(a * be[n + 1] - mp.mpf(n + 1) * (2 * n + 3) / 2 * be[n])
            t1 = al[n] * x ** (2 * n) / mp.factorial(2 * n)
            t2 = be[n] * x ** (2 * n + 1) / mp.factorial(2 * n + 1)
            w1 += t1
            w2 += t2
            if n > 0:
                d1 += al[n] * x ** (2 * n - 1) / mp.factorial(2 * n - 1)
            d2 += be[n] * x ** (2 * n) / mp.factorial(2 * n)
            if n > 20 and abs(t1) + abs(t2) < mp.mpf(10) ** (-dps + 5) * (abs(w1) + abs(w2) + 1):
                break
            n += 1
        return w0 * w1 + w0d * w2, w0 * d1 + w0d * d2


def dps_for(a, x):
    return 60 + int(x * x / 4 / 2.3) + int(2 * abs(a))


def xt(a, t):
    return 2.0 * t * math.sqrt(abs(a))


def rho_star(a):
    a = mp.mpf(a)
    return mp.im(mp.loggamma(mp.mpf(1) / 2 + 1j * a)) / 2 + a / 2 - a / 4 * mp.log(a * a)


def rho_star_series(a):
    a = mp.mpf(a)
    d = [mp.mpf(1) / 12, mp.mpf(-13) / 720, mp.mpf(37) / 20160, mp.mpf(-29) / 26880, mp.mpf(-1129) / 1520640]
    s = sum(dk * a ** (-2 * k) for k, dk in enumerate(d))
    return a / 4 * mp.log(1 + 1 / (4 * a * a)) - s / (2 * a)


def fmt(v):
    return repr(float(v))


UV_POINTS = [
    # U_POS
    (0.5, 0.3), (1.0, 1.0), (2.0, 1.0), (3.0, -2.0), (4.0, 0.0), (5.0, 3.0), (10.0, xt(10, 1.0)),
    # U_NEG_MID
    (-4.0, xt(4, 0.25)), (-25.0, 0.0), (-2.0, 0.4), (-10.0, -3.0), (-5.0, -1.2), (-0.7, 0.3),
    # U_NEG_NEAR1
    (-5.0, xt(5, 0.95)), (-10.0, xt(10, -0.93)), (-10.0, xt(10, 0.999)),
    # U_NEG_RIGHT
    (-3.0, xt(3, 1.1)), (-10.0, xt(10, 1.001)), (-2.3, xt(2.3, 1.4)), (-10.0, xt(10, 1.0)),
    # U_NEG_LEFT
    (-3.0, xt(3, -1.05)), (-2.3, xt(2.3, -1.4)),
    # series
    (-2.5, 1.0), (0.0, 0.0), (0.3, 2.0), (-0.3, 0.5), (1.3, 0.7), (0.1, 0.5),
]

W_POINTS = [
    # W_NEG
    (-2.0, 1.0), (-4.0, 2.0), (-1.0, 0.0), (-2.0, 0.99), (-10.0, xt(10, 0.5)), (-0.7, 0.9), (-5.0, -3.0),
    # W_POS_RIGHT
    (1.0, 2.4), (2.0, xt(2, 1.5)), (10.0, xt(10, 1.01)), (3.0, xt(3, -1.1)), (9.0, 10.0),
    # W_POS_MID
    (2.0, xt(2, 0.3)), (2.0, 0.0), (5.0, xt(5, 0.7)), (10.0, xt(10, 0.99)), (1.0, 1.0), (3.0, xt(3, -0.5)),
    # W_POS_TURN band
    (2.0, xt(2, 0.999)), (2.0, xt(2, 1.0)), (2.0, xt(2, 1.001)), (10.0, xt(10, 0.997)), (10.0, xt(10, 1.003)),
    # series
    (0.7, 0.9), (1.0, 0.0), (0.2, 1.5), (-0.3, 2.0),
]


def main():
    out = []
    p = out.append
    p("// Generated by generate.py (mpmath); do not edit.")
    p("#pragma once")
    p("")
    p("namespace pcf::oracle {")
    p("")
    p("struct UVPoint {")
    p("    double a, x, U, Up, V, Vp;")
    p("};")
    p("struct WPoint {")
    p("    double a, x, W, Wp;")
    p("};")
    p("struct ScalarPoint {")
    p("    double arg, value;")
    p("};")
    p("")
    p("// U(a, x), U'(a, x), V(a, x), V'(a, x) at x and -x.")
    p("inline constexpr UVPoint kUV[] = {")
    for a, x in UV_POINTS:
        for s in ([1.0, -1.0] if x != 0.0 else [1.0]):
            xx = s * x
            vals = uv(a, xx, dps_for(a, xx))
            p("    {%s, %s, %s}," % (fmt(a), fmt(xx), ", ".join(fmt(v) for v in vals)))
    p("};")
    p("")
    p("// W(a, x), W'(a, x) at x and -x.")
    p("inline constexpr WPoint kW[] = {")
    for a, x in W_POINTS:
        for s in ([1.0, -1.0] if x != 0.0 else [1.0]):
            xx = s * x
            vals = w(a, xx, dps_for(a, xx))
            p("    {%s, %s, %s}," % (fmt(a), fmt(xx), ", ".join(fmt(v) for v in vals)))
    p("};")
    p("")

    def table(name, comment, args, f):
        p("// " + comment)
        p("inline constexpr ScalarPoint %s[] = {" % name)
        for a in args:
            with mp.workdps(50):
                p("    {%s, %s}," % (fmt(a), fmt(f(mp.mpf(a)))))
        p("};")
        p("")

    table("kLn1pMinus", "ln(1+u) - u", [1.0, 1e-8, -0.9, 0.5, 3.0, 1e3, 1e-3, -1e-5, -0.5],
          lambda u: mp.log1p(u) - u)
    table("kGammaStar", "Gamma*(a+1/2) = Gamma(a+1/2) / (sqrt(2 pi) gamma(a)^2)", [0.5, 1.0, 10.0, 100.0, 1e6],
          lambda a: mp.gamma(a + mp.mpf(1) / 2) / (mp.sqrt(2 * mp.pi) * mp.exp(-a) * a ** a))
    table("kLnGamma", "ln Gamma(x)", [0.5, 1.0, 10.5, 3.7, 200.25], lambda x: mp.loggamma(x))
    table("kK", "k(a) = sqrt(1 + e^{2 pi a}) - e^{pi a}", [-3.0, 0.0, 1.0, 5.0, 20.0, -30.0],
          lambda a: 1 / (mp.sqrt(1 + mp.exp(2 * mp.pi * a)) + mp.exp(mp.pi * a)))
    table("kPhaseGammaHalf", "ph Gamma(1/2 + i a), continuous from a = 0", [0.5, 3.0, 20.0, 100.0, -3.0],
          lambda a: mp.im(mp.loggamma(mp.mpf(1) / 2 + 1j * a)))
    table("kRhoStar", "rho*(a)", [0.5, 3.0, 7.9, 8.0, 10.0, 16.0, 100.0, -3.0], rho_star)
    table("kRhoStarSeries", "five-term large-a series of rho*(a)", [8.0, 16.0, 100.0], rho_star_series)

    p("}  // namespace pcf::oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
