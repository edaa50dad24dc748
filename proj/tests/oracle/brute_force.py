#!/usr/bin/env python3
"""Independent high-precision oracle for the generating-relation catalog.

Sums every left-hand double series with a fixed square truncation in
mpmath (50 digits) and evaluates the closed forms with mpmath's own
special functions. The frozen constants in the C++ tests were produced
by this script; it shares no code with the library.

    python3 tests/oracle/brute_force.py
"""
import mpmath as mp

mp.mp.dps = 50
N = 100

rf = mp.rf
L = mp.laguerre
H = mp.hermite
fac = mp.factorial


def double_sum(term, n=N):
    s = mp.mpc(0)
    for m in range(n + 1):
        for k in range(n + 1 - m):
            s += term(m, k)
    return s


def catalog(x, y, p, pp):
    x, y, p, pp = map(mp.mpf, (x, y, p, pp))
    sy = mp.sqrt(y)
    iy = 1j * sy
    half = mp.mpf(1) / 2
    out = {}

    def e33(d, g):
        lhs = double_sum(lambda m, n: rf(d, m + n) * (-1) ** n * x ** (m + n)
                         / (rf(g, m + n) * rf(p, m) * rf(pp, n))
                         * L(m, p - 1, y) * L(n, pp - 1, -y))
        rhs = mp.hyper([d, (p + pp - 1) / 2, (p + pp) / 2], [g, p, pp, p + pp - 1], -4 * x * y)
        return lhs, rhs

    out["E3.3"] = e33(mp.mpf("1.2"), mp.mpf("1.9"))

    lhs = double_sum(lambda m, n: rf(pp, m + n) * rf(p + pp - 1, m + n) * (-1) ** n * x ** (m + n)
                     / (rf((p + pp - 1) / 2, m + n) * rf((p + pp) / 2, m + n) * rf(p, m) * rf(pp, n))
                     * L(m, p - 1, y) * L(n, pp - 1, -y))
    rhs = mp.gamma(p) * (2 * mp.sqrt(x * y)) ** (1 - p) * mp.besselj(p - 1, 4 * mp.sqrt(x * y))
    out["E3.8"] = (lhs, rhs)

    rhs311 = mp.gamma((p + pp) / 2) * mp.exp(2 * x * y) * (x * y) ** (1 - p / 2 - pp / 2) \
        * mp.besseli(p / 2 + pp / 2 - 1, 2 * x * y)
    for tag, den in (("printed", p + pp), ("halved", (p + pp) / 2)):
        lhs = double_sum(lambda m, n: rf(p, m + n) * rf(pp, m + n) * (-1) ** n * x ** (m + n)
                         / (rf(den, m + n) * rf(p, m) * rf(pp, n))
                         * L(m, p - 1, -y) * L(n, pp - 1, y))
        out["E3.11-" + tag] = (lhs, rhs311)

    lhs312 = double_sum(lambda m, n: rf(p, m + n) * rf(pp, m + n) * (-1) ** n * x ** (m + n)
                        / (rf(p, m) * rf(pp, n)) * L(m, p - 1, -y) * L(n, pp - 1, y))
    z = 4 * x * y
    out["E3.12"] = (lhs312, mp.hyp2f1((p + pp - 1) / 2, (p + pp) / 2, p + pp - 1, z))
    out["E3.12-algebraic"] = (lhs312, (1 - z) ** (-half) * (half + mp.sqrt(1 - z) / 2) ** (2 - p - pp))

    q = 2 - p
    lhs = double_sum(lambda m, n: rf(p, m + n) * rf(q, m + n) * (-1) ** n * x ** (m + n)
                     / (rf(p, m) * rf(q, n)) * L(m, p - 1, -y) * L(n, 1 - p, y))
    out["E3.13"] = (lhs, (1 - z) ** (-half))

    lhs = double_sum(lambda m, n: rf(p, m + n) * (-1) ** n * x ** (m + n)
                     / (rf(p, m) * rf(p, n)) * L(m, p - 1, y) * L(n, p - 1, y))
    out["E4.3"] = (lhs, mp.hyp0f1(p, -x * x * y * y))

    lhs = double_sum(lambda m, n: rf(p, m + n) * rf(2 * p - 1, m + n) * (-1) ** n * x ** (m + n)
                     / (rf(p, m) * rf(p, n)) * L(m, p - 1, y) * L(n, p - 1, y))
    out["E4.5"] = (lhs, (1 + 4 * x * x * y * y) ** (half - p))

    lhs = double_sum(lambda m, n: rf(half, m + n) ** 2 * (-1) ** (3 * m - 2 * n) * x ** (m + n)
                     / (fac(m + n) * rf(half, m) * rf(half, n) * fac(m) * fac(n))
                     * H(2 * m, iy) * H(2 * n, sy))
    out["E5.3-printed"] = (lhs, mp.exp(4 * x * y))
    out["E5.3-derived"] = (lhs, half + half * mp.exp(8 * x * y) * mp.besseli(0, 8 * x * y))

    lhs = double_sum(lambda m, n: rf(1.5, m + n) * rf(2, m + n) * (-1) ** m
                     * mp.mpf(2) ** (-2 - 2 * m - 2 * n) * x ** (m + n)
                     / (fac(m + n) * rf(1.5, m) * rf(1.5, n) * fac(m) * fac(n))
                     * H(2 * m + 1, iy) * H(2 * n + 1, sy))
    out["E5.4"] = (lhs, 1j * y * mp.exp(4 * x * y))

    lhs = double_sum(lambda m, n: rf(1.5, m + n) * (-1) ** m * mp.mpf(2) ** (-1 - 2 * m - 2 * n)
                     * x ** (m + n) / (rf(half, m) * rf(1.5, n) * fac(m) * fac(n))
                     * H(2 * m, iy) * H(2 * n + 1, sy))
    out["E5.5"] = (lhs, sy * mp.exp(4 * x * y))

    lhs = double_sum(lambda m, n: rf(pp, m + n) * rf(pp - half, m + n) * (-1) ** (m + n)
                     * x ** (m + n) * mp.mpf(2) ** (-2 * m)
                     / (rf((2 * pp - 1) / 4, m + n) * rf((2 * pp + 1) / 4, m + n)
                        * rf(half, m) * rf(pp, n) * fac(m))
                     * H(2 * m, sy) * L(n, pp - 1, -y))
    out["E5.6"] = (lhs, mp.cos(4 * mp.sqrt(x * y)))

    lhs = double_sum(lambda m, n: rf(half, m + n) * (-1) ** m * x ** (m + n)
                     * mp.mpf(2) ** (-2 * m - 2 * n)
                     / (rf(half, m) * rf(half, n) * fac(m) * fac(n))
                     * H(2 * m, sy) * H(2 * n, sy))
    out["E5.7"] = (lhs, mp.cos(2 * x * y))

    lhs = double_sum(lambda m, n: rf(1.5, m + n) * (-1) ** m * x ** (m + n + 1)
                     * mp.mpf(2) ** (-1 - 2 * m - 2 * n)
                     / (rf(1.5, m) * rf(1.5, n) * fac(m) * fac(n))
                     * H(2 * m + 1, sy) * H(2 * n + 1, sy))
    out["E5.8"] = (lhs, mp.sin(2 * x * y))
    return out


def rel(a, b):
    return abs(a - b) / (1 + max(abs(a), abs(b)))


if __name__ == "__main__":
    import sys
    pt = tuple(float(v) for v in sys.argv[1:5]) if len(sys.argv) >= 5 else (0.1, 0.5, 1.3, 0.8)
    res = catalog(*pt)
    print("point x,y,p,pp =", pt)
    for k, (lhs, rhs) in res.items():
        print(f"{k:18s} lhs={mp.nstr(lhs, 17):40s} rhs={mp.nstr(rhs, 17):40s} rel={mp.nstr(rel(lhs, rhs), 3)}")
