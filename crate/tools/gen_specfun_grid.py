#!/usr/bin/env python3
"""Regenerate the cylinder-function reference grid (crates/core/data/specfun_grid.txt).

Every line has the form

    kind m Re(z) Im(z) Re(val) Im(val)

with 17-significant-digit scientific formatting. Kinds: j, y, h1, h2 for the
function values, dj, dy, dh1 for argument derivatives, and jz for zeros of
J_m (the zero index is stored in the Re(z) column, the zero itself in the
Re(val) column). Values are computed with mpmath at 40 decimal digits and
rounded to the nearest f64, so the file is an independent reference for the
fast double-precision implementation.

Usage: python3 tools/gen_specfun_grid.py > crates/core/data/specfun_grid.txt
"""

import sys

import mpmath as mp

mp.mp.dps = 40


def fmt(x):
    return f"{float(x):.16e}"


def emit(kind, m, zre, zim, val):
    v = mp.mpc(val)
    print(f"{kind} {m} {fmt(zre)} {fmt(zim)} {fmt(v.real)} {fmt(v.imag)}")


def dfun(fun, m, z):
    if m == 0:
        return -fun(1, z)
    return (fun(m - 1, z) - fun(m + 1, z)) / 2


J_REAL_M = [0, 1, 2, 5, 9, 13, 20, 31, 45, 60]
J_REAL_X = [0.25, 1.75, 4.5, 8.9, 9.7, 10.5, 12.5, 15.9, 27.3, 34.65, 64.2, 121.7, 199.25]

J_CPLX = [
    (0, 2.2, 0.9), (0, 8.8, -3.3), (0, 15.9, 9.9), (0, 44.4, -9.5), (0, 199.0, -9.9),
    (3, 2.2, -0.9), (3, 9.4, 1.1), (3, 15.6, -6.2), (3, 130.5, 7.7),
    (13, 8.8, -3.3), (13, 9.4, 1.1), (13, 10.5, -0.3), (13, 34.65, -1.5), (13, 130.5, 7.7),
    (34, 2.2, 0.9), (34, 15.6, -6.2), (34, 44.4, -9.5), (34, 199.0, -9.9),
    (60, 0.25, 0.0), (60, 8.8, -3.3), (60, 15.9, 9.9), (60, 44.4, -9.5), (60, 130.5, 7.7),
]

Y_REAL_M = [0, 1, 2, 5, 9, 13, 20, 31, 40]
Y_REAL_X = [0.12, 0.9, 2.404825557695773, 3.6, 9.1, 16.1, 33.3, 87.1, 198.5]

H1_REAL = [
    (0, 0.35), (0, 5.0), (0, 5.5), (0, 6.0), (0, 10.5), (0, 16.05), (0, 57.3), (0, 190.1),
    (2, 0.35), (2, 5.5), (2, 16.05), (2, 57.3),
    (5, 5.0), (5, 6.0), (5, 10.5),
    (7, 5.5), (7, 10.5), (7, 57.3), (7, 190.1),
    (13, 10.5), (13, 16.05), (13, 57.3), (13, 190.1),
    (25, 10.5), (25, 16.05), (25, 57.3),
    (41, 16.05), (41, 57.3), (41, 190.1),
    (60, 0.35), (60, 16.05), (60, 57.3), (60, 190.1),
]

H1_CPLX = [
    (0, 1.1, -0.6), (0, 6.3, -1.8), (0, 10.5, -0.3), (0, 17.0, -8.8), (0, 150.2, -4.4),
    (1, 1.1, -0.6), (1, 12.2, 2.1), (1, 60.7, 9.3),
    (5, 6.3, -1.8), (5, 10.5, -0.3), (5, 17.0, -8.8),
    (13, 10.5, -0.3), (13, 12.2, 2.1), (13, 60.7, 9.3), (13, 150.2, -4.4),
    (29, 17.0, -8.8), (29, 60.7, 9.3),
    (50, 60.7, 9.3), (50, 150.2, -4.4),
]

H2_PTS = [
    (0, 5.5, 0.0), (0, 10.5, -0.3), (0, 22.2, 6.6), (0, 99.9, -9.9),
    (4, 5.5, 0.0), (4, 10.5, -0.3), (4, 22.2, 6.6),
    (13, 10.5, -0.3), (13, 22.2, 6.6), (13, 99.9, -9.9),
]

DJ_PTS = [
    (0, 0.8, 0.0), (0, 9.3, 0.0), (0, 5.0, 0.0), (0, 77.0, 0.0), (0, 3.3, 2.2),
    (1, 0.8, 0.0), (1, 9.3, 0.0), (1, 77.0, 0.0),
    (13, 9.3, 0.0), (13, 10.5, 0.0), (13, 34.65, 0.0), (13, 3.3, 2.2), (13, 34.65, -1.5),
    (40, 9.3, 0.0), (40, 77.0, 0.0),
]

DY_PTS = [(0, 1.3), (0, 10.5), (3, 1.3), (3, 10.5), (13, 10.5), (13, 56.0), (3, 56.0)]

DH1_PTS = [
    (0, 5.0, 0.0), (1, 10.5, 0.0), (1, 14.9, -1.2),
    (13, 10.5, 0.0), (13, 14.9, -1.2), (13, 10.5, -0.3),
    (33, 10.5, 0.0), (33, 88.8, 4.4), (5, 10.5, 0.0),
]

JZ_PTS = [
    (0, 1), (0, 2), (0, 7), (0, 100), (0, 2500), (0, 10000),
    (1, 1), (5, 1), (6, 1), (13, 1), (13, 5), (13, 500),
    (21, 40), (34, 34), (40, 1), (40, 250),
    (60, 1), (60, 13), (60, 500), (60, 1882), (60, 2200),
]


def main():
    for m in J_REAL_M:
        for x in J_REAL_X:
            emit("j", m, x, 0.0, mp.besselj(m, mp.mpf(x)))
    for m, re, im in J_CPLX:
        emit("j", m, re, im, mp.besselj(m, mp.mpc(re, im)))
    for m in Y_REAL_M:
        for x in Y_REAL_X:
            emit("y", m, x, 0.0, mp.bessely(m, mp.mpf(x)))
    for m, x in H1_REAL:
        emit("h1", m, x, 0.0, mp.hankel1(m, mp.mpf(x)))
    for m, re, im in H1_CPLX:
        emit("h1", m, re, im, mp.hankel1(m, mp.mpc(re, im)))
    for m, re, im in H2_PTS:
        emit("h2", m, re, im, mp.hankel2(m, mp.mpc(re, im)))
    for m, re, im in DJ_PTS:
        emit("dj", m, re, im, dfun(mp.besselj, m, mp.mpc(re, im)))
    for m, x in DY_PTS:
        emit("dy", m, x, 0.0, dfun(mp.bessely, m, mp.mpf(x)))
    for m, re, im in DH1_PTS:
        emit("dh1", m, re, im, dfun(mp.hankel1, m, mp.mpc(re, im)))
    for m, lam in JZ_PTS:
        emit("jz", m, float(lam), 0.0, mp.besseljzero(m, lam))


if __name__ == "__main__":
    main()
