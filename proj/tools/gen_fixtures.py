#!/usr/bin/env python3
"""Regenerate the pinned oracle fixtures with mpmath at 50 digits.

    python3 tools/gen_fixtures.py [--out fixtures]

The C++ library never calls this; the CSVs are committed.
"""
import argparse
import csv
import os
import random

import mpmath as mp
import numpy as np

mp.mp.dps = 50


def fmt(v):
    return mp.nstr(mp.mpf(v), 17, min_fixed=-mp.inf, max_fixed=mp.inf) if v != 0 else "0"


def f17(v):
    return "%.17g" % float(v)


# ---------------------------------------------------------------- 2F1 grid


def hyp_cases():
    rng = random.Random(20240611)
    cases = []

    # Jacobi-function parameters ((n-nu-i lam)/2, (n-nu+i lam)/2; n; -sinh^2 d)
    for _ in range(70):
        n = rng.choice([1, 2, 3])
        nu = n + rng.choice([0.3, 0.7, 1.5, 2.25, 3.6, 4.7])
        lam = rng.uniform(0.0, 10.0)
        x = -rng.choice([rng.uniform(0, 1), rng.uniform(1, 10), rng.uniform(10, 50)])
        a = mp.mpc(n - nu, -lam) / 2
        b = mp.mpc(n - nu, lam) / 2
        cases.append((a, b, mp.mpc(n), x))

    # generic complex parameters, x <= 0
    for _ in range(50):
        a = mp.mpc(rng.uniform(-3, 4), rng.uniform(-3, 3))
        b = mp.mpc(rng.uniform(-3, 4), rng.uniform(-3, 3))
        c = mp.mpc(rng.uniform(0.5, 5), rng.uniform(-2, 2))
        x = -rng.uniform(0, 50)
        cases.append((a, b, c, x))

    # Green-kernel parameters on (0, 0.9]
    for _ in range(40):
        n = rng.choice([1, 2])
        nu = n + rng.choice([0.5, 1.5, 2.5])
        y = rng.uniform(2.0, 8.0)
        mu = mp.mpc(0, y)
        a = (n - 1j * mu + nu) / 2
        b = (n - 1j * mu - nu) / 2
        c = 1 - 1j * mu
        x = rng.uniform(0.05, 0.9)
        cases.append((mp.mpc(a), mp.mpc(b), mp.mpc(c), x))

    # terminating numerators (Jacobi polynomials and atoms)
    for _ in range(40):
        n = rng.choice([1, 2, 3])
        nu = n + rng.choice([2.5, 4.3, 6.7])
        j = rng.randint(0, 5)
        x = -rng.uniform(0, 50) if rng.random() < 0.8 else rng.uniform(0, 0.9)
        cases.append((mp.mpc(-j), mp.mpc(j + n - nu), mp.mpc(n), x))
    assert len(cases) == 200
    return cases


def write_specfun(path):
    with open(path, "w", newline="\n") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "x", "f_re", "f_im"])
        for a, b, c, x in hyp_cases():
            # round the inputs first so the fixture is self-consistent at 17 digits
            a = mp.mpc(float(a.real), float(a.imag))
            b = mp.mpc(float(b.real), float(b.imag))
            c = mp.mpc(float(c.real), float(c.imag))
            x = mp.mpf(float(x))
            f = mp.hyp2f1(a, b, c, x)
            w.writerow([f17(a.real), f17(a.imag), f17(b.real), f17(b.imag), f17(c.real),
                        f17(c.imag), f17(x), fmt(f.real), fmt(f.imag)])


# ---------------------------------------------------------------- kernels

N, NU = 1, mp.mpf("2.5")


def hc_c(lam, n=N, nu=NU):
    il = 1j * lam
    return (mp.mpf(2) ** (n - nu - il) * mp.gamma(n) * mp.gamma(il)
            / (mp.gamma((il + n - nu) / 2) * mp.gamma((il + n + nu) / 2)))


def weight(lam, n=N, nu=NU):
    return 1 / abs(hc_c(lam, n, nu)) ** 2


def phi(lam, d, n=N, nu=NU):
    x = -mp.sinh(d) ** 2
    return mp.re(mp.hyp2f1((n - nu - 1j * lam) / 2, (n - nu + 1j * lam) / 2, n, x, maxterms=10**7))


def dist(z, w):
    q = abs(1 - z * mp.conj(w)) ** 2 / ((1 - abs(z) ** 2) * (1 - abs(w) ** 2))
    return mp.acosh(mp.sqrt(q))


def tau0(n=N, nu=NU):
    return 2 * (nu - n) * mp.gamma(nu) / (mp.pi ** n * mp.gamma(nu - n + 1))


def cont_coef(n=N, nu=NU):
    return mp.gamma(n) / (2 * mp.pi ** (n + 1) * mp.mpf(2) ** (2 * (nu - n)))


def kernel_rows():
    rows = []
    z, w = mp.mpc(0), mp.mpc("0.5")
    d = dist(z, w)
    s = mp.mpf(1)
    dens = cont_coef() / 2 * weight(mp.sqrt(s)) / mp.sqrt(s) * phi(mp.sqrt(s), d)
    rows.append(dict(case="density", s=s, z=z, w=w, value=dens, method="closed form, 50 digits"))

    z, w = mp.mpc(0), mp.mpc("0.3")
    d = dist(z, w)
    t = mp.mpf("0.5")
    gap2 = (NU - N) ** 2
    integral = mp.quad(lambda l: mp.exp(-t * l * l) * weight(l) * phi(l, d), [0, 2, 6, 12, 20])  # e^{-200} beyond
    heat = tau0() + mp.exp(-t * gap2) * cont_coef() * integral
    rows.append(dict(case="heat", t=t, z=z, w=w, value=heat, method="mpmath quad on [0,inf)"))

    xi = mp.mpf(2)
    f = lambda l: weight(l) / (xi + gap2 + l * l) * phi(l, d)
    integral = mp.quad(f, [0, 2, 6, 12]) + mp.quadosc(f, [12, mp.inf], omega=d)
    res = tau0() / xi + cont_coef() * integral
    rows.append(dict(case="resolvent", xi=xi, z=z, w=w, value=res, method="mpmath quad + quadosc"))

    t = mp.mpf("1.5")
    cd = mp.cosh(d)
    cn = mp.gamma(mp.mpf(1) / 2) / (2 * mp.pi)
    cw = cn * cd ** (NU - N) * (mp.cosh(t) ** 2 / cd ** 2 - 1) ** (-mp.mpf(1) / 2) * \
        mp.hyp2f1(NU, -NU, mp.mpf(1) / 2, (cd - mp.cosh(t)) / (2 * cd))
    rows.append(dict(case="closed_form_wave", t=t, z=z, w=w, value=cw, method="closed form, 50 digits"))

    z, w = mp.mpc(0), mp.mpc("0.4")
    mu = mp.mpc(0, 5)
    q = (1 - abs(z) ** 2) * (1 - abs(w) ** 2) / abs(1 - z * mp.conj(w)) ** 2
    a = (N - 1j * mu + NU) / 2
    b = (N - 1j * mu - NU) / 2
    cmu = mp.gamma(a) * mp.gamma(b) / (2 * mp.pi ** N * mp.gamma(1 - 1j * mu))
    phase = ((1 - mp.conj(z * mp.conj(w))) / (1 - z * mp.conj(w))) ** (NU / 2)
    green = cmu * phase * q ** (N - 1j * mu / 2) * mp.hyp2f1(a, b, 1 - 1j * mu, q)
    rows.append(dict(case="green", mu=mu, z=z, w=w, value=green, method="closed form, 50 digits"))

    z, om, lam = mp.mpc("0.5"), mp.mpc(1), mp.mpf(1)
    base = (1 - abs(z) ** 2) / abs(1 - z * mp.conj(om)) ** 2
    pk = base ** ((1j * lam + N - NU) / 2) * (1 - z * mp.conj(om)) ** (-NU)
    rows.append(dict(case="poisson", t=lam, z=z, w=om, value=pk, method="closed form, 50 digits"))

    for lam in [mp.mpf("0.5"), mp.mpf(1), mp.mpf(3)]:
        c = hc_c(lam)
        rows.append(dict(case="harish_chandra_c", t=lam, value=c, method="mpmath gamma"))
        rows.append(dict(case="plancherel_weight", t=lam, value=weight(lam), method="mpmath gamma"))

    for zz in [mp.mpc(0, 1), mp.mpc("2.5", "-7"), mp.mpc("-3.3", "0.4"), mp.mpc("40", "90")]:
        lg = mp.loggamma(zz)
        rows.append(dict(case="log_gamma_abs", z=zz, value=mp.mpc(mp.re(lg), 0), method="mpmath loggamma real part"))

    rows.append(fh_bump_row())
    return rows


def fh_bump_row():
    # F(z) = exp(-8|z|^2) * cutoff, n=1, nu=2.5, (lambda, omega) = (1, 1); float64 high-node rule
    n, nu, lam = 1, 2.5, 1.0

    def cutoff(r):
        out = np.zeros_like(r)
        inside = r < 0.85
        s = r[inside] / 0.85
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - s ** 4))
        return out

    xr, wr = np.polynomial.legendre.leggauss(400)
    r = 0.425 * (xr + 1)
    wr = 0.425 * wr
    th = 2 * np.pi * np.arange(800) / 800
    R, TH = np.meshgrid(r, th, indexing="ij")
    Z = R * np.exp(1j * TH)
    F = np.exp(-8 * R ** 2) * cutoff(R)
    om = 1.0 + 0j
    base = (1 - R ** 2) / np.abs(1 - Z * np.conj(om)) ** 2
    # P_{-lambda}
    P = base ** ((-1j * lam + n - nu) / 2) * (1 - Z * np.conj(om)) ** (-nu)
    integrand = F * P * (1 - R ** 2) ** (nu - n - 1) * R
    val = (integrand.sum(axis=1) * (2 * np.pi / 800) * wr).sum()
    return dict(case="fh_forward_bump", t=lam, w=mp.mpc(1), value=mp.mpc(val.real, val.imag),
                method="float64 Gauss-Legendre 400 x trapezoid 800")


COLUMNS = ["case", "n", "nu", "t", "xi_re", "xi_im", "mu_re", "mu_im", "s", "z_re", "z_im",
           "w_re", "w_im", "value_re", "value_im", "method"]


def write_kernels(path):
    with open(path, "w", newline="\n") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in kernel_rows():
            xi = mp.mpc(r.get("xi", 0))
            mu = mp.mpc(r.get("mu", 0))
            z = mp.mpc(r.get("z", 0))
            ww = mp.mpc(r.get("w", 0))
            v = mp.mpc(r["value"])
            w.writerow([r["case"], N, fmt(NU), fmt(r.get("t", 0)), fmt(xi.real), fmt(xi.imag),
                        fmt(mu.real), fmt(mu.imag), fmt(r.get("s", 0)), fmt(z.real), fmt(z.imag),
                        fmt(ww.real), fmt(ww.imag), fmt(v.real), fmt(v.imag), r["method"]])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "fixtures"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    write_specfun(os.path.join(args.out, "specfun_oracle.csv"))
    write_kernels(os.path.join(args.out, "kernel_oracle.csv"))


if __name__ == "__main__":
    main()
