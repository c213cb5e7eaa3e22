"""Independent reference values for the fragment-radiation test suite.

The time-domain Larmor energy is integrated symbolically (sympy), the photon
yield with scipy's QUADPACK over a spectrum built directly from the damped
sine product.  Nothing here shares code with the C++ implementation; the
printed numbers are frozen into tests/*.cpp.
"""
import math

import numpy as np
import sympy as sp
from scipy import integrate

HBAR_C = 197.3269804          # MeV fm
HBAR = 6.582119569e-22        # MeV s
ALPHA = 7.2973525693e-3


def params(hw2=2.2, hw3=2.8, d0=5.0, tau=1e-19):
    return hw2, hw3, d0, HBAR / tau


def time_energy(hw2, hw3, d0, gamma):
    t = sp.symbols("t", positive=True)
    w2, w3, g = sp.Rational(str(hw2)), sp.Rational(str(hw3)), sp.nsimplify(gamma, rational=True)
    d = -d0 * sp.sin(w2 * t) * sp.sin(w3 * t) * sp.exp(-g * t / 2)
    acc = sp.diff(d, t, 2)
    expr = sp.expand(sp.expand_trig(sp.simplify(acc**2).rewrite(sp.exp)))
    val = sp.integrate(expr, (t, 0, sp.oo))
    return float(sp.re(sp.N(sp.Rational(2, 3) * ALPHA / HBAR_C**2 * val, 30)))


def fourier_accel(hw, hw2, hw3, d0, gamma):
    # one-sided transform of D'' for D = -d0 sin w2 t sin w3 t e^{-g t/2};
    # expand sin*sin*exp as four complex exponentials e^{s t}
    terms = []
    for s2 in (1, -1):
        for s3 in (1, -1):
            c = -d0 * (1 / (2j)) ** 2 * s2 * s3
            rate = 1j * (s2 * hw2 + s3 * hw3) - gamma / 2
            terms.append((c, rate))
    return sum(c * r**2 / (-(r + 1j * hw)) for c, r in terms)


def density(hw, *p):
    f = fourier_accel(hw, *p)
    return 2 / (3 * math.pi) * ALPHA * abs(f) ** 2 / HBAR_C**2


def freq_integral(fn, p, lo=0.0):
    hw2, hw3, _, gamma = p
    sig, dlt = hw2 + hw3, abs(hw2 - hw3)
    pts = sorted({x for c in (sig, dlt) for k in (-8, -2, -0.5, 0, 0.5, 2, 8)
                  if (x := c + k * gamma) > lo and x < 4 * sig})
    edges = [lo] + pts + [4 * sig]
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        total += integrate.quad(fn, a, b, epsabs=0, epsrel=1e-12, limit=500)[0]
    total += integrate.quad(fn, 4 * sig, np.inf, epsabs=0, epsrel=1e-12, limit=500)[0]
    return total


if __name__ == "__main__":
    p = params()
    sig = p[0] + p[1]
    e_t = time_energy(*p)
    e_f = freq_integral(lambda w: density(w, *p), p)
    n = freq_integral(lambda w: density(w, *p) / w, p)
    print(f"gamma            = {p[3]:.12e}")
    print(f"E_time           = {e_t:.12e}")
    print(f"E_freq           = {e_f:.12e}")
    print(f"N_gamma          = {n:.12e}")
    print(f"|F(Sigma)|       = {abs(fourier_accel(sig, *p)):.12e}")
    print(f"F(0.6)           = {fourier_accel(0.6, *p)}")
    print(f"F(5.0)           = {fourier_accel(5.0, *p)}")
    print(f"F(1.7)           = {fourier_accel(1.7, *p)}")
    print(f"density(Sigma)   = {density(sig, *p):.12e}")
    p2 = params(tau=2e-19)
    print(f"E_time(2tau)     = {time_energy(*p2):.12e}")
    print(f"N_gamma(2tau)    = {freq_integral(lambda w: density(w, *p2) / w, p2):.12e}")
