"""Regenerates tests/frozen_values.hpp from high-precision mpmath computations.

    python3 tests/oracles/gen_frozen.py > tests/frozen_values.hpp
"""
import sys
from mpmath import mp, mpf, mpc, gamma, besselj, besseljzero, quad, inf, invertlaplace, sqrt, exp, erfc, hyperu, pi

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from mlref import ml

mp.dps = 30
out = []


import time
_t0 = [time.time()]


def emit(name, value):
    print(name, "%.2fs" % (time.time() - _t0[0]), file=sys.stderr, flush=True)
    _t0[0] = time.time()
    out.append("inline constexpr double %s = %s;" % (name, mp.nstr(value, 20, min_fixed=-1, max_fixed=-1) if not isinstance(value, str) else value))


def emitc(name, value):
    value = mpc(value)
    out.append("inline const std::complex<double> %s{%s, %s};" % (name, mp.nstr(value.real, 20), mp.nstr(value.imag, 20)))


# Mittag-Leffler values across the evaluation regimes.
ml_cases = [
    ("ml_06_14_g2_m3", 0.6, 1.4, -3, 2),
    ("ml_05_1_m1", 0.5, 1.0, -1, 1),
    ("ml_05_1_m10", 0.5, 1.0, -10, 1),
    ("ml_08_1_m5", 0.8, 1.0, -5, 1),
    ("ml_03_07_m4", 0.3, 0.7, -4, 1),
    ("ml_09_23_m4", 0.9, 2.3, -4, 1),
    ("ml_09_13_m4", 0.9, 1.3, -4, 1),
    ("ml_05_15_m1", 0.5, 1.5, -1, 1),
    ("ml_05_05_m1", 0.5, 0.5, -1, 1),
    ("ml_07_12_p3", 0.7, 1.2, 3, 1),
    ("ml_15_1_m8", 1.5, 1.0, -8, 1),
    ("ml_01_1_p06", 0.1, 1.0, 0.6, 1),
    ("ml_04_13_g07_m6", 0.4, 1.3, -6, 0.7),
]
for name, a, b, z, g in ml_cases:
    emit(name, ml(a, b, z, g).real)
for name, a, b, z in [("mlc_06_1", 0.6, 1.0, mpc(-2, 3)), ("mlc_08_09", 0.8, 0.9, mpc(-6, -1.5)),
                      ("mlc_05_1_big", 0.5, 1.0, mpc(-12, 8))]:
    emitc(name, ml(a, b, z))
emit("ml2_05_15_m1", ml(0.5, 1.5, -1, 2).real)
emit("ml2_09_23_m4", ml(0.9, 2.3, -4, 2).real)

emit("memory_kernel_025_05", mpf("0.5") ** mpf("-0.75") / gamma(mpf("0.25")))

# Laplace symbols by direct arithmetic.
def den(s, v, a, mu):
    return s ** (2 * a) + mu * v * s ** a + v * v


a, b, sig, mu = mpf("0.5"), mpf(1), mpf(1), mpf(2)
s = mpf(2); v = mpf(1) ** sig
emit("symM_s2_xi1", s ** (2 * a - b) / den(s, v, a, mu))
a, mu, sig = mpf("0.5"), mpf(3), mpf(2)
emit("symU0_s1_xi1", (1 ** (2 * a - 1) + mu * 1 * 1 ** (a - 1)) / den(mpf(1), mpf(1), a, mu))

# Time-domain symbols from mpmath's own Laplace inversion.
def inv(F, t):
    return invertlaplace(F, t, method="talbot")


a, mu, sig, xi = mpf("0.5"), mpf(3), mpf(2), mpf(1)
v = xi ** sig
emit("N_hat_t1_xi1", inv(lambda s: (s ** (2 * a - 1) + mu * v * s ** (a - 1)) / den(s, v, a, mu), 1))
a, b, mu, sig, xi = mpf("0.4"), mpf("0.9"), mpf(1), mpf(1), mpf(2)
v = xi ** sig
emit("M_hat_t07_xi2", inv(lambda s: s ** (2 * a - b) / den(s, v, a, mu), mpf("0.7")))
a, mu, sig, xi = mpf("0.8"), mpf("0.5"), mpf(2), mpf(1)
v = xi ** sig
emit("J_hat_t1_xi1", inv(lambda s: s ** (2 * a - 2) / den(s, v, a, mu), 1))
a, mu, sig, xi = mpf("0.5"), mpf(2), mpf(2), mpf("1.3")
v = xi ** sig
emit("N_hat_crit_t08_xi13", inv(lambda s: (s ** (2 * a - 1) + mu * v * s ** (a - 1)) / den(s, v, a, mu), mpf("0.8")))

# Mode ODE u'' + mu v u' + v^2 u = 0 (alpha = 1): exact exponential solution.
def mode_ode(mu, v, u0, u1, t):
    disc = (mu * mu - 4) * v * v
    if disc == 0:
        r = -mu * v / 2
        return (u0 + (u1 - r * u0) * t) * exp(r * t)
    sq = sqrt(mpc(disc))
    r1, r2 = (-mu * v + sq) / 2, (-mu * v - sq) / 2
    c2 = (u1 - r1 * u0) / (r2 - r1)
    c1 = u0 - c2
    return (c1 * exp(r1 * t) + c2 * exp(r2 * t)).real


for name, mu, v, u0, u1, t in [("ode_mu1e3_v1_t2", mpf("1e-3"), mpf(1), 1, 0, 2),
                               ("ode_mu2_v4_t05", mpf(2), mpf(4), 1, mpf("0.5"), mpf("0.5")),
                               ("ode_mu3_v2_t1", mpf(3), mpf(2), mpf("0.3"), 1, 1)]:
    emit(name, mode_ode(mu, v, mpf(u0), mpf(u1), mpf(t)))

# Bessel values and zeros.
for name, nu, x in [("J0_1", 0, 1), ("J0_50", 0, 50), ("J1_500", 1, 500), ("Jm05_3", -0.5, 3),
                    ("J025_7", 0.25, 7), ("J15_02", 1.5, 0.2), ("Jm07_2", -0.7, 2), ("J0_499", 0, 499.5)]:
    emit(name, besselj(mpf(nu), mpf(x)))
emit("J0_zero1", besseljzero(0, 1))
emit("J0_zero200", besseljzero(0, 200))
emit("J05_zero3", besseljzero(mpf("0.5"), 3))
emit("Jm05_zero2", mpf("1.5") * mp.pi)  # J_{-1/2} ~ cos x
emit("J1_zero10", besseljzero(1, 10))

# Hankel transform of rho^2 e^{-rho^2} at nu = 1 (n = 4 style radial weight).
nu = 1
emit("hankel_r2gauss_nu1_t15", quad(lambda r: r ** 2 * exp(-r * r) * (1.5 * r) ** -nu * besselj(nu, 1.5 * r) * r ** (2 * nu + 1), [0, 2, 4, 6, 10]))

# Mellin integrals by quadrature.
emit("mellin_n3_r15_s03_sig2_a3_b07", quad(lambda r: r ** (3 - 1.5 * mpf("0.3") - 1) * (1 + mpf("0.7") * r ** 2) ** -3, [0, 1, inf]))

# L^1 norm of E_{1/2,1}(-rho^2) on (0, inf) = int e^{rho^4} erfc(rho^2).
# e^{x^2} erfc(x) = U(1/2,1/2,x^2)/sqrt(pi); direct form overflows in the tail
emit("ineqC_l1_a05_b1", quad(lambda r: hyperu(0.5, 0.5, r ** 4) / sqrt(pi), [0, 1, 4, inf]))

# sup |J_0| and young constant s=4.
emit("young_s4", sqrt(mpf(4) ** (mpf(1) / 4) * (mpf(4) / 3) ** (-mpf(3) / 4)))

print("#pragma once\n\n// Generated by tests/oracles/gen_frozen.py (mpmath, 30 digits). Do not edit.\n")
print("#include <complex>\n\nnamespace frozen {\n")
print("\n".join(out))
print("\n}  // namespace frozen")
