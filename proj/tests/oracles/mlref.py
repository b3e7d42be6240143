"""High-precision Mittag-Leffler reference by brute-force series summation.

Working precision is raised until the largest series term is covered, so the
result is exact to ~25 digits even where double-precision series cancel.
"""
from mpmath import mp, mpf, mpc, rf, factorial, rgamma, fabs, log, exp


def ml(alpha, beta, z, gamma=1, digits=25):
    alpha, beta, gamma = mpf(alpha), mpf(beta), mpf(gamma)
    z = mpc(z)
    r = float(abs(z))
    grow = (r ** (1.0 / float(alpha))) / 2.3 if r > 0 else 0
    old = mp.dps
    mp.dps = int(digits + 15 + grow)
    try:
        s = mpc(0)
        term_k = mpf(1)
        zk = mpc(1)
        k = 0
        quiet = 0
        while True:
            if k > 0:
                term_k = term_k * (gamma + k - 1) / k
                zk = zk * z
            t = term_k * zk * rgamma(alpha * k + beta)
            s += t
            if k > 10 and (alpha * k + beta) ** float(alpha) > 2 * r + 1:
                if abs(t) < mpf(10) ** (-(digits + 10)) * max(abs(s), mpf(10) ** -300):
                    quiet += 1
                    if quiet > 3:
                        break
            k += 1
        return s
    finally:
        mp.dps = old
