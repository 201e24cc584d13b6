"""Independent reference computations used to freeze expected values in the C++ tests.

Uses scipy (brentq, quad, lambertw, kendalltau) and never calls into the C++ library.
Run: python3 tests/oracles/derive_values.py
"""
import math

import numpy as np
from scipy import integrate, optimize, special, stats


def phi(lam, x):
    if lam == 0:
        return 1 - x + (x * math.log(x) if x > 0 else 0.0)
    if lam == -1:
        return x - 1 - math.log(x)
    return (x ** (lam + 1) - x + lam * (1 - x)) / (lam * (lam + 1))


def phi0(lam):
    return 1 / (lam + 1) if lam > -1 else math.inf


def pinv(lam, t):
    if t <= 0:
        return 1.0
    if t >= phi0(lam):
        return 0.0
    lo = 1e-300
    return optimize.brentq(lambda x: phi(lam, x) - t, lo, 1.0, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)


def cdf(lam, u, v):
    if u <= 0 or v <= 0:
        return 0.0
    return pinv(lam, phi(lam, u) + phi(lam, v))


def tau_pd(lam):
    if lam == 0:
        return 3 - 4 * math.log(2)
    if lam == -1:
        return 7 - 2 * math.pi ** 2 / 3
    f = lambda s: (s - 1) / (s ** lam - 1)
    val, _ = integrate.quad(f, 0, 1, epsabs=1e-14, epsrel=1e-13, limit=200)
    return 1 + 2 / (lam + 1) - 4 * lam / (lam + 1) * val


def tau_inv_pd(tau):
    return optimize.brentq(lambda l: tau_pd(l) - tau, -30.0001, 30.0003, xtol=1e-14)


def tau_frank(theta):
    d1 = integrate.quad(lambda t: t / math.expm1(t), 0, theta, epsabs=1e-14, epsrel=1e-13)[0] / theta
    return 1 - 4 / theta + 4 * d1 / theta


def tau_joe(theta):
    k = np.arange(1, 2_000_000, dtype=float)
    return 1 - 4 * np.sum(1 / (k * (theta * k + 2) * (theta * (k - 1) + 2)))


def ranks_mid(col):
    return stats.rankdata(col, method="average") / (len(col) + 1)


def emp_copula_at(v):
    n = len(v)
    return np.array([np.mean((v[:, 0] <= v[i, 0]) & (v[:, 1] <= v[i, 1])) for i in range(n)])


print("phi(0,0.5) =", repr(phi(0, 0.5)))
print("lambert_wm1(-0.1) =", repr(special.lambertw(-0.1, -1).real))
print("kendall_tau(-2) =", repr(tau_pd(-2)), "closed", repr(8 * math.log(2) - 5))
print("K_0(0.5) =", repr((0.5 - 1) / math.log(0.5)))
print("tau_inverse(0.361) =", repr(tau_inv_pd(0.361)))
print("frank theta(0.361) =", repr(optimize.brentq(lambda t: tau_frank(t) - 0.361, 0.5, 20, xtol=1e-13)))
print("joe theta(0.361) =", repr(optimize.brentq(lambda t: tau_joe(t) - 0.361, 1.01, 10, xtol=1e-12)))
print("clayton theta(0.361) =", repr(2 * 0.361 / (1 - 0.361)))
print("gumbel theta(0.361) =", repr(1 / (1 - 0.361)))
print("cdf(-0.7, 0.3, 0.6) =", repr(cdf(-0.7, 0.3, 0.6)))
print("cdf(sqrt2, 0.7, 0.8) =", repr(cdf(math.sqrt(2), 0.7, 0.8)))
print("cdf(-sqrt2, 0.2, 0.9) =", repr(cdf(-math.sqrt(2), 0.2, 0.9)))

# Synthetic Danish-style fixture.
rows = []
with open(__file__.rsplit("/", 2)[0] + "/fixtures/danish_synthetic.csv") as fh:
    header = fh.readline().strip().split(",")[1:]
    for line in fh:
        rows.append([float(x) for x in line.strip().split(",")[1:]])
rows = np.array(rows)
b, c, p = (rows[:, header.index(k)] for k in ("Building", "Contents", "Profits"))
keep = p > 0
material, profits = (b + c)[keep], p[keep]
print("fixture rows:", len(rows), "kept:", int(keep.sum()))
v = np.column_stack([ranks_mid(material), ranks_mid(profits)])
tau_b = stats.kendalltau(material, profits).statistic
print("fixture tau_b =", repr(tau_b))
lam_hat = tau_inv_pd(tau_b)
print("fixture lambda_hat =", repr(lam_hat))
ce = emp_copula_at(v)
cm = np.array([cdf(lam_hat, a, bb) for a, bb in v])
print("fixture S_n(pd) =", repr(float(np.sum((ce - cm) ** 2))))
print("fixture C_emp =", repr(list(ce)))
