#!/usr/bin/env python3
"""Regenerates the frozen reference values used by the selftest module and
the unit/acceptance suites.

Requires numpy, scipy and mpmath. The emitted literals use Python's repr,
which round-trips to the identical IEEE-754 double when parsed as a C++
literal. Output goes to stdout; the curated results are embedded in
core/src/selftest.cpp and the pinned-value unit tests.
"""

import numpy as np
import mpmath
from scipy import stats

mpmath.mp.dps = 50

R_GAS = 8.31446261815324
K_B = 1.380649e-23
H_PLANCK = 6.62607015e-34


def lit(x):
    return repr(float(x))


def arr(xs, per_line=4, indent="    "):
    xs = [lit(x) for x in xs]
    lines = []
    for i in range(0, len(xs), per_line):
        lines.append(indent + ", ".join(xs[i : i + per_line]) + ",")
    return "\n".join(lines)


# ---------------------------------------------------------------- model

def activation_energy(t0, f):
    return R_GAS * t0 * np.log(K_B * t0 / (H_PLANCK * f))


def debye_peak(t, q0, t0, f):
    e = activation_energy(t0, f)
    return q0 / np.cosh(e / R_GAS * (1.0 / t - 1.0 / t0))


def spectrum_model(t, q0s, t0s, f):
    return sum(debye_peak(t, q, p, f) for q, p in zip(q0s, t0s))


print("// ---- model oracle values")
print("activation_energy(500, 1) =", lit(activation_energy(500.0, 1.0)))
print("debye_peak(T=520, Q0=2, T0=500, f=1) =", lit(debye_peak(520.0, 2.0, 500.0, 1.0)))
print("E(450) =", lit(activation_energy(450.0, 1.0)))
print("E(550) =", lit(activation_energy(550.0, 1.0)))
print("E(650) =", lit(activation_energy(650.0, 1.0)))
canon_ts = [350.0, 450.0, 500.0, 550.0, 650.0, 750.0]
canon = [spectrum_model(t, [1, 1, 1], [450, 550, 650], 1.0) for t in canon_ts]
print("canonical 3-peak curve at", canon_ts)
print(arr(canon, per_line=3))

# five-point SSE fixture: params Q0=(1.5, 0.5), T0=(430, 610), f=1
t5 = np.array([380.0, 450.0, 520.0, 590.0, 660.0])
q5 = np.array([0.9, 1.4, 0.3, 0.55, 0.25])
model5 = spectrum_model(t5, [1.5, 0.5], [430.0, 610.0], 1.0)
print("sse 5-point fixture =", lit(float(np.sum((q5 - model5) ** 2))))

# ---------------------------------------------------------------- normal cdf
print("\n// ---- normal_cdf (mpmath ncdf, 50 dps)")
norm_x = [0.0, 0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 1.959964, -1.959964, 2.0,
          -2.5, 3.0, -3.0, 4.0, -4.0, 5.0, -5.0, 6.0, -6.0, 0.123456789]
norm_v = [float(mpmath.ncdf(x)) for x in norm_x]
print("x:")
print(arr(norm_x))
print("cdf:")
print(arr(norm_v))

# ---------------------------------------------------------------- t cdf
print("\n// ---- t_cdf (mpmath regularized incomplete beta)")


def t_cdf_mp(x, df):
    x = mpmath.mpf(x)
    df = mpmath.mpf(df)
    ib = mpmath.betainc(df / 2, mpmath.mpf(1) / 2, 0, df / (df + x * x), regularized=True)
    tail = ib / 2
    return float(1 - tail) if x >= 0 else float(tail)


t_pairs = [(0.0, 1), (1.0, 1), (-1.0, 1), (2.0, 1), (0.5, 2), (-2.5, 2),
           (3.4641016151377544, 2), (1.0, 3), (-1.5, 4), (2.0, 5), (0.7, 7),
           (-0.3, 10), (1.96, 10), (2.5, 15), (-3.0, 20), (1.2, 30),
           (0.8, 50), (-1.645, 100), (1.96, 1000), (1.96, 1000000)]
print("x, df, cdf:")
for x, df in t_pairs:
    print(f"    {{{lit(x)}, {df}, {lit(t_cdf_mp(x, df))}}},")

# ---------------------------------------------------------------- F cdf
print("\n// ---- f_cdf (mpmath regularized incomplete beta)")


def f_cdf_mp(x, d1, d2):
    x = mpmath.mpf(x)
    d1m = mpmath.mpf(d1)
    d2m = mpmath.mpf(d2)
    z = d1m * x / (d1m * x + d2m)
    return float(mpmath.betainc(d1m / 2, d2m / 2, 0, z, regularized=True))


f_triples = [(0.0, 1, 1), (1.0, 1, 1), (0.5, 2, 3), (1.0, 5, 5), (2.0, 3, 7),
             (4.0, 10, 10), (0.25, 8, 4), (1.5, 6, 12), (3.0, 2, 20),
             (5.0, 15, 5), (0.9, 30, 30), (1.0, 394, 394), (2.2, 50, 25),
             (0.1, 1, 10), (10.0, 4, 4), (1.05, 200, 200), (0.7, 12, 8),
             (6.0, 20, 2), (2.5, 7, 3), (1.8, 100, 50)]
print("x, d1, d2, cdf:")
for x, d1, d2 in f_triples:
    print(f"    {{{lit(x)}, {d1}, {d2}, {lit(f_cdf_mp(x, d1, d2))}}},")

# ---------------------------------------------------------------- samples

def nortest_ad_pvalue(aa):
    if aa < 0.2:
        return 1 - np.exp(-13.436 + 101.14 * aa - 223.73 * aa * aa)
    if aa < 0.34:
        return 1 - np.exp(-8.318 + 42.796 * aa - 59.938 * aa * aa)
    if aa < 0.6:
        return np.exp(0.9177 - 4.279 * aa - 1.38 * aa * aa)
    if aa < 10.0:
        return np.exp(1.2937 - 5.709 * aa + 0.0186 * aa * aa)
    return 3.7e-24


def ad_stat_p(x):
    a2 = stats.anderson(x, dist="norm").statistic
    n = len(x)
    aa = a2 * (1.0 + 0.75 / n + 2.25 / (n * n))
    return a2, nortest_ad_pvalue(aa)


def regressor(n):
    # must match the C++ expression exactly: 300 + 500*i/(n-1)
    return np.array([300.0 + 500.0 * i / (n - 1) for i in range(n)])


def ols_residuals(y, x):
    xbar = x.mean()
    ybar = y.mean()
    sxx = np.sum((x - xbar) ** 2)
    sxy = np.sum((x - xbar) * (y - ybar))
    slope = sxy / sxx if sxx > 0 else 0.0
    intercept = ybar - slope * xbar
    return y - intercept - slope * x


def dw_stats(y, max_lag=5):
    x = regressor(len(y))
    e = ols_residuals(y, x)
    den = np.sum(e * e)
    out = []
    for lag in range(1, max_lag + 1):
        out.append(float(np.sum((e[lag:] - e[:-lag]) ** 2) / den))
    return out


def variance_f_p(x, var_eps, n_free):
    n = len(x)
    var_res = np.sum((x - x.mean()) ** 2) / (n - n_free)
    ff = max(var_eps, var_res) / min(var_eps, var_res)
    return float(1.0 - stats.f.cdf(ff, n - n_free, n - n_free)), float(ff)


rng = np.random.RandomState(12345)
samples = [
    rng.standard_normal(40),
    rng.uniform(-1.0, 1.0, 30),
    rng.standard_t(3, 35),
    None,  # AR(1), filled below
    np.exp(rng.standard_normal(25)) - np.exp(0.5),
    rng.standard_normal(60) * 0.5 + 0.3,
    rng.standard_normal(20) * 2.0,
    np.sin(np.arange(32) * 0.7) + rng.standard_normal(32) * 0.3,
    rng.standard_normal(48) * 0.1 - 0.02,
    rng.gamma(2.0, 1.0, 28) - 2.0,
]
ar = np.zeros(45)
innov = rng.standard_normal(45)
for i in range(1, 45):
    ar[i] = 0.6 * ar[i - 1] + innov[i]
samples[3] = ar.copy()

VAR_EPS = 1.0
N_FREE = 4

print("\n// ---- diagnostic reference samples (var_eps=1, n_free_params=4)")
for k, s in enumerate(samples):
    s = np.asarray(s, dtype=np.float64)
    a2, ad_p = ad_stat_p(s)
    t_res = stats.ttest_1samp(s, 0.0)
    dws = dw_stats(s)
    f_p, ff = variance_f_p(s, VAR_EPS, N_FREE)
    print(f"// sample {k} (n={len(s)})")
    print("{")
    print(arr(s))
    print("},")
    print(f"// ad: A2={lit(a2)} p={lit(ad_p)}")
    print(f"// t:  t={lit(t_res.statistic)} p={lit(t_res.pvalue)}")
    print("// dw: " + ", ".join(lit(d) for d in dws))
    print(f"// F:  F={lit(ff)} p={lit(f_p)}")

# ---------------------------------------------------------------- AD shape fixtures
print("\n// ---- AD fixtures")
n = 50
blom = stats.norm.ppf((np.arange(1, n + 1) - 0.375) / (n + 0.25))
a2b, pb = ad_stat_p(blom)
print("// Blom plotting-position sample, n=50")
print(arr(blom))
print("A2 =", lit(a2b), " p =", lit(pb))
unif = np.linspace(0.0, 1.0, 50)
a2u, pu = ad_stat_p(unif)
print("// uniform grid on [0,1], n=50: A2 =", lit(a2u), " p =", lit(pu))

# t-test (1,2,3)
t123 = stats.ttest_1samp(np.array([1.0, 2.0, 3.0]), 0.0)
print("// one_sample_t (1,2,3): t =", lit(t123.statistic), " p =", lit(t123.pvalue))

# variance F pinned: var_res = 10*var_eps, n-p = 20
p_pinned = float(1.0 - stats.f.cdf(10.0, 20, 20))
print("// F(10; 20,20) upper tail:", lit(p_pinned))
