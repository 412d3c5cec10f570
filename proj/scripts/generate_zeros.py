#!/usr/bin/env python3
"""Compute the first COUNT ordinates of nontrivial Riemann zeta zeros.

Method
  1. Gram-point scan with the leading Riemann-Siegel approximation
     (main sum + C0 correction term), grouping sign changes of Z(t)
     into Rosser blocks so the zero count per block is forced.
  2. Bisection of each bracket down to ~1e-6 using the same cheap Z.
  3. Two Newton polish steps per zero against an Euler-Maclaurin
     evaluation of zeta(1/2+it), which is accurate to ~1e-12 here.
  4. Certification: theta/Z/zeta cross-checked against mpmath at sample
     points, final ordinates spot-checked against mpmath.zetazero
     (both endpoints plus random interior indices), strict monotonicity,
     and Riemann-von Mangoldt counting agreement.

Everything heavy is vectorized with numpy; mpmath is used only for the
certification samples, so generating 1e5 zeros takes minutes on one core.

Usage:
  python3 scripts/generate_zeros.py --count 100000 --out work/zeros.txt \
      [--cache data/zeros_100k.zrt] [--spot-checks 60]
"""

import argparse
import struct
import sys
import time

import numpy as np
import mpmath as mp

TWO_PI = 2.0 * np.pi


# ----------------------------------------------------------------------
# Riemann-Siegel theta and Gram points
# ----------------------------------------------------------------------

def theta(t):
    """Asymptotic theta(t); absolute error < 1e-9 for t >= 14."""
    t = np.asarray(t, dtype=np.float64)
    return (t / 2.0 * np.log(t / TWO_PI) - t / 2.0 - np.pi / 8.0
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t ** 3)
            + 31.0 / (80640.0 * t ** 5))


def theta_deriv(t):
    return 0.5 * np.log(t / TWO_PI) - 1.0 / (48.0 * t * t)


def gram_points(k_lo, k_hi):
    """Gram points g_k, theta(g_k) = k*pi, for k = k_lo .. k_hi inclusive."""
    k = np.arange(k_lo, k_hi + 1, dtype=np.float64)
    # Newton on theta(t) = k*pi from a linear initial guess.
    t = np.maximum(10.0, TWO_PI * (k + 2.0))
    for _ in range(80):
        f = theta(t) - k * np.pi
        t = t - f / theta_deriv(t)
    resid = np.max(np.abs(theta(t) - k * np.pi))
    if resid > 1e-8:
        raise RuntimeError(f"Gram point Newton residual {resid:g}")
    return t


# ----------------------------------------------------------------------
# Riemann-Siegel Z, main sum + C0 (scan quality)
# ----------------------------------------------------------------------

def _psi_c0(p):
    """C0(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p), removable at p=1/4,3/4."""
    num = np.cos(TWO_PI * (p * p - p - 0.0625))
    den = np.cos(TWO_PI * p)
    out = np.empty_like(p)
    tiny = np.abs(den) < 1e-9
    out[~tiny] = num[~tiny] / den[~tiny]
    out[tiny] = 0.5  # l'Hopital value at both removable points
    return out


def rs_z(t):
    """Z(t) from the RS main sum plus C0; abs error ~ 0.05*(t/2pi)^(-5/4)."""
    t = np.asarray(t, dtype=np.float64)
    z = np.empty_like(t)
    a = np.sqrt(t / TWO_PI)
    n_of_t = np.floor(a).astype(np.int64)
    th = theta(t)
    for n in np.unique(n_of_t):
        m = n_of_t == n
        tm = t[m]
        ln = np.log(np.arange(1, n + 1, dtype=np.float64))
        w = 1.0 / np.sqrt(np.arange(1, n + 1, dtype=np.float64))
        ph = th[m][:, None] - tm[:, None] * ln[None, :]
        main = 2.0 * (np.cos(ph) @ w)
        p = a[m] - n
        corr = (-1.0) ** (n - 1) * a[m] ** (-0.5) * _psi_c0(p)
        z[m] = main + corr
    return z


def rs_err_bound(t):
    """Pessimistic absolute error bound for rs_z (C1 term omitted)."""
    return 0.25 * (np.asarray(t) / TWO_PI) ** -0.75 + 1e-10


# ----------------------------------------------------------------------
# Euler-Maclaurin zeta(1/2+it) -> Z(t)  (polish quality, ~1e-12)
# ----------------------------------------------------------------------

_EM_K = 14
_EM_BK = [float(mp.bernoulli(2 * k)) / float(mp.factorial(2 * k))
          for k in range(1, _EM_K + 1)]


def em_zeta_half(t, n_terms):
    """zeta(1/2+it) for a 1-d array t, Euler-Maclaurin with n_terms."""
    t = np.asarray(t, dtype=np.float64)
    s = 0.5 + 1j * t
    n = np.arange(1, n_terms, dtype=np.float64)  # 1 .. N-1
    ln = np.log(n)
    w = 1.0 / np.sqrt(n)
    acc = np.empty(t.shape, dtype=np.complex128)
    chunk = max(1, int(2.0e7 / max(1, n_terms)))
    for i in range(0, t.size, chunk):
        tt = t[i:i + chunk]
        ph = tt[:, None] * ln[None, :]
        acc[i:i + chunk] = (np.cos(ph) @ w) - 1j * (np.sin(ph) @ w)
    big_n = float(n_terms)
    tail = (big_n ** (1.0 - s)) / (s - 1.0) + 0.5 * big_n ** (-s)
    # Bernoulli corrections: B_{2k}/(2k)! * (s)_{2k-1} * N^{1-s-2k}
    u = s / big_n  # (s)_1 * N^{-1}
    corr = _EM_BK[0] * u
    for k in range(2, _EM_K + 1):
        u = u * (s + (2 * k - 3)) * (s + (2 * k - 2)) / (big_n * big_n)
        corr = corr + _EM_BK[k - 1] * u
    # u_k carries (s)_{2k-1} N^{-(2k-1)}; the term needs N^{1-s-2k}, i.e. a
    # further factor N^{-s}, shared by every k.
    return acc + tail + corr * big_n ** (-s)


def em_z(t, n_terms):
    """Z(t) via Euler-Maclaurin zeta; real part after phase rotation."""
    zeta = em_zeta_half(t, n_terms)
    th = theta(np.asarray(t, dtype=np.float64))
    return np.real(np.exp(1j * th) * zeta)


def em_z_banded(t):
    """Z(t) with per-band term counts: N = max(64, ceil(0.45 t)) rounded up."""
    t = np.asarray(t, dtype=np.float64)
    out = np.empty_like(t)
    bands = np.maximum(64, (np.ceil(t * 0.45 / 512.0) * 512).astype(np.int64))
    for nb in np.unique(bands):
        m = bands == nb
        out[m] = em_z(t[m], int(nb))
    return out


# ----------------------------------------------------------------------
# Scan: Rosser blocks -> brackets
# ----------------------------------------------------------------------

def find_brackets(count):
    """Bracket the first `count`+margin zeros; returns (lo, hi) arrays."""
    # Gram index high enough: N(g_k) ~ k+1.
    k_hi = count + 40
    grams = gram_points(-1, k_hi)
    ks = np.arange(-1, k_hi + 1)
    z_g = rs_z(grams)
    amb = np.abs(z_g) < 3.0 * rs_err_bound(grams)
    if np.any(amb):  # settle ambiguous Gram values with the accurate Z
        z_g[amb] = em_z_banded(grams[amb])
    good = ((-1.0) ** ks) * z_g > 0
    good_idx = np.flatnonzero(good)
    if good_idx[0] != 0:
        raise RuntimeError("first Gram point g_-1 not good; unexpected")
    lo_list, hi_list = [], []
    t0 = time.time()
    for bi in range(len(good_idx) - 1):
        i, j = good_idx[bi], good_idx[bi + 1]
        expect = j - i  # Rosser: block [g_i, g_j] holds exactly j-i zeros
        lo, hi = grams[i], grams[j]
        for per in (8, 32, 128, 512, 2048):
            xs = np.linspace(lo, hi, expect * per + 1)
            zs = rs_z(xs)
            amb = np.abs(zs) < 3.0 * rs_err_bound(xs)
            if np.any(amb):
                zs[amb] = em_z_banded(xs[amb])
            sgn = np.sign(zs)
            flips = np.flatnonzero(sgn[:-1] * sgn[1:] < 0)
            if len(flips) == expect:
                lo_list.append(xs[flips])
                hi_list.append(xs[flips + 1])
                break
        else:
            raise RuntimeError(
                f"block at Gram {ks[i]}..{ks[j]} expected {expect} zeros, "
                f"found {len(flips)}")
    lo = np.concatenate(lo_list)
    hi = np.concatenate(hi_list)
    print(f"  scan: {len(lo)} brackets in {time.time()-t0:.1f}s")
    return lo, hi


def bisect(lo, hi, iters=22):
    """Vector bisection with rs_z (EM fallback for ambiguous midpoints)."""
    zlo = rs_z(lo)
    amb = np.abs(zlo) < 3.0 * rs_err_bound(lo)
    if np.any(amb):
        zlo[amb] = em_z_banded(lo[amb])
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        zm = rs_z(mid)
        amb = np.abs(zm) < 3.0 * rs_err_bound(mid)
        if np.any(amb):
            zm[amb] = em_z_banded(mid[amb])
        left = zlo * zm < 0
        hi = np.where(left, mid, hi)
        lo = np.where(left, lo, mid)
        zlo = np.where(left, zlo, zm)
    return 0.5 * (lo + hi)


def polish(tau):
    """Two Newton steps against the accurate Z; returns refined ordinates."""
    h = 5e-5
    z0 = em_z_banded(tau)
    zp = em_z_banded(tau + h)
    zm = em_z_banded(tau - h)
    d = (zp - zm) / (2.0 * h)
    bad = np.abs(d) < 1e-12
    if np.any(bad):
        raise RuntimeError("vanishing Z' during polish")
    t1 = tau - z0 / d
    z1 = em_z_banded(t1)
    t2 = t1 - z1 / d
    return t2


# ----------------------------------------------------------------------
# Certification
# ----------------------------------------------------------------------

def certify_pieces():
    mp.mp.dps = 25
    rng = np.random.default_rng(20260819)
    ts = np.sort(rng.uniform(15.0, 75500.0, 12))
    # theta
    for t in ts[:6]:
        ref = float(mp.siegeltheta(t))
        got = float(theta(np.array([t]))[0])
        if abs(got - ref) > 1e-8 * max(1.0, abs(ref)):
            raise RuntimeError(f"theta mismatch at t={t}: {got} vs {ref}")
    # rs_z within its stated bound
    for t in ts:
        ref = float(mp.siegelz(t))
        got = float(rs_z(np.array([t]))[0])
        if abs(got - ref) > float(rs_err_bound(t)):
            raise RuntimeError(f"rs_z mismatch at t={t}: {got} vs {ref}")
    # em_z to 1e-10
    for t in ts:
        ref = float(mp.siegelz(t))
        got = float(em_z_banded(np.array([t]))[0])
        if abs(got - ref) > 1e-9:
            raise RuntimeError(f"em_z mismatch at t={t}: {got} vs {ref}")
    print("  certify: theta/rs_z/em_z agree with mpmath at samples")


def certify_zeros(tau, spot_checks):
    mp.mp.dps = 25
    n = len(tau)
    if np.any(np.diff(tau) <= 0):
        raise RuntimeError("ordinates not strictly increasing")
    rng = np.random.default_rng(715)
    idx = sorted(set([0, n - 1] + list(rng.integers(1, n - 1, spot_checks))))
    worst = 0.0
    for i in idx:
        ref = float(mp.zetazero(i + 1).imag)
        err = abs(tau[i] - ref)
        worst = max(worst, err)
        if err > 1e-9:
            raise RuntimeError(f"zero #{i+1}: {tau[i]!r} vs mpmath {ref!r}")
    print(f"  certify: {len(idx)} mpmath spot checks ok, worst |err|={worst:.2e}")
    # Riemann-von Mangoldt counting at sample heights
    for frac in np.linspace(0.1, 1.0, 10):
        k = int(frac * n) - 1
        if k < 1:
            continue
        t_mid = 0.5 * (tau[k - 1] + tau[k])
        est = (t_mid / TWO_PI) * np.log(t_mid / TWO_PI) - t_mid / TWO_PI + 0.875
        if abs(k - est) > 2.0:
            raise RuntimeError(f"counting deviation {k - est:+.2f} at T={t_mid}")
    print("  certify: counting-function deviation <= 2 at deciles")


# ----------------------------------------------------------------------

def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100000)
    ap.add_argument("--out", required=True)
    ap.add_argument("--cache", default=None,
                    help="also write binary cache (magic ZRT1) here")
    ap.add_argument("--spot-checks", type=int, default=60)
    args = ap.parse_args()

    t0 = time.time()
    print("certifying numeric pieces against mpmath ...")
    certify_pieces()

    print(f"scanning for {args.count} zeros ...")
    lo, hi = find_brackets(args.count)
    if len(lo) < args.count:
        raise RuntimeError(f"only {len(lo)} brackets found")

    print("bisecting ...")
    rough = bisect(lo[:args.count + 10], hi[:args.count + 10])

    print("polishing with Euler-Maclaurin Z ...")
    fine = polish(np.sort(rough))
    fine = np.sort(fine)[:args.count]

    print("certifying ordinates ...")
    certify_zeros(fine, args.spot_checks)

    with open(args.out, "w") as f:
        f.write("# Riemann zeta nontrivial zero ordinates, first "
                f"{args.count} zeros\n")
        f.write("# generated by scripts/generate_zeros.py; "
                "spot-certified against mpmath.zetazero\n")
        for v in fine:
            f.write(f"{v:.16e}\n")
    print(f"wrote {args.out}")

    if args.cache:
        with open(args.cache, "wb") as f:
            f.write(b"ZRT1")
            f.write(struct.pack("<Q", len(fine)))
            f.write(np.asarray(fine, dtype="<f8").tobytes())
        print(f"wrote {args.cache}")
    print(f"total {time.time()-t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
