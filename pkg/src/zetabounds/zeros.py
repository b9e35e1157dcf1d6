"""Nontrivial zeta zeros: finding, persistence, counting statistics and
weighted sums.

Zeros are located as sign changes of the real-valued rotation
Z(t) = e^(i theta(t)) zeta(1/2 + it) on a grid finer than the local mean
gap, refined by bisection, and the resulting list is vetted against the
zero-counting remainder Q(t) = N(t) - (t/2pi) log(t/(2pi e)) - 7/8.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from .special import log_deriv_zeta, zeta_batch_critical
from .util import TWO_PI, adaptive_simpson

__all__ = [
    "ZeroList", "ZeroCountStats", "MissedZeroError", "ZeroFileError",
    "hardy_theta", "hardy_z_batch", "find_zeros", "load_zeros", "save_zeros",
    "bundled_zeros", "count_and_Q", "lehman_sum", "box_count_bound",
    "inverse_square_tail", "local_log_deriv",
]

T_MAX_CEILING = 2.5e4
FIRST_ZERO = 14.134725141734694


class MissedZeroError(RuntimeError):
    """The zero scan failed its counting-function completeness check."""


class ZeroFileError(ValueError):
    """A zero file failed to parse or violated a sanity invariant."""


def _q_bound(t):
    return 0.2 * np.log(t) + 2.0


def _smooth_count(t):
    """(t/2pi) log(t/(2pi e)) + 7/8, the main term of N(t)."""
    t = np.asarray(t, dtype=np.float64)
    return t / TWO_PI * np.log(t / (TWO_PI * math.e)) + 7.0 / 8.0


@dataclass(frozen=True)
class ZeroCountStats:
    t: float
    N: int
    Q: float


@dataclass(frozen=True)
class ZeroList:
    """Ascending ordinates of nontrivial zeros, complete through t_max."""

    ordinates: np.ndarray
    t_max: float
    source: str = "computed"
    rh_assumed: bool = True

    def __post_init__(self):
        g = np.asarray(self.ordinates, dtype=np.float64)
        object.__setattr__(self, "ordinates", g)
        if g.size and not np.all(np.diff(g) > 0):
            raise ValueError("ordinates must be strictly ascending")
        if g.size and abs(g[0] - FIRST_ZERO) > 1e-4:
            raise ZeroFileError(
                f"first ordinate {g[0]:.6f} is not the known first zero")
        if g.size == 0 and self.t_max >= FIRST_ZERO + 1e-4:
            raise MissedZeroError("empty list cannot be complete past the "
                                  "first zero")
        if g.size:
            if g[-1] > self.t_max:
                raise ValueError("ordinate above t_max")
            self._check_prefix_counts()

    def _check_prefix_counts(self) -> None:
        g = self.ordinates
        k = np.arange(1, g.size + 1, dtype=np.float64)
        smooth = _smooth_count(g)
        q_after = k - smooth       # Q at gamma (count includes the zero)
        q_before = (k - 1) - smooth
        bound = _q_bound(g)
        bad = (np.abs(q_after) > bound) | (np.abs(q_before) > bound)
        if bad.any():
            i = int(np.argmax(bad))
            raise MissedZeroError(
                f"counting remainder violates its bound near t = {g[i]:.3f}")

    def count_below(self, t: float) -> int:
        return int(np.searchsorted(self.ordinates, t, side="right"))

    def __len__(self) -> int:
        return int(self.ordinates.size)


# ----------------------------------------------------------------------
# Hardy Z
# ----------------------------------------------------------------------

def hardy_theta(t):
    """Asymptotic theta(t) = (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t)
    + 7/(5760 t^3); adequate for t >= 10."""
    t = np.asarray(t, dtype=np.float64)
    return (t / 2.0 * np.log(t / TWO_PI) - t / 2.0 - math.pi / 8.0
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t ** 3))


def hardy_z_batch(ts: np.ndarray) -> np.ndarray:
    """Z(t) = Re(e^(i theta) zeta(1/2+it)) for ascending heights t >= 10."""
    ts = np.asarray(ts, dtype=np.float64)
    z = zeta_batch_critical(ts)
    th = hardy_theta(ts)
    return (np.exp(1j * th) * z).real


# ----------------------------------------------------------------------
# Zero finding
# ----------------------------------------------------------------------

def _scan_grid(lo: float, hi: float, shrink: float = 1.0) -> np.ndarray:
    """Grid over [lo, hi] with local step 0.2 * shrink * mean gap."""
    pts = [lo]
    t = lo
    while t < hi:
        step = 0.2 * shrink * TWO_PI / max(math.log(max(t, 12.0) / TWO_PI),
                                           0.5)
        step = min(step, 1.0)
        t += step
        pts.append(min(t, hi))
    return np.array(pts)


def _bisect_brackets(a: np.ndarray, b: np.ndarray, za: np.ndarray,
                     tol: float) -> np.ndarray:
    """Vectorised bisection on sign-change brackets of Z."""
    a = a.copy()
    b = b.copy()
    sa = np.sign(za)
    width = float(np.max(b - a)) if a.size else 0.0
    iters = max(1, int(math.ceil(math.log2(max(width / tol, 2.0)))) + 1)
    for _ in range(iters):
        m = 0.5 * (a + b)
        zm = hardy_z_batch(m)
        same = np.sign(zm) == sa
        a = np.where(same, m, a)
        b = np.where(same, b, m)
    return 0.5 * (a + b)


def find_zeros(t_max: float, tol: float = 1e-9) -> ZeroList:
    """All ordinates <= t_max located to +-tol.

    Completeness is cross-checked against the Q(t) bound; suspiciously wide
    gaps get a finer local rescan (close pairs), and a global doubled
    resolution rescan is triggered if the check still fails.
    """
    if not 0 < t_max <= T_MAX_CEILING:
        raise ValueError(f"t_max must lie in (0, {T_MAX_CEILING:g}]")
    if tol < 1e-9:
        raise ValueError("tol must be at least 1e-9")
    if t_max < FIRST_ZERO - 0.5:
        return ZeroList(np.array([]), t_max, source="computed")

    lo = 10.0
    hi = t_max + 1.5
    shrink = 1.0
    for attempt in range(4):
        grid = _scan_grid(lo, hi, shrink)
        zv = hardy_z_batch(grid)
        flips = np.flatnonzero(np.sign(zv[:-1]) * np.sign(zv[1:]) < 0)
        a, b, za = grid[flips], grid[flips + 1], zv[flips]

        # local rescan of gaps wide enough to hide a close pair
        roots = np.sort(_bisect_brackets(a, b, za, tol))
        extra = _rescan_wide_gaps(roots, lo, hi, shrink, tol)
        if extra.size:
            roots = np.sort(np.concatenate([roots, extra]))
        roots = roots[(roots >= lo) & (roots <= t_max)]
        try:
            return ZeroList(roots, t_max, source="computed")
        except MissedZeroError:
            if attempt == 3:
                raise
            shrink *= 0.5
    raise MissedZeroError("unreachable")


def _rescan_wide_gaps(roots: np.ndarray, lo: float, hi: float,
                      shrink: float, tol: float) -> np.ndarray:
    """Rescan intervals whose gap exceeds 1.6x the local mean gap with an
    8x finer grid; returns any additional roots found."""
    if roots.size < 2:
        return np.array([])
    edges = np.concatenate([[lo], roots, [hi]])
    found = []
    for left, right in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (left + right)
        mean_gap = TWO_PI / max(math.log(max(mid, 12.0) / TWO_PI), 0.5)
        if right - left <= 1.6 * mean_gap:
            continue
        grid = _scan_grid(left + 0.25 * tol, right - 0.25 * tol,
                          shrink * 0.125)
        zv = hardy_z_batch(grid)
        flips = np.flatnonzero(np.sign(zv[:-1]) * np.sign(zv[1:]) < 0)
        if flips.size:
            cand = _bisect_brackets(grid[flips], grid[flips + 1],
                                    zv[flips], tol)
            for c in cand:
                if not roots.size or np.min(np.abs(roots - c)) > 4 * tol:
                    found.append(c)
    return np.array(found)


# ----------------------------------------------------------------------
# Persistence
# ----------------------------------------------------------------------

def save_zeros(zl: ZeroList, path: str) -> None:
    """Zero file: '#'-comments, '# t_max=<v> rh=<0|1>' header, one ordinate
    per line with nine decimals, ASCII, LF line endings."""
    lines = [f"# t_max={zl.t_max:.9f} rh={1 if zl.rh_assumed else 0}\n"]
    lines += [f"{g:.9f}\n" for g in zl.ordinates]
    from .util import atomic_write_text
    atomic_write_text(path, "".join(lines))


def load_zeros(path: str) -> ZeroList:
    """Parse a zero file; enforces the ZeroList invariants on load."""
    ords = []
    t_max = None
    rh = True
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    if tok.startswith("t_max="):
                        t_max = float(tok[6:])
                    elif tok.startswith("rh="):
                        rh = tok[3:] == "1"
                continue
            try:
                v = float(line)
            except ValueError as e:
                raise ZeroFileError(f"{path}:{lineno}: not a number: "
                                    f"{line!r}") from e
            if "e" in line or "E" in line:
                raise ZeroFileError(f"{path}:{lineno}: exponent notation "
                                    "not allowed")
            ords.append(v)
    arr = np.array(ords)
    if arr.size and not np.all(np.diff(arr) > 0):
        bad = int(np.argmax(np.diff(arr) <= 0)) + 2
        raise ZeroFileError(f"{path}:{bad}: ordinates not ascending")
    if t_max is None:
        t_max = float(arr[-1]) if arr.size else 0.0
    return ZeroList(arr, t_max, source=path, rh_assumed=rh)


def bundled_zeros() -> ZeroList:
    """The packaged first-100-ordinates fixture."""
    here = os.path.dirname(__file__)
    return load_zeros(os.path.join(here, "data", "zeros100.txt"))


# ----------------------------------------------------------------------
# Counting statistics and weighted sums
# ----------------------------------------------------------------------

def count_and_Q(zl: ZeroList, t: float) -> ZeroCountStats:
    """Exact N(t) from the list plus the remainder Q(t); asserts both the
    |Q| <= (1/5) log t + 2 bound and N(T) <= (T/2pi) log(T/2pi)."""
    if t > zl.t_max:
        raise ValueError("height exceeds the list's completeness range")
    n = zl.count_below(t)
    q = n - float(_smooth_count(t))
    if t >= 1.0 and abs(q) > 0.2 * math.log(t) + 2.0:
        raise MissedZeroError(f"|Q({t:g})| violates its bound")
    if t >= TWO_PI and n > t / TWO_PI * math.log(t / TWO_PI):
        raise MissedZeroError(f"N({t:g}) violates the crude upper bound")
    return ZeroCountStats(t=t, N=n, Q=q)


def lehman_sum(zl: ZeroList, phi, t0: float, t1: float, direction: str):
    """(exact sum of phi over ordinates in (t0, t1], decreasing-case RHS,
    increasing-case RHS).

    phi must be non-negative and monotone in the declared direction
    ('decreasing' or 'increasing'); a sampled direction mismatch raises.
    """
    if not (14.0 <= t0 <= t1 <= zl.t_max):
        raise ValueError("need 14 <= t0 <= t1 <= t_max")
    if direction not in ("decreasing", "increasing"):
        raise ValueError("direction must be 'decreasing' or 'increasing'")
    probe = np.linspace(t0, t1, 64)
    pv = np.array([phi(float(x)) for x in probe], dtype=np.float64)
    if pv.min() < -1e-12:
        raise ValueError("phi must be non-negative")
    d = np.diff(pv)
    if direction == "decreasing" and d.max() > 1e-12 * max(pv.max(), 1.0):
        raise ValueError("phi is not decreasing on [t0, t1]")
    if direction == "increasing" and d.min() < -1e-12 * max(pv.max(), 1.0):
        raise ValueError("phi is not increasing on [t0, t1]")

    g = zl.ordinates
    inwin = g[(g > t0) & (g <= t1)]
    exact = float(sum(phi(float(x)) for x in inwin))

    main = adaptive_simpson(lambda t: phi(t) * math.log(t / TWO_PI),
                            t0, t1, 1e-10) / TWO_PI
    invt = adaptive_simpson(lambda t: phi(t) / t, t0, t1, 1e-10)
    q0 = count_and_Q(zl, t0).Q
    q1 = count_and_Q(zl, t1).Q
    rhs_dec = main + phi(t0) * (0.2 * math.log(t0) + 2.0 - q0) + invt / 5.0
    rhs_inc = (main + phi(t1) * (0.2 * math.log(t1) + 2.0 + q1)
               - invt / 5.0 - phi(t0) * (0.2 * math.log(t0) + 2.0 + q0))
    return exact, rhs_dec, rhs_inc


def box_count_bound(T: float, a: float) -> float:
    """Upper bound for N(T+a) - N((T-a)^-): (2/5) log T + 4 plus the
    smooth-density window (a/pi) log(T/2pi)."""
    if not (T >= 1.0 and 0 < a < T):
        raise ValueError("need T >= 1 and 0 < a < T")
    return 0.4 * math.log(T) + 4.0 + a / math.pi * math.log(T / TWO_PI)


def inverse_square_tail(zl: ZeroList, t0: float):
    """(sum_{gamma > t0} 1/gamma^2 with the above-t_max part estimated
    analytically, the closed-form upper bound).

    The analytic remainder's own uncertainty must be below 1e-6.
    """
    if t0 < 14.0:
        raise ValueError("t0 must be at least 14")
    if t0 > zl.t_max:
        raise ValueError("t0 exceeds the list height")
    g = zl.ordinates
    tm = zl.t_max
    exact_part = float(np.sum(1.0 / g[g > t0] ** 2))
    # density integral for the invisible tail, with a rigorous uncertainty
    remainder = (math.log(tm / TWO_PI) + 1.0) / (TWO_PI * tm)
    q_tm = abs(count_and_Q(zl, tm).Q)
    uncertainty = (q_tm + 0.4 * math.log(tm) + 4.1) / tm ** 2
    if uncertainty >= 1e-6:
        raise ValueError("list height too small: remainder uncertainty "
                         f"{uncertainty:.2e} >= 1e-6")
    rhs = (math.log(math.e * t0 / TWO_PI) / (TWO_PI * t0)
           + (0.4 * math.log(t0) + 4.1) / t0 ** 2)
    return exact_part + remainder, rhs


def local_log_deriv(zl: ZeroList, s: complex, a: float, sigma_plus: float):
    """(sum of 1/(s - rho) over ordinates with |gamma - t| <= a, the O*
    radius within which the true zeta'/zeta(s) must lie).

    Valid for s = sigma + it with -2 <= sigma <= sigma_plus <= 2 and
    t >= max(1000, a); the RH-in-window sharpening is applied when the
    list carries rh_assumed.
    """
    s = complex(s)
    sigma, t = s.real, s.imag
    if not (-2.0 <= sigma <= sigma_plus <= 2.0 and sigma_plus > 1.0):
        raise ValueError("need -2 <= sigma <= sigma_plus <= 2, sigma_plus>1")
    if t < max(1000.0, a):
        raise ValueError("need t >= max(1000, a)")
    if t + a > zl.t_max:
        raise ValueError("window exceeds the list height")
    g = zl.ordinates
    win = g[(g >= t - a) & (g <= t + a)]
    total = complex(np.sum(1.0 / (s - (0.5 + 1j * win)))) if win.size else 0j
    denom = (sigma_plus - 0.5) if zl.rh_assumed else (sigma_plus - 1.0)
    k1 = ((sigma_plus - sigma) / a + a / denom) / math.pi
    k2 = ((sigma_plus - sigma) / a ** 2
          + abs((sigma_plus - sigma) / a ** 2 - 1.0 / denom))
    eps = ((sigma_plus - sigma) / (2.0 * t)
           + ((sigma_plus - sigma) ** 2 / 2.0
              + 1.5 * (sigma_plus - sigma) + 1.0 / (3.0 * math.sqrt(2.0)))
           / t ** 2)
    ld_plus = abs(log_deriv_zeta(complex(sigma_plus)).value.real)
    radius = (k1 * math.log(t / TWO_PI) + k2 * (0.4 * math.log(t) + 4.0)
              + eps + ld_plus)
    return total, radius
