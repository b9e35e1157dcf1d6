"""Shared numerical plumbing: error-tagged values, compensated summation,
adaptive Simpson quadrature, Bernoulli numbers, and output formatting."""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass

EULER_GAMMA = 0.5772156649015328606
TWO_PI = 2.0 * math.pi

# B_2, B_4, ..., B_40 (exact rationals rounded to double).
BERNOULLI_2K = [
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330, 854513.0 / 138,
    -236364091.0 / 2730, 8553103.0 / 6, -23749461029.0 / 870,
    8615841276005.0 / 14322, -7709321041217.0 / 510, 2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190, 2929993913841559.0 / 6,
    -261082718496449122051.0 / 13530,
]


class PoleError(ValueError):
    """Evaluation requested at (or too near) a pole."""


class PrecisionError(ArithmeticError):
    """Requested error budget is unattainable in double precision."""


@dataclass(frozen=True)
class EvalWithError:
    """A computed value together with an upper bound on its absolute error."""

    value: complex
    abs_error: float

    def __post_init__(self):
        if self.abs_error < 0:
            raise ValueError("abs_error must be non-negative")
        if (math.isfinite(abs(self.value))
                and not math.isfinite(self.abs_error)):
            raise ValueError("abs_error must be finite for finite values")

    @property
    def real(self) -> float:
        return self.value.real


class KahanSum:
    """Compensated running sum; cheap insurance against cancellation."""

    __slots__ = ("total", "carry")

    def __init__(self, start: float = 0.0):
        self.total = float(start)
        self.carry = 0.0

    def add(self, term: float) -> None:
        y = term - self.carry
        t = self.total + y
        self.carry = (t - self.total) - y
        self.total = t

    def value(self) -> float:
        return self.total


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-8,
                     max_depth: int = 48):
    """Adaptive Simpson quadrature with absolute tolerance `tol`.

    Works for real- or complex-valued integrands; the recursion splits until
    the Richardson error estimate on each subinterval is below its share of
    the tolerance.
    """
    if not a < b:
        if a == b:
            return 0.0
        return -adaptive_simpson(f, b, a, tol, max_depth)

    def simpson(x0, x2, f0, f1, f2):
        return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2)

    def recurse(x0, x2, f0, f1, f2, whole, tol, depth):
        xm = 0.5 * (x0 + x2)
        xl = 0.5 * (x0 + xm)
        xr = 0.5 * (xm + x2)
        fl = f(xl)
        fr = f(xr)
        left = simpson(x0, xm, f0, fl, f1)
        right = simpson(xm, x2, f1, fr, f2)
        err = (left + right - whole) / 15.0
        if depth <= 0 or abs(err) <= tol:
            return left + right + err
        half = 0.5 * tol
        return (recurse(x0, xm, f0, fl, f1, left, half, depth - 1)
                + recurse(xm, x2, f1, fr, f2, right, half, depth - 1))

    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = simpson(a, b, fa, fm, fb)
    return recurse(a, b, fa, fm, fb, whole, tol, max_depth)


def format_float17(x: float) -> str:
    """Decimal string with 17 significant digits (round-trips a double)."""
    if isinstance(x, (int,)):
        return str(x)
    return f"{x:.16e}"


def atomic_write_text(path: str, text: str) -> None:
    """Write via a temp file in the target directory, then rename."""
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
