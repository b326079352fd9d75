"""n-bonacci numbers, their characteristic roots, and closed-form growth values.

The n-bonacci sequence starts with ``n-1`` zeros and a one; each later term
is the sum of the previous ``n``.  Its characteristic polynomial
``chi(x) = x^n - x^(n-1) - ... - 1`` has one real root ``r`` in ``(1, 2)``
and ``n-1`` roots strictly inside the unit disk.  Multiplying by ``x - 1``
gives the sparse form ``P(x) = x^(n+1) - 2 x^n + 1`` used for root finding.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .errors import NumericError, PrecisionRangeError, UsageError

_BINET_DPS = 50


def _check_n(n: int):
    if n < 2:
        raise UsageError(f"n-bonacci depth must be at least 2, got {n}")


def nbonacci_exact(n: int, k: int) -> int:
    """Exact ``F_k`` of the n-bonacci sequence (``F_0 = ... = F_{n-2} = 0, F_{n-1} = 1``)."""
    _check_n(n)
    if k < 0:
        raise UsageError(f"k must be nonnegative, got {k}")
    if k < n - 1:
        return 0
    window = [0] * (n - 1) + [1]
    total = 1
    for _ in range(k - n + 1):
        # rolling sum over the last n terms
        total, window = 2 * total - window[0], window[1:] + [total]
    return window[-1]


def nbonacci_sequence(n: int, K: int) -> list[int]:
    """``[F_0, ..., F_K]``."""
    _check_n(n)
    seq = [0] * (n - 1) + [1]
    while len(seq) <= K:
        seq.append(sum(seq[-n:]))
    return seq[: K + 1]


def chi(n: int, x):
    """Characteristic polynomial ``x^n - x^(n-1) - ... - 1`` at ``x``."""
    value = 1
    for _ in range(n):
        value = value * x - 1
    return value


def chi_prime(n: int, x):
    return n * x ** (n - 1) - sum(j * x ** (j - 1) for j in range(1, n))


def _P(n, x):
    return x ** (n + 1) - 2 * x**n + 1


def _P_prime(n, x):
    return (n + 1) * x**n - 2 * n * x ** (n - 1)


def dominant_root(n: int, tol: float = 1e-12, max_iter: int = 200) -> float:
    """The real root of ``chi`` in ``(1, 2)``.

    Bisection on ``P`` over ``(1 + 1e-9, 2)`` down to a 1e-4 bracket, then
    Newton steps to 1e-13.  The bracket excludes the spurious root ``x = 1``
    of ``P``.  The residual ``|chi(r)|`` must be below ``tol``, or below the
    float evaluation noise of ``chi`` when that is larger.
    """
    _check_n(n)
    if tol <= 0:
        raise UsageError("tol must be positive")
    lo, hi = 1.0 + 1e-9, 2.0
    # P < 0 just right of 1 (P'(1) = 1 - n) and P(2) = 1 > 0
    while hi - lo > 1e-4:
        mid = 0.5 * (lo + hi)
        if _P(n, mid) < 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        dx = _P(n, x) / _P_prime(n, x)
        x -= dx
        if abs(dx) < 1e-13:
            break
    else:
        raise NumericError(f"Newton iteration for n={n} did not converge")
    # one more step lands on the float closest to the root
    x -= _P(n, x) / _P_prime(n, x)
    # Horner rounding bound; exceeds 1e-12 only once n is past ~12
    noise = 4 * (n + 1) * 2.0**-53 * sum(x**i for i in range(n + 1))
    if not 1.0 < x < 2.0 or abs(chi(n, x)) >= max(tol, noise):
        raise NumericError(f"dominant root for n={n} failed residual check: {chi(n, x)!r}")
    return x


@dataclass(frozen=True)
class RootSet:
    """All roots of ``chi`` with the dominant one first."""

    n: int
    dominant: float
    all_roots: tuple[complex, ...]
    residual: float

    def __post_init__(self):
        if len(self.all_roots) != self.n:
            raise NumericError("wrong number of roots")
        if not 1.0 < self.dominant < 2.0:
            raise NumericError(f"dominant root {self.dominant} outside (1, 2)")
        outside = [z for z in self.all_roots if abs(z) > 1.0]
        if len(outside) != 1:
            raise NumericError(f"expected exactly one root outside the unit disk, got {outside}")


def durand_kerner(coeffs, tol: float = 1e-12, max_iter: int = 500,
                  radius: float = 0.9, offset: float = 0.4) -> list[complex]:
    """Simultaneous roots of a monic polynomial (coefficients highest first)."""
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[0] != 1:
        raise UsageError("durand_kerner expects a monic polynomial of degree >= 1")

    def p(z):
        acc = 0j
        for c in coeffs:
            acc = acc * z + c
        return acc

    z = [radius * cmath.exp(1j * (2 * math.pi * i / deg + offset)) for i in range(deg)]
    for _ in range(max_iter):
        moved = 0.0
        new = []
        for i, zi in enumerate(z):
            denom = 1
            for j, zj in enumerate(z):
                if i != j:
                    denom *= zi - zj
            step = p(zi) / denom
            new.append(zi - step)
            moved = max(moved, abs(step))
        z = new
        if moved < tol * 1e-2 and max(abs(p(w)) for w in z) < tol:
            return z
    raise NumericError(f"Durand-Kerner did not converge in {max_iter} iterations")


@lru_cache(maxsize=None)
def all_roots(n: int, tol: float = 1e-12) -> RootSet:
    """Every root of ``chi`` by Durand-Kerner, dominant root replaced by the bisection-Newton value."""
    _check_n(n)
    # offset pi/(golden ratio * 7) is irrational, avoids symmetric stagnation
    zs = durand_kerner([1] + [-1] * n, tol=tol, offset=math.pi / (7 * 1.618033988749895))
    r = dominant_root(n)
    dom = max(range(n), key=lambda i: abs(zs[i]))
    if abs(zs[dom] - r) > 1e-8:
        raise NumericError(f"Durand-Kerner dominant root {zs[dom]} disagrees with {r}")
    rest = sorted((z for i, z in enumerate(zs) if i != dom), key=lambda z: (-abs(z), z.imag))
    roots = (complex(r, 0.0),) + tuple(rest)
    residual = max(abs(chi(n, z)) for z in roots)
    if residual >= tol:
        raise NumericError(f"root residual {residual} exceeds tolerance {tol}")
    return RootSet(n=n, dominant=r, all_roots=roots, residual=residual)


def binet_coefficient(n: int, lam):
    """Coefficient of ``lam^k`` in the Binet sum: ``(lam-1)/((n+1)lam-2n) * lam^(1-n)``."""
    return (lam - 1) / ((n + 1) * lam - 2 * n) * lam ** (1 - n)


@lru_cache(maxsize=None)
def _polished_roots(n: int) -> tuple:
    roots = []
    with mpmath.workdps(_BINET_DPS):
        for z in all_roots(n).all_roots:
            w = mpmath.mpc(z)
            for _ in range(8):
                w -= _P(n, w) / _P_prime(n, w)
            roots.append(w)
    return tuple(roots)


def binet_nbonacci(n: int, k: int) -> float:
    """``F_k`` from the generalized Binet sum over all characteristic roots.

    The roots are Newton-polished and the sum evaluated at 50 significant
    digits; in plain doubles the error reaches ~4e-5 by k = 40.
    """
    _check_n(n)
    if k < 0:
        raise UsageError(f"k must be nonnegative, got {k}")
    with mpmath.workdps(_BINET_DPS):
        total = mpmath.mpc(0)
        for lam in _polished_roots(n):
            total += (lam - 1) / ((n + 1) * lam - 2 * n) * lam ** (k - n + 1)
        if abs(total.imag) >= 1e-6:
            raise NumericError(f"imaginary part {total.imag} did not cancel")
        return float(total.real)


def _dominant_term(n: int, r: float, k: int) -> float:
    return (r - 1) / ((n + 1) * r - 2 * n) * r ** (k - n + 1)


@lru_cache(maxsize=None)
def rnd_precision_range(n: int) -> int:
    """Largest ``k`` for which :func:`rnd_formula` is trusted.

    For every ``k' <= k`` the float dominant term must lie within 1/2 of the
    true value after accounting for both the non-dominant roots' contribution
    and a rounding-error bound of ``8 (k' + n + 8) 2^-53`` relative.
    """
    _check_n(n)
    roots = _polished_roots(n)
    r = dominant_root(n)
    k = 0
    while True:
        with mpmath.workdps(_BINET_DPS):
            rest = sum(
                (lam - 1) / ((n + 1) * lam - 2 * n) * lam ** (k - n + 1) for lam in roots[1:]
            )
            rest = float(abs(rest))
        float_err = 8 * (k + n + 8) * 2.0**-53 * abs(_dominant_term(n, r, k))
        # dominant_root is accurate to a few ulps; propagate through the power
        root_err = abs(k - n + 1) * 4 * 2.0**-53 * abs(_dominant_term(n, r, k))
        if rest + float_err + root_err >= 0.5:
            return k - 1
        k += 1


def rnd_formula(n: int, k: int) -> int:
    """``F_k`` as the nearest integer to the dominant Binet term.

    Raises :class:`PrecisionRangeError` beyond :func:`rnd_precision_range`.
    """
    _check_n(n)
    if k < 0:
        raise UsageError(f"k must be nonnegative, got {k}")
    limit = rnd_precision_range(n)
    if k > limit:
        raise PrecisionRangeError(
            f"k={k} exceeds the float precision range k <= {limit} for n={n}"
        )
    return int(math.floor(_dominant_term(n, dominant_root(n), k) + 0.5))


FAMILIES = ("z3z3", "pow2", "zs", "zm_asymptotic")


def closed_form_xi(family: str, k: int, s: int | None = None, m: int | None = None):
    """Closed-form growth value for one of the coset-group families.

    ``z3z3``          Z/3 * Z/3: ``F_{k+3} - 1`` (Fibonacci).
    ``pow2``          (Z/2)^{*3}: ``2^k``.
    ``zs``            (Z/2)^{*s}: ``((s-1)^k - 1)/(s-2) + 1`` for s >= 3, ``k + 1`` for s = 2.
    ``zm_asymptotic`` Z/m * Z/m, m >= 3: ``r^{k+1} / (m r - 2(m-1))`` with r the
                      dominant (m-1)-bonacci root.  A float estimate.
    """
    if k < 0:
        raise UsageError(f"k must be nonnegative, got {k}")
    if family == "z3z3":
        return nbonacci_exact(2, k + 3) - 1
    if family == "pow2":
        return 2**k
    if family == "zs":
        if s is None or s < 2:
            raise UsageError("family 'zs' needs s >= 2")
        if s == 2:
            return k + 1
        return ((s - 1) ** k - 1) // (s - 2) + 1
    if family == "zm_asymptotic":
        if m is None or m < 3:
            raise UsageError("family 'zm_asymptotic' needs m >= 3")
        r = dominant_root(m - 1)
        return r ** (k + 1) / (m * r - 2 * (m - 1))
    raise UsageError(f"unknown family {family!r}; expected one of {FAMILIES}")


def s_counts_zm(m: int, K: int) -> list[int]:
    """New-word counts for Z/m * Z/m: ``S_k = F^{(m-1)}_{k+m-2}``."""
    if m < 3:
        raise UsageError(f"m must be at least 3, got {m}")
    seq = nbonacci_sequence(m - 1, K + m - 2)
    return seq[m - 2 :]
