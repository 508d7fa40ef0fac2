"""Volumes of Gelfand-Tsetlin polytopes GT^SO(n)_SO(n-k)(lam) for n <= 2k - 1.

The closed forms are ``scalar * a_omega(lam)``; ``vol_symbolic`` recomputes
the same polynomial by nested integration over the pattern and serves as
the independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import DomainError, SizeError
from .exact import factorial
from .gt import GTShape
from .symb import MultiPoly, alt_poly, alt_value, integrate_poly, lam_vars
from .weights import omega_closed, rank


@dataclass(frozen=True)
class VolumeFormula:
    scalar: Fraction
    omega: tuple
    rank: int

    def __post_init__(self):
        assert self.scalar > 0
        assert len(self.omega) == self.rank

    def poly(self) -> MultiPoly:
        return alt_poly(self.omega, self.rank) * self.scalar

    def value(self, lam: Sequence) -> Fraction:
        if len(lam) != self.rank:
            raise DomainError(f"need {self.rank} coordinates, got {len(lam)}")
        return self.scalar * alt_value(self.omega, lam)

    def __str__(self):
        return f"{self.scalar} · a_({','.join(map(str, self.omega))})"


def vol_closed(k: int, n: int) -> VolumeFormula:
    if not (1 <= k <= n <= 2 * k - 1):
        raise DomainError(f"closed volume formula needs k <= n <= 2k-1, got k={k}, n={n}")
    r = rank(n)
    om = omega_closed(k, n)
    denom = prod(factorial(om[j] + r - 1 - j) for j in range(r))
    return VolumeFormula(Fraction(2 ** (k - r), denom), om, r)


def vol_so_n(n: int) -> VolumeFormula:
    """Volume of GT^SO(n)_SO(1)(lam), the polytope counting dim V_lam."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    r = rank(n)
    if n % 2 == 0:
        scalar = Fraction(2 ** (r - 1), prod(factorial(2 * (r - j)) for j in range(1, r + 1)))
        om = tuple(range(r - 1, -1, -1))
    else:
        scalar = Fraction(2 ** r, prod(factorial(2 * (r - j) + 1) for j in range(1, r + 1)))
        om = tuple(range(r, 0, -1))
    return VolumeFormula(scalar, om, r)


def box_name(t: int, j: int) -> str:
    return f"m{t}_{j + 1}"


def vol_symbolic(k: int, n: int, max_free: int = 12) -> MultiPoly:
    """Volume polynomial by nested integration over the free pattern labels.

    Rows are integrated bottom-up so every bound only involves labels of the
    row above.  The rightmost label of an even row SO(2s) ranges over
    ``[-x, x]``; it is integrated over ``[0, x]`` and doubled, which lets the
    ``|.|`` bound of the next odd row be dropped.
    """
    if not (2 <= k + 1 <= n <= 2 * k - 1):
        raise DomainError(f"symbolic volume needs k+1 <= n <= 2k-1, got k={k}, n={n}")
    shape = GTShape(n, n - k)
    free = shape.free_boxes()
    if len(free) > max_free:
        raise SizeError(f"{len(free)} free labels exceed the limit of {max_free}")
    r = rank(n)
    mask = shape.forced_zero
    top = lam_vars(r)

    def label(t, j):
        if mask[t][j]:
            return MultiPoly.constant(0)
        if t == 0:
            return MultiPoly.var(top[j])
        return MultiPoly.var(box_name(t, j))

    result = MultiPoly.constant(1)
    doubled = 0
    for t, j in sorted(free, reverse=True):
        group = shape.groups[t - 1]
        s = len(mask[t - 1])
        if group % 2 and j == s - 1:
            lower, upper = MultiPoly.constant(0), label(t - 1, j)
            factor = 2
            doubled += 1
        else:
            lower, upper = label(t - 1, j + 1), label(t - 1, j)
            factor = 1
        result = integrate_poly(result, box_name(t, j), lower, upper) * factor
    if doubled != k - r:
        raise AssertionError(f"{doubled} doubled integrals, expected k - r = {k - r}")
    return result.extend(top)
