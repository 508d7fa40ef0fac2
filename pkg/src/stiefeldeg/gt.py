"""Gelfand-Tsetlin patterns for the chain SO(m) < SO(m+1) < ... < SO(n).

A pattern of shape (SO(m), SO(n)) has one row per group SO(i), i = n..m,
with ``i // 2`` boxes.  Integer fillings with the top row fixed to a weight
``lam`` and the bottom row fixed to zero are the branching chains from
``lam`` down to the trivial SO(m) weight, so their number is
``dim [V_lam]^SO(m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Optional, Sequence

from . import kernels
from ._kernels_py import interlace_box
from .errors import DomainError
from .exact import binomial
from .weights import check_dominant, rank


@dataclass(frozen=True)
class GTShape:
    n: int
    m: int

    def __post_init__(self):
        if not 0 <= self.m <= self.n:
            raise DomainError(f"GT shape needs 0 <= m <= n, got m={self.m}, n={self.n}")

    @property
    def groups(self) -> tuple[int, ...]:
        return tuple(range(self.n, self.m - 1, -1))

    @property
    def rows(self) -> tuple[tuple[int, int], ...]:
        """``(group size, box count)`` per row, top first."""
        return tuple((g, g // 2) for g in self.groups)

    @cached_property
    def forced_zero(self) -> tuple[tuple[bool, ...], ...]:
        """Boxes that every filling labels 0.

        The bottom row is zero by definition.  A zero in box ``j`` of a row
        forces box ``j + 1`` of the row above (its north-east neighbour)
        down to zero, since that neighbour is bounded by it from above and
        by 0 from below.
        """
        rows = self.rows
        mask = [None] * len(rows)
        mask[-1] = (True,) * rows[-1][1]
        for t in range(len(rows) - 2, -1, -1):
            below = mask[t + 1]
            mask[t] = tuple(j >= 1 and j - 1 < len(below) and below[j - 1]
                            for j in range(rows[t][1]))
        return tuple(mask)

    def free_boxes(self) -> list[tuple[int, int]]:
        """``(row, column)`` of boxes below the top row not forced to zero."""
        return [(t, j)
                for t, row in enumerate(self.forced_zero) if t > 0
                for j, forced in enumerate(row) if not forced]


@dataclass(frozen=True)
class GTFilling:
    shape: GTShape
    labels: tuple[tuple[int, ...], ...]

    def __str__(self):
        width = max((len(str(x)) for row in self.labels for x in row), default=1)
        lines = []
        for t, ((g, _), row) in enumerate(zip(self.shape.rows, self.labels)):
            cells = " ".join(str(x).rjust(width) for x in row)
            lines.append(f"{'SO(' + str(g) + ')':>7}  " + " " * t * (width // 2 + 1) + cells)
        return "\n".join(lines)


def branch(n: int, lam: Sequence[int]) -> list[tuple[int, ...]]:
    """SO(n-1) weights occurring in the restriction of V_lam (multiplicity one)."""
    lam = check_dominant(n, lam)
    lo, hi = interlace_box(n, lam)
    return list(product(*(range(a, b + 1) for a, b in zip(lo, hi))))


def _check_inputs(n: int, lam: Sequence[int], m: int) -> tuple[GTShape, tuple]:
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    return GTShape(n, m), check_dominant(n, lam)


def _row_bounds(shape: GTShape, lam: tuple) -> Optional[tuple[list, list]]:
    """Per-row label intervals: interlacing propagated down, forced zeros pinned."""
    mask = shape.forced_zero
    los, his = [list(lam)], [list(lam)]
    for t, forced in enumerate(mask):
        if t > 0:
            group = shape.rows[t - 1][0]
            plo, phi = los[-1], his[-1]
            r = len(plo)
            lo, hi = [], []
            if group % 2:
                for j in range(r - 1):
                    lo.append(plo[j + 1])
                    hi.append(phi[j])
                if r:
                    lo.append(-phi[r - 1])
                    hi.append(phi[r - 1])
            else:
                for j in range(r - 2):
                    lo.append(plo[j + 1])
                    hi.append(phi[j])
                if r >= 2:
                    a, b = plo[r - 1], phi[r - 1]
                    lo.append(0 if a <= 0 <= b else min(abs(a), abs(b)))
                    hi.append(phi[r - 2])
            los.append(lo)
            his.append(hi)
        lo, hi = los[t], his[t]
        for j, f in enumerate(forced):
            if f:
                if not lo[j] <= 0 <= hi[j]:
                    return None
                lo[j] = hi[j] = 0
        if any(a > b for a, b in zip(lo, hi)):
            return None
    return los, his


def _check_signs(shape: GTShape, labels) -> None:
    for (g, _), row in zip(shape.rows, labels):
        signed_last = g % 2 == 0
        for j, x in enumerate(row):
            assert x >= 0 or (signed_last and j == len(row) - 1), (
                f"negative label {x} outside the last box of an even row")


def enumerate_fillings(n: int, lam: Sequence[int], m: int) -> Iterator[GTFilling]:
    """All integer fillings, top row first, leftmost box first, ascending labels."""
    shape, lam = _check_inputs(n, lam, m)
    mask = shape.forced_zero
    groups = shape.groups
    last = len(groups) - 1

    def rec(t, rows):
        if t == last:
            yield GTFilling(shape, tuple(rows))
            return
        lo, hi = interlace_box(groups[t], rows[-1])
        ranges = [range(0, 1) if mask[t + 1][j] else range(a, b + 1)
                  for j, (a, b) in enumerate(zip(lo, hi))]
        for j, (a, b) in enumerate(zip(lo, hi)):
            if mask[t + 1][j] and not a <= 0 <= b:
                return
        for child in product(*ranges):
            yield from rec(t + 1, rows + [child])

    if any(f and x != 0 for f, x in zip(mask[0], lam)):
        return
    for filling in rec(0, [lam]):
        _check_signs(shape, filling.labels)
        yield filling


def count_invariants(n: int, lam: Sequence[int], m: int, backend: Optional[str] = None) -> int:
    """``dim [V_lam]^SO(m)``, by dynamic programming over row weights."""
    shape, lam = _check_inputs(n, lam, m)
    bounds = _row_bounds(shape, lam)
    if bounds is None:
        return 0
    los, his = bounds
    return kernels.count_chains(shape.groups, los, his, backend=backend)


def dim_irrep(n: int, lam: Sequence[int], backend: Optional[str] = None) -> int:
    if n < 1:
        raise DomainError(f"SO({n}) is not defined here")
    return count_invariants(n, lam, 1, backend=backend)


def gt_polytope_dim_formula(k: int, n: int) -> int:
    r = rank(n)
    if n % 2 == 0:
        return r * (2 * k - r) - binomial(k + 1, 2)
    return r * (2 * k - r - 1) - binomial(k, 2)


def gt_polytope_dim(k: int, n: int) -> int:
    """Dimension of GT^SO(n)_SO(n-k)(lam) for generic lam, for n <= 2k - 1.

    Computed both from the closed formula and by counting the boxes of the
    pattern that are not forced to zero; the two must agree.
    """
    if not (1 <= k <= n <= 2 * k - 1):
        raise DomainError(f"polytope dimension formula needs k <= n <= 2k-1, got k={k}, n={n}")
    counted = len(GTShape(n, n - k).free_boxes())
    formula = gt_polytope_dim_formula(k, n)
    if counted != formula:
        raise AssertionError(f"free boxes {counted} != formula {formula} at (k,n)=({k},{n})")
    return formula
