"""Dominant SO(n) weights, the Omega partitions and dimension counts."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .exact import binomial

Partition = tuple  # weakly decreasing tuple of ints, stored at full rank


def rank(n: int) -> int:
    return n // 2


def is_dominant(n: int, lam: Sequence[int]) -> bool:
    """Whether ``lam`` is an integral dominant weight of SO(n)."""
    r = rank(n)
    if len(lam) != r or any(not isinstance(x, int) for x in lam):
        return False
    if r == 0:
        return True
    if any(lam[i] < lam[i + 1] for i in range(r - 2)):
        return False
    if n % 2:
        return all(lam[i] >= lam[i + 1] for i in range(r - 1)) and lam[-1] >= 0
    if r == 1:
        return True  # SO(2): any integer
    return lam[r - 2] >= abs(lam[r - 1])


def check_dominant(n: int, lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if not is_dominant(n, lam):
        raise DomainError(f"{lam} is not a dominant integral weight of SO({n})")
    return lam


def _check_omega_range(k: int, n: int) -> None:
    if not (k >= 1 and k <= n <= 2 * k - 1):
        raise DomainError(f"Omega_(k,n) needs k <= n <= 2k-1, got k={k}, n={n}")


@lru_cache(maxsize=None)
def omega_recursive(k: int, n: int) -> Partition:
    _check_omega_range(k, n)
    if n == 2 * k - 1:
        return (1,) * (k - 1)
    prev = omega_recursive(k - 1, n - 1)
    if n % 2 == 0:
        return prev + (0,)
    return tuple(x + 1 for x in prev)


def omega_closed(k: int, n: int) -> Partition:
    _check_omega_range(k, n)
    r = rank(n)
    stop = 0 if n % 2 == 0 else 1
    return (k - r,) * (n - k) + tuple(range(k - r - 1, stop - 1, -1))


def omega(k: int, n: int) -> Partition:
    return omega_closed(k, n)


def _check_kn(k: int, n: int) -> None:
    if k < 1 or k > n:
        raise DomainError("k must be ≤ n" if k > n else f"k must be >= 1, got {k}")


def dim_stiefel(k: int, n: int) -> int:
    _check_kn(k, n)
    return binomial(n, 2) - binomial(n - k, 2)


def codim_stiefel(k: int, n: int) -> int:
    _check_kn(k, n)
    return binomial(k + 1, 2)


def dim_z_infinity(k: int, n: int) -> int:
    """Dimension of the part at infinity of the naive homogenization.

    Maximum over ``1 <= s <= min(k, n // 2)`` of
    ``n*s - (3*s*s + s)/2 + k*s - 1``; ``-1`` (empty) when no ``s`` exists.
    """
    _check_kn(k, n)
    s_max = min(k, n // 2)
    if s_max < 1:
        return -1
    return max(n * s - (3 * s * s + s) // 2 + k * s - 1 for s in range(1, s_max + 1))
