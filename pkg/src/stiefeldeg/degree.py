"""Degree of the Stiefel variety St(k, n) = {A in Mat_{k x n} : A A^T = id_k}.

Regimes:

* ``n >= 2k - 1``: complete intersection of ``C(k+1, 2)`` quadrics, degree
  ``2 ** C(k+1, 2)``.
* ``k + 1 <= n <= 2k - 1``: ``2**k * L`` where ``L`` counts non-intersecting
  lattice paths, i.e. the determinant of a binomial path matrix.
* ``n == k`` (the orthogonal group, two components): ``2 * deg St(n-1, n)``.

At the seam ``n = 2k - 1`` both of the first two apply and are compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import kernels
from .errors import ConsistencyError, DomainError, SizeError
from .exact import Matrix, binomial, det, factorial
from .symb import integral_product_simplex
from .volumes import vol_closed, vol_so_n
from .weights import dim_stiefel, omega_closed, rank

REGIMES = ("bezout", "determinant", "orthogonal-group")
METHODS = ("auto", "closed-form", "determinant", "paths", "integral")

NILP_LIMIT = 10 ** 6


@dataclass(frozen=True)
class PathConfig:
    starts: tuple
    ends: tuple

    def __post_init__(self):
        if len(self.starts) != len(self.ends):
            raise DomainError("start and end sets differ in size")


@dataclass(frozen=True)
class DegreeResult:
    k: int
    n: int
    degree: int
    regime: str
    method: str
    witnesses: dict = field(default_factory=dict, compare=False)


def _check_kn(k: int, n: int) -> None:
    if k > n:
        raise DomainError("k must be ≤ n")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")


def _check_lattice_range(k: int, n: int) -> None:
    if not (k + 1 <= n <= 2 * k - 1):
        raise DomainError(f"lattice-path formula needs k+1 <= n <= 2k-1, got k={k}, n={n}")


def regime(k: int, n: int) -> str:
    _check_kn(k, n)
    if n >= 2 * k - 1:
        return "bezout"
    if n == k:
        return "orthogonal-group"
    return "determinant"


def path_config(k: int, n: int) -> PathConfig:
    _check_lattice_range(k, n)
    r = rank(n)
    om = omega_closed(k, n)
    starts = tuple((-(om[j] + r - 1 - j), 0) for j in range(r))
    ends = tuple((0, n - 2 * (j + 1)) for j in range(r))
    return PathConfig(starts, ends)


def main_theorem_endpoints(k: int, n: int) -> tuple[tuple, tuple]:
    """The ``(a_i)``, ``(b_j)`` lists written out directly in terms of k, n."""
    _check_lattice_range(k, n)
    r = rank(n)
    a = [k - i for i in range(1, n - k + 1)]
    a += list(range(2 * k - n - 2, n - 2 * r - 1, -2))[: r - (n - k)]
    b = [n - 2 * j for j in range(1, r + 1)]
    return tuple(a), tuple(b)


def count_paths(start, end) -> int:
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        return 0
    return binomial(dx + dy, dx)


def lgv_matrix(cfg: PathConfig) -> Matrix:
    return Matrix.from_rows([[count_paths(a, b) for b in cfg.ends] for a in cfg.starts])


def count_nilp_bruteforce(cfg: PathConfig, limit: int = NILP_LIMIT,
                          backend: Optional[str] = None) -> int:
    """Count vertex-disjoint path tuples ``starts[i] -> ends[i]`` by depth-first search.

    Refuses instances where the product of the per-pair path counts (the
    size of the unpruned search) exceeds ``limit``.
    """
    counts = [count_paths(a, b) for a, b in zip(cfg.starts, cfg.ends)]
    size = 1
    for c in counts:
        size *= c
    if size > limit:
        raise SizeError(f"search space {size} exceeds limit {limit}")
    if size == 0:
        return 0
    return kernels.count_nilp(cfg.starts, cfg.ends, counts, backend=backend)


def binomial_matrix(k: int, n: int) -> Matrix:
    """Path matrix written through the two Omega partitions directly."""
    _check_lattice_range(k, n)
    r = rank(n)
    om = omega_closed(k, n)
    om_top = omega_closed(n - 1, n)
    return Matrix.from_rows([
        [binomial(om[i] + om_top[j] + 2 * r - 2 - i - j, om[i] + r - 1 - i) for j in range(r)]
        for i in range(r)])


def bezout_degree(k: int) -> int:
    return 2 ** binomial(k + 1, 2)


def _lattice_witness(k: int, n: int) -> dict:
    cfg = path_config(k, n)
    m = lgv_matrix(cfg)
    L = det(m)
    L2 = det(binomial_matrix(k, n))
    if L != L2:
        raise ConsistencyError(f"path matrix det {L} != binomial det {L2} at ({k},{n})")
    return {"starts": cfg.starts, "ends": cfg.ends, "matrix": m.to_rows(), "det": L}


def degree_via_integral(k: int, n: int) -> int:
    """``N! * int vol(GT to SO(n-k)) * vol(GT to SO(1))`` over the weight region, exactly."""
    _check_lattice_range(k, n)
    r = rank(n)
    N = dim_stiefel(k, n)
    v1 = vol_closed(k, n)
    v2 = vol_so_n(n)
    if v2 != vol_closed(n - 1, n):
        raise ConsistencyError(f"SO({n}) volume formulas disagree")
    # the weight region is 1/r! (n odd) or 2/r! (n even) of the simplex
    region = Fraction(2 if n % 2 == 0 else 1, factorial(r))
    value = (factorial(N) * v1.scalar * v2.scalar * region
             * integral_product_simplex(v1.omega, v2.omega, r))
    if value.denominator != 1:
        raise ConsistencyError(f"non-integral degree {value} at ({k},{n})")
    return int(value)


def _lattice_degree(k: int, n: int, method: str) -> tuple[int, str, dict]:
    if method in ("auto", "determinant"):
        w = _lattice_witness(k, n)
        w["path_count"] = w["det"]
        return 2 ** k * w["det"], "determinant", w
    if method == "paths":
        cfg = path_config(k, n)
        L = count_nilp_bruteforce(cfg)
        return 2 ** k * L, "paths", {"starts": cfg.starts, "ends": cfg.ends, "path_count": L}
    if method == "integral":
        return degree_via_integral(k, n), "integral", {}
    raise DomainError(f"method {method!r} does not apply at (k,n)=({k},{n})")


def degree(k: int, n: int, method: str = "auto") -> DegreeResult:
    _check_kn(k, n)
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    reg = regime(k, n)

    if reg == "orthogonal-group":
        sub = degree(n - 1, n, method)
        w = dict(sub.witnesses)
        w["st_n_minus_1_n"] = sub.degree
        return DegreeResult(k, n, 2 * sub.degree, reg, sub.method, w)

    if reg == "bezout":
        value = bezout_degree(k)
        seam = k + 1 <= n == 2 * k - 1
        if method in ("auto", "closed-form") and not seam:
            return DegreeResult(k, n, value, reg, "closed-form", {})
        if not seam:
            raise DomainError(f"method {method!r} needs k+1 <= n <= 2k-1, got k={k}, n={n}")
        other, used, w = _lattice_degree(k, n, "determinant" if method == "closed-form" else method)
        if other != value:
            raise ConsistencyError(f"seam mismatch at ({k},{n}): {other} != {value}")
        return DegreeResult(k, n, value, reg, "closed-form" if method in ("auto", "closed-form") else used, w)

    if method == "closed-form":
        raise DomainError(f"no closed form for (k,n)=({k},{n})")
    value, used, w = _lattice_degree(k, n, method)
    return DegreeResult(k, n, value, reg, used, w)


def aztec_check(r: int) -> tuple[int, int]:
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    lhs = 2 ** binomial(r + 1, 2)
    rhs = det([[binomial(2 * i, j) for j in range(1, r + 1)] for i in range(1, r + 1)])
    return lhs, rhs


def degree_table(max_n: int) -> list[DegreeResult]:
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    return [degree(k, n) for k in range(1, max_n + 1) for n in range(k, max_n + 1)]
