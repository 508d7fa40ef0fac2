"""Self-checks behind ``stiefeldeg verify``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .degree import (aztec_check, bezout_degree, count_nilp_bruteforce, degree,
                     degree_table, degree_via_integral, lgv_matrix, path_config)
from .exact import det
from .gt import count_invariants, dim_irrep, enumerate_fillings, gt_polytope_dim
from .reference import KNOWN_OMEGAS, known_degree
from .volumes import vol_closed, vol_symbolic
from .weights import omega_closed, omega_recursive


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _table() -> str:
    bad = [(d.k, d.n, d.degree) for d in degree_table(10) if d.degree != known_degree(d.k, d.n)]
    assert not bad, f"mismatched cells {bad}"
    return "55 cells"


def _aztec() -> str:
    for r in range(1, 11):
        lhs, rhs = aztec_check(r)
        assert lhs == rhs, f"r={r}: {lhs} != {rhs}"
    return "r = 1..10"


def _omega() -> str:
    for k in range(1, 13):
        for n in range(k, 2 * k):
            assert omega_recursive(k, n) == omega_closed(k, n), (k, n)
    for (k, n), om in KNOWN_OMEGAS.items():
        assert omega_closed(k, n) == om, (k, n)
    return f"k <= 12, {len(KNOWN_OMEGAS)} tabulated cells"


def _seam() -> str:
    for k in range(2, 11):
        L = det(lgv_matrix(path_config(k, 2 * k - 1)))
        assert 2 ** k * L == bezout_degree(k), k
    return "k = 2..10"


def _volumes() -> str:
    cells = 0
    for k in range(2, 13):
        for n in range(k + 1, 2 * k):
            if gt_polytope_dim(k, n) <= 12:
                assert vol_symbolic(k, n) == vol_closed(k, n).poly(), (k, n)
                cells += 1
    return f"{cells} cells with <= 12 free labels"


def _nilp() -> str:
    for k, n in [(3, 4), (4, 5), (4, 6), (5, 6), (5, 7)]:
        cfg = path_config(k, n)
        assert count_nilp_bruteforce(cfg) == det(lgv_matrix(cfg)), (k, n)
    return "5 configurations"


def _routes() -> str:
    for k in range(2, 9):
        for n in range(k + 1, 2 * k):
            d = degree(k, n, "determinant").degree
            assert d == degree_via_integral(k, n), (k, n)
    return "k <= 8"


def _dims() -> str:
    for n in range(3, 9):
        assert dim_irrep(n, (1,) + (0,) * (n // 2 - 1)) == n, n
    assert dim_irrep(5, (1, 1)) == 10
    for n, lam in [(7, (2, 1, 1)), (7, (3, 1, 0)), (6, (2, 2, -1))]:
        for m in range(0, 7):
            brute = sum(1 for _ in enumerate_fillings(n, lam, m))
            assert count_invariants(n, lam, m) == brute, (n, lam, m)
    return "defining reps, adjoint of SO(5), DP vs enumeration samples"


FAST: list[tuple[str, Callable[[], str]]] = [
    ("degree table n <= 10", _table),
    ("aztec identity", _aztec),
    ("omega recursion vs closed form", _omega),
]
FULL = FAST + [
    ("regime seam n = 2k-1", _seam),
    ("symbolic vs closed-form volumes", _volumes),
    ("brute-force paths vs LGV determinant", _nilp),
    ("determinant vs integral route", _routes),
    ("representation dimensions", _dims),
]


def run_checks(level: str = "fast") -> list[CheckResult]:
    if level not in ("fast", "full"):
        raise ValueError(f"unknown level {level!r}")
    results = []
    for name, check in (FAST if level == "fast" else FULL):
        try:
            results.append(CheckResult(name, True, check()))
        except Exception as exc:  # report, keep going
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
