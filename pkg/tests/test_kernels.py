from itertools import product

import pytest
from hypothesis import given, strategies as st

from stiefeldeg import kernels
from stiefeldeg.degree import PathConfig, count_nilp_bruteforce, lgv_matrix, path_config
from stiefeldeg.exact import det
from stiefeldeg.gt import count_invariants, enumerate_fillings

backends = pytest.mark.parametrize("backend", kernels.BACKENDS)


def naive_paths(starts, ends):
    # oracle: every tuple of paths as explicit vertex lists, then check disjointness
    def paths(a, b):
        dx, dy = b[0] - a[0], b[1] - a[1]
        if dx < 0 or dy < 0:
            return []
        out = []
        for steps in product("EN", repeat=dx + dy):
            if steps.count("E") != dx:
                continue
            x, y = a
            pts = [(x, y)]
            for s in steps:
                x, y = (x + 1, y) if s == "E" else (x, y + 1)
                pts.append((x, y))
            out.append(pts)
        return out
    total = 0
    for tup in product(*(paths(a, b) for a, b in zip(starts, ends))):
        seen = [p for path in tup for p in path]
        total += len(seen) == len(set(seen))
    return total


@backends
def test_nilp_worked_example(backend):
    cfg = path_config(4, 6)
    assert count_nilp_bruteforce(cfg, backend=backend) == 44


@backends
@pytest.mark.parametrize("kn", [(3, 4), (4, 5), (4, 6), (5, 6), (5, 7)])
def test_nilp_equals_lgv(backend, kn):
    cfg = path_config(*kn)
    assert count_nilp_bruteforce(cfg, backend=backend) == det(lgv_matrix(cfg))


points = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@backends
@given(st.lists(st.tuples(points, points), min_size=1, max_size=3))
def test_nilp_matches_naive_oracle(backend, pairs):
    starts = tuple(a for a, _ in pairs)
    ends = tuple(b for _, b in pairs)
    cfg = PathConfig(starts, ends)
    assert count_nilp_bruteforce(cfg, backend=backend) == naive_paths(starts, ends)


@backends
def test_chains_worked_example(backend):
    assert count_invariants(7, (6, 2, 2), 3, backend=backend) == 390


@backends
@pytest.mark.parametrize("args", [(8, (3, 2, 1, 1), 4), (8, (2, 2, 1, -1), 5), (7, (4, 2, 1), 2)])
def test_chains_match_enumeration(backend, args):
    assert count_invariants(*args, backend=backend) == sum(1 for _ in enumerate_fillings(*args))


def test_backends_agree_on_large_counts():
    if not kernels.HAVE_COMPILED:
        pytest.skip("compiled kernels not built")
    lam = (60, 40, 20)
    assert (count_invariants(7, lam, 3, backend="python")
            == count_invariants(7, lam, 3, backend="compiled"))


def test_backend_selection():
    assert kernels._pick("python", 10) is kernels._kernels_py
    with pytest.raises(ValueError):
        kernels._pick("fortran", 10)
    if kernels.HAVE_COMPILED:
        assert kernels._pick(None, 10) is kernels._compiled
        # too big for int64: auto falls back, explicit compiled refuses
        assert kernels._pick(None, 1 << 70) is kernels._kernels_py
        with pytest.raises(OverflowError):
            kernels._pick("compiled", 1 << 70)


def test_huge_count_stays_exact():
    # bound exceeds 2^62 so the unbounded backend is used
    c = count_invariants(9, (40, 30, 20, 10), 1)
    assert c > 0 and isinstance(c, int)


def test_fallback_when_extension_missing():
    import subprocess
    import sys
    code = ("import sys; sys.modules['stiefeldeg._kernels'] = None\n"
            "from stiefeldeg import kernels, degree\n"
            "assert not kernels.HAVE_COMPILED and kernels.BACKENDS == ('python',)\n"
            "print(degree(4, 6).degree)")
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "704"
