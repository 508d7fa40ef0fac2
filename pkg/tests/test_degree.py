import pytest
from hypothesis import given, strategies as st

from stiefeldeg.degree import (NILP_LIMIT, PathConfig, aztec_check, binomial_matrix,
                               count_nilp_bruteforce, degree, degree_table, degree_via_integral,
                               lgv_matrix, main_theorem_endpoints, path_config, regime)
from stiefeldeg.errors import DomainError, SizeError
from stiefeldeg.exact import binomial, det
from stiefeldeg.weights import dim_stiefel, omega, rank

# published degree table, n = k .. 10 per row
TABLE1 = {
    1: [2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    2: [4, 8, 8, 8, 8, 8, 8, 8, 8],
    3: [16, 40, 64, 64, 64, 64, 64, 64],
    4: [80, 384, 704, 1024, 1024, 1024, 1024],
    5: [768, 4768, 14848, 23808, 32768, 32768],
    6: [9536, 111616, 420736, 1064960, 1581056],
    7: [223232, 3433600, 22429696, 66082816],
    8: [6867200, 196968448, 1604859904],
    9: [393936896, 14994641408],
    10: [29989282816],
}

lattice = st.integers(2, 10).flatmap(lambda k: st.tuples(st.just(k), st.integers(k + 1, 2 * k - 1)))


def test_table():
    got = {(d.k, d.n): d.degree for d in degree_table(10)}
    assert len(got) == 55
    for k, row in TABLE1.items():
        for i, v in enumerate(row):
            assert got[k, k + i] == v, (k, k + i)


def test_worked_example():
    res = degree(4, 6)
    assert res.degree == 704
    assert res.regime == "determinant"
    assert res.witnesses["matrix"] == [[35, 10, 1], [15, 6, 1], [1, 1, 1]]
    assert res.witnesses["det"] == 44


def test_regimes():
    assert regime(2, 9) == "bezout"
    assert regime(4, 6) == "determinant"
    assert regime(5, 5) == "orthogonal-group"
    assert regime(1, 1) == "bezout"
    with pytest.raises(DomainError, match="k must be ≤ n"):
        regime(3, 2)


def test_methods():
    assert degree(4, 6, "paths").degree == 704
    assert degree(4, 6, "integral").degree == 704
    assert degree(2, 9).method == "closed-form"
    with pytest.raises(DomainError):
        degree(4, 6, "closed-form")
    with pytest.raises(DomainError):
        degree(2, 9, "paths")
    with pytest.raises(DomainError):
        degree(2, 3, "magic")


def test_seam_runs_both_routes():
    res = degree(4, 7)
    assert res.degree == 1024 and res.witnesses["det"] == 64


@pytest.mark.parametrize("n", range(2, 11))
def test_diagonal(n):
    assert degree(n, n).degree == 2 * degree(n - 1, n).degree == TABLE1[n][0]


@pytest.mark.parametrize("kn", [(k, n) for k in range(2, 9) for n in range(k + 1, 2 * k)])
def test_route_equivalence(kn):
    assert degree(*kn, method="determinant").degree == degree_via_integral(*kn)


@pytest.mark.parametrize("k", range(2, 11))
def test_seam_identity(k):
    assert 2 ** k * det(lgv_matrix(path_config(k, 2 * k - 1))) == 2 ** binomial(k + 1, 2)


@pytest.mark.parametrize("r", range(1, 13))
def test_aztec(r):
    lhs, rhs = aztec_check(r)
    assert lhs == rhs


@given(lattice)
def test_endpoint_lists_match_config(kn):
    k, n = kn
    a, b = main_theorem_endpoints(k, n)
    cfg = path_config(k, n)
    assert a == tuple(-s[0] for s in cfg.starts)
    assert b == tuple(e[1] for e in cfg.ends)


@given(lattice)
def test_binomial_matrix_det(kn):
    assert det(binomial_matrix(*kn)) == det(lgv_matrix(path_config(*kn)))


@given(lattice)
def test_omega_sizes_sum_to_dimension(kn):
    k, n = kn
    r = rank(n)
    assert r * r + sum(omega(k, n)) + sum(omega(n - 1, n)) == dim_stiefel(k, n)


@given(lattice)
def test_degree_is_power_of_two_multiple(kn):
    k, n = kn
    d = degree(k, n).degree
    assert d % 2 ** k == 0 and d <= 2 ** binomial(k + 1, 2)


def test_bruteforce_limit():
    cfg = path_config(10, 12)
    with pytest.raises(SizeError):
        count_nilp_bruteforce(cfg, limit=NILP_LIMIT)
    assert count_nilp_bruteforce(PathConfig(((0, 0),), ((-1, 0),))) == 0


def test_lattice_range():
    with pytest.raises(DomainError):
        path_config(3, 6)
    with pytest.raises(DomainError):
        degree_table(0)
