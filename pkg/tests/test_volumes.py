from fractions import Fraction

import pytest

from stiefeldeg.errors import DomainError, SizeError
from stiefeldeg.gt import gt_polytope_dim
from stiefeldeg.symb import MultiPoly, lam_vars
from stiefeldeg.volumes import vol_closed, vol_so_n, vol_symbolic
from stiefeldeg.weights import rank

EX47 = ("1/6*l1^3*l2^2*l3 - 1/6*l1^3*l2*l3^2 - 1/6*l1^2*l2^3*l3 + 1/6*l1^2*l2*l3^3"
        " + 1/6*l1*l2^3*l3^2 - 1/6*l1*l2^2*l3^3")

CELLS = [(k, n) for k in range(2, 13) for n in range(k + 1, 2 * k)
         if gt_polytope_dim(k, n) <= 12]


def test_example_47():
    vf = vol_closed(4, 7)
    assert str(vf) == "1/6 · a_(1,1,1)"
    assert str(vf.poly()) == EX47
    assert str(vol_symbolic(4, 7)) == EX47
    assert vf.value((3, 2, 1)) == 2


def test_small_cases():
    assert str(vol_symbolic(2, 3)) == "2*l1"
    assert str(vol_symbolic(3, 5)) == "l1^2*l2 - l1*l2^2"


@pytest.mark.parametrize("kn", CELLS)
def test_symbolic_matches_closed(kn):
    assert vol_symbolic(*kn) == vol_closed(*kn).poly()


@pytest.mark.parametrize("kn", CELLS)
def test_total_degree_is_polytope_dimension(kn):
    assert vol_symbolic(*kn).total_degree() == gt_polytope_dim(*kn)


@pytest.mark.parametrize("kn", [(k, n) for k in range(1, 11) for n in range(k, 2 * k)])
def test_positive_at_staircase(kn):
    r = rank(kn[1])
    assert vol_closed(*kn).value(tuple(range(r, 0, -1))) > 0


@pytest.mark.parametrize("n", range(3, 13))
def test_so_n_formula_is_top_cell(n):
    assert vol_so_n(n) == vol_closed(n - 1, n)


def test_errors():
    with pytest.raises(DomainError):
        vol_closed(2, 4)
    with pytest.raises(DomainError):
        vol_symbolic(3, 3)
    with pytest.raises(DomainError):
        vol_closed(4, 7).value((1, 2))
    big = next((k, n) for k in range(2, 20) for n in range(k + 1, 2 * k)
               if gt_polytope_dim(k, n) > 12)
    with pytest.raises(SizeError):
        vol_symbolic(*big)
