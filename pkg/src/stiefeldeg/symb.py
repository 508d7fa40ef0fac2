"""Multivariate polynomials with rational coefficients, alternating
polynomials ``a_mu`` and exact iterated integration."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import prod
from typing import Iterable, Mapping, Sequence, Union

from .errors import DimensionError, DomainError
from .exact import det, factorial

Scalar = Union[int, Fraction]


def lam_vars(r: int) -> tuple[str, ...]:
    return tuple(f"l{i}" for i in range(1, r + 1))


class MultiPoly:
    """Polynomial stored as ``{exponent tuple: Fraction}`` over ordered variables.

    Zero coefficients are never stored.  Binary operations on polynomials
    with different variable lists first extend both to the union (left
    operand's order first).
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar] = ()):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise DomainError(f"repeated variable in {self.variables}")
        nv = len(self.variables)
        clean = {}
        for exps, c in dict(terms).items():
            if len(exps) != nv:
                raise DimensionError(f"exponent {exps} does not match {nv} variables")
            if c:
                clean[tuple(exps)] = Fraction(c)
        self.terms = clean

    # construction ------------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar, variables: Sequence[str] = ()) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] = ()) -> "MultiPoly":
        variables = tuple(variables) or (name,)
        if name not in variables:
            variables = variables + (name,)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(variables, {tuple(e): 1})

    @classmethod
    def coerce(cls, other, variables: Sequence[str] = ()) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other, variables)
        raise TypeError(f"cannot make a polynomial from {other!r}")

    # variable bookkeeping ---------------------------------------------
    def extend(self, variables: Sequence[str]) -> "MultiPoly":
        """Same polynomial over ``variables`` (a superset of the used ones)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        for v, e in zip(self.variables, zip(*self.terms) if self.terms else ()):
            if v not in pos and any(e):
                raise DomainError(f"variable {v} in use, cannot drop it")
        idx = [(pos[v], i) for i, v in enumerate(self.variables) if v in pos]
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for p, i in idx:
                new[p] = exps[i]
            out[tuple(new)] = c
        return MultiPoly(variables, out)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables)
                     if any(e[i] for e in self.terms))

    def drop_unused(self) -> "MultiPoly":
        return self.extend(self.used_variables())

    def _unify(self, other) -> tuple["MultiPoly", "MultiPoly"]:
        other = MultiPoly.coerce(other, self.variables)
        if other.variables == self.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.extend(merged), other.extend(merged)

    # arithmetic --------------------------------------------------------
    def __add__(self, other):
        a, b = self._unify(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-MultiPoly.coerce(other, self.variables))

    def __rsub__(self, other):
        return MultiPoly.coerce(other, self.variables) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        a, b = self._unify(other)
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._unify(other)
        return a.terms == b.terms

    def __hash__(self):
        p = self.drop_unused()
        return hash((tuple(sorted(p.variables)), frozenset(
            (tuple(sorted(zip(p.variables, e))), c) for e, c in p.terms.items())))

    # queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=0)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        missing = [v for v in self.used_variables() if v not in values]
        if missing:
            raise DomainError(f"no value for {missing}")
        vals = [Fraction(values.get(v, 0)) for v in self.variables]
        return sum((c * prod(x ** k for x, k in zip(vals, e) if k)
                    for e, c in self.terms.items()), Fraction(0))

    def substitute(self, name: str, value) -> "MultiPoly":
        """Replace variable ``name`` by a number or a polynomial."""
        if name not in self.variables:
            return self
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1:]
        value = MultiPoly.coerce(value, rest)
        if name in value.used_variables():
            raise DomainError(f"substituting {name} by an expression in {name}")
        value = value.drop_unused()
        by_power: dict[int, dict] = {}
        for e, c in self.terms.items():
            by_power.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        result = MultiPoly(rest)
        powers = {0: MultiPoly.constant(1, value.variables)}
        for d in sorted(by_power):
            if d not in powers:
                powers[d] = value ** d
            result = result + MultiPoly(rest, by_power[d]) * powers[d]
        return result

    # printing ----------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded lex order (highest total degree first)."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-x for x in t[0]]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}"
                            for v, k in zip(self.variables, e) if k)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {str(self)!r})"


def integrate_poly(p: MultiPoly, var: str, lower, upper) -> MultiPoly:
    """Definite integral of ``p`` in ``var`` from ``lower`` to ``upper``.

    The bounds may be numbers or polynomials in the other variables.  The
    result no longer mentions ``var``.
    """
    lower = MultiPoly.coerce(lower)
    upper = MultiPoly.coerce(upper)
    for bound in (lower, upper):
        if var in bound.used_variables():
            raise DomainError(f"integration bound depends on {var}")
    if var not in p.variables:
        p = p.extend(p.variables + (var,))
    i = p.variables.index(var)
    # antiderivative term by term, then evaluate between the bounds
    anti = {}
    for e, c in p.terms.items():
        new = list(e)
        new[i] += 1
        anti[tuple(new)] = c / new[i]
    anti = MultiPoly(p.variables, anti)
    return anti.substitute(var, upper) - anti.substitute(var, lower)


def alt_poly(mu: Sequence[int], r: int, variables: Sequence[str] = ()) -> MultiPoly:
    """``a_mu = det[x_j ** (mu_i + r - i)]`` expanded by the permutation sum."""
    mu = tuple(mu)
    if len(mu) != r:
        raise DomainError(f"partition {mu} does not have length {r}")
    if any(x < 0 for x in mu) or any(mu[i] < mu[i + 1] for i in range(r - 1)):
        raise DomainError(f"{mu} is not a partition")
    variables = tuple(variables) or lam_vars(r)
    if len(variables) != r:
        raise DimensionError("need one variable per part")
    exps = [mu[i] + r - 1 - i for i in range(r)]
    terms = {}
    for perm in permutations(range(r)):
        # det = sum_sigma sign(sigma) prod_i x_{sigma(i)}^{exps_i}
        e = [0] * r
        for i, j in enumerate(perm):
            e[j] = exps[i]
        terms[tuple(e)] = _sign(perm)
    return MultiPoly(variables, terms)


def _sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alt_value(mu: Sequence[int], point: Sequence[Scalar]) -> Fraction:
    """``a_mu`` evaluated at ``point`` through an exact determinant."""
    r = len(point)
    if len(mu) != r:
        raise DomainError(f"partition {tuple(mu)} does not have length {r}")
    return Fraction(det([[Fraction(x) ** (mu[i] + r - 1 - i) for x in point]
                         for i in range(r)]))


def _check_partition(pi: Sequence[int], r: int) -> tuple:
    pi = tuple(pi)
    if len(pi) != r or any(x < 0 for x in pi) or any(pi[i] < pi[i + 1] for i in range(r - 1)):
        raise DomainError(f"{pi} is not a partition of length {r}")
    return pi


def integral_alternating(pi: Sequence[int], r: int) -> tuple[Fraction, tuple]:
    """Iterated integral of ``a_pi`` over ``lam_{j+1} <= mu_j <= lam_j``.

    Returns ``(c, (pi, 0))`` meaning the integral equals
    ``c * a_(pi,0)(lam_1, ..., lam_{r+1})``.
    """
    pi = _check_partition(pi, r)
    denom = prod(pi[j] + r - j for j in range(r))  # pi_j + r - j + 1, 1-based j
    return Fraction(1, denom), pi + (0,)


def integral_product_simplex(mu: Sequence[int], nu: Sequence[int], r: int) -> Fraction:
    """Exact integral of ``a_mu * a_nu`` over {lam >= 0, sum(lam) <= 1} in R^r."""
    mu = _check_partition(mu, r)
    nu = _check_partition(nu, r)
    m = [[factorial(nu[i] + mu[j] + 2 * r - 2 - i - j) for j in range(r)] for i in range(r)]
    return Fraction(factorial(r) * det(m), factorial(r * r + sum(mu) + sum(nu)))


def integrate_simplex(p: MultiPoly, variables: Sequence[str]) -> Fraction:
    """Integral of ``p`` over the standard simplex in ``variables`` by iterated integration."""
    variables = tuple(variables)
    for v in p.used_variables():
        if v not in variables:
            raise DomainError(f"free variable {v} outside the integration variables")
    result = p
    for t in range(len(variables) - 1, -1, -1):
        upper = MultiPoly.constant(1)
        for v in variables[:t]:
            upper = upper - MultiPoly.var(v)
        result = integrate_poly(result, variables[t], 0, upper)
    return result.evaluate({})


def iterated_alternating_integral(pi: Sequence[int], r: int) -> MultiPoly:
    """Symbolic ``int a_pi(mu) dmu`` with ``lam_{j+1} <= mu_j <= lam_j`` (no shortcut)."""
    mus = tuple(f"u{j}" for j in range(1, r + 1))
    lams = lam_vars(r + 1)
    p = alt_poly(pi, r, mus)
    for j in range(r - 1, -1, -1):
        p = integrate_poly(p, mus[j], MultiPoly.var(lams[j + 1]), MultiPoly.var(lams[j]))
    return p.extend(lams)


def as_terms(p: MultiPoly, variables: Iterable[str]) -> dict:
    """Coefficient map of ``p`` over a fixed variable order (for comparisons)."""
    return dict(p.extend(tuple(variables)).terms)
