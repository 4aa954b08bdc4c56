"""Symmetric functions over Q(q, t), stored in the power-sum basis.

Schur expansions are obtained from the Murnaghan-Nakayama rule.  The
modified Macdonald polynomials are computed from their triangularity and
normalization axioms by exact linear algebra.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from collections import Counter
from typing import Mapping

from .linalg import SingularMatrix, solve
from .qt import ONE, ZERO, QTFraction
from .shapes import Partition, conjugate, dominates, partitions, sort_partition


class DegreeBudgetError(ValueError):
    """A symmetric-function operation would exceed the degree bound."""


DEFAULT_DEGREE_BOUND = 12


def z_factor(rho: Partition) -> int:
    """z_rho = prod_i i^{m_i} m_i!."""
    out = 1
    for part, mult in Counter(rho).items():
        out *= part ** mult * factorial(mult)
    return out


@lru_cache(maxsize=None)
def mn_character(lam: Partition, rho: Partition) -> int:
    """chi^lam(rho) by the Murnaghan-Nakayama rule on beta-numbers."""
    if sum(lam) != sum(rho):
        raise ValueError("sizes differ")
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in bset:
            continue
        between = sum(1 for c in beta if b - r < c < b)
        new = sorted((bset - {b}) | {b - r}, reverse=True)
        mu = sort_partition([new[i] - (L - 1 - i) for i in range(L)])
        total += (-1) ** between * mn_character(mu, rest)
    return total


class SymFunc:
    """Finite combination of power sums p_rho with Q(q,t) coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Partition, QTFraction] = ()):
        self._c = {tuple(k): v for k, v in dict(coeffs).items() if v}

    @classmethod
    def p(cls, rho: Partition) -> "SymFunc":
        return cls({sort_partition(rho): ONE})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): ONE})

    @classmethod
    def schur(cls, lam: Partition) -> "SymFunc":
        return _schur(tuple(lam))

    @classmethod
    def e(cls, n: int) -> "SymFunc":
        return _elementary(n)

    @classmethod
    def h(cls, n: int) -> "SymFunc":
        return _complete(n)

    def items(self):
        return self._c.items()

    def coeff(self, rho: Partition) -> QTFraction:
        return self._c.get(tuple(rho), ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        return max((sum(r) for r in self._c), default=0)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, ZERO) + v
        return SymFunc(out)

    def __neg__(self) -> "SymFunc":
        return SymFunc({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = c if isinstance(c, QTFraction) else QTFraction.from_rational(c)
        return SymFunc({k: v * c for k, v in self._c.items()})

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        out: dict = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                key = sort_partition(a + b)
                out[key] = out.get(key, ZERO) + x * y
        return SymFunc(out)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"SymFunc({self.to_schur()})"

    def plethysm_scale(self, factor) -> "SymFunc":
        """p_r -> factor(r) p_r, e.g. F[X(1-q)] with factor(r) = 1 - q^r."""
        out = {}
        for rho, c in self._c.items():
            f = ONE
            for r in rho:
                f = f * factor(r)
            out[rho] = c * f
        return SymFunc(out)

    def to_schur(self) -> dict[Partition, QTFraction]:
        """Coefficients <F, s_lam> (p_rho = sum_lam chi^lam(rho) s_lam)."""
        out: dict = {}
        for rho, c in self._c.items():
            for lam in partitions(sum(rho)):
                chi = mn_character(lam, rho)
                if chi:
                    out[lam] = out.get(lam, ZERO) + c * chi
        return {k: v for k, v in out.items() if v}

    @classmethod
    def from_schur(cls, coeffs: Mapping[Partition, QTFraction]) -> "SymFunc":
        out = cls()
        for lam, c in coeffs.items():
            out = out + _schur(tuple(lam)).scale(c)
        return out


@lru_cache(maxsize=None)
def _schur(lam: Partition) -> SymFunc:
    n = sum(lam)
    return SymFunc({rho: QTFraction.from_rational(mn_character(lam, rho)) / z_factor(rho)
                    for rho in partitions(n) if mn_character(lam, rho)})


@lru_cache(maxsize=None)
def _elementary(n: int) -> SymFunc:
    return SymFunc({rho: QTFraction.from_rational((-1) ** (n - len(rho))) / z_factor(rho)
                    for rho in partitions(n)})


@lru_cache(maxsize=None)
def _complete(n: int) -> SymFunc:
    return SymFunc({rho: QTFraction.from_rational(1) / z_factor(rho) for rho in partitions(n)})


# ---------------------------------------------------------------------------
# modified Macdonald polynomials


def _pleth_matrix(n: int, var: QTFraction, basis: list) -> list[list[QTFraction]]:
    """Schur-basis matrix of F -> F[X(1 - var)] on degree n."""
    cols = []
    for lam in basis:
        img = _schur(lam).plethysm_scale(lambda r: 1 - var ** r).to_schur()
        cols.append([img.get(nu, ZERO) for nu in basis])
    return [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]


@lru_cache(maxsize=None)
def classical_macdonald(mu: Partition, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    """H~_mu from the axioms.

    H~_mu[X(1-q)] lies in span{s_lam : lam >= mu}, H~_mu[X(1-t)] in
    span{s_lam : lam >= mu'}, and <H~_mu, s_(n)> = 1.
    """
    from .fixed_points import q, t

    mu = tuple(mu)
    n = sum(mu)
    if n > degree_bound:
        raise DegreeBudgetError(f"|mu| = {n} exceeds degree bound {degree_bound}")
    basis = list(partitions(n))
    if n == 0:
        return SymFunc.one()
    Mq = _pleth_matrix(n, q, basis)
    Mt = _pleth_matrix(n, t, basis)
    mu_c = conjugate(mu)
    rows, rhs = [], []
    for i, nu in enumerate(basis):
        if not dominates(nu, mu):
            rows.append(Mq[i])
            rhs.append(ZERO)
        if not dominates(nu, mu_c):
            rows.append(Mt[i])
            rhs.append(ZERO)
    top = basis.index((n,))
    rows.append([ONE if j == top else ZERO for j in range(len(basis))])
    rhs.append(ONE)
    try:
        sol = solve(rows, rhs)
    except SingularMatrix as e:
        raise SingularMatrix(f"Macdonald axioms singular for {mu}: {e}") from None
    return SymFunc.from_schur(dict(zip(basis, sol)))


def macdonald_pieri_matrix(n: int):
    """Coefficients of e_1 H~_mu in the H~_lam basis, mu of n, lam of n+1.

    Returns (rows, cols, matrix) indexed by partitions(n+1) x partitions(n).
    """
    rows = list(partitions(n + 1))
    cols = list(partitions(n))
    basis_s = rows
    H = [classical_macdonald(lam).to_schur() for lam in rows]
    A = [[H[j].get(nu, ZERO) for j in range(len(rows))] for nu in basis_s]
    e1 = SymFunc.e(1)
    mat = [[ZERO] * len(cols) for _ in rows]
    for j, mu in enumerate(cols):
        prod = (e1 * classical_macdonald(mu)).to_schur()
        sol = solve(A, [prod.get(nu, ZERO) for nu in basis_s])
        for i in range(len(rows)):
            mat[i][j] = sol[i]
    return rows, cols, mat
