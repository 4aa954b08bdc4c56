"""Elliptic Hall generators P_{1,k} and P_{m,n} acting on U_{*,0}.

P_{m,n} is realized as the level-one word

    d-  z_1^{S_n} y_1  z_1^{S_{n-1}} y_1 ... y_1 z_1^{S_1}  d+

with n - 1 factors y_1, so that it raises |lam| by exactly n.  The
standard-tableau product formula is kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .fixed_points import (
    GradeError,
    KVector,
    Word,
    apply_word,
    parse_word,
    pieri,
    q,
    qt,
    t,
)
from .qt import ONE, ZERO, Character, QTFraction, lambda_star
from .shapes import FlagPoint, Partition, add_cell, addable_cells, char_B, partitions, standard_tableaux, weight

_OMEGA_CHAR = Character({(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 1})  # (1-q)(1-t)


@dataclass(frozen=True)
class Staircase:
    m: int
    n: int
    S: tuple[int, ...]


def staircase(m: int, n: int) -> Staircase:
    """S_i = floor(m i / n) - floor(m (i-1) / n)."""
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise ValueError(f"({m},{n}) must be coprime positive integers")
    return Staircase(m, n, tuple((m * i) // n - (m * (i - 1)) // n for i in range(1, n + 1)))


def _z_power(e: int) -> str:
    return " ".join(["z:1"] * e)


def p1k_word(k: int) -> Word:
    return parse_word(f"d- {_z_power(k)} d+")


def p1k_scalar() -> QTFraction:
    return ((q - 1) * (1 - t)).inv()


def apply_p1k(k: int, v: KVector) -> KVector:
    """P_{1,k} = d- z_1^k d+ / ((q-1)(1-t)) on U_{n,0}."""
    if v.k != 0:
        raise GradeError(f"P_(1,{k}) acts on k = 0, got k = {v.k}")
    if v.basis != "H":
        raise GradeError("P_(1,k) is applied in the H basis")
    return apply_word(p1k_word(k), v).scale(p1k_scalar())


def p1k_direct(k: int, v: KVector) -> KVector:
    """P_{1,k} from Pieri coefficients: H_lam -> sum_x d x^k H_{lam+x} / ((q-1)(1-t))."""
    if v.k != 0 or v.basis != "H":
        raise GradeError("p1k_direct needs an H vector with k = 0")
    out: dict = {}
    for p, c in v.items():
        for x in addable_cells(p.lam):
            lam_x = add_cell(p.lam, x)
            a, b = weight(x)
            val = c * pieri(lam_x, p.lam) * QTFraction.monomial(a * k, b * k)
            key = FlagPoint(lam_x, ())
            out[key] = out.get(key, ZERO) + val
    return KVector((v.n + 1, 0), "H", out).scale(p1k_scalar())


def pmn_word(m: int, n: int) -> Word:
    """d- z^{S_n} y_1 ... y_1 z^{S_1} d+ with n-1 factors y_1."""
    S = staircase(m, n).S
    parts = ["d-"]
    for i in range(n, 0, -1):
        parts.append(_z_power(S[i - 1]))
        if i > 1:
            parts.append("y:1")
    parts.append("d+")
    return parse_word(" ".join(p for p in parts if p))


def pmn_word_literal(m: int, n: int) -> Word:
    """The reading with n factors y_1 (one per staircase step); raises |lam| by n + 1."""
    S = staircase(m, n).S
    parts = ["d-"]
    for i in range(n, 0, -1):
        parts.append(_z_power(S[i - 1]))
        parts.append("y:1")
    parts.append("d+")
    return parse_word(" ".join(p for p in parts if p))


def pmn_vacuum(m: int, n: int) -> KVector:
    return apply_word(pmn_word(m, n), KVector.vacuum())


def omega(x: QTFraction) -> QTFraction:
    """(1 - x)(1 - qt x) / ((1 - q x)(1 - t x))."""
    return (1 - x) * (1 - qt * x) / ((1 - q * x) * (1 - t * x))


def omega_product(shape: Partition, cell) -> QTFraction:
    """prod over cells u of shape of omega(chi(u)/chi(cell)), regularized.

    For an addable cell other than the corner the raw product contains one
    vanishing factor (1 - 1) in the denominator which cancels against the
    numerator; the trivial monomial is dropped from the exponent character.
    """
    xc, xr = weight(cell)
    ch = (_OMEGA_CHAR * char_B(shape)).shift(-xc, -xr)
    ch = Character({k: v for k, v in ch.items() if k != (0, 0)})
    return lambda_star(ch)


def tableau_step(shape: Partition, cell) -> QTFraction:
    """Coefficient of adding cell to shape in the product formula.

    Equals omega_product(shape, cell) / (chi(cell) - 1); for the first cell the
    product is empty and the step is 1.
    """
    if not shape:
        return ONE
    c, r = weight(cell)
    return omega_product(shape, cell) / (QTFraction.monomial(c, r) - 1)


def tableau_pmn(m: int, n: int, lam: Partition) -> QTFraction:
    """(-1)^{n-1} sum_T prod_j step_j * w_j^{S_j+1} / (w_j - qt w_{j-1}), w_0 = 0."""
    S = staircase(m, n).S
    lam = tuple(lam)
    if sum(lam) != n:
        raise ValueError(f"|{lam}| != {n}")
    total = ZERO
    for T in standard_tableaux(lam):
        term = ONE
        shape: Partition = ()
        prev = ZERO
        for j, cell in enumerate(T):
            c, r = weight(cell)
            w = QTFraction.monomial(c, r)
            term = term * tableau_step(shape, cell) * w ** (S[j] + 1) / (w - qt * prev)
            shape = add_cell(shape, cell)
            prev = w
        total = total + term
    return total if (n - 1) % 2 == 0 else -total


def tableau_vector(m: int, n: int) -> KVector:
    return KVector((n, 0), "H", {FlagPoint(lam, ()): tableau_pmn(m, n, lam) for lam in partitions(n)})
