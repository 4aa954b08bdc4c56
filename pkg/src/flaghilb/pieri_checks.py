"""Identities satisfied by the Pieri coefficients d_{lam+x, lam}."""

from __future__ import annotations

from .fixed_points import pieri, pieri_lambda_star, pieri_product, q, qt, t
from .qt import ONE, ZERO, Character, QTFraction, bar
from .shapes import Partition, add_cell, addable_cells, char_B, enumerate_flags, partitions, weight

_QM1_TM1 = Character({(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 1})


def _chi(cell) -> QTFraction:
    c, r = weight(cell)
    return QTFraction.monomial(c, r)


def elementary_of_alphabet(alphabet: Character, i: int) -> QTFraction:
    """e_i of a virtual alphabet by Newton's identities."""
    e = [ONE]
    for m in range(1, i + 1):
        acc = ZERO
        for r in range(1, m + 1):
            term = e[m - r] * alphabet.power_sum(r)
            acc = acc + term if r % 2 else acc - term
        e.append(acc / m)
    return e[i]


def pieri_moment(lam: Partition, i: int) -> QTFraction:
    """sum over addable x of d_{lam+x, lam} x^{i+1}."""
    acc = ZERO
    for x in addable_cells(lam):
        acc = acc + pieri(add_cell(lam, x), lam) * _chi(x) ** (i + 1)
    return acc


def pieri_moment_closed(lam: Partition, i: int) -> QTFraction:
    """(-1)^i e_i[-1 + (q-1)(t-1) B_lam]."""
    alphabet = _QM1_TM1 * char_B(lam) - Character({(0, 0): 1})
    val = elementary_of_alphabet(alphabet, i)
    return val if i % 2 == 0 else -val


def check_product_vs_lambda_star(max_size: int) -> list[tuple]:
    """Mismatches between the two Pieri formulas for |lam| <= max_size."""
    bad = []
    for n in range(max_size + 1):
        for lam in partitions(n):
            for x in addable_cells(lam):
                lp = add_cell(lam, x)
                if pieri_product(lp, lam) != pieri_lambda_star(lp, lam):
                    bad.append((lp, lam))
    return bad


def check_moments(max_i: int, max_size: int) -> list[tuple]:
    bad = []
    for n in range(max_size + 1):
        for lam in partitions(n):
            for i in range(max_i + 1):
                if pieri_moment(lam, i) != pieri_moment_closed(lam, i):
                    bad.append((lam, i))
    return bad


def check_duality(max_size: int) -> list[tuple]:
    """d(q^-1, t^-1) = x d(q, t)."""
    bad = []
    for n in range(max_size + 1):
        for lam in partitions(n):
            for x in addable_cells(lam):
                d = pieri(add_cell(lam, x), lam)
                if bar(d) != _chi(x) * d:
                    bad.append((lam, x))
    return bad


def c_function(lam: Partition, ws, x, y) -> QTFraction:
    """Coefficient of adding x then y in d+^2, divided by (y - x)/(y - qx)."""
    X, Y = _chi(x), _chi(y)
    lx = add_cell(lam, x)
    val = pieri(lx, lam) * pieri(add_cell(lx, y), lx) * (Y - t * X) / (Y - qt * X)
    for w in ws:
        val = val * (X - t * w) * (Y - t * w) / ((X - qt * w) * (Y - qt * w))
    return val * (Y - q * X) / (Y - X)


def _adjacent(x, y) -> bool:
    return abs(x[0] - y[0]) + abs(x[1] - y[1]) == 1


def check_c_symmetry(max_n: int, max_k: int) -> list[tuple]:
    """C(x, y) = C(y, x) for non-adjacent addable x, y at every flag."""
    bad = []
    for n in range(max_n + 1):
        for k in range(min(n, max_k) + 1):
            for p in enumerate_flags(n, k):
                ws = [QTFraction.monomial(c, r) for c, r in p.weights]
                cells = addable_cells(p.lam)
                for i, x in enumerate(cells):
                    for y in cells[i + 1:]:
                        if _adjacent(x, y):
                            continue
                        if c_function(p.lam, ws, x, y) != c_function(p.lam, ws, y, x):
                            bad.append((p, x, y))
    return bad
