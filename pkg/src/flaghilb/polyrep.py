"""The polynomial representation V_k = Lambda (x) Q(q,t)[y_1, ..., y_k].

Elements are :class:`YPoly`: maps (y-exponent vector, power-sum index) ->
coefficient.  Plethystic substitutions X -> X + c y_j act on power sums by
p_r -> p_r + c^r y_j^r.

The Demazure-Lusztig operator is normalized so that it fixes symmetric
elements:

    T_i F = ((q-1) y_i F + (y_{i+1} - q y_i) s_i F) / (y_{i+1} - y_i).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping

from .fixed_points import GradeError, VanishingGrade, Word, parse_word, q, t
from .qt import ONE, ZERO, Character, QTFraction
from .shapes import Partition, sort_partition
from .symfunc import DEFAULT_DEGREE_BOUND, DegreeBudgetError, SymFunc


Q_MINUS_ONE = Character([((1, 0), 1), ((0, 0), -1)])


class DivisionRemainder(ArithmeticError):
    """Demazure-Lusztig numerator not divisible by y_{i+1} - y_i."""


Key = tuple  # (exps: tuple[int, ...], rho: Partition)


class YPoly:
    __slots__ = ("k", "_c", "bound")

    def __init__(self, k: int, coeffs: Mapping[Key, QTFraction] = (), bound: int = DEFAULT_DEGREE_BOUND):
        self.k = k
        self.bound = bound
        clean = {}
        for (e, rho), c in dict(coeffs).items():
            if len(e) != k:
                raise GradeError(f"exponent vector {e} has length != {k}")
            if c:
                if sum(e) + sum(rho) > bound:
                    raise DegreeBudgetError(f"degree {sum(e) + sum(rho)} exceeds bound {bound}")
                clean[(tuple(e), tuple(rho))] = c
        self._c = clean

    @classmethod
    def one(cls, k: int = 0) -> "YPoly":
        return cls(k, {((0,) * k, ()): ONE})

    @classmethod
    def from_symfunc(cls, F: SymFunc, k: int = 0) -> "YPoly":
        return cls(k, {((0,) * k, rho): c for rho, c in F.items()})

    @classmethod
    def monomial(cls, exps: Iterable[int], rho: Partition = ()) -> "YPoly":
        exps = tuple(exps)
        return cls(len(exps), {(exps, tuple(rho)): ONE})

    def items(self):
        return self._c.items()

    def keys(self):
        return self._c.keys()

    def coeff(self, key: Key) -> QTFraction:
        return self._c.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        return max((sum(e) + sum(r) for e, r in self._c), default=0)

    def symmetric_part(self) -> SymFunc:
        """The y-free part, as a symmetric function."""
        return SymFunc({rho: c for (e, rho), c in self._c.items() if not any(e)})

    def _new(self, coeffs, k=None) -> "YPoly":
        return YPoly(self.k if k is None else k, coeffs, self.bound)

    def __add__(self, other: "YPoly") -> "YPoly":
        if other.k != self.k:
            raise GradeError("cannot add elements of different V_k")
        out = dict(self._c)
        for key, c in other._c.items():
            out[key] = out.get(key, ZERO) + c
        return self._new(out)

    def __neg__(self) -> "YPoly":
        return self._new({key: -c for key, c in self._c.items()})

    def __sub__(self, other: "YPoly") -> "YPoly":
        return self + (-other)

    def scale(self, c) -> "YPoly":
        c = c if isinstance(c, QTFraction) else QTFraction.from_rational(c)
        return self._new({key: v * c for key, v in self._c.items()})

    def __eq__(self, other):
        if not isinstance(other, YPoly):
            return NotImplemented
        return self.k == other.k and self._c == other._c

    def __hash__(self):
        return hash((self.k, frozenset(self._c.items())))

    def __repr__(self):
        return f"YPoly(k={self.k}, {len(self._c)} terms)"

    # -- elementary operations ---------------------------------------------
    def mul_y(self, i: int, power: int = 1) -> "YPoly":
        if not 1 <= i <= self.k:
            raise GradeError(f"y_{i} needs 1 <= {i} <= k = {self.k}")
        out = {}
        for (e, rho), c in self._c.items():
            e2 = list(e)
            e2[i - 1] += power
            out[(tuple(e2), rho)] = c
        return self._new(out)

    def mul_sym(self, F: SymFunc) -> "YPoly":
        out: dict = {}
        for (e, rho), c in self._c.items():
            for rho2, c2 in F.items():
                key = (e, sort_partition(rho + rho2))
                out[key] = out.get(key, ZERO) + c * c2
        return self._new(out)

    def swap(self, i: int) -> "YPoly":
        """s_i: exchange y_i and y_{i+1}."""
        out = {}
        for (e, rho), c in self._c.items():
            e2 = list(e)
            e2[i - 1], e2[i] = e2[i], e2[i - 1]
            out[(tuple(e2), rho)] = c
        return self._new(out)

    def extend(self) -> "YPoly":
        """Embed V_k into V_{k+1}."""
        return self._new({(e + (0,), rho): c for (e, rho), c in self._c.items()}, self.k + 1)


# ---------------------------------------------------------------------------
# plethysm


def _subsets_of_parts(rho: Partition):
    """Distinct sub-multisets S of rho with their multiplicity in the expansion."""
    seen: dict = {}
    for r in range(len(rho) + 1):
        for idx in combinations(range(len(rho)), r):
            S = tuple(rho[i] for i in idx)
            seen[S] = seen.get(S, 0) + 1
    return seen.items()


def pleth_add_var(F: YPoly, j: int, c: "QTFraction | Character", sign: int = 1) -> YPoly:
    """F[X + sign * c * y_j] with y-variables untouched.

    A scalar c is a constant: p_r -> p_r + sign * c^r y_j^r.  A Character
    is a plethystic alphabet of monomials in q, t: p_r -> p_r + sign * c(q^r, t^r) y_j^r.
    """
    if not 1 <= j <= F.k:
        raise GradeError(f"y_{j} not in V_{F.k}")
    if isinstance(c, Character):
        pr = c.power_sum
    else:
        pr = lambda r: c ** r  # noqa: E731
    out: dict = {}
    for (e, rho), coeff in F.items():
        for S, mult in _subsets_of_parts(rho):
            rest = list(rho)
            for s in S:
                rest.remove(s)
            f = coeff * mult
            for s in S:
                f = f * pr(s) * sign
            e2 = list(e)
            e2[j - 1] += sum(S)
            key = (tuple(e2), tuple(rest))
            out[key] = out.get(key, ZERO) + f
    return F._new(out)


def pexp_neg_terms(D: int) -> list[SymFunc]:
    """Coefficients of y^{-j}, j = 0..D, in pExp[-y^{-1} X]: (-1)^j e_j."""
    return [SymFunc.e(j).scale((-1) ** j) for j in range(D + 1)]


# ---------------------------------------------------------------------------
# operators


def _divide_by_difference(N: YPoly, i: int) -> YPoly:
    """N / (y_{i+1} - y_i), exact."""
    groups: dict = {}
    for (e, rho), c in N.items():
        rest = e[: i - 1] + (0, 0) + e[i + 1:]
        groups.setdefault((rest, rho), {})[(e[i - 1], e[i])] = c
    out: dict = {}
    for (rest, rho), P in groups.items():
        # synthetic division in v = y_{i+1} by (v - u), u = y_i
        D = max(b for _, b in P)
        coeffs_v = [dict() for _ in range(D + 1)]  # p_b(u) as {a: c}
        for (a, b), c in P.items():
            coeffs_v[b][a] = c
        quot = [dict() for _ in range(D)]
        carry: dict = {}
        for b in range(D, 0, -1):
            cur = dict(coeffs_v[b])
            for a, c in carry.items():
                cur[a + 1] = cur.get(a + 1, ZERO) + c
            cur = {a: c for a, c in cur.items() if c}
            quot[b - 1] = cur
            carry = cur
        rem = dict(coeffs_v[0])
        for a, c in carry.items():
            rem[a + 1] = rem.get(a + 1, ZERO) + c
        if any(c for c in rem.values()):
            raise DivisionRemainder(f"non-zero remainder dividing by y_{i + 1} - y_{i}")
        for b, poly in enumerate(quot):
            for a, c in poly.items():
                e = list(rest)
                e[i - 1], e[i] = a, b
                key = (tuple(e), rho)
                out[key] = out.get(key, ZERO) + c
    return N._new(out)


def poly_T(i: int, F: YPoly) -> YPoly:
    if not 1 <= i <= F.k - 1:
        raise GradeError(f"T_{i} needs 1 <= {i} <= k-1 = {F.k - 1}")
    sF = F.swap(i)
    num = F.mul_y(i).scale(q - 1) + sF.mul_y(i + 1) - sF.mul_y(i).scale(q)
    return _divide_by_difference(num, i)


def poly_Tinv(i: int, F: YPoly) -> YPoly:
    return poly_T(i, F).scale(q.inv()) + F.scale((q - 1) / q)


def poly_dminus(F: YPoly) -> YPoly:
    """-Res_{y_k} F[X-(q-1)y_k] pExp[-y_k^{-1} X] = sum_j (-1)^j e_{j+1} [y_k^j] F[X-(q-1)y_k]."""
    k = F.k
    if k == 0:
        raise VanishingGrade("d- on V_0")
    G = pleth_add_var(F, k, Q_MINUS_ONE, -1)
    by_j: dict = {}
    for (e, rho), c in G.items():
        by_j.setdefault(e[-1], {})[(e[:-1], rho)] = c
    out = YPoly(k - 1, {}, F.bound)
    for j, coeffs in by_j.items():
        Gj = YPoly(k - 1, coeffs, F.bound)
        out = out + Gj.mul_sym(SymFunc.e(j + 1)).scale((-1) ** j)
    return out


def poly_dplus(F: YPoly) -> YPoly:
    """T_1 T_2 ... T_k (F[X + (q-1) y_{k+1}])."""
    k = F.k
    G = pleth_add_var(F.extend(), k + 1, Q_MINUS_ONE, 1)
    for i in range(k, 0, -1):
        G = poly_T(i, G)
    return G


def poly_dplus_cm(F: YPoly) -> YPoly:
    """gamma F[X + (q-1) y_{k+1}], gamma: y_i -> y_{i+1}, y_{k+1} -> t y_1."""
    k = F.k
    G = pleth_add_var(F.extend(), k + 1, Q_MINUS_ONE, 1)
    out = {}
    for (e, rho), c in G.items():
        e2 = (e[-1],) + e[:-1]
        out[(e2, rho)] = c * t ** e[-1]
    return G._new(out)


def poly_y(i: int, F: YPoly) -> YPoly:
    return F.mul_y(i)


def poly_phi(F: YPoly) -> YPoly:
    """(d+ d- - d- d+)/(q-1)."""
    if F.k == 0:
        raise GradeError("phi needs k >= 1")
    return (poly_dplus(poly_dminus(F)) - poly_dminus(poly_dplus(F))).scale((q - 1).inv())


_POLY_GENERATORS = {
    "d+": lambda F, i: poly_dplus(F),
    "d-": lambda F, i: poly_dminus(F),
    "T": lambda F, i: poly_T(i, F),
    "Tinv": lambda F, i: poly_Tinv(i, F),
    "y": lambda F, i: poly_y(i, F),
    "phi": lambda F, i: poly_phi(F),
}


def poly_apply_word(w: Word | str, F: YPoly) -> YPoly:
    """Apply a word over {d+, d-, T, Tinv, y, phi}; rightmost acts first."""
    if isinstance(w, str):
        w = parse_word(w)
    for step, (name, idx) in enumerate(reversed(w.symbols)):
        if name not in _POLY_GENERATORS:
            raise GradeError(f"{name} has no polynomial action here")
        try:
            F = _POLY_GENERATORS[name](F, idx)
        except VanishingGrade:
            raise
        except GradeError as e:
            raise GradeError(f"step {step} ({name}): {e}") from None
    return F
