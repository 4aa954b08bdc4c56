"""Exact arithmetic in the field Q(q, t).

Elements are stored as a reduced quotient of two integer polynomials in
``q, t`` (flint ``fmpz_mpoly``, lex order with q > t).  Laurent monomials
are folded into the numerator/denominator, so nothing with negative
exponents is ever stored.

Canonical form: ``gcd(num, den) = 1`` (integer content included) and the
leading coefficient of ``den`` is positive.  Two equal fractions therefore
have identical ``num``/``den`` and identical text forms.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import flint

_CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "lex")
_ZERO = _CTX.from_dict({})
_ONE = _CTX.from_dict({(0, 0): 1})


class ZeroDivision(ZeroDivisionError):
    """Division by the zero element of Q(q, t)."""


class PoleError(ArithmeticError):
    """Evaluation point is a pole of the fraction."""


def _poly(terms: Mapping[tuple[int, int], int]):
    return _CTX.from_dict({k: v for k, v in terms.items() if v})


def _lead_coeff(p) -> int:
    # lex order q > t: highest (dq, dt) is the leading monomial
    d = p.to_dict()
    return int(d[max(d)])


class QTFraction:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _reduced=False):
        if den is None:
            den = _ONE
        if not isinstance(num, flint.fmpz_mpoly):
            num = _coerce_poly(num)
        if not isinstance(den, flint.fmpz_mpoly):
            den = _coerce_poly(den)
        if den.is_zero():
            raise ZeroDivision("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_rational(cls, value) -> "QTFraction":
        value = Fraction(value)
        return cls(_poly({(0, 0): value.numerator}), _poly({(0, 0): value.denominator}))

    @staticmethod
    def monomial(dq: int, dt: int, coeff: int = 1) -> "QTFraction":
        return _monomial(dq, dt, coeff)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], object]) -> "QTFraction":
        """Build from a Laurent polynomial given as {(dq, dt): rational}."""
        out = ZERO
        for (a, b), c in terms.items():
            c = Fraction(c)
            if c:
                out = out + _monomial(a, b) * cls.from_rational(c)
        return out

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant() and int(self.den.to_dict().get((0, 0), 0)) == 1

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return QTFraction(self.num + other.num, self.den)
        return QTFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QTFraction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        # cross-cancel first so the products stay small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = self.num / g1, other.den / g1
        n2, d1 = other.num / g2, self.den / g2
        num, den = n1 * n2, d1 * d2
        if _lead_coeff(den) < 0:
            num, den = -num, -den
        return QTFraction(num, den, _reduced=True)

    __rmul__ = __mul__

    def inv(self) -> "QTFraction":
        if self.num.is_zero():
            raise ZeroDivision("inverse of zero")
        num, den = self.den, self.num
        if _lead_coeff(den) < 0:
            num, den = -num, -den
        return QTFraction(num, den, _reduced=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return QTFraction(self.num ** e, self.den ** e, _reduced=True)

    # -- comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(sorted(self.num.to_dict().items())),
                               tuple(sorted(self.den.to_dict().items()))))
        return self._hash

    # -- involutions and evaluation -----------------------------------------
    def bar(self) -> "QTFraction":
        """Substitute q -> 1/q, t -> 1/t."""
        return bar(self)

    def eval_at(self, q0, t0) -> Fraction:
        return eval_at(self, q0, t0)

    # -- text -----------------------------------------------------------------
    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"QTFraction({to_text(self)!r})"


def _reduce(num, den):
    if num.is_zero():
        return _ZERO, _ONE
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    if _lead_coeff(den) < 0:
        num, den = -num, -den
    return num, den


def _coerce_poly(x):
    if isinstance(x, int):
        return _poly({(0, 0): x})
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce(x):
    if isinstance(x, QTFraction):
        return x
    if isinstance(x, int):
        return _int_fraction(x)
    if isinstance(x, Fraction):
        return QTFraction.from_rational(x)
    return NotImplemented


@lru_cache(maxsize=256)
def _int_fraction(x: int) -> QTFraction:
    return QTFraction(_poly({(0, 0): x}), _ONE, _reduced=True)


@lru_cache(maxsize=4096)
def _monomial(dq: int, dt: int, coeff: int = 1) -> QTFraction:
    if coeff == 0:
        return ZERO
    num = {(max(dq, 0), max(dt, 0)): coeff}
    den = {(max(-dq, 0), max(-dt, 0)): 1}
    return QTFraction(_poly(num), _poly(den), _reduced=True)


ZERO = QTFraction(_ZERO, _ONE, _reduced=True)
ONE = QTFraction(_ONE, _ONE, _reduced=True)
Q = QTFraction.monomial(1, 0)
T = QTFraction.monomial(0, 1)


def _reverse(p):
    """p(1/q, 1/t) * q^a * t^b with (a, b) = degrees of p; stays polynomial."""
    d = p.to_dict()
    a = max(m[0] for m in d)
    b = max(m[1] for m in d)
    return _poly({(a - i, b - j): c for (i, j), c in d.items()}), a, b


def bar(f: QTFraction) -> QTFraction:
    """The involution q -> q^-1, t -> t^-1."""
    if f.num.is_zero():
        return f
    n, na, nb = _reverse(f.num)
    d, da, db = _reverse(f.den)
    # f(1/q,1/t) = n q^-na t^-nb / (d q^-da t^-db)
    sq, st = da - na, db - nb
    num = n * _poly({(max(sq, 0), max(st, 0)): 1})
    den = d * _poly({(max(-sq, 0), max(-st, 0)): 1})
    return QTFraction(num, den)


def _eval_poly(p, q0: Fraction, t0: Fraction) -> Fraction:
    total = Fraction(0)
    for (i, j), c in p.to_dict().items():
        total += int(c) * q0 ** int(i) * t0 ** int(j)
    return total


def eval_at(f: QTFraction, q0, t0) -> Fraction:
    """Exact value of ``f`` at the rational point (q0, t0)."""
    q0, t0 = Fraction(q0), Fraction(t0)
    den = _eval_poly(f.den, q0, t0)
    if den == 0:
        raise PoleError(f"pole of {f} at q={q0}, t={t0}")
    return _eval_poly(f.num, q0, t0) / den


# ---------------------------------------------------------------------------
# canonical text form


def _poly_text(p) -> str:
    d = p.to_dict()
    if not d:
        return "0"
    parts = []
    for (i, j) in sorted(d, reverse=True):
        c = int(d[(i, j)])
        factors = []
        if i:
            factors.append("q" if i == 1 else f"q^{i}")
        if j:
            factors.append("t" if j == 1 else f"t^{j}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def to_text(f: QTFraction) -> str:
    """Canonical text: ``num`` if the denominator is 1, else ``(num)/(den)``."""
    if f.den.is_one():
        return _poly_text(f.num)
    return f"({_poly_text(f.num)})/({_poly_text(f.den)})"


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*((?:[qt](?:\^\d+)?\s*\*?\s*)*)")


def _parse_poly(s: str):
    s = s.strip()
    if s == "0":
        return _ZERO
    terms: dict[tuple[int, int], int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {s!r} at position {pos}")
        sign, coeff, mono = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator in {s!r} at position {pos}")
        c = int(coeff) if coeff else 1
        if not coeff and not mono.strip():
            raise ValueError(f"empty term in {s!r} at position {pos}")
        if sign == "-":
            c = -c
        i = j = 0
        for var, exp in re.findall(r"([qt])(?:\^(\d+))?", mono):
            e = int(exp) if exp else 1
            if var == "q":
                i += e
            else:
                j += e
        terms[(i, j)] = terms.get((i, j), 0) + c
        pos = m.end()
        first = False
    return _poly(terms)


def from_text(s: str) -> QTFraction:
    """Inverse of :func:`to_text` (also accepts unreduced input)."""
    s = s.strip()
    m = re.fullmatch(r"\((.*)\)/\((.*)\)", s)
    if m:
        return QTFraction(_parse_poly(m.group(1)), _parse_poly(m.group(2)))
    return QTFraction(_parse_poly(s), _ONE)


# ---------------------------------------------------------------------------
# characters


class Character(Mapping):
    """Laurent polynomial in q, t with integer coefficients, {(dq, dt): mult}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[tuple[int, int], int] = {}
        for key, m in items:
            key = (int(key[0]), int(key[1]))
            acc[key] = acc.get(key, 0) + int(m)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def monomials(cls, exps: Iterable[tuple[int, int]]) -> "Character":
        return cls((e, 1) for e in exps)

    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self):
        return iter(sorted(self._terms, reverse=True))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Character):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == Character(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Character") -> "Character":
        return Character(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Character":
        return Character({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other) -> "Character":
        if isinstance(other, int):
            return Character({k: v * other for k, v in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a, b), m in self._terms.items():
            for (c, d), n in other._terms.items():
                key = (a + c, b + d)
                out[key] = out.get(key, 0) + m * n
        return Character(out)

    __rmul__ = __mul__

    def shift(self, dq: int, dt: int) -> "Character":
        return Character({(a + dq, b + dt): m for (a, b), m in self._terms.items()})

    def bar(self) -> "Character":
        return Character({(-a, -b): m for (a, b), m in self._terms.items()})

    def total(self) -> int:
        return sum(self._terms.values())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def to_fraction(self) -> QTFraction:
        return QTFraction.from_terms(self._terms)

    def power_sum(self, r: int) -> QTFraction:
        """p_r evaluated on the virtual alphabet: sum of mult * m^r."""
        return QTFraction.from_terms({(a * r, b * r): m for (a, b), m in self._terms.items()})

    def __repr__(self):
        return f"Character({dict((k, self._terms[k]) for k in self)})"

    def to_text(self) -> str:
        return _poly_text_laurent(self._terms)


def _poly_text_laurent(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for (i, j) in sorted(terms, reverse=True):
        c = terms[(i, j)]
        factors = []
        if i:
            factors.append("q" if i == 1 else f"q^{i}")
        if j:
            factors.append("t" if j == 1 else f"t^{j}")
        mag = abs(c)
        body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class NonIsolatedFixedPoint(ValueError):
    """Lambda^* of a character containing the trivial monomial."""


def lambda_star(c: Mapping[tuple[int, int], int]) -> QTFraction:
    """Product over monomials m of (1 - m)^mult."""
    c = c if isinstance(c, Character) else Character(c)
    if (0, 0) in c:
        raise NonIsolatedFixedPoint(f"trivial weight with multiplicity {c[(0, 0)]}")
    num = _ONE
    den = _ONE
    shift_q = shift_t = 0
    for (a, b), m in c.items():
        # 1 - q^a t^b = q^{a-} t^{b-} * (q^{-a-} t^{-b-} - q^{a+} t^{b+}) with a = a+ - a-
        ap, am = max(a, 0), max(-a, 0)
        bp, bm = max(b, 0), max(-b, 0)
        factor = _poly({(am, bm): 1, (ap, bp): -1})
        if m > 0:
            num = num * factor ** m
            shift_q -= am * m
            shift_t -= bm * m
        else:
            den = den * factor ** (-m)
            shift_q += am * (-m)
            shift_t += bm * (-m)
    num = num * _poly({(max(shift_q, 0), max(shift_t, 0)): 1})
    den = den * _poly({(max(-shift_q, 0), max(-shift_t, 0)): 1})
    return QTFraction(num, den)
