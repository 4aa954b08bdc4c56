"""The torus-fixed-point representation U = sum over (n, k) of K(PFH_{n,n-k}).

Vectors are finite combinations of fixed-point classes indexed by
:class:`~flaghilb.shapes.FlagPoint`.  Three diagonal bases are supported:

* ``H``: H_{lam,w} = (-1)^{|lam|} q^{n(lam')} t^{n(lam)} I_{lam,w}
* ``I``: the classes of the fixed points themselves
* ``Idual``: I'_{lam,w} = I_{lam,w} / Lambda^*(cotangent character)

Generators act basis-vector-wise; images of basis vectors are cached.
Words are read in algebraic order, so the rightmost symbol acts first.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .qt import ONE, ZERO, Character, QTFraction, bar, from_text, lambda_star, to_text
from .shapes import (
    FlagPoint,
    InvalidShape,
    KernelMismatch,
    Partition,
    add_cell,
    addable_cells,
    arm_leg,
    cells,
    char_B,
    conjugate,
    cotangent_flag,
    enumerate_flags,
    n_stat,
    validate_flag,
    weight,
)

BASES = ("H", "I", "Idual")

q = QTFraction.monomial(1, 0)
t = QTFraction.monomial(0, 1)
qt = q * t


class GradeError(ValueError):
    """A generator applied outside its domain idempotent."""


class VanishingGrade(GradeError):
    """The source idempotent of a generator does not exist (e.g. d- on k = 0).

    Inside relation formulas such terms are the zero operator.
    """


class WordSyntaxError(ValueError):
    def __init__(self, msg: str, position: int):
        super().__init__(f"{msg} (token {position})")
        self.position = position


# ---------------------------------------------------------------------------
# test mode


_TEST_MODE = threading.local()


def set_test_mode(on: bool) -> None:
    """Enable cross-checks of closed forms against independent routes."""
    _TEST_MODE.on = bool(on)


def test_mode() -> bool:
    return getattr(_TEST_MODE, "on", False)


# Fault injection for mutation tests of the verification harness.
FAULT_KINDS = ("T", "d+", "pieri")
_FAULT: list[str | None] = [None]


@contextmanager
def injected_fault(kind: str):
    """Corrupt one coefficient of T, d+ or the Pieri product (q -> q+1)."""
    if kind not in FAULT_KINDS:
        raise ValueError(f"unknown fault {kind!r}")
    clear_caches()
    _FAULT[0] = kind
    try:
        yield
    finally:
        _FAULT[0] = None
        clear_caches()


# ---------------------------------------------------------------------------
# vectors


def _chi(cell) -> QTFraction:
    c, r = weight(cell)
    return QTFraction.monomial(c, r)


class KVector:
    """Immutable element of U_{n,k} in one of the bases H, I, Idual."""

    __slots__ = ("grade", "basis", "_terms")

    def __init__(self, grade: tuple[int, int], basis: str, terms: Mapping[FlagPoint, QTFraction] = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        n, k = grade
        clean = {}
        for p, c in dict(terms).items():
            if p.n != n or p.k != k:
                raise GradeError(f"flag {p} does not lie in grade {grade}")
            c = c if isinstance(c, QTFraction) else QTFraction.from_rational(c)
            if c:
                clean[p] = c
        self.grade = (int(n), int(k))
        self.basis = basis
        self._terms = clean

    @classmethod
    def basis_vector(cls, p: FlagPoint, basis: str = "H") -> "KVector":
        return cls((p.n, p.k), basis, {p: ONE})

    @classmethod
    def vacuum(cls, basis: str = "H") -> "KVector":
        return cls.basis_vector(FlagPoint((), ()), basis)

    @classmethod
    def zero(cls, grade, basis: str = "H") -> "KVector":
        return cls(grade, basis, {})

    @property
    def n(self) -> int:
        return self.grade[0]

    @property
    def k(self) -> int:
        return self.grade[1]

    def terms(self) -> dict[FlagPoint, QTFraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def support(self) -> list[FlagPoint]:
        return sorted(self._terms)

    def coeff(self, p: FlagPoint) -> QTFraction:
        return self._terms.get(p, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_compatible(self, other: "KVector"):
        if self.grade != other.grade or self.basis != other.basis:
            raise GradeError(
                f"cannot combine {self.grade}/{self.basis} with {other.grade}/{other.basis}")

    def __add__(self, other: "KVector") -> "KVector":
        self._check_compatible(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, ZERO) + c
        return KVector(self.grade, self.basis, out)

    def __neg__(self) -> "KVector":
        return KVector(self.grade, self.basis, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "KVector") -> "KVector":
        return self + (-other)

    def scale(self, c) -> "KVector":
        c = c if isinstance(c, QTFraction) else QTFraction.from_rational(c)
        return KVector(self.grade, self.basis, {p: c * v for p, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, KVector):
            return NotImplemented
        return self.grade == other.grade and self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        return hash((self.grade, self.basis, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"({to_text(c)})*[{p}]" for p, c in self.items()) or "0"
        return f"KVector{self.grade}{self.basis}: {body}"

    def to_json(self) -> dict:
        return {
            "grade": list(self.grade),
            "basis": self.basis,
            "terms": [{"flag": p.to_json(), "coeff": to_text(c)} for p, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "KVector":
        terms = {FlagPoint.from_json(e["flag"]): from_text(e["coeff"]) for e in obj["terms"]}
        return cls(tuple(obj["grade"]), obj["basis"], terms)


def _accumulate(out: dict, p: FlagPoint, c: QTFraction) -> None:
    if p in out:
        out[p] = out[p] + c
    else:
        out[p] = c


def _extend(vec: KVector, image: Callable[[FlagPoint], Mapping[FlagPoint, QTFraction]],
            grade: tuple[int, int], basis: str | None = None) -> KVector:
    """Linear extension of a basis-vector map."""
    out: dict = {}
    for p, c in vec._terms.items():
        for p2, c2 in image(p).items():
            _accumulate(out, p2, c * c2)
    return KVector(grade, basis or vec.basis, out)


# ---------------------------------------------------------------------------
# Pieri coefficients


def _added_cell(lam_plus: Partition, lam: Partition):
    diff = [s for s in cells(lam_plus) if s not in set(cells(lam))]
    if sum(lam_plus) != sum(lam) + 1 or len(diff) != 1 or set(cells(lam)) - set(cells(lam_plus)):
        raise InvalidShape(f"{lam_plus} is not {lam} plus one cell")
    return diff[0]


@lru_cache(maxsize=None)
def pieri_product(lam_plus: Partition, lam: Partition) -> QTFraction:
    """d_{lam+x, lam} from the arm/leg product over the row and column of x."""
    r0, c0 = _added_cell(lam_plus, lam)
    out = ONE
    for c in range(c0):
        a_s, l_s = arm_leg(lam, (r0, c))
        a_b, l_b = arm_leg(lam_plus, (r0, c))
        num = (q + 1 if _FAULT[0] == "pieri" else q) ** a_s - t ** (l_s + 1)
        out = out * num / (q ** a_b - t ** (l_b + 1))
    for r in range(r0):
        a_s, l_s = arm_leg(lam, (r, c0))
        a_b, l_b = arm_leg(lam_plus, (r, c0))
        out = out * (q ** (a_s + 1) - t ** l_s) / (q ** (a_b + 1) - t ** l_b)
    return out


_QM1_TM1 = Character({(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 1})


@lru_cache(maxsize=None)
def pieri_lambda_star(lam_plus: Partition, lam: Partition) -> QTFraction:
    """d_{lam+x, lam} = x^{-1} Lambda^*(-x^{-1} + (t-1)(q-1) B_lam x^{-1} + 1)."""
    xc, xr = weight(_added_cell(lam_plus, lam))
    ch = (_QM1_TM1 * char_B(lam)).shift(-xc, -xr) + Character([((-xc, -xr), -1), ((0, 0), 1)])
    return QTFraction.monomial(-xc, -xr) * lambda_star(ch)


def pieri(lam_plus: Partition, lam: Partition) -> QTFraction:
    val = pieri_product(lam_plus, lam)
    if test_mode():
        _pieri_checked(lam_plus, lam)
    return val


@lru_cache(maxsize=None)
def _pieri_checked(lam_plus, lam) -> bool:
    if pieri_product(lam_plus, lam) != pieri_lambda_star(lam_plus, lam):
        raise KernelMismatch(f"Pieri coefficient mismatch at {lam_plus} / {lam}")
    return True


# ---------------------------------------------------------------------------
# basis changes


@lru_cache(maxsize=None)
def h_to_i_factor(lam: Partition) -> QTFraction:
    """H_{lam,w} = factor * I_{lam,w}."""
    sign = -1 if sum(lam) % 2 else 1
    return QTFraction.monomial(n_stat(conjugate(lam)), n_stat(lam), sign)


@lru_cache(maxsize=None)
def i_to_idual_factor(p: FlagPoint) -> QTFraction:
    """I_{lam,w} = factor * I'_{lam,w}, factor = Lambda^* of the cotangent character."""
    return lambda_star(cotangent_flag(p))


def _basis_scale(p: FlagPoint, src: str, dst: str) -> QTFraction:
    # express a src basis vector in dst coordinates
    to_i = {"H": h_to_i_factor(p.lam), "I": ONE}
    if src == dst:
        return ONE
    if src == "Idual":
        src_i = i_to_idual_factor(p).inv()
    else:
        src_i = to_i[src]
    if dst == "Idual":
        return src_i * i_to_idual_factor(p)
    return src_i / to_i[dst]


def convert_basis(v: KVector, to: str) -> KVector:
    if to not in BASES:
        raise ValueError(f"unknown basis {to!r}")
    if to == v.basis:
        return v
    return KVector(v.grade, to, {p: c * _basis_scale(p, v.basis, to) for p, c in v._terms.items()})


@lru_cache(maxsize=None)
def line_bundle_weight(lam: Partition) -> QTFraction:
    """Weight of the determinant line bundle at the fixed point lam."""
    return QTFraction.monomial(n_stat(conjugate(lam)), n_stat(lam))


def apply_L(v: KVector, inverse: bool = False) -> KVector:
    return KVector(v.grade, v.basis, {
        p: c * (line_bundle_weight(p.lam).inv() if inverse else line_bundle_weight(p.lam))
        for p, c in v._terms.items()})


# ---------------------------------------------------------------------------
# generators on basis vectors (H basis unless stated otherwise)


def _swap(order: tuple, m: int) -> tuple:
    o = list(order)
    o[m - 1], o[m] = o[m], o[m - 1]
    return tuple(o)


@lru_cache(maxsize=None)
def _T_image(m: int, p: FlagPoint) -> dict:
    wm, wm1 = _chi(p.order[m - 1]), _chi(p.order[m])
    diff = wm - wm1
    out = {p: ((q + 1 if _FAULT[0] == "T" else q) - 1) * wm1 / diff}
    swap_coeff = (wm - q * wm1) / diff
    if swap_coeff:
        target = FlagPoint(p.lam, _swap(p.order, m))
        validate_flag(target)
        out[target] = swap_coeff
    else:
        # horizontally adjacent pair: the swapped flag does not exist
        try:
            validate_flag(FlagPoint(p.lam, _swap(p.order, m)))
        except InvalidShape:
            pass
        else:
            raise KernelMismatch(f"vanishing swap coefficient at a valid flag {p}")
    return out


@lru_cache(maxsize=None)
def _Tinv_image(m: int, p: FlagPoint) -> dict:
    # T^{-1} = q^{-1} T + q^{-1}(q - 1)
    out = {p2: c / q for p2, c in _T_image(m, p).items()}
    _accumulate(out, p, (q - 1) / q)
    return {p2: c for p2, c in out.items() if c}


def _check_T_index(m: int, k: int):
    if not 1 <= m <= k - 1:
        raise GradeError(f"T_{m} needs 1 <= {m} <= k-1 = {k - 1}")


def apply_T(m: int, v: KVector) -> KVector:
    _check_T_index(m, v.k)
    if v.basis == "Idual":
        raise GradeError("T acts on the H or I basis; convert first")
    return _extend(v, lambda p: _T_image(m, p), v.grade)


def apply_Tinv(m: int, v: KVector) -> KVector:
    _check_T_index(m, v.k)
    if v.basis == "Idual":
        raise GradeError("T^{-1} acts on the H or I basis; convert first")
    return _extend(v, lambda p: _Tinv_image(m, p), v.grade)


def apply_z(j: int, v: KVector) -> KVector:
    if not 1 <= j <= v.k:
        raise GradeError(f"z_{j} needs 1 <= {j} <= k = {v.k}")
    return KVector(v.grade, v.basis, {p: c * _chi(p.order[j - 1]) for p, c in v._terms.items()})


def apply_dminus(v: KVector) -> KVector:
    if v.k == 0:
        raise VanishingGrade("d- on k = 0")
    if v.basis == "Idual":
        raise GradeError("d- acts on the H or I basis; convert first")
    return _extend(v, lambda p: {FlagPoint(p.lam, p.order[:-1]): ONE}, (v.n, v.k - 1))


def _strip_factor(x, ws: Iterable) -> QTFraction | None:
    """prod (x - t w)/(x - q t w); None when a numerator vanishes."""
    xf = _chi(x)
    out = ONE
    for s in ws:
        if (x[0], x[1]) == (s[0] + 1, s[1]):
            # x sits directly above a strip cell: the target is not a flag
            return None
        w = _chi(s)
        out = out * (xf - t * w) / (xf - qt * w)
    return out


@lru_cache(maxsize=None)
def _dplus_image(p: FlagPoint) -> dict:
    """d+ H = q^k sum_x d_{lam+x,lam} prod_i (x - t w_i)/(x - qt w_i) H_{lam+x, xw}."""
    k = p.k
    out = {}
    for x in addable_cells(p.lam):
        f = _strip_factor(x, p.order)
        if f is None:
            continue
        lam_x = add_cell(p.lam, x)
        target = FlagPoint(lam_x, (x,) + p.order)
        if test_mode():
            validate_flag(target)
        coeff = q ** k * pieri(lam_x, p.lam) * f
        if _FAULT[0] == "d+" and not out:
            coeff = coeff * (q + 1) / q
        out[target] = coeff
    return out


@lru_cache(maxsize=None)
def _dplus_image_I(p: FlagPoint) -> dict:
    """d+ I = -q^k sum_x x d_{lam+x,lam} prod_i (x - t w_i)/(x - qt w_i) I_{lam+x, xw}."""
    k = p.k
    out = {}
    for x in addable_cells(p.lam):
        f = _strip_factor(x, p.order)
        if f is None:
            continue
        lam_x = add_cell(p.lam, x)
        out[FlagPoint(lam_x, (x,) + p.order)] = -(q ** k) * _chi(x) * pieri(lam_x, p.lam) * f
    return out


def apply_dplus(v: KVector) -> KVector:
    grade = (v.n + 1, v.k + 1)
    if v.basis == "H":
        return _extend(v, _dplus_image, grade)
    if v.basis == "I":
        return _extend(v, _dplus_image_I, grade)
    raise GradeError("d+ acts on the H or I basis; convert first")


@lru_cache(maxsize=None)
def _phi_closed(p: FlagPoint) -> dict:
    """phi H_{lam,wy} = -q^{k-1} sum_x d x/(x - qt y) prod_{i<k} (...) H_{lam+x, xw}."""
    k = p.k
    w, y = p.order[:-1], _chi(p.order[-1])
    out = {}
    for x in addable_cells(p.lam):
        f = _strip_factor(x, w)
        if f is None:
            continue
        lam_x = add_cell(p.lam, x)
        xf = _chi(x)
        out[FlagPoint(lam_x, (x,) + w)] = -(q ** (k - 1)) * pieri(lam_x, p.lam) * xf / (xf - qt * y) * f
    return out


@lru_cache(maxsize=None)
def _phi_checked(p: FlagPoint) -> bool:
    e = KVector.basis_vector(p)
    comm = apply_dplus(apply_dminus(e)) - apply_dminus(apply_dplus(e))
    closed = KVector(comm.grade, "H", _phi_closed(p)).scale(q - 1)
    if comm != closed:
        raise KernelMismatch(f"phi closed form disagrees with (d+d- - d-d+)/(q-1) at {p}")
    return True


def _phi_image(p: FlagPoint) -> dict:
    if test_mode():
        _phi_checked(p)
    return _phi_closed(p)


def _via_H(v: KVector, op: Callable[[KVector], KVector]) -> KVector:
    if v.basis == "H":
        return op(v)
    if v.basis == "I":
        return convert_basis(op(convert_basis(v, "H")), "I")
    raise GradeError("operator acts on the H or I basis; convert first")


def apply_phi(v: KVector) -> KVector:
    if v.k == 0:
        raise GradeError("phi needs k >= 1")
    return _via_H(v, lambda u: _extend(u, _phi_image, (u.n + 1, u.k)))


def _apply_symbols(v: KVector, syms: Sequence[tuple]) -> KVector:
    # syms in application order (first element acts first)
    for name, idx in syms:
        v = _GENERATORS[name](v, idx)
    return v


@lru_cache(maxsize=None)
def _y_image(i: int, p: FlagPoint) -> dict:
    """y_i = q^{i-k} T_{i-1}^{-1} ... T_1^{-1} phi T_{k-1} ... T_i."""
    k = p.k
    syms = [("T", j) for j in range(i, k)] + [("phi", None)] + [("Tinv", j) for j in range(1, i)]
    out = _apply_symbols(KVector.basis_vector(p), syms)
    scale = q ** (i - k)
    return {p2: c * scale for p2, c in out._terms.items()}


def apply_y(i: int, v: KVector) -> KVector:
    if not 1 <= i <= v.k:
        raise GradeError(f"y_{i} needs 1 <= {i} <= k = {v.k}")
    return _via_H(v, lambda u: _extend(u, lambda p: _y_image(i, p), (u.n + 1, u.k)))


def apply_dplus_star(v: KVector) -> KVector:
    """q^{-k} z_1 d+ (k of the source)."""
    if v.basis != "H":
        raise GradeError("d*+ is defined on the H basis")
    return apply_z(1, apply_dplus(v)).scale(q ** (-v.k))


@lru_cache(maxsize=None)
def _zA_image(i: int, p: FlagPoint) -> dict:
    """-qt T_{i-1} ... T_1 y_1 T_1^{-1} ... T_{i-1}^{-1} z_i."""
    syms = ([("z", i)] + [("Tinv", j) for j in range(i - 1, 0, -1)] + [("y", 1)]
            + [("T", j) for j in range(1, i)])
    out = _apply_symbols(KVector.basis_vector(p), syms)
    return {p2: -qt * c for p2, c in out._terms.items()}


def apply_zA(i: int, v: KVector) -> KVector:
    """Image of the second family of z-generators under the map into the geometric algebra."""
    if not 1 <= i <= v.k:
        raise GradeError(f"zA_{i} needs 1 <= {i} <= k = {v.k}")
    return _via_H(v, lambda u: _extend(u, lambda p: _zA_image(i, p), (u.n + 1, u.k)))


def _bar_coeffs(v: KVector) -> KVector:
    return KVector(v.grade, v.basis, {p: bar(c) for p, c in v._terms.items()})


def apply_N(v: KVector) -> KVector:
    if v.basis != "H":
        raise GradeError("N is coefficient-wise bar in the H basis; convert first")
    return _bar_coeffs(v)


def apply_SD(v: KVector) -> KVector:
    if v.basis != "I":
        raise GradeError("SD is coefficient-wise bar in the I basis; convert first")
    return _bar_coeffs(v)


def apply_star(v: KVector) -> KVector:
    if v.basis != "Idual":
        raise GradeError("star is coefficient-wise bar in the Idual basis; convert first")
    return _bar_coeffs(v)


# ---------------------------------------------------------------------------
# words


_GENERATORS: dict[str, Callable[[KVector, int | None], KVector]] = {
    "d+": lambda v, i: apply_dplus(v),
    "d-": lambda v, i: apply_dminus(v),
    "T": lambda v, i: apply_T(i, v),
    "Tinv": lambda v, i: apply_Tinv(i, v),
    "z": lambda v, i: apply_z(i, v),
    "y": lambda v, i: apply_y(i, v),
    "phi": lambda v, i: apply_phi(v),
    "d*+": lambda v, i: apply_dplus_star(v),
    "zA": lambda v, i: apply_zA(i, v),
    "N": lambda v, i: apply_N(v),
    "SD": lambda v, i: apply_SD(v),
    "star": lambda v, i: apply_star(v),
    "L": lambda v, i: apply_L(v),
    "Linv": lambda v, i: apply_L(v, inverse=True),
    "toH": lambda v, i: convert_basis(v, "H"),
    "toI": lambda v, i: convert_basis(v, "I"),
    "toIdual": lambda v, i: convert_basis(v, "Idual"),
}

_INDEXED = {"T", "Tinv", "z", "y", "zA"}

# (dn, dk) per generator
_GRADING = {"d+": (1, 1), "d-": (0, -1), "y": (1, 0), "phi": (1, 0), "d*+": (1, 1), "zA": (1, 0)}


@dataclass(frozen=True)
class Word:
    """A generator word, stored left to right as written."""

    symbols: tuple[tuple[str, int | None], ...] = ()

    def __str__(self):
        return " ".join(f"{s}:{i}" if i is not None else s for s, i in self.symbols)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols)

    def grade_shift(self) -> tuple[int, int]:
        dn = sum(_GRADING.get(s, (0, 0))[0] for s, _ in self.symbols)
        dk = sum(_GRADING.get(s, (0, 0))[1] for s, _ in self.symbols)
        return dn, dk


def parse_word(text: str) -> Word:
    """Parse whitespace-separated tokens such as ``d- z:1 T:2 d+``."""
    syms = []
    for pos, tok in enumerate(text.split()):
        name, sep, arg = tok.partition(":")
        if name not in _GENERATORS:
            raise WordSyntaxError(f"unknown generator {tok!r}", pos)
        if name in _INDEXED:
            if not sep or not arg.lstrip("-").isdigit():
                raise WordSyntaxError(f"{name} needs an index, e.g. {name}:1", pos)
            syms.append((name, int(arg)))
        else:
            if sep:
                raise WordSyntaxError(f"{name} takes no index", pos)
            syms.append((name, None))
    return Word(tuple(syms))


def word(*tokens: str) -> Word:
    return parse_word(" ".join(tokens))


def apply_word(w: Word | str, v: KVector) -> KVector:
    """Apply w to v; the rightmost symbol acts first."""
    if isinstance(w, str):
        w = parse_word(w)
    syms = list(reversed(w.symbols))
    for step, (name, idx) in enumerate(syms):
        try:
            v = _GENERATORS[name](v, idx)
        except GradeError as e:
            label = f"{name}:{idx}" if idx is not None else name
            raise type(e)(f"step {step} ({label}): {e}") from None
    return v


def operator_matrix(w: Word | str, n: int, k: int, basis: str = "H"):
    """Dense matrix of w on U_{n,k}; columns follow enumerate_flags(n, k).

    Returns (rows, cols, matrix) where rows/cols are the flag lists.
    """
    if isinstance(w, str):
        w = parse_word(w)
    cols = list(enumerate_flags(n, k))
    images = [apply_word(w, KVector.basis_vector(p, basis)) for p in cols]
    if images:
        tn, tk = images[0].grade
    else:
        dn, dk = w.grade_shift()
        tn, tk = n + dn, k + dk
    rows = list(enumerate_flags(tn, tk)) if 0 <= tk <= tn else []
    index = {p: i for i, p in enumerate(rows)}
    mat = [[ZERO] * len(cols) for _ in rows]
    for j, img in enumerate(images):
        for p, c in img._terms.items():
            mat[index[p]][j] = c
    return rows, cols, mat


def clear_caches() -> None:
    for f in (pieri_product, pieri_lambda_star, _pieri_checked, _T_image, _Tinv_image,
              _dplus_image, _dplus_image_I, _phi_closed, _phi_checked, _y_image, _zA_image):
        f.cache_clear()
