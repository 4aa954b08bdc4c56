"""Machine verification of the defining relations on fixed-point bases.

A relation is a family of identities ``sum c_j W_j = sum c'_j W'_j`` between
generator words, instantiated for every admissible index at a given k.
Scalars may depend on the source k.  A word whose source idempotent does not
exist (``d-`` at k = 0) contributes zero, which is the path-algebra
convention R = R Id_k.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Sequence, Union

from .fixed_points import (
    KVector,
    VanishingGrade,
    Word,
    apply_word,
    parse_word,
    q,
    qt,
    t,
)
from .qt import ONE, QTFraction
from .shapes import enumerate_flags

Scalar = Union[QTFraction, Callable[[int], QTFraction]]
Term = tuple  # (Scalar, Word)


@dataclass(frozen=True)
class Instance:
    label: str
    lhs: tuple  # of Term
    rhs: tuple


@dataclass(frozen=True)
class RelationSpec:
    id: str
    group: str
    text: str
    min_k: int
    instances: Callable[[int], list[Instance]]

    def instantiate(self, k: int) -> list[Instance]:
        if k < self.min_k:
            return []
        return self.instances(k)


@dataclass
class RelationReport:
    id: str
    n: int
    k: int
    passed: bool
    instances: int = 0
    vectors: int = 0
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, obj: dict) -> "RelationReport":
        return cls(**obj)


def _scalar(c: Scalar, k: int) -> QTFraction:
    return c(k) if callable(c) else c


def _terms(*pairs) -> tuple:
    """Pairs (scalar, word-text) or bare word-texts (scalar 1)."""
    out = []
    for item in pairs:
        if isinstance(item, str):
            out.append((ONE, parse_word(item)))
        else:
            c, w = item
            out.append((c if callable(c) else _as_fraction(c), parse_word(w)))
    return tuple(out)


def _as_fraction(c) -> QTFraction:
    return c if isinstance(c, QTFraction) else QTFraction.from_rational(c)


def _side(terms: Sequence[Term], v: KVector, k: int) -> KVector | None:
    acc = None
    for c, w in terms:
        try:
            img = apply_word(w, v)
        except VanishingGrade:
            continue
        img = img.scale(_scalar(c, k))
        acc = img if acc is None else acc + img
    return acc


def residual(inst: Instance, v: KVector) -> KVector | None:
    """lhs(v) - rhs(v); None when both sides vanish identically."""
    k = v.k
    a = _side(inst.lhs, v, k)
    b = _side(inst.rhs, v, k)
    if a is None and b is None:
        return None
    if a is None:
        return -b
    if b is None:
        return a
    return a - b


# ---------------------------------------------------------------------------
# catalog


def _chain(name: str, idx: Iterable[int]) -> str:
    return " ".join(f"{name}:{i}" for i in idx)


def _spec(id, group, text, min_k, fn) -> RelationSpec:
    return RelationSpec(id, group, text, min_k, fn)


def _one(label, lhs, rhs) -> list[Instance]:
    return [Instance(label, lhs, rhs)]


def _qinv(e: int = 1):
    return q ** (-e)


def builtin_relations() -> list[RelationSpec]:
    R: list[RelationSpec] = []
    add = R.append

    # Hecke algebra
    add(_spec("hecke_quadratic", "hecke", "(T_i - 1)(T_i + q) = 0", 2, lambda k: [
        Instance(f"i={i}", _terms(f"T:{i} T:{i}", (q - 1, f"T:{i}")), _terms((q, "")))
        for i in range(1, k)]))
    add(_spec("hecke_braid", "hecke", "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", 3, lambda k: [
        Instance(f"i={i}", _terms(f"T:{i} T:{i + 1} T:{i}"), _terms(f"T:{i + 1} T:{i} T:{i + 1}"))
        for i in range(1, k - 1)]))
    add(_spec("hecke_far_commute", "hecke", "T_i T_j = T_j T_i for |i-j| > 1", 4, lambda k: [
        Instance(f"i={i},j={j}", _terms(f"T:{i} T:{j}"), _terms(f"T:{j} T:{i}"))
        for i in range(1, k) for j in range(i + 2, k)]))
    add(_spec("hecke_inverse", "hecke", "T_i T_i^{-1} = 1", 2, lambda k: [
        Instance(f"i={i}", _terms(f"T:{i} Tinv:{i}"), _terms(""))
        for i in range(1, k)]))

    # affine Hecke relations with the line bundles z_i
    add(_spec("Tz_conjugation", "z", "T_i z_i T_i = q z_{i+1}", 2, lambda k: [
        Instance(f"i={i}", _terms(f"T:{i} z:{i} T:{i}"), _terms((q, f"z:{i + 1}")))
        for i in range(1, k)]))
    add(_spec("Tinv_z_conjugation", "z", "T_i^{-1} z_{i+1} T_i^{-1} = q^{-1} z_i", 2, lambda k: [
        Instance(f"i={i}", _terms(f"Tinv:{i} z:{i + 1} Tinv:{i}"), _terms((_qinv(), f"z:{i}")))
        for i in range(1, k)]))
    add(_spec("z_T_commute", "z", "z_i T_j = T_j z_i for i not in {j, j+1}", 3, lambda k: [
        Instance(f"i={i},j={j}", _terms(f"z:{i} T:{j}"), _terms(f"T:{j} z:{i}"))
        for i in range(1, k + 1) for j in range(1, k) if i not in (j, j + 1)]))
    add(_spec("z_commute", "z", "z_i z_j = z_j z_i", 2, lambda k: [
        Instance(f"i={i},j={j}", _terms(f"z:{i} z:{j}"), _terms(f"z:{j} z:{i}"))
        for i in range(1, k + 1) for j in range(i + 1, k + 1)]))

    # creation / annihilation
    add(_spec("dminus_square_T", "d", "d_-^2 T_{k-1} = d_-^2", 2, lambda k: _one(
        f"k={k}", _terms(f"d- d- T:{k - 1}"), _terms("d- d-"))))
    add(_spec("dminus_T", "d", "d_- T_i = T_i d_- (i <= k-2)", 3, lambda k: [
        Instance(f"i={i}", _terms(f"d- T:{i}"), _terms(f"T:{i} d-")) for i in range(1, k - 1)]))
    add(_spec("dplus_square_T", "d", "T_1 d_+^2 = d_+^2", 0, lambda k: _one(
        f"k={k}", _terms("T:1 d+ d+"), _terms("d+ d+"))))
    add(_spec("dplus_T", "d", "d_+ T_i = T_{i+1} d_+", 2, lambda k: [
        Instance(f"i={i}", _terms(f"d+ T:{i}"), _terms(f"T:{i + 1} d+")) for i in range(1, k)]))
    add(_spec("phi_commutator", "d", "(q-1) phi = d_+ d_- - d_- d_+", 1, lambda k: _one(
        f"k={k}", _terms((q - 1, "phi")), _terms("d+ d-", (-1, "d- d+")))))
    add(_spec("phi_dminus", "d", "q phi d_- = d_- phi T_{k-1}", 2, lambda k: _one(
        f"k={k}", _terms((q, "phi d-")), _terms(f"d- phi T:{k - 1}"))))
    add(_spec("phi_dplus", "d", "T_1 phi d_+ = q d_+ phi", 1, lambda k: _one(
        f"k={k}", _terms("T:1 phi d+"), _terms((q, "d+ phi")))))
    add(_spec("z_dminus", "zd", "z_i d_- = d_- z_i", 2, lambda k: [
        Instance(f"i={i}", _terms(f"z:{i} d-"), _terms(f"d- z:{i}")) for i in range(1, k)]))
    add(_spec("dplus_z", "zd", "d_+ z_i = z_{i+1} d_+", 1, lambda k: [
        Instance(f"i={i}", _terms(f"d+ z:{i}"), _terms(f"z:{i + 1} d+")) for i in range(1, k + 1)]))
    add(_spec("qt_twist", "zd", "z_1 (q d_+ d_- - d_- d_+) = qt (d_+ d_- - d_- d_+) z_k", 1,
              lambda k: _one(f"k={k}", _terms((q, "z:1 d+ d-"), (-1, "z:1 d- d+")),
                             _terms((qt, f"d+ d- z:{k}"), (-qt, f"d- d+ z:{k}")))))

    # derived relations for y_i
    add(_spec("commrel", "y", "d_+ d_- - d_- d_+ = (q-1) T_1 ... T_{k-1} y_k", 1, lambda k: _one(
        f"k={k}", _terms("d+ d-", (-1, "d- d+")),
        _terms((q - 1, (_chain("T", range(1, k)) + f" y:{k}").strip())))))
    add(_spec("phi_shift", "y", "phi T_i = T_{i+1} phi (i <= k-2)", 3, lambda k: [
        Instance(f"i={i}", _terms(f"phi T:{i}"), _terms(f"T:{i + 1} phi")) for i in range(1, k - 1)]))
    add(_spec("phi_square", "y", "phi^2 T_{k-1} = T_1 phi^2", 2, lambda k: _one(
        f"k={k}", _terms(f"phi phi T:{k - 1}"), _terms("T:1 phi phi"))))
    add(_spec("Ty_conjugation", "y", "T_i y_{i+1} T_i = q y_i", 2, lambda k: [
        Instance(f"i={i}", _terms(f"T:{i} y:{i + 1} T:{i}"), _terms((q, f"y:{i}")))
        for i in range(1, k)]))
    add(_spec("y_T_commute", "y", "y_i T_j = T_j y_i for i not in {j, j+1}", 3, lambda k: [
        Instance(f"i={i},j={j}", _terms(f"y:{i} T:{j}"), _terms(f"T:{j} y:{i}"))
        for i in range(1, k + 1) for j in range(1, k) if i not in (j, j + 1)]))
    add(_spec("y_commute", "y", "y_i y_j = y_j y_i", 2, lambda k: [
        Instance(f"i={i},j={j}", _terms(f"y:{i} y:{j}"), _terms(f"y:{j} y:{i}"))
        for i in range(1, k + 1) for j in range(i + 1, k + 1)]))
    add(_spec("dminus_y", "y", "d_- y_i = y_i d_- (i <= k-1)", 2, lambda k: [
        Instance(f"i={i}", _terms(f"d- y:{i}"), _terms(f"y:{i} d-")) for i in range(1, k)]))
    add(_spec("dplus_y", "y", "d_+ y_i = T_1 ... T_i y_i T_i^{-1} ... T_1^{-1} d_+", 1, lambda k: [
        Instance(f"i={i}", _terms(f"d+ y:{i}"),
                 _terms(f"{_chain('T', range(1, i + 1))} y:{i} {_chain('Tinv', range(i, 0, -1))} d+"))
        for i in range(1, k + 1)]))

    # relations of the q^{-1} half algebra for (T^{-1}, d_-, d*_+, zA)
    add(_spec("aqinv_hecke_quadratic", "aqinv", "(T_i^{-1} - 1)(T_i^{-1} + q^{-1}) = 0", 2, lambda k: [
        Instance(f"i={i}", _terms(f"Tinv:{i} Tinv:{i}", (_qinv() - 1, f"Tinv:{i}")), _terms((_qinv(), "")))
        for i in range(1, k)]))
    add(_spec("aqinv_Tz", "aqinv", "T_i^{-1} zA_{i+1} T_i^{-1} = q^{-1} zA_i", 2, lambda k: [
        Instance(f"i={i}", _terms(f"Tinv:{i} zA:{i + 1} Tinv:{i}"), _terms((_qinv(), f"zA:{i}")))
        for i in range(1, k)]))
    add(_spec("aqinv_zA_T_commute", "aqinv", "zA_i T_j^{-1} = T_j^{-1} zA_i for i not in {j, j+1}", 3,
              lambda k: [Instance(f"i={i},j={j}", _terms(f"zA:{i} Tinv:{j}"), _terms(f"Tinv:{j} zA:{i}"))
                         for i in range(1, k + 1) for j in range(1, k) if i not in (j, j + 1)]))
    add(_spec("aqinv_zA_commute", "aqinv", "zA_i zA_j = zA_j zA_i", 2, lambda k: [
        Instance(f"i={i},j={j}", _terms(f"zA:{i} zA:{j}"), _terms(f"zA:{j} zA:{i}"))
        for i in range(1, k + 1) for j in range(i + 1, k + 1)]))
    add(_spec("aqinv_dminus_square", "aqinv", "d_-^2 T_{k-1}^{-1} = d_-^2", 2, lambda k: _one(
        f"k={k}", _terms(f"d- d- Tinv:{k - 1}"), _terms("d- d-"))))
    add(_spec("aqinv_dminus_zA", "aqinv", "d_- zA_i = zA_i d_- (i <= k-1)", 2, lambda k: [
        Instance(f"i={i}", _terms(f"d- zA:{i}"), _terms(f"zA:{i} d-")) for i in range(1, k)]))
    add(_spec("aqinv_dplus_square", "aqinv", "T_1^{-1} d*_+^2 = d*_+^2", 0, lambda k: _one(
        f"k={k}", _terms("Tinv:1 d*+ d*+"), _terms("d*+ d*+"))))
    add(_spec("aqinv_dplus_T", "aqinv", "d*_+ T_i^{-1} = T_{i+1}^{-1} d*_+", 2, lambda k: [
        Instance(f"i={i}", _terms(f"d*+ Tinv:{i}"), _terms(f"Tinv:{i + 1} d*+")) for i in range(1, k)]))
    add(_spec("aqinv_dplus_zA", "aqinv",
              "d*_+ zA_i = T_1^{-1} ... T_i^{-1} zA_i T_i ... T_1 d*_+", 1, lambda k: [
                  Instance(f"i={i}", _terms(f"d*+ zA:{i}"),
                           _terms(f"{_chain('Tinv', range(1, i + 1))} zA:{i} {_chain('T', range(i, 0, -1))} d*+"))
                  for i in range(1, k + 1)]))
    add(_spec("aqinv_commrel", "aqinv",
              "d*_+ d_- - d_- d*_+ = (q^{-1}-1) T_1^{-1} ... T_{k-1}^{-1} zA_k", 1, lambda k: _one(
                  f"k={k}", _terms("d*+ d-", (-1, "d- d*+")),
                  _terms((_qinv() - 1, (_chain("Tinv", range(1, k)) + f" zA:{k}").strip())))))

    # mixed relations between the two halves
    add(_spec("yz_dplus_zA", "yz", "d_+ zA_i = zA_{i+1} d_+", 1, lambda k: [
        Instance(f"i={i}", _terms(f"d+ zA:{i}"), _terms(f"zA:{i + 1} d+")) for i in range(1, k + 1)]))
    add(_spec("yz_dstar_y", "yz", "d*_+ y_i = y_{i+1} d*_+", 1, lambda k: [
        Instance(f"i={i}", _terms(f"d*+ y:{i}"), _terms(f"y:{i + 1} d*+")) for i in range(1, k + 1)]))
    add(_spec("yz_exchange", "yz", "zA_1 d_+ = -t q^{k+1} y_1 d*_+", 0, lambda k: _one(
        f"k={k}", _terms("zA:1 d+"), _terms((lambda kk: -t * q ** (kk + 1), "y:1 d*+")))))

    # the antilinear involution and dualities
    add(_spec("N_involution", "N", "N^2 = 1", 0, lambda k: _one(f"k={k}", _terms("N N"), _terms(""))))
    add(_spec("N_dminus", "N", "N d_- N = d_-", 1, lambda k: _one(f"k={k}", _terms("N d- N"), _terms("d-"))))
    add(_spec("N_T", "N", "N T_i N = T_i^{-1}", 2, lambda k: [
        Instance(f"i={i}", _terms(f"N T:{i} N"), _terms(f"Tinv:{i}")) for i in range(1, k)]))
    add(_spec("N_dplus", "N", "N d_+ N = q^{-k} z_1 d_+", 0, lambda k: _one(
        f"k={k}", _terms("N d+ N"), _terms((lambda kk: q ** (-kk), "z:1 d+")))))
    add(_spec("SD_involution", "N", "SD^2 = 1 on the I basis", 0, lambda k: _one(
        f"k={k}", _terms("toH SD SD toI"), _terms(""))))
    add(_spec("star_involution", "N", "star^2 = 1 on the Idual basis", 0, lambda k: _one(
        f"k={k}", _terms("toH star star toIdual"), _terms(""))))
    add(_spec("N_serre_twist", "N", "N = L SD L^{-1}", 0, lambda k: _one(
        f"k={k}", _terms("N"), _terms("L toH SD toI Linv"))))
    return R


def relation_ids() -> list[str]:
    return [r.id for r in builtin_relations()]


def get_relation(rel_id: str) -> RelationSpec:
    for r in builtin_relations():
        if r.id == rel_id:
            return r
    raise KeyError(rel_id)


# ---------------------------------------------------------------------------
# checking


def check_relation(spec: RelationSpec, n: int, k: int) -> RelationReport:
    """Apply lhs - rhs to every H basis vector of U_{n,k}; exact comparison."""
    insts = spec.instantiate(k)
    flags = enumerate_flags(n, k)
    report = RelationReport(spec.id, n, k, True, len(insts), len(flags))
    for inst in insts:
        for p in flags:
            res = residual(inst, KVector.basis_vector(p))
            if res is not None and not res.is_zero():
                report.passed = False
                report.counterexample = {
                    "instance": inst.label,
                    "flag": p.to_json(),
                    "residual": res.to_json(),
                }
                return report
    return report


def grades(max_n: int, max_k: int) -> Iterator[tuple[int, int]]:
    for n in range(max_n + 1):
        for k in range(min(n, max_k) + 1):
            yield n, k


def run_suite(max_n: int, max_k: int, relations: Sequence[RelationSpec] | None = None,
              progress: Callable[[RelationReport], None] | None = None) -> list[RelationReport]:
    if max_k > max_n:
        raise ValueError("need max_k <= max_n")
    specs = builtin_relations() if relations is None else list(relations)
    out = []
    for spec in specs:
        for n, k in grades(max_n, max_k):
            if k < spec.min_k:
                continue
            rep = check_relation(spec, n, k)
            if rep.instances == 0:
                continue
            out.append(rep)
            if progress:
                progress(rep)
    return out


def reports_to_json(reports: Sequence[RelationReport]) -> str:
    return json.dumps({"passed": all(r.passed for r in reports),
                       "reports": [r.to_json() for r in reports]}, indent=2, sort_keys=True)


def reports_from_json(text: str) -> list[RelationReport]:
    return [RelationReport.from_json(r) for r in json.loads(text)["reports"]]
