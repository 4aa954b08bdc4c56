"""The isomorphism Phi: V_k -> U_k on the spanning family v_{mu,a}.

Phi is pinned down by equivariance and Phi(1 in V_0) = H_empty, so for any
word W in d+, d-, T_i, y_i we have Phi(W 1) = W H_empty.  The family

    v_{mu,a} = d-^l  y_1^{a_k} ... y_k^{a_1}  y_{k+1}^{mu_l - 1} ... y_{k+l}^{mu_1 - 1}  d+^{k+l} 1

with l = len(mu) has degree n - k in V_k and is indexed by A(n, k).

Labels.  The fixed point H_{mu,a} of the leading-term rules is the flag whose
``from_flag`` index is (mu, reversed a): d- removes a_1 and the innermost cell
of the flag is the last one in ``FlagPoint.order``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .fixed_points import (
    GradeError,
    KVector,
    VanishingGrade,
    Word,
    apply_word,
    parse_word,
)
from .linalg import LinearSolver, SingularMatrix, rank
from .polyrep import YPoly, poly_apply_word
from .qt import PoleError, QTFraction, ZERO, eval_at
from .shapes import (
    AIndex,
    FlagPoint,
    bruhat_leq,
    enumerate_a_indices,
    enumerate_flags,
    from_flag,
    sort_partition,
    to_flag,
)

CALIBRATION = {
    "mu_exponent_offset": -1,
    "a_exponents": "y_1^{a_k} ... y_k^{a_1}",
    "mu_exponents": "y_{k+1}^{mu_l - 1} ... y_{k+l}^{mu_1 - 1}",
    "label": "from_flag with a reversed",
    "order": "swap moves up, transfer moves down",
    "leading": "max",
}


def basis_label(p: FlagPoint) -> AIndex:
    """The index (mu, a) of H_{mu,a} at the fixed point p."""
    x = from_flag(p)
    return AIndex(x.mu, tuple(reversed(x.a)))


def label_flag(x: AIndex) -> FlagPoint:
    k = len(x.a)
    return to_flag(AIndex(x.mu, tuple(reversed(x.a))), x.size + k, k)


def v_exponents(x: AIndex) -> tuple[int, ...]:
    """y-exponents of the monomial in v_{mu,a}, for y_1, ..., y_{k+l}."""
    return tuple(reversed(x.a)) + tuple(m - 1 for m in reversed(x.mu))


def v_word(x: AIndex) -> Word:
    k, l = len(x.a), len(x.mu)
    exps = v_exponents(x)
    tokens = ["d-"] * l
    for i in range(len(exps), 0, -1):
        tokens += [f"y:{i}"] * exps[i - 1]
    tokens += ["d+"] * (k + l)
    return parse_word(" ".join(tokens))


@lru_cache(maxsize=None)
def phi_word_image(x: AIndex) -> KVector:
    """Phi(v_{mu,a}) = (the v-word) applied to H_empty."""
    return apply_word(v_word(x), KVector.vacuum())


@lru_cache(maxsize=None)
def v_polynomial(x: AIndex) -> YPoly:
    """v_{mu,a} computed in the polynomial representation."""
    return poly_apply_word(v_word(x), YPoly.one(0))


def support_labels(v: KVector) -> set[AIndex]:
    return {basis_label(p) for p, _ in v.items()}


def leading_index(v: KVector) -> AIndex | None:
    """The support label above every other one, or None."""
    sup = support_labels(v)
    tops = [s for s in sup if all(bruhat_leq(o, s, leading=True) for o in sup)]
    return tops[0] if len(tops) == 1 else None


@dataclass
class PhiWitness:
    index: AIndex
    image: KVector
    leading: AIndex | None
    calibration: dict = field(default_factory=lambda: dict(CALIBRATION))

    def to_json(self) -> dict:
        return {
            "index": self.index.to_json(),
            "image": self.image.to_json(),
            "leading": None if self.leading is None else self.leading.to_json(),
            "calibration": self.calibration,
        }


def phi_witness(x: AIndex) -> PhiWitness:
    img = phi_word_image(x)
    return PhiWitness(x, img, leading_index(img))


# ---------------------------------------------------------------------------
# triangularity and rank


def _sample_points(seed: int, count: int) -> Iterable[tuple[Fraction, Fraction]]:
    rng = random.Random(seed)
    for _ in range(count):
        yield Fraction(rng.randint(2, 97), rng.randint(2, 97)), Fraction(rng.randint(2, 97), rng.randint(2, 97))


def _fraction_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    M = [list(r) for r in rows]
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


def image_matrix(n: int, k: int) -> tuple[list[AIndex], list[FlagPoint], list[list[QTFraction]]]:
    """Columns phi_word_image(x), x in A(n, k), in fixed-point coordinates."""
    labels = list(enumerate_a_indices(n, k))
    flags = list(enumerate_flags(n, k))
    cols = [phi_word_image(x) for x in labels]
    mat = [[v.coeff(p) for v in cols] for p in flags]
    return labels, flags, mat


def certified_rank(mat: Sequence[Sequence[QTFraction]], seed: int = 0, tries: int = 4) -> int:
    """Rank over Q(q,t).

    A specialization at a regular point bounds the generic rank from below,
    so a full-rank specialization is a certificate; otherwise fall back to
    exact elimination over Q(q,t).
    """
    if not mat:
        return 0
    full = min(len(mat), len(mat[0]))
    for q0, t0 in _sample_points(seed, tries):
        try:
            rows = [[eval_at(c, q0, t0) if c else Fraction(0) for c in row] for row in mat]
        except (PoleError, ZeroDivisionError):
            continue
        if _fraction_rank(rows) == full:
            return full
    return rank(mat)


@dataclass
class TriangularityReport:
    n: int
    k: int
    size: int
    rank: int
    leading_ok: bool
    bijective: bool
    exact_labels: bool
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.rank == self.size and self.leading_ok and self.bijective

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "size": self.size, "rank": self.rank,
                "leading_ok": self.leading_ok, "bijective": self.bijective,
                "exact_labels": self.exact_labels, "passed": self.passed,
                "failures": self.failures}


def check_triangularity(n: int, k: int) -> TriangularityReport:
    labels, flags, mat = image_matrix(n, k)
    leads = {}
    failures = []
    exact = True
    for x in labels:
        lt = leading_index(phi_word_image(x))
        if lt is None:
            failures.append({"index": x.to_json(), "reason": "no unique leading index"})
            continue
        leads.setdefault(lt, []).append(x)
        exact &= lt == x
    bij = len(leads) == len(labels) and all(len(v) == 1 for v in leads.values())
    if not bij:
        failures.append({"reason": "leading-index map is not a bijection"})
    return TriangularityReport(n, k, len(labels), certified_rank(mat), not any(
        "index" in f for f in failures), bij, exact, failures)


# ---------------------------------------------------------------------------
# leading-term rules


def compositions_b_a(a: Sequence[int]) -> tuple[list[tuple], list[tuple]]:
    """The compositions b^i..b^1 and a^k..a^i of the y-step in the LT argument.

    i is the first position of max(a); b agrees with a except b_i = a_i - 1.
    Returns ([b^i, ..., b^1], [a^k, ..., a^i]) with 1-based superscripts.
    """
    a = tuple(a)
    k = len(a)
    m = max(a)
    if m == 0:
        raise ValueError("a = 0 has no y-step")
    i = a.index(m) + 1
    b = list(a)
    b[i - 1] = m - 1
    bs = {i: tuple(b)}
    for j in range(i - 1, 0, -1):
        prev = list(bs[j + 1])
        prev[j - 1], prev[j] = prev[j], prev[j - 1]
        bs[j] = tuple(prev)
    b1 = bs[1]
    as_ = {k: b1[1:] + (b1[0] + 1,)}
    for j in range(k - 1, i - 1, -1):
        nxt = list(as_[j + 1])
        nxt[j - 1], nxt[j] = nxt[j], nxt[j - 1]
        as_[j] = tuple(nxt)
    return [bs[j] for j in range(i, 0, -1)], [as_[j] for j in range(k, i - 1, -1)]


def _lt_of(v: KVector) -> AIndex | None:
    return leading_index(v) if not v.is_zero() else None


def check_lt_rules(n: int, k: int) -> dict:
    """The T, phi and d- leading-term rules on H_{mu,a}, and along the y-step recursion."""
    out = {"n": n, "k": k, "T": [0, 0], "d-": [0, 0], "phi": [0, 0], "phi_empty_mu": [0, 0],
           "recursion": [0, 0], "failures": []}

    def tally(key, ok, detail):
        out[key][0] += int(ok)
        out[key][1] += 1
        if not ok and len(out["failures"]) < 20:
            out["failures"].append({"rule": key, **detail})

    for p in enumerate_flags(n, k):
        x = basis_label(p)
        v = KVector.basis_vector(p, "H")
        mu, a = x.mu, x.a
        for i in range(1, k):
            b = list(a)
            b[i - 1], b[i] = b[i], b[i - 1]
            y = AIndex(mu, tuple(b))
            want = y if bruhat_leq(x, y, leading=True) else x
            for w in (f"T:{k - i}", f"Tinv:{k - i}"):
                got = _lt_of(apply_word(parse_word(w), v))
                tally("T", got == want, {"index": x.to_json(), "word": w})
        if k >= 1:
            want = AIndex(sort_partition(mu + (a[0] + 1,)), a[1:])
            got = _lt_of(apply_word(parse_word("d-"), v))
            tally("d-", got == want, {"index": x.to_json()})
            want = AIndex(mu, a[1:] + (a[0] + 1,))
            got = _lt_of(apply_word(parse_word("phi"), v))
            tally("phi", got == want, {"index": x.to_json()})
            if not mu:
                tally("phi_empty_mu", got == want, {"index": x.to_json()})
    # recursion g^j = T_{k-j} g^{j+1}, f^k = phi g^1, f^j = T_{k-j}^{-1} f^{j+1}
    if k >= 1:
        for x in enumerate_a_indices(n, k):
            if x.mu or max(x.a) == 0:
                continue
            bs, as_ = compositions_b_a(x.a)
            i = x.a.index(max(x.a)) + 1
            g = KVector.basis_vector(label_flag(AIndex((), bs[0])), "H")
            ok = _lt_of(g) == AIndex((), bs[0])
            for j in range(i - 1, 0, -1):
                g = apply_word(parse_word(f"T:{k - j}"), g)
                ok &= _lt_of(g) == AIndex((), bs[i - j])
            f = apply_word(parse_word("phi"), g)
            ok &= _lt_of(f) == AIndex((), as_[0])
            for j in range(k - 1, i - 1, -1):
                f = apply_word(parse_word(f"Tinv:{k - j}"), f)
                ok &= _lt_of(f) == AIndex((), as_[k - j])
            ok &= _lt_of(f) == x
            tally("recursion", ok, {"index": x.to_json()})
    out["passed"] = all(out[r][0] == out[r][1] for r in ("T", "d-", "phi_empty_mu", "recursion"))
    return out


# ---------------------------------------------------------------------------
# equivariance


def _poly_coords(F: YPoly, keys: Sequence) -> list[QTFraction]:
    return [F.coeff(key) for key in keys]


@lru_cache(maxsize=None)
def _v_basis(n: int, k: int):
    """Monomial keys, v-labels, and a solver expressing V_{n,k} elements in the v-basis."""
    labels = list(enumerate_a_indices(n, k))
    polys = [v_polynomial(x) for x in labels]
    keys = sorted({key for P in polys for key in P.keys()})
    mat = [[P.coeff(key) for P in polys] for key in keys]
    if len(keys) != len(labels):
        # pick a square, full-rank set of rows greedily
        chosen: list[int] = []
        for i in range(len(keys)):
            trial = [mat[j] for j in chosen + [i]]
            if rank(trial) == len(chosen) + 1:
                chosen.append(i)
            if len(chosen) == len(labels):
                break
        keys = [keys[i] for i in chosen]
        mat = [mat[i] for i in chosen]
    return labels, keys, LinearSolver(mat)


def v_coordinates(F: YPoly, n: int, k: int) -> dict[AIndex, QTFraction]:
    labels, keys, solver = _v_basis(n, k)
    sol = solver.solve(_poly_coords(F, keys))
    recon = None
    for x, c in zip(labels, sol):
        if c:
            term = v_polynomial(x).scale(c)
            recon = term if recon is None else recon + term
    if (recon or YPoly(k)) != F:
        raise SingularMatrix(f"element is not in the span of the v-basis of V_({n},{k})")
    return {x: c for x, c in zip(labels, sol) if c}


def phi_of(F: YPoly, n: int, k: int) -> KVector:
    """Phi(F) for F in V_{n,k}, through the v-basis."""
    acc = KVector.zero((n, k), "H")
    for x, c in v_coordinates(F, n, k).items():
        acc = acc + phi_word_image(x).scale(c)
    return acc


def check_phi_equivariance(word: Word | str, n: int, k: int) -> dict:
    """Phi(W v_x) (polynomial side) == W Phi(v_x) (geometric side) for x in A(n, k)."""
    w = parse_word(word) if isinstance(word, str) else word
    dn, dk = w.grade_shift()
    n2, k2 = n + dn, k + dk
    report = {"word": str(w), "n": n, "k": k, "checked": 0, "passed": True, "counterexample": None}
    for x in enumerate_a_indices(n, k):
        try:
            geo = apply_word(w, phi_word_image(x))
        except VanishingGrade:
            continue
        poly = poly_apply_word(w, v_polynomial(x))
        alg = phi_of(poly, n2, k2)
        report["checked"] += 1
        if alg != geo:
            report["passed"] = False
            report["counterexample"] = {"index": x.to_json(), "polynomial_side": alg.to_json(),
                                        "geometric_side": geo.to_json()}
            break
    return report


def generator_words(k: int, length: int) -> list[str]:
    """All words of exactly this length over d+, d-, T_i, y_i that are defined from grade k."""
    out = []

    def rec(kk: int, tokens: list[str]):
        if len(tokens) == length:
            out.append(" ".join(reversed(tokens)))
            return
        gens = ["d+"] + (["d-"] if kk >= 1 else []) + [f"T:{i}" for i in range(1, kk)] + \
               [f"y:{i}" for i in range(1, kk + 1)]
        for g in gens:
            nk = kk + 1 if g == "d+" else kk - 1 if g == "d-" else kk
            rec(nk, tokens + [g])

    rec(k, [])
    return out
