"""Partitions, torus-fixed flags and their characters.

Conventions: a partition is a weakly decreasing tuple of positive ints, a
cell is ``(r, c)`` with row ``r`` (0-based, row r has length ``lam[r]``) and
column ``c``.  The weight of a cell is chi(r, c) = q^c t^r, stored as the
exponent pair ``(c, r)``.

A fixed point of PFH_{n,n-k} is a :class:`FlagPoint`: the partition
lambda = lambda^(n) together with the ordered cells (box_1, ..., box_k),
where box_j = lambda^(n-j+1) minus lambda^(n-j).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .qt import Character

Partition = tuple  # tuple[int, ...]
Cell = tuple  # (r, c)


class InvalidShape(ValueError):
    """A partition, cell or flag violating its invariants."""


# ---------------------------------------------------------------------------
# partitions


def partition(parts: Sequence[int]) -> Partition:
    """Validate and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise InvalidShape(f"non-positive part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidShape(f"{parts} is not weakly decreasing")
    return parts


def sort_partition(entries: Sequence[int]) -> Partition:
    """Sort decreasingly and throw away zeros."""
    return tuple(sorted((e for e in entries if e), reverse=True))


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def n_stat(lam: Partition) -> int:
    """n(lam) = sum (i-1) lam_i."""
    return sum(i * p for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse lexicographic."""
    out = []

    def rec(rem, mx, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rem, mx), 0, -1):
            prefix.append(p)
            rec(rem - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def cells(lam: Partition) -> list[Cell]:
    return [(r, c) for r, row in enumerate(lam) for c in range(row)]


def contains(lam: Partition, cell: Cell) -> bool:
    r, c = cell
    return 0 <= r < len(lam) and 0 <= c < lam[r]


@lru_cache(maxsize=None)
def addable_cells(lam: Partition) -> tuple[Cell, ...]:
    out = []
    for r in range(len(lam) + 1):
        c = lam[r] if r < len(lam) else 0
        if r == 0 or lam[r - 1] > c:
            out.append((r, c))
    return tuple(out)


@lru_cache(maxsize=None)
def removable_cells(lam: Partition) -> tuple[Cell, ...]:
    return tuple((r, lam[r] - 1) for r in range(len(lam))
                 if r == len(lam) - 1 or lam[r + 1] < lam[r])


def add_cell(lam: Partition, cell: Cell) -> Partition:
    r, c = cell
    if cell not in addable_cells(lam):
        raise InvalidShape(f"{cell} is not addable to {lam}")
    if r == len(lam):
        return lam + (1,)
    return lam[:r] + (lam[r] + 1,) + lam[r + 1:]


def remove_cell(lam: Partition, cell: Cell) -> Partition:
    if cell not in removable_cells(lam):
        raise InvalidShape(f"{cell} is not removable from {lam}")
    r = cell[0]
    if lam[r] == 1:
        return lam[:r]
    return lam[:r] + (lam[r] - 1,) + lam[r + 1:]


def arm_leg(lam: Partition, cell: Cell) -> tuple[int, int]:
    if not contains(lam, cell):
        raise InvalidShape(f"cell {cell} outside {lam}")
    r, c = cell
    return lam[r] - c - 1, conjugate(lam)[c] - r - 1


def weight(cell: Cell) -> tuple[int, int]:
    """Exponent pair of chi(cell) = q^c t^r."""
    return (cell[1], cell[0])


def is_horizontal_strip(big: Partition, small: Partition) -> bool:
    """big/small is a skew shape with at most one cell per column."""
    if len(small) > len(big) or any(s > b for s, b in zip(small, big)):
        return False
    return all(small[i] >= big[i + 1] if i < len(small) else big[i + 1] == 0
               for i in range(len(big) - 1))


# ---------------------------------------------------------------------------
# characters of Hilbert schemes


def char_B(lam: Partition) -> Character:
    """B_lam = sum of chi over the cells."""
    return Character.monomials(weight(s) for s in cells(lam))


_QT = Character({(1, 1): 1})
_QM1_TM1 = Character({(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 1})  # (q-1)(t-1)
_QM1 = Character({(1, 0): 1, (0, 0): -1})


def cotangent_hilb_armleg(lam: Partition) -> Character:
    terms = []
    for s in cells(lam):
        a, l = arm_leg(lam, s)
        terms.append(((a + 1, -l), 1))
        terms.append(((-a, l + 1), 1))
    return Character(terms)


def cotangent_hilb_closed(lam: Partition) -> Character:
    B = char_B(lam)
    Bs = B.bar()
    return _QT * B + Bs - _QM1_TM1 * B * Bs


class KernelMismatch(AssertionError):
    """Two independent formulas for the same quantity disagree."""


@lru_cache(maxsize=None)
def cotangent_hilb(lam: Partition) -> Character:
    """Character of the cotangent space of Hilb^n at I_lam."""
    via_arms = cotangent_hilb_armleg(lam)
    closed = cotangent_hilb_closed(lam)
    if via_arms != closed:
        raise KernelMismatch(f"cotangent character mismatch at {lam}")
    return via_arms


# ---------------------------------------------------------------------------
# flags


@dataclass(frozen=True, order=True)
class FlagPoint:
    lam: Partition
    order: tuple  # tuple of cells, box_1 first

    @property
    def n(self) -> int:
        return sum(self.lam)

    @property
    def k(self) -> int:
        return len(self.order)

    @property
    def weights(self) -> tuple[tuple[int, int], ...]:
        return tuple(weight(s) for s in self.order)

    def chain(self) -> list[Partition]:
        """[lambda^(n), lambda^(n-1), ..., lambda^(n-k)]."""
        out = [self.lam]
        cur = self.lam
        for s in self.order:
            cur = remove_cell(cur, s)
            out.append(cur)
        return out

    def smallest(self) -> Partition:
        return self.chain()[-1]

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "order": [list(s) for s in self.order]}

    @classmethod
    def from_json(cls, obj: dict) -> "FlagPoint":
        return make_flag(obj["lambda"], [tuple(s) for s in obj["order"]])

    def __str__(self):
        return f"{list(self.lam)}|{[list(s) for s in self.order]}"


def make_flag(lam: Sequence[int], order: Sequence[Cell]) -> FlagPoint:
    p = FlagPoint(partition(lam), tuple(tuple(int(x) for x in s) for s in order))
    validate_flag(p)
    return p


def validate_flag(p: FlagPoint) -> None:
    try:
        chain = p.chain()
    except InvalidShape as e:
        raise InvalidShape(f"invalid removal order in {p}: {e}") from None
    cols = [c for _, c in p.order]
    if len(set(cols)) != len(cols):
        raise InvalidShape(f"{p}: marked cells are not a horizontal strip")
    if not is_horizontal_strip(chain[0], chain[-1]):
        raise InvalidShape(f"{p}: lambda^(n) / lambda^(n-k) is not a horizontal strip")


def flag_from_chain(chain: Sequence[Partition]) -> FlagPoint:
    """Inverse of FlagPoint.chain."""
    chain = [partition(c) for c in chain]
    order = []
    for big, small in zip(chain, chain[1:]):
        diff = [(r, c) for (r, c) in cells(big) if not contains(small, (r, c))]
        if len(diff) != 1 or sum(big) != sum(small) + 1:
            raise InvalidShape(f"{small} is not {big} minus one cell")
        order.append(diff[0])
    return make_flag(chain[0], order)


@lru_cache(maxsize=None)
def enumerate_flags(n: int, k: int) -> tuple[FlagPoint, ...]:
    """The index set M(n, k) of fixed points of PFH_{n,n-k}, sorted."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    out = []

    def rec(lam, cur, order, used_cols):
        if len(order) == k:
            out.append(FlagPoint(lam, tuple(order)))
            return
        for s in removable_cells(cur):
            if s[1] in used_cols:
                continue
            order.append(s)
            rec(lam, remove_cell(cur, s), order, used_cols | {s[1]})
            order.pop()

    for lam in partitions(n):
        rec(lam, lam, [], frozenset())
    return tuple(sorted(out))


def interleave(p: FlagPoint) -> Partition:
    """Rows lambda^(n)_1, ..., lambda^(n-k)_1, lambda^(n)_2, ... as one partition."""
    chain = p.chain()
    rows = []
    for r in range(len(p.lam)):
        for part in chain:
            rows.append(part[r] if r < len(part) else 0)
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise InvalidShape(f"{p}: interleaved rows {rows} are not decreasing")
    return sort_partition(rows)


@lru_cache(maxsize=None)
def cotangent_flag_formula(p: FlagPoint) -> Character:
    chain = p.chain()
    Bsmall = char_B(chain[-1])
    Bbig_s = char_B(chain[0]).bar()
    w = p.weights
    pairs = Character(((w[i][0] - w[j][0], w[i][1] - w[j][1]), 1)
                      for i in range(len(w)) for j in range(i + 1))
    return _QT * Bsmall + Bbig_s - _QM1_TM1 * Bsmall * Bbig_s + _QM1 * pairs


@lru_cache(maxsize=None)
def cotangent_via_interleave(p: FlagPoint) -> Character:
    """Gamma-invariant part of the Hilbert scheme character at the interleaved ideal."""
    m = p.k + 1
    omega = cotangent_hilb(interleave(p))
    return Character(((a, b // m), mult) for (a, b), mult in omega.items() if b % m == 0)


@lru_cache(maxsize=None)
def cotangent_flag(p: FlagPoint) -> Character:
    """Character of the cotangent space of PFH_{n,n-k} at the fixed point p.

    Cross-checked against the interleaving construction; the result must be
    an honest representation of dimension 2n - k.
    """
    ch = cotangent_flag_formula(p)
    if ch != cotangent_via_interleave(p):
        raise KernelMismatch(f"flag character mismatch at {p}")
    if not ch.is_effective() or ch.total() != 2 * p.n - p.k:
        raise KernelMismatch(f"{p}: cotangent character {ch} is not of dimension {2 * p.n - p.k}")
    return ch


def theta_sum(p: FlagPoint) -> Character:
    """k q + sum of theta(box) over the cells of lambda^(n-k).

    This reproduces the cotangent character (not its dual).  In the case
    with a strip cell above the box, the leg is measured in lambda^(n-k) and
    labels are read from the far end of the flag: the arms are taken in
    lambda^(n-i+1) and lambda^(n-i).
    """
    chain = p.chain()
    k = p.k
    small, big = chain[-1], chain[0]
    label_in_col = {s[1]: j + 1 for j, s in enumerate(p.order)}
    terms = [((1, 0), k)] if k else []
    for r, c in cells(small):

        def arm(j):
            # arm in the partition of size n-k+j
            return chain[k - j][r] - c - 1

        i = label_in_col.get(c)
        if i is None:
            leg = conjugate(big)[c] - r - 1
            terms.append(((arm(0) + 1, -leg), 1))
            terms.append(((-arm(k), leg + 1), 1))
        else:
            leg = conjugate(small)[c] - r - 1
            terms.append(((arm(k - i + 1) + 1, -leg - 1), 1))
            terms.append(((-arm(k - i), leg + 1), 1))
    return Character(terms)


def tangent_theta(p: FlagPoint) -> Character:
    """Tangent character: the dual of the theta sum, checked against bar(cotangent)."""
    tangent = theta_sum(p).bar()
    if tangent != cotangent_flag(p).bar():
        raise KernelMismatch(f"theta character mismatch at {p}")
    return tangent


# ---------------------------------------------------------------------------
# A(n, k) and the bijection with M(n, k)


@dataclass(frozen=True, order=True)
class AIndex:
    mu: Partition
    a: tuple

    @property
    def size(self) -> int:
        return sum(self.mu) + sum(self.a)

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "a": list(self.a)}

    @classmethod
    def from_json(cls, obj: dict) -> "AIndex":
        return cls(partition(obj["mu"]), tuple(int(x) for x in obj["a"]))

    def __str__(self):
        return f"({list(self.mu)};{list(self.a)})"


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_a_indices(n: int, k: int) -> tuple[AIndex, ...]:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    out = []
    for m in range(n - k + 1):
        for mu in partitions(m):
            for a in compositions(n - k - m, k):
                out.append(AIndex(mu, a))
    return tuple(sorted(out))


def to_flag(x: AIndex, n: int, k: int) -> FlagPoint:
    """lambda^(n-i) = sort(mu, a_1..a_i, a_{i+1}+1..a_k+1)'."""
    if len(x.a) != k or any(v < 0 for v in x.a) or x.size != n - k:
        raise InvalidShape(f"{x} is not in A({n},{k})")
    chain = []
    for i in range(k + 1):
        entries = list(x.mu) + list(x.a[:i]) + [v + 1 for v in x.a[i:]]
        chain.append(conjugate(sort_partition(entries)))
    return flag_from_chain(chain)


def from_flag(p: FlagPoint) -> AIndex:
    """Inverse of :func:`to_flag`: a_i is the row of box_i."""
    a = tuple(r for r, _ in p.order)
    remaining = list(conjugate(p.smallest()))
    for v in a:
        if v:
            remaining.remove(v)
    return AIndex(sort_partition(remaining), a)


# ---------------------------------------------------------------------------
# the order <=_bru on A(n, k)


def alpha_vector(x: AIndex, l: int | None = None) -> tuple[int, ...]:
    """(a_k+1, ..., a_1+1; mu_l, ..., mu_1) with zero padding."""
    if l is None:
        l = len(x.mu) + 1
    if l <= len(x.mu):
        raise ValueError("l must exceed the length of mu")
    mu_rev = tuple(reversed(x.mu + (0,) * (l - len(x.mu))))
    return tuple(v + 1 for v in reversed(x.a)) + mu_rev


def from_alpha(alpha: Sequence[int], k: int) -> AIndex | None:
    """Read (mu, a) back, sorting the partition slots; None if an a-slot is 0."""
    head = alpha[:k]
    if any(v <= 0 for v in head):
        return None
    return AIndex(sort_partition(alpha[k:]), tuple(v - 1 for v in reversed(head)))


def _labelled_moves(x: AIndex, l: int | None = None) -> Iterator[tuple[str, AIndex]]:
    k = len(x.a)
    alpha = alpha_vector(x, l)
    N = len(alpha)
    for i in range(N):
        for j in range(N):
            if i == j:
                continue
            ai, aj = alpha[i], alpha[j]
            new = list(alpha)
            if i < j and ai > aj:
                kind = "swap"
                new[i], new[j] = aj, ai
            elif ai < aj - 1:
                kind = "transfer"
                new[i], new[j] = aj - 1, ai + 1
            else:
                continue
            y = from_alpha(new, k)
            if y is not None and y != x:
                yield kind, y


def bruhat_moves(x: AIndex, l: int | None = None) -> set[AIndex]:
    """Elements reachable from x by a single move; each is strictly larger."""
    return {y for _, y in _labelled_moves(x, l)}


@lru_cache(maxsize=None)
def bruhat_up_set(x: AIndex, l: int | None = None) -> frozenset[AIndex]:
    """All y with x <=_bru y (BFS over moves)."""
    seen = {x}
    todo = deque([x])
    while todo:
        cur = todo.popleft()
        for y in bruhat_moves(cur, l):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(seen)


@lru_cache(maxsize=None)
def _leading_graph(n: int, k: int) -> dict:
    """Cover edges of the leading-term order on A(n, k).

    Swap moves point up and transfer moves point down, so that k = 0 gives
    dominance order with (n) on top.
    """
    l = n - k + 1
    up: dict = {x: set() for x in enumerate_a_indices(n, k)}
    for x in up:
        for kind, y in _labelled_moves(x, l):
            if kind == "swap":
                up[x].add(y)
            else:
                up[y].add(x)
    return up


@lru_cache(maxsize=None)
def leading_up_set(x: AIndex) -> frozenset[AIndex]:
    k = len(x.a)
    graph = _leading_graph(x.size + k, k)
    seen = {x}
    todo = deque([x])
    while todo:
        cur = todo.popleft()
        for y in graph[cur]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(seen)


def bruhat_leq(x: AIndex, y: AIndex, *, leading: bool = False) -> bool:
    """x <=_bru y.

    By default the moves are read literally.  ``leading=True`` selects the
    orientation under which the basis v_{mu,a} is unitriangular: swaps go up,
    transfers go down.
    """
    if len(x.a) != len(y.a) or x.size != y.size:
        raise ValueError(f"{x} and {y} lie in different A(n,k)")
    if leading:
        return y in leading_up_set(x)
    return y in bruhat_up_set(x)


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order lam >= mu on partitions of the same size."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance needs equal sizes")
    s1 = s2 = 0
    for i in range(max(len(lam), len(mu))):
        s1 += lam[i] if i < len(lam) else 0
        s2 += mu[i] if i < len(mu) else 0
        if s1 < s2:
            return False
    return True


def standard_tableaux(lam: Partition) -> Iterator[tuple[Cell, ...]]:
    """Standard tableaux as the sequence of cells labelled 1, 2, ..., n."""
    n = sum(lam)

    def rec(cur, seq):
        if len(seq) == n:
            yield tuple(seq)
            return
        for s in addable_cells(cur):
            if contains(lam, s):
                seq.append(s)
                yield from rec(add_cell(cur, s), seq)
                seq.pop()

    yield from rec((), [])

