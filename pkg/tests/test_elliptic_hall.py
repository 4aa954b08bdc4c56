import pytest

from flaghilb.elliptic_hall import (
    apply_p1k,
    omega,
    p1k_direct,
    pmn_vacuum,
    pmn_word,
    pmn_word_literal,
    staircase,
    tableau_pmn,
    tableau_vector,
)
from flaghilb.fixed_points import GradeError, KVector, parse_word
from flaghilb.qt import ZERO, QTFraction
from flaghilb.shapes import make_flag, partitions

q = QTFraction.monomial(1, 0)
t = QTFraction.monomial(0, 1)
H1 = KVector.basis_vector(make_flag((1,), []))


@pytest.mark.parametrize("m, n, S", [(3, 2, (1, 2)), (1, 3, (0, 0, 1)), (2, 1, (2,))])
def test_staircase(m, n, S):
    assert staircase(m, n).S == S
    assert sum(S) == m


def test_staircase_needs_coprime():
    with pytest.raises(ValueError):
        staircase(2, 4)


@pytest.mark.parametrize("k", range(4))
def test_p1k_on_vacuum(k):
    assert apply_p1k(k, KVector.vacuum()) == H1.scale(((q - 1) * (1 - t)).inv())


def test_p1k_rejects_k_positive():
    with pytest.raises(GradeError):
        apply_p1k(0, KVector.basis_vector(make_flag((1,), [(0, 0)])))


@pytest.mark.parametrize("k", range(3))
def test_p1k_word_matches_pieri_description(k):
    for n in range(4):
        for lam in partitions(n):
            v = KVector.basis_vector(make_flag(lam, []))
            assert apply_p1k(k, v) == p1k_direct(k, v)


def test_pmn_word_shape():
    assert pmn_word(3, 1) == parse_word("d- z:1 z:1 z:1 d+")
    assert str(pmn_word(1, 2)) == "d- z:1 y:1 d+"
    assert pmn_word(2, 3).grade_shift() == (3, 0)
    assert pmn_word_literal(2, 3).grade_shift() == (4, 0)


def test_pmn_raises_size_by_n():
    assert pmn_vacuum(1, 2).grade == (2, 0)
    assert pmn_vacuum(2, 3).grade == (3, 0)


def test_omega_vanishes_at_one():
    assert omega(QTFraction.from_rational(1)) == ZERO


@pytest.mark.parametrize("m, n", [(1, 1), (3, 1), (1, 2), (3, 2), (2, 3), (1, 3)])
def test_tableau_formula_matches_word(m, n):
    assert tableau_vector(m, n) == pmn_vacuum(m, n)


def test_tableau_size_check():
    with pytest.raises(ValueError):
        tableau_pmn(1, 2, (1,))
