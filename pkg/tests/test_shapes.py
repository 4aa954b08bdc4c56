import pytest
from hypothesis import given, settings, strategies as st

from flaghilb.qt import Character
from flaghilb.shapes import (
    AIndex,
    InvalidShape,
    alpha_vector,
    arm_leg,
    bruhat_leq,
    bruhat_up_set,
    char_B,
    conjugate,
    cotangent_flag,
    cotangent_hilb,
    cotangent_hilb_armleg,
    cotangent_hilb_closed,
    cotangent_via_interleave,
    dominates,
    enumerate_a_indices,
    enumerate_flags,
    from_flag,
    interleave,
    is_horizontal_strip,
    make_flag,
    partition,
    partitions,
    standard_tableaux,
    tangent_theta,
    to_flag,
)


def ch(d):
    return Character(d)


def test_partition_validation():
    assert partition([3, 1, 0]) == (3, 1)
    with pytest.raises(InvalidShape):
        partition([1, 2])


@pytest.mark.parametrize("lam, cell, expected", [
    ((2, 1), (0, 0), (1, 1)),
    ((2,), (0, 1), (0, 0)),
    ((4, 3, 1), (0, 1), (2, 1)),
])
def test_arm_leg(lam, cell, expected):
    assert arm_leg(lam, cell) == expected


def test_arm_leg_outside():
    with pytest.raises(InvalidShape):
        arm_leg((2,), (1, 0))


def test_char_B():
    assert char_B(()) == ch({})
    assert char_B((2,)) == ch({(0, 0): 1, (1, 0): 1})
    assert char_B((2, 1)) == ch({(0, 0): 1, (1, 0): 1, (0, 1): 1})


def test_cotangent_hilb_examples():
    assert cotangent_hilb((1,)) == ch({(1, 0): 1, (0, 1): 1})
    assert cotangent_hilb((2,)) == ch({(2, 0): 1, (-1, 1): 1, (1, 0): 1, (0, 1): 1})


@pytest.mark.parametrize("n", range(0, 7))
def test_cotangent_hilb_two_routes(n):
    for lam in partitions(n):
        c = cotangent_hilb_armleg(lam)
        assert c == cotangent_hilb_closed(lam)
        assert c.total() == 2 * n and c.is_effective()


def test_cotangent_flag_examples():
    assert cotangent_flag(make_flag((1,), [(0, 0)])) == ch({(1, 0): 1})
    assert cotangent_flag(make_flag((2,), [(0, 1), (0, 0)])) == ch({(1, 0): 2})
    assert cotangent_flag(make_flag((1,), [])) == ch({(1, 0): 1, (0, 1): 1})


def test_interleave_examples():
    assert interleave(make_flag((2,), [(0, 1), (0, 0)])) == (2, 1)
    assert interleave(make_flag((3, 1), [])) == (3, 1)
    assert interleave(make_flag((2, 1), [(0, 1), (1, 0)])) == (2, 1, 1, 1, 1)


def test_interleave_truncation_examples():
    p = make_flag((2,), [(0, 1), (0, 0)])
    assert cotangent_hilb((2, 1)) == ch({(2, -1): 1, (-1, 2): 1, (1, 0): 2, (0, 1): 2})
    assert cotangent_via_interleave(p) == ch({(1, 0): 2})
    assert cotangent_via_interleave(make_flag((1,), [(0, 0)])) == ch({(1, 0): 1})


def test_theta_examples():
    for p in (make_flag((1,), [(0, 0)]), make_flag((1,), []), make_flag((2,), [(0, 1)])):
        assert tangent_theta(p) == cotangent_flag(p).bar()
    assert tangent_theta(make_flag((1,), [])) == ch({(-1, 0): 1, (0, -1): 1})


@pytest.mark.parametrize("n", range(0, 7))
def test_character_agreement_and_dimension(n):
    for k in range(n + 1):
        for p in enumerate_flags(n, k):
            c = cotangent_flag(p)
            assert c.is_effective() and c.total() == 2 * n - k
            assert cotangent_via_interleave(p) == c
            assert tangent_theta(p) == c.bar()


def test_invalid_flags_rejected():
    with pytest.raises(InvalidShape):
        make_flag((1, 1), [(1, 0), (0, 0)])  # vertical pair
    with pytest.raises(InvalidShape):
        make_flag((2,), [(0, 0)])  # not removable


def test_enumerate_flags_examples():
    assert enumerate_flags(1, 1) == (make_flag((1,), [(0, 0)]),)
    assert enumerate_flags(2, 2) == (make_flag((2,), [(0, 1), (0, 0)]),)
    assert set(enumerate_flags(2, 1)) == {make_flag((2,), [(0, 1)]), make_flag((1, 1), [(1, 0)])}
    assert enumerate_flags(0, 0) == (make_flag((), []),)


@pytest.mark.parametrize("n", range(0, 8))
def test_strip_condition_matches_interleave(n):
    for k in range(n + 1):
        for p in enumerate_flags(n, k):
            seq = interleave(p)
            assert list(seq) == sorted(seq, reverse=True)
            assert is_horizontal_strip(p.lam, p.smallest())


def test_a_index_examples():
    assert enumerate_a_indices(2, 2) == (AIndex((), (0, 0)),)
    assert set(enumerate_a_indices(2, 1)) == {AIndex((1,), (0,)), AIndex((), (1,))}


def test_to_flag_worked_chain():
    p = to_flag(AIndex((3, 1), (1, 0, 1, 2, 3)), 16, 5)
    assert p.chain() == [(7, 5, 3, 1), (7, 4, 3, 1), (6, 4, 3, 1), (6, 3, 3, 1), (6, 3, 2, 1), (6, 3, 2)]


def test_to_flag_small():
    assert to_flag(AIndex((), (0, 0)), 2, 2).chain() == [(2,), (1,), ()]
    with pytest.raises(InvalidShape):
        to_flag(AIndex((), (1,)), 3, 1)


@pytest.mark.parametrize("n", range(0, 9))
def test_bijection(n):
    for k in range(n + 1):
        A = enumerate_a_indices(n, k)
        M = enumerate_flags(n, k)
        assert len(A) == len(M)
        images = {to_flag(x, n, k) for x in A}
        assert images == set(M)
        for x in A:
            assert from_flag(to_flag(x, n, k)) == x


def test_alpha_worked_example():
    assert alpha_vector(AIndex((2, 1), (1, 0, 2)), 4) == (3, 1, 2, 0, 0, 1, 2)


def test_bruhat_examples():
    assert bruhat_leq(AIndex((2,), ()), AIndex((1, 1), ()))
    assert bruhat_leq(AIndex((1,), (2,)), AIndex((3,), (0,)))
    x = AIndex((1,), (1,))
    assert bruhat_leq(x, x) and bruhat_leq(x, x, leading=True)
    with pytest.raises(ValueError):
        bruhat_leq(AIndex((1,), ()), AIndex((), (0,)))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(min(n, 3) + 1)])
def test_order_is_independent_of_padding(n, k):
    l0 = n - k + 1
    for x in enumerate_a_indices(n, k):
        assert bruhat_up_set(x) == bruhat_up_set(x, l0) == bruhat_up_set(x, l0 + 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_k0_orders_against_dominance(n):
    A = enumerate_a_indices(n, 0)
    for x in A:
        for y in A:
            assert bruhat_leq(x, y) == dominates(x.mu, y.mu)
            assert bruhat_leq(x, y, leading=True) == dominates(y.mu, x.mu)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(min(n, 3) + 1)])
def test_orders_are_antisymmetric(n, k):
    A = enumerate_a_indices(n, k)
    for leading in (False, True):
        for x in A:
            for y in A:
                if x != y and bruhat_leq(x, y, leading=leading):
                    assert not bruhat_leq(y, x, leading=leading)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_standard_tableaux_are_standard(lam):
    tabs = list(standard_tableaux(lam))
    assert tabs
    for tab in tabs:
        assert sorted(tab) == sorted((r, c) for r in range(len(lam)) for c in range(lam[r]))
        pos = {cell: i for i, cell in enumerate(tab)}
        for (r, c), i in pos.items():
            if (r, c + 1) in pos:
                assert pos[(r, c + 1)] > i
            if (r + 1, c) in pos:
                assert pos[(r + 1, c)] > i


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 8).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)
