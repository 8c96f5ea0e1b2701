import random

import pytest
from hypothesis import given, settings, strategies as st

from bottcheck.rootdata import (
    coroot_pairing,
    homogeneous_space_dim,
    is_dominant_for,
    levi_positive_roots,
    levi_rank,
    root_datum,
    simple_dot_reflection,
    weyl_dim,
)

A1 = root_datum("A", 1)
A2 = root_datum("A", 2)
A3 = root_datum("A", 3)
D4 = root_datum("D", 4)


def test_cartan_invariants():
    for datum in (A1, A3, root_datum("A", 6), root_datum("D", 3), D4, root_datum("D", 6)):
        r = datum.rank
        for i in range(r):
            assert datum.cartan[i][i] == 2
            for j in range(r):
                if i != j:
                    assert datum.cartan[i][j] in (0, -1)
        expected = r * (r + 1) // 2 if datum.family == "A" else r * (r - 1)
        assert len(datum.positive_roots) == expected
        for alpha in datum.positive_roots:
            assert all(c >= 0 for c in alpha) and any(c > 0 for c in alpha)
        simple = {tuple(1 if j == i else 0 for j in range(r)) for i in range(r)}
        assert simple <= set(datum.positive_roots)


def test_rank_constraints():
    assert root_datum("A", 0).positive_roots == ()
    with pytest.raises(ValueError):
        root_datum("D", 2)
    with pytest.raises(ValueError):
        root_datum("B", 3)
    with pytest.raises(ValueError):
        root_datum("A", -1)


def test_d3_is_a3():
    # D_3 and A_3 share a Dynkin diagram up to relabeling, so dimensions agree
    # after swapping the branch node into the middle.
    d3 = root_datum("D", 3)
    assert weyl_dim(d3, (1, 0, 0)) == weyl_dim(A3, (0, 1, 0)) == 6
    assert weyl_dim(d3, (0, 1, 0)) == weyl_dim(A3, (1, 0, 0)) == 4


def test_coroot_pairing_examples():
    assert coroot_pairing(A3, A3.rho, (0, 1, 0)) == 1
    assert coroot_pairing(A3, A3.rho, (1, 1, 1)) == 3
    assert coroot_pairing(A1, (-2,), (1,)) == -2
    with pytest.raises(ValueError):
        coroot_pairing(A3, (1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        coroot_pairing(A3, (1, 0, 0), (1, 0))


def test_rho_pairing_positive_roots():
    for datum in (A3, D4, root_datum("D", 5)):
        for alpha in datum.positive_roots:
            p = coroot_pairing(datum, datum.rho, alpha)
            assert p >= 1
            assert (p == 1) == (sum(alpha) == 1)


def test_dot_reflection_examples():
    assert simple_dot_reflection(A1, 1, (-2,)) == (0,)
    assert simple_dot_reflection(A1, 1, (-1,)) == (-1,)
    assert simple_dot_reflection(A2, 1, (0, 0)) == (-2, 1)
    with pytest.raises(ValueError):
        simple_dot_reflection(A2, 3, (0, 0))


@given(
    st.sampled_from([("A", 1), ("A", 3), ("A", 5), ("D", 3), ("D", 4), ("D", 5)]),
    st.data(),
)
@settings(deadline=None)
def test_dot_reflection_involution(family_rank, data):
    datum = root_datum(*family_rank)
    w = tuple(
        data.draw(st.integers(min_value=-6, max_value=6)) for _ in range(datum.rank)
    )
    i = data.draw(st.integers(min_value=1, max_value=datum.rank))
    assert simple_dot_reflection(datum, i, simple_dot_reflection(datum, i, w)) == w


def test_is_dominant_for_examples():
    assert is_dominant_for(A3, frozenset({1}), (-5, 0, 0))
    assert not is_dominant_for(A3, frozenset(), (-1, 0, 0))
    assert is_dominant_for(D4, frozenset({1}), (-2, 0, 0, 1))
    assert is_dominant_for(A3, frozenset({1, 2, 3}), (-1, -2, -3))


@pytest.mark.parametrize("n", range(2, 9))
def test_weyl_dim_vector_rep(n):
    datum = root_datum("A", n - 1)
    assert weyl_dim(datum, (1,) + (0,) * (n - 2)) == n


def test_weyl_dim_examples():
    assert weyl_dim(A3, (0, 0, 0)) == 1
    assert weyl_dim(root_datum("A", 0), ()) == 1
    assert weyl_dim(D4, (0, 0, 0, 1)) == 8
    assert weyl_dim(root_datum("D", 5), (0, 0, 0, 0, 1)) == 16
    # adjoint of sl_4 and the D_4 vector representation
    assert weyl_dim(A3, (1, 0, 1)) == 15
    assert weyl_dim(D4, (1, 0, 0, 0)) == 8
    with pytest.raises(ValueError):
        weyl_dim(A3, (-1, 0, 0))


def test_weyl_dim_type_d_outer_symmetry():
    rng = random.Random(7)
    for _ in range(1000):
        rank = rng.randint(3, 6)
        datum = root_datum("D", rank)
        w = tuple(rng.randint(0, 5) for _ in range(rank))
        swapped = w[:-2] + (w[-1], w[-2])
        assert weyl_dim(datum, w) == weyl_dim(datum, swapped)


def _hook_content_ssyt_count(shape: tuple[int, ...], n: int) -> int:
    """Independent dimension oracle: the hook content formula for #SSYT(shape, n)."""
    num = 1
    den = 1
    conj = [sum(1 for row in shape if row > j) for j in range(max(shape, default=0))]
    for i, row in enumerate(shape):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (conj[j] - i) - 1
    assert num % den == 0
    return num // den


def _box_partitions(side: int):
    out = []
    for a in range(side + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                for d in range(c + 1):
                    out.append(tuple(x for x in (a, b, c, d) if x > 0))
    return out


@pytest.mark.parametrize("n", range(2, 9))
def test_weyl_dim_hook_content_oracle(n):
    datum = root_datum("A", n - 1)
    for shape in _box_partitions(4):
        if len(shape) > n - 1:
            continue
        padded = list(shape) + [0] * (n - len(shape))
        w = tuple(padded[i] - padded[i + 1] for i in range(n - 1))
        assert weyl_dim(datum, w) == _hook_content_ssyt_count(shape, n), (n, shape)


def test_levi_rank_examples():
    for n in (3, 4, 5):
        datum = root_datum("A", n - 1)
        assert levi_rank(datum, frozenset({1}), (-1,) + (0,) * (n - 2)) == 1
    for n in (3, 4, 5):
        datum = root_datum("D", n)
        w = (-(2 * n - 2),) + (0,) * (n - 3) + (0, -1)
        assert levi_rank(datum, frozenset({1}), w) == 2 ** (n - 2)
    assert levi_rank(A3, frozenset({2}), (1, -1, 0)) == 2


def test_levi_rank_character():
    # Restriction zero off the marked set: a character, rank 1.
    assert levi_rank(A3, frozenset({2}), (0, -7, 0)) == 1
    assert levi_rank(D4, frozenset({1}), (-3, 0, 0, 0)) == 1


def test_levi_roots_and_dimension():
    assert homogeneous_space_dim(A3, frozenset({1})) == 3  # P^3
    assert homogeneous_space_dim(A3, frozenset({2})) == 4  # Gr(2, 4)
    for n in (3, 4, 5, 6):
        assert homogeneous_space_dim(root_datum("D", n), frozenset({1})) == 2 * n - 2
    levi = levi_positive_roots(A3, frozenset({2}))
    assert levi == ((0, 0, 1), (1, 0, 0))
