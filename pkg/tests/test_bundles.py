import random

import pytest
from hypothesis import given, settings, strategies as st

from bottcheck.bott import bott_classify, bott_typeA_epsilon
from bottcheck.bundles import (
    UnsupportedDecompositionError,
    dual,
    dual_glweight,
    ext_dims,
    glweight_to_weight,
    lr_tensor,
    make_bundle,
    schur_dim,
    tensor,
    weight_to_glweight,
)
from bottcheck.rootdata import homogeneous_space_dim, root_datum

A3 = root_datum("A", 3)
D4 = root_datum("D", 4)
P1 = frozenset({1})
P2 = frozenset({2})


def glweights(r, lo=-4, hi=4):
    return st.lists(st.integers(lo, hi), min_size=r, max_size=r).map(
        lambda xs: tuple(sorted(xs, reverse=True))
    )


def test_lr_examples():
    assert lr_tensor((1, 0), (1, 0)) == {(2, 0): 1, (1, 1): 1}
    assert lr_tensor((3, 1, 0), (0, 0, 0)) == {(3, 1, 0): 1}
    assert lr_tensor((1, 0), (0, -1)) == {(1, -1): 1, (0, 0): 1}
    assert lr_tensor((1, 1, 0), (1, 1, 0)) == {(2, 2, 0): 1, (2, 1, 1): 1}
    # a multiplicity-2 coefficient: s_21 * s_21 contains s_321 twice
    assert lr_tensor((2, 1, 0), (2, 1, 0))[(3, 2, 1)] == 2


def test_lr_errors():
    with pytest.raises(ValueError):
        lr_tensor((1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        lr_tensor((0, 1), (1, 0))


@given(glweights(2), glweights(2))
@settings(max_examples=60, deadline=None)
def test_lr_commutative_and_multiplicative(a, b):
    table = lr_tensor(a, b)
    assert table == lr_tensor(b, a)
    assert sum(m * schur_dim(nu) for nu, m in table.items()) == schur_dim(a) * schur_dim(b)


@given(glweights(3, -3, 3), st.integers(-3, 3))
@settings(max_examples=40, deadline=None)
def test_lr_shift_invariance(a, k):
    base = lr_tensor(a, (1, 1, 0))
    shifted = lr_tensor(tuple(x + k for x in a), (1, 1, 0))
    assert shifted == {tuple(x + k for x in nu): m for nu, m in base.items()}


def test_dual_glweight():
    assert dual_glweight((2, 1, 0)) == (0, -1, -2)
    assert dual_glweight((0, 0)) == (0, 0)
    rng = random.Random(3)
    for _ in range(50):
        a = tuple(sorted((rng.randint(-5, 5) for _ in range(3)), reverse=True))
        assert dual_glweight(dual_glweight(a)) == a
        assert schur_dim(dual_glweight(a)) == schur_dim(a)


def test_glweight_to_weight():
    assert glweight_to_weight((1, 0), 4) == (1, 0, 0)
    assert glweight_to_weight((1, 1), 4) == (0, 1, 0)
    assert glweight_to_weight((0, -1), 4) == (1, -1, 0)
    with pytest.raises(ValueError):
        glweight_to_weight((1, 0, 0, 0), 4)


def test_glweight_round_trip_with_epsilon_oracle():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(3, 6)
        r = rng.randint(1, n - 1)
        c = tuple(sorted((rng.randint(-4, 4) for _ in range(r)), reverse=True))
        w = glweight_to_weight(c, n)
        assert weight_to_glweight(w, r) == c
        eps = tuple(c) + (0,) * (n - r)
        assert bott_typeA_epsilon(n, eps) == bott_classify(root_datum("A", n - 1), w)


def test_weight_to_glweight_rejects_off_block_weights():
    with pytest.raises(UnsupportedDecompositionError):
        weight_to_glweight((0, 0, 1), 2)  # nontrivial on the complementary block


def test_tensor_characters_add():
    line = make_bundle(A3, P1, {(-1, 0, 0): 1})
    square = tensor(line, line)
    assert square.pieces == (((-2, 0, 0), 1),)
    assert square.rank == 1


def test_tensor_grassmannian_schur():
    u = make_bundle(A3, P2, {glweight_to_weight((0, -1), 4): 1})
    product = tensor(u, u)
    expected = {
        glweight_to_weight((0, -2), 4): 1,  # dual of the (2,0) Schur functor
        glweight_to_weight((-1, -1), 4): 1,  # dual of the (1,1) Schur functor
    }
    assert product.piece_dict() == expected
    assert product.rank == u.rank**2 == 4


def test_tensor_quadric_spin_families():
    spin_plus = make_bundle(D4, P1, {(0, 0, -1, 0): 1})
    spin_minus = make_bundle(D4, P1, {(0, 0, 0, -1): 1})
    line = make_bundle(D4, P1, {(-3, 0, 0, 0): 1})
    mixed = tensor(spin_plus, dual(spin_minus))
    assert mixed.piece_dict() == {(0, 0, -1, 1): 1}
    assert tensor(spin_plus, line).piece_dict() == {(-3, 0, -1, 0): 1}
    with pytest.raises(UnsupportedDecompositionError):
        tensor(spin_plus, spin_plus)
    with pytest.raises(UnsupportedDecompositionError):
        tensor(mixed, spin_plus)


def test_make_bundle_validation():
    with pytest.raises(ValueError):
        make_bundle(A3, P1, {(0, -1, 0): 1})  # not dominant for the parabolic
    with pytest.raises(UnsupportedDecompositionError):
        make_bundle(D4, P1, {(0, -2, 0, 0): 1})  # outside the quadric families
    with pytest.raises(ValueError):
        make_bundle(A3, P1, {(0, 0, 0): 0})
    with pytest.raises(ValueError):
        make_bundle(A3, P1, {(0, 0): 1})
    with pytest.raises(ValueError):
        make_bundle(A3, P1, {(0, 0, 0): 1}, scalar_mult=0)


def test_ext_incompatible_spaces():
    a = make_bundle(A3, P1, {(0, 0, 0): 1})
    b = make_bundle(A3, P2, {(0, 0, 0): 1})
    with pytest.raises(ValueError):
        ext_dims(a, b)


@pytest.mark.parametrize("n", range(2, 7))
def test_ext_projective_space_examples(n):
    datum = root_datum("A", n - 1)
    structure = make_bundle(datum, P1, {(0,) * (n - 1): 1})
    taut = make_bundle(datum, P1, {(-1,) + (0,) * (n - 2): 1})
    assert ext_dims(structure, taut) == {}
    assert ext_dims(taut, taut) == {0: 1}
    assert ext_dims(taut, structure) == {0: n}


def test_ext_scalar_multiplicities():
    taut_full = make_bundle(A3, P1, {(-1, 0, 0): 1}, scalar_mult=4)
    structure = make_bundle(A3, P1, {(0, 0, 0): 1})
    assert ext_dims(taut_full, taut_full) == {0: 16}
    assert ext_dims(taut_full, structure) == {0: 16}


def test_ext_degrees_bounded_by_dimension():
    rng = random.Random(29)
    dim = homogeneous_space_dim(A3, P1)
    structure = make_bundle(A3, P1, {(0, 0, 0): 1})
    for j in range(-12, 13):
        dims = ext_dims(structure, make_bundle(A3, P1, {(j, 0, 0): 1}))
        assert all(0 <= d <= dim for d in dims)
        assert len(dims) <= 1


def test_ext_self_identity_component():
    for bundle in (
        make_bundle(A3, P1, {(-2, 0, 0): 1}),
        make_bundle(A3, P2, {glweight_to_weight((0, -1), 4): 1}),
        make_bundle(D4, P1, {(0, 0, 0, -1): 1}),
    ):
        assert ext_dims(bundle, bundle).get(0, 0) >= 1


def test_euler_characteristic_binomial_oracle():
    from math import comb

    for n in range(2, 7):
        datum = root_datum("A", n - 1)
        structure = make_bundle(datum, P1, {(0,) * (n - 1): 1})
        for j in range(0, 2 * n):
            dims = ext_dims(structure, make_bundle(datum, P1, {(j,) + (0,) * (n - 2): 1}))
            chi = sum((-1) ** d * v for d, v in dims.items())
            assert chi == comb(j + n - 1, n - 1)
