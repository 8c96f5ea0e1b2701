import pytest

from bottcheck.csa import (
    CsaLabel,
    base_field,
    even_clifford,
    involution_dims,
    rdim,
    split_components,
    tensor_power,
    tits_dimension,
)


def test_rdim():
    assert rdim(4, 2) == 2
    assert rdim(0, 5) == 0
    with pytest.raises(ValueError):
        rdim(3, 2)
    with pytest.raises(ValueError):
        rdim(-2, 2)


def test_involution_dims_examples():
    assert involution_dims(4) == (10, 6)
    assert involution_dims(2) == (3, 1)
    assert involution_dims(6) == (21, 15)
    with pytest.raises(ValueError):
        involution_dims(5)
    with pytest.raises(ValueError):
        involution_dims(0)


def test_involution_dims_identities():
    for deg in range(2, 41, 2):
        sym, skew = involution_dims(deg)
        assert sym + skew == deg**2
        assert sym - skew == deg


def test_tits_dimension():
    assert tits_dimension(tensor_power(4, 0)) == 1
    assert tits_dimension(tensor_power(3, 2)) == 81
    assert tits_dimension(even_clifford(6)) == 32
    assert tits_dimension(base_field(9)) == 1


def test_tensor_power_multiplicativity():
    for n in (2, 3, 5):
        for i in range(4):
            for j in range(4):
                assert tits_dimension(tensor_power(n, i)) * tits_dimension(
                    tensor_power(n, j)
                ) == tits_dimension(tensor_power(n, i + j))


def test_zeroth_power_is_base_field():
    assert tensor_power(7, 0) == base_field(7)
    assert tensor_power(7, 0).display() == "F"
    assert tensor_power(7, 1).display() == "A"


def test_split_components():
    assert split_components(base_field(4)) == 1
    assert split_components(tensor_power(4, 3)) == 1
    assert split_components(even_clifford(8)) == 2


def test_label_validation():
    with pytest.raises(ValueError):
        CsaLabel(kind="weird", base_degree=2)
    with pytest.raises(ValueError):
        even_clifford(5)
    with pytest.raises(ValueError):
        tensor_power(4, -1)
    with pytest.raises(ValueError):
        CsaLabel(kind="base_field", base_degree=0)
