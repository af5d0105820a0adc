import random

import pytest

from z4cosets.extension_ring import (
    PHI5,
    ExtensionModulus,
    NotAUnitError,
    ext_invert,
    ext_mul,
    parse,
    parse_compact,
    render,
    root_of_unity_order,
)

w = PHI5.generator()


def test_omega_is_primitive_fifth_root():
    assert ext_mul(w, w**4) == PHI5.one()
    assert w**5 == 1 and w != 1
    phi = w**4 + w**3 + w**2 + w + 1
    assert phi.is_zero()
    assert root_of_unity_order(w) == 5


def test_reduction_of_omega_fourth():
    assert w**4 == parse("3ω^3+3ω^2+3ω+3")


def test_multiplicative_identity():
    rng = random.Random(1)
    for _ in range(50):
        a = PHI5([rng.randrange(4) for _ in range(4)])
        assert PHI5.one() * a == a


def test_inverse_examples():
    assert ext_invert(PHI5.one()) == PHI5.one()
    assert ext_invert(w) == w**4
    assert ext_invert(2 * w) is None


def test_orders():
    assert root_of_unity_order(PHI5.one()) == 1
    assert root_of_unity_order(PHI5.constant(3)) == 2
    with pytest.raises(NotAUnitError):
        root_of_unity_order(PHI5.constant(2))


def test_unit_count_and_inverses():
    units = [a for a in PHI5.elements() if ext_invert(a) is not None]
    assert len(units) == 4**4 - 2**4 == 240
    for a in units:
        assert a * ext_invert(a) == PHI5.one()
    nonunits = [a for a in PHI5.elements() if ext_invert(a) is None]
    assert all(all(c % 2 == 0 for c in a.coeffs) for a in nonunits)


def test_modulus_mismatch():
    other = ExtensionModulus((1, 1, 1))
    with pytest.raises(ValueError):
        ext_mul(w, other.generator())


def test_rendering():
    a = parse("3ω^3+3ω^2+3ω+2")
    assert render(a) == "3ω^3+3ω^2+3ω+2"
    assert a.compact() == "2333"
    assert parse_compact("2333") == a
    assert render(PHI5.zero()) == "0"
    assert render(w) == "ω"


def test_generic_small_modulus():
    # Z4[x]/(x^2+x+1) is GR(4,2); its x has order 3.
    gr42 = ExtensionModulus((1, 1, 1))
    x = gr42.generator()
    assert root_of_unity_order(x) == 3
    assert sum(1 for a in gr42.elements() if a.is_unit()) == 16 - 4
