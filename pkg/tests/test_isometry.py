import random

from hypothesis import given, settings
from hypothesis import strategies as st

from z4cosets.codes import Code, binary_automorphism_order, lee_equivalent, left_mult_isometry_set, pentacode_direct
from z4cosets.codes.constructions import ISOMETRY_A, julin_quaternary, representation_codes, representation_subgroups
from z4cosets.codes.core import BINARY, distance_enumerator
from z4cosets.codes.isometry import LeeIsometry, pentacode_symmetries_check, symmetry_report
from z4cosets.group_ring import delta, generate_subgroup, minus_one
from z4cosets.quaternary import lee_distance


def random_isometry(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return LeeIsometry(tuple(perm), tuple(rng.choice((1, 3)) for _ in range(n)), tuple(rng.randrange(4) for _ in range(n)))


n_vec = st.lists(st.integers(0, 3), min_size=6, max_size=6)


@given(st.randoms(use_true_random=False), n_vec, n_vec)
def test_isometry_preserves_lee_distance(rng, u, v):
    iso = random_isometry(rng, 6)
    assert lee_distance(iso(u), iso(v)) == lee_distance(u, v)


def test_equivalence_examples():
    P = pentacode_direct()
    assert lee_equivalent(P, P) is not None
    codes = representation_codes()
    iso = lee_equivalent(codes["f11*U1"], codes["f12*U1"])
    assert iso is not None and iso.apply(codes["f11*U1"]) == codes["f12*U1"]


def test_equivalence_rejects_different_enumerator():
    rng = random.Random(4)
    P = pentacode_direct()
    everything = [tuple((k >> (2 * i)) & 3 for i in range(5)) for k in range(1024)]
    other = Code.from_words(rng.sample(everything, 40))
    assert distance_enumerator(other).profiles != distance_enumerator(P).profiles
    assert lee_equivalent(P, other) is None


@settings(max_examples=10, deadline=None)
@given(st.randoms(use_true_random=False))
def test_equivalence_finds_hidden_isometry_n6(rng):
    J = julin_quaternary()
    hidden = random_isometry(rng, 6).apply(J)
    iso = lee_equivalent(J, hidden)
    assert iso is not None and iso.apply(J) == hidden


def test_equivalence_complete_on_small_inequivalent_pair():
    # same distance profiles, different structure: {000, 112} vs {000, 220}? both distance 4
    A = Code.from_words([(0, 0, 0), (1, 1, 2)])
    B = Code.from_words([(0, 0, 0), (2, 2, 0)])
    assert lee_equivalent(A, B) is None  # 1+1+2 split cannot map to 2+2+0


def test_left_multiplication_by_a_relates_representation_codes():
    U1, _ = representation_subgroups()
    codes = representation_codes()
    from z4cosets.codes.constructions import F11, coset_code

    assert coset_code(ISOMETRY_A * F11, U1) == codes["f12*U1"]
    assert ISOMETRY_A not in U1


def test_symmetries():
    P = pentacode_direct()
    assert pentacode_symmetries_check()
    report = symmetry_report(P)
    assert report["negation"] and all(report.values())


def test_symmetry_report_is_informational_for_other_codes():
    code = Code.from_words([(0, 0, 0, 0, 1)])
    assert not pentacode_symmetries_check(code)


def test_automorphism_orders():
    gray = pentacode_direct().gray()
    assert binary_automorphism_order(gray) == 320
    assert binary_automorphism_order(gray, translations=False) == 10
    zero = Code(10, BINARY, ((0,) * 10,))
    rep = Code(10, BINARY, ((0,) * 10, (1,) * 10))
    assert binary_automorphism_order(zero) == 3628800
    assert binary_automorphism_order(rep, translations=False) == 3628800


def test_left_mult_isometry_sets():
    expected_units = generate_subgroup([delta(1, 5), minus_one(5), ISOMETRY_A]).elements
    found = left_mult_isometry_set()
    assert set(found) == expected_units
    U1, U2 = representation_subgroups()
    assert not set(U1.elements) <= set(found)
    assert not set(U2.elements) <= set(found)
    expected_code = generate_subgroup([delta(1, 5), minus_one(5)]).elements
    for code in representation_codes().values():
        assert set(left_mult_isometry_set(code)) == expected_code
        assert len(expected_code) == 10
