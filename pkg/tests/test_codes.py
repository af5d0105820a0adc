import random
from itertools import product

import pytest

from z4cosets.codes import (
    Code,
    coset_code,
    distance_enumerator,
    hadamard_quaternary,
    heptacode,
    julin_coset_decomposition,
    julin_quaternary,
    min_distance,
    paley_hadamard12,
    pentacode_direct,
    plotkin_bound,
    plotkin_check,
    shorten,
)
from z4cosets.codes.constructions import (
    F11,
    HADAMARD_F,
    HEPTA_G,
    HEPTA_H,
    JULIN_G,
    JULIN_VECTORS,
    PENTA_F,
    best_binary,
    coset_even_distance_check,
    hadamard_group,
    julin_group,
    left_multiply,
    pentacode_group,
    representation_codes,
    representation_subgroups,
)
from z4cosets.codes.core import BINARY, distance_matrix
from z4cosets.group_ring import (
    GroupRingElement,
    delta,
    element_order,
    generate_subgroup,
    minus_one,
    unit_group,
)
from z4cosets.quaternary import lee_distance


def brute_min_distance(words, metric):
    best = None
    for a in words:
        for b in words:
            if a != b:
                d = metric(a, b)
                best = d if best is None else min(best, d)
    return best


def test_pentacode_direct():
    P = pentacode_direct()
    assert P.size == 40
    assert (0, 1, 1, 1, 2) in P
    assert min_distance(P) == 4 == brute_min_distance(P.words, lee_distance)


def test_coset_representation_equals_pentacode():
    assert coset_code(PENTA_F, pentacode_group()) == pentacode_direct()
    assert coset_code(delta(0, 5), generate_subgroup([], n=5)).words == ((1, 0, 0, 0, 0),)
    U1, _ = representation_subgroups()
    assert coset_code(F11, U1) == pentacode_direct()


def test_coset_code_ring_mismatch():
    with pytest.raises(ValueError):
        coset_code(delta(0, 6), pentacode_group())


def test_distance_enumerators():
    gray = pentacode_direct().gray()
    enum = distance_enumerator(gray)
    assert enum.counts == {4: 22, 6: 12, 8: 5} and enum.distance_invariant
    assert enum.polynomial(10) == "x^10 + 22 x^6y^4 + 12 x^4y^6 + 5 x^2y^8"
    hep = distance_enumerator(heptacode())
    assert hep.counts == {6: 36, 8: 7, 10: 12} and hep.distance_invariant
    two = Code.from_words([(0, 0, 0, 0, 0), (0, 0, 0, 1, 1)])
    assert distance_enumerator(two).counts == {2: 1}


def test_enumerator_not_invariant():
    code = Code.from_words([(0, 0), (0, 1), (2, 2)])
    enum = distance_enumerator(code)
    assert not enum.distance_invariant
    # ordered-pair totals: 1,1 / 3,3 / 4,4 -> counts sum to M(M-1)
    assert sum(enum.counts.values()) in (code.size - 1, code.size * (code.size - 1))


def test_min_distance_needs_two_words():
    with pytest.raises(ValueError):
        min_distance(Code.from_words([(0, 0)]))


def test_best_code_matches_gray_pentacode_enumerator():
    B = best_binary()
    assert B.parameters() == (10, 40, 4)
    assert distance_enumerator(B).counts == {4: 22, 6: 12, 8: 5}


def test_julin():
    J = julin_quaternary()
    assert J.parameters() == (6, 144, 4)
    assert (3, 1, 1, 1, 1, 1) in J
    assert julin_coset_decomposition() == J
    for u in (minus_one(6), delta(1, 6), JULIN_G):
        assert left_multiply(u, J) == J
    assert julin_group().order == 24
    assert J.gray().parameters() == (12, 144, 4)


def test_julin_c11_orbit():
    c11 = GroupRingElement(JULIN_VECTORS[10])
    # oracle: product set over the brute-force closure of the generators
    group = {delta(0, 6)}
    while True:
        bigger = group | {x * g for x in group for g in (minus_one(6), delta(1, 6), JULIN_G)}
        if bigger == group:
            break
        group = bigger
    orbit = {(c11 * u).coeffs for u in group}
    assert len(group) == 24
    assert len(orbit) == 12
    assert orbit <= julin_quaternary().wordset
    assert {w for w in coset_code(c11, julin_group())} == orbit


def test_hadamard_quaternary():
    C = hadamard_quaternary()
    assert hadamard_group().order == 24
    assert C.parameters() == (6, 24, 6)
    assert C.gray().parameters() == (12, 24, 6)


def test_paley_hadamard12():
    H = paley_hadamard12()
    assert H.parameters() == (12, 24, 6)
    enum = distance_enumerator(H)
    assert enum.counts == {6: 22, 12: 1} and enum.distance_invariant
    assert (0,) * 12 in H


def test_gray_hadamard_translates_have_hadamard_profile():
    G = hadamard_quaternary().gray()
    for w in G.words:
        T = G.translate(w)
        assert (0,) * 12 in T
        assert distance_enumerator(T).counts == {6: 22, 12: 1}


def test_heptacode():
    assert HEPTA_H * HEPTA_H == delta(0, 7)
    assert element_order(HEPTA_G) == 14
    H = heptacode()
    assert H.parameters() == (7, 56, 6)
    assert H.gray().parameters() == (14, 56, 6)


def test_heptacode_shortening():
    G = heptacode().gray()
    found = []
    for coord, bit in product(range(14), (0, 1)):
        S = shorten(G, coord, bit)
        if S.size == 28 and min_distance(S) >= 6:
            found.append((coord, bit))
    assert found
    assert shorten(G, *found[0]).parameters() == (13, 28, 6)


def test_shorten_trivial():
    C = Code(2, BINARY, ((0, 0), (0, 1)))
    S = shorten(C, 0, 0)
    assert S.words == ((0,), (1,))
    assert S.size <= C.size
    with pytest.raises(ValueError):
        shorten(C, 0, 1)
    with pytest.raises(ValueError):
        shorten(C, 5, 0)


def test_plotkin():
    assert plotkin_bound(12, 6) == 24 and plotkin_check(12, 6, 24)
    assert plotkin_bound(10, 6) == 6
    assert not plotkin_check(12, 6, 25)
    with pytest.raises(ValueError):
        plotkin_bound(12, 5)


def test_even_distances_known_codes():
    assert coset_even_distance_check(PENTA_F, pentacode_group())
    assert coset_even_distance_check(HADAMARD_F, hadamard_group())


@pytest.mark.parametrize("n", [5, 6])
def test_even_distances_random(n):
    rng = random.Random(n)
    units = unit_group(n)
    parities = set()
    for _ in range(25):
        U = generate_subgroup(rng.sample(units, rng.randint(1, 3)))
        f = GroupRingElement([rng.randrange(4) for _ in range(n)])
        parities.add(sum(f.coeffs) % 2)
        assert coset_even_distance_check(f, U)
    assert parities == {0, 1}


def test_representation_codes_are_pentacodes_in_parameters():
    for code in representation_codes().values():
        assert code.parameters() == (5, 40, 4)


def test_serialization_round_trip():
    for code in (pentacode_direct(), paley_hadamard12()):
        assert Code.deserialize(code.serialize()) == code
    assert pentacode_direct().serialize().splitlines()[0] == "n=5 alphabet=z4 M=40"
    with pytest.raises(ValueError):
        Code.deserialize("")
    with pytest.raises(ValueError):
        Code.deserialize("n=2 alphabet=z4 M=3\n00\n11\n")


def test_distance_matrix_matches_scalar():
    rng = random.Random(2)
    words = [tuple(rng.randrange(4) for _ in range(6)) for _ in range(10)]
    d = distance_matrix(words)
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            assert d[i, j] == lee_distance(a, b)
