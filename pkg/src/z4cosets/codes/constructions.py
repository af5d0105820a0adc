"""Constructions of the quaternary and binary codes."""

from __future__ import annotations

from itertools import product
from typing import Iterable

import numpy as np

from ..group_ring import (
    GroupRingElement,
    UnitSubgroup,
    delta,
    element,
    element_order,
    generate_subgroup,
    minus_one,
)
from .core import BINARY, Z4, Code

# Pentacode as f * <-1, h, g> in Z4[Z_5].
PENTA_F = element(1, 1, 1, 2, 0)
PENTA_G = element(2, 1, 0, 0, 0)
PENTA_H = element(1, 2, 0, 0, 0)

# The four representations f_{j,k} * U_j of the pentacode.
U1_GENERATORS = (element(0, 1, 0, 0, 0), element(3, 0, 0, 0, 0), element(1, 2, 0, 0, 0), element(1, 0, 0, 0, 2))
U2_GENERATORS = (element(0, 1, 0, 0, 0), element(3, 0, 0, 0, 0), element(1, 0, 2, 0, 0), element(1, 0, 0, 2, 0))
F11 = element(3, 1, 1, 0, 0)
F12 = element(3, 3, 1, 0, 0)
F21 = element(3, 1, 0, 1, 0)
F22 = element(1, 3, 0, 1, 0)
ISOMETRY_A = element(3, 2, 2, 2, 2)

JULIN_VECTORS = (
    (0, 0, 1, 1, 2, 2),
    (0, 0, 2, 2, 1, 1),
    (0, 1, 0, 2, 1, 2),
    (0, 2, 0, 1, 2, 1),
    (0, 1, 2, 0, 2, 1),
    (0, 1, 1, 3, 3, 2),
    (0, 1, 2, 3, 1, 3),
    (0, 1, 3, 1, 2, 3),
    (0, 1, 3, 2, 3, 1),
    (0, 2, 1, 1, 3, 3),
    (3, 1, 1, 1, 1, 1),
    (2, 0, 0, 0, 0, 0),
    (0, 2, 2, 2, 2, 2),
)
JULIN_G = element(0, 1, 1, 1, 1, 1)

HADAMARD_GENERATORS = (
    element(2, 1, 1, 1, 1, 1),
    element(0, 3, 3, 3, 3, 3),
    element(2, 0, 0, 3, 0, 0),
    element(0, 0, 1, 0, 0, 0),
)
HADAMARD_F = element(0, 1, 2, 0, 0, 0)

HEPTA_F = element(1, 2, 3, 1, 1, 0, 0)
HEPTA_G = element(2, 1, 0, 0, 0, 0, 0)
HEPTA_H = element(1, 2, 0, 0, 0, 0, 0)

BEST_BASE_WORDS = ("0100000011", "0011111101", "1100101100", "0001010111")


def cyclic_shifts(word: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [word[-s:] + word[:-s] if s else word for s in range(len(word))]


def pentacode_words() -> list[tuple[int, ...]]:
    """Pentacode words in construction order: for each (b, c, d) in {1,3}^3 the
    base word (c-d, b, c, d, b+c) followed by its right cyclic shifts."""
    words = []
    for b, c, d in product((1, 3), repeat=3):
        base = ((c - d) % 4, b, c, d, (b + c) % 4)
        words.extend(cyclic_shifts(base))
    return words


def pentacode_direct() -> Code:
    return Code(5, Z4, tuple(pentacode_words()))


def coset_code(f: GroupRingElement, U: UnitSubgroup | Iterable[GroupRingElement]) -> Code:
    """The code f * U = {f * u : u in U}."""
    elements = U.elements if isinstance(U, UnitSubgroup) else list(U)
    words = []
    for u in elements:
        if u.n != f.n:
            raise ValueError("f and U live in different group rings")
        words.append((f * u).coeffs)
    return Code(f.n, Z4, tuple(words))


def pentacode_group() -> UnitSubgroup:
    return generate_subgroup([minus_one(5), PENTA_H, PENTA_G])


def representation_subgroups() -> tuple[UnitSubgroup, UnitSubgroup]:
    return generate_subgroup(U1_GENERATORS), generate_subgroup(U2_GENERATORS)


def representation_codes() -> dict[str, Code]:
    U1, U2 = representation_subgroups()
    return {
        "f11*U1": coset_code(F11, U1),
        "f12*U1": coset_code(F12, U1),
        "f21*U2": coset_code(F21, U2),
        "f22*U2": coset_code(F22, U2),
    }


def julin_quaternary() -> Code:
    """All cyclic shifts and negations of c_1, ..., c_13."""
    words = set()
    for c in JULIN_VECTORS:
        for w in cyclic_shifts(c):
            words.add(w)
            words.add(tuple(-x % 4 for x in w))
    return Code(6, Z4, tuple(words))


def julin_group() -> UnitSubgroup:
    return generate_subgroup([minus_one(6), delta(1, 6), JULIN_G])


def julin_coset_decomposition() -> Code:
    """Union of the eight translates of U making up the quaternary Julin code.

    Translate sizes are not assumed; the union is taken with set semantics.
    """
    U = julin_group()
    c1 = GroupRingElement(JULIN_VECTORS[0])
    c5 = GroupRingElement(JULIN_VECTORS[4])
    c11 = GroupRingElement(JULIN_VECTORS[10])
    one = delta(0, 6)
    translates = [
        c1 * one,
        c1 * element(0, 0, 3, 1, 0, 1),
        c5 * one,
        c5 * element(0, 0, 3, 1, 0, 1),
        c5 * element(0, 1, 0, 1, 0, 3),
        c5 * element(1, 0, 0, 0, 1, 3),
        c1 * element(0, 0, 0, 1, 1, 1),
        c11,
    ]
    words = set()
    for t in translates:
        words.update(coset_code(t, U).words)
    return Code(6, Z4, tuple(words))


def hadamard_group() -> UnitSubgroup:
    return generate_subgroup(HADAMARD_GENERATORS)


def hadamard_quaternary() -> Code:
    """The (6, 24, 6) code f * U in Z4[Z_6]."""
    return coset_code(HADAMARD_F, hadamard_group())


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def paley_hadamard_matrix(q: int = 11) -> np.ndarray:
    """Paley type I Hadamard matrix of order q + 1 for a prime q = 3 mod 4.

    Normalised so that the first row and column are all +1.
    """
    if q % 4 != 3:
        raise ValueError("Paley type I needs q = 3 mod 4")
    Q = np.array([[_legendre(j - i, q) for j in range(q)] for i in range(q)])
    S = np.zeros((q + 1, q + 1), dtype=int)
    S[0, 1:] = 1
    S[1:, 0] = -1
    S[1:, 1:] = Q
    H = S + np.eye(q + 1, dtype=int)
    H = H * H[0][None, :]  # normalise first row
    H = H * H[:, 0][:, None]  # normalise first column
    assert (H @ H.T == (q + 1) * np.eye(q + 1, dtype=int)).all()
    return H


def paley_hadamard12() -> Code:
    """Rows of the 0/1 version of the order-12 Paley matrix and their complements."""
    A = (paley_hadamard_matrix(11) == -1).astype(int)
    words = [tuple(r) for r in A] + [tuple(1 - r) for r in A]
    return Code(12, BINARY, tuple(words))


def heptacode() -> Code:
    """H = {f (-1)^i h^j g^k : i, j in Z_2, k in Z_14} in Z4[Z_7]."""
    assert HEPTA_H * HEPTA_H == delta(0, 7)
    assert element_order(HEPTA_G) == 14
    words = set()
    neg = minus_one(7)
    for i, j, k in product(range(2), range(2), range(14)):
        words.add((HEPTA_F * neg**i * HEPTA_H**j * HEPTA_G**k).coeffs)
    return Code(7, Z4, tuple(words))


def best_binary() -> Code:
    """Best's original (10, 40, 4) code: four words and their cyclic shifts."""
    words = set()
    for s in BEST_BASE_WORDS:
        words.update(cyclic_shifts(tuple(int(ch) for ch in s)))
    return Code(10, BINARY, tuple(words))


NAMED_CODES = {
    "pentacode": pentacode_direct,
    "julin": julin_quaternary,
    "hadamard6": hadamard_quaternary,
    "heptacode": heptacode,
    "best-binary": best_binary,
    "hadamard12-paley": paley_hadamard12,
}


def build(name: str) -> Code:
    try:
        return NAMED_CODES[name]()
    except KeyError:
        raise KeyError(f"unknown code {name!r}; choose from {', '.join(NAMED_CODES)}") from None


def left_multiply(u: GroupRingElement, code: Code) -> Code:
    """The code u * C = {u * c : c in C} for a Z4 code C of length u.n."""
    return Code(code.n, Z4, tuple((u * GroupRingElement(w)).coeffs for w in code.words))


def coset_even_distance_check(f: GroupRingElement, U: UnitSubgroup | Iterable[GroupRingElement]) -> bool:
    """True iff every pairwise Lee distance in f * U is even."""
    code = coset_code(f, U)
    return bool((code.distance_matrix % 2 == 0).all())
