"""The group ring R[Z_n] for R = Z4 or an extension ring of Z4.

Elements are functions Z_n -> R, rendered as (f(0), ..., f(n-1)), with
multiplication given by cyclic convolution.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _poly
from .extension_ring import ExtensionElement, ExtensionModulus, NotAUnitError

__all__ = [
    "GroupRingElement",
    "NotAUnitError",
    "UnitSubgroup",
    "coeff_sum",
    "convolve",
    "delta",
    "element",
    "element_order",
    "generate_subgroup",
    "minus_one",
    "try_invert",
    "two_torsion",
    "unit_group",
]

MAX_ENUMERATION_LENGTH = 8


class GroupRingElement:
    """Element of R[Z_n]; ``ring`` is None for Z4 or an ExtensionModulus."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence, ring: ExtensionModulus | None = None):
        if not len(coeffs):
            raise ValueError("group ring elements need n >= 1")
        if ring is None:
            self.coeffs = tuple(int(c) % 4 for c in coeffs)
        else:
            self.coeffs = tuple(c if isinstance(c, ExtensionElement) else ring.constant(c) for c in coeffs)
        self.ring = ring

    @classmethod
    def parse(cls, text: str) -> "GroupRingElement":
        text = text.strip().strip("()")
        if "," in text:
            return cls([int(t) for t in text.split(",")])
        if not text or any(ch not in "0123" for ch in text):
            raise ValueError(f"not a Z4 digit string: {text!r}")
        return cls([int(ch) for ch in text])

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j % self.n]

    def _zero(self):
        return 0 if self.ring is None else self.ring.zero()

    def _compatible(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            other = other * delta(0, self.n, self.ring)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.n != self.n or other.ring != self.ring:
            raise ValueError("group ring elements from different rings")
        return other

    def __add__(self, other):
        other = self._compatible(other)
        if other is NotImplemented:
            return other
        return GroupRingElement([a + b for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._compatible(other)
        if other is NotImplemented:
            return other
        return GroupRingElement([a - b for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GroupRingElement([-a for a in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement([other * a for a in self.coeffs], self.ring)
        other = self._compatible(other)
        if other is NotImplemented:
            return other
        return convolve(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            inv = try_invert(self)
            if inv is None:
                raise NotAUnitError(f"{self} is not a unit")
            return inv ** (-k)
        result = delta(0, self.n, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def shift(self, ell: int) -> "GroupRingElement":
        """delta_ell * self."""
        n = self.n
        return GroupRingElement([self.coeffs[(j - ell) % n] for j in range(n)], self.ring)

    def mod2(self) -> int:
        """Reduction mod 2 as an F2 bitmask (Z4 coefficients only)."""
        return _poly.z4_to_f2(self.coeffs)

    def degree(self) -> int:
        """Largest index with a nonzero coefficient, -1 for zero."""
        zero = self._zero()
        for j in range(self.n - 1, -1, -1):
            if self.coeffs[j] != zero:
                return j
        return -1

    def is_unit(self) -> bool:
        return try_invert(self) is not None

    def __str__(self):
        if self.ring is None:
            return "".join(str(c) for c in self.coeffs)
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def __repr__(self):
        if self.ring is None:
            return f"GroupRingElement({self.coeffs})"
        return f"GroupRingElement({str(self)}, ring={self.ring.coeffs})"


def element(*coeffs: int) -> GroupRingElement:
    """Shorthand: ``element(3, 3, 2, 1, 0)``."""
    return GroupRingElement(coeffs)


def delta(j: int, n: int, ring: ExtensionModulus | None = None) -> GroupRingElement:
    if not 0 <= j < n:
        raise ValueError(f"index {j} outside Z_{n}")
    zero, one = (0, 1) if ring is None else (ring.zero(), ring.one())
    return GroupRingElement([one if i == j else zero for i in range(n)], ring)


def minus_one(n: int) -> GroupRingElement:
    """The element 3*delta_0 = -1."""
    return GroupRingElement([3] + [0] * (n - 1))


def convolve(f: GroupRingElement, g: GroupRingElement) -> GroupRingElement:
    """(f*g)(j) = sum_i f(i) g(j - i)."""
    if f.n != g.n or f.ring != g.ring:
        raise ValueError("convolution of elements from different rings")
    n = f.n
    a, b = f.coeffs, g.coeffs
    if f.ring is None:
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for k, y in enumerate(b):
                    out[(i + k) % n] += x * y
        return GroupRingElement(out)
    out = [f.ring.zero()] * n
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for k, y in enumerate(b):
            out[(i + k) % n] = out[(i + k) % n] + x * y
    return GroupRingElement(out, f.ring)


def coeff_sum(f: GroupRingElement):
    total = f._zero()
    for c in f.coeffs:
        total = total + c
    return total % 4 if f.ring is None else total


def _cyclic_modulus(n: int) -> int:
    return (1 << n) | 1  # x^n - 1 = x^n + 1 over F2


def try_invert(f: GroupRingElement) -> GroupRingElement | None:
    """Inverse in Z4[Z_n], or None for a non-unit.

    Elements with even coefficient sum are rejected at once. Otherwise the
    inverse is computed in F2[x]/(x^n - 1) and lifted to Z4 with one Newton
    step u <- u(2 - f u).
    """
    if f.ring is not None:
        raise TypeError("inversion is implemented for Z4 coefficients only")
    if coeff_sum(f) % 2 == 0:
        return None
    n = f.n
    inv2 = _poly.f2_inverse_mod(f.mod2(), _cyclic_modulus(n))
    if inv2 is None:
        return None
    u = GroupRingElement(_poly.f2_to_z4(inv2, n))
    u = u * (2 * delta(0, n) - f * u)
    return u


def element_order(f: GroupRingElement, bound: int | None = None) -> int:
    if try_invert(f) is None:
        raise NotAUnitError(f"{f} is not a unit")
    one = delta(0, f.n, f.ring)
    bound = bound or 4**f.n
    power = f
    for k in range(1, bound + 1):
        if power == one:
            return k
        power = power * f
    raise RuntimeError(f"order of {f} exceeds {bound}")


@dataclass(frozen=True)
class UnitSubgroup:
    """A finite subgroup of Z4[Z_n]^x with the generators it was built from."""

    n: int
    generators: tuple[GroupRingElement, ...]
    elements: frozenset[GroupRingElement]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "generators": [str(g) for g in self.generators], "order": self.order}
        )


def generate_subgroup(gens: Iterable[GroupRingElement], n: int | None = None) -> UnitSubgroup:
    """Closure of ``gens`` under convolution, by breadth-first multiplication."""
    gens = tuple(gens)
    if not gens and n is None:
        raise ValueError("need generators or an explicit n")
    n = gens[0].n if gens else n
    for g in gens:
        if g.n != n:
            raise ValueError("generators from different rings")
        if try_invert(g) is None:
            raise NotAUnitError(f"generator {g} is not a unit")
    one = delta(0, n)
    seen = {one}
    queue = deque([one])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return UnitSubgroup(n, gens, frozenset(seen))


def extend_subgroup(U: UnitSubgroup, g: GroupRingElement, max_order: int | None = None) -> UnitSubgroup | None:
    """The subgroup <U, g> as the union of the translates g^k U (groups here are abelian).

    Returns None as soon as the order would exceed ``max_order``.
    """
    if try_invert(g) is None:
        raise NotAUnitError(f"generator {g} is not a unit")
    elements = set(U.elements)
    power = g
    while power not in elements:
        elements.update(power * u for u in U.elements)
        if max_order is not None and len(elements) > max_order:
            return None
        power = power * g
    return UnitSubgroup(U.n, U.generators + (g,), frozenset(elements))


def all_elements(n: int):
    """All 4^n elements of Z4[Z_n] in lexicographic order of (f(0),...,f(n-1))."""
    for k in range(4**n):
        yield GroupRingElement([(k >> (2 * (n - 1 - i))) & 3 for i in range(n)])


def unit_group(n: int) -> list[GroupRingElement]:
    """All units of Z4[Z_n] by exhaustive test, in lexicographic order."""
    if n > MAX_ENUMERATION_LENGTH:
        raise ValueError(f"n={n} exceeds the enumeration limit {MAX_ENUMERATION_LENGTH}")
    modulus = _cyclic_modulus(n)
    units = []
    for f in all_elements(n):
        if coeff_sum(f) % 2 and _poly.f2_inverse_mod(f.mod2(), modulus) is not None:
            units.append(f)
    return units


def two_torsion(units: Iterable[GroupRingElement]) -> list[GroupRingElement]:
    units = list(units)
    one = delta(0, units[0].n)
    return [u for u in units if u * u == one]


# Vectorised helpers used by the searches.


def encode_index(words: np.ndarray) -> np.ndarray:
    """Base-4 index of each row, f(0) most significant."""
    n = words.shape[-1]
    weights = 4 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return np.asarray(words, dtype=np.int64) @ weights


def decode_index(indices, n: int) -> np.ndarray:
    indices = np.asarray(indices, dtype=np.int64)
    shifts = 2 * np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((indices[..., None] >> shifts) & 3).astype(np.int8)


def circulants(words: np.ndarray) -> np.ndarray:
    """Matrices M with (v @ M) = v * w for each row w of ``words``."""
    words = np.asarray(words)
    n = words.shape[-1]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n  # [i, j] -> j - i
    return words[..., idx]


def convolve_many(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """All products left[a] * right[b] as an array of shape (A, B, n)."""
    right = np.asarray(right, dtype=np.int32)
    b, n = right.shape
    mats = circulants(right).transpose(1, 0, 2).reshape(n, b * n)  # [i, (b, j)]
    prod = np.asarray(left, dtype=np.int32) @ mats
    return (prod.reshape(-1, b, n) & 3).astype(np.int8)
