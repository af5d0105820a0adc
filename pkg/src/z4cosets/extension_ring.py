"""The quotient ring Z4[x]/(p(x)) for a monic modulus p.

The shipped modulus is x^4+x^3+x^2+x+1, giving the Galois ring GR(4,4) in
which the class of x is a primitive 5th root of unity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from . import _poly


class NotAUnitError(ValueError):
    """Raised when an inverse or an order is requested for a non-unit."""


@dataclass(frozen=True)
class ExtensionModulus:
    """Monic modulus over Z4, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(c % 4 for c in self.coeffs)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, coeffs: Sequence[int]) -> "ExtensionElement":
        return ExtensionElement(coeffs, self)

    def constant(self, c: int) -> "ExtensionElement":
        return ExtensionElement([c], self)

    def zero(self) -> "ExtensionElement":
        return self.constant(0)

    def one(self) -> "ExtensionElement":
        return self.constant(1)

    def generator(self) -> "ExtensionElement":
        """The class of x."""
        return ExtensionElement([0, 1], self)

    def elements(self):
        m = self.degree
        for k in range(4**m):
            yield ExtensionElement([(k >> (2 * i)) & 3 for i in range(m)], self)


PHI5 = ExtensionModulus((1, 1, 1, 1, 1))


class ExtensionElement:
    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Sequence[int], modulus: ExtensionModulus):
        self.coeffs = tuple(_poly.z4_reduce_monic(list(coeffs), modulus.coeffs))
        self.modulus = modulus

    def _lift(self, other) -> "ExtensionElement":
        if isinstance(other, ExtensionElement):
            if other.modulus != self.modulus:
                raise ValueError("extension elements over different moduli")
            return other
        if isinstance(other, int):
            return ExtensionElement([other], self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ExtensionElement([a + b for a, b in zip(self.coeffs, other.coeffs)], self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ExtensionElement([a - b for a, b in zip(self.coeffs, other.coeffs)], self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ExtensionElement([-a for a in self.coeffs], self.modulus)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ExtensionElement(_poly.z4_polymul(self.coeffs, other.coeffs), self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            base = ext_invert(self)
            if base is None:
                raise NotAUnitError(f"{self} is not a unit")
            return base ** (-k)
        result = self.modulus.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = ExtensionElement([other], self.modulus)
        if not isinstance(other, ExtensionElement):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.modulus.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        return ext_invert(self) is not None

    def compact(self) -> str:
        """Digit string c0c1...c_{m-1}."""
        return "".join(str(c) for c in self.coeffs)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"ExtensionElement({self.compact()!r})"


def render(a: ExtensionElement, symbol: str = "ω") -> str:
    """Render as e.g. ``3ω^3+3ω^2+3ω+2``; highest power first."""
    terms = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        power = symbol if k == 1 else f"{symbol}^{k}"
        terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(\d*)(?:([a-zA-Zω])(?:\^(\d+))?)?$")


def parse(text: str, modulus: ExtensionModulus = PHI5) -> ExtensionElement:
    """Inverse of :func:`render`; accepts ``ω`` or any single-letter symbol."""
    coeffs = [0] * (modulus.degree + 1)
    text = "".join(text.split())
    if not text:
        raise ValueError("empty extension element")
    for term in text.split("+"):
        match = _TERM.match(term)
        if not match or not term:
            raise ValueError(f"cannot parse term {term!r}")
        digits, symbol, power = match.groups()
        c = int(digits) if digits else 1
        k = 0 if symbol is None else int(power or 1)
        while k >= len(coeffs):
            coeffs.append(0)
        coeffs[k] += c
    return ExtensionElement(coeffs, modulus)


def parse_compact(text: str, modulus: ExtensionModulus = PHI5) -> ExtensionElement:
    if len(text) != modulus.degree or any(ch not in "0123" for ch in text):
        raise ValueError(f"not a {modulus.degree}-digit Z4 string: {text!r}")
    return ExtensionElement([int(ch) for ch in text], modulus)


def ext_mul(a: ExtensionElement, b: ExtensionElement) -> ExtensionElement:
    if a.modulus != b.modulus:
        raise ValueError("extension elements over different moduli")
    return a * b


def ext_invert(a: ExtensionElement) -> ExtensionElement | None:
    """Inverse of ``a``, or None if ``a`` is not a unit.

    Inverts modulo 2 with the extended Euclidean algorithm, then applies one
    Newton step u <- u(2 - a u) to lift the inverse to Z4.
    """
    p = a.modulus
    inv2 = _poly.f2_inverse_mod(_poly.z4_to_f2(a.coeffs), _poly.z4_to_f2(p.coeffs))
    if inv2 is None:
        return None
    u = ExtensionElement(_poly.f2_to_z4(inv2, p.degree), p)
    u = u * (2 - a * u)
    assert a * u == p.one()
    return u


def root_of_unity_order(a: ExtensionElement, bound: int = 240) -> int | None:
    """Multiplicative order of a unit, or None if it exceeds ``bound``."""
    if not a.is_unit():
        raise NotAUnitError(f"{a} is not a unit")
    one = a.modulus.one()
    power = a
    for k in range(1, bound + 1):
        if power == one:
            return k
        power = power * a
    return None
