"""Discrete Fourier transform over GR(4,4)[Z_5] and the pentacode spectra."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .extension_ring import PHI5, ExtensionElement, ext_invert, render
from .group_ring import GroupRingElement

N = 5
OMEGA = PHI5.generator()

# Frequency scaling that maps our transform onto the published table layout:
# row component i of the table equals our component (SCALE * i) mod 5.
TABLE_FREQUENCY_SCALE = 4


@dataclass(frozen=True)
class Spectrum:
    components: tuple[ExtensionElement, ...]

    def __post_init__(self):
        if len(self.components) != N:
            raise ValueError("spectra have exactly 5 components")

    def __mul__(self, other: "Spectrum") -> "Spectrum":
        return Spectrum(tuple(a * b for a, b in zip(self.components, other.components)))

    def __add__(self, other: "Spectrum") -> "Spectrum":
        return Spectrum(tuple(a + b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "Spectrum":
        return Spectrum(tuple(-a for a in self.components))

    def __pow__(self, k: int) -> "Spectrum":
        return Spectrum(tuple(a**k for a in self.components))

    def __getitem__(self, i: int) -> ExtensionElement:
        return self.components[i]

    def permuted(self, scale: int) -> "Spectrum":
        """Component i of the result is component (scale*i mod 5) of self."""
        return Spectrum(tuple(self.components[(scale * i) % N] for i in range(N)))

    def render(self) -> str:
        return "(" + ", ".join(render(c) for c in self.components) + ")"

    def compact(self) -> list[str]:
        return [c.compact() for c in self.components]

    __str__ = render


def spectrum(values: Iterable) -> Spectrum:
    """Build a spectrum from ExtensionElements, ints or rendered strings."""
    from .extension_ring import parse

    comps = []
    for v in values:
        if isinstance(v, str):
            v = parse(v)
        elif isinstance(v, int):
            v = PHI5.constant(v)
        comps.append(v)
    return Spectrum(tuple(comps))


def _embed(f: GroupRingElement | Sequence[int]) -> list[ExtensionElement]:
    coeffs = f.coeffs if isinstance(f, GroupRingElement) else tuple(f)
    if len(coeffs) != N:
        raise ValueError(f"the transform is defined for length 5 only, got {len(coeffs)}")
    return [c if isinstance(c, ExtensionElement) else PHI5.constant(c) for c in coeffs]


def dft(f: GroupRingElement | Sequence[int]) -> Spectrum:
    """F(i) = sum_j f(j) w^(-ji)."""
    coeffs = _embed(f)
    powers = [OMEGA**k for k in range(N)]
    out = []
    for i in range(N):
        acc = PHI5.zero()
        for j, c in enumerate(coeffs):
            acc = acc + c * powers[(-j * i) % N]
        out.append(acc)
    return Spectrum(tuple(out))


# 1/5 in Z4.
_INV_N = 1


def idft(F: Spectrum) -> GroupRingElement:
    """f(i) = (1/5) sum_j F(j) w^(ij), returned over GR(4,4)."""
    powers = [OMEGA**k for k in range(N)]
    out = []
    for i in range(N):
        acc = PHI5.zero()
        for j, c in enumerate(F.components):
            acc = acc + c * powers[(i * j) % N]
        out.append(acc * _INV_N)
    return GroupRingElement(out, PHI5)


def to_z4(f: GroupRingElement) -> GroupRingElement:
    """Drop an extension-ring element with constant coefficients back to Z4."""
    if f.ring is None:
        return f
    if any(any(c.coeffs[1:]) for c in f.coeffs):
        raise ValueError("coefficients are not all constants")
    return GroupRingElement([c.coeffs[0] for c in f.coeffs])


def spectrum_is_unit(F: Spectrum) -> bool:
    return all(ext_invert(c) is not None for c in F.components)


# Spectral factors displayed for the pentacode, written with the root OMEGA.
F_HAT = spectrum([1] + [3 * OMEGA**i + 1 for i in range(1, N)])
G_HAT = spectrum([1] + [3 * OMEGA**i + 2 for i in range(1, N)])
H_HAT = spectrum([1] + [2 * OMEGA**i + 3 for i in range(1, N)])
MINUS_ONE = spectrum([3] * N)


def spectral_factorization(c: GroupRingElement | Sequence[int]) -> tuple[int, int, int] | None:
    """Exponents (i, j, k) with dft(c) = F_HAT (-1)^i H_HAT^j G_HAT^k, if any.

    The factors are written with the root OMEGA, while codeword spectra are
    compared after the frequency scaling TABLE_FREQUENCY_SCALE.
    """
    target = dft(c).permuted(TABLE_FREQUENCY_SCALE)
    for i in range(2):
        for j in range(2):
            for k in range(10):
                if F_HAT * MINUS_ONE**i * H_HAT**j * G_HAT**k == target:
                    return (i, j, k)
    return None


def pentacode_spectra() -> list[Spectrum]:
    """Spectra of all 40 pentacode words, in the words' construction order."""
    from .codes.constructions import pentacode_words

    return [dft(w).permuted(TABLE_FREQUENCY_SCALE) for w in pentacode_words()]


def normalized_spectra() -> list[Spectrum]:
    """The 20 pentacode spectra with leading component 1, one per negation pair.

    Negating a word negates its spectrum, and the leading component is the
    coefficient sum (1 or 3), so exactly one spectrum of each pair qualifies.
    """
    return [s for s in pentacode_spectra() if s[0] == PHI5.one()]


def render_table(rows: Sequence[Spectrum]) -> str:
    return "\n".join(s.render() for s in rows)


def spectra_json(rows: Sequence[Spectrum]) -> str:
    return json.dumps([s.compact() for s in rows])
