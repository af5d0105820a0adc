"""Arithmetic over Z4, the Lee and Hamming metrics and the Gray map.

Z4 vectors are plain tuples of ints in {0,1,2,3}; binary vectors are tuples of
bits. Text renderings are contiguous digit strings such as ``"11120"``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Z4Vector = tuple[int, ...]
BinaryVector = tuple[int, ...]

LEE_WEIGHTS = (0, 1, 2, 1)

# Gray image of each Z4 symbol as (first bit, second bit).
GRAY = ((0, 0), (0, 1), (1, 1), (1, 0))


def z4(x: int) -> int:
    return x % 4


def z4_vector(values: Iterable[int]) -> Z4Vector:
    vec = tuple(v % 4 for v in values)
    if not vec:
        raise ValueError("vectors must have length at least 1")
    return vec


def lee_weight(x: int) -> int:
    x %= 4
    return min(x, 4 - x)


def lee_weight_vector(v: Sequence[int]) -> int:
    return sum(LEE_WEIGHTS[x % 4] for x in v)


def _check_lengths(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")


def lee_distance(u: Sequence[int], v: Sequence[int]) -> int:
    _check_lengths(u, v)
    return sum(LEE_WEIGHTS[(a - b) % 4] for a, b in zip(u, v))


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    _check_lengths(u, v)
    return sum(a != b for a, b in zip(u, v))


def gray_map(v: Sequence[int]) -> BinaryVector:
    """Coordinatewise Gray image, 0->00, 1->01, 2->11, 3->10."""
    out: list[int] = []
    for x in v:
        out.extend(GRAY[x % 4])
    return tuple(out)


def gray_inverse(bits: Sequence[int]) -> Z4Vector:
    if len(bits) % 2:
        raise ValueError("Gray images have even length")
    lookup = {pair: sym for sym, pair in enumerate(GRAY)}
    return tuple(lookup[(bits[i], bits[i + 1])] for i in range(0, len(bits), 2))


def add(u: Sequence[int], v: Sequence[int]) -> Z4Vector:
    _check_lengths(u, v)
    return tuple((a + b) % 4 for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> Z4Vector:
    _check_lengths(u, v)
    return tuple((a - b) % 4 for a, b in zip(u, v))


def neg(u: Sequence[int]) -> Z4Vector:
    return tuple(-a % 4 for a in u)


def to_string(v: Sequence[int]) -> str:
    return "".join(str(x) for x in v)


def parse_z4(text: str) -> Z4Vector:
    text = text.strip()
    if not text or any(ch not in "0123" for ch in text):
        raise ValueError(f"not a Z4 digit string: {text!r}")
    return tuple(int(ch) for ch in text)


def parse_binary(text: str) -> BinaryVector:
    text = text.strip()
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"not a bit string: {text!r}")
    return tuple(int(ch) for ch in text)
