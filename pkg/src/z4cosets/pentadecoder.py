"""Encoder, membership test and Lee-metric decoder for the pentacode f * U.

Here f = (3,3,2,1,0) and U = <delta_1, -1, g, h> with g = 2 delta_2 + 1 and
h = 2 delta_3 + 1. A message (i, j, k, l) encodes to f (-1)^i g^j h^k delta_l.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple

from .group_ring import GroupRingElement, delta, element, minus_one, try_invert
from .quaternary import lee_distance, lee_weight_vector

N = 5
F = element(3, 3, 2, 1, 0)
G = element(1, 0, 2, 0, 0)
H = element(1, 0, 0, 2, 0)
F_INV = try_invert(F)
assert F_INV == element(0, 1, 1, 1, 2), F_INV


class Message(NamedTuple):
    i: int
    j: int
    k: int
    l: int  # noqa: E741

    def as_list(self) -> list[int]:
        return [self.i, self.j, self.k, self.l]


ALL_MESSAGES = tuple(Message(i, j, k, l) for i, j, k in product(range(2), repeat=3) for l in range(N))


@dataclass(frozen=True)
class DecodeOutcome:
    """Either a decoded message with its codeword, or a detected error."""

    message: Message | None = None
    corrected: GroupRingElement | None = None
    errors_corrected: int = 0

    @property
    def detected(self) -> bool:
        return self.message is None

    @property
    def status(self) -> str:
        if self.detected:
            return "detected"
        return "corrected" if self.errors_corrected else "ok"

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if not self.detected:
            out["message"] = self.message.as_list()
            out["codeword"] = str(self.corrected)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


DETECTED = DecodeOutcome()


def encode(m: Message | tuple[int, int, int, int]) -> GroupRingElement:
    i, j, k, ell = m
    return F * minus_one(N) ** (i % 2) * G ** (j % 2) * H ** (k % 2) * delta(ell % N, N)


def membership_test(s: GroupRingElement) -> Message | None:
    """Exponents (i, j, k, l) with s = (-1)^i g^j h^k delta_l, or None if s is not in U.

    s is in U iff s = delta_l mod 2 and delta_{-l} s = 2(i + j delta_2 + k delta_3) + 1.
    """
    if s.n != N or s.ring is not None:
        raise ValueError("membership is tested in Z4[Z_5]")
    odd = [idx for idx, c in enumerate(s.coeffs) if c % 2]
    if len(odd) != 1:
        return None
    ell = odd[0]
    t = s.shift(-ell).coeffs
    if t[1] or t[4] or t[2] % 2 or t[3] % 2:
        return None
    return Message((t[0] - 1) // 2, t[2] // 2, t[3] // 2, ell)


def is_codeword(y: GroupRingElement) -> Message | None:
    return membership_test(F_INV * y)


# Patterns for delta_m z, one per row, with the row's (m + l, m + r) output.
# "o" odd, "e" even, "pm" a +-1 slot (all such slots share one sign), 0 and 2 literal.
PATTERN_TABLE = (
    (("o", "pm", "o", "o", 2), (0, 0)),
    (("o", "o", "pm", "o", 0), (3, 4)),
    (("o", "pm", "e", 2, "e"), (2, 4)),
    (("pm", "o", "e", 0, "e"), (4, 3)),
    (("pm", "e", "pm", "e", "e"), (1, 4)),
)


def match_pattern(pattern, word) -> int | None:
    """Sign (+1 or -1) of the +-1 slots if ``word`` matches, else None."""
    sign = None
    for token, x in zip(pattern, word):
        if token == "o":
            if x % 2 == 0:
                return None
        elif token == "e":
            if x % 2:
                return None
        elif token == "pm":
            if x not in (1, 3):
                return None
            s = 1 if x == 1 else -1
            if sign is not None and s != sign:
                return None
            sign = s
        elif x != token:
            return None
    return sign


def locate_error(z: GroupRingElement) -> tuple[int, int, int, int, int] | None:
    """First (m, row, l, r, sign) whose pattern matches delta_m z."""
    for m in range(N):
        word = z.shift(m).coeffs
        for row, (pattern, (ell_off, r_off)) in enumerate(PATTERN_TABLE):
            sign = match_pattern(pattern, word)
            if sign is not None:
                return m, row, (ell_off - m) % N, (r_off - m) % N, sign
    return None


def decode(y: GroupRingElement | str) -> DecodeOutcome:
    """Correct one Lee error, detect two."""
    if isinstance(y, str):
        y = GroupRingElement.parse(y)
    if y.n != N or y.ring is not None:
        raise ValueError("the pentacode decoder takes words of Z4^5")
    z = F_INV * y
    if bin(z.mod2()).count("1") % 2:
        msg = membership_test(z)
        if msg is None:
            return DETECTED
        return DecodeOutcome(msg, y, 0)
    located = locate_error(z)
    if located is None:
        return DETECTED
    _, _, _, r, sign = located
    msg = membership_test(z - sign * delta(r, N) * F_INV)
    if msg is None:
        return DETECTED
    return DecodeOutcome(msg, y - sign * delta(r, N), 1)


def weight_one_errors() -> list[GroupRingElement]:
    return [s * delta(r, N) for r in range(N) for s in (1, 3)]


def weight_two_errors() -> list[GroupRingElement]:
    errs = [2 * delta(r, N) for r in range(N)]
    for r, s in combinations(range(N), 2):
        for a, b in product((1, 3), repeat=2):
            errs.append(a * delta(r, N) + b * delta(s, N))
    return errs


@dataclass
class VerificationReport:
    clean_ok: int = 0
    clean_total: int = 0
    single_ok: int = 0
    single_total: int = 0
    double_detected: int = 0
    double_total: int = 0
    miscorrections: int = 0

    @property
    def passed(self) -> bool:
        return (
            self.clean_ok == self.clean_total
            and self.single_ok == self.single_total
            and self.double_detected == self.double_total
            and self.miscorrections == 0
        )

    def table(self) -> str:
        rows = [
            ("no error", self.clean_ok, self.clean_total, "decoded"),
            ("Lee weight 1", self.single_ok, self.single_total, "corrected"),
            ("Lee weight 2", self.double_detected, self.double_total, "detected"),
        ]
        lines = [f"{name:<14}{ok:>6} / {total:<6}{what}" for name, ok, total, what in rows]
        lines.append(f"{'miscorrections':<14}{self.miscorrections:>6}")
        return "\n".join(lines)


def decode_exhaustive_verify() -> VerificationReport:
    """Decode every codeword with no error, all 10 weight-1 and all 45 weight-2 errors."""
    rep = VerificationReport()
    singles, doubles = weight_one_errors(), weight_two_errors()
    assert len(singles) == 10 and len(doubles) == 45
    for m in ALL_MESSAGES:
        c = encode(m)
        rep.clean_total += 1
        out = decode(c)
        rep.clean_ok += out.message == m and out.errors_corrected == 0
        for e in singles:
            rep.single_total += 1
            out = decode(c + e)
            if out.message == m and out.corrected == c:
                rep.single_ok += 1
            elif not out.detected:
                rep.miscorrections += 1
        for e in doubles:
            rep.double_total += 1
            out = decode(c + e)
            if out.detected:
                rep.double_detected += 1
            else:
                rep.miscorrections += 1
    return rep


def codewords() -> list[GroupRingElement]:
    return [encode(m) for m in ALL_MESSAGES]


def nearest_codewords(y: GroupRingElement) -> tuple[int, list[GroupRingElement]]:
    """Brute-force Lee-nearest codewords and their distance."""
    words = codewords()
    dists = [lee_distance(y.coeffs, c.coeffs) for c in words]
    best = min(dists)
    return best, [c for c, d in zip(words, dists) if d == best]


def error_weight(y: GroupRingElement, c: GroupRingElement) -> int:
    return lee_weight_vector((y - c).coeffs)
