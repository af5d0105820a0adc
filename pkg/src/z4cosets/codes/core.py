"""The Code type, distance computations, shortening and the Plotkin bound."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .. import quaternary as q

Z4 = "z4"
BINARY = "bin"


@dataclass(frozen=True)
class Code:
    """A finite set of equal-length words over Z4 (Lee metric) or F2 (Hamming).

    ``words`` is kept sorted so that iteration order is reproducible.
    """

    n: int
    alphabet: str
    words: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        if self.alphabet not in (Z4, BINARY):
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        q_ = 4 if self.alphabet == Z4 else 2
        words = set()
        for w in self.words:
            w = tuple(int(x) for x in w)
            if len(w) != self.n:
                raise ValueError(f"word {w} does not have length {self.n}")
            if any(not 0 <= x < q_ for x in w):
                raise ValueError(f"word {w} has symbols outside the alphabet")
            words.add(w)
        object.__setattr__(self, "words", tuple(sorted(words)))

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]], alphabet: str = Z4) -> "Code":
        words = [tuple(w) for w in words]
        if not words:
            raise ValueError("a code needs at least one word")
        return cls(len(words[0]), alphabet, tuple(words))

    @property
    def metric(self) -> str:
        return "lee" if self.alphabet == Z4 else "hamming"

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.wordset

    @cached_property
    def wordset(self) -> frozenset:
        return frozenset(self.words)

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        return (self.n, self.alphabet, self.words) == (other.n, other.alphabet, other.words)

    def __hash__(self):
        return hash((self.n, self.alphabet, self.words))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int8).reshape(len(self.words), self.n)

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        return distance_matrix(self.array, self.alphabet)

    def gray(self) -> "Code":
        if self.alphabet != Z4:
            raise ValueError("the Gray map applies to Z4 codes")
        return Code(2 * self.n, BINARY, tuple(q.gray_map(w) for w in self.words))

    def translate(self, v: Sequence[int]) -> "Code":
        """The code {w + v} (XOR for binary codes)."""
        mod = 4 if self.alphabet == Z4 else 2
        return Code(self.n, self.alphabet, tuple(tuple((a + b) % mod for a, b in zip(w, v)) for w in self.words))

    def parameters(self) -> tuple[int, int, int]:
        return (self.n, self.size, min_distance(self))

    def serialize(self) -> str:
        lines = [f"n={self.n} alphabet={self.alphabet} M={self.size}"]
        lines += [q.to_string(w) for w in self.words]
        return "\n".join(lines) + "\n"

    @classmethod
    def deserialize(cls, text: str) -> "Code":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty code file")
        try:
            header = dict(item.split("=", 1) for item in lines[0].split())
            n, alphabet, m = int(header["n"]), header["alphabet"], int(header["M"])
        except (KeyError, ValueError) as exc:
            raise ValueError(f"malformed header {lines[0]!r}") from exc
        parse = q.parse_z4 if alphabet == Z4 else q.parse_binary
        words = [parse(ln) for ln in lines[1:]]
        code = cls(n, alphabet, tuple(words))
        if code.size != m or len(words) != m:
            raise ValueError(f"header announces M={m}, file has {len(words)} words ({code.size} distinct)")
        return code


_LEE = np.array(q.LEE_WEIGHTS, dtype=np.int16)


def distance_matrix(words: np.ndarray, alphabet: str = Z4) -> np.ndarray:
    """All pairwise distances of the rows of ``words``."""
    words = np.asarray(words, dtype=np.int16)
    diff = words[:, None, :] - words[None, :, :]
    if alphabet == Z4:
        return _LEE[diff % 4].sum(axis=-1)
    return (diff != 0).sum(axis=-1)


def min_distance(code: Code) -> int:
    if code.size < 2:
        raise ValueError("minimum distance needs at least two words")
    d = code.distance_matrix
    return int(d[~np.eye(code.size, dtype=bool)].min())


@dataclass(frozen=True)
class DistanceEnumerator:
    """Average per-word distance counts; ``counts`` excludes distance 0."""

    counts: dict[int, int]
    size: int
    distance_invariant: bool
    profiles: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, default=())

    def polynomial(self, total: int) -> str:
        """Render as x^total + sum A_d x^(total-d) y^d.

        ``total`` is the largest possible distance: n for Hamming, 2n for Lee.
        """
        terms = [f"x^{total}"]
        for d in sorted(self.counts):
            xs = "" if total == d else f"x^{total - d}"
            terms.append(f"{self.counts[d]} {xs}y^{d}")
        return " + ".join(terms)

    def to_json(self) -> str:
        return json.dumps({str(d): c for d, c in sorted(self.counts.items())})


def distance_enumerator(code: Code) -> DistanceEnumerator:
    """Per-word distance profiles and whether they all coincide.

    For a distance-invariant code ``counts`` is the common profile; otherwise
    it holds the ordered-pair totals divided by M when they are integral,
    else the raw ordered-pair totals.
    """
    d = code.distance_matrix
    profiles = []
    for row in d:
        c = Counter(int(x) for x in row)
        c.pop(0, None)
        profiles.append(tuple(sorted(c.items())))
    invariant = len(set(profiles)) == 1
    if invariant:
        counts = dict(profiles[0])
    else:
        total: Counter = Counter()
        for p in profiles:
            total.update(dict(p))
        m = code.size
        counts = {k: v // m for k, v in total.items()} if all(v % m == 0 for v in total.values()) else dict(total)
    return DistanceEnumerator(dict(sorted(counts.items())), code.size, invariant, tuple(profiles))


def profile_multiset(code: Code) -> tuple:
    """Sorted per-word distance profiles; an invariant of Lee/Hamming isometry."""
    return tuple(sorted(distance_enumerator(code).profiles))


def shorten(code: Code, coord: int, symbol: int) -> Code:
    """Words with ``symbol`` at ``coord``, with that coordinate deleted."""
    if not 0 <= coord < code.n:
        raise ValueError(f"coordinate {coord} outside 0..{code.n - 1}")
    words = [w[:coord] + w[coord + 1 :] for w in code.words if w[coord] == symbol]
    if not words:
        raise ValueError("shortening left no words")
    return Code(code.n - 1, code.alphabet, tuple(words))


def plotkin_bound(n: int, d: int) -> int:
    """Plotkin upper bound on M for binary codes with 2d >= n."""
    if 2 * d < n:
        raise ValueError("the Plotkin bound needs 2d >= n")
    if 2 * d == n:
        return 4 * d
    return 2 * (d // (2 * d - n))


def plotkin_check(n: int, d: int, M: int) -> bool:
    """True iff M does not exceed the Plotkin bound for (n, d)."""
    return M <= plotkin_bound(n, d)


def meets_plotkin_bound(n: int, d: int, M: int) -> bool:
    return M == plotkin_bound(n, d)
