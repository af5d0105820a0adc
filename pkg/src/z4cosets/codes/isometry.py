"""Lee isometries, code equivalence, automorphisms and left-multiplication isometries."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Sequence

import numpy as np

from ..group_ring import GroupRingElement, all_elements, convolve_many, encode_index, unit_group
from .core import BINARY, Z4, Code, distance_matrix, profile_multiset

# The 8 Lee isometries x -> s*x + c of Z4.
SYMBOL_MAPS = tuple((s, c) for s in (1, 3) for c in range(4))


@dataclass(frozen=True)
class LeeIsometry:
    """Coordinate i goes to position perm[i] as sign[i]*x + shift[i]."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]
    shifts: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n or len(self.shifts) != n:
            raise ValueError("malformed isometry")
        if any(s % 4 not in (1, 3) for s in self.signs):
            raise ValueError("signs must be +-1")

    @classmethod
    def identity(cls, n: int) -> "LeeIsometry":
        return cls(tuple(range(n)), (1,) * n, (0,) * n)

    def __call__(self, word: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(word)
        for i, x in enumerate(word):
            out[self.perm[i]] = (self.signs[i] * x + self.shifts[i]) % 4
        return tuple(out)

    def apply(self, code: Code) -> Code:
        return Code(code.n, code.alphabet, tuple(self(w) for w in code.words))


def lee_equivalent(A: Code, B: Code) -> LeeIsometry | None:
    """A Lee isometry mapping A onto B, or None if there is none.

    Codes are first compared by their multisets of distance profiles; then a
    backtracking search assigns each coordinate of A a target position and a
    symbol map, pruning whenever the projected word multisets disagree. The
    search is complete.
    """
    if A.alphabet != Z4 or B.alphabet != Z4:
        raise ValueError("Lee equivalence is defined for Z4 codes")
    if A.n != B.n or A.size != B.size:
        return None
    if profile_multiset(A) != profile_multiset(B):
        return None
    n = A.n
    a_cols = [tuple(w[i] for w in A.words) for i in range(n)]
    b_cols = [tuple(w[i] for w in B.words) for i in range(n)]
    b_hist = [Counter(col) for col in b_cols]
    perm = [0] * n
    maps: list[tuple[int, int]] = [(1, 0)] * n
    used = [False] * n

    def projected(prefix_len):
        a_rows = Counter(
            tuple((maps[i][0] * w[i] + maps[i][1]) % 4 for i in range(prefix_len)) for w in A.words
        )
        b_rows = Counter(tuple(w[perm[i]] for i in range(prefix_len)) for w in B.words)
        return a_rows == b_rows

    def search(i: int) -> bool:
        if i == n:
            return True
        for p in range(n):
            if used[p]:
                continue
            for s, c in SYMBOL_MAPS:
                hist = Counter((s * x + c) % 4 for x in a_cols[i])
                if hist != b_hist[p]:
                    continue
                perm[i], maps[i], used[p] = p, (s, c), True
                if projected(i + 1) and search(i + 1):
                    return True
                used[p] = False
        return False

    if not search(0):
        return None
    iso = LeeIsometry(tuple(perm), tuple(m[0] for m in maps), tuple(m[1] for m in maps))
    assert iso.apply(A) == B
    return iso


PENTACODE_SYMMETRIES: dict[str, Callable[[tuple], tuple]] = {
    "negation": lambda w: tuple(-x % 4 for x in w),
    "partial-reflection": lambda w: (-w[0] % 4, (2 - w[1]) % 4, w[2], (2 - w[3]) % 4, -w[4] % 4),
    "cyclic-shift": lambda w: (w[1], w[2], w[3], w[4], w[0]),
    "reversal-plus-2": lambda w: tuple((2 + x) % 4 for x in reversed(w)),
}


def symmetry_report(code: Code) -> dict[str, bool]:
    """Which of the four pentacode symmetries fix ``code`` setwise."""
    if code.n != 5:
        raise ValueError("the pentacode symmetries act on length 5")
    return {name: {m(w) for w in code.words} == code.wordset for name, m in PENTACODE_SYMMETRIES.items()}


def pentacode_symmetries_check(code: Code | None = None) -> bool:
    if code is None:
        from .constructions import pentacode_direct

        code = pentacode_direct()
    return all(symmetry_report(code).values())


def count_permutation_maps(A: Code, B: Code) -> int:
    """Number of coordinate permutations mapping binary code A onto B.

    Identical columns of A are grouped; permuting within a group never changes
    the image, so only assignments increasing on each group are visited and
    the count is multiplied by the groups' factorials.
    """
    n = A.n
    if B.n != n or A.size != B.size:
        return 0
    a_words, b_words = A.words, B.words
    a_cols = [tuple(w[i] for w in a_words) for i in range(n)]
    b_weights = [sum(w[i] for w in b_words) for i in range(n)]
    a_weights = [sum(col) for col in a_cols]
    classes: dict[tuple, list[int]] = {}
    for i, col in enumerate(a_cols):
        classes.setdefault(col, []).append(i)
    multiplier = 1
    prev_in_class: list[int | None] = [None] * n
    for members in classes.values():
        multiplier *= factorial(len(members))
        for a, b in zip(members, members[1:]):
            prev_in_class[b] = a
    perm = [0] * n
    used = [False] * n
    count = 0

    def consistent(k: int) -> bool:
        left = Counter(tuple(w[i] for i in range(k)) for w in a_words)
        right = Counter(tuple(w[perm[i]] for i in range(k)) for w in b_words)
        return left == right

    def search(i: int):
        nonlocal count
        if i == n:
            count += 1
            return
        prev = prev_in_class[i]
        for p in range(n):
            if used[p] or b_weights[p] != a_weights[i]:
                continue
            if prev is not None and p < perm[prev]:
                continue
            perm[i], used[p] = p, True
            if consistent(i + 1):
                search(i + 1)
            used[p] = False

    search(0)
    return count * multiplier


def binary_automorphism_order(code: Code, translations: bool = True, max_length: int = 12) -> int:
    """Order of the automorphism group of a binary code.

    With ``translations`` the group consists of the Hamming isometries
    x -> pi(x) + v fixing the code; otherwise only coordinate permutations.
    The translated count uses C' = C + c0, which contains 0: every
    automorphism maps C' onto C' + v' for a unique v' in C'.
    """
    if code.alphabet != BINARY:
        raise ValueError("expected a binary code")
    if code.n > max_length:
        raise ValueError(f"length {code.n} exceeds the search budget {max_length}")
    if not translations:
        return count_permutation_maps(code, code)
    shifted = code.translate(code.words[0])
    return sum(count_permutation_maps(shifted, shifted.translate(v)) for v in shifted.words)


def left_mult_isometry_set(target: Code | Iterable[GroupRingElement] | None = None) -> list[GroupRingElement]:
    """All s in Z4[Z_5] whose left multiplication maps the target set to
    itself and preserves Lee distance on it.

    ``target`` defaults to the unit group of Z4[Z_5].
    """
    n = 5
    if target is None:
        words = np.array([u.coeffs for u in unit_group(n)], dtype=np.int8)
    elif isinstance(target, Code):
        words = target.array
    else:
        words = np.array([tuple(x) for x in target], dtype=np.int8)
    if words.shape[1] != n:
        raise ValueError("left multiplication isometries are computed in Z4[Z_5]")
    target_idx = encode_index(words)
    target_set = set(int(i) for i in target_idx)
    table = lee_distance_table(n)
    base = table[np.ix_(target_idx, target_idx)]
    everything = np.array([s.coeffs for s in all_elements(n)], dtype=np.int8)
    image_idx = encode_index(convolve_many(everything, words))  # (4^n, M)
    hits = []
    for s_index, row in enumerate(image_idx):
        row_set = set(row.tolist())
        if len(row_set) != len(row) or not row_set <= target_set:
            continue
        if np.array_equal(table[np.ix_(row, row)], base):
            hits.append(GroupRingElement(everything[s_index].tolist()))
    return hits


@lru_cache(maxsize=4)
def lee_distance_table(n: int) -> np.ndarray:
    """Lee distances between all pairs of Z4[Z_n] elements, by base-4 index."""
    words = np.array([f.coeffs for f in all_elements(n)], dtype=np.int8)
    return distance_matrix(words).astype(np.int8)
