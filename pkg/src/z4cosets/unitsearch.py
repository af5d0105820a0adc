"""Subgroups of the unit group of Z4[Z_n] and the codes their cosets give.

The order-40 subgroups of Z4[Z_5]^x (of structure Z2^5 x Z3 x Z5) are the
products of an order-8 subgroup of the 2-torsion with the Sylow-5 subgroup
<delta_1>; the order-8 subgroups correspond to 3-dimensional subspaces of
the 2-torsion viewed as a vector space over F2.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .codes.constructions import pentacode_direct
from .codes.core import Code, distance_matrix, profile_multiset
from .codes.isometry import lee_equivalent
from .group_ring import (
    GroupRingElement,
    UnitSubgroup,
    all_elements,
    convolve_many,
    decode_index,
    delta,
    element_order,
    encode_index,
    extend_subgroup,
    generate_subgroup,
    minus_one,
    two_torsion,
    unit_group,
)

N = 5
UNIT_COUNT = 480
SUBGROUP_ORDER = 40


class BudgetExceeded(RuntimeError):
    """A search hit its configured bound before finishing."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def rref_matrices(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Reduced row echelon k x n matrices over F2 of rank k, rows as bitmasks.

    Bit j of a row is column j; pivots are the lowest set bits.
    """
    for pivots in combinations(range(n), k):
        free = []
        for r, p in enumerate(pivots):
            cols = [c for c in range(p + 1, n) if c not in pivots]
            free.append(cols)
        slots = [(r, c) for r, cols in enumerate(free) for c in cols]
        for bits in product((0, 1), repeat=len(slots)):
            rows = [1 << p for p in pivots]
            for (r, c), b in zip(slots, bits):
                if b:
                    rows[r] |= 1 << c
            yield tuple(rows)


def f2_basis(elements: Sequence[GroupRingElement]) -> list[GroupRingElement]:
    """Greedy basis of an elementary abelian 2-group, taken in the given order."""
    one = delta(0, elements[0].n)
    span = {one}
    basis = []
    for x in elements:
        if x not in span:
            basis.append(x)
            span |= {x * s for s in span}
    return basis


def _display_key(f: GroupRingElement):
    return (f.degree(), tuple(reversed(f.coeffs)))


@dataclass
class CatalogEntry:
    subgroup: UnitSubgroup
    cosets: list[frozenset] = field(default_factory=list)
    representatives: list[GroupRingElement] = field(default_factory=list)
    parameters: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "generators": [str(g) for g in self.subgroup.generators],
                "order": self.subgroup.order,
                "representatives": [str(r) for r in self.representatives],
                "parameters": [list(p) for p in self.parameters],
            }
        )


@dataclass
class SubgroupCatalog:
    entries: list[CatalogEntry]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def subgroups(self) -> list[UnitSubgroup]:
        return [e.subgroup for e in self.entries]

    def json_lines(self) -> Iterator[str]:
        for e in self.entries:
            yield e.to_json()


@lru_cache(maxsize=1)
def _units5() -> tuple[GroupRingElement, ...]:
    return tuple(unit_group(N))


def nice_generators(elements: Iterable[GroupRingElement]) -> list[GroupRingElement]:
    """A generating set of an elementary abelian 2-group preferring low degree."""
    one = delta(0, N)
    return f2_basis(sorted((x for x in elements if x != one), key=_display_key))


def order40_subgroups(with_cosets: bool = True) -> SubgroupCatalog:
    """All 155 subgroups of order 40 of Z4[Z_5]^x, each verified closed."""
    units = _units5()
    torsion = sorted(two_torsion(units), key=_display_key)
    basis = f2_basis(torsion)
    if len(basis) != 5:
        raise AssertionError(f"2-torsion has rank {len(basis)}, expected 5")
    shift = delta(1, N)
    one = delta(0, N)
    entries = []
    for rows in rref_matrices(5, 3):
        gens8 = []
        for row in rows:
            x = one
            for b in range(5):
                if row >> b & 1:
                    x = x * basis[b]
            gens8.append(x)
        part8 = generate_subgroup(gens8).elements
        gens = [shift] + nice_generators(part8)
        U = generate_subgroup(gens)
        verify_subgroup(U, SUBGROUP_ORDER)
        entries.append(CatalogEntry(U))
    catalog = SubgroupCatalog(entries)
    if with_cosets:
        for entry in catalog:
            entry.cosets = unit_cosets(entry.subgroup)
            entry.representatives = [minimal_degree_representative(c) for c in entry.cosets]
            entry.parameters = [coset_parameters(c) for c in entry.cosets]
    return catalog


def verify_subgroup(U: UnitSubgroup, order: int | None = None) -> None:
    elems = U.elements
    if order is not None and len(elems) != order:
        raise AssertionError(f"subgroup has order {len(elems)}, expected {order}")
    arr = np.array([e.coeffs for e in elems], dtype=np.int8)
    idx = set(encode_index(arr).tolist())
    prods = encode_index(convolve_many(arr, arr))
    if not set(prods.ravel().tolist()) <= idx:
        raise AssertionError("subgroup is not closed under convolution")
    if delta(0, U.n) not in elems:
        raise AssertionError("subgroup misses the identity")


def unit_cosets(U: UnitSubgroup, units: Sequence[GroupRingElement] | None = None) -> list[frozenset]:
    """Cosets f * U partitioning the unit group, ordered by their representatives."""
    units = list(units if units is not None else _units5())
    remaining = set(units)
    cosets = []
    for f in sorted(units, key=_display_key):
        if f not in remaining:
            continue
        coset = frozenset(f * u for u in U.elements)
        remaining -= coset
        cosets.append(coset)
    return cosets


def minimal_degree_representative(coset: Iterable[GroupRingElement]) -> GroupRingElement:
    """Element of least degree; ties go to the smallest coefficient sequence
    read from the highest power down, which makes the choice monic."""
    coset = list(coset)
    if not coset:
        raise ValueError("empty coset")
    return min(coset, key=_display_key)


def coset_parameters(coset: Iterable[GroupRingElement]) -> tuple[int, int]:
    """(M, minimum Lee distance) of a set of group ring elements."""
    arr = np.array([c.coeffs for c in coset], dtype=np.int8)
    d = distance_matrix(arr)
    m = len(arr)
    return m, int(d[~np.eye(m, dtype=bool)].min()) if m > 1 else 0


def coset_code(coset: Iterable[GroupRingElement]) -> Code:
    return Code.from_words([c.coeffs for c in coset])


@dataclass(frozen=True)
class PentacodeHit:
    subgroup: UnitSubgroup
    representatives: tuple[GroupRingElement, ...]


def pentacode_subgroup_scan(catalog: SubgroupCatalog | None = None, order: Sequence[int] | None = None) -> list[PentacodeHit]:
    """Subgroups having cosets Lee-equivalent to the pentacode.

    Cosets are first filtered on their multiset of distance profiles, then
    checked with the full equivalence search. ``order`` permutes the scan
    order; results are sorted so they do not depend on it.
    """
    catalog = catalog or order40_subgroups()
    target = pentacode_direct()
    target_profiles = profile_multiset(target)
    indices = list(order) if order is not None else range(len(catalog))
    hits = []
    for idx in indices:
        entry = catalog.entries[idx]
        if not entry.cosets:
            entry.cosets = unit_cosets(entry.subgroup)
        reps = []
        for coset in entry.cosets:
            code = coset_code(coset)
            if profile_multiset(code) != target_profiles:
                continue
            if lee_equivalent(code, target) is not None:
                reps.append(minimal_degree_representative(coset))
        if reps:
            hits.append(PentacodeHit(entry.subgroup, tuple(sorted(reps, key=_display_key))))
    hits.sort(key=lambda h: sorted(e.coeffs for e in h.subgroup.elements))
    return hits


def render_representations(hits: Sequence[PentacodeHit]) -> str:
    """Text rendering with one block per subgroup: generators and f representatives."""
    blocks = []
    for j, hit in enumerate(sorted(hits, key=_hit_display_key), start=1):
        gens = [_vec(g) for g in hit.subgroup.generators]
        reps = [f"f_{j},{k} = {_vec(f)}" for k, f in enumerate(hit.representatives, start=1)]
        lines = []
        for r in range(max(len(gens), len(reps))):
            left = ""
            if r < len(gens):
                left = ("U_%d = < " % j if r == 0 else " " * 8) + gens[r] + (" >" if r == len(gens) - 1 else ",")
            right = reps[r] if r < len(reps) else ""
            lines.append(f"{left:<28}| {right}".rstrip())
        blocks.append("\n".join(lines))
    return ("\n" + "-" * 44 + "\n").join(blocks)


def _hit_display_key(hit: PentacodeHit):
    return [_display_key(g) for g in hit.subgroup.generators]


def _vec(f: GroupRingElement) -> str:
    return "(" + ",".join(str(c) for c in f.coeffs) + ")"


# Parameter scan over coset codes f * U for small n.


@dataclass(frozen=True)
class SearchHit:
    n: int
    representative: GroupRingElement
    generators: tuple[GroupRingElement, ...]
    params: tuple[int, int, int]  # Gray image (2n, M, d)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "f": str(self.representative),
            "generators": [str(g) for g in self.generators],
            "params": list(self.params),
        }


def scan_pool(n: int, max_element_order: int = 14) -> list[GroupRingElement]:
    """Candidate generators: delta_1, -1 and units of support at most 2."""
    pool = [delta(1, n), minus_one(n)] if n > 1 else [minus_one(n)]
    seen = set(pool)
    for j in range(n):
        for a, b in product(range(4), repeat=2):
            if not a or not b:
                continue
            coeffs = [0] * n
            coeffs[0], coeffs[j] = a, (coeffs[j] + b) % 4 if j == 0 else b
            f = GroupRingElement(coeffs)
            if f in seen or not f.is_unit() or f == delta(0, n):
                continue
            if element_order(f) <= max_element_order:
                seen.add(f)
                pool.append(f)
    return pool


def enumerate_scan_subgroups(n: int, max_generators: int = 4, max_order: int = 64) -> list[UnitSubgroup]:
    """Distinct subgroups generated by at most ``max_generators`` pool elements."""
    pool = scan_pool(n)
    trivial = generate_subgroup([], n=n)
    level = {trivial.elements: trivial}
    found = {}
    for _ in range(max_generators):
        nxt = {}
        for U in level.values():
            for g in pool:
                if g in U.elements:
                    continue
                V = extend_subgroup(U, g, max_order)
                if V is None or V.elements in found or V.elements in nxt:
                    continue
                nxt[V.elements] = V
        found.update(nxt)
        level = nxt
    return sorted(found.values(), key=lambda U: (U.order, [g.coeffs for g in U.generators]))


@lru_cache(maxsize=8)
def _gray_masks(n: int) -> np.ndarray:
    """Gray image of every element of Z4[Z_n] as a 2n-bit integer, by base-4 index."""
    gray_bits = np.array([0b00, 0b01, 0b11, 0b10], dtype=np.int64)
    digits = decode_index(np.arange(4**n), n).astype(np.int64)
    shifts = 2 * np.arange(n - 1, -1, -1, dtype=np.int64)
    return (gray_bits[digits] << shifts).sum(axis=1)


@lru_cache(maxsize=1)
def _popcount16() -> np.ndarray:
    table = np.zeros(1 << 16, dtype=np.int16)
    for b in range(16):
        table[np.arange(1 << 16) >> b & 1 == 1] += 1
    return table


def _orbit_parameters(n: int, U: UnitSubgroup, min_d: int) -> list[SearchHit]:
    """Gray parameters of every orbit f * U, f ranging over all of Z4[Z_n].

    Lee distances are computed as Hamming distances of Gray images.
    """
    everything = decode_index(np.arange(4**n), n)
    u_arr = np.array([u.coeffs for u in sorted(U.elements)], dtype=np.int8)
    images = encode_index(convolve_many(everything, u_arr))  # (4^n, |U|)
    orbit_id = images.min(axis=1)
    reps = np.unique(orbit_id)
    rows = np.sort(images[reps], axis=1)
    sizes = 1 + (np.diff(rows, axis=1) != 0).sum(axis=1)
    masks = _gray_masks(n)[rows]
    dist = _popcount16()[masks[:, :, None] ^ masks[:, None, :]]
    dist[dist == 0] = np.iinfo(np.int16).max  # equal words are repeats, not pairs
    dmin = dist.min(axis=(1, 2))
    best: dict[tuple[int, int], SearchHit] = {}
    for rep, m, d in zip(reps.tolist(), sizes.tolist(), dmin.tolist()):
        if m < 2 or d < min_d or (m, d) in best:
            continue
        f = GroupRingElement(decode_index(rep, n).tolist())
        best[(m, d)] = SearchHit(n, f, U.generators, (2 * n, m, d))
    return list(best.values())


def _scan_task(args):
    n, U, min_d = args
    return _orbit_parameters(n, U, min_d)


def coset_parameter_scan(
    n: int,
    min_d: int,
    max_subgroup_order: int = 64,
    max_generators: int = 4,
    threads: int = 1,
    max_subgroups: int | None = None,
) -> list[SearchHit]:
    """Binary parameters (2n, M, d) of Gray images of codes f * U with d >= min_d.

    Subgroups are generated by up to ``max_generators`` elements of
    :func:`scan_pool`; hits are deduplicated by parameters and the one with
    the smallest subgroup (then smallest f) is kept.
    """
    if n > 7:
        raise ValueError("the parameter scan supports n <= 7")
    subgroups = enumerate_scan_subgroups(n, max_generators, max_subgroup_order)
    partial = None
    if max_subgroups is not None and len(subgroups) > max_subgroups:
        partial = subgroups[max_subgroups:]
        subgroups = subgroups[:max_subgroups]
    tasks = [(n, U, min_d) for U in subgroups]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_task, tasks, chunksize=4))
    else:
        results = [_scan_task(t) for t in tasks]
    best: dict[tuple[int, int, int], SearchHit] = {}
    for hits in results:
        for hit in hits:
            hit = _recompute(hit)
            if hit.params not in best:
                best[hit.params] = hit
    out = sorted(best.values(), key=lambda h: (h.params[2], h.params[1]), reverse=True)
    if partial:
        raise BudgetExceeded(f"scanned {len(subgroups)} subgroups, {len(partial)} left", out)
    return out


def _recompute(hit: SearchHit) -> SearchHit:
    """Rebuild the code from f and the generators and recompute its parameters."""
    U = generate_subgroup(hit.generators) if hit.generators else generate_subgroup([], n=hit.n)
    code = Code.from_words([(hit.representative * u).coeffs for u in U.elements]).gray()
    from .codes.core import min_distance

    params = (code.n, code.size, min_distance(code))
    return SearchHit(hit.n, hit.representative, hit.generators, params)
