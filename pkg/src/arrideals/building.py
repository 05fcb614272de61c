"""Decompositions of flats, irreducibility, and building sets.

A set of proper flats {U_1, ..., U_k} decomposes a proper flat C when
C = U_1 ∩ ... ∩ U_k transversally (codimensions add up) and, for every
proper flat B containing C, each subspace sum B + U_i is again a flat and
B = (B + U_1) ∩ ... ∩ (B + U_k), again transversally.  On normal spaces a
flat intersection is a span sum and a subspace sum is a span intersection,
so everything below is row-space arithmetic.

A subset G of the proper flats is a building set when for every proper
flat C the minimal elements of G containing C decompose C.  The
irreducible flats (those with no non-trivial decomposition) always form
one, and it is contained in every other.  Irreducibility is decided by
connectivity of the linear matroid on the flat's closed set: the
components' closures are exactly the finest decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import InvariantError
from .lattice import Flat, IntersectionLattice, flat_sort_key, minimal_containing
from .linalg import int_canonical, int_contains, int_insert, int_intersect


@dataclass(frozen=True)
class BuildingSet:
    """A verified-by-construction family of proper flats."""

    flats: tuple[Flat, ...]
    kind: str  # "minimal", "full" or "custom"

    def __post_init__(self) -> None:
        if self.kind not in ("minimal", "full", "custom"):
            raise ValueError(f"unknown building set kind {self.kind!r}")

    def __len__(self) -> int:
        return len(self.flats)


@dataclass(frozen=True)
class Decomposition:
    """A flat together with parts presenting it as a transversal intersection."""

    target: Flat
    parts: tuple[Flat, ...]


def _require_proper_flat(lat: IntersectionLattice, flat: Flat, what: str) -> None:
    if flat.rank == 0:
        raise ValueError(f"{what} must not be the ambient space")
    if lat.flat_with_closed(flat.closed_set) != flat:
        raise ValueError(f"{what} is not a flat of this lattice")


def _first_nonzero(row: Sequence[int]) -> int:
    return next(i for i, a in enumerate(row) if a)


def _closed_of_rows(normals, rows) -> tuple[int, ...]:
    pivots = [_first_nonzero(r) for r in rows]
    return tuple(j for j, nj in enumerate(normals) if int_contains(rows, pivots, nj))


def _is_lattice_span(lat: IntersectionLattice, rows) -> bool:
    """Whether canonical rows are the normal space of some flat (V included)."""
    if not rows:
        return True  # the ambient space is always in the lattice
    closed = _closed_of_rows(lat.int_normals, rows)
    f = lat.flat_with_closed(closed)
    return f is not None and f.basis_rows == tuple(rows)


def _validate_parts(lat: IntersectionLattice, target: Flat,
                    parts: Sequence[Flat]) -> None:
    _require_proper_flat(lat, target, "target")
    if not parts:
        raise ValueError("parts must be non-empty")
    seen = set()
    for U in parts:
        _require_proper_flat(lat, U, "part")
        if U.closed_set in seen:
            raise ValueError("parts must be distinct")
        seen.add(U.closed_set)


def decomposition_obstruction(lat: IntersectionLattice, target: Flat,
                              parts: Sequence[Flat]) -> Flat | None:
    """First proper flat B ⊇ target violating the compatibility condition.

    For each such B (canonical order) the subspace sums B + U_i must all be
    flats, must intersect back to B, and their codimensions must add up to
    the codimension of B.  Returns None when every B passes.
    """
    _validate_parts(lat, target, parts)
    dim = lat.arrangement.dim
    tset = set(target.closed_set)
    for B in lat.proper:
        if not set(B.closed_set) <= tset:
            continue
        sums = [int_intersect(B.basis_rows, U.basis_rows, dim) for U in parts]
        if not _compatible(lat, B, sums):
            return B
    return None


def _compatible(lat: IntersectionLattice, B: Flat, sums) -> bool:
    if sum(len(s) for s in sums) != B.rank:
        return False
    rows: list = []
    pivots: list = []
    for s in sums:
        if not _is_lattice_span(lat, s):
            return False
        for r in s:
            int_insert(rows, pivots, r)
    return int_canonical(rows, pivots) == B.basis_rows


def is_decomposition(lat: IntersectionLattice, target: Flat,
                     parts: Sequence[Flat]) -> bool:
    """Whether ``parts`` is a decomposition of ``target``."""
    _validate_parts(lat, target, parts)
    # transversal intersection: normal spaces sum to the target's, ranks add
    if sum(U.rank for U in parts) != target.rank:
        return False
    rows: list = []
    pivots: list = []
    for U in parts:
        for r in U.basis_rows:
            int_insert(rows, pivots, r)
    if int_canonical(rows, pivots) != target.basis_rows:
        return False
    return decomposition_obstruction(lat, target, parts) is None


def _matroid_components(normals, closed: Sequence[int]) -> list[tuple[int, ...]]:
    """Connected components of the linear matroid on the chosen normals.

    Elements are merged along fundamental circuits: each dependent normal is
    reduced against the running echelon basis while tracking an exact integer
    combination over the original elements; the support of a vanished
    combination is a circuit.
    """
    parent = {j: j for j in closed}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rows: list = []
    pivots: list = []
    combos: list[dict[int, int]] = []
    for j in closed:
        v = list(normals[j])
        combo = {j: 1}
        for row, p, rc in zip(rows, pivots, combos):
            c = v[p]
            if not c:
                continue
            pv = row[p]
            v = [pv * a - c * b for a, b in zip(v, row)]
            combo = {
                k: coef
                for k in combo.keys() | rc.keys()
                if (coef := pv * combo.get(k, 0) - c * rc.get(k, 0))
            }
        p = next((i for i, a in enumerate(v) if a), None)
        if p is None:
            root = find(j)
            for k in combo:
                parent[find(k)] = root
        else:
            g = 0
            for a in v:
                g = gcd(g, a)
            for a in combo.values():
                g = gcd(g, a)
            if g > 1:
                v = [a // g for a in v]
                combo = {k: a // g for k, a in combo.items()}
            rows.append(tuple(v))
            pivots.append(p)
            combos.append(combo)

    groups: dict[int, list[int]] = {}
    for j in closed:
        groups.setdefault(find(j), []).append(j)
    return sorted(tuple(sorted(g)) for g in groups.values())


def is_irreducible(lat: IntersectionLattice, flat: Flat) -> bool:
    """Whether the flat admits only the trivial decomposition."""
    if flat.rank == 0:
        raise ValueError("the ambient space is not in the proper lattice")
    if flat.rank == 1:
        return True
    if len(flat.closed_set) == flat.rank:
        return False  # independent normals split into single hyperplanes
    return len(_matroid_components(lat.int_normals, flat.closed_set)) == 1


def irreducible_decomposition(lat: IntersectionLattice, flat: Flat) -> list[Flat]:
    """The unique finest decomposition of ``flat`` into irreducible flats.

    Returns ``[flat]`` exactly when the flat is irreducible.
    """
    _require_proper_flat(lat, flat, "flat")
    comps = _matroid_components(lat.int_normals, flat.closed_set)
    if len(comps) == 1:
        return [flat]
    parts = []
    for comp in comps:
        f = lat.flat_with_closed(comp)
        if f is None:
            raise InvariantError(
                f"matroid component {comp} is not a closed set of the lattice"
            )
        parts.append(f)
    parts.sort(key=flat_sort_key)
    return parts


def minimal_building_set(lat: IntersectionLattice) -> BuildingSet:
    """All irreducible proper flats, in canonical order."""
    return BuildingSet(
        tuple(f for f in lat.proper if is_irreducible(lat, f)), "minimal"
    )


def full_building_set(lat: IntersectionLattice) -> BuildingSet:
    """The whole proper lattice as a building set."""
    return BuildingSet(lat.proper, "full")


def custom_building_set(lat: IntersectionLattice, flats: Sequence[Flat]) -> BuildingSet:
    """Wrap a user-chosen family after verifying the building property."""
    seen = set()
    for f in flats:
        _require_proper_flat(lat, f, "flat")
        if f.closed_set in seen:
            raise ValueError("building set flats must be distinct")
        seen.add(f.closed_set)
    ordered = tuple(sorted(flats, key=flat_sort_key))
    bad = building_set_obstruction(lat, ordered)
    if bad is not None:
        raise ValueError(
            f"not a building set: fails at flat with closed set {bad.closed_set}"
        )
    return BuildingSet(ordered, "custom")


def building_set_obstruction(lat: IntersectionLattice,
                             flats: Sequence[Flat]) -> Flat | None:
    """First proper flat whose minimal covers in ``flats`` fail to decompose it."""
    for C in lat.proper:
        parts = minimal_containing(lat, flats, C)
        if not parts or not is_decomposition(lat, C, parts):
            return C
    return None


def is_building_set(lat: IntersectionLattice, flats: Sequence[Flat]) -> bool:
    """Whether every proper flat is decomposed by its minimal covers in ``flats``."""
    seen = set()
    for f in flats:
        _require_proper_flat(lat, f, "flat")
        if f.closed_set in seen:
            raise ValueError("building set flats must be distinct")
        seen.add(f.closed_set)
    return building_set_obstruction(lat, flats) is None
