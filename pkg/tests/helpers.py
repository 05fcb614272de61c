"""Shared test oracles: brute-force enumerators and an independent
Fraction-arithmetic route for spans of polynomial coefficient vectors."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb

from arrideals.arrangement import Arrangement, canonical_normal
from arrideals.building import is_building_set, is_decomposition
from arrideals.graded import Polynomial, monomial_index, monomials
from arrideals.lattice import IntersectionLattice
from arrideals.linalg import Subspace, span


# --- set partitions -------------------------------------------------------

def set_partitions(n):
    """All partitions of range(n), blocks and block lists sorted."""
    if n == 0:
        yield ()
        return

    def rec(i, blocks):
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    for p in rec(0, []):
        yield tuple(sorted(p))


def bell_numbers(top):
    """Bell numbers 0..top by the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(top):
        nxt = [row[-1]]
        for a in row:
            nxt.append(nxt[-1] + a)
        out.append(nxt[0])
        row = nxt
    return out


def braid_pair_index(n):
    """Hyperplane index of each pair (i, j), i < j, in braid order."""
    idx = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            idx[(i, j)] = k
            k += 1
    return idx


def partition_closed_set(partition, pair_index):
    """Closed set of the braid flat of a partition: all co-blocked pairs."""
    out = []
    for block in partition:
        for a, b in combinations(block, 2):
            out.append(pair_index[(a, b)])
    return tuple(sorted(out))


def is_modular_partition(partition):
    """Exactly one block of size greater than one."""
    return sum(1 for b in partition if len(b) > 1) == 1


# --- random corpus --------------------------------------------------------

def corpus_arrangements():
    """20 seeded random central arrangements: dim <= 4, <= 6 hyperplanes,
    multiplicities <= 3.  Deterministic across runs."""
    out = []
    for seed in range(20):
        rng = random.Random(1000 + seed)
        dim = rng.randint(2, 4)
        count = rng.randint(3, 6)
        normals = []
        seen = set()
        while len(normals) < count:
            v = tuple(rng.randint(-2, 2) for _ in range(dim))
            if not any(v):
                continue
            c = canonical_normal(v)
            if c in seen:
                continue
            seen.add(c)
            normals.append(v)
        mults = [rng.randint(1, 3) for _ in range(count)]
        out.append(Arrangement.from_normals(dim, normals, mults))
    return out


# --- definitional brute force for decompositions --------------------------

def brute_force_decompositions(lat: IntersectionLattice, target):
    """Every part-set passing is_decomposition, by exhaustive search.

    Candidates are subsets of the flats containing the target whose
    codimensions add up and whose normal spaces sum to the target's (checked
    on the Fraction side, independently of the integer kernel inside
    is_decomposition).
    """
    dim = lat.arrangement.dim
    tset = set(target.closed_set)
    ups = [U for U in lat.proper if set(U.closed_set) <= tset]
    found = []
    for k in range(1, target.rank + 1):
        for parts in combinations(ups, k):
            if sum(U.rank for U in parts) != target.rank:
                continue
            rows = [r for U in parts for r in U.normal_space.basis.entries]
            if span(rows, dim) != target.normal_space:
                continue
            if is_decomposition(lat, target, list(parts)):
                found.append(tuple(parts))
    return found


def all_building_sets(lat: IntersectionLattice):
    """Every building set, by testing all 2^|L'| subsets.  Small lattices only."""
    proper = lat.proper
    assert len(proper) <= 12, "meant for tiny lattices"
    out = []
    for bits in range(1, 1 << len(proper)):
        subset = [proper[i] for i in range(len(proper)) if bits >> i & 1]
        if is_building_set(lat, subset):
            out.append(tuple(subset))
    return out


# --- independent graded pieces via Fraction spans --------------------------

def coefficient_vector(poly: Polynomial, degree: int):
    """Degree-`degree` coefficient vector of a homogeneous polynomial."""
    idx = monomial_index(poly.nvars, degree)
    vec = [Fraction(0)] * len(idx)
    for mono, coef in poly.terms:
        assert sum(mono) == degree
        vec[idx[mono]] = coef
    return vec


def span_of_polynomials(polys, nvars: int, degree: int) -> Subspace:
    rows = [coefficient_vector(p, degree) for p in polys]
    return span(rows, comb(nvars + degree - 1, degree))


def principal_power_piece(form: Polynomial, power: int, degree: int) -> Subspace:
    """Degree-`degree` piece of (form^power), by explicit multiplication."""
    n = form.nvars
    width = comb(n + degree - 1, degree)
    if power == 0:
        return span(
            [[Fraction(1 if i == j else 0) for i in range(width)] for j in range(width)],
            width,
        )
    if degree < power:  # the form is linear, so the power starts in degree `power`
        return span([], width)
    fk = form
    for _ in range(power - 1):
        fk = fk * form
    prods = []
    for mono in monomials(n, degree - power):
        m = Polynomial.from_terms(n, {mono: Fraction(1)})
        prods.append(fk * m)
    return span_of_polynomials(prods, n, degree)
