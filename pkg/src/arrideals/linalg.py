"""Exact linear algebra over the rationals.

A subspace of Q^n is represented by the reduced row echelon basis of its
row space.  RREF is a canonical form, so two subspaces are equal exactly
when their bases agree entrywise; this equality is what the rest of the
package uses to deduplicate flats and to certify ideal identities.  No
operation here ever touches floating point.

There is a second, fraction-free layer (the ``int_*`` functions) that does
the same row-space arithmetic on primitive integer vectors.  It exists
purely for speed: big intersection lattices and graded ideal pieces involve
millions of row operations, and Fraction normalisation would dominate.
The integer layer is still exact arbitrary-precision arithmetic, and
``int_canonical`` rows are just RREF rows rescaled to primitive integers,
so both layers agree on which subspace is which.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def to_fraction(x) -> Fraction:
    """Exact conversion; floats are refused rather than laundered."""
    if isinstance(x, float):
        raise TypeError(f"floating point value {x!r} not allowed; use Fraction or int")
    return Fraction(x)


@dataclass(frozen=True)
class QMatrix:
    """Immutable rectangular matrix with Fraction entries."""

    entries: tuple[tuple[Fraction, ...], ...]
    cols: int

    def __post_init__(self) -> None:
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "QMatrix":
        ent = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if cols is None:
            if not ent:
                raise ValueError("empty matrix needs an explicit column count")
            cols = len(ent[0])
        return cls(ent, cols)


@dataclass(frozen=True)
class Subspace:
    """Row space of a matrix, stored as its canonical RREF basis.

    Invariants: basis rows are nonzero, pivots strictly increase, every
    pivot entry is 1 and every pivot column is zero elsewhere.  They are
    checked at construction, so a Subspace can only hold a genuine RREF.
    """

    ambient_dim: int
    basis: QMatrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_dim:
            raise ValueError("basis width differs from ambient dimension")
        last = -1
        for row in self.basis.entries:
            p = _first_nonzero(row)
            if p is None or p <= last:
                raise ValueError("basis is not in reduced row echelon form")
            if row[p] != 1:
                raise ValueError("pivot entry is not 1")
            for other in self.basis.entries:
                if other is not row and other[p] != 0:
                    raise ValueError("pivot column is not clear")
            last = p

    @property
    def rank(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_first_nonzero(row) for row in self.basis.entries)


def _first_nonzero(row: Sequence) -> int | None:
    for i, a in enumerate(row):
        if a:
            return i
    return None


def rref(m: QMatrix) -> Subspace:
    """Canonical RREF of the row space of ``m``.

    Row-equivalent matrices give entrywise-equal results; the empty matrix
    gives the rank-0 subspace.
    """
    basis: list[list[Fraction]] = []  # fully reduced, pivots ascending
    pivots: list[int] = []
    for row in m.entries:
        v = list(row)
        for r, p in zip(basis, pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, r)]
        p = _first_nonzero(v)
        if p is None:
            continue
        inv = v[p]
        v = [a / inv for a in v]
        for r in basis:
            c = r[p]
            if c:
                r[:] = [a - c * b for a, b in zip(r, v)]
        k = 0
        while k < len(pivots) and pivots[k] < p:
            k += 1
        basis.insert(k, v)
        pivots.insert(k, p)
    return Subspace(m.cols, QMatrix(tuple(tuple(r) for r in basis), m.cols))


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    """Subspace spanned by the given vectors."""
    return rref(QMatrix.from_rows(vectors, ambient_dim))


def span_contains(s: Subspace, v: Sequence) -> bool:
    """Whether ``v`` is a rational combination of the basis rows."""
    if len(v) != s.ambient_dim:
        raise ValueError(
            f"vector has length {len(v)}, ambient dimension is {s.ambient_dim}"
        )
    w = [to_fraction(x) for x in v]
    for row, p in zip(s.basis.entries, s.pivots):
        c = w[p]
        if c:
            w = [a - c * b for a, b in zip(w, row)]
    return all(a == 0 for a in w)


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    """Sum of two subspaces (RREF of the stacked bases)."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return rref(QMatrix(a.basis.entries + b.basis.entries, a.ambient_dim))


def span_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two subspaces via the Zassenhaus block trick.

    Row reduce [A|A ; B|0]: the RREF rows whose left half vanishes carry
    the intersection in their right halves, and those right halves are
    already in RREF.
    """
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    n = a.ambient_dim
    zero = (Fraction(0),) * n
    stacked = [row + row for row in a.basis.entries]
    stacked += [row + zero for row in b.basis.entries]
    reduced = rref(QMatrix(tuple(stacked), 2 * n))
    rows = [
        row[n:]
        for row, p in zip(reduced.basis.entries, reduced.pivots)
        if p >= n
    ]
    return Subspace(n, QMatrix(tuple(rows), n))


# ---------------------------------------------------------------------------
# Fraction-free integer layer.
#
# An "echelon list" is a pair (rows, pivots) of parallel lists kept in
# insertion order: every row was reduced against all earlier rows before
# being appended, so it is zero at all earlier pivots.  Reducing a vector
# against the rows *in stored order* is therefore sound.  Rows are primitive
# integer vectors with positive pivot entry.

_STRIP_LIMIT = 1 << 96


def primitive_vector(values: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational to primitive integers."""
    fr = [to_fraction(x) for x in values]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * den) for f in fr]
    g = 0
    for a in ints:
        g = gcd(g, a)
        if g == 1:
            break
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints)


def _strip(v: list[int]) -> None:
    g = 0
    for a in v:
        g = gcd(g, a)
        if g == 1:
            return
    if g > 1:
        for i, a in enumerate(v):
            v[i] = a // g


def int_reduce(vec: Sequence[int], rows: Sequence[Sequence[int]],
               pivots: Sequence[int]) -> list[int]:
    """Fraction-free reduction of ``vec`` against an echelon list."""
    v = list(vec)
    grown = 0
    for row, p in zip(rows, pivots):
        c = v[p]
        if not c:
            continue
        pv = row[p]
        if pv == 1:
            v = [a - c * b for a, b in zip(v, row)]
        else:
            v = [pv * a - c * b for a, b in zip(v, row)]
            grown += 1
            if not grown & 7 and max(map(abs, v)) > _STRIP_LIMIT:
                _strip(v)
    return v


def int_contains(rows: Sequence[Sequence[int]], pivots: Sequence[int],
                 vec: Sequence[int]) -> bool:
    return not any(int_reduce(vec, rows, pivots))


def int_insert(rows: list, pivots: list, vec: Sequence[int]) -> bool:
    """Append ``vec`` to an echelon list; False if it was already spanned."""
    v = int_reduce(vec, rows, pivots)
    p = _first_nonzero(v)
    if p is None:
        return False
    if v[p] < 0:
        v = [-a for a in v]
    _strip(v)
    rows.append(tuple(v))
    pivots.append(p)
    return True


def int_span(vectors: Iterable[Sequence[int]], width: int) -> tuple[list, list]:
    rows: list = []
    pivots: list = []
    for v in vectors:
        if len(v) != width:
            raise ValueError("vector width mismatch")
        int_insert(rows, pivots, v)
    return rows, pivots


def int_canonical(rows: Sequence[Sequence[int]],
                  pivots: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Canonical form of an echelon list: primitive-integer-scaled RREF.

    Unique for the row space, hence usable as a dictionary key.
    """
    order = sorted(range(len(rows)), key=lambda i: pivots[i])
    rs = [list(rows[i]) for i in order]
    ps = [pivots[i] for i in order]
    for i, p in enumerate(ps):
        if rs[i][p] < 0:
            rs[i] = [-a for a in rs[i]]
    for i in range(len(rs) - 1, 0, -1):
        p = ps[i]
        pv = rs[i][p]
        for j in range(i):
            c = rs[j][p]
            if c:
                rs[j] = [pv * a - c * b for a, b in zip(rs[j], rs[i])]
                _strip(rs[j])
    for r in rs:
        _strip(r)  # inputs need not be primitive; no-op when they are
    return tuple(tuple(r) for r in rs)


def int_intersect(a_rows: Sequence[Sequence[int]], b_rows: Sequence[Sequence[int]],
                  width: int) -> tuple[tuple[int, ...], ...]:
    """Canonical basis of the intersection of two integer row spaces."""
    rows: list = []
    pivots: list = []
    zero = (0,) * width
    for r in a_rows:
        int_insert(rows, pivots, tuple(r) + tuple(r))
    for r in b_rows:
        int_insert(rows, pivots, tuple(r) + zero)
    inner = []
    inner_pivots = []
    for row, p in zip(rows, pivots):
        if p >= width:
            inner.append(row[width:])
            inner_pivots.append(p - width)
    return int_canonical(inner, inner_pivots)


def subspace_from_int_rows(rows: Sequence[Sequence[int]], width: int) -> Subspace:
    """Convert canonical integer rows (see ``int_canonical``) to a Subspace."""
    out = []
    for row in rows:
        p = _first_nonzero(row)
        pv = row[p]
        out.append(tuple(Fraction(a, pv) for a in row))
    return Subspace(width, QMatrix(tuple(out), width))
