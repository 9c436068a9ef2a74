"""Exact linear algebra over GF(2) on bit-packed rows, plus graded monomial
bookkeeping for polynomials with coefficients in the two-element field.

Conventions:
    * A row (or coordinate vector) is a Python int used as a bit vector;
      bit ``c`` is column ``c``.
    * A polynomial is a frozenset of exponent tuples: a monomial belongs to
      the set iff its coefficient is 1.
    * Monomials of a fixed degree are ordered graded-lexicographically with
      the first variable largest (x > y > z); the column index of a monomial
      is its position in that ordering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

Monomial = tuple[int, ...]
Poly = frozenset


# ---------------------------------------------------------------------------
# bit-packed row reduction


def _rref_rows(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of bit-packed rows.

    Returns (pivots, reduced_rows) with pivot columns strictly increasing and
    zero rows dropped.  Every pivot column is cleared in all other rows, so a
    vector is reduced by a single ascending pass over the pivots.
    """
    basis: dict[int, int] = {}
    for row in rows:
        for p in sorted(basis):
            if (row >> p) & 1:
                row ^= basis[p]
        if row:
            p = (row & -row).bit_length() - 1
            for q in basis:
                if (basis[q] >> p) & 1:
                    basis[q] ^= row
            basis[p] = row
    pivots = sorted(basis)
    return pivots, [basis[p] for p in pivots]


def reduce_vector(vec: int, pivots: Iterable[int], rows: Iterable[int]) -> int:
    """Reduce a bit vector against an echelon basis (pivots ascending)."""
    for p, r in zip(pivots, rows):
        if (vec >> p) & 1:
            vec ^= r
    return vec


@dataclass(frozen=True)
class BitMatrix:
    """Dense GF(2) matrix stored as one int per row (bit c = column c)."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match storage")
        if any(r < 0 or r >> self.ncols for r in self.rows):
            raise ValueError("row has bits outside the declared column range")

    @classmethod
    def from_dense(cls, entries: Iterable[Iterable[int]]) -> "BitMatrix":
        packed = []
        width = 0
        for row in entries:
            row = list(row)
            width = max(width, len(row))
            packed.append(sum((int(v) & 1) << c for c, v in enumerate(row)))
        return cls(len(packed), width, tuple(packed))

    def to_dense(self) -> list[list[int]]:
        return [[(r >> c) & 1 for c in range(self.ncols)] for r in self.rows]


def rref(matrix: BitMatrix) -> tuple[int, BitMatrix]:
    """Reduced row echelon form over GF(2).

    Returns (rank, reduced matrix).  The reduced matrix keeps the input shape
    (zero rows pad the bottom), so the operation is involutive.
    """
    _, reduced = _rref_rows(matrix.rows)
    rank = len(reduced)
    padded = tuple(reduced) + (0,) * (matrix.nrows - rank)
    return rank, BitMatrix(matrix.nrows, matrix.ncols, padded)


def rank(matrix: BitMatrix) -> int:
    return rref(matrix)[0]


# ---------------------------------------------------------------------------
# graded monomial bookkeeping


def monomial_count(nvars: int, degree: int) -> int:
    """Number of degree-d monomials in v variables: C(d+v-1, v-1)."""
    if nvars < 1 or degree < 0:
        raise ValueError("need nvars >= 1 and degree >= 0")
    return comb(degree + nvars - 1, nvars - 1)


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """All degree-d exponent tuples in graded-lex order, first variable largest."""
    if nvars < 1 or degree < 0:
        raise ValueError("need nvars >= 1 and degree >= 0")
    if nvars == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_index(nvars: int, degree: int) -> dict:
    return {m: i for i, m in enumerate(monomials(nvars, degree))}


# ---------------------------------------------------------------------------
# polynomial arithmetic


def poly(monos: Iterable[Monomial]) -> Poly:
    """Build a polynomial from monomials, cancelling pairs (coefficients mod 2)."""
    acc: set = set()
    for m in monos:
        acc ^= {tuple(m)}
    return frozenset(acc)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p ^ q


def poly_multiply(p: Poly, q: Poly) -> Poly:
    """Product over GF(2); monomials appearing an even number of times cancel."""
    acc: set = set()
    for a in p:
        for b in q:
            acc ^= {tuple(x + y for x, y in zip(a, b))}
    return frozenset(acc)


def poly_shift(p: Poly, mono: Monomial) -> Poly:
    """Multiply by a single monomial."""
    return frozenset(tuple(x + y for x, y in zip(a, mono)) for a in p)


def homogeneous_degree(p: Poly) -> int:
    """Degree of a nonzero homogeneous polynomial; error otherwise."""
    degrees = {sum(m) for m in p}
    if len(degrees) != 1:
        raise ValueError(f"polynomial is not homogeneous: {sorted(degrees)}")
    return degrees.pop()


@lru_cache(maxsize=None)
def _monomial_image(mono: Monomial, images: tuple, nvars_out: int) -> Poly:
    acc: Poly = frozenset({(0,) * nvars_out})
    for var, exp in enumerate(mono):
        for _ in range(exp):
            acc = poly_multiply(acc, images[var])
    return acc


def substitute_linear(p: Poly, images: Iterable[Poly], nvars_out: int | None = None) -> Poly:
    """Substitute a linear form for each variable.

    Args:
        p: polynomial in v variables.
        images: one linear form per variable, written in the target variables
            (the zero form is allowed and kills monomials using that variable).
        nvars_out: arity of the target ring; inferred from the images when
            any of them is nonzero.

    Returns:
        The substituted polynomial.  Homogeneous input of degree d maps to a
        homogeneous polynomial of degree d (or to zero).
    """
    images = tuple(frozenset(img) for img in images)
    for img in images:
        for m in img:
            if sum(m) != 1:
                raise ValueError("every substitution image must be linear")
    if nvars_out is None:
        arities = {len(m) for img in images for m in img}
        if len(arities) != 1:
            raise ValueError("cannot infer target arity; pass nvars_out")
        nvars_out = arities.pop()
    acc: set = set()
    for mono in p:
        if len(mono) != len(images):
            raise ValueError("image list does not cover every variable")
        acc ^= _monomial_image(mono, images, nvars_out)
    return frozenset(acc)


def poly_to_vec(p: Poly, nvars: int, degree: int) -> int:
    """Coordinate bit vector of a homogeneous polynomial in the degree basis."""
    index = _monomial_index(nvars, degree)
    vec = 0
    for m in p:
        vec |= 1 << index[m]
    return vec


def vec_to_poly(vec: int, nvars: int, degree: int) -> Poly:
    basis = monomials(nvars, degree)
    return frozenset(basis[c] for c in range(vec.bit_length()) if (vec >> c) & 1)


def _mono_sort_key(m: Monomial):
    return (sum(m), m)


def poly_to_lists(p: Poly) -> list[list[int]]:
    """Serialize as exponent vectors, highest degree first, then lex descending."""
    return [list(m) for m in sorted(p, key=_mono_sort_key, reverse=True)]


def poly_from_lists(rows: Iterable[Iterable[int]]) -> Poly:
    return poly(tuple(int(e) for e in row) for row in rows)


# ---------------------------------------------------------------------------
# text form ("x^3y+yz^3"; juxtaposition is product, {} around exponents allowed)

_FACTOR = re.compile(r"([A-Za-z])(?:\^(\d+|\{\d+\}))?")


def parse_poly(text: str, varnames: str = "xyz") -> Poly:
    """Parse the compact text notation used by the reference tables.

    Raises ValueError on anything that is not a well-formed sum of monomials,
    e.g. a non-numeric exponent.
    """
    s = text.replace(" ", "").replace("$", "")
    if not s:
        raise ValueError("empty polynomial text")
    index = {v: i for i, v in enumerate(varnames)}
    acc: set = set()
    for term in s.split("+"):
        if not term:
            raise ValueError(f"empty term in {text!r}")
        exps = [0] * len(varnames)
        pos = 0
        while pos < len(term):
            m = _FACTOR.match(term, pos)
            if not m:
                raise ValueError(f"cannot parse {term!r} at position {pos}")
            var = m.group(1)
            if var not in index:
                raise ValueError(f"unknown variable {var!r} in {term!r}")
            raw = m.group(2)
            exps[index[var]] += int(raw.strip("{}")) if raw else 1
            pos = m.end()
        acc ^= {tuple(exps)}
    return frozenset(acc)


def format_poly(p: Poly, varnames: str = "xyz") -> str:
    if not p:
        return "0"
    terms = []
    for m in sorted(p, key=_mono_sort_key, reverse=True):
        if not any(m):
            terms.append("1")
            continue
        parts = []
        for var, exp in zip(varnames, m):
            if exp == 1:
                parts.append(var)
            elif exp > 1:
                parts.append(f"{var}^{exp}")
        terms.append("".join(parts))
    return "+".join(terms)


# ---------------------------------------------------------------------------
# graded subspaces


@dataclass(frozen=True)
class GradedSubspace:
    """Per-degree reduced echelon bases of a graded subspace of GF(2)[v_1..v_n].

    ``components[d]`` is a pair (pivots, rows) over the degree-d monomial
    basis; rows are in reduced echelon form, so equal subspaces have equal
    components.
    """

    nvars: int
    components: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @classmethod
    def from_spans(cls, nvars: int, spans: Iterable[Iterable[Poly]]) -> "GradedSubspace":
        """Build from per-degree spanning polynomials (index = degree)."""
        comps = []
        for degree, polys in enumerate(spans):
            vecs = [poly_to_vec(p, nvars, degree) for p in polys if p]
            pivots, rows = _rref_rows(vecs)
            comps.append((tuple(pivots), tuple(rows)))
        return cls(nvars, tuple(comps))

    @property
    def max_degree(self) -> int:
        return len(self.components) - 1

    def _component(self, degree: int):
        if degree < 0 or degree > self.max_degree:
            raise ValueError(f"degree {degree} outside the stored range 0..{self.max_degree}")
        return self.components[degree]

    def dimension(self, degree: int) -> int:
        return len(self._component(degree)[1])

    def rows(self, degree: int) -> tuple[int, ...]:
        return self._component(degree)[1]

    def reduce(self, degree: int, vec: int) -> int:
        pivots, rows = self._component(degree)
        return reduce_vector(vec, pivots, rows)

    def contains_vec(self, degree: int, vec: int) -> bool:
        return self.reduce(degree, vec) == 0

    def contains(self, p: Poly) -> bool:
        if not p:
            return True
        degree = homogeneous_degree(p)
        return self.contains_vec(degree, poly_to_vec(p, self.nvars, degree))


def subspace_equal(s1: GradedSubspace, s2: GradedSubspace) -> bool:
    """Equal dimensions and mutual containment in every stored degree."""
    if s1.nvars != s2.nvars or s1.max_degree != s2.max_degree:
        return False
    for d in range(s1.max_degree + 1):
        if s1.dimension(d) != s2.dimension(d):
            return False
        if any(not s2.contains_vec(d, row) for row in s1.rows(d)):
            return False
        if any(not s1.contains_vec(d, row) for row in s2.rows(d)):
            return False
    return True
