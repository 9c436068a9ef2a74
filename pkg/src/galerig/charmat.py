"""Mod-2 characteristic matrices over a face structure.

A valid matrix assigns a nonzero vector in GF(2)^n to each facet so that the
columns over every vertex of the polytope are linearly independent; the first
n columns are normalized to the identity.  Columns are stored as ints with
bit r-1 carrying row r, so the candidate order "increasing as binary numbers
with the low index in the top row" is plain integer order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gale import FaceStructure


def _independent(vectors: Iterable[int]) -> bool:
    """Linear independence of bit-packed GF(2) vectors (greedy reduction)."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v == 0:
            return False
        basis.append(v)
    return True


@dataclass(frozen=True)
class CharMatrixZ2:
    """n x m GF(2) matrix with identity prefix, stored column-wise."""

    n: int
    m: int
    columns: tuple[int, ...]

    def __post_init__(self):
        if len(self.columns) != self.m:
            raise ValueError("column count does not match m")
        if any(c <= 0 or c >> self.n for c in self.columns):
            raise ValueError("columns must be nonzero vectors in GF(2)^n")
        if any(self.columns[i] != 1 << i for i in range(self.n)):
            raise ValueError("the first n columns must form the identity")

    @classmethod
    def from_block(cls, n: int, block: Sequence[int]) -> "CharMatrixZ2":
        columns = tuple(1 << i for i in range(n)) + tuple(block)
        return cls(n=n, m=n + len(block), columns=columns)

    @property
    def block(self) -> tuple[int, ...]:
        return self.columns[self.n:]

    def row_strings(self) -> list[str]:
        return ["".join(str((c >> r) & 1) for c in self.columns)
                for r in range(self.n)]

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "rows": self.row_strings()}

    @classmethod
    def from_json(cls, data: dict) -> "CharMatrixZ2":
        rows = data["rows"]
        n, m = len(rows), len(rows[0])
        columns = tuple(sum(int(rows[r][c]) << r for r in range(n)) for c in range(m))
        mat = cls(n=n, m=m, columns=columns)
        if mat.n != data["n"] or mat.m != data["m"]:
            raise ValueError("stored shape does not match the rows")
        return mat


def block_row_strings(block: Sequence[int], n: int) -> list[str]:
    """Rows of a completion block as bit strings, leftmost = column n+1."""
    return ["".join(str((c >> r) & 1) for c in block) for r in range(n)]


def block_from_row_strings(rows: Sequence[str]) -> tuple[int, ...]:
    n, width = len(rows), len(rows[0])
    return tuple(sum(int(rows[r][c]) << r for r in range(n)) for c in range(width))


def is_characteristic(matrix: CharMatrixZ2, fs: FaceStructure) -> bool:
    """Whether every vertex of the polytope has independent facet columns.

    Subsets of independent sets stay independent, so checking the maximal
    faces suffices.
    """
    if matrix.n != fs.n or matrix.m != fs.m:
        raise ValueError("matrix shape does not match the face structure")
    cols = matrix.columns
    return all(_independent([cols[i - 1] for i in face]) for face in fs.maximal_faces)


def enumerate_charmats(fs: FaceStructure) -> list[tuple[int, ...]]:
    """All completion blocks (columns n+1..m) of identity-prefix
    characteristic matrices over the face structure.

    Backtracks column by column over GF(2)^n \\ {0}, pruning as soon as a
    vertex fully contained in the assigned prefix has dependent columns.
    Output is sorted by the block's bit pattern (ascending column tuples).
    """
    n, m = fs.n, fs.m
    if frozenset(range(1, n + 1)) not in set(fs.maximal_faces):
        raise ValueError("facet order is not normalized: leading facets must form a vertex")
    faces_by_top: dict[int, list[list[int]]] = {c: [] for c in range(n + 1, m + 1)}
    for face in fs.maximal_faces:
        top = max(face)
        if top > n:
            faces_by_top[top].append(sorted(face))

    blocks: list[tuple[int, ...]] = []
    cols: dict[int, int] = {i: 1 << (i - 1) for i in range(1, n + 1)}

    def assign(c: int):
        if c > m:
            blocks.append(tuple(cols[i] for i in range(n + 1, m + 1)))
            return
        for v in range(1, 1 << n):
            cols[c] = v
            if all(_independent([cols[i] for i in face]) for face in faces_by_top[c]):
                assign(c + 1)
        del cols[c]

    assign(n + 1)
    return blocks


def apply_automorphism(fs: FaceStructure, block: Sequence[int],
                       perm: Sequence[int]) -> tuple[int, ...]:
    """Relabel the facets of a characteristic matrix by a face-structure
    automorphism and restore the identity prefix.

    perm[i-1] is the image of facet i; the new column j is the old column
    perm[j-1].  The leading n new columns come from a vertex, hence are
    invertible, and left multiplication by their inverse restores the
    identity prefix.  Returns the resulting block.
    """
    n, m = fs.n, fs.m
    old = tuple(1 << i for i in range(n)) + tuple(block)
    cols = [old[perm[j] - 1] for j in range(m)]
    # Gauss-Jordan on rows (ints over m columns) to make columns 0..n-1 identity.
    rows = [sum(((cols[j] >> r) & 1) << j for j in range(m)) for r in range(n)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if (rows[r] >> c) & 1), None)
        if pivot is None:
            raise ValueError("permutation does not map the leading facets to a vertex")
        rows[c], rows[pivot] = rows[pivot], rows[c]
        for r in range(n):
            if r != c and (rows[r] >> c) & 1:
                rows[r] ^= rows[c]
    return tuple(sum(((rows[r] >> j) & 1) << r for r in range(n))
                 for j in range(n, m))
