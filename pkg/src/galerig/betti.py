"""Bigraded Betti numbers of odd-gon Gale diagrams, Tor-algebra comparison,
and the sphere-product decomposition of the associated moment-angle manifold.

For an n-polytope with m = n+3 facets the whole table is determined by its
first row: beta^{-1,2j} counts length-k windows of the weight vector summing
to j, the extreme corners are 1, and the remaining row follows by the duality
beta^{-i,2j} = beta^{-(m-n)+i,2(m-j)}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .gale import GaleDiagram, _validated_weights


def window_sums(weights: Sequence[int]) -> tuple[int, ...]:
    """Cyclic sums of k consecutive weights, k = (len-1)//2, one per start."""
    w = _validated_weights(weights)
    nv = len(w)
    k = (nv - 1) // 2
    return tuple(sum(w[(i + t) % nv] for t in range(k)) for i in range(nv))


def adjacent_sum_multiset(weights: Sequence[int]) -> tuple[int, ...]:
    """The window sums as a sorted multiset."""
    return tuple(sorted(window_sums(weights)))


@dataclass
class BettiTable:
    """Sparse table of bigraded Betti numbers beta^{-i,2j}, keyed (i, 2j)."""

    m: int
    n: int
    entries: dict = field(default_factory=dict)

    def get(self, i: int, twoj: int) -> int:
        return self.entries.get((i, twoj), 0)

    def items(self):
        return sorted(self.entries.items())

    def row_sum(self, i: int) -> int:
        return sum(b for (ii, _), b in self.entries.items() if ii == i)

    def to_json(self) -> dict:
        return {"entries": [{"i": i, "2j": twoj, "beta": b}
                            for (i, twoj), b in self.items()]}


def beta_first_row(diagram: GaleDiagram) -> dict[int, int]:
    """beta^{-1,2j} as a map j -> count of length-k windows summing to j."""
    counts = Counter(window_sums(diagram.weights))
    return dict(sorted(counts.items()))


def betti_table(diagram: GaleDiagram) -> BettiTable:
    m, n = diagram.m, diagram.n
    entries = {(0, 0): 1, (m - n, 2 * m): 1}
    first = beta_first_row(diagram)
    for j, b in first.items():
        entries[(1, 2 * j)] = b
    for j, b in first.items():
        entries[(2, 2 * (m - j))] = b
    return BettiTable(m=m, n=n, entries=entries)


def tor_equivalent(w1: Sequence[int], w2: Sequence[int]) -> bool:
    """Whether two pentagon weight vectors have isomorphic Tor-algebras,
    decided by comparing adjacent-sum multisets."""
    a, b = tuple(w1), tuple(w2)
    if len(a) != 5 or len(b) != 5:
        raise ValueError("Tor comparison is defined for pentagon weight vectors only")
    return adjacent_sum_multiset(a) == adjacent_sum_multiset(b)


def _homology_ranks(table: BettiTable) -> Counter:
    """Additive ranks of the moment-angle manifold by total degree 2j - i."""
    ranks: Counter = Counter()
    for (i, twoj), b in table.entries.items():
        ranks[twoj - i] += b
    return ranks


def sphere_product_decomposition(diagram: GaleDiagram) -> tuple[tuple[int, int], ...]:
    """Sphere dimension pairs of the connected-sum summands of the
    moment-angle manifold, one per minimal non-face.

    A non-face of size s contributes the pair (2s-1, m+n-2s+1), normalized so
    p <= q.  The multiset is validated against the additive ranks of the
    Betti table before being returned.
    """
    m, n = diagram.m, diagram.n
    total = m + n
    pairs = []
    for s in window_sums(diagram.weights):
        p = 2 * s - 1
        q = total - p
        pairs.append((min(p, q), max(p, q)))
    pairs.sort()

    expected = Counter({0: 1, total: 1})
    for p, q in pairs:
        expected[p] += 1
        expected[q] += 1
    actual = _homology_ranks(betti_table(diagram))
    if expected != actual:
        raise RuntimeError(
            "sphere-product decomposition disagrees with the additive Betti ranks: "
            f"{dict(expected)} vs {dict(actual)}"
        )
    return tuple(pairs)


def supports_quasitoric(k: int) -> bool:
    """Whether a polytope from a (2k+1)-gon diagram supports a quasitoric
    manifold: exactly when k <= 3."""
    if k < 2:
        raise ValueError("odd-gon diagrams need k >= 2")
    return k <= 3
