"""Simplicial complexes on a finite ordered ground set, and degree complexes.

The degree complex of a multidegree s collects the supports of all
decompositions of s into edge generators; its faces are the subsets of
those supports.  Two degenerate complexes matter and are kept distinct:

* the void complex (no faces at all) for s outside the semigroup, and
* the irrelevant complex {emptyset} for s = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .fiber import DEFAULT_MAX_FIBER, enumerate_fiber
from .graph import Graph


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet representation of a simplicial complex.

    `ground` is the ordered tuple of ground-set labels (for degree complexes
    these are the graph's edges); faces are stored as frozensets of positions
    into `ground`.  Facets are pairwise incomparable, deduplicated, and kept
    sorted by their sorted position tuple.
    """

    ground: tuple
    facets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        n = len(self.ground)
        for f in self.facets:
            for x in f:
                if not (0 <= x < n):
                    raise ValueError(f"facet element {x} outside ground set of size {n}")
        for a in self.facets:
            for b in self.facets:
                if a is not b and a <= b:
                    raise ValueError("facets must be pairwise incomparable")
        ordered = tuple(sorted(self.facets, key=lambda f: tuple(sorted(f))))
        object.__setattr__(self, "facets", ordered)

    @classmethod
    def from_faces(cls, ground: Sequence, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Normalize arbitrary generating faces: dedupe and drop non-maximal ones."""
        sets = {frozenset(f) for f in faces}
        maximal = [f for f in sets if not any(f < g for g in sets)]
        return cls(tuple(ground), tuple(maximal))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return len(self.facets) == 1 and not self.facets[0]

    @property
    def dim(self) -> int:
        """Top face dimension; -1 for the irrelevant complex, -2 for void."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def faces_of_dimension(self, d: int) -> list[tuple[int, ...]]:
        """All d-faces as sorted position tuples, in lexicographic order.

        d = -1 returns the empty face [()] for every non-void complex.
        """
        if d < -1:
            raise ValueError("face dimension must be at least -1")
        if self.is_void:
            return []
        if d == -1:
            return [()]
        found: set[tuple[int, ...]] = set()
        for facet in self.facets:
            if len(facet) >= d + 1:
                base = sorted(facet)
                for comb in combinations(base, d + 1):
                    found.add(comb)
        return sorted(found)

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension, from -1 up to dim (empty for void)."""
        return {
            d: len(self.faces_of_dimension(d)) for d in range(-1, self.dim + 1)
        }

    def has_face(self, face: Iterable[int]) -> bool:
        fs = frozenset(face)
        return any(fs <= facet for facet in self.facets)

    def common_vertex(self) -> Optional[int]:
        """A ground position lying in every facet, if one exists (a cone apex)."""
        if self.is_void:
            return None
        shared = set(self.facets[0])
        for f in self.facets[1:]:
            shared &= f
            if not shared:
                return None
        return min(shared) if shared else None

    def permuted(self, perm: Sequence[int]) -> "SimplicialComplex":
        """Relabel the ground set: old position i becomes perm[i]."""
        if sorted(perm) != list(range(len(self.ground))):
            raise ValueError("perm must be a permutation of the ground positions")
        new_ground: list = [None] * len(self.ground)
        for i, lab in enumerate(self.ground):
            new_ground[perm[i]] = lab
        new_facets = [frozenset(perm[x] for x in f) for f in self.facets]
        return SimplicialComplex(tuple(new_ground), tuple(new_facets))

    def facet_labels(self) -> list[list]:
        """Facets as lists of ground labels (positions mapped through `ground`)."""
        return [[self.ground[x] for x in sorted(f)] for f in self.facets]


def build_delta(
    g: Graph,
    s: Sequence[int],
    *,
    max_fiber: int = DEFAULT_MAX_FIBER,
) -> SimplicialComplex:
    """Degree complex of the multidegree s on the ground set of g's edges.

    Facets are the maximal supports of decompositions of s.  Returns the void
    complex when s has no decomposition, and the irrelevant complex at s = 0.
    """
    decomps = enumerate_fiber(g, s, max_size=max_fiber)
    return SimplicialComplex.from_faces(g.edges, (d.support for d in decomps))
