"""Enumeration of nonnegative integer edge weightings with prescribed vertex sums.

Given a multidegree s on the vertices, a decomposition is a vector c of
nonnegative integers on the edges with sum(c_e * column_e) = s, i.e. every
vertex x sees total weight s_x on its incident edges.  These are exactly the
monomials of multidegree s in the edge subring, and their supports generate
the degree complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence, Union

from .graph import Graph

DEFAULT_MAX_FIBER = 10**6


class FiberOverflowError(RuntimeError):
    """The fiber holds more decompositions than the configured cap."""

    def __init__(self, limit: int):
        super().__init__(
            f"fiber overflow: more than {limit} decompositions; raise the cap to proceed"
        )
        self.limit = limit


@dataclass(frozen=True)
class Decomposition:
    """One edge weighting; coefficients are aligned with the graph's edge order."""

    coefficients: tuple[int, ...]

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coefficients) if c)

    @classmethod
    def for_graph(
        cls, g: Graph, coefficients: Sequence[int], target: Sequence[int]
    ) -> "Decomposition":
        """Construct with the defining identity checked entrywise."""
        coefficients = tuple(coefficients)
        if len(coefficients) != len(g.edges):
            raise ValueError("coefficient vector length must match the edge count")
        if any(c < 0 for c in coefficients):
            raise ValueError("coefficients must be nonnegative")
        if tuple(decomposition_degree(g, coefficients)) != tuple(target):
            raise ValueError("coefficients do not decompose the target multidegree")
        return cls(coefficients)


def decomposition_degree(g: Graph, coefficients: Sequence[int]) -> tuple[int, ...]:
    """Vertex sums of an edge weighting: the multidegree it decomposes."""
    s = [0] * len(g.vertices)
    for (iu, iv), c in zip(g.edge_indices, coefficients):
        s[iu] += c
        s[iv] += c
    return tuple(s)


def degree_vector(g: Graph, degrees: Union[Mapping[str, int], Sequence[int]]) -> tuple[int, ...]:
    """Normalize a multidegree to a tuple aligned with g.vertices.

    Mappings may omit vertices (treated as 0); unknown labels are an error.
    """
    if isinstance(degrees, Mapping):
        for lab in degrees:
            if lab not in g.index:
                raise ValueError(f"unknown vertex {lab!r} in multidegree")
        return tuple(int(degrees.get(v, 0)) for v in g.vertices)
    vec = tuple(int(x) for x in degrees)
    if len(vec) != len(g.vertices):
        raise ValueError(
            f"multidegree has {len(vec)} entries for {len(g.vertices)} vertices"
        )
    return vec


def _search(
    g: Graph,
    s: Sequence[int],
    max_size: int,
    first_only: bool,
    order: str,
):
    n, m = len(g.vertices), len(g.edges)
    s = tuple(s)
    if len(s) != n:
        raise ValueError(f"multidegree has {len(s)} entries for {n} vertices")
    if any(x < 0 for x in s) or sum(s) % 2 == 1:
        return []
    if order == "input":
        perm = list(range(m))
    elif order == "greedy":
        # tight vertices first: edges whose endpoints allow few weights
        perm = sorted(
            range(m),
            key=lambda e: (min(s[g.edge_indices[e][0]], s[g.edge_indices[e][1]]), e),
        )
    else:
        raise ValueError(f"unknown order {order!r}")

    # last processing step that can still change each vertex's residual
    last_touch = [-1] * n
    for step, e in enumerate(perm):
        iu, iv = g.edge_indices[e]
        last_touch[iu] = step
        last_touch[iv] = step
    if any(s[v] > 0 and last_touch[v] < 0 for v in range(n)):
        return []
    finished_at: list[list[int]] = [[] for _ in range(m)]
    for v in range(n):
        if last_touch[v] >= 0:
            finished_at[last_touch[v]].append(v)

    residual = list(s)
    coeffs = [0] * m
    out: list[Decomposition] = []

    def dfs(step: int) -> bool:
        if step == m:
            if first_only:
                return True
            if len(out) >= max_size:
                raise FiberOverflowError(max_size)
            out.append(Decomposition(tuple(coeffs)))
            return False
        e = perm[step]
        iu, iv = g.edge_indices[e]
        cmax = min(residual[iu], residual[iv])
        done = finished_at[step]
        for c in range(cmax + 1):
            residual[iu] -= c
            residual[iv] -= c
            if all(residual[v] == 0 for v in done):
                coeffs[e] = c
                if dfs(step + 1):
                    return True
                coeffs[e] = 0
            residual[iu] += c
            residual[iv] += c
        return False

    if m == 0:
        if all(x == 0 for x in s):
            out.append(Decomposition(()))
        return out if not first_only else bool(out)
    found = dfs(0)
    if first_only:
        return found
    out.sort(key=lambda d: d.coefficients)
    return out


def enumerate_fiber(
    g: Graph,
    s: Sequence[int],
    *,
    max_size: int = DEFAULT_MAX_FIBER,
    order: str = "input",
) -> list[Decomposition]:
    """All decompositions of s, sorted lexicographically by coefficient vector.

    Empty when s is not in the edge semigroup (including any negative entry
    or odd total).  Raises FiberOverflowError past max_size solutions.
    """
    return _search(g, s, max_size, first_only=False, order=order)


def in_semigroup(g: Graph, s: Sequence[int]) -> bool:
    """Whether s admits at least one decomposition (short-circuiting search)."""
    res = _search(g, s, max_size=1, first_only=True, order="input")
    return bool(res)
