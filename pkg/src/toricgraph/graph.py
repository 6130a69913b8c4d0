"""Finite simple graphs with labeled vertices, parsing, and incidence data.

A graph is the combinatorial substrate for the edge subring k[G]: vertices
carry the multigrading, edges index the ring generators x_u * x_v.  Vertex
and edge order is the declaration order of the input and is preserved
everywhere; all downstream enumeration orders derive from it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from . import linalg


class GraphFormatError(ValueError):
    """Raised for malformed graph input; the message carries the location."""


def _check_label(label: object, where: str) -> str:
    if not isinstance(label, str) or not label:
        raise GraphFormatError(f"{where}: vertex label must be a non-empty string, got {label!r}")
    return label


@dataclass(frozen=True)
class Graph:
    """An ordered simple graph.

    `vertices` is the ordered label tuple; `edges` is the ordered tuple of
    endpoint pairs as given on input.  Loops and repeated edges are rejected.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))
        seen: set[str] = set()
        for i, v in enumerate(self.vertices):
            _check_label(v, f"vertices[{i}]")
            if v in seen:
                raise GraphFormatError(f"vertices[{i}]: duplicate vertex {v!r}")
            seen.add(v)
        edge_keys: set[frozenset[str]] = set()
        for i, (u, v) in enumerate(self.edges):
            for lab in (u, v):
                if lab not in seen:
                    raise GraphFormatError(f"edges[{i}]: unknown vertex {lab!r}")
            if u == v:
                raise GraphFormatError(f"edges[{i}]: loop at {u!r} is not allowed")
            key = frozenset((u, v))
            if key in edge_keys:
                raise GraphFormatError(f"edges[{i}]: duplicate edge {u!r}--{v!r}")
            edge_keys.add(key)

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[str, str]], vertices: Optional[Iterable[str]] = None
    ) -> "Graph":
        """Build a graph from edge pairs; vertices default to first-appearance order."""
        edges = tuple((u, v) for u, v in edges)
        if vertices is None:
            ordered: list[str] = []
            seen: set[str] = set()
            for u, v in edges:
                for lab in (u, v):
                    if lab not in seen:
                        seen.add(lab)
                        ordered.append(lab)
            vertices = ordered
        return cls(tuple(vertices), edges)

    # -- basic lookups ---------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_indices(self) -> tuple[tuple[int, int], ...]:
        """Edges as (position, position) pairs, in edge order."""
        idx = self.index
        return tuple((idx[u], idx[v]) for u, v in self.edges)

    @cached_property
    def _adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        for iu, iv in self.edge_indices:
            adj[iu].add(iv)
            adj[iv].add(iu)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def _edge_lookup(self) -> dict[frozenset[int], int]:
        return {frozenset(pair): e for e, pair in enumerate(self.edge_indices)}

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbors of `v` in vertex order."""
        i = self.index[v]
        return tuple(self.vertices[j] for j in sorted(self._adjacency[i]))

    def degree(self, v: str) -> int:
        return len(self._adjacency[self.index[v]])

    def has_edge(self, u: str, v: str) -> bool:
        try:
            key = frozenset((self.index[u], self.index[v]))
        except KeyError as exc:
            raise GraphFormatError(f"unknown vertex {exc.args[0]!r}") from None
        return key in self._edge_lookup

    def edge_position(self, u: str, v: str) -> int:
        """Index of the edge {u, v} in edge order (orientation-insensitive)."""
        key = frozenset((self.index[u], self.index[v]))
        e = self._edge_lookup.get(key)
        if e is None:
            raise GraphFormatError(f"no edge {u!r}--{v!r} in graph")
        return e

    # -- incidence data ---------------------------------------------------

    def incidence_column(self, edge: tuple[str, str]) -> tuple[int, ...]:
        """The exponent vector of the generator x_u * x_v: two ones, rest zero."""
        e = self.edge_position(*edge)
        iu, iv = self.edge_indices[e]
        col = [0] * len(self.vertices)
        col[iu] = 1
        col[iv] = 1
        return tuple(col)

    def incidence_columns(self) -> list[tuple[int, ...]]:
        return [self.incidence_column(e) for e in self.edges]


def incidence_rank(g: Graph) -> int:
    """Rank of the vertex-by-edge incidence matrix over the rationals.

    This equals the Krull dimension of k[G]: n minus the number of bipartite
    connected components.
    """
    cols = [{iu: 1, iv: 1} for iu, iv in g.edge_indices]
    return linalg.rank(cols, len(g.vertices))


def connected_components(g: Graph) -> list[tuple[str, ...]]:
    """Vertex sets of the connected components.

    Components are ordered by their smallest vertex index; vertices inside a
    component come out in vertex order.
    """
    n = len(g.vertices)
    seen = [False] * n
    comps: list[tuple[str, ...]] = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for w in g._adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(g.vertices[i] for i in sorted(members)))
    return comps


def is_bipartite(g: Graph) -> list[bool]:
    """Two-colorability of each connected component, aligned with connected_components."""
    n = len(g.vertices)
    color: list[Optional[int]] = [None] * n
    out: list[bool] = []
    for comp in connected_components(g):
        ok = True
        start = g.index[comp[0]]
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g._adjacency[v]:
                if color[w] is None:
                    color[w] = 1 - color[v]  # type: ignore[operator]
                    queue.append(w)
                elif color[w] == color[v]:
                    ok = False
        out.append(ok)
    return out


def induced_subgraph(g: Graph, vertices: Iterable[str]) -> Graph:
    """The subgraph induced on `vertices`, keeping g's vertex and edge order."""
    chosen = set()
    for v in vertices:
        if v not in g.index:
            raise GraphFormatError(f"unknown vertex {v!r}")
        chosen.add(v)
    kept_v = tuple(v for v in g.vertices if v in chosen)
    kept_e = tuple((u, v) for u, v in g.edges if u in chosen and v in chosen)
    return Graph(kept_v, kept_e)


def recognize_complete_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Return (u, v) with u <= v if the connected graph g is complete bipartite.

    A single vertex counts as K_{1,0}-like and returns None (no edges to
    grade); a single edge is K_{1,1}.  Raises on disconnected input.
    """
    comps = connected_components(g)
    if len(comps) != 1:
        raise ValueError("recognize_complete_bipartite expects a connected graph")
    if not g.edges:
        return None
    if not all(is_bipartite(g)):
        return None
    # 2-color, then check every cross pair is an edge.
    n = len(g.vertices)
    color = [-1] * n
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in g._adjacency[v]:
            if color[w] < 0:
                color[w] = 1 - color[v]
                queue.append(w)
    left = [i for i in range(n) if color[i] == 0]
    right = [i for i in range(n) if color[i] == 1]
    if len(g.edges) != len(left) * len(right):
        return None
    sizes = (len(left), len(right))
    return (min(sizes), max(sizes))


# -- parsing and serialization -------------------------------------------


def loads_graph(text: str) -> Graph:
    """Parse a graph from JSON or whitespace edge-list text (auto-detected)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_edgelist(text)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_graph(fh.read())


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"line {exc.lineno}, column {exc.colno}: invalid JSON ({exc.msg})") from None
    if not isinstance(obj, dict):
        raise GraphFormatError("top level: expected an object with 'vertices' and 'edges'")
    for key in ("vertices", "edges"):
        if key not in obj:
            raise GraphFormatError(f"top level: missing {key!r}")
        if not isinstance(obj[key], list):
            raise GraphFormatError(f"{key}: expected a list")
    vertices = [_check_label(v, f"vertices[{i}]") for i, v in enumerate(obj["vertices"])]
    edges: list[tuple[str, str]] = []
    for i, pair in enumerate(obj["edges"]):
        if not isinstance(pair, list) or len(pair) != 2:
            raise GraphFormatError(f"edges[{i}]: expected a pair [u, v]")
        u = _check_label(pair[0], f"edges[{i}][0]")
        v = _check_label(pair[1], f"edges[{i}][1]")
        edges.append((u, v))
    return Graph(tuple(vertices), tuple(edges))


def _parse_edgelist(text: str) -> Graph:
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    edge_keys: set[frozenset[str]] = set()

    def add_vertex(lab: str) -> None:
        if lab not in seen:
            seen.add(lab)
            vertices.append(lab)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            if parts[0] in seen:
                raise GraphFormatError(f"line {lineno}: vertex {parts[0]!r} declared twice")
            add_vertex(parts[0])
        elif len(parts) == 2:
            u, v = parts
            if u == v:
                raise GraphFormatError(f"line {lineno}: loop at {u!r} is not allowed")
            key = frozenset((u, v))
            if key in edge_keys:
                raise GraphFormatError(f"line {lineno}: duplicate edge {u!r}--{v!r}")
            edge_keys.add(key)
            add_vertex(u)
            add_vertex(v)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: expected 'u v' or a bare vertex, got {len(parts)} tokens")
    return Graph(tuple(vertices), tuple(edges))


def graph_to_json(g: Graph) -> str:
    """Serialize to the JSON input format (round-trips through loads_graph)."""
    payload = {"vertices": list(g.vertices), "edges": [[u, v] for u, v in g.edges]}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def graph_to_edgelist(g: Graph) -> str:
    """Serialize to edge-list text (round-trips through loads_graph exactly).

    Labels containing whitespace or '#' cannot be represented in this format.
    Vertex order matters downstream (multidegrees align to it), so when the
    first-appearance order implied by the edges differs from g.vertices --
    or any vertex is isolated -- every vertex is declared up front as a bare
    single-token line.
    """
    for v in g.vertices:
        if any(c.isspace() for c in v) or "#" in v:
            raise GraphFormatError(f"label {v!r} cannot be written in edge-list format")
    implied: list[str] = []
    seen: set[str] = set()
    for u, v in g.edges:
        for lab in (u, v):
            if lab not in seen:
                seen.add(lab)
                implied.append(lab)
    lines = [] if tuple(implied) == g.vertices else list(g.vertices)
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + ("\n" if lines else "")


# -- small constructors ----------------------------------------------------


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    es = tuple((vs[i], vs[(i + 1) % n]) for i in range(n))
    return Graph(vs, es)


def path_graph(n: int, prefix: str = "v") -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    vs = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    es = tuple((vs[i], vs[i + 1]) for i in range(n - 1))
    return Graph(vs, es)


def complete_bipartite_graph(u: int, v: int, left: str = "a", right: str = "b") -> Graph:
    if u < 1 or v < 1:
        raise ValueError("both sides must be non-empty")
    ls = tuple(f"{left}{i}" for i in range(1, u + 1))
    rs = tuple(f"{right}{j}" for j in range(1, v + 1))
    return Graph(ls + rs, tuple((a, b) for a in ls for b in rs))


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; label sets must already be disjoint."""
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for g in graphs:
        vertices.extend(g.vertices)
        edges.extend(g.edges)
    return Graph(tuple(vertices), tuple(edges))
