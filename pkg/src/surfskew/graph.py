"""Simple undirected graphs, the named families, and basic invariants.

Vertices are the integers ``0 .. p-1`` and edges are stored as sorted
pairs ``(u, v)`` with ``u < v``. Family generators fix the vertex numbering
so that constructions and certificates are reproducible byte for byte:

* ``Q_d`` and ``F_d``: vertex index is the integer value of the coordinate vector.
* ``K_{a,b}``: part A is ``0 .. a-1``, part B is ``a .. a+b-1``.
* ``O_r``: ``K_{2r}`` minus the matching ``{i, i+r}``.
* ``c(n, k)``: vertex ``i`` is joined to ``i ± 1`` and ``i ± k`` mod ``n``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import ParameterError, ParseError

Edge = tuple[int, int]

_ARITY = {
    "complete": 1,
    "complete-bipartite": 2,
    "cube": 1,
    "folded-cube": 1,
    "octahedron": 1,
    "cycle": 1,
    "path": 1,
}


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its integer parameters.

    ``kind`` is one of ``complete``, ``complete-bipartite``, ``cube``,
    ``folded-cube``, ``octahedron``, ``circulant``, ``cycle``, ``path``.
    For ``circulant`` the parameters are ``(n, j1, j2, ...)``.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind == "circulant":
            if len(self.params) < 2:
                raise ParameterError("circulant needs n and at least one jump")
        elif self.kind in _ARITY:
            if len(self.params) != _ARITY[self.kind]:
                raise ParameterError(
                    f"{self.kind} takes {_ARITY[self.kind]} parameter(s), got {len(self.params)}"
                )
        else:
            raise ParameterError(f"unknown family {self.kind!r}")

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.params)])

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse the text form, e.g. ``"cube 5"`` or ``"circulant 12 1 3"``."""
        parts = text.split()
        if not parts:
            raise ParameterError("empty family spec")
        try:
            params = tuple(int(x) for x in parts[1:])
        except ValueError as exc:
            raise ParameterError(f"bad family parameters in {text!r}") from exc
        return cls(parts[0], params)


# Shorthand constructors.
def Complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def CompleteBipartite(a: int, b: int) -> FamilySpec:
    return FamilySpec("complete-bipartite", (a, b))


def Cube(d: int) -> FamilySpec:
    return FamilySpec("cube", (d,))


def FoldedCube(d: int) -> FamilySpec:
    return FamilySpec("folded-cube", (d,))


def Octahedron(r: int) -> FamilySpec:
    return FamilySpec("octahedron", (r,))


def Circulant(n: int, jumps: Iterable[int]) -> FamilySpec:
    return FamilySpec("circulant", (n, *jumps))


def Cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def Path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0 .. p-1``."""

    p: int
    edges: tuple[Edge, ...]
    family: FamilySpec | None = field(default=None, compare=False)

    @classmethod
    def from_edges(
        cls, p: int, edges: Iterable[tuple[int, int]], family: FamilySpec | None = None
    ) -> "Graph":
        """Validate and canonicalize an edge list."""
        if p < 0:
            raise ParameterError("negative vertex count")
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise ParameterError(f"edge ({u}, {v}) out of range for p={p}")
            e = norm_edge(u, v)
            if e in seen:
                raise ParameterError(f"duplicate edge {e}")
            seen.add(e)
        return cls(p, tuple(sorted(seen)), family)

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.p)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(n)) for n in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_set

    @cached_property
    def _girth(self) -> int | float:
        return _girth(self)

    @cached_property
    def _components(self) -> tuple[tuple[int, ...], ...]:
        return _components(self)

    @cached_property
    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """Two-colouring with vertex 0's side first, or None if not bipartite.

        Each component is coloured from its smallest vertex, which reproduces
        the family conventions (part A of ``K_{a,b}``, even parity in cubes).
        """
        colour = [-1] * self.p
        for s in range(self.p):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if colour[w] < 0:
                        colour[w] = 1 - colour[u]
                        queue.append(w)
                    elif colour[w] == colour[u]:
                        return None
        return (
            frozenset(v for v in range(self.p) if colour[v] == 0),
            frozenset(v for v in range(self.p) if colour[v] == 1),
        )

    def without(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        """``G - E'``; every removed edge must be present."""
        drop = {norm_edge(u, v) for u, v in removed}
        missing = drop - self.edge_set
        if missing:
            raise ParameterError(f"edges not in graph: {sorted(missing)}")
        return Graph(self.p, tuple(e for e in self.edges if e not in drop))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Rename vertex ``v`` to ``perm[v]``."""
        return Graph.from_edges(self.p, ((perm[u], perm[v]) for u, v in self.edges))


def generate(spec: FamilySpec) -> Graph:
    """Build the named graph with the canonical numbering."""
    kind, ps = spec.kind, spec.params
    if any(x <= 0 for x in ps) and kind != "cube":
        raise ParameterError(f"parameters must be positive: {spec}")
    if kind == "complete":
        (n,) = ps
        edges = itertools.combinations(range(n), 2)
        p = n
    elif kind == "complete-bipartite":
        a, b = ps
        edges = ((i, a + j) for i in range(a) for j in range(b))
        p = a + b
    elif kind == "cube":
        (d,) = ps
        if d < 0:
            raise ParameterError("cube dimension must be >= 0")
        p = 1 << d
        edges = ((v, v ^ (1 << i)) for v in range(p) for i in range(d) if not v >> i & 1)
    elif kind == "folded-cube":
        (d,) = ps
        if d < 2:
            raise ParameterError("folded cube needs d >= 2")
        p = 1 << d
        full = p - 1
        cube = [(v, v ^ (1 << i)) for v in range(p) for i in range(d) if not v >> i & 1]
        edges = cube + [(v, v ^ full) for v in range(p >> 1)]
    elif kind == "octahedron":
        (r,) = ps
        p = 2 * r
        edges = ((i, j) for i, j in itertools.combinations(range(p), 2) if j - i != r)
    elif kind == "circulant":
        n, jumps = ps[0], ps[1:]
        if len(set(jumps)) != len(jumps):
            raise ParameterError("circulant jumps must be distinct")
        if any(not 1 <= j <= n // 2 for j in jumps) or n < 3:
            raise ParameterError(f"circulant jumps must lie in [1, n/2]: {spec}")
        p = n
        edges = {norm_edge(i, (i + j) % n) for i in range(n) for j in jumps}
    elif kind == "cycle":
        (n,) = ps
        if n < 3:
            raise ParameterError("cycle needs n >= 3")
        p = n
        edges = ((i, (i + 1) % n) for i in range(n))
    elif kind == "path":
        (n,) = ps
        p = n
        edges = ((i, i + 1) for i in range(n - 1))
    else:  # pragma: no cover - FamilySpec validates kinds
        raise ParameterError(f"unknown family {kind!r}")
    return Graph.from_edges(p, edges, spec)


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    return g._girth


def _girth(g: Graph) -> int | float:
    best = math.inf
    for s in range(g.p):
        dist = [-1] * g.p
        parent = [-1] * g.p
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    return [list(c) for c in g._components]


def _components(g: Graph) -> tuple[tuple[int, ...], ...]:
    seen = [False] * g.p
    out = []
    for s in range(g.p):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    return len(g._components) <= 1


def cycle_rank(g: Graph) -> int:
    return g.q - g.p + len(components(g))


def is_forest(g: Graph) -> bool:
    return cycle_rank(g) == 0


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.p} {g.q}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    if g.family is not None:
        lines.append(f"# family {g.family}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the ``p q`` / edge-list format.

    Comment lines start with ``#``; a ``# family <spec>`` comment restores
    the family tag.
    """
    family = None
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            rest = line[1:].split(None, 1)
            if len(rest) == 2 and rest[0] == "family":
                try:
                    family = FamilySpec.parse(rest[1])
                except ParameterError as exc:
                    raise ParseError(str(exc), lineno) from exc
            continue
        body.append((lineno, line))
    if not body:
        raise ParseError("missing header line")
    header_no, header = body[0]
    p, q = _ints(header, 2, header_no)
    if p < 0 or q < 0:
        raise ParseError("negative counts in header", header_no)
    if len(body) - 1 != q:
        raise ParseError(f"header promises {q} edges, found {len(body) - 1}", header_no)
    seen: set[Edge] = set()
    for lineno, line in body[1:]:
        u, v = _ints(line, 2, lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if not (0 <= u < p and 0 <= v < p):
            raise ParseError(f"vertex out of range in edge {u} {v}", lineno)
        e = norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
    return Graph(p, tuple(sorted(seen)), family)


def _ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(x) for x in parts]
    except ValueError as exc:
        raise ParseError(f"non-integer token in {line!r}", lineno) from exc
