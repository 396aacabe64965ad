"""Exact brute-force oracles and certificate verifiers.

* :func:`is_planar` wraps the networkx planarity test and converts its
  embedding into a :class:`RotationSystem`.
* :func:`min_genus_exact` runs a seeded hill climb for an upper bound and
  then a branch and bound over rotation systems (compiled kernel when
  available).
* :func:`skewness_exact` and :func:`crossing_number_plane_exact` scan
  deletion sets / crossing sets in order of size, starting from the integer
  excess, with automorphism pruning.

Every search is sequential and deterministic: the same input gives the same
value and the same witness.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from dataclasses import dataclass, field
from math import factorial
from typing import Any, Sequence

import networkx as nx
import numpy as np

from . import kernels
from .constructions import DeletionCertificate
from .embedding import RotationSystem, euler_genus
from .errors import ParameterError, ParseError
from .formulas import excess, euler_genus_lower_bound
from .graph import (
    Edge,
    FamilySpec,
    Graph,
    components,
    generate,
    girth,
    is_connected,
    norm_edge,
    parse_graph,
)

DEFAULT_MAX_NODES = 50_000_000


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ParameterError(f"{name} must be an integer") from exc


@dataclass(frozen=True)
class Budget:
    """Search limits. ``max_nodes`` bounds tree nodes / subsets examined."""

    max_nodes: int = DEFAULT_MAX_NODES
    max_rotation_systems: int = 2_000_000
    wall_time_hint: float | None = None

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_rotation_systems <= 0:
            raise ParameterError("budget limits must be positive")

    @classmethod
    def from_env(cls) -> "Budget":
        return cls(max_nodes=_env_int("SURFSKEW_BUDGET_NODES", DEFAULT_MAX_NODES))


@dataclass(frozen=True)
class SearchOutcome:
    """``Exact(value)`` when ``lower == upper``, otherwise ``Bounds``."""

    lower: int | float
    upper: int | float
    reason: str = ""
    witness: Any = field(default=None, compare=False)

    def __post_init__(self):
        if self.lower > self.upper:
            raise ParameterError(f"bounds out of order: {self.lower} > {self.upper}")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"not exact: bounds [{self.lower}, {self.upper}]")
        return int(self.lower)

    def __str__(self) -> str:
        if self.exact:
            return f"Exact({self.value})"
        up = "inf" if self.upper == math.inf else str(self.upper)
        return f"Bounds({self.lower}, {up}, {self.reason})"


def Exact(value: int, witness: Any = None) -> SearchOutcome:
    return SearchOutcome(value, value, "", witness)


def Bounds(lower: int | float, upper: int | float, reason: str, witness: Any = None) -> SearchOutcome:
    return SearchOutcome(lower, upper, reason, witness)


# ---------------------------------------------------------------------------
# planarity


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges)
    return h


def _rotation_from_nx(embedding: nx.PlanarEmbedding, p: int) -> RotationSystem:
    return RotationSystem.from_lists(
        [list(embedding.neighbors_cw_order(v)) if v in embedding else [] for v in range(p)]
    )


def is_planar(g: Graph) -> tuple[bool, RotationSystem | None]:
    """Planarity with an embedding witness of genus 0."""
    ok, embedding = nx.check_planarity(_nx(g))
    if not ok:
        return False, None
    rs = _rotation_from_nx(embedding, g.p)
    if euler_genus(rs) != 0:  # pragma: no cover - would be a networkx bug
        raise AssertionError("planarity witness is not planar")
    return True, rs


# ---------------------------------------------------------------------------
# rotation search


class _Darts:
    """Integer dart tables for a graph: out-darts grouped by tail."""

    def __init__(self, g: Graph):
        self.g = g
        self.tail: list[int] = []
        self.head: list[int] = []
        self.out_offset = [0]
        self.index: dict[tuple[int, int], int] = {}
        for v in range(g.p):
            for w in g.adj[v]:
                self.index[(v, w)] = len(self.tail)
                self.tail.append(v)
                self.head.append(w)
            self.out_offset.append(len(self.tail))
        self.n = len(self.tail)
        self.rev = [self.index[(self.head[d], self.tail[d])] for d in range(self.n)]
        self.out_darts = list(range(self.n))

    def out(self, v: int) -> range:
        return range(self.out_offset[v], self.out_offset[v + 1])

    def rotation(self, succ: Sequence[int]) -> RotationSystem:
        rows = []
        for v in range(self.g.p):
            ds = list(self.out(v))
            if not ds:
                rows.append([])
                continue
            row, d = [], ds[0]
            for _ in ds:
                row.append(self.head[d])
                d = succ[d]
            rows.append(row)
        return RotationSystem.from_lists(rows)

    def succ_of(self, rs: RotationSystem) -> list[int]:
        succ = [0] * self.n
        for v in range(self.g.p):
            r = rs.rot[v]
            for i, w in enumerate(r):
                succ[self.index[(v, w)]] = self.index[(v, r[(i + 1) % len(r)])]
        return succ


def _bfs_order(g: Graph) -> list[int]:
    seen = [False] * g.p
    order = []
    for s in range(g.p):
        if seen[s] or not g.adj[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def hill_climb_faces(
    g: Graph, iterations: int = 4000, restarts: int = 4, seed: int = 0
) -> tuple[int, list[int]]:
    """Seeded local search for a rotation system with many faces."""
    t = _Darts(g)
    rng = random.Random(seed)
    best_f, best_succ = -1, []
    movable = [v for v in range(g.p) if len(g.adj[v]) >= 3]
    for _ in range(restarts):
        succ = [0] * t.n
        for v in range(g.p):
            ds = list(t.out(v))
            rng.shuffle(ds)
            for i, d in enumerate(ds):
                succ[d] = ds[(i + 1) % len(ds)]
        f = kernels.face_count(succ, t.rev)
        for _ in range(iterations if movable else 0):
            v = rng.choice(movable)
            ds = list(t.out(v))
            x, y = rng.sample(ds, 2)
            # move x to sit right after y
            if succ[y] == x:
                continue
            px = next(d for d in ds if succ[d] == x)
            old = (succ[px], succ[x], succ[y])
            succ[px] = succ[x]
            succ[x] = succ[y]
            succ[y] = x
            nf = kernels.face_count(succ, t.rev)
            if nf >= f:
                f = nf
            else:
                succ[px], succ[x], succ[y] = old
        if f > best_f:
            best_f, best_succ = f, list(succ)
    return best_f, best_succ


def _rotation_options(t: _Darts, order: list[int], halving: bool):
    """Cyclic orders per vertex as successor rows; the first vertex of
    degree >= 3 keeps one of each mirror pair."""
    starts, counts, flat = [], [], []
    halved = not halving
    for v in order:
        ds = list(t.out(v))
        starts.append(len(flat))
        n = 0
        for perm in itertools.permutations(ds[1:]):
            if not halved and len(ds) >= 3 and perm[0] > perm[-1]:
                continue
            cyc = (ds[0], *perm)
            nxt = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
            flat.extend(nxt[d] for d in ds)
            n += 1
        if len(ds) >= 3:
            halved = True
        counts.append(n)
    return starts, counts, flat


def rotation_count(g: Graph) -> int:
    """Number of rotation systems, ``prod (deg - 1)!``."""
    return math.prod(factorial(max(len(a) - 1, 0)) for a in g.adj)


def min_genus_exact(
    g: Graph,
    budget: Budget | None = None,
    *,
    halving: bool = True,
    heuristic: bool = True,
    seed: int = 0,
) -> SearchOutcome:
    """Minimum orientable genus of a connected graph.

    The lower bound is the Euler bound, raised to 1 for nonplanar graphs;
    the upper bound comes from a hill climb; the branch and bound closes the
    gap or reports ``Bounds`` when the node budget runs out. The witness is
    a rotation system of the upper-bound genus.
    """
    budget = budget or Budget()
    if not is_connected(g):
        raise ParameterError("min_genus_exact needs a connected graph")
    if g.q == 0:
        return Exact(0, RotationSystem(((),) * g.p))
    planar, rs = is_planar(g)
    if planar:
        return Exact(0, rs)
    lower = max(1, euler_genus_lower_bound(g))
    t = _Darts(g)

    def genus_of(faces: int) -> int:
        return (2 - g.p + g.q - faces) // 2

    target = g.q - g.p + 2 - 2 * lower
    best_f, best_succ = -1, [-1] * t.n
    if heuristic:
        best_f, best_succ = hill_climb_faces(g, seed=seed)
        if genus_of(best_f) == lower:
            return Exact(lower, t.rotation(best_succ))
    order = _bfs_order(g)
    starts, counts, flat = _rotation_options(t, order, halving)
    mindeg = min(len(a) for a in g.adj)
    gi = girth(g)
    L = int(gi) if mindeg >= 2 and gi != math.inf else 1
    found = list(best_succ)
    f, nodes, exhausted = kernels.bb_max_faces(
        order, starts, counts, flat, t.out_offset, t.out_darts, t.rev,
        L, best_f, target, budget.max_nodes, found,
    )
    if f > best_f:
        best_f, best_succ = f, found
    upper = genus_of(best_f) if best_f >= 0 else math.inf
    witness = t.rotation(best_succ) if best_f >= 0 else None
    if exhausted and upper != lower:
        return Bounds(lower, upper, "budget_exhausted", witness)
    return Exact(int(upper), witness)


def embeds_in(g: Graph, t: int, budget: Budget | None = None) -> bool | None:
    """Whether ``g`` embeds in the genus-``t`` surface; None if undecided.

    Components embed independently, so the test is ``sum of genera <= t``.
    """
    if t == 0:
        return is_planar(g)[0]
    total_lo = total_hi = 0
    for comp in components(g):
        if len(comp) < 5:
            continue
        sub = _induced(g, comp)
        if sub.q <= 3 * len(comp) - 6:
            if is_planar(sub)[0]:
                continue
        out = min_genus_exact(sub, budget)
        total_lo += out.lower
        total_hi += out.upper
        if total_lo > t:
            return False
    if total_hi <= t:
        return True
    return None


def _induced(g: Graph, verts: list[int]) -> Graph:
    idx = {v: i for i, v in enumerate(verts)}
    return Graph.from_edges(
        len(verts), ((idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx)
    )


# ---------------------------------------------------------------------------
# symmetry


def automorphisms(g: Graph, cap: int = 4096) -> list[tuple[int, ...]]:
    """Up to ``cap`` automorphisms (vertex permutations), identity first.

    Any subset of the group is safe for lex-min pruning: the least element
    of each orbit is never rejected.
    """
    gm = nx.algorithms.isomorphism.GraphMatcher(_nx(g), _nx(g))
    out = []
    for m in itertools.islice(gm.isomorphisms_iter(), cap):
        out.append(tuple(m[v] for v in range(g.p)))
    out.sort()
    return out


class _LexMin:
    """Reject index sets that are not lex-least under a permutation group."""

    def __init__(self, perms: np.ndarray):
        # drop the identity; it never rejects
        ident = np.arange(perms.shape[1]) if perms.size else None
        keep = [row for row in perms if ident is None or not np.array_equal(row, ident)]
        self.perms = np.array(keep, dtype=np.int32).reshape(len(keep), perms.shape[1] if perms.size else 0)

    def canonical(self, s: tuple[int, ...]) -> bool:
        if not len(self.perms) or not s:
            return True
        idx = np.fromiter(s, dtype=np.int32, count=len(s))
        imgs = np.sort(self.perms[:, idx], axis=1)
        diff = imgs - idx
        nz = diff != 0
        first = nz.argmax(axis=1)
        val = diff[np.arange(len(diff)), first]
        return not np.any(nz.any(axis=1) & (val < 0))


def _edge_perm_table(g: Graph, items: Sequence[Edge], autos) -> np.ndarray:
    pos = {e: i for i, e in enumerate(items)}
    return np.array(
        [[pos[norm_edge(a[u], a[v])] for u, v in items] for a in autos], dtype=np.int32
    ).reshape(len(autos), len(items))


# ---------------------------------------------------------------------------
# skewness


def _greedy_planar_deletions(g: Graph, restarts: int, seed: int) -> tuple[Edge, ...] | None:
    """Smallest deletion set found by greedy maximal planar subgraphs."""
    rng = random.Random(seed)
    best = None
    for r in range(restarts):
        edges = list(g.edges)
        if r:
            rng.shuffle(edges)
        h = nx.Graph()
        h.add_nodes_from(range(g.p))
        dropped = []
        for e in edges:
            h.add_edge(*e)
            if not nx.check_planarity(h)[0]:
                h.remove_edge(*e)
                dropped.append(e)
        if best is None or len(dropped) < len(best):
            best = tuple(sorted(dropped))
    return best


def skewness_exact(
    g: Graph,
    t: int = 0,
    budget: Budget | None = None,
    *,
    restarts: int = 24,
    seed: int = 0,
    symmetry_cap: int = 4096,
) -> SearchOutcome:
    """Least ``|E'|`` such that ``G - E'`` embeds in the genus-``t`` surface.

    ``k`` runs upward from the integer excess. For ``t = 0`` a greedy
    maximal-planar-subgraph pass supplies an upper bound first; when it
    already meets the excess no enumeration is needed. The witness is the
    deletion set.
    """
    budget = budget or Budget()
    if t < 0:
        raise ParameterError("t must be >= 0")
    lower = sum(excess(_induced(g, c), t).eps for c in components(g)) if g.p else 0
    if is_connected(g):
        lower = excess(g, t).eps
    upper, witness = math.inf, None
    if t == 0:
        witness = _greedy_planar_deletions(g, restarts, seed)
        upper = len(witness)
        if upper <= lower:
            return Exact(upper, witness)
    order = sorted(g.edges, key=lambda e: (-(len(g.adj[e[0]]) + len(g.adj[e[1]])), e))
    lex = _LexMin(_edge_perm_table(g, order, automorphisms(g, symmetry_cap)))
    h = _nx(g)
    nodes = 0
    k = lower
    while k < upper and k <= g.q:
        for combo in itertools.combinations(range(len(order)), k):
            nodes += 1
            if nodes > budget.max_nodes:
                return Bounds(k, upper, "budget_exhausted", witness)
            if not lex.canonical(combo):
                continue
            drop = [order[i] for i in combo]
            if t == 0:
                h.remove_edges_from(drop)
                ok = nx.check_planarity(h)[0]
                h.add_edges_from(drop)
            else:
                ok = embeds_in(g.without(drop), t, budget)
                if ok is None:
                    return Bounds(k, upper, "budget_exhausted", witness)
            if ok:
                return Exact(k, tuple(sorted(drop)))
        k += 1
    return Exact(int(upper), witness) if upper != math.inf else Bounds(lower, upper, "none")


# ---------------------------------------------------------------------------
# crossings


@dataclass(frozen=True)
class DrawingCertificate:
    """Crossing pairs plus the order of crossings along each crossed edge.

    ``orders[e]`` lists crossing indices from the smaller endpoint of ``e``
    to the larger.
    """

    graph: Graph
    crossings: tuple[tuple[Edge, Edge], ...]
    orders: dict[Edge, tuple[int, ...]] = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.crossings)


def _planarize_adj(p: int, edges: Sequence[Edge], crossings, orders) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(p + len(crossings))]
    for e in edges:
        chain = [e[0], *(p + c for c in orders.get(e, ())), e[1]]
        for a, b in zip(chain, chain[1:]):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def planarize(cert: DrawingCertificate) -> Graph:
    adj = _planarize_adj(cert.graph.p, cert.graph.edges, cert.crossings, cert.orders)
    return Graph.from_edges(len(adj), {norm_edge(u, v) for u in range(len(adj)) for v in adj[u]})


def _triangles(adj: list[set[int]]) -> int:
    masks = [sum(1 << w for w in a) for a in adj]
    total = 0
    for u, a in enumerate(adj):
        for v in a:
            if v > u:
                total += bin(masks[u] & masks[v]).count("1")
    return total // 3


def _adjacent(e: Edge, f: Edge) -> bool:
    return bool(set(e) & set(f))


def crossing_number_plane_exact(
    g: Graph,
    max_k: int = 6,
    budget: Budget | None = None,
    *,
    symmetry_cap: int = 4096,
) -> SearchOutcome:
    """Plane crossing number by planarizing candidate crossing sets.

    Crossing pairs are independent edge pairs, each used at most once; for
    every set all per-edge crossing orders are tried. A planarization must
    have at least ``2q' - 4p' + 8`` triangles (Euler with at most
    triangular savings), which filters most candidates before the planarity
    test. The witness is a :class:`DrawingCertificate`.
    """
    budget = budget or Budget()
    if not is_connected(g):
        raise ParameterError("crossing search needs a connected graph")
    planar, _ = is_planar(g)
    if planar:
        return Exact(0, DrawingCertificate(g, (), {}))
    lower = max(1, excess(g, 0).eps)
    edges = g.edges

    def potential(pr: tuple[Edge, Edge]) -> int:
        (u, v), (x, y) = pr
        return sum(g.has_edge(a, b) for a in (u, v) for b in (x, y))

    pairs = [pr for pr in itertools.combinations(edges, 2) if not _adjacent(*pr)]
    pairs.sort(key=lambda pr: (-potential(pr), pr))
    autos = automorphisms(g, symmetry_cap)
    pos = {pr: i for i, pr in enumerate(pairs)}
    table = np.array(
        [
            [pos[tuple(sorted((norm_edge(a[e[0]], a[e[1]]), norm_edge(a[f[0]], a[f[1]]))))] for e, f in pairs]
            for a in autos
        ],
        dtype=np.int32,
    ).reshape(len(autos), len(pairs))
    lex = _LexMin(table)
    nodes = 0
    for k in range(lower, max_k + 1):
        need = 2 * (g.q + 2 * k) - 4 * (g.p + k) + 8
        for combo in itertools.combinations(range(len(pairs)), k):
            nodes += 1
            if nodes > budget.max_nodes:
                return Bounds(k, math.inf, "budget_exhausted")
            if not lex.canonical(combo):
                continue
            chosen = [pairs[i] for i in combo]
            on_edge: dict[Edge, list[int]] = {}
            for ci, (e, f) in enumerate(chosen):
                on_edge.setdefault(e, []).append(ci)
                on_edge.setdefault(f, []).append(ci)
            multi = [e for e, cs in on_edge.items() if len(cs) > 1]
            base = {e: tuple(cs) for e, cs in on_edge.items()}
            for perms in itertools.product(*(itertools.permutations(on_edge[e]) for e in multi)):
                orders = dict(base)
                orders.update(zip(multi, perms))
                adj = _planarize_adj(g.p, edges, chosen, orders)
                if _triangles(adj) < need:
                    continue
                h = nx.Graph()
                h.add_nodes_from(range(len(adj)))
                h.add_edges_from((u, v) for u in range(len(adj)) for v in adj[u] if u < v)
                if nx.check_planarity(h)[0]:
                    cert = DrawingCertificate(g, tuple(chosen), orders)
                    return Exact(k, cert)
    return Bounds(max_k + 1, math.inf, "max_k_reached")


# ---------------------------------------------------------------------------
# verifiers


@dataclass
class VerificationReport:
    ok: bool
    failures: list[str]
    lines: list[str]

    def render(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        body = self.lines + [f"failure: {f}" for f in self.failures] + [f"status: {status}"]
        return "\n".join(body) + "\n"


def verify_deletion_certificate(cert: DeletionCertificate) -> VerificationReport:
    """Re-derive every certificate invariant by recomputation."""
    g, rs = cert.host, cert.embedding
    failures, lines = [], []
    deleted = [norm_edge(*e) for e in cert.deleted]
    lines.append(f"graph: {cert.source or g.family or f'p={g.p} q={g.q}'}")
    lines.append(f"t: {cert.t}")
    lines.append(f"deleted: {len(deleted)}")
    if len(set(deleted)) != len(deleted):
        failures.append("deleted edges repeat")
    missing = [e for e in deleted if e not in g.edge_set]
    if missing:
        failures.append(f"deleted edges not in graph: {missing[:3]}")
    if rs.p != g.p:
        failures.append(f"graph identity: embedding has {rs.p} vertices, graph has {g.p}")
    else:
        expect = g.edge_set - set(deleted)
        if rs.graph.edge_set != expect:
            failures.append("graph identity: embedding edges differ from G - E'")
    genus = euler_genus(rs)
    lines.append(f"genus: {genus}")
    if genus > cert.t:
        failures.append(f"genus {genus} exceeds t={cert.t}")
    conn = is_connected(rs.graph)
    lines.append(f"connected: {'yes' if conn else 'no'}")
    if is_connected(g):
        eps = excess(g, cert.t).eps
        eq = "yes" if eps == len(deleted) else "no"
        lines.append(f"chain: eps_t = {eps} <= mu_t <= {len(deleted)}")
        lines.append(f"equality: {eq}")
    return VerificationReport(not failures, failures, lines)


def verify_drawing_certificate(cert: DrawingCertificate) -> VerificationReport:
    """Planarize the drawing and test planarity."""
    g = cert.graph
    failures, lines = [], [f"crossings: {cert.size}"]
    seen = set()
    for i, (e, f) in enumerate(cert.crossings):
        e, f = norm_edge(*e), norm_edge(*f)
        if e not in g.edge_set or f not in g.edge_set:
            failures.append(f"crossing {i} uses a non-edge")
        if e == f:
            failures.append(f"crossing {i} pairs an edge with itself")
        elif _adjacent(e, f):
            failures.append(f"crossing {i} pairs adjacent edges")
        key = frozenset((e, f))
        if key in seen:
            failures.append(f"crossing {i} repeats a pair")
        seen.add(key)
    for e in {x for pr in cert.crossings for x in pr}:
        want = sorted(i for i, pr in enumerate(cert.crossings) if e in pr)
        if sorted(cert.orders.get(e, ())) != want:
            failures.append(f"order along {e} does not list its crossings")
    if not failures:
        planar = is_planar(planarize(cert))[0]
        lines.append(f"planarization planar: {'yes' if planar else 'no'}")
        if not planar:
            failures.append("planarization is not planar")
    return VerificationReport(not failures, failures, lines)


def serialize_drawing(cert: DrawingCertificate, source: str | None = None) -> str:
    """``DRAWING crossings=<k>``, the graph source, one ``u v x w z`` line
    per crossing, then ``order u v: i j ...`` for every crossed edge."""
    src = source
    if not src:
        if cert.graph.family is None:
            raise ParameterError("drawing needs a graph source")
        src = f"family {cert.graph.family}"
    lines = [f"DRAWING crossings={cert.size}", src]
    for e, f in cert.crossings:
        lines.append(f"{e[0]} {e[1]} x {f[0]} {f[1]}")
    for e in sorted(cert.orders):
        lines.append(f"order {e[0]} {e[1]}: " + " ".join(map(str, cert.orders[e])))
    return "\n".join(lines) + "\n"


def parse_drawing(text: str, base_dir: str = ".") -> DrawingCertificate:
    body = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    body = [(n, ln) for n, ln in body if ln and not ln.startswith("#")]
    if len(body) < 2:
        raise ParseError("drawing is truncated")
    n0, head = body[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "DRAWING" or not parts[1].startswith("crossings="):
        raise ParseError("bad DRAWING header", n0)
    try:
        k = int(parts[1].removeprefix("crossings="))
    except ValueError as exc:
        raise ParseError("bad DRAWING header", n0) from exc
    g = _load_source(body[1], base_dir)
    if len(body) < 2 + k:
        raise ParseError("drawing is truncated")
    crossings = []
    for n, ln in body[2 : 2 + k]:
        xs = ln.split()
        if len(xs) != 5 or xs[2] != "x":
            raise ParseError(f"bad crossing {ln!r}", n)
        try:
            a, b, c, d = (int(xs[i]) for i in (0, 1, 3, 4))
        except ValueError as exc:
            raise ParseError(f"bad crossing {ln!r}", n) from exc
        crossings.append((norm_edge(a, b), norm_edge(c, d)))
    orders: dict[Edge, tuple[int, ...]] = {}
    for n, ln in body[2 + k :]:
        head, _, tail = ln.partition(":")
        xs = head.split()
        try:
            if len(xs) != 3 or xs[0] != "order":
                raise ValueError
            e = norm_edge(int(xs[1]), int(xs[2]))
            orders[e] = tuple(int(x) for x in tail.split())
        except ValueError as exc:
            raise ParseError(f"bad order line {ln!r}", n) from exc
    return DrawingCertificate(g, tuple(crossings), orders)


def _load_source(line: tuple[int, str], base_dir: str) -> Graph:
    n, src = line
    if src.startswith("family "):
        try:
            return generate(FamilySpec.parse(src[len("family ") :]))
        except ParameterError as exc:
            raise ParseError(str(exc), n) from exc
    try:
        with open(os.path.join(base_dir, src)) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read graph source {src!r}: {exc}", n) from exc
