"""Rotation systems: combinatorial embeddings in orientable surfaces.

A rotation system assigns each vertex a cyclic order of its neighbours. The
graph is simple, so a dart is named by its ordered endpoint pair ``(u, v)``.
Faces are the orbits of

    phi(u -> v) = (v -> succ_v(u))

i.e. cross to the paired dart and step to the rotation successor. A face walk
is stored as the tuple of vertices visited, starting from the smallest dart
of the orbit. Rotations are kept in canonical form (smallest neighbour
first), so two rotation systems are equal iff they describe the same map.

Every surgery returns a new value; none mutates its input.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotFound, ParseError, SurgeryError
from .graph import Graph, components, norm_edge

FaceWalk = tuple[int, ...]
VDQC = tuple[FaceWalk, ...]


def _canon_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    i = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[i:]) + tuple(seq[:i])


def canonical_face(walk: Sequence[int]) -> FaceWalk:
    """Rotate a closed walk so that it starts at its smallest dart."""
    n = len(walk)
    i = min(range(n), key=lambda k: (walk[k], walk[(k + 1) % n]))
    return tuple(walk[i:]) + tuple(walk[:i])


def face_darts(face: Sequence[int]) -> list[tuple[int, int]]:
    n = len(face)
    return [(face[i], face[(i + 1) % n]) for i in range(n)]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbour orders ``rot[v]`` for ``v = 0 .. p-1``."""

    rot: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, rot: Iterable[Sequence[int]]) -> "RotationSystem":
        """Validate rotations and build the canonical value."""
        rows = [list(r) for r in rot]
        p = len(rows)
        for v, r in enumerate(rows):
            if len(set(r)) != len(r):
                raise SurgeryError(f"repeated neighbour in rotation at {v}")
            for w in r:
                if not 0 <= w < p or w == v:
                    raise SurgeryError(f"bad neighbour {w} at vertex {v}")
        for v, r in enumerate(rows):
            for w in r:
                if v not in rows[w]:
                    raise SurgeryError(f"dart {v}->{w} has no partner")
        return cls(tuple(_canon_cycle(r) for r in rows))

    @property
    def p(self) -> int:
        return len(self.rot)

    @cached_property
    def graph(self) -> Graph:
        edges = {norm_edge(v, w) for v, r in enumerate(self.rot) for w in r}
        return Graph(self.p, tuple(sorted(edges)))

    @property
    def q(self) -> int:
        return sum(len(r) for r in self.rot) // 2

    @cached_property
    def _pos(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(r)} for r in self.rot)

    def succ(self, v: int, w: int) -> int:
        """Neighbour following ``w`` in the rotation at ``v``."""
        r = self.rot[v]
        return r[(self._pos[v][w] + 1) % len(r)]

    def pred(self, v: int, w: int) -> int:
        r = self.rot[v]
        return r[(self._pos[v][w] - 1) % len(r)]

    def next_dart(self, u: int, v: int) -> tuple[int, int]:
        return (v, self.succ(v, u))

    @cached_property
    def faces(self) -> tuple[FaceWalk, ...]:
        return tuple(trace_faces(self))

    @cached_property
    def _face_of_dart(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, f in enumerate(self.faces):
            for d in face_darts(f):
                out[d] = i
        return out

    def face_index(self, face: Sequence[int]) -> int:
        """Index of ``face`` in :attr:`faces`; raises if it is not a face."""
        darts = face_darts(face)
        if not darts:
            raise SurgeryError("empty face walk")
        idx = self._face_of_dart.get(darts[0])
        if idx is None or canonical_face(face) != self.faces[idx]:
            raise SurgeryError(f"{tuple(face)} is not a face of this embedding")
        return idx

    def face_containing(self, u: int, v: int) -> FaceWalk:
        return self.faces[self._face_of_dart[(u, v)]]


def trace_faces(rs: RotationSystem) -> list[FaceWalk]:
    """All face walks, each started from its smallest dart, in dart order."""
    seen: set[tuple[int, int]] = set()
    out = []
    for u in range(rs.p):
        for v in sorted(rs.rot[u]):
            if (u, v) in seen:
                continue
            walk = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                walk.append(d[0])
                d = rs.next_dart(*d)
            out.append(tuple(walk))
    return out


def face_census(rs: RotationSystem) -> Counter:
    return Counter(len(f) for f in rs.faces)


def is_quadrangulation(rs: RotationSystem) -> bool:
    return bool(rs.faces) and all(len(f) == 4 for f in rs.faces)


def is_triangulation(rs: RotationSystem) -> bool:
    return bool(rs.faces) and all(len(f) == 3 for f in rs.faces)


def component_genera(rs: RotationSystem) -> list[int]:
    """Genus of each connected component, isolated vertices counting 0."""
    comps = components(rs.graph)
    comp_of = [0] * rs.p
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    pc = [len(c) for c in comps]
    qc = [0] * len(comps)
    fc = [0] * len(comps)
    for u, v in rs.graph.edges:
        qc[comp_of[u]] += 1
    for f in rs.faces:
        fc[comp_of[f[0]]] += 1
    out = []
    for i in range(len(comps)):
        if qc[i] == 0:
            out.append(0)
            continue
        twice = 2 - pc[i] + qc[i] - fc[i]
        if twice < 0 or twice % 2:
            raise SurgeryError(f"Euler parity violated in component {i}")
        out.append(twice // 2)
    return out


def euler_genus(rs: RotationSystem) -> int:
    """Sum over components of ``(2 - p_c + q_c - f_c) / 2``."""
    return sum(component_genera(rs))


def mirror(rs: RotationSystem) -> RotationSystem:
    return RotationSystem(tuple(_canon_cycle(r[::-1]) for r in rs.rot))


def disjoint_union(rs1: RotationSystem, rs2: RotationSystem) -> RotationSystem:
    off = rs1.p
    return RotationSystem(rs1.rot + tuple(tuple(w + off for w in r) for r in rs2.rot))


def relabel(rs: RotationSystem, perm: Sequence[int]) -> RotationSystem:
    """Rename vertex ``v`` to ``perm[v]``."""
    rows: list[tuple[int, ...]] = [()] * rs.p
    for v, r in enumerate(rs.rot):
        rows[perm[v]] = _canon_cycle([perm[w] for w in r])
    return RotationSystem(tuple(rows))


def _face_pred(rs: RotationSystem, face: FaceWalk, v: int) -> int:
    """Vertex preceding ``v`` on ``face``; ``v`` must occur exactly once."""
    hits = [i for i, x in enumerate(face) if x == v]
    if len(hits) != 1:
        raise SurgeryError(f"vertex {v} occurs {len(hits)} times on face {face}")
    return face[hits[0] - 1]


def _insert_after(row: list[int], anchor: int, new: int) -> None:
    row.insert(row.index(anchor) + 1, new)


def attach_tube(
    rs: RotationSystem,
    face_a: Sequence[int],
    face_b: Sequence[int],
    matching: Sequence[tuple[int, int]],
) -> RotationSystem:
    """Join two faces by a handle carrying one new edge per matched pair.

    The ``a`` ends must follow the walk of ``face_a`` and the ``b`` ends must
    run around ``face_b`` in the opposite cyclic direction. Each new edge is
    inserted at the corner of its face, so the two faces are replaced by
    ``len(matching)`` new faces. The genus rises by one if the faces lie in
    the same component; otherwise the components merge (connected sum).
    """
    fa, fb = tuple(face_a), tuple(face_b)
    ia, ib = rs.face_index(fa), rs.face_index(fb)
    if ia == ib:
        raise SurgeryError("tube ends must be distinct faces")
    if not matching:
        raise SurgeryError("empty matching")
    rows = [list(r) for r in rs.rot]
    ends = [a for a, _ in matching] + [b for _, b in matching]
    if len(set(ends)) != len(ends):
        raise SurgeryError("matching vertices must be distinct")
    order = {v: i for i, v in enumerate(fa)}
    ranks = [order.get(a, -1) for a, _ in matching]
    if -1 in ranks:
        raise SurgeryError("matched vertex not on face A")
    k = ranks.index(min(ranks))
    if ranks[k:] + ranks[:k] != sorted(ranks):
        raise SurgeryError("matching is not listed in face-A order")
    for a, b in matching:
        if rs.graph.has_edge(a, b):
            raise SurgeryError(f"edge ({a}, {b}) already present")
        _insert_after(rows[a], _face_pred(rs, fa, a), b)
        _insert_after(rows[b], _face_pred(rs, fb, b), a)
    out = RotationSystem.from_lists(rows)
    same = _same_component(rs, fa[0], fb[0])
    expect = len(rs.faces) - 2 + len(matching)
    if len(out.faces) != expect:
        raise SurgeryError(
            f"tube orientation mismatch: {len(out.faces)} faces, expected {expect}"
        )
    g0, g1 = euler_genus(rs), euler_genus(out)
    if g1 != g0 + (1 if same else 0):
        raise SurgeryError(f"tube genus accounting failed: {g0} -> {g1}")
    return out


def _same_component(rs: RotationSystem, u: int, v: int) -> bool:
    for c in components(rs.graph):
        if u in c:
            return v in c
    return False


def insert_vertex_in_face(
    rs: RotationSystem, face: Sequence[int], attach_to: Sequence[int]
) -> RotationSystem:
    """Add vertex ``p`` inside ``face`` joined to ``attach_to`` (in face order)."""
    fw = tuple(face)
    rs.face_index(fw)
    if len(attach_to) < 2:
        raise SurgeryError("need at least two attachment vertices")
    if len(set(attach_to)) != len(attach_to):
        raise SurgeryError("repeated attachment vertex")
    order = {v: i for i, v in enumerate(fw)}
    if any(c not in order for c in attach_to):
        raise SurgeryError("attachment vertex not on face")
    ranks = [order[c] for c in attach_to]
    k = ranks.index(min(ranks))
    if ranks[k:] + ranks[:k] != sorted(ranks):
        raise SurgeryError("attachment vertices not in face order")
    z = rs.p
    rows = [list(r) for r in rs.rot] + [list(reversed(attach_to))]
    for c in attach_to:
        _insert_after(rows[c], _face_pred(rs, fw, c), z)
    out = RotationSystem.from_lists(rows)
    if len(out.faces) != len(rs.faces) + len(attach_to) - 1:
        raise SurgeryError("vertex insertion changed the genus")
    return out


def add_chord(
    rs: RotationSystem,
    face: Sequence[int],
    u: int,
    v: int,
    at: tuple[int, int] | None = None,
) -> RotationSystem:
    """Draw edge ``uv`` across ``face``, splitting it in two.

    ``at`` gives the positions of ``u`` and ``v`` on the walk; it is needed
    when an endpoint visits the face more than once.
    """
    fw = tuple(face)
    rs.face_index(fw)
    if rs.graph.has_edge(u, v) or u == v:
        raise SurgeryError(f"chord ({u}, {v}) is a loop or already present")
    if at is None:
        pu, pv = _face_pred(rs, fw, u), _face_pred(rs, fw, v)
    else:
        i, j = at
        if fw[i] != u or fw[j] != v:
            raise SurgeryError("chord positions do not match the face walk")
        pu, pv = fw[i - 1], fw[j - 1]
    rows = [list(r) for r in rs.rot]
    _insert_after(rows[u], pu, v)
    _insert_after(rows[v], pv, u)
    out = RotationSystem.from_lists(rows)
    if len(out.faces) != len(rs.faces) + 1:
        raise SurgeryError("chord did not split the face")
    return out


def delete_edges(rs: RotationSystem, removed: Iterable[tuple[int, int]]) -> RotationSystem:
    drop: dict[int, set[int]] = {}
    for u, v in removed:
        if not rs.graph.has_edge(u, v):
            raise SurgeryError(f"edge ({u}, {v}) not present")
        drop.setdefault(u, set()).add(v)
        drop.setdefault(v, set()).add(u)
    return RotationSystem(
        tuple(
            _canon_cycle([w for w in r if w not in drop.get(v, ())])
            for v, r in enumerate(rs.rot)
        )
    )


def swap_edge_ends(
    rs: RotationSystem, e1: tuple[int, int], e2: tuple[int, int]
) -> RotationSystem:
    """Re-pair darts: ``x1y1, x2y2`` become ``x1y2, x2y1`` in the same slots.

    No genus promise is made; callers recompute it.
    """
    (x1, y1), (x2, y2) = e1, e2
    if len({x1, y1, x2, y2}) != 4:
        raise SurgeryError("swap needs four distinct endpoints")
    if not (rs.graph.has_edge(x1, y1) and rs.graph.has_edge(x2, y2)):
        raise SurgeryError("swapped edges must be present")
    if rs.graph.has_edge(x1, y2) or rs.graph.has_edge(x2, y1):
        raise SurgeryError("swap would create a duplicate edge")
    rename = {(x1, y1): y2, (y1, x1): x2, (x2, y2): y1, (y2, x2): x1}
    return RotationSystem(
        tuple(
            _canon_cycle([rename.get((v, w), w) for w in r]) for v, r in enumerate(rs.rot)
        )
    )


def rotation_from_faces(p: int, faces: Iterable[Sequence[int]]) -> RotationSystem:
    """Build the rotation system whose faces are the given oriented walks.

    For a face ``(.., x, y, z, ..)`` the rotation at ``y`` has ``z`` right
    after ``x``. Every vertex must have a single cycle of corners.
    """
    succ: list[dict[int, int]] = [dict() for _ in range(p)]
    for f in faces:
        n = len(f)
        for i in range(n):
            x, y, z = f[i - 1], f[i], f[(i + 1) % n]
            if x in succ[y]:
                raise SurgeryError(f"corner at {y} after {x} used twice")
            succ[y][x] = z
    rows = []
    for v in range(p):
        s = succ[v]
        if not s:
            rows.append([])
            continue
        start = min(s)
        row = [start]
        w = s[start]
        while w != start:
            row.append(w)
            w = s[w]
        if len(row) != len(s):
            raise SurgeryError(f"corners at {v} do not form one cycle")
        rows.append(row)
    out = RotationSystem.from_lists(rows)
    return out


def verify_vdqc(rs: RotationSystem, s: Iterable[Sequence[int]]) -> bool:
    """True iff ``s`` lists quad faces of ``rs`` covering each vertex once."""
    covered: list[int] = []
    seen: set[int] = set()
    for f in s:
        try:
            idx = rs.face_index(f)
        except SurgeryError:
            return False
        if idx in seen or len(f) != 4 or len(set(f)) != 4:
            return False
        seen.add(idx)
        covered.extend(f)
    return sorted(covered) == list(range(rs.p))


def find_vdqc(rs: RotationSystem, budget: int = 1_000_000) -> VDQC:
    """Exact cover of the vertex set by quad faces (Algorithm X).

    Raises :class:`NotFound` with reason ``budget_exhausted`` or ``none``.
    """
    quads = [f for f in rs.faces if len(f) == 4 and len(set(f)) == 4]
    cols: dict[int, set[int]] = {v: set() for v in range(rs.p)}
    for i, f in enumerate(quads):
        for v in f:
            cols[v].add(i)
    nodes = 0
    chosen: list[int] = []

    def select(i: int) -> list[set[int]]:
        removed = []
        for v in quads[i]:
            for j in cols[v]:
                for w in quads[j]:
                    if w != v:
                        cols[w].discard(j)
            removed.append(cols.pop(v))
        return removed

    def deselect(i: int, removed: list[set[int]]) -> None:
        for v in reversed(quads[i]):
            cols[v] = removed.pop()
            for j in cols[v]:
                for w in quads[j]:
                    if w != v:
                        cols[w].add(j)

    def solve() -> bool:
        nonlocal nodes
        if not cols:
            return True
        nodes += 1
        if nodes > budget:
            raise NotFound("budget_exhausted")
        v = min(cols, key=lambda c: (len(cols[c]), c))
        for i in sorted(cols[v]):
            chosen.append(i)
            removed = select(i)
            if solve():
                return True
            deselect(i, removed)
            chosen.pop()
        return False

    if not solve():
        raise NotFound("none")
    return tuple(sorted(quads[i] for i in chosen))


def serialize_embedding(rs: RotationSystem) -> str:
    lines = [str(rs.p)]
    for v, r in enumerate(rs.rot):
        lines.append(f"{v}:" + "".join(f" {w}" for w in r))
    return "\n".join(lines) + "\n"


def parse_embedding(text: str, lineno_offset: int = 0) -> RotationSystem:
    body = []
    for lineno, raw in enumerate(text.splitlines(), 1 + lineno_offset):
        line = raw.strip()
        if line and not line.startswith("#"):
            body.append((lineno, line))
    if not body:
        raise ParseError("missing vertex count")
    try:
        p = int(body[0][1])
    except ValueError as exc:
        raise ParseError("bad vertex count", body[0][0]) from exc
    if len(body) - 1 != p:
        raise ParseError(f"expected {p} rotation lines, found {len(body) - 1}", body[0][0])
    rows: list[list[int]] = []
    for expect, (lineno, line) in enumerate(body[1:]):
        head, sep, tail = line.partition(":")
        try:
            v = int(head)
            nbrs = [int(x) for x in tail.split()]
        except ValueError as exc:
            raise ParseError(f"bad rotation line {line!r}", lineno) from exc
        if not sep or v != expect:
            raise ParseError(f"expected rotation of vertex {expect}", lineno)
        for w in nbrs:
            if not 0 <= w < p:
                raise ParseError(f"unknown vertex {w}", lineno)
        if len(set(nbrs)) != len(nbrs):
            raise ParseError("repeated neighbour", lineno)
        rows.append(nbrs)
    try:
        return RotationSystem.from_lists(rows)
    except SurgeryError as exc:
        raise ParseError(str(exc)) from exc
