"""Explicit embeddings and edge-deletion certificates.

Every builder checks its own output by face tracing (graph identity, genus,
face census, connectivity) and raises :class:`ConstructionError` when a
check fails. The cube family is built by repeated doubling: two mirror
copies of an embedding joined by one 4-edge tube per quad of a vertex
disjoint quad cover (VDQC). Vertex ``v`` of the second copy is ``v + p``,
which reproduces the binary numbering of ``Q_d``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import embedding as emb
from .embedding import VDQC, FaceWalk, RotationSystem, canonical_face, euler_genus
from .errors import ConstructionError, ParameterError, ParseError, SurgeryError
from .formulas import excess, genus_formula, t_q
from .graph import (
    Complete,
    CompleteBipartite,
    Cube,
    FamilySpec,
    FoldedCube,
    Graph,
    generate,
    is_connected,
    norm_edge,
    parse_graph,
)


@dataclass(frozen=True)
class DeletionCertificate:
    """``G - E'`` embedded in the genus-``t`` surface, so ``mu_t(G) <= |E'|``."""

    host: Graph
    deleted: tuple[tuple[int, int], ...]
    t: int
    embedding: RotationSystem
    source: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.deleted)


def make_certificate(host: Graph, rs: RotationSystem, t: int) -> DeletionCertificate:
    """Certificate deleting every host edge that ``rs`` does not carry."""
    kept = rs.graph.edge_set
    extra = kept - host.edge_set
    if extra or rs.p != host.p:
        raise ConstructionError(f"embedding is not a spanning subgraph of the host: {sorted(extra)[:4]}")
    deleted = tuple(e for e in host.edges if e not in kept)
    src = f"family {host.family}" if host.family is not None else ""
    return DeletionCertificate(host, deleted, t, rs, src)


def _check(
    rs: RotationSystem,
    *,
    graph: Graph | None = None,
    genus: int | None = None,
    faces: int | None = None,
    connected: bool = True,
    what: str = "construction",
) -> None:
    if graph is not None and rs.graph.edges != graph.edges:
        raise ConstructionError(f"{what}: embedded graph differs from the target")
    if genus is not None and euler_genus(rs) != genus:
        raise ConstructionError(f"{what}: genus {euler_genus(rs)}, expected {genus}")
    if faces is not None and any(len(f) != faces for f in rs.faces):
        raise ConstructionError(f"{what}: not every face has length {faces}")
    if connected and not is_connected(rs.graph):
        raise ConstructionError(f"{what}: embedded graph is disconnected")


# ---------------------------------------------------------------------------
# planar and torus constructions


def guy_planar_quadrangulation(a: int, b: int) -> tuple[RotationSystem, DeletionCertificate]:
    """Planar quadrangulating subgraph of ``K_{a,b}`` with ``2(a+b) - 4`` edges.

    The top and bottom B-vertices see every A-vertex; the remaining
    B-vertices see only the two middle A-vertices.
    """
    if a < 2 or b < 2:
        raise ParameterError("guy_planar_quadrangulation needs a, b >= 2")
    top, bot = a, a + b - 1
    left, right = (a - 1) // 2, (a - 1) // 2 + 1
    faces = [(top, i, bot, i + 1) for i in range(a - 1) if i != left]
    faces.append((top, a - 1, bot, 0))
    column = [top, *range(a + 1, a + b - 1), bot]
    faces += [(column[k], left, column[k + 1], right) for k in range(b - 1)]
    rs = emb.rotation_from_faces(a + b, faces)
    host = generate(CompleteBipartite(a, b))
    _check(rs, genus=0, faces=4, what="planar quadrangulation")
    if rs.q != 2 * (a + b) - 4:
        raise ConstructionError("planar quadrangulation has the wrong edge count")
    return rs, make_certificate(host, rs, 0)


def torus_complete_even(r: int) -> tuple[RotationSystem, DeletionCertificate]:
    """6-regular triangulation of the torus on ``2r`` vertices.

    ``u_j = j`` and ``w_j = r + j``; both r-cycles are present, ``u_j`` sees
    ``w_j, w_{j+1}`` and ``w_j`` sees ``u_{j+1}, u_{j+2}``.
    """
    if r < 4:
        raise ParameterError("torus_complete_even needs r >= 4")

    def u(j: int) -> int:
        return j % r

    def w(j: int) -> int:
        return r + j % r

    faces = []
    for j in range(r):
        faces += [
            (u(j), w(j + 1), w(j)),
            (w(j + 1), u(j), u(j + 1)),
            (w(j), u(j + 2), u(j + 1)),
            (u(j + 2), w(j), w(j + 1)),
        ]
    rs = emb.rotation_from_faces(2 * r, faces)
    _check(rs, genus=1, faces=3, what="torus triangulation")
    return rs, make_certificate(generate(Complete(2 * r)), rs, 1)


def torus_complete_odd(r: int) -> DeletionCertificate:
    """Add vertex ``2r`` inside the first triangle of the even construction."""
    base, _ = torus_complete_even(r)
    tri = base.faces[0]
    rs = emb.insert_vertex_in_face(base, tri, list(tri))
    _check(rs, genus=1, faces=3, what="torus triangulation plus vertex")
    return make_certificate(generate(Complete(2 * r + 1)), rs, 1)


def planar_kab2(a: int) -> RotationSystem:
    """Concentric quadrangulation of ``K_{a,2}``: A = ``0..a-1``, B = ``a, a+1``."""
    bl, br = a, a + 1
    faces = [(i, bl, i + 1, br) for i in range(a - 1)]
    faces.append((0, br, a - 1, bl))
    return emb.rotation_from_faces(a + 2, faces)


def torus_kab_b3(a: int) -> DeletionCertificate:
    """``K_{a,3}`` minus ``a - 4`` edges on the torus.

    The third B-vertex sits in the outer face joined to the two outermost
    A-vertices, and reaches the innermost quad through one handle, where it
    is joined to that quad's two A-corners.
    """
    if a < 5:
        raise ParameterError("torus_kab_b3 needs a >= 5")
    base = planar_kab2(a)
    b3 = a + 2
    outer = base.faces[base.face_index(canonical_face((0, a + 1, a - 1, a)))]
    rs = emb.insert_vertex_in_face(base, outer, [0, a - 1])
    m = (a - 2) // 2
    inner = canonical_face((m, a, m + 1, a + 1))
    start = next(f for f in rs.faces if b3 in f)
    rs = emb.attach_tube(rs, start, inner, [(b3, m)])
    merged = next(f for f in rs.faces if b3 in f and m + 1 in f)
    # the handle edge splits the corner at b3, so b3 visits the merged face twice
    rs = emb.add_chord(rs, merged, b3, m + 1, at=(merged.index(b3), merged.index(m + 1)))
    host = generate(CompleteBipartite(a, 3))
    _check(rs, genus=1, what="K_{a,3} torus certificate")
    cert = make_certificate(host, rs, 1)
    if cert.size != a - 4:
        raise ConstructionError("K_{a,3} certificate has the wrong size")
    return cert


def _planar_c4() -> RotationSystem:
    # cycle 0-1-3-2 (binary numbering of Q_2)
    return RotationSystem.from_lists([[1, 2], [0, 3], [0, 3], [1, 2]])


def planar_q3() -> tuple[RotationSystem, VDQC]:
    """Planar ``Q_3`` with the two ``x_2``-fibre faces as VDQC."""
    c4 = _planar_c4()
    face = c4.face_containing(0, 1)
    rs, _, _ = _double(c4, [face])
    other = next(f for f in c4.faces if f != face)
    vdqc = tuple(sorted((other, canonical_face([v + 4 for v in reversed(other)]))))
    if not emb.verify_vdqc(rs, vdqc):  # pragma: no cover - fixed data
        raise ConstructionError("planar Q_3 VDQC is invalid")
    return rs, vdqc


def _sigma(p: int):
    full = p - 1
    return lambda v: v ^ full


def torus_k44_quadrangulation() -> RotationSystem:
    """``K_{4,4}`` on the torus: planar ``Q_3`` plus one antipodal handle.

    Vertices are renumbered to the ``K_{4,4}`` convention: even-parity cube
    vertices become ``0..3`` and odd ones ``4..7``.
    """
    q3, vdqc = planar_q3()
    f3, _ = _antipodal_tubes(q3, vdqc, 8)
    perm = _parity_relabel(3)
    rs = emb.relabel(f3, perm)
    _check(rs, graph=generate(CompleteBipartite(4, 4)), genus=1, faces=4, what="K_{4,4}")
    return rs


def _parity_relabel(d: int) -> list[int]:
    verts = range(1 << d)
    even = [v for v in verts if bin(v).count("1") % 2 == 0]
    odd = [v for v in verts if bin(v).count("1") % 2 == 1]
    perm = [0] * (1 << d)
    for i, v in enumerate(even + odd):
        perm[v] = i
    return perm


def grow_quadrangulation(
    rs: RotationSystem, part: str, n_new: int
) -> tuple[RotationSystem, DeletionCertificate]:
    """Insert ``n_new`` vertices into ``part`` keeping a bipartite quadrangulation.

    Each new vertex goes into the first quad face (trace order) and is joined
    to its two corners from the other part. The result is renumbered with
    part A first, then part B, so its host is ``K_{a,b}``.
    """
    if part not in ("A", "B"):
        raise ParameterError("part must be 'A' or 'B'")
    bip = rs.graph.bipartition
    if bip is None or not emb.is_quadrangulation(rs):
        raise ParameterError("grow_quadrangulation needs a bipartite quadrangulation")
    side_a, side_b = list(sorted(bip[0])), list(sorted(bip[1]))
    genus = euler_genus(rs)
    for _ in range(n_new):
        other = set(side_b if part == "A" else side_a)
        face = next(
            (f for f in rs.faces if len(f) == 4 and sum(v in other for v in f) == 2), None
        )
        if face is None:
            raise ConstructionError("no quad face with two corners in the other part")
        corners = [v for v in face if v in other]
        z = rs.p
        rs = emb.insert_vertex_in_face(rs, face, corners)
        (side_a if part == "A" else side_b).append(z)
    perm = [0] * rs.p
    for i, v in enumerate(side_a + side_b):
        perm[v] = i
    rs = emb.relabel(rs, perm)
    host = generate(CompleteBipartite(len(side_a), len(side_b)))
    _check(rs, genus=genus, faces=4, what="grown quadrangulation")
    return rs, make_certificate(host, rs, genus)


def torus_kab_quadrangulation(a: int, b: int) -> DeletionCertificate:
    """Torus certificate for ``K_{a,b}``, ``a, b >= 4``, grown from ``K_{4,4}``."""
    if a < 4 or b < 4:
        raise ParameterError("torus_kab_quadrangulation needs a, b >= 4")
    rs = torus_k44_quadrangulation()
    rs, cert = grow_quadrangulation(rs, "A", a - 4)
    rs, cert = grow_quadrangulation(rs, "B", b - 4)
    return cert


# ---------------------------------------------------------------------------
# doubling


def _double(
    rs: RotationSystem, quads: Sequence[FaceWalk]
) -> tuple[RotationSystem, list[list[FaceWalk]], list[tuple[int, int]]]:
    """Mirror-double ``rs`` and tube each listed quad to its twin.

    Returns the new embedding, the four tube faces of each tube (in the
    order of the quad's walk) and the first matched pair of each tube.
    """
    p = rs.p
    out = emb.disjoint_union(rs, emb.mirror(rs))
    tubes = []
    for s in quads:
        twin = canonical_face([v + p for v in reversed(s)])
        out = emb.attach_tube(out, s, twin, [(v, v + p) for v in s])
        tubes.append(s)
    tube_faces = []
    for s in tubes:
        walk = [out.face_containing(s[i], s[(i + 1) % 4]) for i in range(4)]
        if len({*walk}) != 4 or any(len(f) != 4 for f in walk):
            raise ConstructionError("tube did not produce four quads")
        tube_faces.append(walk)
    return out, tube_faces, [(s[0], s[0] + p) for s in tubes]


def _pairs(walk: list[FaceWalk]) -> list[tuple[FaceWalk, FaceWalk]]:
    return [tuple(sorted((walk[0], walk[2]))), tuple(sorted((walk[1], walk[3])))]


def vdqc_double(rs: RotationSystem, s: Iterable[Sequence[int]]) -> tuple[RotationSystem, VDQC]:
    """Embed ``G x K_2`` from an embedding of ``G`` and a VDQC.

    Genus becomes ``2t + |S| - 1`` and the returned VDQC has ``2|S|``
    quads: for each tube the lexicographically least pair of opposite tube
    faces.
    """
    quads = [canonical_face(f) for f in s]
    if not emb.verify_vdqc(rs, quads):
        raise SurgeryError("vdqc_double needs a valid VDQC")
    t = euler_genus(rs)
    out, tube_faces, _ = _double(rs, sorted(quads))
    new = tuple(sorted(f for walk in tube_faces for f in min(_pairs(walk))))
    if euler_genus(out) != 2 * t + len(quads) - 1:
        raise ConstructionError("doubling genus recurrence failed")
    return out, new


@dataclass
class _Pipeline:
    rs: RotationSystem
    vdqc: VDQC
    tubes: list[tuple[int, int, int]]  # (level, a, a') first matched pair per tube


def _cube_pipeline(d: int, drops: dict[int, int] | None = None) -> _Pipeline:
    """Hierarchical doubling from planar ``Q_3`` to ``Q_d``.

    ``drops[j]`` tubes are left out at the doubling that builds ``Q_j``;
    untubed quads stay faces in both copies and remain in the VDQC. The
    next VDQC is chosen equivariantly under the antipodal map where that is
    possible, so the full pipeline is antipodally symmetric.
    """
    drops = drops or {}
    rs, vdqc = planar_q3()
    tubes = [(3, 0, 4)]
    for j in range(4, d + 1):
        p = rs.p
        quads = sorted(vdqc)
        omit = drops.get(j, 0)
        if not 0 <= omit < len(quads):
            raise ParameterError(f"cannot omit {omit} of {len(quads)} tubes at level {j}")
        keep, skip = quads[: len(quads) - omit], quads[len(quads) - omit :]
        rs, tube_faces, firsts = _double(rs, keep)
        sig_old, sig_new = _sigma(p), _sigma(2 * p)
        chosen: dict[frozenset[int], tuple[FaceWalk, FaceWalk]] = {}
        for s, walk in zip(keep, tube_faces):
            pairs = _pairs(walk)
            pick = min(pairs)
            img = frozenset(sig_old(v) for v in s)
            if img in chosen:
                want = {frozenset(sig_new(v) for v in f) for f in chosen[img]}
                match = [pr for pr in pairs if {frozenset(f) for f in pr} == want]
                if match:
                    pick = match[0]
            chosen[frozenset(s)] = pick
        new = [f for s in keep for f in chosen[frozenset(s)]]
        for s in skip:
            new += [s, canonical_face([v + p for v in reversed(s)])]
        vdqc = tuple(sorted(new))
        tubes += [(j, a, b) for a, b in firsts]
    return _Pipeline(rs, vdqc, tubes)


def cube_genus_embedding(d: int) -> tuple[RotationSystem, VDQC]:
    """Quadrangulation of ``Q_d`` on its genus surface, with a VDQC."""
    if d < 3:
        raise ParameterError("cube_genus_embedding needs d >= 3")
    pl = _cube_pipeline(d)
    _check(pl.rs, graph=generate(Cube(d)), genus=t_q(d), faces=4, what=f"Q_{d}")
    if len(pl.vdqc) != 2 ** (d - 2) or not emb.verify_vdqc(pl.rs, pl.vdqc):
        raise ConstructionError("cube VDQC check failed")
    return pl.rs, pl.vdqc


def drop_schedule(d: int, k: int) -> dict[int, int]:
    """Greedy split of ``k`` into level omissions, largest weight first.

    Level ``j`` (the doubling building ``Q_j``) has capacity ``2^(j-3) - 1``
    and each omission there is worth ``2^(d-j)`` genus.
    """
    gamma = t_q(d)
    if not 0 <= k <= gamma:
        raise ParameterError(f"k must lie in [0, {gamma}]")
    left, plan = k, {}
    for j in range(4, d + 1):
        weight = 2 ** (d - j)
        take = min(2 ** (j - 3) - 1, left // weight)
        if take:
            plan[j] = take
        left -= take * weight
    assert left == 0, "greedy drop decomposition must succeed within range"
    return plan


def kept_tube_projection(d: int, tubes: list[tuple[int, int, int]]) -> set[tuple[int, int]]:
    """Project every tube copy in ``Q_d`` onto ``Q_{d-2}`` by its first pair."""
    edges = set()
    for j, a, b in tubes:
        for c in range(2 ** (d - j)):
            hi = c << j
            edges.add(norm_edge((a | hi) >> 2, (b | hi) >> 2))
    return edges


def _is_spanning_tree(n: int, edges: set[tuple[int, int]]) -> bool:
    g = Graph.from_edges(n, edges)
    return g.q == n - 1 and is_connected(g)


def cube_with_drops(d: int, k: int) -> DeletionCertificate:
    """``Q_d`` minus ``4k`` edges on the genus ``t_Q(d) - k`` surface."""
    if d < 3:
        raise ParameterError("cube_with_drops needs d >= 3")
    plan = drop_schedule(d, k)
    pl = _cube_pipeline(d, plan)
    gamma = t_q(d)
    _check(pl.rs, genus=gamma - k, faces=4, what=f"Q_{d} with {k} drops")
    cert = make_certificate(generate(Cube(d)), pl.rs, gamma - k)
    if cert.size != 4 * k:
        raise ConstructionError("drop certificate has the wrong size")
    if k == gamma and not _is_spanning_tree(2 ** (d - 2), kept_tube_projection(d, pl.tubes)):
        raise ConstructionError("kept tubes do not project to a spanning tree")
    return cert


def cube_in_kaa_certificate(d: int) -> DeletionCertificate:
    """``Q_d`` as a spanning subgraph of ``K_{a,a}``, ``a = 2^(d-1)``."""
    rs, _ = cube_genus_embedding(d)
    a = 2 ** (d - 1)
    rs = emb.relabel(rs, _parity_relabel(d))
    host = generate(CompleteBipartite(a, a))
    cert = make_certificate(host, rs, t_q(d))
    if cert.size != excess(host, t_q(d)).eps:
        raise ConstructionError("cube-in-K_{a,a} certificate misses the integer excess")
    return cert


# ---------------------------------------------------------------------------
# folded cubes


def _antipodal_tubes(
    rs: RotationSystem, vdqc: VDQC, p: int, skip: int = 0
) -> tuple[RotationSystem, list[list[FaceWalk]]]:
    """Tube each VDQC quad ``S`` to ``sigma(S)`` with the matching ``v -> sigma(v)``.

    The VDQC must be closed under the antipodal map ``sigma``. The last
    ``skip`` antipodal pairs (in sorted order) are left untubed. Returns the
    embedding and the four tube faces of every handle.
    """
    sig = _sigma(p)
    reps = [s for s in sorted(vdqc) if s < canonical_face([sig(v) for v in s])]
    done = []
    for s in reps[: len(reps) - skip]:
        img = set(sig(v) for v in s)
        target = next((f for f in vdqc if set(f) == img), None)
        if target is None:
            raise ConstructionError("VDQC is not closed under the antipodal map")
        rs = emb.attach_tube(rs, s, target, [(v, sig(v)) for v in s])
        done.append(s)
    walks = [[rs.face_containing(s[i], s[(i + 1) % 4]) for i in range(4)] for s in done]
    return rs, walks


class FoldedCubeError(ConstructionError):
    """The folded-cube recursion produced the wrong genus.

    ``embedding`` holds the (valid) embedding of ``F_d`` that was built and
    ``genus`` its actual genus.
    """

    def __init__(self, message: str, embedding: RotationSystem | None = None, genus: int | None = None):
        super().__init__(message)
        self.embedding = embedding
        self.genus = genus


def _folded_odd(d: int, skip: int = 0) -> tuple[RotationSystem, list[list[FaceWalk]]]:
    pl = _cube_pipeline(d)
    return _antipodal_tubes(pl.rs, pl.vdqc, 1 << d, skip)


def folded_cube_recursive_step(d: int) -> RotationSystem:
    """Double ``F_{d-1}`` across its antipodal-handle VDQC and swap handle ends.

    Copy-local antipodal edges ``(v,0)(sigma v,0)`` and ``(v,1)(sigma v,1)``
    are re-paired into ``(v,0)(sigma v,1)`` and ``(v,1)(sigma v,0)``. The
    result embeds ``F_d``; its genus is whatever face tracing says.
    """
    if d < 4:
        raise ParameterError("the recursive step needs d >= 4")
    if d % 2:
        raise ParameterError("the recursive step is only needed for even d")
    prev, handles = _folded_odd(d - 1)
    p = prev.p
    vdqc = tuple(sorted(f for walk in handles for f in min(_pairs(walk))))
    if not emb.verify_vdqc(prev, vdqc):
        raise ConstructionError("antipodal handle faces do not form a VDQC")
    rs, _, _ = _double(prev, sorted(vdqc))
    sig = _sigma(p)
    for v in range(p):
        if v < sig(v):
            rs = emb.swap_edge_ends(rs, (v, sig(v)), (v + p, sig(v) + p))
    _check(rs, graph=generate(FoldedCube(d)), what=f"F_{d} recursion")
    return rs


def folded_cube_genus_embedding(d: int) -> RotationSystem:
    """Embedding of ``F_d`` on the surface of genus ``1 + (d-3) 2^(d-3)``.

    Odd ``d``: the symmetric ``Q_d`` quadrangulation plus ``2^(d-3)``
    antipodal handles. The antipodal map reverses orientation there, which
    is what lets a handle carry ``v -> sigma(v)``. Even ``d``: the antipodal
    map preserves orientation; the doubling-and-swap recursion is run and
    its genus checked, raising :class:`FoldedCubeError` when it misses.
    """
    if d < 3:
        raise ParameterError("folded_cube_genus_embedding needs d >= 3")
    target = genus_formula(FoldedCube(d))
    if d % 2:
        rs, _ = _folded_odd(d)
        _check(rs, graph=generate(FoldedCube(d)), genus=target, faces=4, what=f"F_{d}")
        return rs
    rs = folded_cube_recursive_step(d)
    g = euler_genus(rs)
    if g != target or not emb.is_quadrangulation(rs):
        raise FoldedCubeError(
            f"F_{d}: end-swap recursion gives genus {g}, expected {target}", rs, g
        )
    return rs  # pragma: no cover - not reached for any even d tested


def folded_cube_with_drops(d: int, k: int) -> DeletionCertificate:
    """``F_d`` minus ``4k`` edges on the genus ``gamma(F_d) - k`` surface.

    For ``k >= 2^(d-3)`` all antipodal edges go and the rest is a cube drop
    certificate. For smaller ``k`` (odd ``d`` only) ``k`` antipodal handles
    are left off the full embedding.
    """
    if d < 3:
        raise ParameterError("folded_cube_with_drops needs d >= 3")
    gamma = genus_formula(FoldedCube(d))
    if not 0 <= k <= gamma:
        raise ParameterError(f"k must lie in [0, {gamma}]")
    host = generate(FoldedCube(d))
    n_handles = 2 ** (d - 3)
    if k >= n_handles:
        rs = cube_with_drops(d, k - n_handles).embedding
    elif d % 2:
        rs, _ = _folded_odd(d, skip=k)
    else:
        raise ConstructionError(
            f"F_{d}, k={k}: no construction; antipodal handles need an "
            "orientation-reversing antipodal map, which even d lacks"
        )
    _check(rs, genus=gamma - k, faces=4, what=f"F_{d} with {k} drops")
    cert = make_certificate(host, rs, gamma - k)
    if cert.size != 4 * k:
        raise ConstructionError("folded drop certificate has the wrong size")
    return cert


# ---------------------------------------------------------------------------
# certificate files


def serialize_certificate(cert: DeletionCertificate, source: str | None = None) -> str:
    src = source or cert.source
    if not src:
        if cert.host.family is None:
            raise ParameterError("certificate needs a graph source")
        src = f"family {cert.host.family}"
    lines = [f"CERT t={cert.t} deleted={cert.size}", src]
    lines += [f"{u} {v}" for u, v in cert.deleted]
    return "\n".join(lines) + "\n" + emb.serialize_embedding(cert.embedding)


def parse_certificate(text: str, base_dir: str = ".") -> DeletionCertificate:
    """Parse a certificate; a path source is resolved against ``base_dir``."""
    lines = text.splitlines()
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    body = [(n, ln) for n, ln in body if ln and not ln.startswith("#")]
    if len(body) < 2:
        raise ParseError("certificate is truncated")
    n0, head = body[0]
    parts = head.split()
    try:
        if parts[0] != "CERT" or len(parts) != 3:
            raise ValueError
        t = int(parts[1].removeprefix("t="))
        m = int(parts[2].removeprefix("deleted="))
        if not parts[1].startswith("t=") or not parts[2].startswith("deleted="):
            raise ValueError
    except (ValueError, IndexError) as exc:
        raise ParseError("bad CERT header", n0) from exc
    n1, src = body[1]
    if src.startswith("family "):
        try:
            host = generate(FamilySpec.parse(src[len("family ") :]))
        except ParameterError as exc:
            raise ParseError(str(exc), n1) from exc
    else:
        path = os.path.join(base_dir, src)
        try:
            with open(path) as fh:
                host = parse_graph(fh.read())
        except OSError as exc:
            raise ParseError(f"cannot read graph source {src!r}: {exc}", n1) from exc
    if len(body) < 2 + m + 1:
        raise ParseError("certificate is truncated")
    deleted = []
    for n, ln in body[2 : 2 + m]:
        xs = ln.split()
        try:
            u, v = int(xs[0]), int(xs[1])
            if len(xs) != 2:
                raise ValueError
        except (ValueError, IndexError) as exc:
            raise ParseError(f"bad deleted edge {ln!r}", n) from exc
        deleted.append(norm_edge(u, v))
    emb_start = body[2 + m][0] - 1
    rs = emb.parse_embedding("\n".join(lines[emb_start:]), emb_start)
    return DeletionCertificate(host, tuple(deleted), t, rs, src)
