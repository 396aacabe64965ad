"""Command-line front end: ``surfskew <command> ...``.

Exit codes: 0 exact or verified, 1 verification failure, 2 bounds only,
64 usage error, 66 unreadable or malformed input, 73 cannot write output.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from . import constructions as C
from . import search
from .embedding import (
    euler_genus,
    face_census,
    parse_embedding,
    serialize_embedding,
)
from .errors import ConstructionError, ParameterError, ParseError, SurfskewError
from .formulas import (
    alpha,
    algebraic_genus,
    chain_report,
    excess,
    format_fraction,
    genus_formula,
    render_chain,
)
from .graph import (
    FamilySpec,
    Graph,
    components,
    cycle_rank,
    generate,
    girth,
    is_connected,
    is_forest,
    parse_graph,
    serialize_graph,
)

EXIT_OK, EXIT_FAIL, EXIT_BOUNDS = 0, 1, 2
EXIT_USAGE, EXIT_NOINPUT, EXIT_CANTCREAT = 64, 66, 73


class UsageError(Exception):
    pass


class _InputError(Exception):
    pass


class _OutputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------------------
# helpers


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _OutputError(f"cannot write {path}: {exc.strerror}") from exc


def _load_graph(path: str) -> Graph:
    text = _read(path)
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected N, N,M or N..M") from exc


def _int_option(args, name: str, env: str, default: int) -> int:
    value = getattr(args, name, None)
    if value is not None:
        return value
    raw = os.environ.get(env)
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise UsageError(f"{env} must be an integer") from exc
    return default


def _budget(args) -> search.Budget:
    n = _int_option(args, "budget_nodes", "SURFSKEW_BUDGET_NODES", search.DEFAULT_MAX_NODES)
    if n <= 0:
        raise UsageError("--budget-nodes must be positive")
    return search.Budget(max_nodes=n)


def _family(args) -> FamilySpec:
    if not args.family:
        raise UsageError("--family is required")
    if " " in args.family.strip():
        return FamilySpec.parse(args.family)
    kind = args.family
    need = {
        "complete": ("n",),
        "complete-bipartite": ("a", "b"),
        "cube": ("d",),
        "folded-cube": ("d",),
        "octahedron": ("r",),
        "cycle": ("n",),
        "path": ("n",),
        "circulant": ("n",),
    }
    if kind not in need:
        raise UsageError(f"unknown family {kind!r}")
    params = []
    for name in need[kind]:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--{name} is required for family {kind}")
        params.append(v)
    if kind == "circulant":
        if not args.jumps:
            raise UsageError("--jumps is required for family circulant")
        params += _range(args.jumps)
    return FamilySpec(kind, tuple(params))


def label(spec: FamilySpec | None) -> str:
    """Short mathematical name, e.g. ``K_{5,3}`` or ``c(12,3)``."""
    if spec is None:
        return "G"
    k, p = spec.kind, spec.params
    if k == "complete":
        return f"K_{p[0]}"
    if k == "complete-bipartite":
        return f"K_{{{p[0]},{p[1]}}}"
    if k == "cube":
        return f"Q_{p[0]}"
    if k == "folded-cube":
        return f"F_{p[0]}"
    if k == "octahedron":
        return f"O_{p[0]}"
    if k == "circulant":
        return f"c({p[0]},{','.join(map(str, p[1:]))})"
    return str(spec)


def _known_genus(spec: FamilySpec | None) -> tuple[int, str] | None:
    """Proven genus values usable for the vanishing rule."""
    if spec is None:
        return None
    tags = {
        "complete": "formula:ringel-youngs",
        "complete-bipartite": "formula:ringel",
        "cube": "formula:cube",
        "octahedron": "formula:octahedron",
    }
    if spec.kind == "folded-cube" and spec.params[0] % 2 == 1:
        tags["folded-cube"] = "formula:folded-cube"
    if spec.kind not in tags:
        return None
    try:
        return genus_formula(spec), tags[spec.kind]
    except ParameterError:
        return None


# ---------------------------------------------------------------------------
# constructions


def _cube_embedding(d: int):
    rs, vdqc = C.cube_genus_embedding(d)
    host = generate(FamilySpec("cube", (d,)))
    return C.make_certificate(host, rs, euler_genus(rs)), vdqc


def _folded_embedding(d: int):
    rs = C.folded_cube_genus_embedding(d)
    host = generate(FamilySpec("folded-cube", (d,)))
    return C.make_certificate(host, rs, euler_genus(rs)), None


def _k44():
    rs = C.torus_k44_quadrangulation()
    return C.make_certificate(generate(FamilySpec("complete-bipartite", (4, 4))), rs, 1), None


CONSTRUCTIONS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "guy": (("a", "b"), lambda a, b: (C.guy_planar_quadrangulation(a, b)[1], None)),
    "torus-complete-even": (("r",), lambda r: (C.torus_complete_even(r)[1], None)),
    "torus-complete-odd": (("r",), lambda r: (C.torus_complete_odd(r), None)),
    "torus-kab-b3": (("a",), lambda a: (C.torus_kab_b3(a), None)),
    "torus-k44": ((), _k44),
    "torus-kab-quad": (("a", "b"), lambda a, b: (C.torus_kab_quadrangulation(a, b), None)),
    "cube": (("d",), _cube_embedding),
    "cube-drops": (("d", "k"), lambda d, k: (C.cube_with_drops(d, k), None)),
    "cube-in-kaa": (("d",), lambda d: (C.cube_in_kaa_certificate(d), None)),
    "folded-cube": (("d",), _folded_embedding),
    "folded-drops": (("d", "k"), lambda d, k: (C.folded_cube_with_drops(d, k), None)),
}


def _construct(args):
    params, fn = CONSTRUCTIONS[args.construction]
    values = []
    for name in params:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--{name} is required for {args.construction}")
        values.append(v)
    return fn(*values)


# ---------------------------------------------------------------------------
# commands


def cmd_gen(args) -> int:
    g = generate(_family(args))
    _emit(serialize_graph(g), args.output)
    return EXIT_OK


def invariants_text(g: Graph, t: int) -> str:
    lines = [f"graph: {label(g.family) if g.family else f'p={g.p} q={g.q}'}"]
    gi = girth(g)
    lines += [f"p: {g.p}", f"q: {g.q}", f"girth: {'inf' if gi == float('inf') else gi}"]
    a = alpha(g)
    lines.append(f"alpha: {format_fraction(a) if a is not None else 'n/a'}")
    lines.append(f"t: {t}")
    if is_connected(g):
        ex = excess(g, t)
        lines += [f"delta: {format_fraction(ex.delta)}", f"eps: {ex.eps}"]
        lines.append(f"h: {algebraic_genus(g) if not is_forest(g) else 'n/a'}")
    else:
        comps = components(g)
        total = 0
        for verts in comps:
            sub = Graph.from_edges(
                len(verts),
                ((verts.index(u), verts.index(v)) for u, v in g.edges if u in verts and v in verts),
            )
            total += excess(sub, t).eps
        lines += ["delta: n/a (disconnected)", f"eps_sum_components: {total}", "h: n/a"]
    lines.append(f"cycle_rank: {cycle_rank(g)}")
    known = None
    if g.family is not None:
        try:
            known = genus_formula(g.family)
        except ParameterError:
            known = None
    lines.append(f"genus_formula: {known if known is not None else 'n/a'}")
    return "\n".join(lines) + "\n"


def cmd_invariants(args) -> int:
    g = _load_graph(args.graph)
    _emit(invariants_text(g, args.t), args.output)
    return EXIT_OK


def cmd_embed(args) -> int:
    cert, vdqc = _construct(args)
    text = serialize_embedding(cert.embedding)
    if args.vdqc:
        if vdqc is None:
            raise UsageError(f"{args.construction} does not produce a VDQC")
        text += "".join("# vdqc " + " ".join(map(str, s)) + "\n" for s in vdqc)
    _emit(text, args.output)
    return EXIT_OK


def cmd_certify(args) -> int:
    cert, _ = _construct(args)
    _emit(C.serialize_certificate(cert), args.output)
    return EXIT_OK


def _verify_embedding(text: str) -> tuple[str, bool]:
    rs = parse_embedding(text)
    census = face_census(rs)
    lines = [
        f"p: {rs.p}",
        f"q: {rs.q}",
        f"faces: {len(rs.faces)}",
        "face_census: " + " ".join(f"{k}:{census[k]}" for k in sorted(census)),
        f"genus: {euler_genus(rs)}",
        f"connected: {'yes' if is_connected(rs.graph) else 'no'}",
        "status: PASS",
    ]
    return "\n".join(lines) + "\n", True


def cmd_verify(args) -> int:
    text = _read(args.file)
    base = os.path.dirname(os.path.abspath(args.file))
    first = next((ln.split()[0] for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
    try:
        if first == "CERT":
            rep = search.verify_deletion_certificate(C.parse_certificate(text, base))
            out, ok = rep.render(), rep.ok
        elif first == "DRAWING":
            rep = search.verify_drawing_certificate(search.parse_drawing(text, base))
            out, ok = rep.render(), rep.ok
        else:
            out, ok = _verify_embedding(text)
    except ParseError as exc:
        raise _InputError(f"{args.file}: {exc}") from exc
    _emit(out, args.output)
    return EXIT_OK if ok else EXIT_FAIL


def _outcome_lines(name: str, out: search.SearchOutcome) -> list[str]:
    if out.exact:
        return [f"{name}: {out.value}", "status: exact"]
    up = "?" if out.upper == float("inf") else str(out.upper)
    return [f"{name}: [{out.lower},{up}]", f"status: bounds {out.reason}"]


def cmd_genus(args) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise UsageError("genus needs a connected graph")
    out = search.min_genus_exact(g, _budget(args))
    text = "\n".join(_outcome_lines("genus", out)) + "\n"
    if args.certificate and out.witness is not None:
        _emit(serialize_embedding(out.witness), args.certificate)
    _emit(text, args.output)
    return EXIT_OK if out.exact else EXIT_BOUNDS


def cmd_skewness(args) -> int:
    g = _load_graph(args.graph)
    out = search.skewness_exact(g, args.t, _budget(args))
    lines = [f"t: {args.t}", f"eps: {excess(g, args.t).eps}"] if is_connected(g) else [f"t: {args.t}"]
    lines += _outcome_lines("mu", out)
    if args.certificate and out.exact and out.witness is not None:
        if args.t != 0:
            raise UsageError("--certificate is only supported for t = 0")
        rest = g.without(out.witness)
        ok, rs = search.is_planar(rest)
        assert ok
        cert = C.DeletionCertificate(g, tuple(out.witness), 0, rs)
        _emit(C.serialize_certificate(cert, _source(args.graph, args.certificate)), args.certificate)
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if out.exact else EXIT_BOUNDS


def _source(graph_path: str, cert_path: str) -> str:
    base = os.path.dirname(os.path.abspath(cert_path))
    return os.path.relpath(os.path.abspath(graph_path), base)


def cmd_crossing(args) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise UsageError("crossing needs a connected graph")
    max_k = _int_option(args, "max_k", "SURFSKEW_MAX_K", 6)
    out = search.crossing_number_plane_exact(g, max_k, _budget(args))
    lines = _outcome_lines("nu", out)
    if args.certificate and out.exact:
        _emit(search.serialize_drawing(out.witness, _source(args.graph, args.certificate)), args.certificate)
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if out.exact else EXIT_BOUNDS


def cmd_chain(args) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise UsageError("chain needs a connected graph")
    mu_upper, mu_exact, nu_upper, nu_exact = [], [], [], []
    for path in args.certificate or []:
        text = _read(path)
        base = os.path.dirname(os.path.abspath(path))
        first = text.lstrip().split(None, 1)[0] if text.strip() else ""
        try:
            if first == "DRAWING":
                d = search.parse_drawing(text, base)
                rep = search.verify_drawing_certificate(d)
                host, size = d.graph, d.size
                if args.t != 0:
                    raise UsageError("drawing certificates apply to t = 0 only")
            else:
                c = C.parse_certificate(text, base)
                rep = search.verify_deletion_certificate(c)
                host, size = c.host, c.size
                if c.t > args.t:
                    raise UsageError(f"{path}: certificate is for t={c.t} > {args.t}")
        except ParseError as exc:
            raise _InputError(f"{path}: {exc}") from exc
        if not rep.ok:
            sys.stderr.write(rep.render())
            return EXIT_FAIL
        if host.edges != g.edges or host.p != g.p:
            sys.stderr.write(f"{path}: certificate is for a different graph\n")
            return EXIT_FAIL
        (nu_upper if first == "DRAWING" else mu_upper).append((size, f"certificate:{path}"))
    status = EXIT_OK
    if args.exact:
        budget = _budget(args)
        out = search.skewness_exact(g, args.t, budget)
        if out.exact:
            mu_exact.append((out.value, "search:exhaustive"))
        else:
            status = EXIT_BOUNDS
        if args.t == 0:
            max_k = _int_option(args, "max_k", "SURFSKEW_MAX_K", 6)
            out = search.crossing_number_plane_exact(g, max_k, budget)
            if out.exact:
                nu_exact.append((out.value, "search:exhaustive"))
            else:
                status = EXIT_BOUNDS
    rep = chain_report(
        g,
        args.t,
        label(g.family) if g.family else "",
        mu_upper=mu_upper,
        mu_exact=mu_exact,
        nu_upper=nu_upper,
        nu_exact=nu_exact,
        genus_upper=_known_genus(g.family),
    )
    _emit(render_chain(rep) + summary_line(rep) + "\n", args.output)
    return status


def summary_line(rep) -> str:
    def val(b):
        fmt = lambda x: "?" if x == float("inf") else str(x)
        return fmt(b.lower) if b.exact else f"∈[{fmt(b.lower)},{fmt(b.upper)}]"

    def src(b):
        tags = [t for t in b.provenance if t.startswith(("upper:certificate", "exact:search", "lemma2"))]
        if not tags:
            return ""
        kind = tags[0].split(":")[1] if not tags[0].startswith("lemma2") else "lemma2"
        return " [" + {"certificate": "cert", "search": "search"}.get(kind, kind) + "]"

    mu = val(rep.mu)
    nu = val(rep.nu)
    return (
        f"summary: δ={format_fraction(rep.delta)} ε={rep.eps} "
        f"μ{'=' if rep.mu.exact else ''}{mu}{src(rep.mu)} "
        f"ν{'=' if rep.nu.exact else ''}{nu}{src(rep.nu)}"
    )


# ---------------------------------------------------------------------------
# report suites


def _status(ok: bool, why: str = "") -> str:
    return "ok" if ok else f"FAIL({why})" if why else "FAIL"


def report_planar_bipartite(args) -> tuple[list[str], bool]:
    a_vals = _range(args.a_range or "2..8")
    b_vals = _range(args.b_range or "2..8")
    rows, all_ok = [], True
    for a in a_vals:
        for b in b_vals:
            if b > a:
                continue
            rs, cert = C.guy_planar_quadrangulation(a, b)
            rep = search.verify_deletion_certificate(cert)
            ex = excess(cert.host, 0)
            quads = all(len(f) == 4 for f in rs.faces)
            ok = rep.ok and quads and cert.size == ex.eps and rs.q == 2 * (a + b) - 4
            mu = "-"
            if a * b <= 24:
                out = search.skewness_exact(cert.host, 0)
                mu = str(out.value) if out.exact else "?"
                ok = ok and out.exact and out.value == ex.eps
            all_ok &= ok
            rows.append(
                f"{label(cert.host.family)} edges={rs.q} deleted={cert.size} "
                f"delta0={format_fraction(ex.delta)} eps0={ex.eps} mu0={mu} "
                f"genus={euler_genus(rs)} quads={'yes' if quads else 'no'} status={_status(ok)}"
            )
    return rows, all_ok


def report_torus_complete(args) -> tuple[list[str], bool]:
    rows, all_ok = [], True
    for r in _range(args.r_range or "4..8"):
        for odd in (False, True):
            cert = C.torus_complete_odd(r) if odd else C.torus_complete_even(r)[1]
            want = 2 * r * r - 5 * r - 3 if odd else 2 * r * r - 7 * r
            rep = search.verify_deletion_certificate(cert)
            ex = excess(cert.host, 1)
            tri = all(len(f) == 3 for f in cert.embedding.faces)
            ok = rep.ok and tri and cert.size == want and euler_genus(cert.embedding) == 1
            all_ok &= ok
            rows.append(
                f"{label(cert.host.family)} r={r} t=1 deleted={cert.size} "
                f"formula={'2r^2-5r-3' if odd else '2r^2-7r'}={want} "
                f"delta1={format_fraction(ex.delta)} eps1={ex.eps} "
                f"genus={euler_genus(cert.embedding)} triangulation={'yes' if tri else 'no'} "
                f"status={_status(ok)}"
            )
    return rows, all_ok


def report_cube(args) -> tuple[list[str], bool]:
    rows, all_ok = [], True
    for d in _range(args.d_range or "3..6"):
        gamma = genus_formula(FamilySpec("cube", (d,)))
        rs, vdqc = C.cube_genus_embedding(d)
        quads = all(len(f) == 4 for f in rs.faces)
        ok = euler_genus(rs) == gamma and quads
        all_ok &= ok
        rows.append(
            f"Q_{d} genus_formula={gamma} genus={euler_genus(rs)} "
            f"quadrangulation={'yes' if quads else 'no'} vdqc={len(vdqc)} status={_status(ok)}"
        )
        for k in range(gamma + 1):
            cert = C.cube_with_drops(d, k)
            rep = search.verify_deletion_certificate(cert)
            ex = excess(cert.host, gamma - k)
            genus = euler_genus(cert.embedding)
            conn = is_connected(cert.embedding.graph)
            ok = rep.ok and cert.size == 4 * k == ex.eps and genus == gamma - k and conn
            all_ok &= ok
            rows.append(
                f"Q_{d} k={k} t={gamma - k} deleted={cert.size} "
                f"delta={format_fraction(ex.delta)} eps={ex.eps} genus={genus} "
                f"connected={'yes' if conn else 'no'} status={_status(ok)}"
            )
    return rows, all_ok


def report_folded_cube(args) -> tuple[list[str], bool]:
    rows, all_ok = [], True
    for d in _range(args.d_range or "3..6"):
        spec = FamilySpec("folded-cube", (d,))
        gamma = genus_formula(spec)
        try:
            rs = C.folded_cube_genus_embedding(d)
            g = euler_genus(rs)
            ok, why = g == gamma, ""
        except C.FoldedCubeError as exc:
            g, ok, why = exc.genus, False, f"constructed genus {exc.genus}"
        all_ok &= ok
        rows.append(f"F_{d} genus_formula={gamma} genus={g} status={_status(ok, why)}")
        for k in range(gamma + 1):
            t = gamma - k
            ex = excess(generate(spec), t)
            try:
                cert = C.folded_cube_with_drops(d, k)
                rep = search.verify_deletion_certificate(cert)
                genus = euler_genus(cert.embedding)
                ok = rep.ok and cert.size == 4 * k == ex.eps and genus <= t
                fields = f"deleted={cert.size} genus={genus}"
                why = ""
            except ConstructionError as exc:
                ok, fields, why = False, "deleted=- genus=-", "no construction"
            all_ok &= ok
            rows.append(
                f"F_{d} k={k} t={t} {fields} delta={format_fraction(ex.delta)} "
                f"eps={ex.eps} status={_status(ok, why)}"
            )
    return rows, all_ok


def report_circulant(args) -> tuple[list[str], bool]:
    """Rows for c(n,k) = C(n, {1,k}) with n = 2sk; the claim checked is
    ``delta0 = 4 = mu0``."""
    rows, all_ok = [], True
    cases = [(8, 2), (12, 3), (16, 4), (18, 3), (24, 3), (24, 4)]
    if args.n_range:
        cases = [(n, k) for n in _range(args.n_range) for k in _range(args.jumps or "2..3")
                 if 2 <= k < n / 2]
    for n, k in cases:
        g = generate(FamilySpec("circulant", (n, 1, k)))
        ex = excess(g, 0)
        out = search.skewness_exact(g, 0, _budget(args))
        mu = str(out.value) if out.exact else "?"
        claim = n % (2 * k) == 0 and n // (2 * k) >= 2
        why = ""
        if not out.exact:
            why = "search bounds"
        elif claim and ex.delta != 4:
            why = f"delta0 {format_fraction(ex.delta)} != 4"
        elif claim and out.value != 4:
            why = f"mu0 {out.value} != 4"
        ok = not why
        all_ok &= ok
        rows.append(
            f"c({n},{k}) girth={girth(g)} delta0={format_fraction(ex.delta)} eps0={ex.eps} "
            f"mu0={mu} n=2sk={'yes' if claim else 'no'} status={_status(ok, why)}"
        )
    if args.exact:
        g = generate(FamilySpec("circulant", (10, 1, 3)))
        out = search.crossing_number_plane_exact(g, _int_option(args, "max_k", "SURFSKEW_MAX_K", 6), _budget(args))
        ok = out.exact and out.value == 4
        all_ok &= ok
        nu = str(out.value) if out.exact else "?"
        rows.append(f"c(10,3) nu0={nu} k+1=4 status={_status(ok)}")
    return rows, all_ok


SUITES = {
    "planar-bipartite": report_planar_bipartite,
    "torus-complete": report_torus_complete,
    "cube": report_cube,
    "folded-cube": report_folded_cube,
    "circulant": report_circulant,
}


def cmd_report(args) -> int:
    rows, ok = SUITES[args.suite](args)
    text = f"suite: {args.suite}\n" + "".join(r + "\n" for r in rows)
    text += f"result: {'all ok' if ok else 'failures present'}\n"
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="surfskew", description="Euler excess, skewness certificates and exact oracles.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    out = _Parser(add_help=False)
    out.add_argument("-o", "--output", help="output file (default stdout)")
    budget = _Parser(add_help=False)
    budget.add_argument("--budget-nodes", type=int, help="search node budget (env SURFSKEW_BUDGET_NODES)")
    maxk = _Parser(add_help=False)
    maxk.add_argument("--max-k", type=int, help="largest crossing count tried (env SURFSKEW_MAX_K)")
    params = _Parser(add_help=False)
    for name in ("n", "a", "b", "d", "r", "k"):
        params.add_argument(f"--{name}", type=int)
    params.add_argument("--jumps", help="circulant jumps, e.g. 1,3")

    s = sub.add_parser("gen", parents=[out, params], help="write a family graph file")
    s.add_argument("--family", help="family name, or a full spec such as 'cube 5'")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("invariants", parents=[out], help="excess and genus formulas of a graph file")
    s.add_argument("graph")
    s.add_argument("--t", type=int, default=0)
    s.set_defaults(func=cmd_invariants)

    for name, fn, extra in (("embed", cmd_embed, True), ("certify", cmd_certify, False)):
        s = sub.add_parser(name, parents=[out, params], help=f"{name} a construction")
        s.add_argument("construction", choices=sorted(CONSTRUCTIONS))
        if extra:
            s.add_argument("--vdqc", action="store_true", help="append the VDQC as comment lines")
        s.set_defaults(func=fn)

    s = sub.add_parser("verify", parents=[out], help="re-verify a certificate or embedding file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("genus", parents=[out, budget], help="exact genus by rotation search")
    s.add_argument("graph")
    s.add_argument("--certificate", help="write the best embedding here")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("skewness", parents=[out, budget], help="exact skewness by deletion search")
    s.add_argument("graph")
    s.add_argument("--t", type=int, default=0)
    s.add_argument("--certificate", help="write a deletion certificate here")
    s.set_defaults(func=cmd_skewness)

    s = sub.add_parser("crossing", parents=[out, budget, maxk], help="exact plane crossing number")
    s.add_argument("graph")
    s.add_argument("--certificate", help="write a drawing certificate here")
    s.set_defaults(func=cmd_crossing)

    s = sub.add_parser("chain", parents=[out, budget, maxk], help="delta <= eps <= mu <= nu report")
    s.add_argument("graph")
    s.add_argument("--t", type=int, default=0)
    s.add_argument("--certificate", action="append", help="certificate file (repeatable)")
    s.add_argument("--exact", action="store_true", help="run the exhaustive oracles")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("report", parents=[out, budget, maxk], help="reproduce a table of claims")
    s.add_argument("--suite", required=True, choices=sorted(SUITES))
    s.add_argument("--a", dest="a_range")
    s.add_argument("--b", dest="b_range")
    s.add_argument("--d", dest="d_range")
    s.add_argument("--r", dest="r_range")
    s.add_argument("--n", dest="n_range")
    s.add_argument("--jumps")
    s.add_argument("--exact", action="store_true", help="include exhaustive crossing rows")
    s.set_defaults(func=cmd_report)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except _InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NOINPUT
    except _OutputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CANTCREAT
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NOINPUT
    except (ParameterError, ConstructionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE if isinstance(exc, ParameterError) else EXIT_FAIL
    except SurfskewError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
