"""Euler excess, integer excess, algebraic genus and closed-form genera.

For a connected graph with ``p`` vertices, ``q`` edges and girth ``g``,
``alpha = g / (g - 2)`` and the Euler excess over the orientable surface of
genus ``t`` is

    delta_t = q - alpha * (p - 2 + 2t)

(zero for forests). The integer excess is ``eps_t = max(0, ceil(delta_t))``.
All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IntegrityError, ParameterError
from .graph import FamilySpec, Graph, girth, is_connected

INF = math.inf


@dataclass(frozen=True)
class Excess:
    delta: Fraction
    eps: int


def alpha(g: Graph) -> Fraction | None:
    """``g/(g-2)`` for the girth ``g``; None for forests."""
    gi = girth(g)
    if gi == INF:
        return None
    return Fraction(gi, gi - 2)


def excess(g: Graph, t: int) -> Excess:
    if t < 0:
        raise ParameterError("t must be >= 0")
    if not is_connected(g):
        raise ParameterError("excess is defined for connected graphs; split into components")
    a = alpha(g)
    if a is None:
        return Excess(Fraction(0), 0)
    delta = g.q - a * (g.p - 2 + 2 * t)
    return Excess(delta, max(0, math.ceil(delta)))


def algebraic_genus(g: Graph) -> int:
    """Largest ``t`` with ``delta_t >= 0``."""
    if not is_connected(g):
        raise ParameterError("algebraic genus needs a connected graph")
    a = alpha(g)
    if a is None:
        raise ParameterError("algebraic genus is undefined for forests")
    h = math.floor((g.q / a - g.p + 2) / 2)
    if h < 0:
        raise ParameterError("delta_0 < 0: no t has non-negative excess")
    return h


def euler_genus_lower_bound(g: Graph) -> int:
    """Least ``t >= 0`` with ``delta_t <= 0``; 0 for forests."""
    a = alpha(g)
    if a is None:
        return 0
    d0 = excess(g, 0).delta
    return max(0, math.ceil(d0 / (2 * a)))


def _ceil_div(n: int, d: int) -> int:
    return -(-n // d)


def genus_formula(spec: FamilySpec) -> int:
    """Closed-form orientable genus for the supported families.

    ``folded-cube`` returns ``1 + (d-3) 2^(d-3)``, the Euler lower bound
    attained by a quadrangulation. That quadrangulation exists for odd
    ``d`` (built in :mod:`surfskew.constructions`); for ``d = 4`` it does
    not exist, so the true genus of ``F_4`` is larger (see the tests).
    """
    kind, ps = spec.kind, spec.params
    if kind == "complete" and ps[0] >= 3:
        n = ps[0]
        return _ceil_div((n - 3) * (n - 4), 12)
    if kind == "complete-bipartite" and min(ps) >= 2:
        a, b = ps
        return _ceil_div((a - 2) * (b - 2), 4)
    if kind == "cube" and ps[0] >= 3:
        return t_q(ps[0])
    if kind == "folded-cube" and ps[0] >= 3:
        d = ps[0]
        return 1 + (d - 3) * 2 ** (d - 3)
    if kind == "octahedron" and ps[0] >= 3:
        r = ps[0]
        return _ceil_div((r - 1) * (r - 3), 3)
    raise ParameterError(f"no genus formula for {spec}")


def t_o(r: int) -> int:
    """``(r-1)(r-3)/3``, integral when ``r`` is not 2 mod 3."""
    if r < 3 or r % 3 == 2:
        raise ParameterError("t_O needs r >= 3 with r not 2 mod 3")
    return (r - 1) * (r - 3) // 3


def t_q(d: int) -> int:
    """Genus of the ``d``-cube, ``1 + (d-4) 2^(d-3)``."""
    if d < 3:
        raise ParameterError("t_Q needs d >= 3")
    if d == 3:
        return 0
    return 1 + (d - 4) * 2 ** (d - 3)


def b_min_bipartite_quad(t: int) -> int:
    """``ceil(4 + sqrt(16 - 8 chi))`` with ``chi = 2 - 2t``, i.e. ``ceil(4 + 4 sqrt t)``."""
    if t < 0:
        raise ParameterError("t must be >= 0")
    # ceil(4 sqrt t) computed exactly: smallest m with m^2 >= 16 t
    r = math.isqrt(16 * t)
    if r * r < 16 * t:
        r += 1
    return 4 + r


def xi(t: int) -> int:
    """``r`` for ``t = (r-2)^2/4`` with ``r`` even, i.e. ``2 + 2 sqrt t``."""
    s = math.isqrt(t) if t >= 0 else -1
    if s < 0 or s * s != t:
        raise ParameterError("xi is only defined when t is a perfect square")
    return 2 + 2 * s


_TAU = {0: 4, 1: 7, 2: 10}


def tau_lookup(t: int) -> int:
    """Least order of a triangulation of the genus-``t`` surface, ``t <= 2``."""
    if t not in _TAU:
        raise ParameterError("tau is tabulated only for t in {0, 1, 2}")
    return _TAU[t]


@dataclass(frozen=True)
class Bounds:
    lower: int | float
    upper: int | float
    provenance: tuple[str, ...] = ()

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


@dataclass
class ChainReport:
    """The chain ``delta <= eps <= mu <= nu`` for one graph and surface."""

    graph_id: str
    t: int
    delta: Fraction
    eps: int
    mu: Bounds
    nu: Bounds
    notes: list[str] = field(default_factory=list)

    @property
    def delta_eq_eps(self) -> bool:
        return self.delta == self.eps

    @property
    def eps_eq_mu(self) -> bool:
        return self.mu.exact and self.mu.lower == self.eps

    @property
    def mu_eq_nu(self) -> bool:
        return self.mu.exact and self.nu.exact and self.mu.lower == self.nu.lower

    def check(self) -> None:
        """Raise :class:`IntegrityError` unless every link of the chain holds."""
        if not self.delta <= self.eps:
            raise IntegrityError(f"delta {self.delta} > eps {self.eps}")
        for name, b in (("mu", self.mu), ("nu", self.nu)):
            if b.lower > b.upper:
                raise IntegrityError(f"{name} lower {b.lower} > upper {b.upper}")
            if b.lower < self.eps:
                raise IntegrityError(f"{name} lower {b.lower} below eps {self.eps}")
        if self.mu.lower > self.nu.upper:
            raise IntegrityError(f"mu lower {self.mu.lower} > nu upper {self.nu.upper}")


def _fmt(x: int | float) -> str:
    return "?" if x == INF else str(x)


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def chain_report(
    g: Graph,
    t: int,
    graph_id: str = "",
    mu_upper: list[tuple[int, str]] | None = None,
    mu_exact: list[tuple[int, str]] | None = None,
    nu_upper: list[tuple[int, str]] | None = None,
    nu_lower: list[tuple[int, str]] | None = None,
    nu_exact: list[tuple[int, str]] | None = None,
    genus_upper: tuple[int, str] | None = None,
) -> ChainReport:
    """Assemble bounds from formulas, certificates and searches.

    Each evidence item is ``(value, provenance_tag)``. ``genus_upper`` is a
    known upper bound on the genus (from a formula or a construction); when
    ``t`` reaches it every quantity vanishes. ``mu <= nu`` is used to carry
    upper bounds from nu to mu and lower bounds from mu to nu.
    """
    ex = excess(g, t)
    mu_lo, mu_hi = ex.eps, INF
    nu_lo, nu_hi = ex.eps, INF
    mu_tags = ["lower:excess"]
    nu_tags = ["lower:excess"]
    if genus_upper is not None and t >= genus_upper[0]:
        mu_hi = nu_hi = 0
        mu_tags.append(f"lemma2:{genus_upper[1]}")
        nu_tags.append(f"lemma2:{genus_upper[1]}")
    for v, tag in mu_upper or []:
        if v < mu_hi:
            mu_hi = v
        mu_tags.append(f"upper:{tag}")
    for v, tag in mu_exact or []:
        mu_lo, mu_hi = max(mu_lo, v), min(mu_hi, v)
        mu_tags.append(f"exact:{tag}")
        if v < ex.eps or (mu_hi < mu_lo):
            raise IntegrityError(f"exact mu {v} contradicts other bounds")
    for v, tag in nu_exact or []:
        nu_lo, nu_hi = max(nu_lo, v), min(nu_hi, v)
        nu_tags.append(f"exact:{tag}")
    for v, tag in nu_lower or []:
        nu_lo = max(nu_lo, v)
        nu_tags.append(f"lower:{tag}")
    for v, tag in nu_upper or []:
        nu_hi = min(nu_hi, v)
        nu_tags.append(f"upper:{tag}")
    if nu_hi < mu_hi:
        mu_hi = nu_hi
        mu_tags.append("upper:nu")
    if mu_lo > nu_lo:
        nu_lo = mu_lo
    rep = ChainReport(
        graph_id or _graph_id(g),
        t,
        ex.delta,
        ex.eps,
        Bounds(mu_lo, mu_hi, tuple(mu_tags)),
        Bounds(nu_lo, nu_hi, tuple(nu_tags)),
    )
    rep.check()
    return rep


def _graph_id(g: Graph) -> str:
    return str(g.family) if g.family is not None else f"graph p={g.p} q={g.q}"


def render_chain(rep: ChainReport) -> str:
    """Line-oriented rendering with a fixed key order."""

    def rng(b: Bounds) -> str:
        if b.exact:
            return _fmt(b.lower)
        return f"[{_fmt(b.lower)},{_fmt(b.upper)}]"

    lines = [
        f"graph: {rep.graph_id}",
        f"t: {rep.t}",
        f"delta: {_fmt_frac(rep.delta)}",
        f"eps: {rep.eps}",
        f"mu: {rng(rep.mu)}",
        f"mu_provenance: {' '.join(rep.mu.provenance)}",
        f"nu: {rng(rep.nu)}",
        f"nu_provenance: {' '.join(rep.nu.provenance)}",
        f"delta=eps: {_yn(rep.delta_eq_eps)}",
        f"eps=mu: {_yn(rep.eps_eq_mu)}",
        f"mu=nu: {_yn(rep.mu_eq_nu)}",
        f"chain: delta={_fmt_frac(rep.delta)} <= eps={rep.eps} <= mu={rng(rep.mu)} <= nu={rng(rep.nu)}",
    ]
    return "\n".join(lines) + "\n"


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def format_fraction(x: Fraction) -> str:
    return _fmt_frac(x)
