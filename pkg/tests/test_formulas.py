from fractions import Fraction

import networkx as nx
import pytest

from surfskew.errors import IntegrityError, ParameterError
from surfskew.formulas import (
    Bounds,
    ChainReport,
    algebraic_genus,
    alpha,
    b_min_bipartite_quad,
    chain_report,
    euler_genus_lower_bound,
    excess,
    genus_formula,
    render_chain,
    t_o,
    t_q,
    tau_lookup,
    xi,
)
from surfskew.graph import (
    Complete,
    CompleteBipartite,
    Cube,
    FamilySpec,
    FoldedCube,
    Graph,
    Octahedron,
    Path,
    generate,
)

G = lambda spec: generate(spec)  # noqa: E731


def nx_delta(g: Graph, t: int) -> Fraction:
    """Independent excess: networkx girth and plain rational arithmetic."""
    h = nx.Graph(g.edges)
    h.add_nodes_from(range(g.p))
    gi = nx.girth(h)
    return g.q - Fraction(gi, gi - 2) * (g.p - 2 + 2 * t)


def test_paper_values():
    assert excess(G(CompleteBipartite(5, 3)), 0).delta == 3
    assert excess(G(Complete(9)), 2).delta == 3
    pete = Graph.from_edges(10, nx.petersen_graph().edges)
    ex = excess(pete, 0)
    assert ex.delta == Fraction(5, 3) and ex.eps == 2
    assert excess(G(Path(6)), 7) == excess(G(Path(6)), 0)
    assert excess(G(Path(6)), 7).eps == 0


@pytest.mark.parametrize("spec", [Complete(7), CompleteBipartite(4, 6), Cube(5), FoldedCube(4), Octahedron(5)], ids=str)
@pytest.mark.parametrize("t", [0, 1, 3])
def test_excess_matches_independent_oracle(spec, t):
    g = G(spec)
    ex = excess(g, t)
    assert ex.delta == nx_delta(g, t)
    assert ex.eps >= 0 and ex.eps >= ex.delta
    if ex.delta >= 0:
        assert ex.eps < ex.delta + 1


def test_step_identity():
    for spec in [Complete(8), Cube(6), CompleteBipartite(5, 7)]:
        g = G(spec)
        a = alpha(g)
        for t in range(4):
            assert excess(g, t + 1).delta == excess(g, t).delta - 2 * a


def test_kab_planar_excess():
    for a in range(2, 13):
        for b in range(2, 13):
            assert excess(G(CompleteBipartite(a, b)), 0).delta == (a - 2) * (b - 2)


def test_folded_minus_cube():
    for d in range(3, 9):
        for t in range(3):
            diff = excess(G(FoldedCube(d)), t).delta - excess(G(Cube(d)), t).delta
            assert diff == 2 ** (d - 1)


def test_disconnected_rejected():
    with pytest.raises(ParameterError):
        excess(Graph.from_edges(4, [(0, 1), (2, 3)]), 0)


def test_algebraic_genus():
    assert algebraic_genus(G(Complete(9))) == 2
    assert algebraic_genus(G(CompleteBipartite(5, 5))) == 2
    assert algebraic_genus(G(Complete(4))) == 0
    with pytest.raises(ParameterError):
        algebraic_genus(G(Path(3)))
    for n in range(5, 20):
        h = algebraic_genus(G(Complete(n)))
        assert h == (n - 3) * (n - 4) // 12
        assert genus_formula(Complete(n)) - h == (1 if (n - 3) * (n - 4) % 12 else 0)


def test_euler_lower_bound():
    assert euler_genus_lower_bound(G(Cube(4))) == 1
    assert euler_genus_lower_bound(G(Complete(5))) == 1
    assert euler_genus_lower_bound(G(CompleteBipartite(4, 4))) == 1
    assert euler_genus_lower_bound(G(Path(5))) == 0
    for spec in [Complete(n) for n in range(3, 13)] + [CompleteBipartite(a, 5) for a in range(2, 9)]:
        g = G(spec)
        lb = euler_genus_lower_bound(g)
        assert excess(g, lb).delta <= 0
        assert lb == 0 or excess(g, lb - 1).delta > 0


def test_genus_formula():
    assert genus_formula(Complete(7)) == 1
    assert genus_formula(Cube(4)) == 1
    assert genus_formula(FoldedCube(4)) == 3
    assert genus_formula(Octahedron(4)) == 1
    assert genus_formula(CompleteBipartite(3, 3)) == 1
    with pytest.raises(ParameterError):
        genus_formula(FamilySpec("cycle", (5,)))


@pytest.mark.parametrize(
    "spec", [Complete(n) for n in range(3, 12)] + [Cube(d) for d in range(3, 9)] + [Octahedron(r) for r in (3, 4, 6, 7)]
    + [CompleteBipartite(a, b) for a in range(2, 7) for b in range(2, 7)] + [FoldedCube(d) for d in (3, 5, 7)],
    ids=str,
)
def test_eps_vanishes_at_formula_genus(spec):
    g = G(spec)
    gam = genus_formula(spec)
    assert excess(g, gam).eps == 0
    epss = [excess(g, t).eps for t in range(gam + 2)]
    assert epss == sorted(epss, reverse=True)


def test_special_points():
    assert t_o(4) == 1
    assert excess(G(Complete(8)), t_o(4)).delta == 4
    for r in (4, 6, 7, 9, 10):
        assert excess(G(Complete(2 * r)), t_o(r)).delta == r
    assert t_q(4) == 1 and t_q(3) == 0 and t_q(6) == 17
    assert [b_min_bipartite_quad(t) for t in (0, 1, 2, 4)] == [4, 8, 10, 12]
    assert xi(1) == 4 and xi(4) == 6
    assert [tau_lookup(t) for t in (0, 1, 2)] == [4, 7, 10]
    for bad in (lambda: t_o(5), lambda: xi(2), lambda: tau_lookup(3), lambda: t_q(2)):
        with pytest.raises(ParameterError):
            bad()


def test_chain_cube_certificate():
    rep = chain_report(G(Cube(5)), 4, mu_upper=[(4, "certificate:q5")])
    assert rep.delta == 4 and rep.eps == 4 and rep.mu.exact and rep.mu.lower == 4
    assert rep.delta_eq_eps and rep.eps_eq_mu and not rep.mu_eq_nu
    assert "upper:certificate:q5" in rep.mu.provenance


def test_chain_lemma2():
    rep = chain_report(G(Complete(5)), 1, genus_upper=(1, "formula:ringel-youngs"))
    assert rep.eps == 0 and rep.mu == Bounds(0, 0, rep.mu.provenance) and rep.nu.upper == 0
    assert "lemma2:formula:ringel-youngs" in rep.nu.provenance


def test_chain_k53():
    rep = chain_report(
        G(CompleteBipartite(5, 3)), 0, mu_exact=[(3, "search:exhaustive")], nu_exact=[(4, "search:exhaustive")]
    )
    assert (rep.delta, rep.eps, rep.mu.lower, rep.nu.lower) == (3, 3, 3, 4)
    assert rep.eps_eq_mu and not rep.mu_eq_nu
    text = render_chain(rep)
    assert "chain: delta=3 <= eps=3 <= mu=3 <= nu=4" in text
    assert text.index("graph:") < text.index("delta:") < text.index("mu:") < text.index("nu:")


def test_chain_integrity_errors():
    with pytest.raises(IntegrityError):
        chain_report(G(CompleteBipartite(5, 3)), 0, mu_exact=[(2, "bogus")])
    with pytest.raises(IntegrityError):
        chain_report(G(CompleteBipartite(5, 3)), 0, mu_upper=[(1, "bogus")])
    bad = ChainReport("x", 0, Fraction(3), 3, Bounds(3, 3), Bounds(2, 2))
    with pytest.raises(IntegrityError):
        bad.check()
