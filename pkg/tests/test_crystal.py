import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import reduce_quadratic, signature_oracle
from spinbranch.crystal import (
    CrystalGraph,
    SignedNode,
    cartan,
    cogood_node,
    crystal_graph,
    e_tilde,
    epsilon,
    eps_vector,
    f_tilde,
    good_node,
    path_to_empty,
    phi,
    reduced_signature,
    signature,
    stembridge_check,
)
from spinbranch.partitions import EMPTY, Char, Partition, enumerate_rpp, is_restricted

WORKED = Partition((16, 11, 10, 10, 9, 5, 1))
C5 = Char(5)


def _rpp_strategy(p, nmax):
    return st.integers(0, nmax).flatmap(lambda n: st.sampled_from(enumerate_rpp(Char(p), n)))


def _residues(c, lam):
    return list(c.residues(lam))


class TestWorkedExample:
    def test_signature(self):
        sig = signature(C5, WORKED, 0)
        assert sig.signs == "-,-,+,+,-,-,-"
        assert [tuple(x) for x in sig.nodes] == [(7, 1), (6, 5), (6, 6), (5, 10), (2, 11), (1, 15), (1, 16)]
        # the node (1,15) is the left member of a two-node removal
        assert [e.kind for e in sig.entries][5] == "R2"

    def test_reduced(self):
        red = reduced_signature(C5, WORKED, 0)
        assert red.signs == "-,-,-"
        assert [tuple(x) for x in red.nodes] == [(7, 1), (6, 5), (1, 16)]
        assert epsilon(C5, WORKED, 0) == 3

    def test_e_tilde(self):
        assert e_tilde(C5, WORKED, 0) == (15, 11, 10, 10, 9, 5, 1)


class TestSmallExamples:
    def test_empty(self):
        sig = signature(C5, EMPTY, 0)
        assert sig.signs == "+" and tuple(sig.nodes[0]) == (1, 1)
        assert epsilon(C5, EMPTY, 0) == 0
        assert e_tilde(C5, EMPTY, 0) is None

    def test_321(self):
        lam = Partition((3, 2, 1))
        assert signature(C5, lam, 2).entries == ()
        red = reduced_signature(C5, lam, 0)
        assert red.signs == "-" and tuple(red.nodes[0]) == (3, 1)
        assert eps_vector(C5, lam) == [1, 0, 0]
        assert e_tilde(C5, lam, 0) == (3, 2)
        assert e_tilde(C5, lam, 1) is None

    def test_f_tilde(self):
        assert f_tilde(C5, Partition((3, 2)), 0) == (3, 2, 1)
        c0 = Char(0)
        assert f_tilde(c0, Partition((6,)), 6) == (7,)

    def test_signed_node_consistency(self):
        with pytest.raises(ValueError):
            SignedNode((1, 1), "+", "R1")


class TestCartan:
    def test_displayed_entries(self):
        assert cartan(Char(7), 0, 1) == -2
        assert cartan(Char(7), 1, 0) == -1
        assert cartan(Char(7), 2, 3) == -2
        assert cartan(Char(7), 3, 2) == -1
        assert cartan(Char(3), 0, 1) == -4
        assert cartan(Char(3), 1, 0) == -1
        assert cartan(Char(0), 5, 7) == 0
        assert cartan(Char(0), 0, 1) == -2 and cartan(Char(0), 5, 6) == -1

    def test_diagonal(self):
        for p in (3, 5, 7, 0):
            assert cartan(Char(p), 1, 1) == 2

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            cartan(Char(5), 0, 3)


@pytest.mark.parametrize("p", [3, 5, 7, 0])
def test_signature_matches_node_set_oracle(p):
    c = Char(p)
    for n in range(13):
        for lam in enumerate_rpp(c, n):
            for i in _residues(c, lam):
                expected = signature_oracle(p, lam, i)
                got = [((e.node.row, e.node.col), e.sign) for e in signature(c, lam, i).entries]
                assert got == expected, (lam, i)
                reduced = [((e.node.row, e.node.col), e.sign) for e in reduced_signature(c, lam, i).entries]
                assert reduced == reduce_quadratic(expected)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_reduced_shape_and_operator_invariants(p):
    c = Char(p)
    for n in range(19):
        for lam in enumerate_rpp(c, n):
            total = 0
            for i in _residues(c, lam):
                signs = reduced_signature(c, lam, i).signs.replace(",", "")
                assert "+-" not in signs
                total += epsilon(c, lam, i)
                mu = e_tilde(c, lam, i)
                if mu is not None:
                    assert good_node(c, lam, i).kind == "R1"
                    assert is_restricted(c, mu) and mu.n == n - 1
                    assert f_tilde(c, mu, i) == lam
                nu = f_tilde(c, lam, i)
                if nu is not None:
                    assert cogood_node(c, lam, i).kind == "A1"
                    assert e_tilde(c, nu, i) == lam
            assert total >= 1 or n == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7]).flatmap(lambda p: st.tuples(st.just(p), _rpp_strategy(p, 18))))
def test_epsilon_phi_balance(pl):
    p, lam = pl
    c = Char(p)
    for i in _residues(c, lam):
        sig = signature(c, lam, i)
        cancelled = (len(sig.entries) - epsilon(c, lam, i) - phi(c, lam, i)) // 2
        assert sig.count("-") - cancelled == epsilon(c, lam, i)
        assert sig.count("+") - cancelled == phi(c, lam, i)


class TestGraph:
    def test_level_sizes(self):
        assert crystal_graph(Char(3), 5).level_sizes() == [1, 1, 1, 1, 1, 2]

    def test_first_edge(self):
        g = crystal_graph(Char(5), 2)
        assert (EMPTY, 0, Partition((1,))) in g.edges

    @pytest.mark.parametrize("p", [3, 5, 7, 0])
    def test_structure(self, p):
        c = Char(p)
        g = crystal_graph(c, 12)
        seen = set()
        for src, i, dst in g.edges:
            assert src.n == dst.n - 1
            assert (dst, i) not in seen
            seen.add((dst, i))
        sources = [(src, i) for src, i, _ in g.edges]
        assert len(sources) == len(set(sources))
        for lam in g.vertices:
            assert path_to_empty(c, lam) is not None

    def test_dot_is_deterministic(self):
        a = crystal_graph(Char(3), 6).to_dot()
        b = crystal_graph(Char(3), 6).to_dot()
        assert a == b
        assert 'v0 [label="()"]' in a
        assert '[label="0"]' in a

    def test_parent_edges(self):
        g = crystal_graph(C5, 6)
        assert g.parent_edges(Partition((3, 2, 1))) == [(Partition((3, 2)), 0, Partition((3, 2, 1)))]
        assert isinstance(g, CrystalGraph)


@pytest.mark.parametrize("p,nmax", [(3, 14), (5, 14), (0, 12)])
def test_stembridge(p, nmax):
    report = stembridge_check(Char(p), nmax)
    assert report.passed, report.counterexamples[:3]
    assert report.checked == sum(len(enumerate_rpp(Char(p), m)) for m in range(nmax + 1))
