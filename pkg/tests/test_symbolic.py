import itertools

import pytest
from hypothesis import given, settings

from oracles import brute_symbolic_member
from strategies import hypergraphs
from sympow.corpus import complete_multipartite
from sympow.errors import CrossCheckError, NotThreePartite, TooLarge
from sympow.hypergraph import load_hypergraph, validate_simple
from sympow.monomials import (
    Monomial,
    colon,
    contains,
    equals,
    ideal_sum,
    is_subset,
    minimalize,
    power,
)
from sympow.paths import path_hypergraph_cycle
from sympow.symbolic import (
    Verdict,
    check_equality,
    classify_3partite_equality,
    complementing_edge,
    edge_ideal,
    second_symbolic_via_bad,
    sextics_outside_square,
    sullivant_member,
    symbolic_power,
)


def sextic(n):
    return Monomial((1,) * n)


class TestEdgeIdeal:
    def test_triangle(self, tri):
        assert edge_ideal(tri).format(tri.vertex_names) == ["a*b", "a*c", "b*c"]

    def test_bad(self, B):
        assert edge_ideal(B).format(B.vertex_names) == ["x1*x2*x3", "x2*x5*x6", "x3*x4*x5"]


class TestSymbolicPower:
    def test_first_power_is_the_ideal(self, B, c5):
        for H in (B, c5):
            assert equals(symbolic_power(H, 1), edge_ideal(H))

    def test_bad_square(self, B):
        expected = ideal_sum(power(edge_ideal(B), 2), minimalize([sextic(6)]))
        assert equals(symbolic_power(B, 2), expected)

    def test_triangle_square(self, tri):
        # abc lies in every (a,b)^2-type prime power but not in I^2
        report = check_equality(tri, 2)
        assert not report.equal
        assert [g.format(tri.vertex_names) for g in report.extra_generators] == ["a*b*c"]

    def test_guards(self, B):
        with pytest.raises(TooLarge):
            symbolic_power(B, 2, max_vertices=5)
        with pytest.raises(TooLarge):
            symbolic_power(B, 2, max_covers=3)
        with pytest.raises(ValueError):
            symbolic_power(B, 0)

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(max_vertices=5, max_edges=5, max_edge_size=3))
    def test_matches_all_covers(self, H):
        for k in (1, 2, 3):
            S = symbolic_power(H, k)
            for exps in itertools.product(range(3), repeat=H.num_vertices):
                assert contains(S, Monomial(exps)) == brute_symbolic_member(H, exps, k)

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(max_vertices=6, max_edges=5, max_edge_size=3))
    def test_ordinary_inside_symbolic(self, H):
        I = edge_ideal(H)
        for n in (1, 2, 3):
            assert is_subset(power(I, n), symbolic_power(H, n))

    @settings(max_examples=30, deadline=None)
    @given(hypergraphs(max_vertices=6, max_edges=5, max_edge_size=3))
    def test_colon_by_vertex_lowers_order(self, H):
        # dividing by a variable drops at most one level of symbolic order
        S3, S2 = symbolic_power(H, 3), symbolic_power(H, 2)
        for v in range(H.num_vertices):
            x = Monomial.from_support(H.num_vertices, [v])
            assert is_subset(colon(S3, x), S2)


class TestSullivant:
    def test_bad(self, B):
        assert sullivant_member(B, sextic(6), 2)
        assert not sullivant_member(B, sextic(6), 3)
        assert not sullivant_member(B, Monomial((1, 1, 1, 0, 0, 0)), 2)

    def test_rejects_k0(self, B):
        with pytest.raises(ValueError):
            sullivant_member(B, sextic(6), 0)

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(max_vertices=5, max_edges=5, max_edge_size=3))
    def test_matches_brute_force(self, H):
        for k in (1, 2, 3):
            for exps in itertools.product(range(3), repeat=H.num_vertices):
                assert sullivant_member(H, Monomial(exps), k) == brute_symbolic_member(H, exps, k)


class TestEquality:
    @pytest.mark.parametrize("sizes", [(1, 1, 1), (2, 1, 1), (2, 2, 2)])
    @pytest.mark.parametrize("n", [2, 3])
    def test_complete_tripartite(self, sizes, n):
        assert check_equality(complete_multipartite(sizes), n).equal

    def test_bipartite_graphs(self, c5):
        assert check_equality(complete_multipartite([2, 3]), 3).equal
        assert check_equality(path_hypergraph_cycle(6, 2), 3).equal
        # odd cycles of length 2k+1 agree up to n = k
        assert check_equality(c5, 2).equal
        assert not check_equality(c5, 3).equal

    def test_report_dict(self, B):
        assert check_equality(B, 2).to_dict(B.vertex_names) == {
            "n": 2,
            "equal": False,
            "extra_generators": ["x1*x2*x3*x4*x5*x6"],
        }


class TestSecondPowerViaBad:
    def test_bad(self, B):
        assert equals(second_symbolic_via_bad(B), symbolic_power(B, 2))

    def test_k222(self, k222):
        assert equals(second_symbolic_via_bad(k222), power(edge_ideal(k222), 2))

    def test_requires_three_partite(self, tri):
        with pytest.raises(NotThreePartite):
            second_symbolic_via_bad(tri)
        with pytest.raises(NotThreePartite):
            second_symbolic_via_bad(path_hypergraph_cycle(5, 3))

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs(max_vertices=8, max_edges=5, uniform=3))
    def test_matches_intersection(self, H):
        try:
            via_bad = second_symbolic_via_bad(H)
        except NotThreePartite:
            return
        assert equals(via_bad, symbolic_power(H, 2))


class TestClassification:
    def test_bad_uncomplemented(self, B):
        c = classify_3partite_equality(B)
        assert c.verdict is Verdict.BAD_UNCOMPLEMENTED
        assert not c.predicts_equal
        assert c.uncomplemented_witness.verify(B)
        assert not check_equality(B, 2).equal

    def test_bad_complemented(self, B):
        H = B.add_edges([["x4", "x5", "x6"]])
        c = classify_3partite_equality(H)
        assert c.verdict is Verdict.ALL_BAD_COMPLEMENTED
        (w,) = c.witnesses
        assert set(H.names(complementing_edge(H, w))) == {"x1", "x2", "x3"}
        assert check_equality(H, 2).equal

    def test_no_bad(self):
        H = validate_simple([["a", "b", "c"], ["c", "d", "e"]])
        assert classify_3partite_equality(H).verdict is Verdict.NO_BAD

    def test_k222(self, k222):
        c = classify_3partite_equality(k222)
        assert c.verdict is Verdict.ALL_BAD_COMPLEMENTED
        assert len(c.witnesses) == 8

    def test_to_dict(self, B):
        d = classify_3partite_equality(B).to_dict(B)
        assert d["verdict"] == "BAD_UNCOMPLEMENTED"
        assert d["predicts_equal"] is False
        assert sorted(d["uncomplemented_witness"]["roles"].values()) == list(B.vertex_names)

    def test_uncomplemented_yet_equal(self, fixtures_dir):
        # a bad triple with no complemented edge whose sextic is still a
        # product of two other edges, so the square is not enlarged
        H = load_hypergraph(fixtures_dir / "uncomplemented.txt")
        assert classify_3partite_equality(H).verdict is Verdict.BAD_UNCOMPLEMENTED
        assert check_equality(H, 2).equal
        assert sextics_outside_square(H) == []


class TestSexticsOutsideSquare:
    def test_bad(self, B):
        assert len(sextics_outside_square(B)) == 1

    def test_complemented(self, B):
        assert sextics_outside_square(B.add_edges([["x4", "x5", "x6"]])) == []

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs(max_vertices=8, max_edges=5, uniform=3))
    def test_predicts_equality(self, H):
        try:
            outside = sextics_outside_square(H)
        except NotThreePartite:
            return
        assert (not outside) == check_equality(H, 2).equal


def test_cross_check_error_is_assertion():
    assert issubclass(CrossCheckError, AssertionError)
