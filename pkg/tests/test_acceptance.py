"""End-to-end acceptance checks, one test per criterion.

Each test carries an ``acceptance`` marker; conftest.py prints a PASS/FAIL
line per criterion at the end of the run. All comparisons are exact.
"""

import itertools
import time
from fractions import Fraction

import numpy as np
import pytest

from golden_cases import CASES, GOLDEN, render
from oracles import brute_max_matching, brute_min_cover
from sympow.corpus import (
    bad_hypergraph,
    complete_multipartite,
    cycle_graph,
    enumerate_partite_uniform,
    tree_path_hypergraphs,
    triangle,
)
from sympow.hypergraph import find_r_partition, is_valid_partition, validate_simple
from sympow.mengerian import check_mengerian_upto, ip_max_matching, ip_min_cover
from sympow.monomials import Monomial, alpha, equals, ideal_sum, minimalize, power
from sympow.paths import (
    check_t_partite_cycle,
    path_hypergraph_cycle,
    residue_partition,
    waldschmidt_cycle_path,
)
from sympow.symbolic import (
    check_equality,
    classify_3partite_equality,
    edge_ideal,
    second_symbolic_via_bad,
    sullivant_member,
    symbolic_power,
)
from sympow.waldschmidt import fractional_chromatic, waldschmidt_via_chi

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def tripartite_corpus():
    return list(enumerate_partite_uniform(3, 9, 5))


@pytest.fixture(scope="module")
def bipartite_corpus():
    return list(enumerate_partite_uniform(2, 8, 6))


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@pytest.mark.acceptance("1 bad-hypergraph symbolic square")
def test_1_bad_square():
    with Clock() as clock:
        B = bad_hypergraph()
        sextic = Monomial((1,) * 6)
        expected = ideal_sum(power(edge_ideal(B), 2), minimalize([sextic]))
        got = symbolic_power(B, 2)
    assert equals(got, expected)
    assert clock.seconds < 1


@pytest.mark.acceptance("2 complete 3-partite equality")
def test_2_complete_tripartite():
    with Clock() as clock:
        for sizes in [(1, 1, 1), (2, 1, 1), (2, 2, 2)]:
            H = complete_multipartite(sizes)
            for n in (2, 3):
                assert check_equality(H, n).equal, (sizes, n)
    assert clock.seconds < 30


@pytest.mark.acceptance("3 classification soundness")
def test_3_classification(tripartite_corpus):
    assert len(tripartite_corpus) == 219
    mismatches = []
    with Clock() as clock:
        for H in tripartite_corpus:
            predicted = classify_3partite_equality(H).predicts_equal
            actual = check_equality(H, 2).equal
            if predicted != actual:
                mismatches.append((H, predicted, actual))
    for H, predicted, actual in mismatches:
        print(f"mismatch: {H} predicted equal={predicted}, actual equal={actual}")
    assert clock.seconds < 600
    assert mismatches == []


@pytest.mark.acceptance("4 second-power formula")
def test_4_second_power(tripartite_corpus):
    failures = [
        H for H in tripartite_corpus
        if not equals(second_symbolic_via_bad(H), symbolic_power(H, 2))
    ]
    assert failures == []


@pytest.mark.acceptance("5 waldschmidt of r-partite")
def test_5_r_partite_waldschmidt(tripartite_corpus, bipartite_corpus):
    for r, corpus in ((2, bipartite_corpus), (3, tripartite_corpus)):
        for H in corpus:
            assert waldschmidt_via_chi(H) == r, H
            for m in (1, 2, 3):
                assert alpha(symbolic_power(H, m)) == r * m, (H, m)


@pytest.mark.acceptance("6 fractional chromatic closed forms")
def test_6_fractional_chromatic(tripartite_corpus, bipartite_corpus):
    for r, corpus in ((2, bipartite_corpus), (3, tripartite_corpus)):
        for H in corpus:
            assert fractional_chromatic(H).optimum == Fraction(r, r - 1), H
    for n in range(2, 11):
        for t in range(2, n + 1):
            q, rem = divmod(n, t)
            expected = Fraction(n, n - q) if rem == 0 else Fraction(n, n - q - 1)
            sol = fractional_chromatic(path_hypergraph_cycle(n, t))
            assert sol.optimum == expected, (n, t)


@pytest.mark.acceptance("7 path partiteness")
def test_7_path_partiteness():
    with Clock() as clock:
        for n in range(2, 13):
            for t in range(2, n + 1):
                H = path_hypergraph_cycle(n, t)
                by_residue = is_valid_partition(H, residue_partition(n, t))
                by_search = find_r_partition(H, t) is not None
                assert by_residue == by_search == (n % t == 0), (n, t)
                assert check_t_partite_cycle(n, t, cross_check=True)[0] == by_search
    assert clock.seconds < 60


@pytest.mark.acceptance("8 cycle waldschmidt formula")
def test_8_cycle_waldschmidt():
    for n in range(2, 11):
        for t in range(2, n + 1):
            assert waldschmidt_cycle_path(n, t) == waldschmidt_via_chi(path_hypergraph_cycle(n, t)), (n, t)
    assert waldschmidt_cycle_path(6, 3) == 3
    assert waldschmidt_cycle_path(5, 3) == Fraction(5, 2)
    assert waldschmidt_cycle_path(7, 2) == Fraction(7, 4)


def _oracle_corpus():
    yield from enumerate_partite_uniform(3, 7, 5)
    yield from enumerate_partite_uniform(2, 7, 6)
    yield from (bad_hypergraph(), triangle(), cycle_graph(5))
    for n in range(2, 8):
        for t in range(2, n + 1):
            yield path_hypergraph_cycle(n, t)
    for _, _, H in tree_path_hypergraphs(7):
        yield H
    yield validate_simple([["v0", "v1", "v2"], ["v0", "v1", "v3"], ["v0", "v2", "v4"],
                           ["v1", "v2", "v5"], ["v3", "v4", "v5"]])


def _members(ideal, exps):
    G = ideal.rows()
    return np.all(G[None, :, :] <= exps[:, None, :], axis=2).any(axis=1)


@pytest.mark.acceptance("9 sullivant oracle equivalence")
def test_9_oracle_equivalence():
    disagreements = []
    count = 0
    for H in _oracle_corpus():
        assert H.num_vertices <= 7
        count += 1
        exps = np.array(list(itertools.product(range(3), repeat=H.num_vertices)), dtype=np.int64)
        for k in (1, 2, 3):
            via_primes = _members(symbolic_power(H, k), exps)
            for row, expected in zip(exps, via_primes):
                if sullivant_member(H, Monomial(tuple(int(a) for a in row)), k) != bool(expected):
                    disagreements.append((H, tuple(row), k))
    print(f"checked {count} hypergraphs")
    assert disagreements == []


@pytest.mark.acceptance("10 mengerian sweep")
def test_10_mengerian():
    with Clock() as clock:
        B = bad_hypergraph()
        ones = (1,) * 6
        assert brute_min_cover(B, ones) == ip_min_cover(B, ones)[0] == 2
        assert brute_max_matching(B, ones) == ip_max_matching(B, ones)[0] == 1
        assert (ones, 2, 1) in check_mengerian_upto(B, 1).failures

        trees = 0
        for T, t, H in tree_path_hypergraphs(8, unique=False):
            trees += 1
            assert check_mengerian_upto(H, 2).clean, (T, t)
        assert trees == 675
        for sizes in [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 3, 1)]:
            assert check_mengerian_upto(complete_multipartite(sizes), 2).clean, sizes
    assert clock.seconds < 120


@pytest.mark.acceptance("11 cli determinism")
def test_11_cli_determinism():
    assert {name.split("_")[0] for name in CASES} == {
        "analyze", "symbolic", "waldschmidt", "paths", "mengerian"
    }
    for name in CASES:
        first, second = render(name), render(name)
        assert first == second, name
        assert first == (GOLDEN / f"{name}.json").read_text(encoding="utf-8"), name
