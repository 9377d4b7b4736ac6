import itertools
import json

import pytest

from mvcrystal import (
    LusztigDatum,
    SizeGateError,
    canonicalize,
    change_word,
    contains,
    epsilon,
    extremal,
    generate_binf_truncated,
    generate_crystal,
    graph_from_json,
    highest_polytope,
    longest_word,
    phi,
    root_datum,
    scan_question,
    weight,
)
from mvcrystal.polytopes import _beta_coroots


def test_node_counts(a1, a2, a3):
    assert generate_crystal(a2, a2.coweight((1, 1)), with_strata=False).node_count() == 8
    assert generate_crystal(a2, a2.coweight((2, 1)), with_strata=False).node_count() == 10
    assert generate_crystal(a3, a3.coweight((1, 1, 1)), with_strata=False).node_count() == 15
    # the A1 string for lambda = h_1 has <alpha_1, lambda> + 1 = 3 nodes
    assert generate_crystal(a1, a1.coweight((1,)), with_strata=False).node_count() == 3


def test_weight_multiplicities_are_weyl_invariant(a2, a3):
    for datum, coords in ((a2, (1, 1)), (a3, (1, 1, 1))):
        lam = datum.coweight(coords)
        graph = generate_crystal(datum, lam, with_strata=False)
        mult = {}
        for node in graph.nodes:
            mult[node.weight.coords] = mult.get(node.weight.coords, 0) + 1
        for w in datum.full_group():
            for coords_, count in mult.items():
                image = w.act(datum.coweight(coords_))
                assert mult.get(image.coords, 0) == count


def test_unique_source_and_sink(a2):
    lam = a2.coweight((1, 1))
    graph = generate_crystal(a2, lam, with_strata=False)
    sources = [
        n for n in graph.nodes if all(epsilon(n.datum, j) == 0 for j in a2.index_set)
    ]
    sinks = [
        n for n in graph.nodes if all(phi(n.datum, j) == 0 for j in a2.index_set)
    ]
    assert len(sources) == 1 and sources[0].id == 0
    assert len(sinks) == 1


def test_graph_string_lengths_match_epsilon_phi(a2):
    lam = a2.coweight((2, 1))
    graph = generate_crystal(a2, lam, with_strata=False)
    out_edges = {}
    in_edges = {}
    for s, d, j in graph.edges:
        out_edges[(s, j)] = d
        in_edges[(d, j)] = s
    for node in graph.nodes:
        for j in a2.index_set:
            down = 0
            cur = node.id
            while (cur, j) in out_edges:
                cur = out_edges[(cur, j)]
                down += 1
            up = 0
            cur = node.id
            while (cur, j) in in_edges:
                cur = in_edges[(cur, j)]
                up += 1
            assert down == phi(node.datum, j)
            assert up == epsilon(node.datum, j)


def test_dedup_across_words(a2):
    lam = a2.coweight((1, 1))
    graph = generate_crystal(a2, lam, with_strata=False)
    other = (2, 1, 2)
    seen = set()
    for node in graph.nodes:
        d_other = change_word(node.datum, other)
        assert canonicalize(d_other) == node.datum
        seen.add(d_other.n)
    assert len(seen) == graph.node_count()


def test_size_gate(a2, monkeypatch):
    with pytest.raises(SizeGateError):
        generate_crystal(a2, a2.coweight((2, 2)), max_nodes=10)
    monkeypatch.setenv("MVC_MAX_NODES", "5")
    with pytest.raises(SizeGateError):
        generate_crystal(a2, a2.coweight((1, 1)))


def test_json_roundtrip(a2):
    lam = a2.coweight((1, 1))
    graph = generate_crystal(a2, lam)
    blob = json.dumps(graph.to_json_dict(), sort_keys=True)
    again = graph_from_json(json.loads(blob))
    assert json.dumps(again.to_json_dict(), sort_keys=True) == blob


def test_dot_and_csv(a2):
    lam = a2.coweight((1, 1))
    graph = generate_crystal(a2, lam)
    dot = graph.to_dot()
    assert dot.count("->") == 8
    assert dot.count("label=") == 8 + 8  # node labels + edge labels
    csv_text = graph.to_csv()
    rows = [r for r in csv_text.strip().splitlines()]
    assert rows[0].startswith("id,")
    assert len(rows) == 9


def test_binf_truncation(a1, a2):
    assert [d.n for d in generate_binf_truncated(a1, 0)] == [(0,)]
    assert sorted(d.n for d in generate_binf_truncated(a1, 3)) == [
        (0,),
        (1,),
        (2,),
        (3,),
    ]
    with pytest.raises(ValueError):
        generate_binf_truncated(a2, -1)


def _kostant_count(datum, wt_coords, word, bound):
    """Count non-negative vectors with sum N_l beta_l = -wt."""
    betas = _beta_coroots(word)
    target = tuple(-c for c in wt_coords)
    count = 0
    for ns in itertools.product(range(bound + 1), repeat=len(betas)):
        total = [0] * datum.rank
        for n, beta in zip(ns, betas):
            for r in range(datum.rank):
                total[r] += n * beta[r]
        if tuple(total) == target:
            count += 1
    return count


def test_binf_counts_match_kostant_partitions(a2):
    depth = 3
    word = longest_word(a2)
    elems = generate_binf_truncated(a2, depth)
    by_weight = {}
    for d in elems:
        by_weight.setdefault(weight(d).coords, 0)
        by_weight[weight(d).coords] += 1
    assert by_weight[(-1, -1)] == 2  # two Kostant partitions of alpha_1 + alpha_2
    for coords, count in by_weight.items():
        assert count == _kostant_count(a2, coords, word, depth)


def test_scan_question(a2):
    lam = a2.coweight((1, 1))
    report = scan_question(a2, lam)
    assert report["type"] == "A2" and report["lambda"] == [1, 1]
    assert report["outcome"] in ("no counterexample found", "counterexamples found")
    assert report["pairs_checked"] > 0
    # the two forced cases: x = w0 contains everything, x = e contains P_lambda
    lo_ext = extremal(a2.longest_element(), lam)
    hw = highest_polytope(a2, lam)
    assert contains(lo_ext, hw)
    assert contains(extremal(a2.e, lam), hw)
