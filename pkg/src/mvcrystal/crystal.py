"""Crystal generation and graph export.

Closes {highest polytope} under the lowering operators to the full
highest-weight crystal, or {P_0} under f to a truncation of the
infinity crystal; nodes are deduplicated by the Lusztig vector on the
reference word.  Also hosts the extremal-containment scanner for the
open containment question.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field

from .demazure import extremal, max_nodes_gate, oracle_demazure_set
from .polytopes import (
    LusztigDatum,
    canonicalize,
    contains,
    datum_from_json,
    f,
    highest_polytope,
    weight,
)
from .strata import stratum
from .weyl import Coweight, RootDatum, SizeGateError, root_datum
from .words import ReducedWord, longest_word

_DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999",
)


@dataclass
class CrystalNode:
    id: int
    datum: LusztigDatum
    weight: Coweight
    iota: object = None
    kappa: object = None


@dataclass
class CrystalGraph:
    datum: RootDatum
    lam: Coweight
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)  # (src id, dst id, color j)

    def node_count(self):
        return len(self.nodes)

    def to_json_dict(self):
        return {
            "datum": {"family": self.datum.family, "rank": self.datum.rank},
            "lambda": list(self.lam.coords),
            "nodes": [
                {
                    "id": n.id,
                    "word": list(n.datum.word.letters),
                    "n": list(n.datum.n),
                    "weight": list(n.weight.coords),
                    "iota": list(n.iota.lex_word()) if n.iota is not None else None,
                    "kappa": list(n.kappa.lex_word()) if n.kappa is not None else None,
                }
                for n in self.nodes
            ],
            "edges": [{"src": s, "dst": d, "color": j} for s, d, j in self.edges],
        }

    def to_dot(self):
        out = ["digraph crystal {", "  rankdir=TB;"]
        for n in self.nodes:
            label = ",".join(map(str, n.weight.coords))
            out.append(f'  n{n.id} [label="{label}"];')
        for s, d, j in self.edges:
            color = _DOT_PALETTE[(j - 1) % len(_DOT_PALETTE)]
            out.append(f'  n{s} -> n{d} [label="{j}", color="{color}"];')
        out.append("}")
        return "\n".join(out) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["id", "weight", "iota", "kappa"])
        for n in self.nodes:
            writer.writerow(
                [
                    n.id,
                    ",".join(map(str, n.weight.coords)),
                    ",".join(map(str, n.iota.lex_word())) if n.iota is not None else "",
                    ",".join(map(str, n.kappa.lex_word())) if n.kappa is not None else "",
                ]
            )
        return buf.getvalue()


def generate_crystal(datum: RootDatum, lam: Coweight, max_nodes: int | None = None,
                     with_strata: bool = True) -> CrystalGraph:
    """BFS closure of the highest polytope under the lowering operators."""
    gate = max_nodes if max_nodes is not None else max_nodes_gate()
    dim = datum.weyl_dimension(lam)
    if dim > gate:
        raise SizeGateError(f"|B(lambda)| = {dim} exceeds the gate {gate}")
    hw = canonicalize(highest_polytope(datum, lam))
    graph = CrystalGraph(datum, lam)
    ids = {hw: 0}
    graph.nodes.append(CrystalNode(0, hw, weight(hw)))
    queue = [hw]
    while queue:
        cur = queue.pop(0)
        for j in datum.index_set:
            child = f(cur, j)
            if child is None:
                continue
            child = canonicalize(child)
            cid = ids.get(child)
            if cid is None:
                cid = len(graph.nodes)
                ids[child] = cid
                graph.nodes.append(CrystalNode(cid, child, weight(child)))
                queue.append(child)
            graph.edges.append((ids[cur], cid, j))
    assert graph.node_count() == dim
    if with_strata:
        for node in graph.nodes:
            st = stratum(node.datum)
            node.iota, node.kappa = st.iota, st.kappa
    return graph


def graph_from_json(obj: dict) -> CrystalGraph:
    datum = root_datum(f"{obj['datum']['family']}{obj['datum']['rank']}")
    lam = datum.coweight(obj["lambda"])
    graph = CrystalGraph(datum, lam)
    for rec in obj["nodes"]:
        d = LusztigDatum(ReducedWord(datum, tuple(rec["word"])), tuple(rec["n"]), lam)
        node = CrystalNode(rec["id"], d, weight(d))
        if rec.get("iota") is not None:
            node.iota = datum.evaluate(tuple(rec["iota"]))
        if rec.get("kappa") is not None:
            node.kappa = datum.evaluate(tuple(rec["kappa"]))
        graph.nodes.append(node)
    for rec in obj["edges"]:
        graph.edges.append((rec["src"], rec["dst"], rec["color"]))
    return graph


def generate_binf_truncated(datum: RootDatum, depth: int):
    """All infinity-family polytopes of weight height <= depth."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    p0 = LusztigDatum(longest_word(datum), (0,) * datum.num_positive_roots, None)
    seen = {p0}
    queue = [p0]
    while queue:
        cur = queue.pop(0)
        if -sum(weight(cur).coords) >= depth:
            continue
        for j in datum.index_set:
            child = canonicalize(f(cur, j))
            if child not in seen:
                seen.add(child)
                queue.append(child)
    return sorted(seen, key=lambda d: (-sum(weight(d).coords), d.n))


def scan_question(datum: RootDatum, lam: Coweight) -> dict:
    """Search for Demazure-family members escaping the extremal polytope.

    For every x and every member P of the inductively generated family
    of x, tests whether the extremal polytope of x contains P.  Reports
    counterexamples; never asserts the general answer.
    """
    checked = 0
    counterexamples = []
    for x in datum.full_group():
        ext = extremal(x, lam)
        for P in sorted(oracle_demazure_set(x, lam), key=lambda d: d.n):
            checked += 1
            if not contains(ext, P):
                counterexamples.append(
                    {"x": ",".join(map(str, x.lex_word())), "n": list(P.n)}
                )
    return {
        "type": f"{datum.family}{datum.rank}",
        "lambda": list(lam.coords),
        "pairs_checked": checked,
        "counterexamples": counterexamples,
        "outcome": "counterexamples found" if counterexamples else "no counterexample found",
    }
