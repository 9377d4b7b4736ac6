"""Demazure and opposite Demazure membership, extremal MV polytopes,
and the inductive brute-force oracles both are checked against.

Fast membership in the Demazure family is the zero-subword test: the
letters sitting at zero edge lengths must spell x*w0 as a reduced
subword, decided through the 0-Hecke product and the subword
characterization of Bruhat order.  Opposite membership is the vertex
condition along a word through x*w0, with the f-max chain and the
polytopal (extremal containment) criteria as independent routes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .polytopes import (
    LusztigDatum,
    canonicalize,
    change_word,
    contains,
    e,
    f,
    f_max,
    highest_polytope,
    lowest_polytope,
    vertices,
    weight,
)
from .weyl import Coweight, RootDatum, SizeGateError, WeylElement, bruhat_leq, pair
from .words import ReducedWord, hecke_product, longest_word, min_S, word_through

DEFAULT_MAX_NODES = 100_000


def max_nodes_gate() -> int:
    return int(os.environ.get("MVC_MAX_NODES", DEFAULT_MAX_NODES))


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    method: str
    witness: object = None

    def __bool__(self):
        return self.member

    def to_json(self):
        return {"member": self.member, "method": self.method, "witness": self.witness}


def in_demazure(P: LusztigDatum, x: WeylElement, with_witness: bool = False) -> MembershipReport:
    """Membership of P in the Demazure family of x (either base).

    True iff x*w0 is spelled by a reduced subword of the word restricted
    to positions with zero edge length; one fixed word suffices.  The
    fast decision is bruhat_leq(x*w0, 0-Hecke product of the zero
    letters); the witness, when requested, is the lex-least position
    sequence realizing it.
    """
    datum = _check_x(P, x)
    xw0 = x * datum.longest_element()
    letters = P.word.letters
    zero_positions = tuple(l + 1 for l, v in enumerate(P.n) if v == 0)
    dem = hecke_product(datum, (letters[q - 1] for q in zero_positions))
    member = bruhat_leq(xw0, dem)
    witness = None
    if member and with_witness:
        witness = _zero_witness(datum, letters, zero_positions, xw0)
    return MembershipReport(member, "ZeroSubword", witness)


def _zero_witness(datum, letters, zero_positions, xw0):
    """Greedy lex-least subsequence of the zero positions spelling xw0."""
    k = len(zero_positions)
    dem = [datum.e] * (k + 1)
    for t in range(k - 1, -1, -1):
        u = dem[t + 1]
        su = datum.simple_reflection(letters[zero_positions[t] - 1]) * u
        dem[t] = su if su.length > u.length else u
    out = []
    rem = xw0
    for t in range(k):
        if rem.is_identity:
            break
        s = datum.simple_reflection(letters[zero_positions[t] - 1])
        srem = s * rem
        if srem.length < rem.length and bruhat_leq(srem, dem[t + 1]):
            out.append(zero_positions[t])
            rem = srem
    assert rem.is_identity
    return tuple(out)


def in_opposite_demazure(P: LusztigDatum, x: WeylElement, with_witness: bool = False) -> MembershipReport:
    """Vertex test for the opposite Demazure family of x (base lambda).

    Along a word through x*w0 with split p = l(x*w0), membership holds
    iff mu at every prefix from p to m equals (prefix) * w0 . lambda.
    """
    datum = _check_x(P, x)
    _require_integral(P, "opposite Demazure membership")
    word, p = word_through(x * datum.longest_element())
    dd = change_word(P, word)
    prefixes = word.prefixes()
    w0lam = datum.longest_element().act(P.base)
    mus = _path_vertices(dd)
    member = True
    trace = []
    for l in range(p, len(word) + 1):
        expected = prefixes[l].act(w0lam)
        ok = mus[l] == expected
        if with_witness:
            trace.append((l, tuple(mus[l].coords), tuple(expected.coords), ok))
        if not ok:
            member = False
            if not with_witness:
                break
    return MembershipReport(member, "OpVertex", tuple(trace) if with_witness else None)


def _path_vertices(d: LusztigDatum):
    """mu along the prefixes of d's own word, from the base downward."""
    from .polytopes import _base_coords, _beta_coroots

    datum = d.datum
    betas = _beta_coroots(d.word)
    m = len(d.word)
    mus = [None] * (m + 1)
    cur = tuple(_base_coords(d))
    mus[m] = Coweight(datum, cur)
    for l in range(m, 0, -1):
        nl = d.n[l - 1]
        beta = betas[l - 1]
        cur = tuple(cur[r] - nl * beta[r] for r in range(datum.rank))
        mus[l - 1] = Coweight(datum, cur)
    return mus


def in_opposite_demazure_fmax(P: LusztigDatum, x: WeylElement) -> bool:
    """f-max chain criterion: apply f^max along a reduced word of x*w0
    and compare against the lowest polytope."""
    datum = _check_x(P, x)
    _require_integral(P, "the f-max criterion")
    chain = (x * datum.longest_element()).lex_word()
    cur = x
    b = P
    for q, j in enumerate(chain, start=1):
        nxt = datum.simple_reflection(j) * cur
        if nxt.length != cur.length + 1:
            raise RuntimeError("f-max chain contract violated: length did not increase")
        cur = nxt
        b = f_max(b, j)
    return canonicalize(b) == canonicalize(lowest_polytope(datum, P.base))


def in_opposite_demazure_polytopal(P: LusztigDatum, x: WeylElement) -> bool:
    """Polytopal criterion: P contains (as a set) the extremal polytope."""
    datum = _check_x(P, x)
    _require_integral(P, "the polytopal criterion")
    return contains(P, extremal(x, P.base))


def _check_x(P: LusztigDatum, x: WeylElement) -> RootDatum:
    if x.datum != P.datum:
        raise ValueError("rank mismatch")
    return P.datum


def _require_integral(P, what):
    if P.base is None:
        raise ValueError(f"{what} is defined for a highest-weight base only")


# -- extremal polytopes ---------------------------------------------------


def extremal(x: WeylElement, lam: Coweight, word: ReducedWord | None = None) -> LusztigDatum:
    """The extremal MV polytope of weight x . lambda.

    Built by the descending recursion on vertices along one word: start
    at lambda, keep the vertex over positions of the lex-least position
    sequence for x*w0, and reflect in the edge root elsewhere.  The
    result is word-independent; the per-word construction is exposed via
    the optional word argument for cross-checks.
    """
    datum = x.datum
    if lam.datum != datum:
        raise ValueError("rank mismatch")
    if not datum.dominant(lam):
        raise ValueError("lambda is not dominant")
    if word is None:
        word = longest_word(datum)
    cache = datum._cache.setdefault("extremal", {})
    key = (x.matrix, lam.coords, word.letters)
    got = cache.get(key)
    if got is not None:
        return got

    from .polytopes import _beta_coroots

    picked = set(min_S(x, word))
    prefixes = word.prefixes()
    betas = _beta_coroots(word)
    m = len(word)
    xi = lam
    lengths = [0] * m
    for l in range(m, 0, -1):
        if l in picked:
            continue
        root = prefixes[l - 1].act(datum.simple_root(word.letters[l - 1]))
        val = pair(root, xi)
        assert val >= 0
        lengths[l - 1] = val
        xi = xi - val * Coweight(datum, betas[l - 1])
    got = LusztigDatum(word, tuple(lengths), lam)
    cache[key] = got
    return got


# -- inductive oracles ----------------------------------------------------


def _gate_crystal(datum, lam):
    dim = datum.weyl_dimension(lam)
    gate = max_nodes_gate()
    if dim > gate:
        raise SizeGateError(f"|B(lambda)| = {dim} exceeds the gate {gate}")
    return dim


def _f_string_closure(elements, j):
    out = set()
    for d in elements:
        out.add(d)
        cur = d
        while True:
            nxt = f(cur, j)
            if nxt is None:
                break
            cur = canonicalize(nxt)
            out.add(cur)
    return out


def _e_string_closure(elements, j):
    out = set()
    for d in elements:
        out.add(d)
        cur = d
        while True:
            nxt = e(cur, j)
            if nxt is None:
                break
            cur = canonicalize(nxt)
            out.add(cur)
    return out


def oracle_demazure_set(x: WeylElement, lam: Coweight):
    """The Demazure family of x built by the defining induction:
    start from {highest} and close under f-strings along a reduced word
    of x, innermost letter last."""
    datum = x.datum
    _gate_crystal(datum, lam)
    cache = datum._cache.setdefault("oracle_dem", {})
    key = (x.matrix, lam.coords)
    got = cache.get(key)
    if got is None:
        if x.is_identity:
            got = frozenset({canonicalize(highest_polytope(datum, lam))})
        else:
            j = min(x.left_descents())
            below = oracle_demazure_set(datum.simple_reflection(j) * x, lam)
            got = frozenset(_f_string_closure(below, j))
        cache[key] = got
    return got


def oracle_opposite_set(x: WeylElement, lam: Coweight):
    """The opposite family of x by the descending induction from the
    lowest polytope, closing under e-strings."""
    datum = x.datum
    _gate_crystal(datum, lam)
    cache = datum._cache.setdefault("oracle_opp", {})
    key = (x.matrix, lam.coords)
    got = cache.get(key)
    if got is None:
        w0 = datum.longest_element()
        if x == w0:
            got = frozenset({canonicalize(lowest_polytope(datum, lam))})
        else:
            j = next(j for j in datum.index_set if j not in x.left_descents())
            above = oracle_opposite_set(datum.simple_reflection(j) * x, lam)
            got = frozenset(_e_string_closure(above, j))
        cache[key] = got
    return got


def oracle_binf_demazure_set(x: WeylElement, depth: int):
    """Truncation (to weight height <= depth) of the Demazure family in
    the infinity crystal, by the same induction from {P_0}."""
    datum = x.datum
    cache = datum._cache.setdefault("oracle_dem_inf", {})
    key = (x.matrix, depth)
    got = cache.get(key)
    if got is None:
        if x.is_identity:
            p0 = LusztigDatum(longest_word(datum), (0,) * datum.num_positive_roots, None)
            got = frozenset({p0})
        else:
            j = min(x.left_descents())
            below = oracle_binf_demazure_set(datum.simple_reflection(j) * x, depth)
            out = set()
            for d in below:
                out.add(d)
                cur = d
                while _height(cur) < depth:
                    cur = canonicalize(f(cur, j))
                    out.add(cur)
            got = frozenset(out)
        cache[key] = got
    return got


def _height(d: LusztigDatum) -> int:
    return -sum(weight(d).coords)
