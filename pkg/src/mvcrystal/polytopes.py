"""MV polytopes in Lusztig-datum coordinates.

A polytope is held as a vector of non-negative edge lengths along the
path of prefixes of a reduced word of w0, together with a base: either
a dominant coweight lambda (highest-weight family, mu_{w0} = lambda) or
None for the infinity family (mu_{w0} = 0).  The word/vector pair is
the single source of truth; GGMS vertex data and Berenstein-Zelevinsky
hyperplane data are derived views.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .weyl import Coweight, RootDatum, Weight, WeylElement, pair
from .words import ReducedWord, longest_word, move_path, word_through


@dataclass(frozen=True)
class LusztigDatum:
    """Edge lengths of an MV polytope along a reduced word of w0.

    Entries of n may be any integers so that diagnostic data can be
    represented; every constructor in this package produces vectors
    that are non-negative on all words, and validate() checks it.
    """

    word: ReducedWord
    n: tuple
    base: Coweight | None = None

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        if len(self.n) != len(self.word):
            raise ValueError("length of n does not match the word")
        if self.base is not None:
            if self.base.datum != self.word.datum:
                raise ValueError("rank mismatch between base and word")
            if not self.datum.dominant(self.base):
                raise ValueError("lambda is not dominant")

    @property
    def datum(self) -> RootDatum:
        return self.word.datum


class GGMSDatum:
    """W-indexed vertex collection (mu_w) of a pseudo-Weyl polytope."""

    def __init__(self, datum, mapping, base):
        self.datum = datum
        self._map = dict(mapping)
        self.base = base

    def vertex(self, w: WeylElement) -> Coweight:
        return self._map[w]

    def items(self):
        return self._map.items()

    def vertex_set(self):
        return frozenset(self._map.values())

    def to_json(self):
        return {
            ",".join(map(str, w.lex_word())): list(mu.coords)
            for w, mu in sorted(self._map.items(), key=lambda kv: (kv[0].length, kv[0].word()))
        }


class BZDatum:
    """Hyperplane offsets M_gamma = <w Lambda_i, mu_w> over the orbit set
    Gamma = {w Lambda_i}; the polytope is {h : <gamma, h> >= M_gamma}."""

    def __init__(self, datum, table):
        self.datum = datum
        self.table = dict(table)  # gamma coords -> int

    def value(self, gamma: Weight) -> int:
        return self.table[gamma.coords]


# -- word plumbing -------------------------------------------------------


def _flat_path(datum, src_letters, dst_letters):
    cache = datum._cache.setdefault("flat_paths", {})
    key = (src_letters, dst_letters)
    got = cache.get(key)
    if got is None:
        path = move_path(ReducedWord(datum, src_letters), ReducedWord(datum, dst_letters))
        got = kernels.encode_path((mv.kind, mv.offset) for mv in path)
        cache[key] = got
    return got


def _beta_coroots(word: ReducedWord):
    """Columns beta_l = w^i_{l-1} . h_{i_l} of the edge directions."""
    cache = word.datum._cache.setdefault("betas", {})
    got = cache.get(word.letters)
    if got is None:
        rank = word.datum.rank
        out = []
        prefixes = word.prefixes()
        for l, j in enumerate(word.letters):
            m = prefixes[l].matrix
            out.append(tuple(m[r][j - 1] for r in range(rank)))
        got = tuple(out)
        cache[word.letters] = got
    return got


def _jword(datum, j) -> ReducedWord:
    """A cached reduced word of w0 whose first letter is j."""
    datum._check_index(j)
    cache = datum._cache.setdefault("jwords", {})
    got = cache.get(j)
    if got is None:
        tail = (datum.simple_reflection(j) * datum.longest_element()).lex_word()
        got = ReducedWord(datum, (j,) + tail)
        cache[j] = got
    return got


def _cover_words(datum):
    """A small set of words of w0 whose prefixes cover all of W."""
    got = datum._cache.get("cover_words")
    if got is None:
        seen = {}
        for w in datum.full_group():
            word, _ = word_through(w)
            seen[word.letters] = word
        got = tuple(seen[k] for k in sorted(seen))
        datum._cache["cover_words"] = got
    return got


def _base_coords(d: LusztigDatum):
    return d.base.coords if d.base is not None else (0,) * d.datum.rank


# -- core operations ------------------------------------------------------


def change_word(d: LusztigDatum, target) -> LusztigDatum:
    """Re-coordinatize the same polytope along another reduced word of w0.

    A 2-move swaps the two affected entries; a 3-move applies the
    tropical transform; paths between word pairs are cached.
    """
    datum = d.datum
    if isinstance(target, ReducedWord):
        if target.datum != datum:
            raise ValueError("rank mismatch")
    else:
        target = ReducedWord(datum, tuple(target))
    if target.target != datum.longest_element():
        raise ValueError("target word does not spell w0")
    if target.letters == d.word.letters:
        return d
    flat = _flat_path(datum, d.word.letters, target.letters)
    return LusztigDatum(target, kernels.apply_moves(d.n, flat), d.base)


def canonicalize(d: LusztigDatum) -> LusztigDatum:
    """The same polytope on the reference word of w0 (node identity)."""
    return change_word(d, longest_word(d.datum))


def weight(d: LusztigDatum) -> Coweight:
    """The vertex mu_e."""
    datum = d.datum
    coords = list(_base_coords(d))
    for nl, beta in zip(d.n, _beta_coroots(d.word)):
        if nl:
            for r in range(datum.rank):
                coords[r] -= nl * beta[r]
    return Coweight(datum, tuple(coords))


def _vertex_map(d: LusztigDatum):
    """Vertices from the length formula along a covering set of words.

    Returns (mapping, conflicts); conflicts is non-empty only for data
    violating the move compatibility conditions.
    """
    datum = d.datum
    out = {}
    conflicts = []
    for word in _cover_words(datum):
        dd = change_word(d, word)
        betas = _beta_coroots(word)
        prefixes = word.prefixes()
        m = len(word)
        mus = [None] * (m + 1)
        cur = tuple(_base_coords(d))
        mus[m] = cur
        for l in range(m, 0, -1):
            nl = dd.n[l - 1]
            beta = betas[l - 1]
            cur = tuple(cur[r] - nl * beta[r] for r in range(datum.rank))
            mus[l - 1] = cur
        for l, w in enumerate(prefixes):
            prev = out.get(w)
            if prev is None:
                out[w] = mus[l]
            elif prev != mus[l]:
                conflicts.append((w, word.letters))
    mapping = {w: Coweight(datum, c) for w, c in out.items()}
    return mapping, conflicts


def vertices(d: LusztigDatum) -> GGMSDatum:
    """The GGMS vertex family (mu_w), with mu_{w0} = base."""
    mapping, conflicts = _vertex_map(d)
    if conflicts:
        raise ValueError(f"inconsistent vertex data at {conflicts[0][0]!r}")
    return GGMSDatum(d.datum, mapping, d.base)


def bz_data(d: LusztigDatum) -> BZDatum:
    """Hyperplane datum M_gamma = <w Lambda_i, mu_w>, keyed by gamma."""
    cache = d.datum._cache.setdefault("bz", {})
    key = (d.word.letters, d.n, None if d.base is None else d.base.coords)
    got = cache.get(key)
    if got is not None:
        return got
    datum = d.datum
    vmap = vertices(d)
    table = {}
    for w in datum.full_group():
        mu = vmap.vertex(w)
        for i in datum.index_set:
            gamma = w.act(datum.fundamental_weight(i))
            val = pair(gamma, mu)
            old = table.get(gamma.coords)
            if old is None:
                table[gamma.coords] = val
            elif old != val:
                raise ValueError("BZ value depends on the expression of gamma")
    got = BZDatum(datum, table)
    cache[key] = got
    return got


def contains(p: LusztigDatum, q: LusztigDatum) -> bool:
    """True iff the polytope of q is contained (as a set) in that of p.

    Decided coordinatewise on BZ data: q is inside p iff
    M^q_gamma >= M^p_gamma for every gamma.
    """
    if p.datum != q.datum:
        raise ValueError("rank mismatch")
    if (p.base is None) != (q.base is None):
        raise ValueError("mismatched base")
    mp, mq = bz_data(p).table, bz_data(q).table
    return all(mq[g] >= mp[g] for g in mp)


def epsilon(d: LusztigDatum, j: int) -> int:
    """Number of times the raising operator applies in direction j."""
    return change_word(d, _jword(d.datum, j)).n[0]


def phi(d: LusztigDatum, j: int) -> int:
    """String length downward: <alpha_j, wt> + epsilon_j.

    For the highest-weight family this equals
    (1/2)<alpha_j, mu_e + mu_{s_j}> = max{N : f_j^N != 0}; for the
    infinity family it is the defining bookkeeping value.
    """
    return pair(d.datum.simple_root(j), weight(d)) + epsilon(d, j)


def f(d: LusztigDatum, j: int):
    """Lowering operator; returns None when the result leaves the family.

    On a word with first letter j this increments the first entry; for
    base lambda the result is declared null exactly when phi_j = 0
    (equivalently, the grown polytope escapes Conv(W.lambda)).
    """
    dj = change_word(d, _jword(d.datum, j))
    if d.base is not None and pair(d.datum.simple_root(j), weight(dj)) + dj.n[0] == 0:
        return None
    out = LusztigDatum(dj.word, (dj.n[0] + 1,) + dj.n[1:], d.base)
    return change_word(out, d.word)


def e(d: LusztigDatum, j: int):
    """Raising operator; None exactly when epsilon_j = 0."""
    dj = change_word(d, _jword(d.datum, j))
    if dj.n[0] == 0:
        return None
    out = LusztigDatum(dj.word, (dj.n[0] - 1,) + dj.n[1:], d.base)
    return change_word(out, d.word)


def f_max(d: LusztigDatum, j: int) -> LusztigDatum:
    """f_j applied phi_j times (highest-weight family only)."""
    if d.base is None:
        raise ValueError("f_max requires a highest-weight base")
    dj = change_word(d, _jword(d.datum, j))
    ph = pair(d.datum.simple_root(j), weight(dj)) + dj.n[0]
    out = LusztigDatum(dj.word, (dj.n[0] + ph,) + dj.n[1:], d.base)
    return change_word(out, d.word)


def e_max(d: LusztigDatum, j: int) -> LusztigDatum:
    """e_j applied epsilon_j times."""
    dj = change_word(d, _jword(d.datum, j))
    out = LusztigDatum(dj.word, (0,) + dj.n[1:], d.base)
    return change_word(out, d.word)


def highest_polytope(datum: RootDatum, lam: Coweight) -> LusztigDatum:
    """The one-point polytope {lambda}: every edge length is zero."""
    return LusztigDatum(longest_word(datum), (0,) * datum.num_positive_roots, lam)


def lowest_polytope(datum: RootDatum, lam: Coweight) -> LusztigDatum:
    """Conv(W.lambda): edge lengths N_l = -<alpha_{i_l}, w0.lambda>."""
    word = longest_word(datum)
    w0lam = datum.longest_element().act(lam)
    n = tuple(-pair(datum.simple_root(j), w0lam) for j in word.letters)
    return LusztigDatum(word, n, lam)


def star(d: LusztigDatum) -> LusztigDatum:
    """The Kashiwara involution on the infinity family.

    Reverses the vector and relabels the word through the diagram
    automorphism omega with alpha_{omega(j)} = -w0 . alpha_j.
    """
    if d.base is not None:
        raise ValueError("star is defined on the infinity family only")
    om = d.datum.omega_perm()
    letters = tuple(om[i - 1] for i in reversed(d.word.letters))
    return LusztigDatum(ReducedWord(d.datum, letters), tuple(reversed(d.n)), None)


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple

    def __bool__(self):
        return self.ok


def validate(d: LusztigDatum) -> ValidationReport:
    """Diagnostic check of the defining conditions.

    Verifies non-negativity on the enumerable words (all reduced words
    of w0 under the gate, otherwise a covering set), the edge condition
    mu_{w s_i} - mu_w in Z>=0 (w . h_i) for every w and i, the base
    vertex, and containment in Conv(W.lambda) for a highest-weight base.
    """
    from .words import SizeGateError, all_words_w0

    datum = d.datum
    issues = []
    try:
        test_words = all_words_w0(datum)
    except SizeGateError:
        test_words = _cover_words(datum)
    for word in test_words:
        dd = change_word(d, word)
        for l, x in enumerate(dd.n):
            if x < 0:
                issues.append(f"negative entry N_{l + 1} = {x} on word {word}")
    mapping, conflicts = _vertex_map(d)
    for w, letters in conflicts:
        issues.append(f"vertex mu_w inconsistent across words at w = {w!r}")
    base = Coweight(datum, _base_coords(d))
    if not conflicts:
        if mapping[datum.longest_element()] != base:
            issues.append("mu_{w0} differs from the base point")
        for w in datum.full_group():
            for i in datum.index_set:
                ws = w * datum.simple_reflection(i)
                diff = mapping[ws] - mapping[w]
                direction = w.act(datum.simple_coroot(i))
                coeff = _ratio(diff.coords, direction.coords)
                if coeff is None or coeff < 0:
                    issues.append(f"edge condition fails at (w, i) = ({w!r}, {i})")
        if d.base is not None and not issues:
            if not contains(lowest_polytope(datum, d.base), d):
                issues.append("polytope escapes Conv(W.lambda)")
    return ValidationReport(not issues, tuple(issues))


def _ratio(diff, direction):
    """The integer c with diff = c * direction, or None."""
    coeff = None
    for a, b in zip(diff, direction):
        if b == 0:
            if a != 0:
                return None
            continue
        q, r = divmod(a, b)
        if r != 0:
            return None
        if coeff is None:
            coeff = q
        elif coeff != q:
            return None
    if coeff is None:  # zero direction cannot happen for w . h_i
        coeff = 0
    return coeff


# -- serialization --------------------------------------------------------


def datum_to_json(d: LusztigDatum) -> dict:
    return {
        "type": f"{d.datum.family}{d.datum.rank}",
        "lambda": "inf" if d.base is None else list(d.base.coords),
        "word": list(d.word.letters),
        "n": list(d.n),
    }


def datum_from_json(obj: dict) -> LusztigDatum:
    from .weyl import root_datum

    datum = root_datum(obj["type"])
    lam = obj.get("lambda", "inf")
    base = None if lam in (None, "inf") else datum.coweight(lam)
    word = ReducedWord(datum, tuple(obj["word"]))
    return LusztigDatum(word, tuple(obj["n"]), base)
