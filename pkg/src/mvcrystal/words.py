"""Reduced words for the longest element and their braid combinatorics.

Covers 2-/3-moves and move paths between words, words through a given
group element, position-sequence sets S and S-hat with lexicographic
minima, the sigma transport maps between them, and 0-Hecke (Demazure)
products.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .weyl import RootDatum, SizeGateError, WeylElement, bruhat_leq

# |W| bound for enumerating all reduced words of w0
WORD_ENUM_GATE = 1152
# word-length bound for exhaustive position-sequence enumeration
S_ENUM_GATE = 16


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word: letters multiply left-to-right to the target."""

    datum: RootDatum
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for j in self.letters:
            self.datum._check_index(j)
        if self.target.length != len(self.letters):
            raise ValueError(f"word {self.letters} is not reduced")

    @property
    def target(self) -> WeylElement:
        return self.datum.evaluate(self.letters)

    def prefixes(self):
        """The elements w_0^i, w_1^i, ..., w_m^i spelled by the prefixes."""
        cache = self.datum._cache.setdefault("prefixes", {})
        got = cache.get(self.letters)
        if got is None:
            out = [self.datum.e]
            for j in self.letters:
                out.append(out[-1] * self.datum.simple_reflection(j))
            got = tuple(out)
            cache[self.letters] = got
        return got

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ",".join(map(str, self.letters))


@dataclass(frozen=True)
class Move:
    """A braid move: kind 2 swaps a commuting pair at offset, kind 3
    replaces the block (i,j,i) by (j,i,j); offset is the 0-based start."""

    kind: int
    offset: int

    def __post_init__(self):
        if self.kind not in (2, 3):
            raise ValueError("move kind must be 2 or 3")
        if self.offset < 0:
            raise ValueError("offset must be non-negative")


def longest_word(datum: RootDatum) -> ReducedWord:
    """The reference reduced word of w0 (lexicographically least)."""
    return ReducedWord(datum, datum.reference_word())


def apply_move(word: ReducedWord, move: Move) -> ReducedWord:
    """Apply a braid move; applying the same move twice is the identity."""
    ls, k, a = word.letters, move.offset, word.datum.cartan
    if move.kind == 2:
        if k + 2 > len(ls):
            raise ValueError("move offset out of range")
        i, j = ls[k], ls[k + 1]
        if a[i - 1][j - 1] != 0:
            raise ValueError(f"letters {i},{j} do not commute at offset {k}")
        new = ls[:k] + (j, i) + ls[k + 2:]
    else:
        if k + 3 > len(ls):
            raise ValueError("move offset out of range")
        i, j, i2 = ls[k], ls[k + 1], ls[k + 2]
        if i != i2 or a[i - 1][j - 1] != -1:
            raise ValueError(f"letters at offset {k} do not form a braid block")
        new = ls[:k] + (j, i, j) + ls[k + 3:]
    return ReducedWord(word.datum, new)


def move_path(src: ReducedWord, dst: ReducedWord):
    """A sequence of moves transforming src into dst exactly.

    Classical inductive transport: bring dst's first letter to the front
    of src through a single 2-/3-move on an intermediate word, then
    recurse on the suffixes.
    """
    if src.datum != dst.datum:
        raise ValueError("words over different root data")
    if src.target != dst.target:
        raise ValueError("words spell different elements")
    memo = src.datum._cache.setdefault("move_paths", {})
    return tuple(Move(k, o) for k, o in _path(src.datum, src.letters, dst.letters, memo))


def _path(datum, a, b, memo):
    if a == b:
        return ()
    key = (a, b)
    got = memo.get(key)
    if got is not None:
        return got
    if a[0] == b[0]:
        out = tuple((k, o + 1) for k, o in _path(datum, a[1:], b[1:], memo))
    else:
        i, j = a[0], b[0]
        if datum.cartan[i - 1][j - 1] == 0:
            head, swapped, kind = (i, j), (j, i), 2
        else:
            head, swapped, kind = (i, j, i), (j, i, j), 3
        w = datum.evaluate(a)
        rest = datum.evaluate(head).inverse() * w
        assert rest.length == w.length - len(head)
        u = head + rest.lex_word()
        u2 = swapped + u[len(head):]
        out = _path(datum, a, u, memo) + ((kind, 0),) + _path(datum, u2, b, memo)
    memo[key] = out
    return out


def word_through(w: WeylElement):
    """A reduced word of w0 whose length-l prefix spells w, with l = l(w)."""
    datum = w.datum
    cache = datum._cache.setdefault("word_through", {})
    got = cache.get(w.matrix)
    if got is None:
        tail = (w.inverse() * datum.longest_element()).lex_word()
        got = ReducedWord(datum, w.lex_word() + tail)
        cache[w.matrix] = got
    return got, w.length


def hecke_product(datum: RootDatum, letters) -> WeylElement:
    """0-Hecke fold w * s_j = w s_j if that is longer, else w.

    The result is the Bruhat-greatest element spelled by a subword of
    the input sequence.
    """
    w = datum.e
    for j in letters:
        datum._check_index(j)
        if j not in w.right_descents():
            w = w * datum.simple_reflection(j)
    return w


def min_S(x: WeylElement, word: ReducedWord):
    """Lexicographic minimum of S(x*w0, word), found greedily.

    A position is accepted iff its letter starts a reduced decomposition
    of the remaining factor and the rest of that factor still has a
    reduced subword in the strict suffix (tested against the suffix's
    0-Hecke product).
    """
    datum = word.datum
    if x.datum != datum:
        raise ValueError("rank mismatch")
    target = x * datum.longest_element()
    m = len(word)
    # suffix Demazure products D[l] for letters l..m (1-based); D[m+1] = e
    dem = [None] * (m + 2)
    dem[m + 1] = datum.e
    for l in range(m, 0, -1):
        u = dem[l + 1]
        su = datum.simple_reflection(word.letters[l - 1]) * u
        dem[l] = su if su.length > u.length else u
    positions = []
    rem = target
    for l in range(1, m + 1):
        if rem.is_identity:
            break
        s = datum.simple_reflection(word.letters[l - 1])
        srem = s * rem
        if srem.length < rem.length and bruhat_leq(srem, dem[l + 1]):
            positions.append(l)
            rem = srem
    if not rem.is_identity:  # pragma: no cover - impossible for word in R(w0)
        raise RuntimeError("greedy subword search failed")
    return tuple(positions)


def enumerate_S(x: WeylElement, word: ReducedWord):
    """All of S(x*w0, word) by exhaustive enumeration (gated)."""
    datum, m = word.datum, len(word)
    if m > S_ENUM_GATE:
        raise SizeGateError(f"word length {m} exceeds enumeration gate {S_ENUM_GATE}")
    target = x * datum.longest_element()
    p = target.length
    out = set()
    for combo in itertools.combinations(range(1, m + 1), p):
        if datum.evaluate(tuple(word.letters[q - 1] for q in combo)) == target:
            out.add(combo)
    return frozenset(out)


def enumerate_S_hat(x: WeylElement, word: ReducedWord):
    """All of S-hat(x*w0, word): increasing positions of any length whose
    letters multiply to x*w0 (gated)."""
    datum, m = word.datum, len(word)
    if m > S_ENUM_GATE:
        raise SizeGateError(f"word length {m} exceeds enumeration gate {S_ENUM_GATE}")
    target = x * datum.longest_element()
    out = set()
    for size in range(m + 1):
        for combo in itertools.combinations(range(1, m + 1), size):
            if datum.evaluate(tuple(word.letters[q - 1] for q in combo)) == target:
                out.add(combo)
    return frozenset(out)


_SIGMA_3 = {
    (): (),
    (1,): (2,),
    (3,): (2,),
    (2,): (1,),
    (1, 2): (2, 3),
    (2, 3): (1, 2),
    (1, 2, 3): (1, 2, 3),
}

_SIGMA_2 = {
    (): (),
    (1,): (2,),
    (2,): (1,),
    (1, 2): (1, 2),
}


def sigma_map(a, src: ReducedWord, move: Move):
    """Transport a position sequence across a braid move.

    Maps S(xw0, src) into S(xw0, dst) by the case table on the window of
    the move; positions outside the window are unchanged.  Minima map to
    minima.
    """
    datum = src.datum
    a = tuple(int(q) for q in a)
    if any(a[t] >= a[t + 1] for t in range(len(a) - 1)) or (
        a and (a[0] < 1 or a[-1] > len(src))
    ):
        raise ValueError("not a valid member: positions must be increasing and in range")
    x_elt = datum.evaluate(tuple(src.letters[q - 1] for q in a))
    if x_elt.length != len(a):
        raise ValueError("not a valid member: positions do not spell a reduced word")
    dst = apply_move(src, move)
    k, width = move.offset, move.kind
    table = _SIGMA_2 if move.kind == 2 else _SIGMA_3
    before = tuple(q for q in a if q <= k)
    inside = tuple(q - k for q in a if k + 1 <= q <= k + width)
    after = tuple(q for q in a if q > k + width)
    if inside not in table:
        raise ValueError("not a valid member: window pattern impossible in a reduced subword")
    out = before + tuple(q + k for q in table[inside]) + after
    assert datum.evaluate(tuple(dst.letters[q - 1] for q in out)) == x_elt
    return out


def all_words_w0(datum: RootDatum):
    """Every reduced word of w0 (gated by the group order)."""
    if datum.order() > WORD_ENUM_GATE:
        raise SizeGateError(
            f"|W| = {datum.order()} exceeds the reduced-word enumeration gate {WORD_ENUM_GATE}"
        )
    got = datum._cache.get("all_words_w0")
    if got is None:
        memo = {}

        def rec(w):
            if w.is_identity:
                return ((),)
            hit = memo.get(w.matrix)
            if hit is None:
                out = []
                for j in w.left_descents():
                    for tail in rec(datum.simple_reflection(j) * w):
                        out.append((j,) + tail)
                hit = tuple(out)
                memo[w.matrix] = hit
            return hit

        got = tuple(ReducedWord(datum, ls) for ls in rec(datum.longest_element()))
        datum._cache["all_words_w0"] = got
    return got
