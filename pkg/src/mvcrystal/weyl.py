"""Simply-laced root data and Weyl groups over exact integers.

Weights are integer vectors in the fundamental-weight basis, coweights
integer vectors in the simple-coroot basis; the canonical pairing is
then the dot product of coordinates.  A Weyl group element is stored as
the integer matrix of its action on the coroot lattice, which in the
simply-laced case is also its action on roots written in simple-root
coordinates.  Everything is immutable; per-datum caches only memoize
values that are pure functions of their keys.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction


class SizeGateError(RuntimeError):
    """An enumeration would exceed its configured size gate."""


_SUPPORTED_RANKS = {"A": (1, 6), "D": (4, 5), "E": (6, 6)}


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
        for r in range(n)
    )


def _matvec(m, v):
    n = len(v)
    return tuple(sum(m[r][k] * v[k] for k in range(n)) for r in range(n))


def _build_cartan(family, rank):
    if family == "A":
        edges = [(i, i + 1) for i in range(1, rank)]
    elif family == "D":
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    else:  # E6, Bourbaki numbering: node 2 hangs off node 4
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in a)


def _is_positive_definite(a):
    # LDL pivots; exact over Fraction
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            for c in range(k, n):
                m[r][c] -= f * m[k][c]
    return True


class RootDatum:
    """A simply-laced Cartan datum (types A, D, E6) with its Weyl group.

    Instances are hashable and compare by (family, rank); use
    :func:`root_datum` to get the cached instance for a type string.
    """

    def __init__(self, family: str, rank: int):
        if family not in _SUPPORTED_RANKS:
            raise ValueError(f"unsupported family {family!r}; expected A, D or E")
        lo, hi = _SUPPORTED_RANKS[family]
        if not lo <= rank <= hi:
            raise ValueError(f"unsupported rank for {family}: {rank} (allowed {lo}..{hi})")
        self.family = family
        self.rank = rank
        self.cartan = _build_cartan(family, rank)
        if not _is_positive_definite(self.cartan):
            raise ValueError("Cartan matrix is not of finite type")
        self.index_set = tuple(range(1, rank + 1))
        self._identity_matrix = tuple(
            tuple(int(r == c) for c in range(rank)) for r in range(rank)
        )
        self._gens = {j: self._reflection_matrix(j) for j in self.index_set}
        self._intern: dict = {}
        self._cache: dict = {}
        self._pos_roots = self._positive_root_coords()
        self.num_positive_roots = len(self._pos_roots)

    # -- basic structure ------------------------------------------------

    def __repr__(self):
        return f"RootDatum({self.family}{self.rank})"

    def __eq__(self, other):
        return (
            isinstance(other, RootDatum)
            and self.family == other.family
            and self.rank == other.rank
        )

    def __hash__(self):
        return hash((self.family, self.rank))

    def _reflection_matrix(self, j):
        a, r, jj = self.cartan, self.rank, j - 1
        rows = []
        for i in range(r):
            if i != jj:
                rows.append(tuple(int(i == c) for c in range(r)))
            else:
                rows.append(tuple(-1 if c == jj else -a[c][jj] for c in range(r)))
        return tuple(rows)

    def _positive_root_coords(self):
        # W-orbit of the simple roots in simple-root coordinates
        simple = [
            tuple(int(i == k) for i in range(self.rank)) for k in range(self.rank)
        ]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            c = queue.popleft()
            for j in self.index_set:
                img = _matvec(self._gens[j], c)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return tuple(sorted(c for c in seen if all(x >= 0 for x in c)))

    def positive_roots(self):
        """All positive roots, as Weights."""
        return tuple(self.root_from_alpha_coords(c) for c in self._pos_roots)

    def root_from_alpha_coords(self, c):
        a = self.cartan
        return Weight(
            self,
            tuple(sum(a[i][j] * c[j] for j in range(self.rank)) for i in range(self.rank)),
        )

    # -- standard vectors -----------------------------------------------

    def simple_root(self, j) -> "Weight":
        self._check_index(j)
        return Weight(self, tuple(self.cartan[i][j - 1] for i in range(self.rank)))

    def fundamental_weight(self, i) -> "Weight":
        self._check_index(i)
        return Weight(self, tuple(int(k == i - 1) for k in range(self.rank)))

    def simple_coroot(self, j) -> "Coweight":
        self._check_index(j)
        return Coweight(self, tuple(int(k == j - 1) for k in range(self.rank)))

    def zero_coweight(self) -> "Coweight":
        return Coweight(self, (0,) * self.rank)

    def coweight(self, coords) -> "Coweight":
        return Coweight(self, tuple(int(c) for c in coords))

    def weight(self, coords) -> "Weight":
        return Weight(self, tuple(int(c) for c in coords))

    def _check_index(self, j):
        if j not in self.index_set:
            raise ValueError(f"index {j} out of range 1..{self.rank}")

    def dominant(self, lam: "Coweight") -> bool:
        return all(pair(self.simple_root(j), lam) >= 0 for j in self.index_set)

    # -- group machinery --------------------------------------------------

    def element(self, matrix) -> "WeylElement":
        w = self._intern.get(matrix)
        if w is None:
            w = WeylElement(self, matrix)
            self._intern[matrix] = w
        return w

    @property
    def e(self) -> "WeylElement":
        return self.element(self._identity_matrix)

    def simple_reflection(self, j) -> "WeylElement":
        self._check_index(j)
        return self.element(self._gens[j])

    def evaluate(self, letters) -> "WeylElement":
        """Product s_{j_1} ... s_{j_k} of simple reflections."""
        cache = self._cache.setdefault("eval", {})
        letters = tuple(letters)
        w = cache.get(letters)
        if w is None:
            m = self._identity_matrix
            for j in letters:
                self._check_index(j)
                m = _matmul(m, self._gens[j])
            w = self.element(m)
            cache[letters] = w
        return w

    def full_group(self):
        """All group elements, in BFS order from the identity."""
        group = self._cache.get("full_group")
        if group is None:
            seen = {self._identity_matrix}
            order = [self.e]
            queue = deque([self._identity_matrix])
            while queue:
                m = queue.popleft()
                for j in self.index_set:
                    nm = _matmul(m, self._gens[j])
                    if nm not in seen:
                        seen.add(nm)
                        order.append(self.element(nm))
                        queue.append(nm)
            group = tuple(order)
            self._cache["full_group"] = group
        return group

    def order(self) -> int:
        return len(self.full_group())

    def longest_element(self) -> "WeylElement":
        w0 = self._cache.get("w0")
        if w0 is None:
            w = self.e
            while True:
                asc = [j for j in self.index_set if j not in w.right_descents()]
                if not asc:
                    break
                w = w * self.simple_reflection(asc[0])
            assert w.length == self.num_positive_roots
            w0 = w
            self._cache["w0"] = w0
        return w0

    def reference_word(self):
        """Lexicographically least reduced word of the longest element."""
        word = self._cache.get("refword")
        if word is None:
            word = self.longest_element().lex_word()
            self._cache["refword"] = word
        return word

    def omega_perm(self):
        """Index permutation of the diagram automorphism -w0."""
        perm = self._cache.get("omega")
        if perm is None:
            w0 = self.longest_element()
            out = []
            for j in self.index_set:
                unit = tuple(int(k == j - 1) for k in range(self.rank))
                img = tuple(-x for x in _matvec(w0.matrix, unit))
                if sum(img) != 1 or any(x not in (0, 1) for x in img):
                    raise RuntimeError("-w0 does not permute the simple roots")
                out.append(img.index(1) + 1)
            perm = tuple(out)
            assert all(perm[perm[j - 1] - 1] == j for j in self.index_set)
            self._cache["omega"] = perm
        return perm

    def weyl_dimension(self, lam: "Coweight") -> int:
        """Dimension of the highest weight module with extremal coweight lam."""
        if not self.dominant(lam):
            raise ValueError("lambda is not dominant")
        num = den = 1
        for c in self._pos_roots:
            ht = sum(c)
            num *= pair(self.root_from_alpha_coords(c), lam) + ht
            den *= ht
        q, r = divmod(num, den)
        assert r == 0
        return q


def root_datum(name: str) -> RootDatum:
    """Cached datum for a type string like "A2", "D4", "E6"."""
    cache = root_datum.__dict__.setdefault("_cache", {})
    got = cache.get(name)
    if got is None:
        family, rank = name[:1].upper(), name[1:]
        if not rank.isdigit():
            raise ValueError(f"malformed type string {name!r}")
        got = RootDatum(family, int(rank))
        cache[name] = got
    return got


# -- weights and coweights ---------------------------------------------


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    datum: RootDatum
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.datum.rank:
            raise ValueError("rank mismatch")

    def __add__(self, other):
        _same_datum(self, other, Weight)
        return Weight(self.datum, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        _same_datum(self, other, Weight)
        return Weight(self.datum, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(self.datum, tuple(-a for a in self.coords))

    def __rmul__(self, k: int):
        return Weight(self.datum, tuple(k * a for a in self.coords))

    def is_zero(self):
        return all(a == 0 for a in self.coords)


@dataclass(frozen=True)
class Coweight:
    """Element of the coroot lattice in simple-coroot coordinates."""

    datum: RootDatum
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.datum.rank:
            raise ValueError("rank mismatch")

    def __add__(self, other):
        _same_datum(self, other, Coweight)
        return Coweight(self.datum, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        _same_datum(self, other, Coweight)
        return Coweight(self.datum, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Coweight(self.datum, tuple(-a for a in self.coords))

    def __rmul__(self, k: int):
        return Coweight(self.datum, tuple(k * a for a in self.coords))

    def is_zero(self):
        return all(a == 0 for a in self.coords)


def _same_datum(a, b, cls=None):
    if cls is not None and not isinstance(b, cls):
        raise TypeError(f"expected {cls.__name__}, got {type(b).__name__}")
    if a.datum != b.datum:
        raise ValueError("rank mismatch: operands belong to different root data")


def pair(nu: Weight, mu: Coweight) -> int:
    """Canonical pairing <nu, mu>; bilinear, <alpha_j, h_i> = a_ij."""
    if not isinstance(nu, Weight) or not isinstance(mu, Coweight):
        raise TypeError("pair expects (Weight, Coweight)")
    if nu.datum != mu.datum:
        raise ValueError("rank mismatch")
    return sum(a * b for a, b in zip(nu.coords, mu.coords))


# -- Weyl group elements -----------------------------------------------


class WeylElement:
    """Group element as the integer matrix of its coroot-lattice action."""

    __slots__ = ("datum", "matrix", "_length", "_inv", "_word", "_lex_word")

    def __init__(self, datum: RootDatum, matrix):
        self.datum = datum
        self.matrix = matrix
        self._length = None
        self._inv = None
        self._word = None
        self._lex_word = None

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.datum == other.datum
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.datum.family, self.datum.rank, self.matrix))

    def __repr__(self):
        return "W[e]" if self.is_identity else "W[" + ",".join(map(str, self.word())) + "]"

    def __mul__(self, other):
        if not isinstance(other, WeylElement) or other.datum != self.datum:
            raise ValueError("cannot multiply elements of different groups")
        return self.datum.element(_matmul(self.matrix, other.matrix))

    @property
    def is_identity(self):
        return self.matrix == self.datum._identity_matrix

    @property
    def length(self) -> int:
        """Coxeter length: number of positive roots sent to negative roots."""
        if self._length is None:
            neg = 0
            for c in self.datum._pos_roots:
                img = _matvec(self.matrix, c)
                if any(x < 0 for x in img):
                    neg += 1
            self._length = neg
        return self._length

    def right_descents(self):
        """Indices j with w*s_j < w, i.e. w sends alpha_j to a negative root."""
        out = []
        for j in self.datum.index_set:
            col = tuple(self.matrix[r][j - 1] for r in range(self.datum.rank))
            if any(x < 0 for x in col):
                out.append(j)
        return tuple(out)

    def left_descents(self):
        return self.inverse().right_descents()

    def inverse(self) -> "WeylElement":
        if self._inv is None:
            w = self.datum.evaluate(tuple(reversed(self.word())))
            self._inv = w
            if w._inv is None:
                w._inv = self
        return self._inv

    def word(self):
        """A canonical reduced word (smallest right descent peeled last)."""
        if self._word is None:
            out = []
            m = self
            while not m.is_identity:
                j = min(m.right_descents())
                out.append(j)
                m = m * self.datum.simple_reflection(j)
            out.reverse()
            self._word = tuple(out)
        return self._word

    def lex_word(self):
        """The lexicographically least reduced word."""
        if self._lex_word is None:
            out = []
            minv = self.inverse().matrix
            ident = self.datum._identity_matrix
            while minv != ident:
                for j in self.datum.index_set:
                    col = tuple(minv[r][j - 1] for r in range(self.datum.rank))
                    if any(x < 0 for x in col):
                        break
                else:  # pragma: no cover
                    raise RuntimeError("no descent found")
                out.append(j)
                minv = _matmul(minv, self.datum._gens[j])
            self._lex_word = tuple(out)
        return self._lex_word

    def act(self, v):
        """Action on a Weight or Coweight."""
        if isinstance(v, Coweight):
            if v.datum != self.datum:
                raise ValueError("rank mismatch")
            return Coweight(v.datum, _matvec(self.matrix, v.coords))
        if isinstance(v, Weight):
            if v.datum != self.datum:
                raise ValueError("rank mismatch")
            minv = self.inverse().matrix
            n = v.coords
            r = self.datum.rank
            return Weight(
                v.datum, tuple(sum(n[k] * minv[k][i] for k in range(r)) for i in range(r))
            )
        raise TypeError("act expects a Weight or a Coweight")


def act_coweight(w: WeylElement, mu: Coweight) -> Coweight:
    return w.act(mu)


def act_weight(w: WeylElement, nu: Weight) -> Weight:
    return w.act(nu)


def longest_element(datum: RootDatum):
    """The longest element together with a reduced word spelling it."""
    return datum.longest_element(), datum.reference_word()


def full_group(datum: RootDatum):
    return datum.full_group()


def bruhat_leq(z: WeylElement, x: WeylElement) -> bool:
    """Strong Bruhat order, decided by the subword property.

    Uses the standard lifting recursion on a left descent of x; results
    are memoized per datum.
    """
    if z.datum != x.datum:
        raise ValueError("elements of different groups are incomparable")
    datum = z.datum
    memo = datum._cache.setdefault("bruhat", {})

    def rec(zz, xx):
        if zz.is_identity:
            return True
        lz, lx = zz.length, xx.length
        if lz > lx:
            return False
        if lz == lx:
            return zz == xx
        key = (zz.matrix, xx.matrix)
        r = memo.get(key)
        if r is None:
            j = min(xx.left_descents())
            s = datum.simple_reflection(j)
            sz = s * zz
            r = rec(sz, s * xx) if sz.length < lz else rec(zz, s * xx)
            memo[key] = r
        return r

    return rec(z, x)


def elements_leq(x: WeylElement):
    """The lower Bruhat interval {z : z <= x} as a frozenset."""
    return frozenset(w for w in x.datum.full_group() if bruhat_leq(w, x))


def coset_min(x: WeylElement, lam: Coweight) -> WeylElement:
    """Minimal representative of the coset x*W_lam (lam dominant)."""
    datum = _coset_check(x, lam)
    stab = _stabilizer_indices(datum, lam)
    m = x
    moved = True
    while moved:
        moved = False
        for j in stab:
            if j in m.right_descents():
                m = m * datum.simple_reflection(j)
                moved = True
                break
    return m


def coset_max(x: WeylElement, lam: Coweight) -> WeylElement:
    """Maximal representative of the coset x*W_lam (lam dominant)."""
    datum = _coset_check(x, lam)
    stab = _stabilizer_indices(datum, lam)
    m = x
    moved = True
    while moved:
        moved = False
        for j in stab:
            if j not in m.right_descents():
                m = m * datum.simple_reflection(j)
                moved = True
                break
    return m


def _coset_check(x, lam):
    if x.datum != lam.datum:
        raise ValueError("rank mismatch")
    if not x.datum.dominant(lam):
        raise ValueError("lambda is not dominant")
    return x.datum


def _stabilizer_indices(datum, lam):
    return tuple(j for j in datum.index_set if pair(datum.simple_root(j), lam) == 0)


def minimal_coset_reps(datum: RootDatum, lam: Coweight):
    """W^lam_min, ordered by (length, canonical word)."""
    key = ("wmin", lam.coords)
    got = datum._cache.get(key)
    if got is None:
        got = tuple(
            sorted(
                (w for w in datum.full_group() if coset_min(w, lam) == w),
                key=lambda w: (w.length, w.word()),
            )
        )
        datum._cache[key] = got
    return got


def maximal_coset_reps(datum: RootDatum, lam: Coweight):
    """W^lam_max, ordered by (length, canonical word)."""
    key = ("wmax", lam.coords)
    got = datum._cache.get(key)
    if got is None:
        got = tuple(
            sorted(
                (w for w in datum.full_group() if coset_max(w, lam) == w),
                key=lambda w: (w.length, w.word()),
            )
        )
        datum._cache[key] = got
    return got


def omega(datum: RootDatum):
    """The index permutation with alpha_{omega(j)} = -w0 . alpha_j."""
    return datum.omega_perm()
