"""Matroids on small ground sets, stored as sets of basis bitmasks.

Elements are 0-indexed in the Python API; the JSON layer converts to and
from the 1-indexed convention used in files and on the command line.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import errors
from .linalg import rank as mat_rank

MAX_N = 16


def mask_of(elements):
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _drop_bit(mask, e):
    """Remove position ``e`` from ``mask``, shifting higher bits down."""
    low = (1 << e) - 1
    return (mask & low) | ((mask >> 1) & ~low)


class Matroid:
    """A matroid given by its bases.

    Instances are immutable and compare equal when the ground-set size and
    basis sets agree.
    """

    __slots__ = ("n", "rank", "bases", "_set", "_hash")

    def __init__(self, n, rank, bases):
        if not 0 <= n <= MAX_N:
            raise errors.GroundSetTooLarge(f"ground set size {n} outside 0..{MAX_N}")
        self.n = n
        self.rank = rank
        self._set = frozenset(bases)
        self.bases = tuple(sorted(self._set))
        self._hash = hash((n, self._set))

    def __eq__(self, other):
        return (isinstance(other, Matroid) and self.n == other.n
                and self._set == other._set)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    def __contains__(self, mask):
        return mask in self._set

    @property
    def ground(self):
        return (1 << self.n) - 1

    def is_basis(self, subset):
        return mask_of(subset) in self._set

    def basis_sets(self):
        """Bases as sorted tuples of 0-indexed elements."""
        return [tuple(elements_of(b)) for b in self.bases]

    def rank_of(self, mask):
        return max((b & mask).bit_count() for b in self.bases)

    def restrict(self, mask):
        """Restriction to the elements in ``mask``, relabelled in increasing order."""
        r = self.rank_of(mask)
        keep = elements_of(mask)
        new = set()
        for b in self.bases:
            s = b & mask
            if s.bit_count() == r:
                new.add(_compress(s, keep))
        return Matroid(len(keep), r, new)


def _compress(mask, keep):
    out = 0
    for k, e in enumerate(keep):
        if mask >> e & 1:
            out |= 1 << k
    return out


# -- construction ---------------------------------------------------------

def check_exchange(n, bases):
    """Return a failing triple (B1, B2, i) of the exchange axiom, or None."""
    bset = set(bases)
    for b1 in bases:
        for b2 in bases:
            diff1 = b1 & ~b2
            if not diff1:
                continue
            diff2 = elements_of(b2 & ~b1)
            for i in elements_of(diff1):
                base = b1 & ~(1 << i)
                if not any((base | (1 << j)) in bset for j in diff2):
                    return b1, b2, i
    return None


def from_bases(n, d, subsets, validate=True):
    """Build a matroid from its bases, given as iterables of 0-indexed elements."""
    if not 0 <= n <= MAX_N:
        raise errors.GroundSetTooLarge(f"ground set size {n} outside 0..{MAX_N}")
    masks = set()
    for s in subsets:
        s = list(s)
        if len(set(s)) != d or any(not 0 <= e < n for e in s):
            raise errors.InvalidInput(f"{s} is not a {d}-subset of 0..{n - 1}")
        masks.add(mask_of(s))
    if not masks:
        raise errors.EmptyBases("a matroid needs at least one basis")
    masks = sorted(masks)
    if validate:
        bad = check_exchange(n, masks)
        if bad is not None:
            b1, b2, i = bad
            raise errors.ExchangeAxiomViolation(elements_of(b1), elements_of(b2), i)
    return Matroid(n, d, masks)


def _field_rows(entries, p):
    if p is None:
        return [[Fraction(x) for x in row] for row in entries]
    return [[int(x) % p for x in row] for row in entries]


def from_matrix(entries, p=None):
    """Column matroid of a matrix over Q (``p=None``) or over GF(p).

    Entries may be ints, Fractions or strings such as ``"1/2"``.
    """
    if p is not None and p not in (2, 3, 5, 7):
        raise errors.InvalidInput("finite-field mode supports primes up to 7")
    rows = _field_rows(entries, p)
    if not rows or not rows[0]:
        raise errors.ZeroMatrix("empty matrix")
    n = len(rows[0])
    d = mat_rank(rows, p)
    if d == 0:
        raise errors.ZeroMatrix("the zero matrix has no column matroid")
    cols = [[r[j] for r in rows] for j in range(n)]
    bases = []
    for idx in combinations(range(n), d):
        if mat_rank([cols[j] for j in idx], p) == d:
            bases.append(mask_of(idx))
    return Matroid(n, d, bases)


def from_graph(edges):
    """Cycle matroid of a multigraph; edge ``k`` is element ``k``."""
    edges = [tuple(e) for e in edges]
    if len(edges) > MAX_N:
        raise errors.GroundSetTooLarge(f"{len(edges)} edges exceed {MAX_N}")
    vertices = sorted({v for e in edges for v in e}, key=repr)
    index = {v: k for k, v in enumerate(vertices)}

    def forest(idx):
        parent = list(range(len(vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in idx:
            a, b = (find(index[v]) for v in edges[k])
            if a == b:
                return False
            parent[a] = b
        return True

    n = len(edges)
    # rank = number of vertices minus number of connected components
    parent = list(range(len(vertices)))

    def root(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        a, b = root(index[u]), root(index[v])
        if a != b:
            parent[a] = b
    d = len(vertices) - len({root(i) for i in range(len(vertices))})
    bases = [mask_of(idx) for idx in combinations(range(n), d) if forest(idx)]
    return Matroid(n, d, bases)


def uniform(d, n):
    return Matroid(n, d, [mask_of(c) for c in combinations(range(n), d)])


def whirl_matrix(d, alpha=2):
    """The d x 2d matrix with identity spokes and a rim closed up by ``alpha``.

    ``alpha = 1`` gives the wheel; any other nonzero value gives the whirl.
    Columns ``d..2d-1`` are the rim.
    """
    alpha = Fraction(alpha)
    rows = [[Fraction(int(i == j)) for j in range(d)] + [Fraction(0)] * d
            for i in range(d)]
    for k in range(d - 1):
        rows[k][d + k] = Fraction(1)
        rows[k + 1][d + k] = Fraction(-1)
    rows[0][2 * d - 1] = -alpha
    rows[d - 1][2 * d - 1] = Fraction(1)
    return rows


def wheel(d):
    if d < 2:
        raise errors.InvalidInput("wheels need d >= 2")
    return from_matrix(whirl_matrix(d, 1))


def whirl(d):
    if d < 2:
        raise errors.InvalidInput("whirls need d >= 2")
    w = wheel(d)
    rim = mask_of(range(d, 2 * d))
    return Matroid(w.n, d, set(w.bases) | {rim})


# -- standard operations --------------------------------------------------

def dual(M):
    g = M.ground
    return Matroid(M.n, M.n - M.rank, [g & ~b for b in M.bases])


def loops(M):
    union = 0
    for b in M.bases:
        union |= b
    return [e for e in range(M.n) if not union >> e & 1]


def coloops(M):
    inter = M.ground
    for b in M.bases:
        inter &= b
    return elements_of(inter)


def delete(M, e):
    """Delete element ``e``; higher elements shift down by one."""
    if e in coloops(M):
        raise errors.ColoopDeletion(f"element {e} is a coloop")
    bit = 1 << e
    return Matroid(M.n - 1, M.rank, [_drop_bit(b, e) for b in M.bases if not b & bit])


def contract(M, e):
    """Contract element ``e``; higher elements shift down by one."""
    if e in loops(M):
        raise errors.LoopContraction(f"element {e} is a loop")
    bit = 1 << e
    return Matroid(M.n - 1, M.rank - 1,
                   [_drop_bit(b & ~bit, e) for b in M.bases if b & bit])


def direct_sum(M1, M2):
    return Matroid(M1.n + M2.n, M1.rank + M2.rank,
                   [b1 | (b2 << M1.n) for b1 in M1.bases for b2 in M2.bases])


def two_sum(M1, e1, M2, e2):
    """2-sum along terminals ``e1`` of M1 and ``e2`` of M2.

    The ground set is M1 minus e1 (in order) followed by M2 minus e2.
    """
    for M, e in ((M1, e1), (M2, e2)):
        if M.n < 2:
            raise errors.DegenerateTerminal("both matroids need at least two elements")
        if e in loops(M) or e in coloops(M):
            raise errors.DegenerateTerminal(f"terminal {e} is a loop or coloop")
    t1, t2 = 1 << e1, 1 << e2
    shift = M1.n - 1
    with1 = [_drop_bit(b & ~t1, e1) for b in M1.bases if b & t1]
    without1 = [_drop_bit(b, e1) for b in M1.bases if not b & t1]
    with2 = [_drop_bit(b & ~t2, e2) << shift for b in M2.bases if b & t2]
    without2 = [_drop_bit(b, e2) << shift for b in M2.bases if not b & t2]
    bases = {a | b for a in with1 for b in without2}
    bases |= {a | b for a in without1 for b in with2}
    return Matroid(M1.n + M2.n - 2, M1.rank + M2.rank - 1, bases)


def parallel_ext(M, e):
    """Add a new element ``M.n`` parallel to ``e``."""
    if e in loops(M):
        raise errors.LoopParallel(f"element {e} is a loop")
    bit, new = 1 << e, 1 << M.n
    extra = [(b & ~bit) | new for b in M.bases if b & bit]
    return Matroid(M.n + 1, M.rank, list(M.bases) + extra)


def series_ext(M, e):
    """Add a new element ``M.n`` in series with ``e``."""
    if e in coloops(M):
        raise errors.ColoopSeries(f"element {e} is a coloop")
    return dual(parallel_ext(dual(M), e))


@dataclass(frozen=True)
class GroundPartition:
    blocks: tuple  # tuple of sorted element tuples
    ranks: tuple

    def __len__(self):
        return len(self.blocks)


def components(M):
    """Connected components, with the rank of each block."""
    parent = list(range(M.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in M.bases:
        ins = elements_of(b)
        for i in ins:
            base = b & ~(1 << i)
            for j in range(M.n):
                if b >> j & 1:
                    continue
                if find(i) != find(j) and (base | (1 << j)) in M:
                    parent[find(i)] = find(j)
    groups = {}
    for e in range(M.n):
        groups.setdefault(find(e), []).append(e)
    blocks = sorted(tuple(g) for g in groups.values())
    ranks = tuple(M.rank_of(mask_of(b)) for b in blocks)
    return GroundPartition(tuple(blocks), ranks)


def is_connected(M):
    return len(components(M)) <= 1


def component_matroids(M):
    """Restrictions of M to its connected components (M is their direct sum)."""
    return [M.restrict(mask_of(b)) for b in components(M).blocks]


def parallel_classes(M):
    """Classes of mutually parallel non-loop elements, each sorted."""
    lp = set(loops(M))
    classes = []
    seen = set()
    for i in range(M.n):
        if i in lp or i in seen:
            continue
        cls = [i]
        for j in range(i + 1, M.n):
            if j not in lp and j not in seen and M.rank_of((1 << i) | (1 << j)) == 1:
                cls.append(j)
        seen.update(cls)
        classes.append(cls)
    return classes


def simplify(M):
    """Keep the smallest element of every parallel class."""
    if loops(M):
        raise errors.HasLoops("simplify needs a loopless matroid")
    keep = mask_of(c[0] for c in parallel_classes(M))
    return M.restrict(keep)


def cosimplify(M):
    if coloops(M):
        raise errors.HasColoops("cosimplify needs a coloopless matroid")
    return dual(simplify(dual(M)))


def _signature(M):
    cnt = [0] * M.n
    pair = [[0] * M.n for _ in range(M.n)]
    for b in M.bases:
        es = elements_of(b)
        for i in es:
            cnt[i] += 1
            for j in es:
                pair[i][j] += 1
    return [(cnt[i], tuple(sorted(pair[i][j] for j in range(M.n) if j != i)))
            for i in range(M.n)]


def find_isomorphism(M1, M2, max_n=10):
    """A permutation ``p`` with ``p[e]`` the image in M2 of element e of M1, or None."""
    if max(M1.n, M2.n) > max_n:
        raise errors.GroundSetTooLarge(f"isomorphism search capped at n={max_n}")
    if (M1.n, M1.rank, len(M1.bases)) != (M2.n, M2.rank, len(M2.bases)):
        return None
    s1, s2 = _signature(M1), _signature(M2)
    if sorted(s1) != sorted(s2):
        return None
    n = M1.n
    # most constrained elements first
    freq = Counter(s1)
    order = sorted(range(n), key=lambda e: (freq[s1[e]], s1[e]))
    b1, b2 = M1.bases, M2.bases
    image = [None] * n
    used = [False] * n

    def consistent(k):
        c1 = Counter(tuple(b >> order[i] & 1 for i in range(k + 1)) for b in b1)
        c2 = Counter(tuple(b >> image[order[i]] & 1 for i in range(k + 1)) for b in b2)
        return c1 == c2

    def search(k):
        if k == n:
            return True
        e = order[k]
        for f in range(n):
            if used[f] or s2[f] != s1[e]:
                continue
            image[e] = f
            used[f] = True
            if consistent(k) and search(k + 1):
                return True
            used[f] = False
            image[e] = None
        return False

    if not search(0):
        return None
    perm = list(image)
    mapped = {mask_of(perm[e] for e in elements_of(b)) for b in b1}
    assert mapped == set(b2)
    return perm


def is_isomorphic(M1, M2, max_n=10):
    return find_isomorphism(M1, M2, max_n) is not None


def relabel(M, perm):
    """Image of M under the ground-set bijection ``e -> perm[e]``."""
    return Matroid(M.n, M.rank, [mask_of(perm[e] for e in elements_of(b)) for b in M.bases])


def separations(M, k=2):
    """Generate all exact k-separations (A, E minus A) with element 0 in A."""
    n = M.n
    r = M.rank
    g = M.ground
    for size in range(k, n - k + 1):
        for rest in combinations(range(1, n), size - 1):
            a = 1 | mask_of(rest)
            if M.rank_of(a) + M.rank_of(g & ~a) - r <= k - 1:
                yield elements_of(a), elements_of(g & ~a)


def two_separations(M):
    """All 2-separations of a connected matroid."""
    if not is_connected(M):
        raise errors.NotConnected("2-separations are only defined here for connected matroids")
    return list(separations(M, 2))


def is_three_connected(M):
    if not is_connected(M):
        return False
    return next(separations(M, 2), None) is None


def two_sum_factors(M, a_elems, b_elems):
    """Split M along a 2-separation into (M1, p1, M2, p2) with M = two_sum.

    The new terminal is the last element of each factor. The ground set of
    ``two_sum(M1, p1, M2, p2)`` lists ``a_elems`` then ``b_elems``, so callers
    comparing with M must apply the same ordering.
    """
    a, b = mask_of(a_elems), mask_of(b_elems)
    d1, d2 = M.rank_of(a), M.rank_of(b)
    n1, n2 = len(a_elems), len(b_elems)
    f1, f2 = set(), set()
    for base in M.bases:
        x = _compress(base & a, a_elems)
        y = _compress(base & b, b_elems)
        if (base & a).bit_count() == d1:
            f1.add(x)
            f2.add(y | (1 << n2))
        else:
            f1.add(x | (1 << n1))
            f2.add(y)
    return Matroid(n1 + 1, d1, f1), n1, Matroid(n2 + 1, d2, f2), n2

