"""Exact cone geometry: facets by double description, pulling triangulations.

Everything works on integer vectors and bitmasks over the generator list.
A polytope is handled as the cone over its homogenized vertices ``(1, v)``.
"""

from fractions import Fraction
from math import gcd

from .errors import NotPointed
from .linalg import clear_denominators, int_rank, primitive, rref


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class ConeHull:
    """Facet structure of the cone spanned by ``gens``.

    ``facets`` is a list of bitmasks over the generators (the generators lying on
    each facet); ``normals`` are the matching inner normals in the projected
    coordinates ``coords``. ``dim`` is the dimension of the cone.
    """

    def __init__(self, gens):
        self.gens = [tuple(int(x) for x in g) for g in gens]
        self.all_mask = (1 << len(self.gens)) - 1
        self._rank_cache = {}
        self._extreme = None
        if not self.gens or not any(any(g) for g in self.gens):
            self.dim = 0
            self.coords = []
            self.facets, self.normals = [], []
            return
        _, self.coords = rref(self.gens)
        self.dim = len(self.coords)
        self.proj = [tuple(g[c] for c in self.coords) for g in self.gens]
        self.normals, self.facets = _double_description(self.proj, self.dim)

    def rank(self, mask):
        """Linear rank of the generators selected by ``mask``."""
        r = self._rank_cache.get(mask)
        if r is None:
            rows = [self.proj[i] for i in _bits(mask)] if self.dim else []
            r = int_rank(rows) if rows else 0
            self._rank_cache[mask] = r
        return r

    def extreme(self):
        """Indices of generators spanning an extreme ray (first of any duplicates)."""
        if self._extreme is not None:
            return self._extreme
        out = []
        seen = set()
        for i, g in enumerate(self.gens):
            if not any(g):
                continue
            face = self.all_mask
            for f in self.facets:
                if f >> i & 1:
                    face &= f
            if self.rank(face) == 1:
                key = primitive(g)
                if key not in seen:
                    seen.add(key)
                    out.append(i)
        self._extreme = out
        return out

    def face_facets(self, face, dim):
        """Facets (as masks) of the face ``face`` whose cone dimension is ``dim``."""
        out = set()
        for f in self.facets:
            g = face & f
            if g != face and g and g not in out and self.rank(g) == dim - 1:
                out.add(g)
        return sorted(out)


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _double_description(gens, dim):
    """Extreme rays of {a : a.g >= 0 for all g}, with their tight sets.

    The cone spanned by ``gens`` is full dimensional in R^dim, so the dual
    cone is pointed and its extreme rays are exactly the facet normals.
    """
    order = list(range(len(gens)))
    # initial simplicial cone from ``dim`` independent constraints
    basis = []
    rows = []
    for i in order:
        trial = rows + [gens[i]]
        if int_rank(trial) == len(trial):
            rows = trial
            basis.append(i)
            if len(rows) == dim:
                break
    if len(rows) < dim:
        raise NotPointed("generators do not span the ambient space")

    # rays of the initial cone are the columns of rows^{-1}
    inv = _inverse(rows)
    rays = []
    for k in range(dim):
        col = clear_denominators([inv[r][k] for r in range(dim)])
        if _dot(gens[basis[k]], col) < 0:
            col = tuple(-x for x in col)
        zero = 0
        for j in basis:
            if j != basis[k]:
                zero |= 1 << j
        rays.append((col, zero))

    for i in order:
        if i in basis:
            continue
        g = gens[i]
        plus, minus, zero = [], [], []
        for r in rays:
            s = _dot(g, r[0])
            if s > 0:
                plus.append((r, s))
            elif s < 0:
                minus.append((r, s))
            else:
                zero.append(r)
        bit = 1 << i
        new = [(v, z | bit) for v, z in zero] + [r for r, _ in plus]
        if minus and plus:
            all_rays = [r for r, _ in plus] + [r for r, _ in minus] + zero
            for (p, sp) in plus:
                for (m, sm) in minus:
                    common = p[1] & m[1]
                    if common.bit_count() < dim - 2:
                        continue
                    ok = True
                    for q in all_rays:
                        if q is p or q is m:
                            continue
                        if q[1] & common == common:
                            ok = False
                            break
                    if not ok:
                        continue
                    v = [sp * a - sm * b for a, b in zip(m[0], p[0])]
                    new.append((primitive(v), common | bit))
        rays = new

    normals = [r[0] for r in rays]
    facets = [r[1] for r in rays]
    return normals, facets


def _inverse(rows):
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    R, _ = rref(aug)
    return [r[n:] for r in R]


def pulling_triangulation(hull, face=None, dim=None, generators=None):
    """Pulling triangulation of a face of the cone (the whole cone by default).

    Only the given generator indices are used as vertices; they default to
    the extreme rays. Returns a list of bitmasks, one per simplicial cone.
    """
    if generators is None:
        generators = hull.extreme()
    allowed = 0
    for i in generators:
        allowed |= 1 << i
    if face is None:
        face, dim = hull.all_mask, hull.dim
    if dim == 0:
        return [0]
    memo = {}

    def tri(f, k):
        f &= allowed
        if f in memo:
            return memo[f]
        if f.bit_count() == k:
            out = [f]
        else:
            v = f & -f
            out = []
            for g in hull.face_facets(f, k):
                if not g & v:
                    out.extend(s | v for s in tri(g, k - 1))
        memo[f] = out
        return out

    return tri(face, dim)


def lattice_index(vectors):
    """gcd of the maximal minors: index of the lattice spanned by ``vectors``
    inside its saturation."""
    from itertools import combinations

    from .linalg import det

    k = len(vectors)
    if k == 0:
        return 1
    n = len(vectors[0])
    g = 0
    for cols in combinations(range(n), k):
        d = det([[v[c] for c in cols] for v in vectors])
        g = gcd(g, int(d))
        if g == 1:
            break
    return g
