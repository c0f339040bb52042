"""Regular subdivisions of hypersimplices and matroid polytopes.

A lift assigns a rational height to every vertex ``e_I``. The cells of the
regular subdivision are the projections of the lower faces of the lifted
point set; they are computed exactly from the facets of the cone over the
lifted points together with the upward ray.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, lcm

from . import errors
from .hull import ConeHull, pulling_triangulation
from .linalg import det, int_rank
from .lp import linprog
from .matroid import (Matroid, check_exchange, coloops, components, elements_of,
                      loops, mask_of, uniform)


@dataclass(frozen=True)
class TropicalPlueckerVector:
    """Heights P_I for every d-subset I, keyed by basis bitmask."""

    n: int
    d: int
    values: dict

    def __post_init__(self):
        for I in combinations(range(self.n), self.d):
            if mask_of(I) not in self.values:
                raise errors.InvalidInput(f"lift has no value for {I}")

    def __getitem__(self, I):
        if not isinstance(I, int):
            I = mask_of(I)
        return self.values[I]

    @classmethod
    def from_function(cls, n, d, fn):
        return cls(n, d, {mask_of(I): Fraction(fn(I)) for I in combinations(range(n), d)})

    @classmethod
    def zero(cls, n, d):
        return cls.from_function(n, d, lambda I: 0)

    @classmethod
    def indicator(cls, M):
        """0 on the bases of M and 1 on every other d-subset."""
        return cls.from_function(M.n, M.rank, lambda I: 0 if M.is_basis(I) else 1)


def is_tropical_pluecker(P):
    """Check every three-term relation; returns (ok, witness).

    The witness is ``(S, i, j, k, l)`` with the three sums, 0-indexed.
    """
    n, d = P.n, P.d
    if d < 2 or n - d < 2:
        return True, None
    for S in combinations(range(n), d - 2):
        s = mask_of(S)
        rest = [e for e in range(n) if not s >> e & 1]
        for i, j, k, l in combinations(rest, 4):
            def v(a, b):
                return P.values[s | (1 << a) | (1 << b)]
            sums = (v(i, j) + v(k, l), v(i, k) + v(j, l), v(i, l) + v(j, k))
            low = min(sums)
            if sum(1 for x in sums if x == low) < 2:
                return False, (S, i, j, k, l, sums)
    return True, None


def tropical_determinant(A, cols):
    d = len(A)
    return min(sum(A[r][c] for r, c in zip(range(d), perm)) for perm in permutations(cols))


def tropical_minors(A):
    """Lift given by the tropical d x d minors of a d x n matrix."""
    d, n = len(A), len(A[0])
    A = [[Fraction(x) for x in row] for row in A]
    return TropicalPlueckerVector(
        n, d, {mask_of(I): tropical_determinant(A, I) for I in combinations(range(n), d)})


def random_tropical_minors(d, n, rng, low=-6, high=6):
    return tropical_minors([[rng.randint(low, high) for _ in range(n)] for _ in range(d)])


def affine_dim(vertex_masks, n):
    rows = [[m >> e & 1 for e in range(n)] for m in vertex_masks]
    return int_rank(rows) - 1


@dataclass(frozen=True)
class Cell:
    """A face of a subdivision, given by the bases at its vertices."""

    vertices: tuple  # sorted basis bitmasks
    dim: int
    matroid: Matroid = None

    @property
    def matroidal(self):
        return self.matroid is not None


def make_cell(vertex_masks, n, d):
    vs = tuple(sorted(vertex_masks))
    dim = affine_dim(vs, n)
    m = None
    if check_exchange(n, vs) is None:
        m = Matroid(n, d, vs)
    return Cell(vs, dim, m)


@dataclass
class Subdivision:
    n: int
    d: int
    support: Matroid
    facets: list
    interior_faces: list
    f_vector: dict
    volumes: list = field(default_factory=list)

    def interior_of_codim(self, c):
        return [F for F in self.interior_faces if self.n - F.dim == c]


def eulerian(n, k):
    """Eulerian number A(n, k): permutations of n with k descents."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1)


def hypersimplex_volume(d, n):
    """Normalized volume of the hypersimplex, an Eulerian number."""
    return eulerian(n - 1, d - 1)


def _lattice_volume(points, n):
    """Normalized volume of a full-dimensional simplex in the lattice sum(x)=d."""
    v0 = points[0]
    rows = [[p[k] - v0[k] for k in range(n - 1)] for p in points[1:]]
    return abs(det(rows))


def polytope_volume(M):
    """Normalized volume of Poly_M by a pulling triangulation of its own hull."""
    n = M.n
    pts = [tuple(b >> e & 1 for e in range(n)) for b in M.bases]
    hull = ConeHull([(1,) + p[:-1] for p in pts])
    total = 0
    for s in pulling_triangulation(hull):
        total += _lattice_volume([pts[i] for i in elements_of(s)], n)
    return total


def regular_subdivision(P, support=None, verify_volume=True):
    """Regular subdivision of Delta(d, n), or of Poly_M when ``support`` is given.

    With a support matroid only the heights of its bases are used.
    """
    n, d = P.n, P.d
    if support is None:
        support = uniform(d, n)
    points = list(support.bases)
    heights = [P.values[b] for b in points]
    scale = lcm(*[h.denominator for h in heights]) if heights else 1
    coords = [tuple(b >> e & 1 for e in range(n)) for b in points]
    gens = [(1,) + c[:-1] + (int(h * scale),) for c, h in zip(coords, heights)]
    ray = len(gens)
    gens.append((0,) * n + (1,))
    hull = ConeHull(gens)
    raybit = 1 << ray

    lower = [f for f in hull.facets if not f & raybit]
    boundary = [f & ~raybit for f in hull.facets if f & raybit]

    def masks_to_bases(f):
        return [points[i] for i in elements_of(f)]

    facets = [make_cell(masks_to_bases(f), n, d) for f in sorted(lower)]

    # interior faces: intersections of lower facets avoiding every boundary facet
    def interior(f):
        return not any(f & b == f for b in boundary)

    seen = set(f for f in lower if interior(f))
    frontier = list(seen)
    while frontier:
        nxt = []
        for f in frontier:
            for g in lower:
                h = f & g
                if h and h not in seen and interior(h):
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    faces = [make_cell(masks_to_bases(f), n, d) for f in seen]
    faces.sort(key=lambda c: (-c.dim, c.vertices))

    f_vector = {}
    for F in faces:
        c = n - F.dim
        f_vector[c] = f_vector.get(c, 0) + 1

    volumes = []
    if verify_volume:
        top = hull.dim - 1
        for f in sorted(lower):
            vol = 0
            for s in pulling_triangulation(hull, f, top):
                vol += _lattice_volume([coords[i] for i in elements_of(s)], n)
            volumes.append(vol)
        if support == uniform(d, n):
            expected = hypersimplex_volume(d, n)
        else:
            expected = polytope_volume(support)
        if sum(volumes) != expected:
            raise errors.VolumeCertificateFailure(
                f"facet volumes sum to {sum(volumes)}, expected {expected}")
    return Subdivision(n, d, support, facets, faces, dict(sorted(f_vector.items())), volumes)


def is_matroidal(S):
    """True when every facet and interior face is a matroid polytope."""
    for C in list(S.facets) + list(S.interior_faces):
        if not C.matroidal:
            return False, C
    return True, None


def face_matroid(C):
    if not C.matroidal:
        raise errors.NotMatroidal(f"cell with {len(C.vertices)} vertices is not matroidal")
    return C.matroid


def interior_f_vector(S):
    """Interior face counts by codimension, checked against component counts."""
    ok, bad = is_matroidal(S)
    if not ok:
        raise errors.NotMatroidal("subdivision is not matroidal")
    out = {}
    for F in S.interior_faces:
        c = S.n - F.dim
        if len(components(F.matroid)) != c:
            raise errors.DimComponentMismatch(
                f"face of dimension {F.dim} has {len(components(F.matroid))} components")
        out[c] = out.get(c, 0) + 1
    return dict(sorted(out.items()))


def is_interior_by_matroid(C):
    return not loops(C.matroid) and not coloops(C.matroid)


def fvector_bound(d, n, c):
    """Upper bound on the number of interior faces of dimension n - c."""
    if not 1 <= c <= min(d, n - d):
        raise errors.InvalidInput(f"c={c} outside 1..{min(d, n - d)}")
    return factorial(n - c - 1) // (factorial(d - c) * factorial(n - d - c) * factorial(c - 1))


def check_fvector_bound(S, series_parallel=None):
    """Compare interior face counts with the bound for every codimension."""
    if series_parallel is None:
        from .invariants import is_series_parallel as series_parallel
    f = interior_f_vector(S)
    rows = []
    for c in range(1, min(S.d, S.n - S.d) + 1):
        fc = f.get(c, 0)
        b = fvector_bound(S.d, S.n, c)
        rows.append({"c": c, "f": fc, "bound": b, "satisfied": fc <= b})
    all_sp = all(series_parallel(face_matroid(F)) for F in S.facets)
    equality = all(r["f"] == r["bound"] for r in rows)
    return {
        "rows": rows,
        "satisfied": all(r["satisfied"] for r in rows),
        "equality": equality,
        "all_series_parallel": all_sp,
    }


def cell_certificate(P, vertex_masks, points=None):
    """LP certificate that ``vertex_masks`` is a cell of the regular subdivision.

    Returns ``lam`` with P_I + lam.e_I constant on the cell and strictly larger
    elsewhere, or None when no such functional exists.
    """
    n = P.n
    if points is None:
        points = [mask_of(I) for I in combinations(range(n), P.d)]
    cell = set(vertex_masks)
    # variables: lam_0..lam_{n-1}, c, s
    A_eq, b_eq, A_ub, b_ub = [], [], [], []
    for I in points:
        e = [I >> k & 1 for k in range(n)]
        if I in cell:
            A_eq.append(e + [-1, 0])
            b_eq.append(-P.values[I])
        else:
            A_ub.append([-x for x in e] + [1, 1])
            b_ub.append(P.values[I])
    A_ub.append([0] * (n + 1) + [1])
    b_ub.append(1)
    obj = [0] * (n + 1) + [1]
    res = linprog(obj, A_ub, b_ub, A_eq, b_eq, free=range(n + 1))
    if res.status != "optimal":
        return None
    if len(cell) < len(points) and res.value <= 0:
        return None
    return res.x[:n]


def brute_force_cells(P, points=None):
    """Every cell of the regular subdivision, by LP over all vertex subsets."""
    n = P.n
    if points is None:
        points = [mask_of(I) for I in combinations(range(n), P.d)]
    out = []
    for k in range(1, len(points) + 1):
        for sub in combinations(points, k):
            if cell_certificate(P, sub, points) is not None:
                out.append(tuple(sorted(sub)))
    return out


def random_lift_subdivision(d, n, rng=None, seed=0):
    rng = rng or random.Random(seed)
    P = random_tropical_minors(d, n, rng)
    return P, regular_subdivision(P)
