"""Localized torus-equivariant K-class of a matroid.

For every basis I the tangent cone of the matroid polytope at e_I is a cone
generated by roots e_j - e_i. Its lattice-point generating function, times
the product of (1 - x_j/x_i) over all i in I and j outside I, is a Laurent
polynomial f_I. The tuple (f_I) satisfies the GKM congruences.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from . import errors
from .hull import ConeHull, lattice_index, pulling_triangulation
from .linalg import solve
from .matroid import elements_of, mask_of


def _normalize(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class LaurentPoly:
    """Finite sum of monomials x^a (a in Z^n) with exact rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {tuple(a): _normalize(c) for a, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def binomial(cls, b):
        """1 - x^b."""
        n = len(b)
        out = cls(n, {(0,) * n: 1})
        out.terms[tuple(b)] = out.terms.get(tuple(b), 0) - 1
        return cls(n, out.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return LaurentPoly(self.n, out)

    def __neg__(self):
        return LaurentPoly(self.n, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly(self.n, {a: c * other for a, c in self.terms.items()})
        out = {}
        for a, c in self.terms.items():
            for b, e in other.terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                out[k] = out.get(k, 0) + c * e
        return LaurentPoly(self.n, out)

    def shift(self, exp):
        return LaurentPoly(self.n, {tuple(x + y for x, y in zip(a, exp)): c
                                    for a, c in self.terms.items()})

    def substitute(self, i, j):
        """Set x_i := x_j."""
        out = {}
        for a, c in self.terms.items():
            b = list(a)
            b[j] += b[i]
            b[i] = 0
            b = tuple(b)
            out[b] = out.get(b, 0) + c
        return LaurentPoly(self.n, out)

    def permute(self, perm):
        """Rename x_e to x_{perm[e]}."""
        out = {}
        for a, c in self.terms.items():
            b = [0] * self.n
            for e, v in enumerate(a):
                b[perm[e]] = v
            out[tuple(b)] = c
        return LaurentPoly(self.n, out)

    def is_degree_zero(self):
        return all(sum(a) == 0 for a in self.terms)

    def divide_binomial(self, b):
        """Exact quotient by 1 - x^b, or None when it does not divide."""
        p = next(k for k, v in enumerate(b) if v)
        cosets = {}
        for a, c in self.terms.items():
            k = a[p] // b[p]
            base = tuple(x - k * y for x, y in zip(a, b))
            cosets.setdefault(base, {})[k] = c
        out = {}
        for base, coeffs in cosets.items():
            if sum(coeffs.values()) != 0:
                return None
            lo, hi = min(coeffs), max(coeffs)
            acc = 0
            for k in range(lo, hi):
                acc += coeffs.get(k, 0)
                if acc:
                    out[tuple(x + k * y for x, y in zip(base, b))] = acc
        return LaurentPoly(self.n, out)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        out = ""
        for a, c in sorted(self.terms.items(), key=lambda t: (sum(map(abs, t[0])), t[0])):
            mono = "*".join(f"x{k + 1}^{v}" if v != 1 else f"x{k + 1}"
                            for k, v in enumerate(a) if v)
            mag = abs(c)
            body = (f"{mag}*{mono}" if mag != 1 else mono) if mono else str(mag)
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


def _orient(b):
    """Primitive direction with first nonzero entry positive, and the sign flip."""
    k = next(i for i, v in enumerate(b) if v)
    return (tuple(b), False) if b[k] > 0 else (tuple(-v for v in b), True)


class RationalFn:
    """numerator / prod over b of (1 - x^b), with denominators kept factored."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        counts = Counter()
        for b in den:
            if not any(b):
                raise ZeroDivisionError("1 - x^0 vanishes")
            ob, flipped = _orient(b)
            if flipped:
                # 1/(1 - x^-c) = -x^c / (1 - x^c)
                num = -num.shift(ob)
            counts[ob] += 1
        self.num = num
        self.den = counts
        self._cancel()

    def _cancel(self):
        for b in list(self.den):
            while self.den[b]:
                q = self.num.divide_binomial(b)
                if q is None:
                    break
                self.num = q
                self.den[b] -= 1
            if not self.den[b]:
                del self.den[b]

    @property
    def n(self):
        return self.num.n

    def is_laurent(self):
        return not self.den

    def to_laurent(self):
        if self.den:
            raise errors.NotLaurent(f"denominator {dict(self.den)} does not cancel")
        return self.num

    def _expanded(self, den):
        """Numerator over the larger denominator ``den`` (a Counter containing self.den)."""
        num = self.num
        for b, k in den.items():
            for _ in range(k - self.den.get(b, 0)):
                num = num * LaurentPoly.binomial(b)
        return num

    def __add__(self, other):
        den = self.den | other.den
        num = self._expanded(den) + other._expanded(den)
        return RationalFn(num, list(den.elements()))

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return RationalFn(self.num * other, list(self.den.elements()))
        return RationalFn(self.num * other.num,
                          list(self.den.elements()) + list(other.den.elements()))

    def times_binomial(self, b):
        ob, flipped = _orient(b)
        if self.den.get(ob):
            den = Counter(self.den)
            den[ob] -= 1
            num = self.num
            if flipped:
                # 1 - x^-c = -x^-c (1 - x^c)
                num = -num.shift(tuple(-v for v in ob))
            return RationalFn(num, list(den.elements()))
        return RationalFn(self.num * LaurentPoly.binomial(b), list(self.den.elements()))

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        den = self.den | other.den
        return self._expanded(den) == other._expanded(den)

    def __repr__(self):
        dens = " ".join(f"(1-x^{b})" + (f"^{k}" if k > 1 else "") for b, k in self.den.items())
        return f"({self.num}) / [{dens}]" if dens else repr(self.num)


# -- cones ---------------------------------------------------------------

def tangent_cone_generators(M, I):
    """Exchange roots e_j - e_i at the vertex e_I of Poly_M."""
    if not isinstance(I, int):
        I = mask_of(I)
    if I not in M:
        raise errors.NotABasis(f"{elements_of(I)} is not a basis")
    out = []
    for i in elements_of(I):
        for j in range(M.n):
            if I >> j & 1:
                continue
            if (I & ~(1 << i)) | (1 << j) in M:
                v = [0] * M.n
                v[j], v[i] = 1, -1
                out.append(tuple(v))
    return out


def _lex_sign(values):
    for v in values:
        if v:
            return 1 if v > 0 else -1
    return 0


def cone_hilbert_series(generators, n=None):
    """Generating function of all lattice points of a pointed rational cone.

    Triangulates the cone on its extreme rays and sums half-open fundamental
    parallelepipeds; the half-open rule comes from a symbolically perturbed
    interior reference point, so each lattice point is counted once.
    """
    gens = [tuple(g) for g in generators]
    if n is None:
        n = len(gens[0]) if gens else 0
    if not gens or not any(any(g) for g in gens):
        return RationalFn(LaurentPoly.one(n))
    hull = ConeHull(gens)
    # pointedness: no facet normal set may leave a line; a pointed cone has
    # each generator strictly positive on some facet normal
    for g in hull.proj:
        if any(g) and all(sum(a * b for a, b in zip(nrm, g)) == 0 for nrm in hull.normals):
            raise errors.NotPointed("cone contains a line")
    rays = hull.extreme()
    if not hull.normals and hull.dim:
        raise errors.NotPointed("cone contains a line")
    ray_vecs = [gens[i] for i in rays]
    total = None
    for simplex in pulling_triangulation(hull, generators=rays):
        G = [gens[i] for i in elements_of(simplex)]
        # coordinates of each ray in this simplicial basis
        coords = [solve(G, r) for r in ray_vecs]
        open_side = []
        for k in range(len(G)):
            lead = sum(c[k] for c in coords)
            open_side.append(_lex_sign([lead] + [c[k] for c in coords]) < 0)
        num = LaurentPoly(n)
        D = lattice_index(G)
        for t in product(range(D), repeat=len(G)):
            lam = [Fraction(tk, D) if (tk or not op) else Fraction(1)
                   for tk, op in zip(t, open_side)]
            pt = [sum(l * g[c] for l, g in zip(lam, G)) for c in range(n)]
            if all(Fraction(x).denominator == 1 for x in pt):
                num = num + LaurentPoly.monomial(tuple(int(x) for x in pt))
        term = RationalFn(num, G)
        total = term if total is None else total + term
    return total


def vertex_cone_product(n, I):
    """prod over i in I, j not in I of (1 - x_j/x_i), as exponent vectors."""
    out = []
    for i in elements_of(I):
        for j in range(n):
            if not I >> j & 1:
                v = [0] * n
                v[j], v[i] = 1, -1
                out.append(tuple(v))
    return out


@dataclass
class EquivariantClass:
    n: int
    d: int
    fI: dict  # basis mask -> LaurentPoly; missing keys are zero

    def __getitem__(self, I):
        if not isinstance(I, int):
            I = mask_of(I)
        return self.fI.get(I, LaurentPoly(self.n))


def localized_f(M, I):
    h = cone_hilbert_series(tangent_cone_generators(M, I), M.n)
    for b in vertex_cone_product(M.n, I):
        h = h.times_binomial(b)
    try:
        return h.to_laurent()
    except errors.NotLaurent as exc:
        raise errors.NotLaurent(f"f_I at {elements_of(I)} is not Laurent: {exc}") from None


def localized_class(M):
    return EquivariantClass(M.n, M.rank, {I: localized_f(M, I) for I in M.bases})


def check_gkm(K):
    """Check f_{B+i} == f_{B+j} mod (1 - x_i/x_j); returns (ok, witness)."""
    n, d = K.n, K.d
    for B in combinations(range(n), d - 1):
        b = mask_of(B)
        rest = [e for e in range(n) if not b >> e & 1]
        for i, j in combinations(rest, 2):
            diff = K[b | (1 << i)] - K[b | (1 << j)]
            if diff.substitute(i, j):
                return False, {"B": list(B), "i": i, "j": j}
    return True, None


def check_valuative(S, M=None, cache=None):
    """Compare f_I(M) with the signed sum over interior faces, at every basis of M.

    Returns (ok, report) where report maps each basis mask to a bool.
    """
    from .matroid import components

    M = M or S.support
    if cache is None:
        cache = {}

    def cls(N):
        if N not in cache:
            cache[N] = localized_class(N)
        return cache[N]

    whole = cls(M)
    faces = [(F.matroid, (-1) ** (len(components(F.matroid)) - 1)) for F in S.interior_faces]
    report = {}
    for I in M.bases:
        rhs = LaurentPoly(M.n)
        for N, sign in faces:
            if I in N:
                rhs = rhs + cls(N)[I] * sign
        report[I] = rhs == whole[I]
    return all(report.values()), report


def brion_check(M):
    """Lattice points of Poly_M against the sum of its vertex-cone series."""
    n = M.n
    lhs = RationalFn(LaurentPoly(n, {tuple(b >> e & 1 for e in range(n)): 1 for b in M.bases}))
    rhs = None
    for I in M.bases:
        h = cone_hilbert_series(tangent_cone_generators(M, I), n)
        term = h * LaurentPoly.monomial(tuple(I >> e & 1 for e in range(n)))
        rhs = term if rhs is None else rhs + term
    return lhs == rhs
