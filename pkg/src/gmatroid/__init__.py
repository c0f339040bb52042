"""Matroid invariants from torus orbits in the Grassmannian: the g-invariant,
beta and Tutte polynomials, matroidal subdivisions of hypersimplices and the
localized equivariant K-class."""

from .errors import MatroidError
from .invariants import GEngine, beta, g_invariant, tutte
from .ktheory import check_gkm, check_valuative, localized_class
from .matroid import Matroid, dual, from_bases, from_graph, from_matrix, uniform, wheel, whirl
from .poly import GPolynomial, TuttePolynomial
from .polytope import TropicalPlueckerVector, is_tropical_pluecker, regular_subdivision

__version__ = "0.1.0"
