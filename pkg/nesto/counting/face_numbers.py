import logging
from functools import lru_cache
from typing import Optional

from ..complex.nested import extended_nested_complex, nested_complex
from ..complex.simplicial import SimplicialComplex
from ..core.building_set import BuildingSet
from ..errors import NotSymmetric
from .polynomial import IntPolynomial, T

logger = logging.getLogger(__name__)


def f_poly_enum(complex_: SimplicialComplex) -> IntPolynomial:
    """Sum of t^|F| over every face F, the empty face included."""
    counts: dict[int, int] = {}
    for face in complex_.faces():
        counts[len(face)] = counts.get(len(face), 0) + 1
    top = max(counts) if counts else 0
    return IntPolynomial(tuple(counts.get(k, 0) for k in range(top + 1)))


def f_of_dual(complex_: SimplicialComplex, d: Optional[int] = None) -> IntPolynomial:
    """f-polynomial of the simple polytope dual to a pure complex: t^d f(1/t), d = facet size."""
    size = complex_.facet_size()
    if d is None:
        d = size
    return f_poly_enum(complex_).reverse(d)


def h_poly(f: IntPolynomial) -> IntPolynomial:
    """h(t) = f(t - 1)."""
    return f.shift(-1)


def gamma_poly(h: IntPolynomial, d: int) -> IntPolynomial:
    """Coefficients of h in the basis t^i (1+t)^(d-2i), peeled from the lowest degree up."""
    if h.degree > d or any(h[i] != h[d - i] for i in range(d + 1)):
        raise NotSymmetric(h.to_list(), d)
    remainder = h
    gammas = []
    for i in range(d // 2 + 1):
        g = remainder[i]
        gammas.append(g)
        if g:
            remainder = remainder - IntPolynomial.monomial(i, g) * (T + 1) ** (d - 2 * i)
    if not remainder.is_zero():
        raise NotSymmetric(h.to_list(), d)
    return IntPolynomial(tuple(gammas))


def nested_dimension(b: BuildingSet) -> int:
    return b.n - len(b.maxima)


@lru_cache(maxsize=None)
def f_nested_enum(b: BuildingSet) -> IntPolynomial:
    """f of the nestohedron P(b), counted from N(b)."""
    return f_of_dual(nested_complex(b), nested_dimension(b))


@lru_cache(maxsize=None)
def f_extended_enum(b: BuildingSet) -> IntPolynomial:
    """f of the extended nestohedron P□(b), counted from N□(b)."""
    return f_of_dual(extended_nested_complex(b), b.n)


def h_nested_enum(b: BuildingSet) -> IntPolynomial:
    return h_poly(f_nested_enum(b))


def h_extended_enum(b: BuildingSet) -> IntPolynomial:
    return h_poly(f_extended_enum(b))


def gamma_nested(b: BuildingSet) -> IntPolynomial:
    return gamma_poly(h_nested_enum(b), nested_dimension(b))


def gamma_extended(b: BuildingSet) -> IntPolynomial:
    return gamma_poly(h_extended_enum(b), b.n)


def is_dehn_sommerville(h: IntPolynomial, d: int) -> bool:
    return h.degree <= d and all(h[i] == h[d - i] for i in range(d + 1))
