from functools import lru_cache

from ..core.building_set import BuildingSet, subsets_of
from .face_numbers import h_extended_enum, h_nested_enum
from .polynomial import IntPolynomial, RationalInT, T, zero_rational
from .report import IdentityReport


@lru_cache(maxsize=None)
def a_number(b: BuildingSet) -> int:
    if b.n == 0:
        return 1
    if not b.is_even:
        return 0
    return -sum(a_number(b.restriction(s)) for s in subsets_of(b.ground, proper=True))


@lru_cache(maxsize=None)
def b_number(b: BuildingSet) -> int:
    if b.n == 0:
        return 1
    if not b.is_odd:
        return 0
    return -sum(b_number(b.restriction(s)) for s in subsets_of(b.ground, proper=True))


def a_rational(b: BuildingSet) -> RationalInT:
    """h of P□(b) over (-t)^n."""
    return RationalInT(h_extended_enum(b), (-1) ** b.n, b.n)


def b_rational(b: BuildingSet) -> RationalInT:
    """h of P(b) over t^n."""
    return RationalInT(h_nested_enum(b), 1, b.n)


def _weighted_sum(terms) -> RationalInT:
    total = zero_rational()
    for weight, value in terms:
        total = total + value.scale(weight)
    return total


def ab_report(b: BuildingSet) -> IdentityReport:
    """a/b numbers against h at -1, plus the rational-function recursions and cross relations.

    The a-recursion holds with the global exponent t^(n+|Bmax|); the reading
    with |(B|_S)max| per restriction is evaluated and reported under `flagged`.
    """
    report = IdentityReport(b.label())
    n = b.n
    a, bn = a_number(b), b_number(b)
    report.record("a_equals_h_extended_at_minus_one", a == h_extended_enum(b)(-1), {"a": a})
    report.record("b_equals_signed_h_nested_at_minus_one", bn == (-1) ** n * h_nested_enum(b)(-1), {"b": bn})
    report.record("a_vanishes_unless_even", b.is_even or n == 0 or a == 0)
    report.record("b_vanishes_unless_odd", b.is_odd or n == 0 or bn == 0)

    rows = [(s, b.restriction(s)) for s in subsets_of(b.ground)]
    a_terms = [(s, r, a_rational(r)) for s, r in rows]
    b_terms = [(s, r, b_rational(r)) for s, r in rows]
    maxima = len(b.maxima)

    a_recursion = _weighted_sum((T ** (n + maxima) - T ** len(s), ar) for s, _, ar in a_terms)
    report.record("a_rational_recursion", a_recursion.is_zero())
    a_literal = _weighted_sum((T ** (n + len(r.maxima)) - T ** len(s), ar) for s, r, ar in a_terms)
    report.flag("a_rational_recursion_per_restriction", a_literal.is_zero())

    b_recursion = _weighted_sum((T ** n - T ** (len(s) + len(r.maxima)), br) for s, r, br in b_terms)
    report.record("b_rational_recursion", b_recursion.is_zero())

    sign = IntPolynomial.constant((-1) ** n)
    b_total = _weighted_sum((sign, br) for _, _, br in b_terms)
    a_total = _weighted_sum((sign, ar) for _, _, ar in a_terms)
    report.record("a_from_b", a_rational(b) == b_total)
    report.record("b_from_a", b_rational(b) == a_total)
    return report
