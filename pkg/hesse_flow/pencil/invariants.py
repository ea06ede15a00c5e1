import cmath
import functools
import logging
import math
from typing import Dict, List, Optional, Tuple, Union

import sympy

from hesse_flow.algebra import INFINITY, RationalFunction1V, rf_derivative, rf_difference, rf_order_at, symbol_for
from hesse_flow.errors import CuspPoint, SingularCurve, SingularMember


_logger = logging.getLogger(__name__)

J_1728 = sympy.Integer(2 ** 6 * 3 ** 3)
J_6912 = sympy.Integer(2 ** 8 * 3 ** 3)
# j = 27 * J on the Hesse pencil
T_SCALE = sympy.Rational(1, 27)

# multiples of j per coordinate
_TO_J = {'j': sympy.Integer(1), 'h': J_1728, 'J': sympy.Integer(27)}

_NUMERIC_TOL = 1e-12

Value = Union[sympy.Rational, complex, None]


def _exact(value) -> bool:
    return isinstance(value, (int, sympy.Rational))


def _coerce(value) -> Value:
    if isinstance(value, str) and value == 'inf':
        return INFINITY
    if value is None or value is sympy.oo or value is sympy.zoo:
        return INFINITY
    if isinstance(value, float) and math.isinf(value):
        return INFINITY
    if isinstance(value, (complex, float)):
        return complex(value)
    return sympy.Rational(value)


class PencilParameter:
    """Value of m on the projective line: exact rational, complex double, or infinity (``None``)."""
    __slots__ = ('value',)

    def __init__(self, value):
        self.value = value.value if isinstance(value, PencilParameter) else _coerce(value)

    @classmethod
    def infinity(cls) -> 'PencilParameter':
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is INFINITY

    @property
    def is_exact(self) -> bool:
        return self.value is INFINITY or _exact(self.value)

    @property
    def is_singular(self) -> bool:
        """the members m^3 = 1 and m = inf are triangles, not elliptic curves"""
        if self.is_infinity:
            return True
        if self.is_exact:
            return self.value ** 3 == 1
        return abs(self.value ** 3 - 1) < _NUMERIC_TOL

    def __eq__(self, other):
        if not isinstance(other, PencilParameter):
            other = PencilParameter(other)
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        if self.is_exact and other.is_exact:
            return self.value == other.value
        return abs(complex(self.value) - complex(other.value)) < _NUMERIC_TOL

    # equality is tolerance based for complex values
    __hash__ = None

    def __repr__(self):
        return 'PencilParameter(inf)' if self.is_infinity else f'PencilParameter({self.value})'


class InvariantValue:
    """A point of the moduli line in one of the coordinates j, h = j/1728 or J = j/27."""
    __slots__ = ('tag', 'value')

    def __init__(self, tag: str, value):
        if tag not in _TO_J:
            raise ValueError(f'Unknown invariant coordinate "{tag}"')
        self.tag = tag
        self.value = _coerce(value)

    @property
    def is_infinity(self) -> bool:
        return self.value is INFINITY

    def to(self, tag: str) -> 'InvariantValue':
        if tag not in _TO_J:
            raise ValueError(f'Unknown invariant coordinate "{tag}"')
        if self.is_infinity or tag == self.tag:
            return InvariantValue(tag, self.value)
        factor = _TO_J[self.tag] / _TO_J[tag]
        if _exact(self.value):
            return InvariantValue(tag, self.value * factor)
        return InvariantValue(tag, self.value * complex(factor))

    def isclose(self, other: 'InvariantValue', rel_tol: float = _NUMERIC_TOL) -> bool:
        other = other.to(self.tag)
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return cmath.isclose(complex(self.value), complex(other.value), rel_tol=rel_tol, abs_tol=rel_tol)

    def __eq__(self, other):
        if not isinstance(other, InvariantValue):
            return NotImplemented
        other = other.to(self.tag)
        if _exact(self.value) and _exact(other.value) or self.is_infinity or other.is_infinity:
            return self.value == other.value
        return self.isclose(other)

    __hash__ = None

    def __repr__(self):
        return f'InvariantValue({self.tag}={"inf" if self.is_infinity else self.value})'


def htilde(m) -> PencilParameter:
    m = PencilParameter(m)
    if m.is_infinity or m.value == 0:
        return PencilParameter.infinity()
    v = m.value
    return PencilParameter((4 - v ** 3) / (3 * v ** 2))


def j_lambda(lam) -> InvariantValue:
    lam = _coerce(lam)
    if lam is INFINITY or lam == 0 or lam == 1:
        raise SingularCurve(f'Legendre curve with lambda={lam} is singular')
    value = 2 ** 8 * (lam ** 2 - lam + 1) ** 3 / (lam ** 2 * (lam - 1) ** 2)
    return InvariantValue('j', value)


def j_weierstrass(g2, g3) -> InvariantValue:
    g2, g3 = sympy.Rational(g2), sympy.Rational(g3)
    disc = g2 ** 3 - 27 * g3 ** 2
    if disc == 0:
        raise SingularCurve(f'Weierstrass curve with g2={g2}, g3={g3} is singular')
    return InvariantValue('j', J_1728 * g2 ** 3 / disc)


def hesse_J(m) -> InvariantValue:
    m = PencilParameter(m)
    if m.is_singular:
        raise SingularMember(f'Hesse member {m!r} is a triangle')
    v = m.value
    return InvariantValue('J', (v * (v ** 3 + 8) / (v ** 3 - 1)) ** 3)


def j_hesse(m) -> InvariantValue:
    return hesse_J(m).to('j')


def automorphism_order(h: InvariantValue) -> int:
    h = h.to('h')
    if h.is_infinity:
        raise CuspPoint('The cusp h = inf carries no elliptic curve')
    v = h.value
    if _exact(v):
        return 6 if v == 0 else 4 if v == 1 else 2
    if abs(v) < _NUMERIC_TOL:
        return 6
    if abs(v - 1) < _NUMERIC_TOL:
        return 4
    return 2


# region closed forms

def htilde_map() -> RationalFunction1V:
    m = symbol_for('m')
    return RationalFunction1V.from_expr((4 - m ** 3) / (3 * m ** 2), 'm')


def cube_map() -> RationalFunction1V:
    m = symbol_for('m')
    return RationalFunction1V.from_expr(m ** 3, 'm', target='M')


def j_of_m() -> RationalFunction1V:
    m = symbol_for('m')
    return RationalFunction1V.from_expr(27 * (m * (m ** 3 + 8) / (m ** 3 - 1)) ** 3, 'm', target='j')


def j_of_M() -> RationalFunction1V:
    M = symbol_for('M')
    return RationalFunction1V.from_expr(27 * M * (M + 8) ** 3 / (M - 1) ** 3, 'M', target='j')


def hessian_j_map(gamma=-27) -> RationalFunction1V:
    j = symbol_for('j')
    return RationalFunction1V.from_expr((j - J_6912) ** 3 / (sympy.Rational(gamma) * j ** 2), 'j')


def hessian_h_map() -> RationalFunction1V:
    h = symbol_for('h')
    return RationalFunction1V.from_expr(-(h - 4) ** 3 / (27 * h ** 2), 'h')


def M_form_rhs() -> RationalFunction1V:
    """j(H~(m)) written through M = m^3 only"""
    M = symbol_for('M')
    inner = ((M - 4) ** 3 - 216 * M ** 2) / ((M - 4) ** 3 + 27 * M ** 2)
    return RationalFunction1V.from_expr((4 - M) ** 3 / M ** 2 * inner ** 3, 'M', target='j')


def j_from_h() -> RationalFunction1V:
    return RationalFunction1V.from_expr(J_1728 * symbol_for('h'), 'h', target='j')


def h_from_j() -> RationalFunction1V:
    return RationalFunction1V.from_expr(symbol_for('j') / J_1728, 'j', target='h')

# endregion


Fiber = List[Tuple[Optional[sympy.Rational], int]]


@functools.lru_cache(maxsize=1)
def critical_fibers() -> Dict[Optional[int], Fiber]:
    """Exact fibers of H*(h) over 0, 1 and infinity with multiplicities.

    Multiplicities are read off the root structure and then confirmed by the vanishing order of
    the derivative, so a fiber entry of multiplicity k is a critical point of order k - 1.
    """
    H = hessian_h_map()
    dH = rf_derivative(H)
    fibers = {}
    for c in (0, 1):
        shifted = rf_difference(H, RationalFunction1V('h', c, 1))
        fiber = sorted(((sympy.Rational(r), k) for r, k in sympy.roots(shifted.numerator).items()),
                       key=lambda rk: rk[0])
        for r, k in fiber:
            if rf_order_at(shifted, r) != k or (k > 1 and rf_order_at(dH, r) != k - 1):
                raise ArithmeticError(f'Multiplicity {k} of h={r} over {c} is inconsistent with the derivative')
        fibers[c] = fiber
    poles = sorted(((sympy.Rational(r), k) for r, k in sympy.roots(H.denominator).items()), key=lambda rk: rk[0])
    at_infinity = -rf_order_at(H, INFINITY)
    if at_infinity > 0:
        poles.append((INFINITY, at_infinity))
    fibers[None] = poles
    for c, fiber in fibers.items():
        if sum(k for _, k in fiber) != H.degree:
            raise ArithmeticError(f'Fiber over {c} does not have total multiplicity {H.degree}')
    return fibers


def critical_points() -> List[sympy.Rational]:
    return sorted(r for fiber in critical_fibers().values() for r, k in fiber if k > 1 and r is not None)
