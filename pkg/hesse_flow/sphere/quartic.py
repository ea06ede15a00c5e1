import logging
from typing import Tuple

import sympy

from hesse_flow.algebra import MultiPoly
from hesse_flow.errors import IdentityFailed
from hesse_flow.report import ProofReport


_logger = logging.getLogger(__name__)

Complex = Tuple[MultiPoly, MultiPoly]

_x = MultiPoly.var('x')
_y = MultiPoly.var('y')


def _cmul(p: Complex, q: Complex) -> Complex:
    return p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0]


def _cpow(p: Complex, k: int) -> Complex:
    result = (MultiPoly(1), MultiPoly(0))
    for _ in range(k):
        result = _cmul(result, p)
    return result

ANCHOR = 'Im H(x+iy) * (-27)(x^2+y^2)^2 = y * quartic(x, y)'


def quartic_factor() -> MultiPoly:
    """real trace of the preimage of the real line, off the real axis"""
    u = _x - 4
    r2 = u ** 2 + _y ** 2
    return r2 ** 2 + 16 * u * r2 + 16 * (3 * u ** 2 - _y ** 2)


def rationalized_imaginary_part() -> MultiPoly:
    """Im((h-4)^3 * conj(h)^2) with h = x + iy, which is -27 |h|^4 Im H(h)"""
    h_minus_4 = (_x - 4, _y)
    conj_h = (_x, -_y)
    return _cmul(_cpow(h_minus_4, 3), _cpow(conj_h, 2))[1]


def _numeric_imaginary_part(x: float, y: float) -> float:
    h = complex(x, y)
    return (-27 * abs(h) ** 4 * (-(h - 4) ** 3 / (27 * h ** 2))).imag


def quartic_identity_check() -> ProofReport:
    check_id = 'quartic'
    imag = rationalized_imaginary_part()
    target = _y * quartic_factor()

    monom, coeff = max(target.terms().items())
    scalar = imag.terms().get(monom, sympy.Rational(0)) / coeff
    difference = imag - target * scalar
    if scalar == 0 or not difference.is_zero:
        raise IdentityFailed(check_id, difference)

    # the rationalization itself, at a few sample points off the axes
    for x, y in ((0.5, 1.25), (-3.0, 0.75), (7.0, -2.0)):
        expected = float(scalar) * float(target.as_expr().subs({'x': x, 'y': y}))
        actual = _numeric_imaginary_part(x, y)
        if abs(actual - expected) > 1e-9 * max(1.0, abs(expected)):
            raise IdentityFailed(check_id, f'at {x}+{y}i: {actual} != {expected}')

    on_axis = quartic_factor().subs('y', 0)
    expected_axis = (_x - 4) ** 2 * _x * (_x + 8)
    if on_axis != expected_axis:
        raise IdentityFailed(check_id, on_axis - expected_axis)

    return ProofReport(check_id, ANCHOR, witness={
        'scalar': scalar,
        'axis_factorization': '(x-4)^2 * x * (x+8)',
    })
