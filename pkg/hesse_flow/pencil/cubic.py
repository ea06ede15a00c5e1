import logging
from typing import Dict, Optional, Tuple

from hesse_flow.algebra import MultiPoly, det3, partial_derivative


_logger = logging.getLogger(__name__)

COORDINATES = ('X0', 'X1', 'X2')

# the ten degree-3 monomials, as exponent triples in X0, X1, X2
MONOMIALS = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3),
    (2, 1, 0), (2, 0, 1), (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2),
    (1, 1, 1),
)


def _monomial(exponents: Tuple[int, int, int]) -> MultiPoly:
    result = MultiPoly(1)
    for name, e in zip(COORDINATES, exponents):
        result = result * MultiPoly.var(name) ** e
    return result


def fermat_cubic() -> MultiPoly:
    return sum((_monomial(e) for e in MONOMIALS[:3]), MultiPoly(0))


def triangle_cubic() -> MultiPoly:
    return _monomial((1, 1, 1))


class CubicForm:
    """Ternary cubic in X0, X1, X2 whose coefficients are polynomials in the pencil parameter m."""
    __slots__ = ('form',)

    def __init__(self, form: MultiPoly):
        form = MultiPoly(form)
        if form.is_zero:
            raise ValueError('A cubic form must not vanish identically')
        if form.degree_in('x') > 0 or form.degree_in('y') > 0:
            raise ValueError(f'Cubic form may only involve X0, X1, X2 and m: {form}')
        for monom in form.terms():
            if sum(monom[:3]) != 3:
                raise ValueError(f'Cubic form is not homogeneous of degree 3: {form}')
        self.form = form

    @classmethod
    def hesse(cls, m=None) -> 'CubicForm':
        """X0^3 + X1^3 + X2^3 - 3 m X0 X1 X2, with m the formal variable unless a value is given"""
        param = MultiPoly.var('m') if m is None else MultiPoly.const(m)
        return cls(fermat_cubic() - 3 * param * triangle_cubic())

    @classmethod
    def triangle(cls) -> 'CubicForm':
        return cls(triangle_cubic())

    def coefficients(self) -> Dict[Tuple[int, int, int], MultiPoly]:
        return {e: self.form.coefficient(dict(zip(COORDINATES, e))) for e in MONOMIALS}

    def pencil_coordinates(self) -> Optional[Tuple[MultiPoly, MultiPoly]]:
        """(a, b) with form = a*(X0^3+X1^3+X2^3) + b*X0X1X2, or None outside the pencil span"""
        coeffs = self.coefficients()
        a = coeffs[(3, 0, 0)]
        if coeffs[(0, 3, 0)] != a or coeffs[(0, 0, 3)] != a:
            return None
        if any(not coeffs[e].is_zero for e in MONOMIALS[3:9]):
            return None
        return a, coeffs[(1, 1, 1)]

    def is_proportional_to(self, other: 'CubicForm') -> bool:
        """proportionality over Q(m): all 2x2 minors of the coefficient pairs vanish"""
        mine, theirs = self.coefficients(), other.coefficients()
        return all((mine[a] * theirs[b] - mine[b] * theirs[a]).is_zero for a in MONOMIALS for b in MONOMIALS)

    def __eq__(self, other):
        if not isinstance(other, CubicForm):
            return NotImplemented
        return self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def __repr__(self):
        return f'CubicForm({self.form})'


def hessian_matrix(f: CubicForm):
    return [[partial_derivative(partial_derivative(f.form, a), b) for b in COORDINATES] for a in COORDINATES]


def hessian_of(f: CubicForm) -> CubicForm:
    hess = det3(hessian_matrix(f))
    if hess.is_zero:
        raise ValueError(f'Hessian of {f!r} vanishes identically')
    return CubicForm(hess)
