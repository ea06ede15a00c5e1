import logging

import sympy

from hesse_flow.algebra import (INFINITY, MultiPoly, RationalFunction1V, rf_compose, rf_derivative, rf_difference,
                                rf_evaluate, rf_expansion_at_infinity, rf_order_at, symbol_for)
from hesse_flow.errors import IdentityFailed
from hesse_flow.report import ProofReport
from hesse_flow.pencil.cubic import CubicForm, fermat_cubic, hessian_of, triangle_cubic
from hesse_flow.pencil.invariants import (J_1728, J_6912, M_form_rhs, T_SCALE, critical_fibers, critical_points,
                                          cube_map, h_from_j, hesse_J, hessian_h_map, hessian_j_map, htilde_map,
                                          j_from_h, j_hesse, j_of_M, j_of_m, j_weierstrass)


_logger = logging.getLogger(__name__)

ANCHORS = {
    'pencil-hessian': 'Hess(C_m) = C_{(4-m^3)/(3m^2)} on the Hesse pencil',
    'commutation': 'H*(j(m)) = j(H~(m)), in m and in M = m^3',
    'hj-structure': 'closed form H*(j) = -(j-6912)^3/(27 j^2)',
    'h-coordinate': 'H*(h) = -(h-4)^3/(27 h^2) and its critical data',
    'endpoints': 'C_{cbrt 4} ~ E_{1/4,1/48}, j = 6912, t = 1/27',
    'structure-constants': 'k = 3, l = 2, gamma = -27 recovered from the M-form',
}


def _require(check_id: str, condition: bool, difference):
    if not condition:
        raise IdentityFailed(check_id, difference)


def pencil_hessian_identity() -> ProofReport:
    check_id = 'pencil-hessian'
    m = MultiPoly.var('m')
    S, P = fermat_cubic(), triangle_cubic()
    hess = hessian_of(CubicForm.hesse()).form

    closed = -54 * m ** 2 * S + (216 - 54 * m ** 3) * P
    _require(check_id, hess == closed, hess - closed)

    # projective statement with the denominator 3m^2 of (4-m^3)/(3m^2) cleared
    lhs = 3 * m ** 2 * hess
    rhs = -54 * m ** 2 * (3 * m ** 2 * S - 3 * (4 - m ** 3) * P)
    _require(check_id, lhs == rhs, lhs - rhs)

    return ProofReport(check_id, ANCHORS[check_id], witness={
        'scalar': '-54*m**2',
        'hessian': str(hess),
    })


def commutation_check(gamma=-27) -> ProofReport:
    check_id = 'commutation'
    Hj = hessian_j_map(gamma)

    lhs = rf_compose(Hj, j_of_m())
    rhs = rf_compose(j_of_m(), htilde_map())
    _require(check_id, lhs == rhs, rf_difference(lhs, rhs).numerator.as_expr())

    lhs_M = rf_compose(Hj, j_of_M())
    rhs_M = M_form_rhs()
    _require(check_id, lhs_M == rhs_M, rf_difference(lhs_M, rhs_M).numerator.as_expr())

    # j depends on m only through M
    through_M = rf_compose(j_of_M(), cube_map())
    _require(check_id, through_M == j_of_m(), rf_difference(through_M, j_of_m()).numerator.as_expr())

    return ProofReport(check_id, ANCHORS[check_id], witness={
        'degree_in_m': lhs.degree,
        'degree_in_M': lhs_M.degree,
        'gamma': gamma,
    })


def _ansatz_shape(Hj: RationalFunction1V):
    """numerator (j-6912)(j^2 + a j + b) with b != 0, denominator j (c j + d) with (c, d) != (0, 0)"""
    j = symbol_for('j')
    num, den = Hj.numerator, Hj.denominator
    linear = sympy.Poly(j - J_6912, j, domain='QQ')
    quadratic, rem = num.div(linear)
    if not rem.is_zero or quadratic.degree() != 2 or quadratic.eval(0) == 0:
        return False
    cofactor, rem = den.div(sympy.Poly(j, j, domain='QQ'))
    return rem.is_zero and not cofactor.is_zero and cofactor.degree() <= 1


def verify_Hj_structure(gamma=-27) -> ProofReport:
    check_id = 'hj-structure'
    Hj = hessian_j_map(gamma)

    k = rf_order_at(Hj, J_6912)
    _require(check_id, k == 3, f'order at 6912 is {k}')
    l = rf_order_at(Hj, 0)
    _require(check_id, l == -2, f'order at 0 is {l}')
    order_inf, leading = rf_expansion_at_infinity(Hj)
    _require(check_id, order_inf == -1 and leading == sympy.Rational(-1, 27),
             f'expansion at infinity {leading}*j^{-order_inf}')
    fixed = rf_evaluate(Hj, J_1728)
    _require(check_id, fixed == J_1728, f'H*(1728) = {fixed}')
    _require(check_id, _ansatz_shape(Hj), f'{Hj!r} does not factor as the ansatz')

    return ProofReport(check_id, ANCHORS[check_id], witness={
        'k': k,
        'l': -l,
        'gamma': 1 / leading,
    })


def h_coordinate_suite() -> ProofReport:
    check_id = 'h-coordinate'
    Hh = hessian_h_map()
    h = symbol_for('h')

    conjugate = rf_compose(h_from_j(), rf_compose(hessian_j_map(), j_from_h()))
    _require(check_id, conjugate == Hh, rf_difference(conjugate, Hh).numerator.as_expr())

    derivative = rf_derivative(Hh)
    expected = RationalFunction1V.from_expr(-(h - 4) ** 2 * (h + 8) / (27 * h ** 3), 'h')
    _require(check_id, derivative == expected, rf_difference(derivative, expected).numerator.as_expr())

    order = rf_order_at(Hh, 4)
    _require(check_id, order == 3, f'order of H*(h) at 4 is {order}')

    fibers = critical_fibers()
    expected_fibers = {0: [(4, 3)], 1: [(-8, 2), (1, 1)], None: [(0, 2), (INFINITY, 1)]}
    _require(check_id, fibers == expected_fibers, fibers)
    crit = critical_points()
    _require(check_id, crit == [-8, 0, 4], crit)
    values = sorted({str(rf_evaluate(Hh, p)) for p in crit})
    _require(check_id, values == ['0', '1', 'None'], values)

    return ProofReport(check_id, ANCHORS[check_id], witness={
        'derivative': str(expected.as_expr()),
        'critical_points': crit,
        'divisors': '3(4); 2(-8)+(1); 2(0)+(inf)',
    })


def endpoint_invariant_check() -> ProofReport:
    check_id = 'endpoints'
    jw = j_weierstrass(sympy.Rational(1, 4), sympy.Rational(1, 48))
    _require(check_id, jw.value == J_6912, f'j(E_(1/4,1/48)) = {jw.value}')

    numeric = j_hesse(complex(4 ** (1 / 3)))
    _require(check_id, numeric.isclose(jw), f'j(C_cbrt4) = {numeric.value}')

    # M = 4 is rational, so the same endpoint is also exact through the M-form
    exact = rf_evaluate(j_of_M(), 4)
    _require(check_id, exact == J_6912, f'j(M=4) = {exact}')
    J_value = hesse_J(complex(4 ** (1 / 3))).value
    t = exact / 27 / jw.value
    _require(check_id, t == T_SCALE and abs(J_value / float(jw.value) - float(T_SCALE)) < 1e-12,
             f't = {t}')

    return ProofReport(check_id, ANCHORS[check_id], witness={
        'j_weierstrass': jw.value,
        'j_hesse': f'{numeric.value.real:.12g}',
        't': t,
    })


def derive_structure_constants() -> ProofReport:
    check_id = 'structure-constants'
    rhs = M_form_rhs()
    jM = j_of_M()
    M = symbol_for('M')
    shifted = RationalFunction1V.from_expr(jM.as_expr() - J_6912, 'M')

    k = sympy.Rational(rf_order_at(rhs, 4), rf_order_at(shifted, 4))
    l = -sympy.Rational(rf_order_at(rhs, 0), rf_order_at(jM, 0))
    _, lead_j = rf_expansion_at_infinity(jM)
    _, lead_rhs = rf_expansion_at_infinity(rhs)
    gamma = lead_j / lead_rhs
    _require(check_id, (k, l, gamma) == (3, 2, -27), f'k={k}, l={l}, gamma={gamma}')
    return ProofReport(check_id, ANCHORS[check_id], witness={'k': k, 'l': l, 'gamma': gamma})
