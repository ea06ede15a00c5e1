import logging
from typing import Optional, Tuple

import numpy
import sympy

from hesse_flow.errors import UsageError, ZeroDenominator


_logger = logging.getLogger(__name__)

# m: pencil parameter, M = m^3, j/h/J: moduli coordinates, lam: Legendre parameter
VARIABLE_TAGS = ('m', 'M', 'j', 'h', 'J', 'lam')

INFINITY = None
Point = Optional[sympy.Rational]


def symbol_for(tag: str) -> sympy.Symbol:
    if tag not in VARIABLE_TAGS:
        raise UsageError(f'Unknown variable tag "{tag}", expected one of {VARIABLE_TAGS}')
    return sympy.Symbol(tag)


def _poly(expr, tag: str) -> sympy.Poly:
    return sympy.Poly(expr, symbol_for(tag), domain='QQ')


class RationalFunction1V:
    """Univariate rational function over Q.

    ``var`` tags the source coordinate and ``target`` the coordinate of the values; both coincide
    for self-maps such as H*(h). Composition checks that the tags chain.
    """
    __slots__ = ('var', 'target', 'numerator', 'denominator')

    def __init__(self, var: str, numerator, denominator=1, target: Optional[str] = None):
        self.var = var
        self.target = target or var
        self.numerator = numerator if isinstance(numerator, sympy.Poly) else _poly(numerator, var)
        self.denominator = denominator if isinstance(denominator, sympy.Poly) else _poly(denominator, var)

    @classmethod
    def from_expr(cls, expr, var: str, target: Optional[str] = None) -> 'RationalFunction1V':
        expr = sympy.together(sympy.sympify(expr))
        num, den = sympy.fraction(sympy.cancel(expr))
        return rf_normalize(cls(var, num, den, target))

    @classmethod
    def identity(cls, var: str) -> 'RationalFunction1V':
        return cls(var, symbol_for(var), 1)

    @property
    def symbol(self) -> sympy.Symbol:
        return symbol_for(self.var)

    @property
    def degree(self) -> int:
        return max(_deg(self.numerator), _deg(self.denominator))

    def as_expr(self) -> sympy.Expr:
        return self.numerator.as_expr() / self.denominator.as_expr()

    def __call__(self, value):
        return rf_evaluate(self, value)

    def _key(self):
        f = rf_normalize(self)
        return (f.var, f.target, tuple(f.numerator.all_coeffs()), tuple(f.denominator.all_coeffs()))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction1V):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'RationalFunction1V({self.var}->{self.target}: ({self.numerator.as_expr()})/({self.denominator.as_expr()}))'


def _deg(p: sympy.Poly) -> int:
    return -1 if p.is_zero else int(p.degree())


def rf_normalize(f: RationalFunction1V) -> RationalFunction1V:
    num, den = f.numerator, f.denominator
    if den.is_zero:
        raise ZeroDenominator(f'Denominator of {f.var}-function is identically zero')
    if num.is_zero:
        return RationalFunction1V(f.var, num, _poly(1, f.var), f.target)
    g = num.gcd(den)
    num = num.exquo(g)
    den = den.exquo(g)
    lc = den.LC()
    num = num.exquo_ground(lc)
    den = den.exquo_ground(lc)
    return RationalFunction1V(f.var, num, den, f.target)


def rf_compose(outer: RationalFunction1V, inner: RationalFunction1V) -> RationalFunction1V:
    """outer(inner(x)), normalized; inner's value coordinate must be outer's source coordinate"""
    if outer.var != inner.target:
        raise UsageError(f'Cannot compose a {outer.var}-function with a function valued in {inner.target}')
    inner = rf_normalize(inner)
    n, d = inner.numerator, inner.denominator
    top = max(_deg(outer.numerator), _deg(outer.denominator), 0)
    n_pows = [_poly(1, inner.var)]
    d_pows = [_poly(1, inner.var)]
    for _ in range(top):
        n_pows.append(n_pows[-1] * n)
        d_pows.append(d_pows[-1] * d)

    def homogenize(p: sympy.Poly) -> sympy.Poly:
        acc = _poly(0, inner.var)
        if p.is_zero:
            return acc
        for (k,), c in p.terms():
            acc += (n_pows[k] * d_pows[top - k]).mul_ground(c)
        return acc

    numerator = homogenize(outer.numerator)
    denominator = homogenize(outer.denominator)
    if denominator.is_zero:
        raise ZeroDenominator(f'Composition of {outer!r} with {inner!r} is degenerate')
    return rf_normalize(RationalFunction1V(inner.var, numerator, denominator, outer.target))


def _multiplicity(p: sympy.Poly, point: sympy.Rational) -> int:
    if p.is_zero:
        raise ValueError('Multiplicity of the zero polynomial is undefined')
    linear = sympy.Poly(p.gen - point, p.gen, domain='QQ')
    k = 0
    while p.eval(point) == 0:
        p = p.exquo(linear)
        k += 1
    return k


def rf_order_at(f: RationalFunction1V, p: Point) -> int:
    """order of vanishing (positive) or pole order (negative) at p; ``None`` is the point at infinity"""
    f = rf_normalize(f)
    if f.numerator.is_zero:
        raise ValueError('Order of the zero function is undefined')
    if p is INFINITY:
        return _deg(f.denominator) - _deg(f.numerator)
    p = sympy.Rational(p)
    return _multiplicity(f.numerator, p) - _multiplicity(f.denominator, p)


def rf_derivative(f: RationalFunction1V) -> RationalFunction1V:
    n, d = f.numerator, f.denominator
    return rf_normalize(RationalFunction1V(f.var, n.diff() * d - n * d.diff(), d * d, f.target))


def rf_evaluate(f: RationalFunction1V, value: Point) -> Point:
    """exact value at a rational point or at infinity (``None``)"""
    f = rf_normalize(f)
    if value is INFINITY:
        dn, dd = _deg(f.numerator), _deg(f.denominator)
        if f.numerator.is_zero or dn < dd:
            return sympy.Rational(0)
        if dn > dd:
            return INFINITY
        return f.numerator.LC() / f.denominator.LC()
    value = sympy.Rational(value)
    den = f.denominator.eval(value)
    if den == 0:
        return INFINITY
    return sympy.Rational(f.numerator.eval(value) / den)


def rf_evaluate_numeric(f: RationalFunction1V, value: complex) -> Optional[complex]:
    num = numpy.polyval([float(c) for c in f.numerator.all_coeffs()], value)
    den = numpy.polyval([float(c) for c in f.denominator.all_coeffs()], value)
    if den == 0:
        return None
    return complex(num) / complex(den)


def rf_expansion_at_infinity(f: RationalFunction1V) -> Tuple[int, sympy.Rational]:
    """(order at infinity, leading coefficient): f ~ c * x^(-order) for large x"""
    f = rf_normalize(f)
    return rf_order_at(f, INFINITY), f.numerator.LC() / f.denominator.LC()


def rf_difference(a: RationalFunction1V, b: RationalFunction1V) -> RationalFunction1V:
    if a.var != b.var:
        raise UsageError(f'Cannot subtract a {b.var}-function from a {a.var}-function')
    return rf_normalize(RationalFunction1V(a.var, a.numerator * b.denominator - b.numerator * a.denominator,
                                           a.denominator * b.denominator, a.target))


def _all_roots(p: sympy.Poly) -> dict:
    """roots with multiplicity; factors without a radical solution come back as CRootOf"""
    roots = sympy.roots(p)
    if sum(roots.values()) == _deg(p):
        return roots
    _logger.debug(f'Radical roots of {p.as_expr()} are incomplete, using CRootOf')
    roots = {}
    for root in p.all_roots():
        roots[root] = roots.get(root, 0) + 1
    return roots


def rf_divisor(f: RationalFunction1V) -> dict:
    """zeros and poles over the algebraic closure, including infinity, as {point: order}"""
    f = rf_normalize(f)
    divisor = {}
    for root, mult in _all_roots(f.numerator).items():
        divisor[root] = divisor.get(root, 0) + mult
    for root, mult in _all_roots(f.denominator).items():
        divisor[root] = divisor.get(root, 0) - mult
    at_infinity = rf_order_at(f, INFINITY)
    if at_infinity:
        divisor[sympy.oo] = at_infinity
    return {k: v for k, v in divisor.items() if v}
