import itertools
import logging
from typing import Dict, Sequence, Tuple, Union

import sympy
from sympy.combinatorics import Permutation


_logger = logging.getLogger(__name__)

Rational = sympy.Rational

# the one polynomial ring every identity lives in
GENERATORS = ('X0', 'X1', 'X2', 'm', 'x', 'y')
_SYMBOLS = sympy.symbols(GENERATORS)
_BY_NAME = dict(zip(GENERATORS, _SYMBOLS))


def _to_poly(value) -> sympy.Poly:
    if isinstance(value, sympy.Poly):
        return sympy.Poly(value.as_expr(), *_SYMBOLS, domain='QQ')
    return sympy.Poly(sympy.sympify(value), *_SYMBOLS, domain='QQ')


class MultiPoly:
    """Polynomial with exact rational coefficients in X0, X1, X2, m, x, y.

    Instances are immutable, arithmetic always returns the canonical form.
    """
    __slots__ = ('_poly',)

    def __init__(self, value=0):
        if isinstance(value, MultiPoly):
            self._poly = value._poly
        else:
            self._poly = _to_poly(value)

    @classmethod
    def var(cls, name: str) -> 'MultiPoly':
        if name not in _BY_NAME:
            raise ValueError(f'Unknown variable "{name}", expected one of {GENERATORS}')
        return cls(_BY_NAME[name])

    @classmethod
    def const(cls, value) -> 'MultiPoly':
        return cls(Rational(value))

    @property
    def poly(self) -> sympy.Poly:
        return self._poly

    def as_expr(self) -> sympy.Expr:
        return self._poly.as_expr()

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    def terms(self) -> Dict[Tuple[int, ...], sympy.Rational]:
        return {monom: Rational(coeff) for monom, coeff in self._poly.as_dict().items()}

    def variables(self) -> Tuple[str, ...]:
        used = set()
        for monom in self._poly.monoms():
            used.update(name for name, e in zip(GENERATORS, monom) if e > 0)
        return tuple(name for name in GENERATORS if name in used)

    def degree_in(self, name: str) -> int:
        if self.is_zero:
            return -1
        return int(self._poly.degree(_BY_NAME[name]))

    def diff(self, name: str) -> 'MultiPoly':
        return MultiPoly(self._poly.diff(_BY_NAME[name]))

    def subs(self, name: str, value) -> 'MultiPoly':
        return MultiPoly(self.as_expr().subs(_BY_NAME[name], sympy.sympify(value)))

    def coefficient(self, monomial: Dict[str, int]) -> 'MultiPoly':
        """coefficient of a monomial in the named variables, as a polynomial in the remaining ones"""
        idx = {GENERATORS.index(k): e for k, e in monomial.items()}
        result = {}
        for monom, coeff in self._poly.as_dict().items():
            if all(monom[i] == e for i, e in idx.items()):
                rest = tuple(0 if i in idx else e for i, e in enumerate(monom))
                result[rest] = coeff
        if not result:
            return MultiPoly(0)
        return MultiPoly(sympy.Poly.from_dict(result, *_SYMBOLS, domain='QQ'))

    def _coerce(self, other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly(other)

    def __add__(self, other):
        return MultiPoly(self._poly + self._coerce(other)._poly)

    __radd__ = __add__

    def __sub__(self, other):
        return MultiPoly(self._poly - self._coerce(other)._poly)

    def __rsub__(self, other):
        return MultiPoly(self._coerce(other)._poly - self._poly)

    def __mul__(self, other):
        return MultiPoly(self._poly * self._coerce(other)._poly)

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly(-self._poly)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError('MultiPoly only supports non-negative powers')
        return MultiPoly(self._poly ** exponent)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (sympy.SympifyError, sympy.polys.polyerrors.PolynomialError):
            return NotImplemented
        return self._poly == other._poly

    def __hash__(self):
        return hash(tuple(sorted(self._poly.as_dict(native=True).items(), key=lambda kv: kv[0])))

    def __repr__(self):
        return f'MultiPoly({self.as_expr()})'

    def __str__(self):
        return str(self.as_expr())


Scalar = Union[int, sympy.Rational]


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    raise ValueError(f'Unsupported polynomial operation "{op}"')


def partial_derivative(f: MultiPoly, v: str) -> MultiPoly:
    return f.diff(v)


def det3(mat: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """permutation expansion of a 3x3 determinant"""
    if len(mat) != 3 or any(len(row) != 3 for row in mat):
        raise ValueError('det3 expects a 3x3 matrix')
    total = MultiPoly(0)
    for perm in itertools.permutations(range(3)):
        term = MultiPoly(Permutation(list(perm)).signature())
        for row, col in enumerate(perm):
            term = term * mat[row][col]
        total = total + term
    return total
