import math
from typing import Tuple, Union

import sympy

Scalar = Union[int, sympy.Rational]


class QuadField:
    """p + q*sqrt(3) with rational p and q."""
    __slots__ = ('p', 'q')

    def __init__(self, p: Scalar = 0, q: Scalar = 0):
        self.p = sympy.Rational(p)
        self.q = sympy.Rational(q)

    @classmethod
    def sqrt3(cls) -> 'QuadField':
        return cls(0, 1)

    def _coerce(self, other) -> 'QuadField':
        if isinstance(other, QuadField):
            return other
        if isinstance(other, (int, sympy.Rational)):
            return QuadField(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadField(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadField(-self.p, -self.q)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadField(self.p - other.p, self.q - other.q)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadField(self.p * other.p + 3 * self.q * other.q, self.p * other.q + self.q * other.p)

    __rmul__ = __mul__

    def conjugate(self) -> 'QuadField':
        return QuadField(self.p, -self.q)

    def norm(self) -> sympy.Rational:
        return self.p * self.p - 3 * self.q * self.q

    def inverse(self) -> 'QuadField':
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError('QuadField division by zero')
        return QuadField(self.p / n, -self.q / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def sign(self) -> int:
        """exact sign of p + q*sqrt(3)"""
        sp, sq = int(sympy.sign(self.p)), int(sympy.sign(self.q))
        if sp == 0 or sq == 0 or sp == sq:
            return sp or sq
        # opposite signs: compare p^2 with 3 q^2
        return sp if self.p * self.p > 3 * self.q * self.q else sq

    def is_rational(self) -> bool:
        return self.q == 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(3)

    def __repr__(self):
        return f'QuadField({self.p}, {self.q})'

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        if self.p == 0:
            return f'{self.q}*sqrt3'
        return f'{self.p}{"+" if self.q > 0 else "-"}{abs(self.q)}*sqrt3'


class EuclPoint:
    """x + iy with coordinates in Q(sqrt 3)"""
    __slots__ = ('x', 'y')

    def __init__(self, x=0, y=0):
        self.x = x if isinstance(x, QuadField) else QuadField(x)
        self.y = y if isinstance(y, QuadField) else QuadField(y)

    def __add__(self, other: 'EuclPoint') -> 'EuclPoint':
        return EuclPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: 'EuclPoint') -> 'EuclPoint':
        return EuclPoint(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return EuclPoint(-self.x, -self.y)

    def scale(self, k) -> 'EuclPoint':
        return EuclPoint(self.x * k, self.y * k)

    def times(self, other: 'EuclPoint') -> 'EuclPoint':
        """complex multiplication"""
        return EuclPoint(self.x * other.x - self.y * other.y, self.x * other.y + self.y * other.x)

    def dot(self, other: 'EuclPoint') -> QuadField:
        return self.x * other.x + self.y * other.y

    def cross(self, other: 'EuclPoint') -> QuadField:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> QuadField:
        return self.dot(self)

    def reflect(self) -> 'EuclPoint':
        return EuclPoint(self.x, -self.y)

    def to_floats(self) -> Tuple[float, float]:
        return float(self.x), float(self.y)

    def __eq__(self, other):
        if not isinstance(other, EuclPoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return f'EuclPoint({self.x}, {self.y})'
