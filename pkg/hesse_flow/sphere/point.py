import cmath
import math
from typing import Optional, Tuple

import numpy

from hesse_flow.utils import fmt_complex


DEFAULT_TOL = 1e-12


class SpherePoint:
    """Point of the Riemann sphere stored as a projective pair (a, b), h = a/b, b = 0 at infinity.

    The pair is normalized so that max(|a|, |b|) = 1.
    """
    __slots__ = ('a', 'b')

    def __init__(self, a, b=1.0):
        a, b = complex(a), complex(b)
        scale = max(abs(a), abs(b))
        if scale == 0 or not math.isfinite(scale):
            raise ValueError(f'({a}, {b}) is not a point of the projective line')
        self.a = a / scale
        self.b = b / scale

    @classmethod
    def from_value(cls, value) -> 'SpherePoint':
        if value is None or isinstance(value, str) and value == 'inf':
            return cls.infinity()
        value = complex(value)
        if cmath.isinf(value):
            return cls.infinity()
        return cls(value, 1.0)

    @classmethod
    def infinity(cls) -> 'SpherePoint':
        return cls(1.0, 0.0)

    @property
    def is_infinity(self) -> bool:
        return self.b == 0

    @property
    def value(self) -> Optional[complex]:
        return None if self.is_infinity else self.a / self.b

    def conjugate(self) -> 'SpherePoint':
        return SpherePoint(self.a.conjugate(), self.b.conjugate())

    def chordal_distance(self, other: 'SpherePoint') -> float:
        cross = abs(self.a * other.b - other.a * self.b)
        return cross / (math.hypot(abs(self.a), abs(self.b)) * math.hypot(abs(other.a), abs(other.b)))

    def isclose(self, other: 'SpherePoint', tol: float = DEFAULT_TOL) -> bool:
        return self.chordal_distance(other) <= tol

    def __eq__(self, other):
        if not isinstance(other, SpherePoint):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def sort_key(self) -> Tuple[int, float, float]:
        if self.is_infinity:
            return 1, 0.0, 0.0
        v = self.value
        return 0, round(v.real, 9) + 0.0, round(v.imag, 9) + 0.0

    def embed(self) -> Tuple[float, float, float]:
        """coordinates on the unit sphere"""
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        w = self.a * self.b.conjugate()
        return 2 * w.real / norm, 2 * w.imag / norm, (abs(self.a) ** 2 - abs(self.b) ** 2) / norm

    def to_json(self):
        return fmt_complex(self.value)

    def __repr__(self):
        return 'SpherePoint(inf)' if self.is_infinity else f'SpherePoint({self.value:.12g})'


def as_arrays(points) -> Tuple[numpy.ndarray, numpy.ndarray]:
    a = numpy.array([p.a for p in points], dtype=complex)
    b = numpy.array([p.b for p in points], dtype=complex)
    return a, b


def normalize_arrays(a: numpy.ndarray, b: numpy.ndarray) -> Tuple[numpy.ndarray, numpy.ndarray]:
    scale = numpy.maximum(numpy.abs(a), numpy.abs(b))
    return a / scale, b / scale


def chordal_arrays(a1, b1, a2, b2) -> numpy.ndarray:
    """pairwise-broadcast chordal distance between projective pairs"""
    cross = numpy.abs(a1 * b2 - a2 * b1)
    return cross / (numpy.hypot(numpy.abs(a1), numpy.abs(b1)) * numpy.hypot(numpy.abs(a2), numpy.abs(b2)))


def embed_arrays(a: numpy.ndarray, b: numpy.ndarray) -> numpy.ndarray:
    norm = numpy.abs(a) ** 2 + numpy.abs(b) ** 2
    w = a * numpy.conj(b)
    return numpy.stack([2 * w.real / norm, 2 * w.imag / norm, (numpy.abs(a) ** 2 - numpy.abs(b) ** 2) / norm], axis=-1)
