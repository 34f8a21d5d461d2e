"""Exact 2x2 rational-matrix isometries of the upper half-plane, plus metric geometry.

Group elements are unit-determinant matrices with Fraction entries, stored in
a canonical sign so that data equality decides equality in PSL(2,R). Metric
quantities (distances, ray projections) are computed in floats; everything
algebraic stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class IdentityElement(ValueError):
    """Raised when an operation requires a non-identity isometry."""


class BoundaryPoint(ValueError):
    """Raised when a metric operation receives a non-interior point."""


class NonUnitDeterminant(ValueError):
    """Raised when matrix entries cannot be rescaled to determinant 1."""


def _rational_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Interior:
    x: object  # Fraction or float
    y: object  # > 0

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError("interior point needs y > 0")


@dataclass(frozen=True)
class Boundary:
    x: object


class Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinity"


INFINITY = Infinity()

Point = Union[Interior, Boundary, Infinity]

#: Base point o = i of the half-plane; all orbit/displacement computations use it.
BASE_POINT = Interior(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class GeodesicRay:
    base: Interior
    endpoint: Point  # Boundary or Infinity

    def __post_init__(self):
        if not isinstance(self.base, Interior):
            raise BoundaryPoint("ray base must be interior")
        if not isinstance(self.endpoint, (Boundary, Infinity)):
            raise ValueError("ray endpoint must be on the boundary")


class IsometryClass:
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    LOXODROMIC = "loxodromic"


@dataclass(frozen=True)
class GroupElement:
    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction

    @classmethod
    def of(cls, m11, m12, m21, m22) -> "GroupElement":
        """Build from rational entries, rescaling to det 1 and canonical sign.

        Entries with determinant d are divided by the exact square root of d;
        inputs whose determinant is not a positive rational square are rejected.
        """
        e = [Fraction(v) for v in (m11, m12, m21, m22)]
        det = e[0] * e[3] - e[1] * e[2]
        if det <= 0:
            raise NonUnitDeterminant(f"determinant {det} is not positive")
        if det != 1:
            s = _rational_sqrt(det)
            if s is None:
                raise NonUnitDeterminant(f"determinant {det} has no rational square root")
            e = [v / s for v in e]
        for v in e:
            if v != 0:
                if v < 0:
                    e = [-u for u in e]
                break
        return cls(*e)

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def is_identity(self) -> bool:
        return self == GroupElement.identity()

    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def trace(self) -> Fraction:
        return self.m11 + self.m22

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)

    def inverse(self) -> "GroupElement":
        return inverse(self)

    def __call__(self, p: Point) -> Point:
        return apply(self, p)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    return GroupElement.of(
        g.m11 * h.m11 + g.m12 * h.m21,
        g.m11 * h.m12 + g.m12 * h.m22,
        g.m21 * h.m11 + g.m22 * h.m21,
        g.m21 * h.m12 + g.m22 * h.m22,
    )


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement.of(g.m22, -g.m12, -g.m21, g.m11)


def apply(g: GroupElement, p: Point) -> Point:
    """Extended Mobius action z -> (m11 z + m12)/(m21 z + m22)."""
    if isinstance(p, Infinity):
        if g.m21 == 0:
            return INFINITY
        return Boundary(g.m11 / g.m21)
    if isinstance(p, Boundary):
        den = g.m21 * p.x + g.m22
        if den == 0:
            return INFINITY
        return Boundary((g.m11 * p.x + g.m12) / den)
    x, y = p.x, p.y
    den = (g.m21 * x + g.m22) ** 2 + (g.m21 * y) ** 2
    nx = (g.m11 * x + g.m12) * (g.m21 * x + g.m22) + g.m11 * g.m21 * y * y
    return Interior(nx / den, y / den)


def classify(g: GroupElement) -> str:
    """Trace trichotomy on the det-1 representative, decided exactly."""
    if g.is_identity():
        raise IdentityElement("identity has no isometry class")
    t = abs(g.trace())
    if t < 2:
        return IsometryClass.ELLIPTIC
    if t == 2:
        return IsometryClass.PARABOLIC
    return IsometryClass.LOXODROMIC


def fixed_points(g: GroupElement):
    """Boundary fixed points: 2 for loxodromic, 1 for parabolic, 0 for elliptic.

    Solutions of m21 z^2 + (m22 - m11) z - m12 = 0 on the extended real line.
    Exact when the discriminant is a rational square, floats otherwise.
    """
    if g.is_identity():
        raise IdentityElement("identity fixes everything")
    if g.m21 == 0:
        pts = [INFINITY]
        if g.m11 != g.m22:
            pts.append(Boundary(g.m12 / (g.m22 - g.m11)))
        return set(pts)
    disc = g.trace() ** 2 - 4
    if disc < 0:
        return set()
    s = _rational_sqrt(disc)
    a2 = 2 * g.m21
    if s is not None:
        r1 = (g.m11 - g.m22 + s) / a2
        r2 = (g.m11 - g.m22 - s) / a2
    else:
        fs = math.sqrt(float(disc))
        r1 = (float(g.m11 - g.m22) + fs) / float(a2)
        r2 = (float(g.m11 - g.m22) - fs) / float(a2)
    if disc == 0:
        return {Boundary(r1)}
    return {Boundary(r1), Boundary(r2)}


def attracting_fixed_point(g: GroupElement) -> Point:
    """The attracting boundary fixed point of a loxodromic element."""
    if classify(g) != IsometryClass.LOXODROMIC:
        raise ValueError("attracting fixed point requires a loxodromic element")
    if g.m21 == 0:
        if abs(g.m11) > abs(g.m22):
            return INFINITY
        return Boundary(g.m12 / (g.m22 - g.m11))
    # fixed point from the dominant eigenvector (lam - m22)/m21; this stays
    # stable for matrices with very large entries, unlike the derivative test
    tr = g.trace()
    disc = tr * tr - 4
    s = _rational_sqrt(disc)
    if s is not None:
        lam = (tr + s) / 2 if tr > 0 else (tr - s) / 2
        return Boundary((lam - g.m22) / g.m21)
    fs = math.sqrt(float(disc))
    ftr = float(tr)
    lam = (ftr + fs) / 2 if ftr > 0 else (ftr - fs) / 2
    return Boundary((lam - float(g.m22)) / float(g.m21))


def hyp_dist(p: Point, q: Point) -> float:
    """Hyperbolic distance, via 2*asinh of the half chordal ratio (stable near 0)."""
    if not isinstance(p, Interior) or not isinstance(q, Interior):
        raise BoundaryPoint("hyp_dist needs interior points")
    dx = p.x - q.x
    dy = p.y - q.y
    s2 = (dx * dx + dy * dy) / (4 * p.y * q.y)
    return 2.0 * math.asinh(math.sqrt(float(s2)))


def _raw_apply(m, p: Point) -> Point:
    """Mobius action of a matrix with any positive determinant (not rescaled)."""
    a, b, c, d = m
    det = a * d - b * c
    if isinstance(p, Infinity):
        if c == 0:
            return INFINITY
        return Boundary(a / c)
    if isinstance(p, Boundary):
        den = c * p.x + d
        if den == 0:
            return INFINITY
        return Boundary((a * p.x + b) / den)
    x, y = p.x, p.y
    den = (c * x + d) ** 2 + (c * y) ** 2
    nx = (a * x + b) * (c * x + d) + a * c * y * y
    return Interior(nx / den, det * y / den)


def _raw_inverse(m):
    """Inverse up to positive scale; same Mobius action as the true inverse."""
    a, b, c, d = m
    return (d, -b, -c, a)


def _standard_position(ray: GeodesicRay):
    """Matrix (positive determinant, same number type as the ray data) whose
    Mobius action sends the ray's geodesic to the imaginary axis.

    The ray endpoint goes to Infinity; the opposite endpoint of the full
    geodesic goes to 0, so the image ray points straight up from the image
    of the base. Exact when the ray data is rational.
    """
    bx, by = ray.base.x, ray.base.y
    one = bx - bx + 1  # 1 in the ray's number type
    if isinstance(ray.endpoint, Infinity):
        return (one, -bx, 0 * one, one)
    ex = ray.endpoint.x
    if bx == ex:
        # vertical ray pointing down: z -> -1/(z - ex) sends ex to Infinity
        # and keeps the line vertical.
        return (0 * one, -one, one, -ex)
    c = (bx * bx + by * by - ex * ex) / (2 * (bx - ex))
    e2 = 2 * c - ex  # opposite endpoint of the semicircle
    if e2 > ex:
        return (one, -e2, one, -ex)
    return (-one, e2, one, -ex)


def dist_to_ray(p: Point, ray: GeodesicRay) -> float:
    """Distance from an interior point to a geodesic ray.

    Moves the ray onto the upward vertical axis, where the distance to the
    full geodesic is asinh(|x|/y) and the projection foot sits at height
    |z|; if the foot falls below the ray's base the distance to the base
    point is returned instead.
    """
    if not isinstance(p, Interior):
        raise BoundaryPoint("dist_to_ray needs an interior point")
    g = _standard_position(ray)
    q = _raw_apply(g, p)
    base = _raw_apply(g, ray.base)
    # foot of the perpendicular from q onto the axis is at height |q|
    if q.x * q.x + q.y * q.y >= base.y * base.y:
        return math.asinh(abs(float(q.x / q.y)))
    return hyp_dist(p, ray.base)
