"""Height of a list of plane vectors and recovery of total length from it.

For ``Z = (z_1, ..., z_k)`` the rotation family ``H(t) = sum |Im(e^{it} z_j)|``
is piecewise smooth on ``(0, pi]``.  Its derivative jumps by ``2|z|`` at
``t = pi - Arg(z)`` for every point ``z`` of the canonical list (points
flipped into the upper half plane, zeros dropped, points on a common ray
merged), so half the total jump equals ``sum |z_j|``.

Read as developed saddle-connection vectors of a flat geodesic, ``sum |z_j|``
is the flat length; that the chain really is a geodesic is the caller's
responsibility and cannot be checked from the vectors alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

COLLINEAR_TOL = 1e-12
DEFAULT_FD_STEP = 1e-6


class PlanePoint(NamedTuple):
    re: Fraction | float
    im: Fraction | float

    @property
    def exact(self) -> bool:
        return isinstance(self.re, Fraction) and isinstance(self.im, Fraction)

    def modulus(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def modulus_squared(self):
        return self.re * self.re + self.im * self.im

    def __neg__(self) -> "PlanePoint":
        return PlanePoint(-self.re, -self.im)

    def __add__(self, other) -> "PlanePoint":
        return PlanePoint(self.re + other.re, self.im + other.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def arg(self) -> float:
        return math.atan2(float(self.im), float(self.re))


def _coord(v) -> Fraction | float:
    if isinstance(v, (Fraction, int)):
        return Fraction(v)
    if isinstance(v, str):
        v = v.strip()
        try:
            return Fraction(v)
        except ValueError:
            return float(v)
    v = float(v)
    if not math.isfinite(v):
        raise ValueError("point coordinates must be finite")
    return v


def point(re, im=0) -> PlanePoint:
    """Build a point; ints, Fractions and numeric strings stay exact, floats are flagged inexact."""
    if isinstance(re, complex):
        return PlanePoint(_coord(re.real), _coord(re.imag))
    return PlanePoint(_coord(re), _coord(im))


@dataclass(frozen=True)
class PointList:
    points: tuple[PlanePoint, ...]

    @classmethod
    def of(cls, items: Iterable) -> "PointList":
        pts = []
        for item in items:
            if isinstance(item, PlanePoint):
                pts.append(item)
            elif isinstance(item, complex):
                pts.append(point(item))
            elif isinstance(item, (tuple, list)):
                pts.append(point(*item))
            else:
                pts.append(point(item))
        return cls(tuple(pts))

    @classmethod
    def parse(cls, text: str) -> "PointList":
        """Parse ``"1,0;0,1;-2,0"``."""
        pts = []
        for chunk in text.split(";"):
            if not chunk.strip():
                continue
            parts = chunk.split(",")
            if len(parts) != 2:
                raise ValueError(f"bad point {chunk!r}; expected re,im")
            pts.append(point(parts[0], parts[1]))
        return cls(tuple(pts))

    @property
    def exact(self) -> bool:
        return all(p.exact for p in self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def rotated(self, alpha: float) -> "PointList":
        c, s = math.cos(alpha), math.sin(alpha)
        return PointList(tuple(PlanePoint(c * float(p.re) - s * float(p.im),
                                          s * float(p.re) + c * float(p.im)) for p in self.points))

    def scaled(self, t) -> "PointList":
        return PointList(tuple(PlanePoint(t * p.re, t * p.im) for p in self.points))


def height(points: Iterable[PlanePoint]) -> float:
    return sum(abs(float(p.im)) for p in points)


def height_at(Z: PointList, theta: float) -> float:
    c, s = math.cos(theta), math.sin(theta)
    return sum(abs(s * float(p.re) + c * float(p.im)) for p in Z.points)


def flip(p: PlanePoint) -> PlanePoint:
    if p.im > 0 or (p.im == 0 and p.re >= 0):
        return p
    return -p


def _collinear(p: PlanePoint, q: PlanePoint, tol: float) -> bool:
    if p.exact and q.exact:
        return p.re * q.im - p.im * q.re == 0
    cross = float(p.re) * float(q.im) - float(p.im) * float(q.re)
    dot = float(p.re) * float(q.re) + float(p.im) * float(q.im)
    return dot > 0 and abs(cross) <= tol * p.modulus() * q.modulus()


def canonicalize(Z: PointList, tol: float = COLLINEAR_TOL) -> PointList:
    """Flip into the upper half plane, drop zeros, merge points on a common ray.

    Output is sorted by argument in ``[0, pi)``.  Exact inputs are merged by the
    exact cross product; float inputs when ``|cross| <= tol |p| |q|``.
    """
    pts = sorted((flip(p) for p in Z.points if not p.is_zero()), key=PlanePoint.arg)
    groups: list[list[PlanePoint]] = []
    for p in pts:
        if groups and _collinear(groups[-1][0], p, tol):
            groups[-1].append(p)
        else:
            groups.append([p])
    # a float point just below pi lies on the same line as one at angle 0
    if len(groups) > 1 and _collinear(groups[0][0], -groups[-1][0], tol):
        groups[0].extend(-p for p in groups.pop())
    merged = []
    for g in groups:
        total = g[0]
        for p in g[1:]:
            total = total + p
        merged.append(total)
    return PointList(tuple(merged))


@dataclass(frozen=True)
class Breakpoint:
    theta: float
    jump: float
    jump_squared: Fraction | float   # exact 4|z|^2 for exact inputs

    def to_json(self) -> dict:
        return {"theta": self.theta, "jump": self.jump}


@dataclass(frozen=True)
class BreakpointReport:
    breakpoints: tuple[Breakpoint, ...]
    reconstructed_length: float
    canonical_points: PointList

    def to_json(self) -> dict:
        return {"breakpoints": [b.to_json() for b in self.breakpoints],
                "length": self.reconstructed_length}


def breakpoint_angle(p: PlanePoint) -> float:
    """pi - Arg(p) for a canonical point, in (0, pi]."""
    arg = p.arg()
    if arg < 0:  # only -0.0 can appear after flipping
        arg = 0.0
    return math.pi - arg


def breakpoints_and_jumps(Z: PointList, tol: float = COLLINEAR_TOL) -> BreakpointReport:
    canon = canonicalize(Z, tol)
    if not canon.points:
        raise ValueError("point list is empty or all zero")
    bps = sorted((Breakpoint(breakpoint_angle(p), 2 * p.modulus(), 4 * p.modulus_squared())
                  for p in canon.points), key=lambda b: b.theta)
    length = math.fsum(b.jump for b in bps) / 2
    return BreakpointReport(tuple(bps), length, canon)


def finite_difference_jump(Z: PointList, theta: float, h: float = DEFAULT_FD_STEP,
                           corrected: bool = False) -> float:
    """Estimate the jump of H' at ``theta`` from three samples of H.

    The plain estimate ``(H(t+h) - 2H(t) + H(t-h)) / h`` carries an O(h)
    error of about ``h * H(t)``.  ``corrected=True`` uses
    ``(H(t+h) + H(t-h) - 2 cos(h) H(t)) / sin(h)``, which is exact for sums of
    ``|sin|`` terms when no other breakpoint lies within ``h``.
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    hp, h0, hm = height_at(Z, theta + h), height_at(Z, theta), height_at(Z, theta - h)
    if corrected:
        return (hp + hm - 2 * math.cos(h) * h0) / math.sin(h)
    return (hp - h0) / h - (h0 - hm) / h


def developed_length(Z: PointList) -> float:
    """Total length of a chain of developed edge vectors: sum of moduli."""
    if not Z.points:
        raise ValueError("empty point list")
    return math.fsum(p.modulus() for p in Z.points)

