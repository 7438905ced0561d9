# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, Dict, Optional, Tuple, Union

import math
import numpy as np

from dataclasses import dataclass
from scipy.linalg import null_space

from moebius import (BoundaryPoint, HPoint, IsometryClass, MoebiusMap, NotHyperbolic,
        apply, canonical_hyperbolic, classify, compose, inverse)

class DegenerateGeodesic(ValueError):
    pass

class NotDisjoint(ValueError):
    pass

class NotCrossing(ValueError):
    pass

# bilinear form on circle vectors (A,B,C)
PAIRING = np.array([[0.0, 0.0, 0.5], [0.0, -1.0, 0.0], [0.5, 0.0, 0.0]])

@dataclass(frozen=True)
class Geodesic:
    """Oriented geodesic, running from the boundary point q to the boundary point p."""
    p:BoundaryPoint
    q:BoundaryPoint

    EPS_B = 1e-9

    def __post_init__(self) -> None:
        if self.p.same(self.q, Geodesic.EPS_B):
            raise DegenerateGeodesic(f'endpoints {self.p} and {self.q} coincide')

    @staticmethod
    def of(p:Union[BoundaryPoint,float], q:Union[BoundaryPoint,float]) -> 'Geodesic':
        return Geodesic(BoundaryPoint.of(p), BoundaryPoint.of(q))

    def reversed(self) -> 'Geodesic':
        return Geodesic(self.q, self.p)

    @property
    def is_ray(self) -> bool:
        return self.p.is_infinite or self.q.is_infinite

    def same(self, other:'Geodesic', *, oriented:bool=False, eps:float=1e-9) -> bool:
        if self.p.same(other.p, eps) and self.q.same(other.q, eps):
            return True
        return not oriented and self.p.same(other.q, eps) and self.q.same(other.p, eps)

    def circle_vector(self) -> np.ndarray:
        (u1, u2), (v1, v2) = self.p.to_json(), self.q.to_json()
        return np.array([u2 * v2, (u1 * v2 + u2 * v1) / 2, u1 * v1])

    def apex(self) -> HPoint:
        if self.p.is_infinite:
            return HPoint(self.q.value, 1.0)
        if self.q.is_infinite:
            return HPoint(self.p.value, 1.0)
        a, b = self.p.value, self.q.value
        return HPoint((a + b) / 2, abs(a - b) / 2)

    def contains(self, z:HPoint, eps:float=1e-9) -> bool:
        A, B, C = self.circle_vector()
        w = z.z
        s = max(1.0, abs(w) ** 2)
        return abs(A * abs(w) ** 2 - 2 * B * w.real + C) <= eps * s

    def frame(self, base:Optional[HPoint]=None) -> MoebiusMap:
        """Orientation-preserving isometry taking the upward imaginary axis onto
        this geodesic, with i landing on base (the apex by default)."""
        (px, py), (qx, qy) = self.p.to_json(), self.q.to_json()
        if px * qy - qx * py < 0:
            qx, qy = -qx, -qy
        F = MoebiusMap.make(px, qx, py, qy)
        w = apply(inverse(F), base or self.apex())
        k = math.sqrt(w.im)
        return compose(F, MoebiusMap.make(k, 0, 0, 1 / k))

    def point(self, s:float, base:Optional[HPoint]=None) -> HPoint:
        return apply(self.frame(base), HPoint(0.0, math.exp(s)))

    def coordinate(self, z:HPoint, base:Optional[HPoint]=None) -> float:
        return math.log(apply(inverse(self.frame(base)), z).im)

    def to_json(self) -> Dict[str,Any]:
        return { 'p': self.p.to_json(), 'q': self.q.to_json() }

    @staticmethod
    def from_json(v:Any) -> 'Geodesic':
        if not (isinstance(v, dict) and 'p' in v and 'q' in v):
            raise ValueError(f'invalid geodesic: {v!r}')
        return Geodesic(BoundaryPoint.from_json(v['p']), BoundaryPoint.from_json(v['q']))

    def __str__(self) -> str:
        return f'{self.q}->{self.p}'


def transport(M:MoebiusMap, l:Geodesic) -> Geodesic:
    return Geodesic(apply(M, l.p), apply(M, l.q))

def reflection_in(l:Geodesic) -> MoebiusMap:
    if l.is_ray:
        x0 = (l.q if l.p.is_infinite else l.p).value
        return MoebiusMap.unit(-1.0, 2 * x0, 0.0, 1.0, -1)
    # inversion in the circle about c = (p+q)/2 with radius r, where r^2 - c^2 = -pq
    p, q = l.p.value, l.q.value
    c, r = (p + q) / 2, abs(p - q) / 2
    return MoebiusMap.unit(c / r, -p * q / r, 1 / r, -c / r, -1)

def translation_along(l:Geodesic, s:float) -> MoebiusMap:
    if s == 0:
        return MoebiusMap.make(1, 0, 0, 1)
    return canonical_hyperbolic(l.p, l.q, math.exp(s))

def axis_of(M:MoebiusMap) -> Geodesic:
    cls = classify(M)
    if cls.tag != IsometryClass.HYPERBOLIC:
        raise NotHyperbolic(f'{M} is {cls.tag} and has no axis')
    return Geodesic(cls.alpha, cls.beta)

def reversing_axis(M:MoebiusMap) -> Geodesic:
    """Invariant geodesic of an orientation-reversing isometry: the mirror of a
    reflection or the axis of a glide reflection."""
    if M.o > 0:
        raise ValueError(f'{M} preserves orientation')
    mu, v = np.linalg.eig(M.matrix)
    i, j = (0, 1) if mu[0] > mu[1] else (1, 0)
    return Geodesic(BoundaryPoint.homogeneous(*v[:, i]), BoundaryPoint.homogeneous(*v[:, j]))

def distance(z:HPoint, w:HPoint) -> float:
    return 2 * math.asinh(abs(z.z - w.z) / (2 * math.sqrt(z.im * w.im)))


class EndpointRelation:
    DISJOINT   = 'disjoint-closures'
    ONE_SHARED = 'one-shared'
    CROSSING   = 'crossing'
    EQUAL      = 'equal'

def _between(k:float, lo:float, hi:float) -> bool:
    return lo < k < hi

def endpoint_relation(l1:Geodesic, l2:Geodesic) -> str:
    eps = Geodesic.EPS_B
    shared = sum(1 for a in (l1.p, l1.q) for b in (l2.p, l2.q) if a.same(b, eps))
    if shared >= 2:
        return EndpointRelation.EQUAL
    if shared == 1:
        return EndpointRelation.ONE_SHARED
    lo, hi = sorted((l1.p.key(), l1.q.key()))
    inside = [_between(b.key(), lo, hi) for b in (l2.p, l2.q)]
    return EndpointRelation.CROSSING if inside[0] != inside[1] else EndpointRelation.DISJOINT

def inversive_product(l1:Geodesic, l2:Geodesic) -> float:
    g, h = l1.circle_vector(), l2.circle_vector()
    return float((g @ PAIRING @ h) / math.sqrt((g @ PAIRING @ g) * (h @ PAIRING @ h)))

def intersection(l1:Geodesic, l2:Geodesic) -> HPoint:
    if endpoint_relation(l1, l2) != EndpointRelation.CROSSING:
        raise NotCrossing(f'{l1} and {l2} do not cross')
    A1, B1, C1 = l1.circle_vector()
    A2, B2, C2 = l2.circle_vector()
    x = (C1 * A2 - C2 * A1) / (2 * (B1 * A2 - B2 * A1))
    A, B, C = (A1, B1, C1) if abs(A1) >= abs(A2) else (A2, B2, C2)
    return HPoint(x, math.sqrt(max((2 * B * x - C) / A - x * x, 0.0)))

def _tangent(l:Geodesic, z:HPoint) -> complex:
    if l.p.is_infinite:
        return 1j
    if l.q.is_infinite:
        return -1j
    p, q = l.p.value, l.q.value
    return -1j * (z.z - (p + q) / 2) * math.copysign(1.0, p - q)

def angle_between(l1:Geodesic, l2:Geodesic) -> float:
    z = intersection(l1, l2)
    t1, t2 = _tangent(l1, z), _tangent(l2, z)
    c = (t1 * t2.conjugate()).real / (abs(t1) * abs(t2))
    return math.acos(max(-1.0, min(1.0, c)))

def _roots(h:np.ndarray) -> Tuple[BoundaryPoint,BoundaryPoint]:
    A, B, C = h
    disc = math.sqrt(max(B * B - A * C, 0.0))
    if abs(A) < 1e-12 * np.linalg.norm(h):
        return BoundaryPoint.of(C / (2 * B)), BoundaryPoint.of(math.inf)
    return BoundaryPoint.of((B + disc) / A), BoundaryPoint.of((B - disc) / A)

def common_perpendicular(l1:Geodesic, l2:Geodesic) -> Tuple[Geodesic,HPoint,HPoint,float]:
    rel = endpoint_relation(l1, l2)
    if rel != EndpointRelation.DISJOINT:
        raise NotDisjoint(f'{l1} and {l2} are {rel}')
    ns = null_space(np.array([PAIRING @ l1.circle_vector(), PAIRING @ l2.circle_vector()]))
    e1, e2 = _roots(ns[:, 0])
    # orient towards the side of l1 holding l2
    lo, hi = sorted((l1.p.key(), l1.q.key()))
    side = _between(l2.p.key(), lo, hi)
    p, q = (e1, e2) if _between(e1.key(), lo, hi) == side else (e2, e1)
    perp = Geodesic(p, q)
    foot1, foot2 = intersection(perp, l1), intersection(perp, l2)
    return perp, foot1, foot2, distance(foot1, foot2)
