# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, Dict, List, Optional, Union

import cmath
import math
import numpy as np

from dataclasses import dataclass

class ZeroDeterminant(ValueError):
    pass

class DegenerateAxis(ValueError):
    pass

class UnitShift(ValueError):
    pass

class ZeroShift(ValueError):
    pass

class NotHyperbolic(ValueError):
    pass


# -----------------------------------------------------------------------------
# Points

@dataclass(frozen=True)
class BoundaryPoint:
    x:float
    y:float

    # below this the second homogeneous coordinate counts as zero
    EPS_INF = 1e-12

    @staticmethod
    def homogeneous(x:float, y:float) -> 'BoundaryPoint':
        n = math.hypot(x, y)
        if n == 0:
            raise ValueError('boundary point (0,0) is undefined')
        x, y = x / n, y / n
        if y < 0 or (y == 0 and x < 0):
            x, y = -x, -y
        return BoundaryPoint(x + 0.0, y + 0.0)

    @staticmethod
    def of(v:Union['BoundaryPoint',float,None]) -> 'BoundaryPoint':
        if isinstance(v, BoundaryPoint):
            return v
        if v is None or math.isinf(v):
            return INFINITY
        return BoundaryPoint.homogeneous(float(v), 1.0)

    @staticmethod
    def from_angle(theta:float) -> 'BoundaryPoint':
        # Cayley image of exp(i*theta); theta=0 lands on infinity
        return BoundaryPoint.homogeneous(-math.cos(theta / 2), math.sin(theta / 2))

    @property
    def is_infinite(self) -> bool:
        return abs(self.y) < BoundaryPoint.EPS_INF

    @property
    def value(self) -> float:
        return math.inf if self.is_infinite else self.x / self.y

    def key(self) -> float:
        # cyclic position in (0,pi]: increasing along the real line, infinity last
        return math.pi - math.atan2(self.y, self.x)

    def same(self, other:'BoundaryPoint', eps:float=1e-9) -> bool:
        return abs(self.x * other.y - other.x * self.y) < eps

    def to_json(self) -> List[float]:
        return [self.x, self.y]

    @staticmethod
    def from_json(v:Any) -> 'BoundaryPoint':
        if v is None:
            return INFINITY
        if isinstance(v, (int, float)):
            return BoundaryPoint.of(float(v))
        if isinstance(v, list) and len(v) == 2 and all(isinstance(e, (int, float)) for e in v):
            x, y = float(v[0]), float(v[1])
            if abs(math.hypot(x, y) - 1) < 1e-15 and (y > 0 or (y == 0 and x > 0)):
                return BoundaryPoint(x, y)
            return BoundaryPoint.homogeneous(x, y)
        raise ValueError(f'invalid boundary point: {v!r}')

    def __str__(self) -> str:
        return 'inf' if self.is_infinite else f'{self.value:.6g}'

INFINITY = BoundaryPoint(1.0, 0.0)


@dataclass(frozen=True)
class HPoint:
    re:float
    im:float

    def __post_init__(self) -> None:
        if not self.im > 0:
            raise ValueError(f'point {self.re}+{self.im}i is not in the upper half-plane')

    @staticmethod
    def of(z:complex) -> 'HPoint':
        return HPoint(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def to_json(self) -> List[float]:
        return [self.re, self.im]

    @staticmethod
    def from_json(v:Any) -> 'HPoint':
        if isinstance(v, list) and len(v) == 2:
            return HPoint(float(v[0]), float(v[1]))
        raise ValueError(f'invalid point: {v!r}')

    def __str__(self) -> str:
        return f'{self.re:.6g}{self.im:+.6g}i'


# -----------------------------------------------------------------------------
# Isometries

@dataclass(frozen=True)
class MoebiusMap:
    a:float
    b:float
    c:float
    d:float
    o:int

    EPS_N    = 1e-12
    EPS_C    = 1e-9
    EPS_PROJ = 1e-12

    @staticmethod
    def make(a:float, b:float, c:float, d:float) -> 'MoebiusMap':
        det = a * d - b * c
        if abs(det) < MoebiusMap.EPS_N:
            raise ZeroDeterminant(f'determinant {det} of ({a},{b},{c},{d}) vanishes')
        s = math.sqrt(abs(det))
        m = [a / s, b / s, c / s, d / s]
        lead = next(v for v in m if abs(v) > MoebiusMap.EPS_N)
        if lead < 0:
            m = [-v for v in m]
        return MoebiusMap(*(v + 0.0 for v in m), 1 if det > 0 else -1)

    @staticmethod
    def unit(a:float, b:float, c:float, d:float, o:int) -> 'MoebiusMap':
        """Entries already of determinant +-1; only the sign is fixed."""
        lead = next((e for e in (a, b, c, d) if abs(e) > MoebiusMap.EPS_N), None)
        if lead is None:
            raise ZeroDeterminant(f'matrix ({a},{b},{c},{d}) vanishes')
        s = 1.0 if lead > 0 else -1.0
        return MoebiusMap(s * a + 0.0, s * b + 0.0, s * c + 0.0, s * d + 0.0, o)

    @staticmethod
    def of_matrix(m:np.ndarray) -> 'MoebiusMap':
        return MoebiusMap.make(float(m[0,0]), float(m[0,1]), float(m[1,0]), float(m[1,1]))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    @property
    def entries(self) -> List[float]:
        return [self.a, self.b, self.c, self.d]

    @property
    def trace(self) -> float:
        return abs(self.a + self.d)

    def to_json(self) -> Dict[str,Any]:
        return { 'm': self.entries, 'o': self.o }

    @staticmethod
    def from_json(v:Any) -> 'MoebiusMap':
        o:Optional[int] = None
        if isinstance(v, dict):
            if 'm' not in v:
                raise ValueError(f'map object without "m": {v!r}')
            o = v.get('o')
            v = v['m']
        if isinstance(v, list) and len(v) == 2 and all(isinstance(r, list) and len(r) == 2 for r in v):
            v = [v[0][0], v[0][1], v[1][0], v[1][1]]
        if not (isinstance(v, list) and len(v) == 4 and all(isinstance(e, (int, float)) for e in v)):
            raise ValueError(f'invalid matrix: {v!r}')
        a, b, c, d = (float(e) for e in v)
        det = a * d - b * c
        if abs(abs(det) - 1) < MoebiusMap.EPS_N * max(1.0, a * a, b * b, c * c, d * d):
            # already normalized: keep the stored bits
            m = MoebiusMap.unit(a, b, c, d, 1 if det > 0 else -1)
        else:
            m = MoebiusMap.make(a, b, c, d)
        if o is not None and o != m.o:
            raise ValueError(f'orientation {o} does not match determinant sign of {v!r}')
        return m

    def __str__(self) -> str:
        z = 'z' if self.o > 0 else 'conj(z)'
        return f'({self.a:.6g}{z}{self.b:+.6g})/({self.c:.6g}{z}{self.d:+.6g})'

IDENTITY = MoebiusMap(1.0, 0.0, 0.0, 1.0, 1)

def compose(*maps:MoebiusMap) -> MoebiusMap:
    # factors have determinant +-1, so the product is not rescaled
    m = np.eye(2)
    o = 1
    for M in maps:
        m = m @ M.matrix
        o *= M.o
    return MoebiusMap.unit(float(m[0,0]), float(m[0,1]), float(m[1,0]), float(m[1,1]), o)

def inverse(M:MoebiusMap) -> MoebiusMap:
    return MoebiusMap.unit(M.d, -M.b, -M.c, M.a, M.o)

def power(M:MoebiusMap, n:int) -> MoebiusMap:
    base = M if n >= 0 else inverse(M)
    return compose(*([base] * abs(n))) if n != 0 else IDENTITY

def conjugate(A:MoebiusMap, M:MoebiusMap) -> MoebiusMap:
    return compose(A, M, inverse(A))

def proj_distance(M1:MoebiusMap, M2:MoebiusMap) -> float:
    if M1.o != M2.o:
        return math.inf
    p, q = np.array(M1.entries), np.array(M2.entries)
    return float(min(np.linalg.norm(p - q), np.linalg.norm(p + q)))

Point = Union[BoundaryPoint, HPoint]

def apply(M:MoebiusMap, p:Point) -> Point:
    if isinstance(p, BoundaryPoint):
        return BoundaryPoint.homogeneous(M.a * p.x + M.b * p.y, M.c * p.x + M.d * p.y)
    z = p.z if M.o > 0 else p.z.conjugate()
    return HPoint.of((M.a * z + M.b) / (M.c * z + M.d))


# -----------------------------------------------------------------------------
# Classification

@dataclass(frozen=True)
class IsometryClass:
    IDENTITY   = 'identity'
    HYPERBOLIC = 'hyperbolic'
    PARABOLIC  = 'parabolic'
    ELLIPTIC   = 'elliptic'
    REVERSING  = 'orientation-reversing'

    tag:str
    alpha:Optional[BoundaryPoint] = None
    beta:Optional[BoundaryPoint] = None
    shift:Optional[float] = None
    positive:Optional[bool] = None
    center:Optional[HPoint] = None
    angle:Optional[float] = None

    @property
    def is_shift(self) -> bool:
        return self.tag in (IsometryClass.HYPERBOLIC, IsometryClass.PARABOLIC)

    def to_json(self) -> Dict[str,Any]:
        d:Dict[str,Any] = { 'tag': self.tag }
        if self.alpha is not None:
            d['alpha'] = self.alpha.to_json()
        if self.beta is not None:
            d['beta'] = self.beta.to_json()
        if self.shift is not None:
            d['shift'] = self.shift
        if self.positive is not None:
            d['positive'] = self.positive
        if self.center is not None:
            d['center'] = self.center.to_json()
        if self.angle is not None:
            d['angle'] = self.angle
        return d

def _eigenpoint(a:float, b:float, c:float, d:float, mu:float) -> BoundaryPoint:
    v1 = (b, mu - a)
    v2 = (mu - d, c)
    return BoundaryPoint.homogeneous(*(v1 if math.hypot(*v1) >= math.hypot(*v2) else v2))

def classify(M:MoebiusMap) -> IsometryClass:
    if M.o < 0:
        return IsometryClass(IsometryClass.REVERSING)
    a, b, c, d = M.entries
    if a + d < 0:
        a, b, c, d = -a, -b, -c, -d
    t = a + d
    if t > 2 + MoebiusMap.EPS_C:
        mu = (t + math.sqrt((t - 2) * (t + 2))) / 2
        alpha = _eigenpoint(a, b, c, d, mu)
        beta = _eigenpoint(a, b, c, d, 1 / mu)
        positive = not alpha.is_infinite and not beta.is_infinite and alpha.value < beta.value
        return IsometryClass(IsometryClass.HYPERBOLIC, alpha=alpha, beta=beta, shift=mu * mu,
                positive=positive)
    if t >= 2 - MoebiusMap.EPS_C:
        if max(abs(b), abs(c), abs(a - d)) <= MoebiusMap.EPS_C:
            return IsometryClass(IsometryClass.IDENTITY)
        col1, col2 = (a - 1, c), (b, d - 1)
        alpha = BoundaryPoint.homogeneous(*(col1 if math.hypot(*col1) >= math.hypot(*col2) else col2))
        shift = b if alpha.is_infinite else -c
        return IsometryClass(IsometryClass.PARABOLIC, alpha=alpha, shift=shift, positive=shift > 0)
    z0 = complex((a - d) / (2 * c), math.sqrt(4 - t * t) / (2 * abs(c)))
    phi = -2 * cmath.phase(c * z0 + d)
    phi = math.atan2(math.sin(phi), math.cos(phi))
    if phi <= -math.pi:
        phi += 2 * math.pi
    return IsometryClass(IsometryClass.ELLIPTIC, center=HPoint.of(z0), angle=phi)


# -----------------------------------------------------------------------------
# Canonical forms

def canonical_hyperbolic(alpha:Union[BoundaryPoint,float], beta:Union[BoundaryPoint,float], lam:float) -> MoebiusMap:
    alpha, beta = BoundaryPoint.of(alpha), BoundaryPoint.of(beta)
    if alpha.same(beta):
        raise DegenerateAxis(f'fixed points {alpha} and {beta} coincide')
    if not lam > 0:
        raise ValueError(f'shift parameter {lam} must be positive')
    if abs(lam - 1) < MoebiusMap.EPS_N:
        raise UnitShift(f'shift parameter {lam} is one')
    if alpha.is_infinite:
        b = beta.value
        return MoebiusMap.make(lam, -(lam - 1) * b, 0, 1)
    if beta.is_infinite:
        a = alpha.value
        return MoebiusMap.make(1 / lam, -(1 / lam - 1) * a, 0, 1)
    a, b = alpha.value, beta.value
    return MoebiusMap.make(lam * a - b, -(lam - 1) * a * b, lam - 1, a - lam * b)

def canonical_parabolic(alpha:Union[BoundaryPoint,float], lam:float) -> MoebiusMap:
    alpha = BoundaryPoint.of(alpha)
    if abs(lam) < MoebiusMap.EPS_N:
        raise ZeroShift(f'shift parameter {lam} is zero')
    if alpha.is_infinite:
        return MoebiusMap.make(1, lam, 0, 1)
    a = alpha.value
    return MoebiusMap.make(1 - lam * a, lam * a * a, -lam, 1 + lam * a)

def canonical_elliptic(x:HPoint, phi:float) -> MoebiusMap:
    s = math.sqrt(x.im)
    A = MoebiusMap.make(s, x.re / s, 0, 1 / s)
    R = MoebiusMap.make(math.cos(phi / 2), math.sin(phi / 2), -math.sin(phi / 2), math.cos(phi / 2))
    return conjugate(A, R)

def sqrt_hyperbolic(M:MoebiusMap) -> MoebiusMap:
    cls = classify(M)
    if cls.tag != IsometryClass.HYPERBOLIC:
        raise NotHyperbolic(f'{M} is {cls.tag}')
    return canonical_hyperbolic(cls.alpha, cls.beta, math.sqrt(cls.shift))
