# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, Dict, List, Optional, Sequence, Tuple

import math
import numpy as np

from dataclasses import dataclass
from scipy.optimize import brentq

from eventhub import Context, EventHub
from halfplane import Geodesic, axis_of, reflection_in
from moebius import (BoundaryPoint, IDENTITY, IsometryClass, MoebiusMap,
        canonical_hyperbolic, canonical_parabolic, classify, compose, conjugate, inverse, power,
        proj_distance)
from words import GroupWord, eval_word

class InfiniteFixedPoint(ValueError):
    pass

class NotShift(ValueError):
    pass

class TooShort(ValueError):
    pass

class ClassMismatch(ValueError):
    pass

class NotSequential(ValueError):
    pass

class BadParamCount(ValueError):
    pass

class NotConstructible(ValueError):
    pass

EPS_REL = 1e-9

# fixed points beyond this are moved off infinity in reference sets
FAR = 1e6

HYPERBOLIC = IsometryClass.HYPERBOLIC
PARABOLIC = IsometryClass.PARABOLIC


# -----------------------------------------------------------------------------
# Predicates

def fixed_points(M:MoebiusMap) -> List[BoundaryPoint]:
    cls = classify(M)
    if not cls.is_shift:
        raise NotShift(f'{M} is {cls.tag}')
    return [cls.alpha] if cls.beta is None else [cls.alpha, cls.beta]

def _finite(M:MoebiusMap) -> List[float]:
    fps = fixed_points(M)
    if any(p.is_infinite for p in fps):
        raise InfiniteFixedPoint(f'{M} fixes infinity')
    return [p.value for p in fps]

def is_left_of(M1:MoebiusMap, M2:MoebiusMap) -> bool:
    return max(_finite(M1)) + Geodesic.EPS_B < min(_finite(M2))

def _size(M:MoebiusMap) -> float:
    return max(1.0, float(np.abs(M.matrix).max()))

def product_scale(maps:Sequence[MoebiusMap]) -> float:
    """Largest size of a prefix times the matching suffix: the magnitude that
    cancels when the product is the identity."""
    scale = 1.0
    for k in range(1, len(maps)):
        scale = max(scale, _size(compose(*maps[:k])) * _size(compose(*maps[k:])))
    return scale

def is_identity(M:MoebiusMap, eps:float=EPS_REL, scale:float=1.0) -> bool:
    return proj_distance(M, IDENTITY) <= eps * scale

def _cut(key:float) -> MoebiusMap:
    # orientation-preserving map sending the boundary point with this key to infinity
    th = math.pi - key
    u = BoundaryPoint.homogeneous(math.cos(th), math.sin(th))
    if u.is_infinite:
        return IDENTITY
    return MoebiusMap.make(0, -1, 1, -u.value)

def _cuts(cs:Sequence[MoebiusMap]) -> List[MoebiusMap]:
    keys = sorted(p.key() for C in cs for p in fixed_points(C))
    uniq:List[float] = []
    for k in keys:
        if not uniq or k - uniq[-1] > 1e-12:
            uniq.append(k)
    mids = [(a + b) / 2 for a, b in zip(uniq, uniq[1:])]
    mids.append(((uniq[-1] + uniq[0] + math.pi) / 2) % math.pi)
    return [_cut(k) for k in mids]

def _positive_and_ordered(cs:Sequence[MoebiusMap]) -> bool:
    for C in cs:
        cls = classify(C)
        if not cls.positive or any(p.is_infinite for p in fixed_points(C)):
            return False
    return all(is_left_of(a, b) for a, b in zip(cs, cs[1:]))

def is_sequential_triple(C1:MoebiusMap, C2:MoebiusMap, C3:MoebiusMap) -> bool:
    for C in (C1, C2, C3):
        fixed_points(C)
    if not is_identity(compose(C1, C2, C3), scale=product_scale((C1, C2, C3))):
        return False
    for A in _cuts((C1, C2, C3)):
        if _positive_and_ordered([conjugate(A, C) for C in (C1, C2, C3)]):
            return True
    return False

def is_sequential_tuple(cs:Sequence[MoebiusMap]) -> bool:
    r = len(cs)
    if r < 3:
        raise TooShort(f'sequential tuples need at least 3 elements, got {r}')
    for C in cs:
        fixed_points(C)
    for j in range(1, r - 1):
        head = eval_word(GroupWord.of(*((i, 1) for i in range(j))), cs)
        tail = eval_word(GroupWord.of(*((i, 1) for i in range(j + 1, r))), cs)
        try:
            if not is_sequential_triple(head, cs[j], tail):
                return False
        except NotShift:
            return False
    return True


# -----------------------------------------------------------------------------
# Surface types and sets

@dataclass(frozen=True)
class SurfaceType:
    g:int
    n:int
    m:int

    def __post_init__(self) -> None:
        if min(self.g, self.n, self.m) < 0:
            raise ValueError(f'negative entry in surface type {self}')

    @property
    def constructible(self) -> bool:
        return self.n + self.m >= 1 and 2 * self.g + self.n + self.m > 2

    def check(self) -> None:
        if not self.constructible:
            raise NotConstructible(f'surface type {self} has no sequential sets')

    @property
    def param_count(self) -> int:
        return 6 * self.g + 3 * self.n + 2 * self.m - 3

    @property
    def dim(self) -> int:
        return 6 * self.g + 3 * self.n + 2 * self.m - 6

    def roles(self) -> List[str]:
        rs = [f'C{j + 1}' for j in range(self.n + self.m)]
        for i in range(self.g):
            rs += [f'A{i + 1}', f'B{i + 1}']
        return rs

    def kinds(self) -> List[str]:
        return [HYPERBOLIC] * self.n + [PARABOLIC] * self.m + [HYPERBOLIC] * (2 * self.g)

    def to_json(self) -> Dict[str,int]:
        return { 'g': self.g, 'n': self.n, 'm': self.m }

    @staticmethod
    def from_json(v:Any) -> 'SurfaceType':
        if isinstance(v, list) and len(v) == 3:
            v = dict(zip('gnm', v))
        if not (isinstance(v, dict) and all(isinstance(v.get(k), int) for k in 'gnm')):
            raise ValueError(f'invalid surface type: {v!r}')
        return SurfaceType(v['g'], v['n'], v['m'])

    def __str__(self) -> str:
        return f'({self.g},{self.n},{self.m})'


@dataclass(frozen=True)
class SequentialSetOfType:
    type:SurfaceType
    cs:Tuple[MoebiusMap,...]
    as_:Tuple[MoebiusMap,...]
    bs:Tuple[MoebiusMap,...]

    @property
    def gens(self) -> List[MoebiusMap]:
        out = list(self.cs)
        for A, B in zip(self.as_, self.bs):
            out += [A, B]
        return out

    def relator(self) -> GroupWord:
        k = len(self.cs)
        w = GroupWord.of(*((j, 1) for j in range(k)))
        for i in range(len(self.as_)):
            a, b = k + 2 * i, k + 2 * i + 1
            w = w * GroupWord.of((a, 1), (b, 1), (a, -1), (b, -1))
        return w

    def conjugate(self, A:MoebiusMap) -> 'SequentialSetOfType':
        return SequentialSetOfType(self.type, tuple(conjugate(A, M) for M in self.cs),
                tuple(conjugate(A, M) for M in self.as_), tuple(conjugate(A, M) for M in self.bs))

    def derived(self) -> List[MoebiusMap]:
        out = list(self.cs)
        for A, B in zip(self.as_, self.bs):
            out += [A, compose(B, inverse(A), inverse(B))]
        return out

    def to_json(self) -> Dict[str,Any]:
        return {
            'type': self.type.to_json(),
            'cs': [M.to_json() for M in self.cs],
            'as': [M.to_json() for M in self.as_],
            'bs': [M.to_json() for M in self.bs],
        }

    @staticmethod
    def from_json(v:Any) -> 'SequentialSetOfType':
        try:
            t = SurfaceType.from_json(v['type'])
            S = SequentialSetOfType(t,
                    tuple(MoebiusMap.from_json(M) for M in v['cs']),
                    tuple(MoebiusMap.from_json(M) for M in v['as']),
                    tuple(MoebiusMap.from_json(M) for M in v['bs']))
        except (KeyError, TypeError) as e:
            raise ValueError(f'invalid sequential set: {e}') from e
        if len(S.cs) != t.n + t.m or len(S.as_) != t.g or len(S.bs) != t.g:
            raise ValueError(f'generator counts do not match type {t}')
        return S

def relation_defect(S:SequentialSetOfType) -> float:
    return proj_distance(eval_word(S.relator(), S.gens), IDENTITY)

def relation_scale(S:SequentialSetOfType) -> float:
    return product_scale([power(S.gens[i], e) for i, e in S.relator().letters])

def _class_pattern(S:SequentialSetOfType) -> Optional[str]:
    for role, kind, M in zip(S.type.roles(), S.type.kinds(), S.gens):
        tag = classify(M).tag
        if tag != kind:
            return f'{role} is {tag}, expected {kind}'
    return None

def _validate(S:SequentialSetOfType) -> None:
    if (err := _class_pattern(S)) is not None:
        raise ClassMismatch(err)
    defect, scale = relation_defect(S), relation_scale(S)
    if defect > EPS_REL * scale:
        raise NotSequential(f'relation defect {defect} exceeds {EPS_REL} at scale {scale:.3g}')
    try:
        ok = is_sequential_tuple(S.derived())
    except NotShift as e:
        raise NotSequential(str(e)) from e
    if not ok:
        raise NotSequential(f'derived tuple of {S.type} is not sequential')

def is_sequential_set_of_type(S:SequentialSetOfType) -> bool:
    try:
        _validate(S)
    except (ClassMismatch, NotSequential):
        return False
    return True


# -----------------------------------------------------------------------------
# Construction from parameters

def _slots(t:SurfaceType) -> List[str]:
    kinds = t.kinds()
    k = t.n + t.m
    return kinds[:k - 1] + kinds[k:]

def _assemble(t:SurfaceType, vals:Sequence[float]) -> SequentialSetOfType:
    it = iter(vals)
    maps = []
    for kind in _slots(t):
        if kind == HYPERBOLIC:
            a, b, lam = next(it), next(it), next(it)
            maps.append(canonical_hyperbolic(a, b, lam))
        else:
            a, lam = next(it), next(it)
            maps.append(canonical_parabolic(a, lam))
    k = t.n + t.m - 1
    cs, ab = maps[:k], maps[k:]
    comm = compose(*(compose(A, B, inverse(A), inverse(B)) for A, B in zip(ab[0::2], ab[1::2])))
    last = inverse(compose(comm, *cs))
    return SequentialSetOfType(t, tuple(cs) + (last,), tuple(ab[0::2]), tuple(ab[1::2]))

def _shift_grid(kind:str, steps:int, span:float) -> np.ndarray:
    xs = np.linspace(-span, span, steps)
    if kind == HYPERBOLIC:
        return np.exp(xs)
    e = np.exp(xs)
    return np.concatenate([-e[::-1], e])

def _close(t:SurfaceType, vals:List[float], context:Context) -> SequentialSetOfType:
    kind = _slots(t)[-1]
    steps = context.get('search.steps', 2000)
    span = context.get('search.span', 12.0)

    def f(lam:float) -> float:
        return _assemble(t, vals + [lam]).cs[-1].trace - 2

    grid = _shift_grid(kind, steps, span)
    fs = [f(x) for x in grid]
    err:Optional[ValueError] = None
    roots = 0
    for (a, fa), (b, fb) in zip(zip(grid, fs), zip(grid[1:], fs[1:])):
        if a * b < 0 or (kind == HYPERBOLIC and a < 1 < b):
            continue
        if fa == 0:
            lam = a
        elif fa * fb < 0:
            lam = brentq(f, a, b)
        else:
            continue
        roots += 1
        S = _assemble(t, vals + [lam])
        try:
            _validate(S)
        except (ClassMismatch, NotSequential) as e:
            err = e
            continue
        EventHub.emit(context, EventHub.SEARCH, what='closing shift', size=roots, outcome=f'{lam:.12g}')
        return S
    EventHub.emit(context, EventHub.SEARCH, what='closing shift', size=roots, outcome='failed')
    raise err or ClassMismatch(f'no shift parameter closes {t} with a parabolic element')

def construct_surface_set(t:SurfaceType, params:Sequence[float], *, context:Context={}) -> SequentialSetOfType:
    t.check()
    if len(params) != t.param_count:
        raise BadParamCount(f'type {t} takes {t.param_count} parameters, got {len(params)}')
    vals = [float(x) for x in params]
    if t.m >= 1:
        S = _close(t, vals, context)
    else:
        S = _assemble(t, vals)
        _validate(S)
    EventHub.emit(context, EventHub.BUILD, kind='surface-set', surface=str(t), count=len(S.gens))
    return S

def surface_params(S:SequentialSetOfType) -> List[float]:
    """Parameter vector reproducing S under construct_surface_set."""
    t = S.type
    maps = list(S.cs[:-1]) + S.gens[len(S.cs):]
    out:List[float] = []
    for kind, M in zip(_slots(t), maps):
        cls = classify(M)
        if cls.alpha.is_infinite or (cls.beta is not None and cls.beta.is_infinite):
            raise InfiniteFixedPoint(f'{M} fixes infinity')
        if kind == HYPERBOLIC:
            out += [cls.alpha.value, cls.beta.value, cls.shift]
        else:
            out += [cls.alpha.value, cls.shift]
    return out[:-1] if t.m >= 1 else out


# -----------------------------------------------------------------------------
# Reference sets

def reflection_ring(gaps:Sequence[bool]) -> List[Geodesic]:
    """Equal-width geodesics around the boundary circle; gaps[j] tells whether
    the j-th geodesic is separated from its successor (else they touch)."""
    r = len(gaps)
    k = sum(1 for x in gaps if x)
    w = 2 * math.pi / (r + k / 2)
    sizes = [w / 2 if x else 0.0 for x in gaps]
    theta = sizes[-1] / 3 if gaps[-1] else w / 3
    ls = []
    for j in range(r):
        ls.append(Geodesic(BoundaryPoint.from_angle(theta + w), BoundaryPoint.from_angle(theta)))
        theta += w + sizes[j]
    return ls

def handle_partner(A:MoebiusMap, E:MoebiusMap) -> MoebiusMap:
    """Hyperbolic B with B A^-1 B^-1 = E, for A and E of equal shift parameter."""
    FA = axis_of(inverse(A)).frame()
    FE = axis_of(E).frame()
    for j in range(200):
        t = 0.5 * ((j + 1) // 2) * (1 if j % 2 else -1)
        s = math.exp(t / 2)
        B = compose(FE, MoebiusMap.make(s, 0, 0, 1 / s), inverse(FA))
        if B.trace >= 2.5:
            return B
    raise ClassMismatch(f'no hyperbolic handle partner for {A}')

def _away_from_infinity(S:SequentialSetOfType) -> SequentialSetOfType:
    # conjugate so that infinity lies in the widest gap between fixed points
    pts = [p for M in S.gens + S.derived() for p in fixed_points(M)]
    if not any(p.is_infinite or abs(p.value) > FAR for p in pts):
        return S
    keys = sorted(p.key() for p in pts)
    gaps = [(b - a, (a + b) / 2) for a, b in zip(keys, keys[1:])]
    gaps.append((keys[0] + math.pi - keys[-1], ((keys[-1] + keys[0] + math.pi) / 2) % math.pi))
    return S.conjugate(_cut(max(gaps)[1]))

def standard_surface_set(t:SurfaceType, *, context:Context={}) -> SequentialSetOfType:
    t.check()
    gaps = [k != PARABOLIC for k in t.kinds()]
    R = [reflection_in(l) for l in reflection_ring(gaps)]
    r = len(R)
    D = [compose(R[j], R[(j + 1) % r]) for j in range(r)]
    k = t.n + t.m
    as_ = tuple(D[k + 2 * i] for i in range(t.g))
    bs = tuple(handle_partner(D[k + 2 * i], D[k + 2 * i + 1]) for i in range(t.g))
    S = _away_from_infinity(SequentialSetOfType(t, tuple(D[:k]), as_, bs))
    _validate(S)
    EventHub.emit(context, EventHub.BUILD, kind='standard surface-set', surface=str(t), count=len(S.gens))
    return S
