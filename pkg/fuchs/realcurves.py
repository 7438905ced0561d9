# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Dict, List, Optional, Sequence, Tuple, Union

import math

from dataclasses import dataclass

from eventhub import Context, EventHub
from halfplane import Geodesic, axis_of, common_perpendicular, reflection_in, transport
from moebius import (BoundaryPoint, IsometryClass, MoebiusMap, classify, compose, conjugate, inverse,
        sqrt_hyperbolic)
from moduli import admissible
from seqsets import SurfaceType, construct_surface_set, standard_surface_set
from system import (Generator, GeneratorSystem, NotAdmissible, OvalType, RealCurveType)
from words import GroupWord

class BadPlacement(ValueError):
    pass

class TooFewBoundary(ValueError):
    pass

class NoSolution(ValueError):
    pass

class ClassViolation(ValueError):
    pass

HYPERBOLIC = IsometryClass.HYPERBOLIC
PARABOLIC  = IsometryClass.PARABOLIC

Placement = Sequence[Union[float,None]]


# -----------------------------------------------------------------------------
# Genus zero

def _ring_system(ls:Sequence[Geodesic], pattern:Sequence[str], provenance:str) -> GeneratorSystem:
    """Products C_j = R_j R_j+1 of reflections in a cyclic chain of geodesics,
    with sigma = R_1."""
    R = [reflection_in(l) for l in ls]
    r = len(R)
    cs = [compose(R[j], R[(j + 1) % r]) for j in range(r)]
    gens = tuple(Generator(f'C{j + 1}', C, HYPERBOLIC if x == OvalType.HOLE else PARABOLIC,
        'hole' if x == OvalType.HOLE else 'puncture', True) for j, (C, x) in enumerate(zip(cs, pattern)))
    # R1 C_j R1 = W_j C_j^-1 W_j^-1 with W_j = C_1 ... C_j-1
    closed = {}
    for j in range(r):
        W = GroupWord.of(*((i, 1) for i in range(j)))
        closed[f'C{j + 1}'] = W.conjugate(GroupWord.gen(j, -1))
    return GeneratorSystem(gens, R[0], RealCurveType(0, 1, 1, ovals=(OvalType(pattern),)), provenance,
            relators=(GroupWord.of(*((j, 1) for j in range(r))),),
            closed_forms=closed, geodesics=tuple(ls))

def _endpoints(s:OvalType, placement:Placement) -> List[float]:
    r = len(s)
    if len(placement) != 2 * r:
        raise BadPlacement(f'oval type {s} needs {2 * r} endpoints, got {len(placement)}')
    xs = []
    for i, x in enumerate(placement):
        if x is None:
            x = -math.inf if i == 0 else math.inf
        x = float(x)
        if math.isnan(x) or (math.isinf(x) and not ((i == 0 and x < 0) or (i == 2 * r - 1 and x > 0))):
            raise BadPlacement(f'endpoint {i} is {x}; only the first and last may be infinite')
        xs.append(x)
    return xs

def build_genus_zero(s:Union[OvalType,str], placement:Optional[Placement]=None, *,
        context:Context={}) -> GeneratorSystem:
    """Genus-zero real curve with a single oval of type s, from reflections in
    the geodesics (x_0,x_1), (x_2,x_3), ... of the placement."""
    s = s if isinstance(s, OvalType) else OvalType(s)
    r = len(s)
    if r < 3:
        raise TooFewBoundary(f'oval type {s} has {r} entries, at least 3 are needed')
    xs = _endpoints(s, genus_zero_placement(s) if placement is None else placement)

    pattern = []
    for j in range(r):
        a, b = xs[2 * j], xs[2 * j + 1]
        if not a < b:
            raise BadPlacement(f'geodesic {j + 1} has endpoints {a} >= {b}')
        if j == r - 1:
            touch = math.isinf(xs[0]) and math.isinf(xs[-1])
        else:
            gap = xs[2 * j + 2] - b
            if gap < -Geodesic.EPS_B:
                raise BadPlacement(f'geodesics {j + 1} and {j + 2} overlap')
            touch = gap <= Geodesic.EPS_B
            if touch:
                xs[2 * j + 2] = b
        pattern.append(OvalType.PUNCTURE if touch else OvalType.HOLE)
    if OvalType(pattern) != s:
        raise BadPlacement(f'placement realizes {"".join(pattern)}, not {s}')

    ls = [Geodesic.of(xs[2 * j + 1], xs[2 * j]) for j in range(r)]
    sys = _ring_system(ls, pattern, f'genus-zero {s}')
    EventHub.emit(context, EventHub.BUILD, kind='genus-zero', surface=str(sys.type), count=r)
    return sys

def genus_zero_placement(s:Union[OvalType,str]) -> List[Optional[float]]:
    """Equal-width geodesics around the boundary circle, touching after a
    puncture and half a width apart after a hole. Infinity is the closing
    puncture or lies in the middle of the closing gap."""
    s = s if isinstance(s, OvalType) else OvalType(s)
    if not s.seq:
        return []
    w = 2 * math.pi / (len(s) + s.n_R / 2)
    closing = s.seq[-1] == OvalType.PUNCTURE
    theta = 0.0 if closing else w / 4
    angles = []
    for e in s.seq:
        angles += [theta, theta + w]
        theta += w + (w / 2 if e == OvalType.HOLE else 0.0)
    xs:List[Optional[float]] = [BoundaryPoint.from_angle(a).value if 0 < a < 2 * math.pi else None
            for a in angles]
    if closing:
        xs[0] = xs[-1] = None
    return xs


# -----------------------------------------------------------------------------
# Right-angled hexagons

def hexagon_side(a:float, b:float, c:float) -> float:
    """Length of the side opposite to a in a right-angled hexagon with
    alternate sides a, b, c."""
    return math.acosh((math.cosh(b) * math.cosh(c) + math.cosh(a)) / (math.sinh(b) * math.sinh(c)))

@dataclass(frozen=True)
class Hexagon:
    ls:Tuple[Geodesic,...]
    axes:Tuple[Geodesic,...]
    system:GeneratorSystem

def build_hexagon(lam1:float, lam2:float, lam3:float, *, context:Context={}) -> Hexagon:
    """Geodesics l1 < l2 < l3 whose reflection products R1R2, R2R3, R3R1 have
    shift parameters lam1, lam2, lam3."""
    lams = (lam1, lam2, lam3)
    if not all(lam > 1 for lam in lams):
        raise NoSolution(f'shift parameters {lams} must exceed one')
    d1, d2, d3 = (math.log(lam) / 2 for lam in lams)

    # l1 = (-1,1) inside l2 = (-R,R), l3 between them on the left
    R = math.exp(d1)
    rho = (R * R - 1) / (2 * (math.cosh(d3) + R * math.cosh(d2)))
    c = -math.sqrt(1 + 2 * rho * math.cosh(d3) + rho * rho)
    if not (rho > 0 and -R < c - rho and c + rho < -1):
        raise NoSolution(f'no hexagon with shift parameters {lams}')
    ls = [Geodesic.of(1, -1), Geodesic.of(R, -R), Geodesic.of(c + rho, c - rho)]

    # cut the boundary between l3 and l1, then bring l1 back to (-1,1)
    u = (c + rho - 1) / 2
    M = MoebiusMap.make(0, -1, 1, -u)
    ls = [transport(M, l) for l in ls]
    a, b = sorted((ls[0].p.value, ls[0].q.value))
    N = MoebiusMap.make(2, -(a + b), 0, b - a)
    ls = [transport(N, l) for l in ls]
    ls = [Geodesic.of(*sorted((l.p.value, l.q.value), reverse=True)) for l in ls]

    sys = _ring_system(ls, 'hhh', f'hexagon {lam1:.12g} {lam2:.12g} {lam3:.12g}')
    axes = tuple(axis_of(M) for M in sys.maps)
    EventHub.emit(context, EventHub.BUILD, kind='hexagon', surface=str(sys.type), count=3)
    return Hexagon(tuple(ls), axes, sys)

def build_symmetric_three_holes(lam_pair:float, lam_real:float, *, context:Context={}) -> GeneratorSystem:
    """Three-holed sphere whose symmetry swaps the holes C1, C2 and keeps C3."""
    hx = build_hexagon(lam_pair, lam_pair, lam_real, context=context)
    mirror, _, _, _ = common_perpendicular(hx.ls[1], hx.axes[2])
    sigma = reflection_in(mirror)
    s = hx.system
    gens = (Generator('C1', s.maps[0], HYPERBOLIC, 'hole', False, 'C2'),
            Generator('C2', s.maps[1], HYPERBOLIC, 'hole', False, 'C1'),
            Generator('C3', s.maps[2], HYPERBOLIC, 'hole', True))
    closed = { 'C1': GroupWord.gen(1, -1), 'C2': GroupWord.gen(0, -1), 'C3': GroupWord.gen(2, -1) }
    sys = GeneratorSystem(gens, sigma, RealCurveType(0, 1, 1, n_I=1, ovals=(OvalType('h'),)),
            f'symmetric-pants {lam_pair:.12g} {lam_real:.12g}', relators=s.relators,
            closed_forms=closed, reference='C3', geodesics=hx.ls + (mirror,))
    EventHub.emit(context, EventHub.BUILD, kind='symmetric-pants', surface=str(sys.type), count=3)
    return sys


# -----------------------------------------------------------------------------
# Real curves without real boundary

def _normalizer(C0:MoebiusMap) -> MoebiusMap:
    # alpha -> infinity, beta -> 0, so C0 becomes z -> lam z
    cls = classify(C0)
    (ax, ay), (bx, by) = cls.alpha.to_json(), cls.beta.to_json()
    N = [by, -bx, ay, -ax]
    if N[0] * N[3] - N[1] * N[2] < 0:
        N[0], N[1] = -N[0], -N[1]
    return MoebiusMap.make(*N)

def build_real_curve(t:RealCurveType, params:Optional[Sequence[float]]=None, *,
        context:Context={}) -> GeneratorSystem:
    """Generator system of a real curve of type t without real holes or punctures,
    from a sequential set V of type (h, g-2h+1+n_I, m_I) and the elements D_j."""
    if not admissible(t):
        raise NotAdmissible(f'real curve type {t} is not admissible')
    if t.n_R or t.m_R:
        raise NotAdmissible(f'real curve type {t} has real holes or punctures')
    h = t.h
    nd = t.g - 2 * h
    vt = SurfaceType(h, nd + 1 + t.n_I, t.m_I)
    V = standard_surface_set(vt, context=context) if params is None else construct_surface_set(vt, params, context=context)

    # C0 on the imaginary axis, translating upwards, the rest of V to the right
    A = _normalizer(V.cs[0])
    V_maps = [conjugate(A, M) for M in V.gens]
    R0 = MoebiusMap.make(-1, 0, 0, 1)
    C0 = V_maps[0]
    rootC0 = sqrt_hyperbolic(C0)
    sigma = R0 if t.k > 0 else compose(rootC0, R0)

    vroles = vt.roles()
    roles = ['C0'] + [f'C{j}' for j in range(1, vt.n + vt.m)] + vroles[vt.n + vt.m:]
    kinds = vt.kinds()
    nv = len(V_maps)

    gens:List[Generator] = []
    for j, (role, kind, M) in enumerate(zip(roles, kinds, V_maps)):
        if j <= nd:
            gens.append(Generator(role, M, kind))
        elif j < vt.n + vt.m:
            boundary = 'hole' if kind == HYPERBOLIC else 'puncture'
            gens.append(Generator(role, M, kind, boundary, False, f'~{role}'))
        else:
            gens.append(Generator(role, M, kind))

    closed:Dict[str,GroupWord] = { 'C0': GroupWord.gen(0) }
    mirrors:List[Geodesic] = [Geodesic.of(None, 0)]
    for j in range(1, nd + 1):
        Cj = V_maps[j]
        axis = axis_of(Cj)
        Rj = reflection_in(axis)
        mirrors.append(axis)
        iD = nv + j - 1
        if t.eps == 1 or j < t.k:
            D = compose(R0, Rj)
            dw = GroupWord.gen(iD, -1)
        elif t.k > 0:
            D = compose(R0, Rj, sqrt_hyperbolic(Cj))
            dw = GroupWord.of((j, 1), (iD, -1))
        else:
            D = compose(rootC0, R0, Rj, sqrt_hyperbolic(Cj))
            dw = GroupWord.of((0, 1), (j, 1), (iD, -1))
        if (tag := classify(D).tag) != HYPERBOLIC:
            raise ClassViolation(f'D{j} is {tag}, expected {HYPERBOLIC}')
        gens.append(Generator(f'D{j}', D, HYPERBOLIC))
        closed[f'C{j}'] = GroupWord.of((iD, 1), (j, 1), (iD, -1))
        closed[f'D{j}'] = dw

    # mirrored copies of the generators not tied to a D_j
    for j in range(nd + 1, nv):
        X = gens[j]
        i = len(gens)
        mirror = None if X.mirror is None else X.role
        gens.append(Generator(f'~{X.role}', compose(sigma, X.map, inverse(sigma)), X.kind,
            X.boundary, False, mirror))
        closed[X.role] = GroupWord.gen(i)
        closed[f'~{X.role}'] = GroupWord.gen(j) if t.k > 0 else GroupWord.of((0, 1), (j, 1), (0, -1))

    relator = V.relator()
    table = [closed[g.role] for g in gens[:nv]]
    sys = GeneratorSystem(tuple(gens), sigma, t, f'real-curve {t}',
            relators=(relator, relator.reindex(table)), closed_forms=closed,
            reference='C0', sigma_square=None if t.k > 0 else 'C0', geodesics=tuple(mirrors))
    EventHub.emit(context, EventHub.BUILD, kind='real-curve', surface=str(t), count=len(gens))
    return sys
