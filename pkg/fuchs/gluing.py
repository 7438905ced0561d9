# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, Dict, List, Optional, Tuple

import math

from dataclasses import dataclass, replace

from eventhub import Context, EventHub
from halfplane import Geodesic, axis_of, common_perpendicular, transport
from moebius import (HPoint, IsometryClass, MoebiusMap, NotHyperbolic, classify, compose,
        conjugate, inverse)
from system import Generator, GeneratorSystem, RealCurveType
from words import GroupWord

class NoReference(ValueError):
    pass

class LengthMismatch(ValueError):
    pass

class NotNonRealPair(ValueError):
    pass

class NotInvolution(ValueError):
    pass

EPS_LEN = 1e-9

def boundary_length(M:MoebiusMap) -> float:
    cls = classify(M)
    if cls.tag != IsometryClass.HYPERBOLIC:
        raise NotHyperbolic(f'{M} is {cls.tag}')
    return math.log(cls.shift)


@dataclass(frozen=True)
class BoundaryMark:
    role:str
    map:MoebiusMap
    axis:Geodesic
    rho:float
    basepoint:HPoint

    def to_json(self) -> Dict[str,Any]:
        return { 'role': self.role, 'axis': self.axis.to_json(), 'rho': self.rho,
                'basepoint': self.basepoint.to_json() }

def mark_boundary(sys:GeneratorSystem, role:str) -> BoundaryMark:
    """Marked boundary geodesic with its basepoint at the foot of the shortest
    segment to the reference geodesic of the system."""
    if sys.reference is None:
        raise NoReference(f'{sys.provenance} has no reference geodesic')
    M = sys.get(role).map
    rho = boundary_length(M)
    axis = axis_of(M)
    _, foot, _, _ = common_perpendicular(axis, axis_of(sys.get(sys.reference).map))
    return BoundaryMark(role, M, axis, rho, foot)

def twist_isometry(src:BoundaryMark, dst:BoundaryMark, theta:float) -> MoebiusMap:
    """Isometry carrying src.axis onto dst.axis with reversed direction, placing
    the image of src.basepoint at signed distance theta from dst.basepoint."""
    if abs(src.rho - dst.rho) > EPS_LEN:
        raise LengthMismatch(f'boundary lengths {src.rho} and {dst.rho} differ')
    J = MoebiusMap.make(0, -1, 1, 0)
    s = math.exp(theta / 2)
    D = MoebiusMap.make(s, 0, 0, 1 / s)
    return compose(dst.axis.frame(dst.basepoint), D, J, inverse(src.axis.frame(src.basepoint)))


# -----------------------------------------------------------------------------
# Gluing

def _pair(sys:GeneratorSystem, role:str) -> Tuple[int,int,int]:
    """Indices of a non-real hole and its mirror, with the exponent e such
    that sigma X sigma^-1 = mirror^e."""
    i = sys.index(role)
    X = sys.gens[i]
    if X.boundary != 'hole' or X.real or X.mirror is None:
        raise NotNonRealPair(f'{role} is not a non-real hole of {sys.provenance}')
    j = sys.index(X.mirror)
    w = sys.closed_forms.get(role)
    if w is None or len(w.letters) != 1 or w.letters[0][0] != j or abs(w.letters[0][1]) != 1:
        raise NotNonRealPair(f'sigma does not map {role} onto {X.mirror}')
    return i, j, w.letters[0][1]

def _piece_hole(sys:GeneratorSystem) -> str:
    for X in sys.gens:
        if X.boundary == 'hole' and not X.real and X.mirror is not None:
            return X.role
    raise NotNonRealPair(f'{sys.provenance} has no non-real hole')

def _prefix(host:GeneratorSystem) -> int:
    n = 1
    while any(r.startswith(f'Q{n}.') or r == f'T{n}' for r in host.roles):
        n += 1
    return n

def glue(host:GeneratorSystem, hole:str, piece:GeneratorSystem, theta:float, *,
        context:Context={}) -> GeneratorSystem:
    """Attach piece along the host hole and, symmetrically, its mirror."""
    ic, ict, e = _pair(host, hole)
    iu, _, _ = _pair(piece, _piece_hole(piece))
    if piece.sigma_square is not None:
        raise NotInvolution(f'sigma of {piece.provenance} is not an involution')

    phi = twist_isometry(mark_boundary(piece, piece.gens[iu].role), mark_boundary(host, hole), theta)
    sigma_q = piece.sigma
    # handle element: t phi = sigma_P phi sigma_Q^-1
    t = compose(host.sigma, phi, inverse(sigma_q), inverse(phi))

    n = _prefix(host)
    kept = [i for i in range(len(host.gens)) if i not in (ic, ict)]
    hidx = { i: k for k, i in enumerate(kept) }
    base = len(kept)
    pidx = [base + i for i in range(len(piece.gens))]
    it = base + len(piece.gens)
    T = GroupWord.gen(it)
    pname = { X.role: f'Q{n}.{X.role}' for X in piece.gens }

    def lift(w:GroupWord) -> GroupWord:
        return w.reindex([GroupWord.gen(i) for i in pidx])

    # C = U_phi^-1 and sigma_P C sigma_P^-1 = t (sigma_Q U^-1 sigma_Q^-1)_phi t^-1
    uw = GroupWord.gen(pidx[iu], -1)
    utw = T.conjugate(lift(piece.closed_forms[piece.gens[iu].role]).inverse())
    table = []
    for i in range(len(host.gens)):
        if i == ic:
            table.append(uw)
        elif i == ict:
            table.append(utw if e > 0 else utw.inverse())
        else:
            table.append(GroupWord.gen(hidx[i]))

    gens:List[Generator] = [host.gens[i] for i in kept]
    for k, X in enumerate(piece.gens):
        if k == iu or X.role == piece.gens[iu].mirror:
            X = replace(X, boundary='', real=False, mirror=None)
        elif X.mirror is not None:
            X = replace(X, mirror=pname[X.mirror])
        gens.append(replace(X, role=pname[X.role], map=conjugate(phi, X.map)))
    gens.append(Generator(f'T{n}', t, IsometryClass.HYPERBOLIC))

    closed:Dict[str,GroupWord] = {}
    for i in kept:
        role = host.gens[i].role
        if role in host.closed_forms:
            closed[role] = host.closed_forms[role].reindex(table)
    for X in piece.gens:
        closed[pname[X.role]] = T.conjugate(lift(piece.closed_forms[X.role]))
    sq = GroupWord() if host.sigma_square is None else GroupWord.gen(hidx[host.index(host.sigma_square)])
    closed[f'T{n}'] = sq * T.inverse()

    relators = tuple(w.reindex(table) for w in host.relators) + tuple(lift(w) for w in piece.relators)
    ht, pt = host.type, piece.type
    t_new = RealCurveType(ht.g + pt.g + 1, ht.k + pt.k, min(ht.eps, pt.eps),
            ht.n_I + pt.n_I - 2, ht.m_I + pt.m_I, ht.ovals + pt.ovals)
    sys = GeneratorSystem(tuple(gens), host.sigma, t_new,
            f'glued {host.provenance} | {piece.provenance} @ {hole} twist {theta:.12g}',
            relators=relators, closed_forms=closed, reference=host.reference,
            sigma_square=host.sigma_square,
            geodesics=host.geodesics + tuple(transport(phi, l) for l in piece.geodesics))
    EventHub.emit(context, EventHub.BUILD, kind='glued', surface=str(t_new), count=len(gens))
    return sys


@dataclass(frozen=True)
class GlueRecipe:
    host:GeneratorSystem
    hole:str
    piece:GeneratorSystem
    twist:float

    @staticmethod
    def from_json(v:Any) -> 'GlueRecipe':
        if not isinstance(v, dict) or not isinstance(v.get('hole'), str):
            raise ValueError(f'invalid glue recipe: {v!r}')
        twist = v.get('twist', 0.0)
        if not isinstance(twist, (int, float)):
            raise ValueError(f'invalid twist: {twist!r}')
        return GlueRecipe(GeneratorSystem.from_json(v.get('host')), v['hole'],
                GeneratorSystem.from_json(v.get('piece')), float(twist))

    def apply(self, *, context:Context={}) -> GeneratorSystem:
        return glue(self.host, self.hole, self.piece, self.twist, context=context)
