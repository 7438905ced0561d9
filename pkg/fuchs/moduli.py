# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, Dict, List

from dataclasses import asdict, dataclass

from system import NotAdmissible, RealCurveType

def hyperbolic(t:RealCurveType) -> bool:
    return 2 * t.g + 2 * t.n_I + t.n_R + 2 * t.m_I + t.m_R > 2

def admissible(t:RealCurveType) -> bool:
    if len(t.ovals) != t.k or not hyperbolic(t):
        return False
    if t.eps == 1:
        return 1 <= t.k <= t.g + 1 and (t.k - t.g - 1) % 2 == 0
    return 0 <= t.k <= t.g

def surface_dim(g:int, n:int, m:int) -> int:
    return 6 * g + 3 * n + 2 * m - 6

def genus_zero_dim(n:int, m:int) -> int:
    return 2 * n + m - 3

def teich_dim(t:RealCurveType) -> int:
    return 3 * t.g - 3 + 3 * t.n_I + 2 * t.m_I + 2 * t.n_R + t.m_R


@dataclass(frozen=True)
class Dimensions:
    teich_dim:int
    closed_dim:int
    oval_factor:int
    genus_zero_oval_dim:int
    piece_dims:List[int]
    h:int
    surface_type:List[int]
    surface_dim:int
    consistent:bool

    def to_json(self) -> Dict[str,Any]:
        return asdict(self)

def dimensions(t:RealCurveType) -> Dimensions:
    if not admissible(t):
        raise NotAdmissible(f'real curve type {t} is not admissible')
    h = t.h
    st = [h, t.g - 2 * h + 1 + t.n_I, t.m_I]
    pieces = [2 * o.n_R + o.m_R for o in t.ovals if len(o)]
    closed = 3 * t.g - 3 + 3 * t.n_I + 2 * t.m_I
    factor = 2 * t.n_R + t.m_R
    return Dimensions(
            teich_dim=teich_dim(t),
            closed_dim=closed,
            oval_factor=factor,
            genus_zero_oval_dim=genus_zero_dim(t.n_R, t.m_R),
            piece_dims=pieces,
            h=h,
            surface_type=st,
            surface_dim=surface_dim(*st),
            consistent=teich_dim(t) == closed + factor and surface_dim(*st) == closed)
