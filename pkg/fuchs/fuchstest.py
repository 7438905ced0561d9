# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Optional

import math
import numpy as np

from ward import expect, fixture

from eventhub import CollectingEventHub, Context
from halfplane import Geodesic
from moebius import BoundaryPoint, HPoint, MoebiusMap, canonical_hyperbolic, proj_distance

def _explain(s:str, explain:Optional[str]) -> str:
    return s if explain is None else f'{s} ({explain})'

@fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0x5eed)

@fixture
def ctx() -> Context:
    return { 'evhub': CollectingEventHub() }


def random_map(rng:np.random.Generator, *, o:int=1, scale:float=3.0) -> MoebiusMap:
    while True:
        a, b, c, d = rng.uniform(-scale, scale, 4)
        det = a * d - b * c
        if abs(det) > 0.1 and (det > 0) == (o > 0):
            return MoebiusMap.make(a, b, c, d)

def random_hyperbolic(rng:np.random.Generator) -> MoebiusMap:
    a, b = sorted(rng.uniform(-5, 5, 2))
    lam = math.exp(rng.uniform(0.2, 3))
    if rng.random() < 0.5:
        a, b = b, a
    return canonical_hyperbolic(a, b, lam)

def random_geodesic(rng:np.random.Generator) -> Geodesic:
    if rng.random() < 0.1:
        return Geodesic.of(math.inf, rng.uniform(-5, 5))
    p, q = rng.uniform(-5, 5, 2)
    return Geodesic.of(p, q)

def random_point(rng:np.random.Generator) -> HPoint:
    return HPoint(rng.uniform(-3, 3), rng.uniform(0.2, 3))

def assert_close(M1:MoebiusMap, M2:MoebiusMap, eps:float=1e-9, explain:Optional[str]=None) -> None:
    d = proj_distance(M1, M2)
    assert d <= eps, _explain(f'{M1} differs from {M2} by {d}', explain)

def assert_point(p:BoundaryPoint, x:float, eps:float=1e-9, explain:Optional[str]=None) -> None:
    assert p.same(BoundaryPoint.of(x), eps), _explain(f'{p} is not {x}', explain)

def assert_float(x:float, y:float, eps:float=1e-9, explain:Optional[str]=None) -> None:
    expect.assert_equal(True, abs(x - y) <= eps, _explain(f'{x} != {y}', explain))
