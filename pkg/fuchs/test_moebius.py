# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

import json
import math
import numpy as np

from ward import raises, test

from fuchstest import assert_close, assert_float, assert_point, random_map, rng
from moebius import (BoundaryPoint, HPoint, IDENTITY, INFINITY, IsometryClass, MoebiusMap,
        DegenerateAxis, NotHyperbolic, UnitShift, ZeroDeterminant, ZeroShift,
        apply, canonical_elliptic, canonical_hyperbolic, canonical_parabolic, classify,
        compose, conjugate, inverse, power, proj_distance, sqrt_hyperbolic)

R02 = MoebiusMap.make(1, 0, 1, -1)
R24 = MoebiusMap.make(3, -8, 1, -3)
Z4 = MoebiusMap.make(4, 0, 0, 1)
T3 = MoebiusMap.make(1, 3, 0, 1)


@test('Normalization collapses scalar matrices')
def _():
    assert MoebiusMap.make(1, 0, 0, 1) == IDENTITY
    assert_close(MoebiusMap.make(2, 0, 0, 2), IDENTITY, 1e-15)
    assert_close(MoebiusMap.make(-3, 0, 0, -3), IDENTITY, 1e-15)

@test('Orientation-reversing maps carry determinant -1')
def _():
    assert R02.o == -1
    assert R02.entries == [1.0, 0.0, 1.0, -1.0]
    w = apply(R02, HPoint(0, 1))
    assert isinstance(w, HPoint)
    assert abs(w.z - complex(0.5, 0.5)) < 1e-15

@test('Zero determinant is rejected')
def _():
    with raises(ZeroDeterminant):
        MoebiusMap.make(1, 2, 2, 4)
    with raises(ZeroDeterminant):
        MoebiusMap.make(0, 0, 0, 0)

@test('Projective soundness')
def _(rng=rng):
    for _ in range(100):
        a, b, c, d = rng.uniform(-3, 3, 4)
        if abs(a * d - b * c) < 0.1:
            continue
        k = rng.choice([-1, 1]) * math.exp(rng.uniform(-4, 4))
        M = MoebiusMap.make(a, b, c, d)
        assert proj_distance(M, MoebiusMap.make(k * a, k * b, k * c, k * d)) < 1e-12

@test('Composition of reflections in tangent geodesics')
def _():
    P = compose(R24, R02)
    assert P.o == 1
    assert_close(P, MoebiusMap.make(5, -8, 2, -3), 1e-12)
    Q = compose(R02, R24)
    assert_close(Q, MoebiusMap.make(3, -8, 2, -5), 1e-12)
    assert_close(compose(P, Q), IDENTITY, 1e-12)
    assert_close(compose(R02, R02), IDENTITY, 1e-12)

@test('Composition of dilations')
def _():
    Z2 = MoebiusMap.make(2, 0, 0, 1)
    assert_close(compose(Z2, Z2), Z4, 1e-15)
    assert_close(power(Z2, 2), Z4, 1e-15)
    assert_close(power(Z4, -1), MoebiusMap.make(1, 0, 0, 4), 1e-15)
    assert power(Z4, 0) == IDENTITY

@test('Group laws on random maps')
def _(rng=rng):
    for _ in range(100):
        M1, M2, M3 = (random_map(rng, o=rng.choice([-1, 1])) for _ in range(3))
        assert_close(compose(compose(M1, M2), M3), compose(M1, compose(M2, M3)), 1e-10)
        assert_close(compose(M1, inverse(M1)), IDENTITY, 1e-12)
        assert_close(compose(inverse(M1), M1), IDENTITY, 1e-12)
        assert_close(compose(IDENTITY, M1), M1, 1e-15)
        assert compose(M1, M2).o == M1.o * M2.o

@test('Inverse of simple maps')
def _():
    assert inverse(IDENTITY) == IDENTITY
    assert_close(inverse(Z4), MoebiusMap.make(1, 0, 0, 4), 1e-15)
    assert_close(inverse(R02), R02, 1e-15)

@test('Apply to boundary and interior points')
def _():
    assert apply(T3, INFINITY) == INFINITY
    w = apply(Z4, HPoint(0, 1))
    assert abs(w.z - 4j) < 1e-15
    R = MoebiusMap.make(-1, 0, 0, 1)
    w = apply(R, HPoint(1, 1))
    assert abs(w.z - complex(-1, 1)) < 1e-15
    assert_point(apply(Z4, BoundaryPoint.of(0.5)), 2.0)
    assert_point(apply(R02, BoundaryPoint.of(2)), 2.0)

@test('Classify spells out fixed points and shift parameters')
def _():
    c = classify(T3)
    assert c.tag == IsometryClass.PARABOLIC
    assert c.alpha == INFINITY and c.positive
    assert_float(c.shift, 3.0)

    c = classify(Z4)
    assert c.tag == IsometryClass.HYPERBOLIC
    assert c.alpha.is_infinite
    assert_point(c.beta, 0.0)
    assert_float(c.shift, 4.0)

    c = classify(MoebiusMap.make(5, -8, 2, -3))
    assert c.tag == IsometryClass.PARABOLIC
    assert_point(c.alpha, 2.0)

    assert classify(MoebiusMap.make(11, -15, 3, -4)).tag == IsometryClass.HYPERBOLIC
    assert classify(IDENTITY).tag == IsometryClass.IDENTITY
    assert classify(R02).tag == IsometryClass.REVERSING

@test('Classification agrees with the eigenvalue oracle')
def _(rng=rng):
    for _ in range(1000):
        M = random_map(rng)
        ev = np.linalg.eigvals(M.matrix)
        disc = (M.a + M.d) ** 2 - 4
        if abs(disc) < 1e-6:
            continue
        tag = classify(M).tag
        if disc > 0:
            assert tag == IsometryClass.HYPERBOLIC and np.all(np.isreal(ev))
        else:
            assert tag == IsometryClass.ELLIPTIC and not np.all(np.isreal(ev))

@test('Conjugation keeps the class and moves fixed points')
def _(rng=rng):
    for _ in range(200):
        M, A = random_map(rng), random_map(rng)
        if abs(M.trace - 2) < 0.05:
            continue
        c1, c2 = classify(M), classify(conjugate(A, M))
        assert c1.tag == c2.tag
        if c1.tag == IsometryClass.HYPERBOLIC:
            assert abs(math.log(c1.shift) - math.log(c2.shift)) < 1e-7
            assert apply(A, c1.alpha).same(c2.alpha, 1e-7)
            assert apply(A, c1.beta).same(c2.beta, 1e-7)
        elif c1.tag == IsometryClass.ELLIPTIC:
            assert abs(math.remainder(c1.angle - c2.angle, 2 * math.pi)) < 1e-7

@test('Canonical hyperbolic forms')
def _():
    assert_close(canonical_hyperbolic(math.inf, 0, 4), Z4, 1e-15)
    M = canonical_hyperbolic(0, 1, 2)
    assert_close(M, MoebiusMap.make(-1, 0, 1, -2), 1e-15)
    assert_point(apply(M, BoundaryPoint.of(0)), 0.0)
    assert_point(apply(M, BoundaryPoint.of(1)), 1.0)
    c = classify(canonical_hyperbolic(-3, 5, 7))
    assert c.tag == IsometryClass.HYPERBOLIC and c.positive
    assert_point(c.alpha, -3)
    assert_point(c.beta, 5)
    assert_float(c.shift, 7)
    # shift parameters below one swap the roles of the fixed points
    c = classify(canonical_hyperbolic(-3, 5, 1 / 7))
    assert_point(c.alpha, 5)
    assert_float(c.shift, 7)
    with raises(DegenerateAxis):
        canonical_hyperbolic(2, 2, 3)
    with raises(UnitShift):
        canonical_hyperbolic(0, 1, 1)

@test('Canonical parabolic forms')
def _():
    assert_close(canonical_parabolic(math.inf, 3), T3, 1e-15)
    assert_close(canonical_parabolic(0, 1), MoebiusMap.make(1, 0, -1, 1), 1e-15)
    c = classify(canonical_parabolic(2, -5))
    assert c.tag == IsometryClass.PARABOLIC and not c.positive
    assert_point(c.alpha, 2)
    assert_float(c.shift, -5)
    with raises(ZeroShift):
        canonical_parabolic(1, 0)

@test('Canonical elliptic forms')
def _(rng=rng):
    i = HPoint(0, 1)
    assert_close(canonical_elliptic(i, 0), IDENTITY, 1e-15)
    assert_close(canonical_elliptic(i, math.pi), MoebiusMap.make(0, -1, 1, 0), 1e-15)
    for _ in range(100):
        x = HPoint(rng.uniform(-3, 3), rng.uniform(0.1, 3))
        phi = rng.uniform(-3, 3)
        M = canonical_elliptic(x, phi)
        assert abs(apply(M, x).z - x.z) < 1e-9
        c = classify(M)
        assert c.tag == IsometryClass.ELLIPTIC
        assert abs(c.center.z - x.z) < 1e-9
        assert abs(c.angle - phi) < 1e-9

@test('Canonical round trips')
def _(rng=rng):
    for _ in range(200):
        a, b = rng.uniform(-10, 10, 2)
        lam = math.exp(rng.uniform(0.05, 4))
        c = classify(canonical_hyperbolic(a, b, lam))
        assert_point(c.alpha, a)
        assert_point(c.beta, b)
        assert abs(c.shift / lam - 1) < 1e-9
        mu = rng.uniform(-4, 4)
        c = classify(canonical_parabolic(a, mu))
        assert_point(c.alpha, a)
        assert abs(c.shift - mu) < 1e-9

@test('Square roots of hyperbolic maps')
def _(rng=rng):
    assert_close(sqrt_hyperbolic(Z4), MoebiusMap.make(2, 0, 0, 1), 1e-15)
    assert_close(sqrt_hyperbolic(canonical_hyperbolic(0, 1, 9)), canonical_hyperbolic(0, 1, 3), 1e-12)
    n = 0
    while n < 100:
        M = random_map(rng)
        if M.trace < 2.1:
            continue
        s = sqrt_hyperbolic(M)
        assert_close(compose(s, s), M, 1e-9)
        n += 1
    with raises(NotHyperbolic):
        sqrt_hyperbolic(T3)

@test('Boundary points order cyclically with infinity last')
def _():
    keys = [BoundaryPoint.of(x).key() for x in (-100, -1, 0, 1, 100, math.inf)]
    assert keys == sorted(keys)
    assert BoundaryPoint.from_angle(0) == INFINITY
    assert_point(BoundaryPoint.from_angle(math.pi), 0.0, 1e-15)
    assert BoundaryPoint.of(-math.inf) == INFINITY

@test('JSON encoding of maps and points')
def _():
    M = MoebiusMap.from_json(json.loads(json.dumps(R02.to_json())))
    assert M == R02
    assert MoebiusMap.from_json([[1, 3], [0, 1]]) == T3
    assert BoundaryPoint.from_json(INFINITY.to_json()) == INFINITY
    assert BoundaryPoint.from_json(None) == INFINITY
    with raises(ValueError):
        MoebiusMap.from_json({'m': [1, 0, 1, -1], 'o': 1})
    with raises(ValueError):
        MoebiusMap.from_json([1, 2, 3])
    with raises(ValueError):
        HPoint(0, -1)
    d = classify(T3).to_json()
    assert d['tag'] == 'parabolic' and d['alpha'] == [1.0, 0.0] and d['positive']
