# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

import json

from ward import raises, test

from fuchstest import random_map, rng
from realcurves import build_genus_zero, build_real_curve
from system import (GeneratorSystem, OvalType, RealCurveType, RoleNotFound, VerifyEntry,
        verify_real_structure)

@test('Oval types compare up to rotation')
def _():
    assert OvalType('hhp') == OvalType('phh') == OvalType('hph')
    assert OvalType('hhp') != OvalType('hpp')
    assert OvalType('hph').canonical() == ('h', 'h', 'p')
    assert len({ OvalType('hhp'), OvalType('hph'), OvalType('pph') }) == 2
    assert (OvalType('hpp').n_R, OvalType('hpp').m_R) == (1, 2)
    assert str(OvalType('phh')) == 'phh'
    assert OvalType() == OvalType('') and len(OvalType()) == 0
    with raises(ValueError):
        OvalType('hx')

@test('Real curve types')
def _():
    t = RealCurveType(2, 3, 1, ovals=('hhp', '', 'h'))
    assert (t.n_R, t.m_R, t.h) == (3, 1, 0)
    assert str(t) == '(2,3,1|0,0,[hhp],[],[h],3,1)'
    assert RealCurveType.from_json(json.loads(json.dumps(t.to_json()))) == t
    assert RealCurveType(3, 2, 1).ovals == (OvalType(), OvalType())
    assert RealCurveType(3, 2, 1).h == 1
    assert RealCurveType(3, 2, 0).h == 0
    assert str(RealCurveType(2, 1, 0, n_I=1, m_I=2)) == '(2,1,0|2,4,[],0,0)'
    assert RealCurveType.from_json({ 'g': 2, 'k': 1, 'epsilon': 1 }) == RealCurveType(2, 1, 1)
    with raises(ValueError):
        RealCurveType.from_json({ 'g': 2, 'k': 1 })
    with raises(ValueError):
        RealCurveType.from_json({ 'g': 2, 'k': 1, 'eps': 1, 'ovals': 'hh' })
    with raises(ValueError):
        RealCurveType(2, 1, 2)

@test('Generator systems survive a JSON round trip')
def _():
    for S in (build_genus_zero('hph'), build_real_curve(RealCurveType(2, 0, 0, m_I=1))):
        T = GeneratorSystem.from_json(json.loads(json.dumps(S.to_json())))
        assert T == S
        assert verify_real_structure(T).ok

@test('Generator system lookups and schema errors')
def _():
    S = build_real_curve(RealCurveType(2, 1, 0, n_I=1))
    assert S.index('~C3') == len(S.gens) - 1
    assert S.get('C0').role == 'C0'
    with raises(RoleNotFound):
        S.index('Z1')
    v = S.to_json()
    with raises(ValueError):
        GeneratorSystem.from_json({ **v, 'schema': 2 })
    with raises(ValueError):
        GeneratorSystem.from_json({ **v, 'reference': 'Z1' })
    with raises(ValueError):
        GeneratorSystem.from_json({ k: x for k, x in v.items() if k != 'gens' })
    with raises(ValueError):
        GeneratorSystem.from_json([])

@test('Conjugated systems still verify')
def _(rng=rng):
    S = build_real_curve(RealCurveType(2, 1, 1))
    for _ in range(5):
        T = S.conjugate(random_map(rng))
        assert verify_real_structure(T, context={ 'verify.eps': 1e-8 }).ok
        assert len(T.geodesics) == len(S.geodesics)

@test('Verification reports')
def _():
    report = verify_real_structure(build_genus_zero('hhh'))
    v = report.to_json()
    assert v['ok'] and v['sigma_reverses'] and v['sigma_square']
    assert [e['role'] for e in v['entries']] == ['C1', 'C2', 'C3']
    assert all(e['status'] == VerifyEntry.CLOSED_FORM for e in v['entries'])
    assert v['class_mismatches'] == []
    assert len(v['relation_defects']) == 1
    json.dumps(v)
