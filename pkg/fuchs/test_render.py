# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, List

import hashlib
import json
import math
import re

from pathlib import Path
from xml.etree import ElementTree

from ward import raises, test

from halfplane import Geodesic
from moebius import IDENTITY, BoundaryPoint
from realcurves import build_genus_zero, build_real_curve
from render import Item, Scene, render_svg, scene_from_system
from seqsets import SurfaceType, standard_surface_set
from system import GeneratorSystem, RealCurveType

GOLDEN = Path(__file__).parent / 'golden'

NUM = re.compile(r'-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?')

ATTRS = {
    'svg':    ('width', 'height'),
    'rect':   ('width', 'height'),
    'line':   ('x1', 'y1', 'x2', 'y2'),
    'circle': ('cx', 'cy', 'r'),
    'text':   ('x', 'y'),
}

def summary(data:bytes) -> List[List[Any]]:
    """Tag and drawing coordinates of each element; paths keep their start and end points."""
    root = ElementTree.fromstring(data)
    out = []
    for el in [root, *root]:
        tag = el.tag.rsplit('}', 1)[-1]
        if tag == 'path':
            nums = [float(x) for x in NUM.findall(el.get('d', ''))]
            out.append([tag, nums[:2] + nums[-2:]])
        elif tag == 'polygon':
            out.append([tag, [float(x) for x in NUM.findall(el.get('points', ''))]])
        else:
            entry:List[Any] = [tag, [float(el.get(a)) for a in ATTRS[tag]]]
            if tag == 'text':
                entry.append(el.text)
            out.append(entry)
    return out

def check_golden(name:str, data:bytes) -> None:
    path = GOLDEN / name
    assert path.exists(), f'golden file {name} is missing'
    want = json.loads(path.read_text(encoding='utf-8'))
    got = summary(data)
    assert [e[0] for e in got] == [e[0] for e in want], f'{name}: element tags differ'
    for i, (g, w) in enumerate(zip(got, want)):
        assert g[2:] == w[2:], f'{name}: element {i} reads {g[2:]}, expected {w[2:]}'
        assert len(g[1]) == len(w[1]) and all(abs(a - b) <= 1e-3 for a, b in zip(g[1], w[1])), \
                f'{name}: element {i} ({g[0]}) at {g[1]}, expected {w[1]}'

def golden_scenes():
    yield 'triple.json', scene_from_system(build_genus_zero('hhh', [0, 2, 3, 5, 6, 8]))
    yield 'ray.json', Scene((
        Item(Item.AXIS, geodesic=Geodesic.of(math.inf, 1), label='C0', arrow=True),
        Item(Item.CUSP, point=BoundaryPoint.of(3), label='P'),
    )).fit()

def scenes():
    for _, scene in golden_scenes():
        yield scene
    yield scene_from_system(build_genus_zero('hphhp'))
    yield scene_from_system(build_real_curve(RealCurveType(2, 1, 0)))

@test('Scenes of genus-zero systems')
def _():
    S = build_genus_zero('hhh', [0, 2, 3, 5, 6, 8])
    scene = scene_from_system(S)
    styles = [it.style for it in scene.items]
    assert styles == [Item.GEODESIC] * 3 + [Item.AXIS] * 3 + [Item.MIRROR]
    assert [it.label for it in scene.items if it.style == Item.AXIS] == ['C1', 'C2', 'C3']
    xmin, xmax, ymax = scene.viewport
    assert xmin <= 0 and xmax >= 8
    assert all(it.radius <= ymax for it in scene.items)
    scene = scene_from_system(build_genus_zero('hph', [0, 2, 2, 4, 6, 8]))
    assert [it.style for it in scene.items].count(Item.CUSP) == 1

@test('Normalized real curves show C0 as a vertical ray')
def _():
    scene = scene_from_system(build_real_curve(RealCurveType(2, 1, 0)))
    c0 = next(it for it in scene.items if it.label == 'C0')
    assert c0.geodesic.is_ray
    assert c0.xs() == [0.0] or abs(c0.xs()[0]) <= 1e-9

@test('Scenes of sequential sets and empty systems')
def _():
    scene = scene_from_system(standard_surface_set(SurfaceType(0, 2, 1)))
    assert [it.style for it in scene.items] == [Item.AXIS, Item.AXIS, Item.CUSP]
    empty = scene_from_system(GeneratorSystem((), IDENTITY, RealCurveType(0, 0, 0), 'empty'))
    assert empty.items == ()
    ElementTree.fromstring(render_svg(empty))

@test('Rendering is deterministic and well-formed')
def _():
    for scene in scenes():
        a, b = render_svg(scene), render_svg(scene)
        assert hashlib.sha256(a).digest() == hashlib.sha256(b).digest()
        root = ElementTree.fromstring(a)
        assert root.tag.endswith('svg')
        for el in root.iter():
            if el.tag.endswith('path'):
                d = el.get('d')
                assert re.fullmatch(r'M [-\d.]+ [-\d.]+ [AL] [^<>]+', d), d
        for num in re.findall(rb'-?\d+\.(\d+)', a):
            assert len(num) <= 6

@test('Finite geodesics are drawn as arcs')
def _():
    root = ElementTree.fromstring(render_svg(scene_from_system(build_genus_zero('hhh', [0, 2, 3, 5, 6, 8]))))
    ds = [el.get('d') for el in root.iter() if el.tag.endswith('path')]
    assert len(ds) == 7 and all(' A ' in d for d in ds)

@test('Rendering width follows the context')
def _():
    scene = next(scenes())
    root = ElementTree.fromstring(render_svg(scene, context={ 'render.width': 400 }))
    assert root.get('width') == '400'

@test('Rendered scenes match the golden files')
def _():
    for name, scene in golden_scenes():
        check_golden(name, render_svg(scene))
    assert render_svg(Scene()) == render_svg(Scene().fit())

@test('Golden comparison rejects missing files and moved elements')
def _():
    _, scene = next(golden_scenes())
    data = render_svg(scene)
    with raises(Exception):
        check_golden('missing.json', data)
    with raises(Exception):
        check_golden('triple.json', render_svg(scene, context={ 'render.width': 400 }))
    with raises(Exception):
        check_golden('ray.json', data)
    assert not (GOLDEN / 'missing.json').exists()
