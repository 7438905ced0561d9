#!/usr/bin/env python3

# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, Dict, Optional, Union

import click
import functools
import json
import sys
import yaml

from eventhub import ColoramaStream, Context, LoggingEventHub
from gluing import GlueRecipe
from moduli import dimensions
from moebius import MoebiusMap, classify
from realcurves import build_genus_zero, build_hexagon, build_real_curve, build_symmetric_three_holes
from render import render_svg, scene_from_system
from seqsets import (NotShift, SequentialSetOfType, is_sequential_set_of_type, is_sequential_tuple,
        relation_defect)
from system import GeneratorSystem, RealCurveType, verify_real_structure

class InputError(click.ClickException):
    exit_code = 2

class JsonParamType(click.ParamType):
    name = "json"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            if value.lstrip()[:1] in ('{', '['):
                return json.loads(value)
            with click.open_file(value, 'r') as fh:
                return json.load(fh)
        except (OSError, ValueError) as e:
            self.fail(f"{value!r} is not a JSON document or file: {e}", param, ctx)

JSON = JsonParamType()

def domain_errors(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValueError as e:
            raise InputError(f'{type(e).__name__}: {e}')
    return wrapper

def _scalar(v:Any) -> Any:
    # YAML 1.1 reads 1e-8 as a string
    if isinstance(v, str):
        try:
            return float(v)
        except ValueError:
            pass
    return v

def load_config(fn:str) -> Context:
    with open(fn, 'r') as fh:
        d = yaml.safe_load(fh) or {}
    if not isinstance(d, dict):
        raise click.BadParameter(f'{fn}: expected a mapping of settings', param_hint='--config')
    return { str(k): _scalar(v) for k, v in d.items() }

def dump(obj:Any) -> None:
    click.echo(json.dumps(obj, indent=2))

def load_system(v:Any) -> Union[GeneratorSystem,SequentialSetOfType]:
    if isinstance(v, dict) and 'cs' in v:
        return SequentialSetOfType.from_json(v)
    return GeneratorSystem.from_json(v)


@click.group()
@click.option('-v', '--verbose', is_flag=True,
        help='Log construction, search and verification events')
@click.option('-c', '--config', type=click.Path(exists=True, dir_okay=False),
        help='YAML file with context settings')
@click.pass_context
def cli(ctx:click.Context, verbose:bool, config:Optional[str]) -> None:
    context:Context = load_config(config) if config else {}
    if verbose:
        context['evhub'] = LoggingEventHub(ColoramaStream(sys.stderr))
    ctx.ensure_object(dict)['context'] = context


@cli.command('classify', help='Classify an isometry given as a 2x2 matrix')
@click.argument('matrix', type=JSON)
@domain_errors
def classify_cmd(matrix:Any) -> None:
    dump(classify(MoebiusMap.from_json(matrix)).to_json())


@cli.group(help='Build generator systems')
def build() -> None:
    pass

@build.command(help='Genus-zero real curve from an oval type')
@click.option('--ovals', required=True,
        help='Cyclic pattern of real holes (h) and punctures (p)')
@click.option('--placement', type=JSON,
        help='Endpoints of the reflection geodesics (null for infinity)')
@click.pass_context
@domain_errors
def genus0(ctx:click.Context, ovals:str, placement:Optional[Any]) -> None:
    dump(build_genus_zero(ovals, placement, context=ctx.obj['context']).to_json())

@build.command(help='Real curve without real holes or punctures')
@click.option('--type', 'type_', type=JSON, required=True,
        help='Real curve type, e.g. {"g":2,"k":1,"eps":1}')
@click.option('--params', type=JSON,
        help='Parameters of the underlying sequential set')
@click.pass_context
@domain_errors
def real(ctx:click.Context, type_:Any, params:Optional[Any]) -> None:
    dump(build_real_curve(RealCurveType.from_json(type_), params, context=ctx.obj['context']).to_json())

@build.command(help='Symmetric three-holed sphere')
@click.option('--pair', type=float, required=True,
        help='Shift parameter of the swapped holes')
@click.option('--real', 'real_', type=float, required=True,
        help='Shift parameter of the real hole')
@click.pass_context
@domain_errors
def pants(ctx:click.Context, pair:float, real_:float) -> None:
    dump(build_symmetric_three_holes(pair, real_, context=ctx.obj['context']).to_json())

@build.command(help='Right-angled hexagon from three shift parameters')
@click.argument('lams', type=float, nargs=3)
@click.pass_context
@domain_errors
def hexagon(ctx:click.Context, lams:Any) -> None:
    hx = build_hexagon(*lams, context=ctx.obj['context'])
    dump({ 'ls': [l.to_json() for l in hx.ls], 'axes': [l.to_json() for l in hx.axes],
        'system': hx.system.to_json() })


@cli.command(help='Check relations, sequential order and sigma invariance')
@click.argument('system', type=JSON)
@click.pass_context
@domain_errors
def validate(ctx:click.Context, system:Any) -> None:
    S = load_system(system)
    out:Dict[str,Any]
    if isinstance(S, SequentialSetOfType):
        out = { 'relation_defect': relation_defect(S), 'sequential': is_sequential_set_of_type(S) }
        ok = out['sequential'] and out['relation_defect'] <= 1e-8
    else:
        report = verify_real_structure(S, context=ctx.obj['context'])
        out = { 'relation_defect': max(report.defects, default=0.0), 'sigma': report.to_json() }
        ok = report.ok
        if S.type.g == 0 and all(X.real for X in S.gens):
            try:
                out['sequential'] = is_sequential_tuple(S.maps)
            except NotShift:
                out['sequential'] = False
            ok = ok and out['sequential']
    out['ok'] = ok
    dump(out)
    if not ok:
        ctx.exit(1)

@cli.command(help='Glue a piece into a non-real hole pair of a host')
@click.argument('recipe', type=JSON)
@click.pass_context
@domain_errors
def glue(ctx:click.Context, recipe:Any) -> None:
    dump(GlueRecipe.from_json(recipe).apply(context=ctx.obj['context']).to_json())

@cli.command(help='Dimension counts of a real curve type')
@click.option('--type', 'type_', type=JSON, required=True,
        help='Real curve type, e.g. {"g":2,"k":1,"eps":1,"n_I":1,"m_I":1}')
@domain_errors
def dim(type_:Any) -> None:
    dump(dimensions(RealCurveType.from_json(type_)).to_json())

@cli.command(help='Render the geodesics of a system as SVG')
@click.argument('system', type=JSON)
@click.option('-o', '--output', type=click.File('wb'), default='-',
        help='Output file')
@click.pass_context
@domain_errors
def render(ctx:click.Context, system:Any, output:Any) -> None:
    output.write(render_svg(scene_from_system(load_system(system)), context=ctx.obj['context']))


if __name__ == '__main__':
    cli(obj={})
