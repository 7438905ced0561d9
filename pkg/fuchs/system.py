# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, Dict, List, Optional, Sequence, Tuple

from dataclasses import dataclass, field, replace

from eventhub import Context, EventHub
from halfplane import Geodesic, transport
from moebius import IDENTITY, MoebiusMap, classify, compose, conjugate, inverse, proj_distance
from words import GroupWord, WordNotFound, agrees, eval_word, find_word

class RoleNotFound(ValueError):
    pass

class NotAdmissible(ValueError):
    pass


class OvalType:
    """Cyclic sequence of real holes ('h') and real punctures ('p') along an oval."""
    HOLE     = 'h'
    PUNCTURE = 'p'

    def __init__(self, seq:Sequence[str]=()) -> None:
        seq = tuple(seq)
        for x in seq:
            if x not in (OvalType.HOLE, OvalType.PUNCTURE):
                raise ValueError(f'invalid oval entry {x!r}, expected h or p')
        self.seq = seq

    @property
    def n_R(self) -> int:
        return self.seq.count(OvalType.HOLE)

    @property
    def m_R(self) -> int:
        return self.seq.count(OvalType.PUNCTURE)

    def __len__(self) -> int:
        return len(self.seq)

    def canonical(self) -> Tuple[str,...]:
        if not self.seq:
            return ()
        return min(self.seq[i:] + self.seq[:i] for i in range(len(self.seq)))

    def __eq__(self, other:object) -> bool:
        return isinstance(other, OvalType) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __str__(self) -> str:
        return ''.join(self.seq)

    def __repr__(self) -> str:
        return f'OvalType({str(self)!r})'


@dataclass(frozen=True)
class RealCurveType:
    g:int
    k:int
    eps:int
    n_I:int = 0
    m_I:int = 0
    ovals:Optional[Tuple[OvalType,...]] = None

    def __post_init__(self) -> None:
        if min(self.g, self.k, self.n_I, self.m_I) < 0 or self.eps not in (0, 1):
            raise ValueError(f'invalid real curve type g={self.g} k={self.k} eps={self.eps}')
        if self.ovals is None:
            # k ovals without real holes or punctures
            object.__setattr__(self, 'ovals', tuple(OvalType() for _ in range(self.k)))
        else:
            object.__setattr__(self, 'ovals', tuple(o if isinstance(o, OvalType) else OvalType(o)
                for o in self.ovals))

    @property
    def n_R(self) -> int:
        return sum(o.n_R for o in self.ovals)

    @property
    def m_R(self) -> int:
        return sum(o.m_R for o in self.ovals)

    @property
    def h(self) -> int:
        return (self.g - self.k + 1) // 2 if self.eps == 1 else 0

    def to_json(self) -> Dict[str,Any]:
        return { 'g': self.g, 'k': self.k, 'eps': self.eps, 'n_I': self.n_I, 'm_I': self.m_I,
                'ovals': [str(o) for o in self.ovals] }

    @staticmethod
    def from_json(v:Any) -> 'RealCurveType':
        if not isinstance(v, dict):
            raise ValueError(f'invalid real curve type: {v!r}')
        eps = v.get('eps', v.get('epsilon'))
        g, k = v.get('g'), v.get('k')
        n_I, m_I = v.get('n_I', 0), v.get('m_I', 0)
        if not all(isinstance(x, int) for x in (g, k, eps, n_I, m_I)):
            raise ValueError(f'invalid real curve type: {v!r}')
        ovals = v.get('ovals')
        if ovals is None:
            return RealCurveType(g, k, eps, n_I, m_I)
        if not (isinstance(ovals, list) and all(isinstance(o, str) for o in ovals)):
            raise ValueError(f'invalid oval list: {ovals!r}')
        return RealCurveType(g, k, eps, n_I, m_I, tuple(OvalType(o) for o in ovals))

    def __str__(self) -> str:
        ov = ','.join(f'[{o}]' for o in self.ovals)
        return f'({self.g},{self.k},{self.eps}|{2 * self.n_I},{2 * self.m_I},{ov},{self.n_R},{self.m_R})'


@dataclass(frozen=True)
class Generator:
    role:str
    map:MoebiusMap
    kind:str
    boundary:str = ''           # 'hole', 'puncture' or '' for interior generators
    real:bool = False           # boundary mapped to itself by sigma
    mirror:Optional[str] = None # role of the sigma partner of a non-real boundary

    def to_json(self) -> Dict[str,Any]:
        d:Dict[str,Any] = { 'role': self.role, 'kind': self.kind, **self.map.to_json() }
        if self.boundary:
            d['boundary'] = self.boundary
            d['real'] = self.real
        if self.mirror is not None:
            d['mirror'] = self.mirror
        return d

    @staticmethod
    def from_json(v:Any) -> 'Generator':
        if not isinstance(v, dict) or not isinstance(v.get('role'), str) or not isinstance(v.get('kind'), str):
            raise ValueError(f'invalid generator: {v!r}')
        return Generator(v['role'], MoebiusMap.from_json(v), v['kind'],
                v.get('boundary', ''), bool(v.get('real', False)), v.get('mirror'))


@dataclass(frozen=True)
class GeneratorSystem:
    SCHEMA = 1

    gens:Tuple[Generator,...]
    sigma:MoebiusMap
    type:RealCurveType
    provenance:str
    relators:Tuple[GroupWord,...] = ()
    closed_forms:Dict[str,GroupWord] = field(default_factory=dict)
    reference:Optional[str] = None
    sigma_square:Optional[str] = None
    geodesics:Tuple[Geodesic,...] = ()

    @property
    def maps(self) -> List[MoebiusMap]:
        return [g.map for g in self.gens]

    @property
    def roles(self) -> List[str]:
        return [g.role for g in self.gens]

    def index(self, role:str) -> int:
        for i, g in enumerate(self.gens):
            if g.role == role:
                return i
        raise RoleNotFound(f'no generator {role!r} in {self.provenance}')

    def get(self, role:str) -> Generator:
        return self.gens[self.index(role)]

    def conjugate(self, A:MoebiusMap) -> 'GeneratorSystem':
        return replace(self,
                gens=tuple(replace(g, map=conjugate(A, g.map)) for g in self.gens),
                sigma=conjugate(A, self.sigma),
                geodesics=tuple(transport(A, l) for l in self.geodesics))

    def to_json(self) -> Dict[str,Any]:
        return {
            'schema': GeneratorSystem.SCHEMA,
            'provenance': self.provenance,
            'type': self.type.to_json(),
            'gens': [g.to_json() for g in self.gens],
            'sigma': self.sigma.to_json(),
            'relators': [w.to_json() for w in self.relators],
            'closed_forms': { r: w.to_json() for r, w in self.closed_forms.items() },
            'reference': self.reference,
            'sigma_square': self.sigma_square,
            'geodesics': [l.to_json() for l in self.geodesics],
        }

    @staticmethod
    def from_json(v:Any) -> 'GeneratorSystem':
        if not isinstance(v, dict):
            raise ValueError(f'invalid generator system: {v!r}')
        if v.get('schema') != GeneratorSystem.SCHEMA:
            raise ValueError(f'unsupported generator system schema {v.get("schema")!r}')
        try:
            sys = GeneratorSystem(
                    gens=tuple(Generator.from_json(g) for g in v['gens']),
                    sigma=MoebiusMap.from_json(v['sigma']),
                    type=RealCurveType.from_json(v['type']),
                    provenance=str(v.get('provenance', '')),
                    relators=tuple(GroupWord.from_json(w) for w in v.get('relators', [])),
                    closed_forms={ r: GroupWord.from_json(w) for r, w in v.get('closed_forms', {}).items() },
                    reference=v.get('reference'),
                    sigma_square=v.get('sigma_square'),
                    geodesics=tuple(Geodesic.from_json(l) for l in v.get('geodesics', [])))
        except (KeyError, TypeError, AttributeError) as e:
            raise ValueError(f'invalid generator system: {e}') from e
        for r in list(sys.closed_forms) + [x for x in (sys.reference, sys.sigma_square) if x is not None]:
            sys.index(r)
        return sys


# -----------------------------------------------------------------------------
# Sigma invariance

def sigma_conjugation_word(sys:GeneratorSystem, i:int, *, context:Context={}) -> GroupWord:
    """Word w in the generators with eval_word(w) = sigma gens[i] sigma^-1."""
    X = sys.gens[i]
    if (w := sys.closed_forms.get(X.role)) is not None:
        return w
    target = compose(sys.sigma, X.map, inverse(sys.sigma))
    return find_word(target, sys.maps, context=context)


@dataclass
class VerifyEntry:
    CLOSED_FORM = 'closed-form'
    SEARCHED    = 'searched'
    UNRESOLVED  = 'unresolved'

    role:str
    status:str
    word:Optional[GroupWord] = None

    def to_json(self) -> Dict[str,Any]:
        return { 'role': self.role, 'status': self.status,
                'word': None if self.word is None else self.word.to_json() }

@dataclass
class VerifyReport:
    sigma_reverses:bool
    sigma_square:bool
    entries:List[VerifyEntry]
    defects:List[float]
    classes:List[str]
    tolerance:float = 1e-8

    @property
    def unresolved(self) -> List[str]:
        return [e.role for e in self.entries if e.status == VerifyEntry.UNRESOLVED]

    @property
    def ok(self) -> bool:
        return (self.sigma_reverses and self.sigma_square and not self.unresolved
                and not self.classes and all(d <= self.tolerance for d in self.defects))

    def to_json(self) -> Dict[str,Any]:
        return {
            'ok': self.ok,
            'sigma_reverses': self.sigma_reverses,
            'sigma_square': self.sigma_square,
            'relation_defects': self.defects,
            'class_mismatches': self.classes,
            'entries': [e.to_json() for e in self.entries],
        }

def verify_real_structure(sys:GeneratorSystem, *, context:Context={}) -> VerifyReport:
    eps = context.get('verify.eps', 1e-9)
    maps = sys.maps
    sigma = sys.sigma
    sq = compose(sigma, sigma)
    if sys.sigma_square is None:
        sq_ok = agrees(sq, IDENTITY, eps)
    else:
        sq_ok = agrees(sq, sys.get(sys.sigma_square).map, eps)

    entries = []
    for i, X in enumerate(sys.gens):
        target = compose(sigma, X.map, inverse(sigma))
        w = sys.closed_forms.get(X.role)
        if w is not None and agrees(eval_word(w, maps), target, eps):
            entry = VerifyEntry(X.role, VerifyEntry.CLOSED_FORM, w)
        else:
            try:
                entry = VerifyEntry(X.role, VerifyEntry.SEARCHED, find_word(target, maps, context=context))
            except WordNotFound:
                entry = VerifyEntry(X.role, VerifyEntry.UNRESOLVED)
        EventHub.emit(context, EventHub.VERIFY, role=X.role, status=entry.status,
                word=None if entry.word is None else entry.word.format(sys.roles))
        entries.append(entry)

    classes = [f'{X.role} is {tag}, expected {X.kind}' for X in sys.gens
            if (tag := classify(X.map).tag) != X.kind]
    defects = [proj_distance(eval_word(w, maps), IDENTITY) for w in sys.relators]
    return VerifyReport(sigma.o == -1, sq_ok, entries, defects, classes)
