# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import Any, List, Optional, Sequence, Tuple

import math
import numpy as np

from dataclasses import dataclass

from eventhub import Context, EventHub
from moebius import IDENTITY, MoebiusMap, compose, power, proj_distance

class IndexOutOfRange(ValueError):
    pass

class WordNotFound(ValueError):
    pass

Letter = Tuple[int,int]

@dataclass(frozen=True)
class GroupWord:
    letters:Tuple[Letter,...] = ()

    @staticmethod
    def of(*letters:Letter) -> 'GroupWord':
        out:List[Letter] = []
        for i, e in letters:
            if out and out[-1][0] == i:
                e += out.pop()[1]
            if e != 0:
                out.append((i, e))
        return GroupWord(tuple(out))

    @staticmethod
    def gen(i:int, e:int=1) -> 'GroupWord':
        return GroupWord.of((i, e))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __mul__(self, other:'GroupWord') -> 'GroupWord':
        return GroupWord.of(*self.letters, *other.letters)

    def inverse(self) -> 'GroupWord':
        return GroupWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def conjugate(self, w:'GroupWord') -> 'GroupWord':
        return self * w * self.inverse()

    def reindex(self, table:Sequence['GroupWord']) -> 'GroupWord':
        """Substitute a word for every generator index."""
        out = GroupWord()
        for i, e in self.letters:
            w = table[i] if e > 0 else table[i].inverse()
            for _ in range(abs(e)):
                out = out * w
        return out

    def format(self, names:Optional[Sequence[str]]=None) -> str:
        if not self.letters:
            return '1'
        def name(i:int) -> str:
            return names[i] if names is not None and i < len(names) else f'g{i}'
        return ' '.join(name(i) if e == 1 else f'{name(i)}^{e}' for i, e in self.letters)

    def to_json(self) -> List[List[int]]:
        return [[i, e] for i, e in self.letters]

    @staticmethod
    def from_json(v:Any) -> 'GroupWord':
        if not isinstance(v, list) or not all(isinstance(l, list) and len(l) == 2
                and all(isinstance(x, int) for x in l) and l[1] != 0 for l in v):
            raise ValueError(f'invalid word: {v!r}')
        return GroupWord(tuple((l[0], l[1]) for l in v))

    def __str__(self) -> str:
        return self.format()


def agrees(M:MoebiusMap, T:MoebiusMap, eps:float=1e-9) -> bool:
    return proj_distance(M, T) <= eps * max(1.0, float(np.abs(T.matrix).max()))

def eval_word(w:GroupWord, gens:Sequence[MoebiusMap]) -> MoebiusMap:
    M = IDENTITY
    for i, e in w.letters:
        if not 0 <= i < len(gens):
            raise IndexOutOfRange(f'generator index {i} outside 0..{len(gens) - 1}')
        M = compose(M, power(gens[i], e))
    return M


# -----------------------------------------------------------------------------
# Bounded word search

class _Ball:
    """All reduced words up to a given length, as stacked matrices."""

    def __init__(self, gens:Sequence[MoebiusMap], depth:int) -> None:
        letters = []
        for g in gens:
            letters.append(g.matrix)
            letters.append(np.linalg.inv(g.matrix))
        L = np.array(letters).reshape(-1, 2, 2)
        mats = [np.eye(2)[None]]
        words = [np.zeros((1, 0), dtype=int)]
        for _ in range(depth):
            m, w = mats[-1], words[-1]
            n = len(L)
            nm = (m[:, None] @ L[None, :]).reshape(-1, 2, 2)
            nw = np.concatenate([np.repeat(w, n, axis=0), np.tile(np.arange(n), len(w))[:, None]], axis=1)
            if w.shape[1] > 0:
                keep = np.repeat(w[:, -1], n) != (nw[:, -1] ^ 1)
                nm, nw = nm[keep], nw[keep]
            mats.append(nm)
            words.append(nw)
        self.levels = list(zip(mats, words))

    @staticmethod
    def word(letters:np.ndarray) -> GroupWord:
        return GroupWord.of(*((int(l) >> 1, -1 if l & 1 else 1) for l in letters))

    def __len__(self) -> int:
        return sum(len(m) for m, _ in self.levels)


# fixed projection used to sort candidate matrices
_PROJ = np.array([1.0, math.sqrt(2), math.sqrt(3), math.sqrt(5)])

def find_word(target:MoebiusMap, gens:Sequence[MoebiusMap], *, maxlen:Optional[int]=None,
        eps:Optional[float]=None, context:Context={}) -> GroupWord:
    """Shortest word of length at most maxlen evaluating to target, by meeting
    in the middle between two balls of reduced words."""
    if maxlen is None:
        maxlen = context.get('words.maxlen', 8)
    if eps is None:
        eps = context.get('verify.eps', 1e-9)
    tol = 10.0 ** -context.get('words.key', 6)
    right = (maxlen + 1) // 2
    left = maxlen - right
    U, V = _Ball(gens, left), _Ball(gens, right)

    vm = np.concatenate([m for m, _ in V.levels]).reshape(-1, 4)
    vw = [row for _, w in V.levels for row in w]
    # both projective signs go into the table
    vm = np.concatenate([vm, -vm])
    vidx = np.concatenate([np.arange(len(vw)), np.arange(len(vw))])
    keys = vm @ _PROJ
    order = np.argsort(keys)
    keys, vm, vidx = keys[order], vm[order], vidx[order]

    T = target.matrix
    best:Optional[GroupWord] = None
    for um, uw in U.levels:
        if best is not None and uw.shape[1] > len(best):
            break
        q = (np.linalg.inv(um) @ T).reshape(-1, 4)
        qk = q @ _PROJ
        scale = 1.0 + np.abs(qk)
        lo = np.searchsorted(keys, qk - tol * scale)
        hi = np.searchsorted(keys, qk + tol * scale, side='right')
        for j in np.nonzero(hi > lo)[0]:
            cand = np.arange(lo[j], hi[j])
            near = cand[np.max(np.abs(vm[cand] - q[j]), axis=1) <= tol * scale[j]]
            for c in near:
                w = _Ball.word(uw[j]) * _Ball.word(vw[vidx[c]])
                if best is not None and len(w) >= len(best):
                    continue
                if agrees(eval_word(w, gens), target, eps):
                    best = w
    EventHub.emit(context, EventHub.SEARCH, what='word', size=len(U) + len(V),
            outcome='not found' if best is None else str(best))
    if best is None:
        raise WordNotFound(f'no word of length <= {maxlen} in {len(gens)} generators evaluates to {target}')
    return best
