"""Exact bounded stability analysis for pointwise-describable classes.

The classes whose stability the suite checks (monotone / antitone
families, value-anchored families, constants, and their unions with one
constant family) are all described by conditions on a composite's values
at one or two input points.  Because the inner functions of a
composition are chosen independently per coordinate, the reachable
value combinations at a fixed pair of inputs form a full product set,
and "some composite violates the class condition" factorizes into a
lookup against two small tables:

* for right composition K C: which value patterns are achievable by a
  C-tuple at the probed inputs, and which patterns some member of K
  maps to a violation;
* for left composition C K: the same with the roles of K and C swapped.

This makes the check over every (class, clone) pair exact at the stated
arity bounds without enumerating the tuple space, and it reconstructs a
concrete violating composite for the report whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

import numpy as np

from . import _scan, bf, clones
from .bf import BooleanFunction, full_mask

MAX_ARITY = 3
PROBE_ARITY = 3


@dataclass(frozen=True)
class ClassSpec:
    """A class given by per-point conditions on members of every arity.

    anchor0/anchor1: required value at the all-zero / all-one input;
    mono: 'up' (monotone), 'down' (antitone) or None;
    escape: a constant value c such that the class is the union of the
    anchored base class with the c-constants (None when no union).
    constant: members must be constant functions.
    empty: the empty class.
    """

    name: str
    anchor0: Optional[int] = None
    anchor1: Optional[int] = None
    mono: Optional[str] = None
    escape: Optional[int] = None
    constant: bool = False
    empty: bool = False

    def member(self, n: int, t: int) -> bool:
        if self.empty:
            return False
        if self.escape is not None:
            e = 0 if self.escape == 0 else full_mask(n)
            if t == e:
                return True
        if self.anchor0 is not None and (t & 1) != self.anchor0:
            return False
        if self.anchor1 is not None and ((t >> ((1 << n) - 1)) & 1) != self.anchor1:
            return False
        if self.mono == "up" and not clones.is_monotone(n, t):
            return False
        if self.mono == "down" and not clones.is_monotone(n, t ^ full_mask(n)):
            return False
        if self.constant and t not in (0, full_mask(n)):
            return False
        return True

    def part(self, n: int) -> list[int]:
        return [t for t in bf.all_tables(n) if self.member(n, t)]


#: The classes stable under both (I, McUinf) and the dual data, plus the
#: value-anchored variants appearing in the stability table.
CLASS_SPECS: dict[str, ClassSpec] = {s.name: s for s in [
    ClassSpec("All"),
    ClassSpec("OX", anchor0=0),
    ClassSpec("IX", anchor0=1),
    ClassSpec("XI", anchor1=1),
    ClassSpec("XO", anchor1=0),
    ClassSpec("OXCI", anchor0=0, escape=1),
    ClassSpec("IXCO", anchor0=1, escape=0),
    ClassSpec("XICO", anchor1=1, escape=0),
    ClassSpec("XOCI", anchor1=0, escape=1),
    ClassSpec("M", mono="up"),
    ClassSpec("Mneg", mono="down"),
    ClassSpec("M0", mono="up", anchor0=0),
    ClassSpec("M0neg", mono="down", anchor0=1),
    ClassSpec("M1", mono="up", anchor1=1),
    ClassSpec("M1neg", mono="down", anchor1=0),
    ClassSpec("Vak", constant=True),
    ClassSpec("Vak0", constant=True, anchor0=0, anchor1=0),
    ClassSpec("Vak1", constant=True, anchor0=1, anchor1=1),
    ClassSpec("Empty", empty=True),
]}


# ---------------------------------------------------------------------------
# pattern tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PatternTables:
    """Value patterns of a function list at single inputs and input pairs.

    single[x]: set of values at input x, with a witness table each;
    pairs[(x, y)]: set of value pairs at (x, y), with witnesses.
    """

    arity: int
    single: tuple
    pairs: dict


def pattern_tables(tables: tuple[int, ...], k: int) -> PatternTables:
    size = 1 << k
    vals = _scan.values_matrix(tables, k)
    single = []
    for x in range(size):
        col = vals[:, x]
        d = {}
        for v in (0, 1):
            idx = np.nonzero(col == v)[0]
            if idx.size:
                d[v] = tables[int(idx[0])]
        single.append(d)
    pairs = {}
    patt = 2 * vals[:, :, None] + vals[:, None, :]  # (T, size, size)
    for p, (vx, vy) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
        mask = patt == p
        exists = mask.any(axis=0)
        witness = mask.argmax(axis=0)
        for x in range(size):
            for y in range(size):
                if exists[x, y]:
                    pairs.setdefault((x, y), {})[(vx, vy)] = tables[int(witness[x, y])]
    for x in range(size):
        for y in range(size):
            pairs.setdefault((x, y), {})
    return PatternTables(k, tuple(single), pairs)


@dataclass(frozen=True)
class ViolationTables:
    """Which value patterns some member of a function list turns into a
    violation witness: val1[u] / val0[u] (a member with value 1 / 0 at
    input u) and bad[(b1, b0)][u][v] (a member with value b1 at u and b0
    at v), all with witness tables."""

    arity: int
    val1: tuple
    val0: tuple
    bad: dict


def violation_tables(tables: tuple[int, ...], n: int) -> ViolationTables:
    size = 1 << n
    if not tables:
        return ViolationTables(n, (None,) * size, (None,) * size,
                               {(1, 0): {}, (0, 1): {}})
    vals = _scan.values_matrix(tables, n).astype(bool)
    val1, val0 = [], []
    for u in range(size):
        col = vals[:, u]
        val1.append(tables[int(col.argmax())] if col.any() else None)
        val0.append(tables[int((~col).argmax())] if not col.all() else None)
    bad = {}
    for key, mask in (((1, 0), vals[:, :, None] & ~vals[:, None, :]),
                      ((0, 1), ~vals[:, :, None] & vals[:, None, :])):
        exists = mask.any(axis=0)
        witness = mask.argmax(axis=0)
        us, vs = np.nonzero(exists)
        bad[key] = {(int(u), int(v)): tables[int(witness[u, v])]
                    for u, v in zip(us, vs)}
    return ViolationTables(n, tuple(val1), tuple(val0), bad)


# ---------------------------------------------------------------------------
# the two sides
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    side: str
    outer: BooleanFunction
    inners: tuple[BooleanFunction, ...]
    composite: BooleanFunction


def _comparable_pairs(k: int):
    size = 1 << k
    for x in range(size):
        for y in range(size):
            if x != y and x & y == x:
                yield x, y


def _search_pattern(spec: ClassSpec, patt: PatternTables, viol: ViolationTables,
                    width: int):
    """A violating (pattern choice, witness) if one exists.

    ``patt`` describes the inner side (achievable value patterns per
    probed input), ``viol`` the outer side (patterns mapped to a
    violation); ``width`` is the outer arity, i.e. how many independent
    inner choices are made.
    """
    k = patt.arity
    zero, one = 0, (1 << k) - 1

    def single_hit(x, want):
        table = viol.val1 if want == 1 else viol.val0
        opts = sorted(patt.single[x].items())  # (value, witness table)
        for combo in product(opts, repeat=width):
            u = _pack([c[0] for c in combo])
            if table[u] is not None:
                return (tuple(c[1] for c in combo), table[u])
        return None

    def pair_hit(x, y, key):
        opts = sorted(patt.pairs[(x, y)].items())  # ((vx, vy), witness)
        for combo in product(opts, repeat=width):
            u = _pack([c[0][0] for c in combo])
            v = _pack([c[0][1] for c in combo])
            w = viol.bad[key].get((u, v))
            if w is not None:
                return (tuple(c[1] for c in combo), w)
        return None

    if spec.empty:
        return None
    if spec.escape is None:
        if spec.anchor0 is not None:
            hit = single_hit(zero, 1 - spec.anchor0)
            if hit:
                return hit
        if spec.anchor1 is not None:
            hit = single_hit(one, 1 - spec.anchor1)
            if hit:
                return hit
    else:
        # union with constants: violation needs the anchor broken AND a
        # point witnessing non-constancy, at one and the same member
        anchor_x = zero if spec.anchor0 is not None else one
        broken = 1 - (spec.anchor0 if spec.anchor0 is not None else spec.anchor1)
        key = (1, 0) if broken == 1 else (0, 1)
        for y in range(1 << k):
            hit = pair_hit(anchor_x, y, key)
            if hit:
                return hit
    if spec.mono is not None:
        key = (1, 0) if spec.mono == "up" else (0, 1)
        for x, y in _comparable_pairs(k):
            hit = pair_hit(x, y, key)
            if hit:
                return hit
    if spec.constant:
        for x in range(1 << k):
            for y in range(1 << k):
                if x == y:
                    continue
                hit = pair_hit(x, y, (1, 0))
                if hit:
                    return hit
    return None


def _pack(bits) -> int:
    u = 0
    for b in bits:
        u = (u << 1) | b
    return u


@lru_cache(maxsize=None)
def _clone_part(clone_id: str, k: int) -> tuple:
    return tuple(f.table for f in clones.arity_part(clone_id, k))


@lru_cache(maxsize=None)
def _class_part(name: str, n: int) -> tuple:
    return tuple(CLASS_SPECS[name].part(n))


@lru_cache(maxsize=None)
def _clone_patterns(clone_id: str, k: int) -> PatternTables:
    return pattern_tables(_clone_part(clone_id, k), k)


@lru_cache(maxsize=None)
def _class_patterns(name: str, k: int) -> PatternTables:
    return pattern_tables(_class_part(name, k), k)


@lru_cache(maxsize=None)
def _class_violations(name: str, n: int) -> ViolationTables:
    return violation_tables(_class_part(name, n), n)


@lru_cache(maxsize=None)
def _clone_violations(clone_id: str, n: int) -> ViolationTables:
    return violation_tables(_clone_part(clone_id, n), n)


def right_stability_violation(class_name: str, clone_id: str,
                              max_arity: int = MAX_ARITY) -> Optional[Violation]:
    """First composite f(h_1, ..., h_n) with f in the class (arity n) and
    h_i in the clone's k-ary part that leaves the class, over all
    n, k <= max_arity."""
    spec = CLASS_SPECS[class_name]
    for n in range(1, max_arity + 1):
        viol = _class_violations(class_name, n)
        for k in range(1, max_arity + 1):
            patt = _clone_patterns(clone_id, k)
            hit = _search_pattern(spec, patt, viol, n)
            if hit is not None:
                return _build_violation("right", hit, viol, k, n)
    return None


def left_stability_violation(class_name: str, clone_id: str,
                             max_arity: int = MAX_ARITY,
                             probe_arity: int = PROBE_ARITY) -> Optional[Violation]:
    """First composite phi(g_1, ..., g_l) with phi in the clone's part of
    arity l <= probe_arity and g_i class members of arity k that leaves
    the class."""
    spec = CLASS_SPECS[class_name]
    for k in range(1, max_arity + 1):
        if not _class_part(class_name, k):
            continue
        patt = _class_patterns(class_name, k)
        for ell in range(1, probe_arity + 1):
            viol = _clone_violations(clone_id, ell)
            hit = _search_pattern(spec, patt, viol, ell)
            if hit is not None:
                return _build_violation("left", hit, viol, k, ell)
    return None


def _build_violation(side: str, hit, viol: ViolationTables, inner_arity: int,
                     outer_arity: int) -> Violation:
    inner_tables, outer_table = hit
    outer = BooleanFunction(outer_arity, outer_table)
    inners = tuple(BooleanFunction(inner_arity, t) for t in inner_tables)
    composite = bf.compose(outer, list(inners))
    return Violation(side, outer, inners, composite)
