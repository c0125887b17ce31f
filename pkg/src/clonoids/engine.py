"""Arity-bounded clonoid generation and stability checking.

The least class containing a generator set F that is stable under right
composition with a clone C1 and left composition with a clone C2 equals
C2(F C1), so its m-ary part is computed in two stages:

* ``right_compose``: all f(g_1, ..., g_n) with f in F and the g_i drawn
  from the m-ary part of C1.  Exact whenever that part is enumerable.
* ``left_close``: the left composition C2 G of the resulting set G.
  Exact for generator-backed target clones (generator fixpoint) and for
  a family of targets with a decision procedure (see ``left_member``);
  otherwise a bounded fixpoint under the low-arity part of C2 is taken
  and the result is flagged as a subset of the true closure.

Membership queries never turn an approximate absence into a "no": they
return None (indeterminate) unless an exact procedure applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from . import _scan, bf, clones
from .bf import ArityMismatchError, BooleanFunction, full_mask
from .clones import BudgetError

EXACT = "exact"
LEFT_CLOSURE_APPROXIMATE = "leftClosureApproximate"

DEFAULT_BUDGET = 10**8
_SCAN_THRESHOLD = 1 << 16  # switch to the vectorized tuple scan above this

#: Targets whose left composition is decided exactly without a generator
#: fixpoint (see left_member for the procedures).
_DECIDABLE_TARGETS = frozenset({
    "Ic", "I0", "I1", "I", "Istar", "Omega1",
    "Lambdac", "Lambda0", "Lambda1", "Lambda",
    "Vc", "V0", "V1", "V",
    "Lc", "L0", "L1", "LS", "L",
    "Uinf", "Winf", "OI", "OX", "XI", "All",
})


@dataclass(frozen=True)
class FunctionSet:
    """Deduplicated, canonically ordered Boolean functions grouped by arity."""

    parts: tuple[tuple[int, tuple[int, ...]], ...]
    provenance: str = EXACT

    @staticmethod
    def build(tables_by_arity: Mapping[int, Iterable[int]],
              provenance: str = EXACT) -> "FunctionSet":
        parts = []
        for n in sorted(tables_by_arity):
            tabs = clones.sorted_tables(tables_by_arity[n], n)
            if tabs:
                parts.append((n, tuple(tabs)))
        return FunctionSet(tuple(parts), provenance)

    @staticmethod
    def from_functions(fns: Iterable[BooleanFunction],
                       provenance: str = EXACT) -> "FunctionSet":
        by_arity: dict[int, list[int]] = {}
        for f in fns:
            by_arity.setdefault(f.arity, []).append(f.table)
        return FunctionSet.build(by_arity, provenance)

    def arities(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.parts)

    def tables(self, n: int) -> tuple[int, ...]:
        for arity, tabs in self.parts:
            if arity == n:
                return tabs
        return ()

    def functions(self) -> list[BooleanFunction]:
        return [BooleanFunction(n, t) for n, tabs in self.parts for t in tabs]

    def contains(self, f: BooleanFunction) -> bool:
        return f.table in self.tables(f.arity)

    def union(self, other: "FunctionSet") -> "FunctionSet":
        by_arity: dict[int, set[int]] = {}
        for fs in (self, other):
            for n, tabs in fs.parts:
                by_arity.setdefault(n, set()).update(tabs)
        prov = EXACT if self.provenance == other.provenance == EXACT \
            else LEFT_CLOSURE_APPROXIMATE
        return FunctionSet.build(by_arity, prov)

    def size(self) -> int:
        return sum(len(tabs) for _, tabs in self.parts)

    def is_empty(self) -> bool:
        return not self.parts

    def literals(self) -> list[str]:
        return [bf.to_literal(f) for f in self.functions()]


def singleton(f: BooleanFunction) -> FunctionSet:
    return FunctionSet.from_functions([f])


@dataclass(frozen=True)
class GenerationRequest:
    generators: FunctionSet
    source_clone: str
    target_clone: str
    output_arity: int
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.output_arity < 1:
            raise bf.DomainError("output arity must be >= 1")
        if self.budget <= 0:
            raise bf.DomainError("budget must be positive")


# ---------------------------------------------------------------------------
# right composition F C1 at one output arity
# ---------------------------------------------------------------------------


def right_compose(fset: FunctionSet, source_clone: str, m: int,
                  budget: int = DEFAULT_BUDGET) -> FunctionSet:
    """{ f(g_1, ..., g_n) : f in F, g_i in C1^(m) }.

    Only m-ary inner functions occur in the m-ary part of F C1, so this
    is exact.
    """
    inner = [g.table for g in clones.arity_part(source_clone, m, budget)]
    cost = estimate_right_cost(fset, len(inner))
    if cost > budget:
        raise BudgetError(
            f"right composition needs ~{cost} composite evaluations, "
            f"budget is {budget}", estimated_cost=cost)
    out: set[int] = set()
    for n, tabs in fset.parts:
        for ft in tabs:
            combos = len(inner) ** n
            if combos > _SCAN_THRESHOLD:
                out |= _scan.compose_set(ft, n, inner, m)
            else:
                for gs in product(inner, repeat=n):
                    out.add(bf.compose_tables(ft, n, gs, m))
    return FunctionSet.build({m: out} if out else {})


def estimate_right_cost(fset: FunctionSet, inner_count: int) -> int:
    return sum(len(tabs) * inner_count ** n for n, tabs in fset.parts)


# ---------------------------------------------------------------------------
# left composition C2 G
# ---------------------------------------------------------------------------


def _single_arity(gset: FunctionSet) -> int:
    if len(gset.parts) != 1:
        raise ArityMismatchError(
            f"left closure needs members of one arity, got {gset.arities()}")
    return gset.parts[0][0]


def left_close(gset: FunctionSet, target_clone: str, probe_arity: int = 3,
               budget: int = DEFAULT_BUDGET) -> FunctionSet:
    """The m-ary set C2 G for single-arity G.

    Exact via a generator fixpoint or, for the decidable targets, a
    candidate filter at small arity; otherwise a bounded fixpoint under
    C2's parts of arity <= probe_arity, flagged approximate.
    """
    if gset.is_empty():
        return gset
    m = _single_arity(gset)
    desc = clones.get(target_clone)
    tabs = set(gset.tables(m))

    if target_clone == "Ic":
        return gset
    if target_clone in ("I0", "I1", "I", "Istar", "Omega1"):
        out = set(tabs)
        if target_clone in ("Istar", "Omega1"):
            out |= {t ^ full_mask(m) for t in tabs}
        if target_clone in ("I0", "I"):
            out.add(0)
        if target_clone in ("I1", "I"):
            out.add(full_mask(m))
        if target_clone == "Omega1":
            out |= {0, full_mask(m)}
        return FunctionSet.build({m: out})
    if desc.generator_exact:
        ops = [(g.arity, g.table) for g in desc.generator_functions()]
        closed = clones.closure_tables(sorted(tabs), ops, m, budget)
        return FunctionSet.build({m: closed})
    if target_clone in _DECIDABLE_TARGETS and m <= clones.FILTER_ARITY_LIMIT:
        candidates = 1 << (1 << m)
        if candidates > budget:
            raise BudgetError(
                f"candidate filter over {candidates} tables exceeds budget",
                estimated_cost=candidates)
        ctx = _member_context(gset, m)
        out = {t for t in range(candidates)
               if _decide_left(BooleanFunction(m, t), target_clone, ctx)}
        return FunctionSet.build({m: out})
    return _bounded_left_close(gset, target_clone, probe_arity, budget)


def _bounded_left_close(gset: FunctionSet, target_clone: str, probe_arity: int,
                        budget: int) -> FunctionSet:
    m = _single_arity(gset)
    members = set(gset.tables(m))
    outers = []
    for ell in range(1, probe_arity + 1):
        outers += [(f.arity, f.table)
                   for f in clones.arity_part(target_clone, ell, budget)]
    closed = clones.closure_tables(sorted(members), outers, m, budget)
    return FunctionSet.build({m: closed}, LEFT_CLOSURE_APPROXIMATE)


# -- exact membership procedures -------------------------------------------


class _MemberContext:
    """Precomputed views of a single-arity G used by the decision procedures."""

    def __init__(self, tables: Sequence[int], m: int):
        self.tables = list(tables)
        self.m = m
        self.size = 1 << m
        self.full = full_mask(m)
        self.sep = self._separation()
        self.fiber_ids = self._fibers()

    def _separation(self) -> list[int]:
        """sep[a] = bitmask of inputs b that some member distinguishes from a."""
        sep = [0] * self.size
        for a in range(self.size):
            mask = 0
            for b in range(self.size):
                if any(((t >> a) ^ (t >> b)) & 1 for t in self.tables):
                    mask |= 1 << b
            sep[a] = mask
        return sep

    def _fibers(self) -> list[tuple]:
        return [tuple((t >> a) & 1 for t in self.tables) for a in range(self.size)]


def _member_context(gset: FunctionSet, m: int) -> _MemberContext:
    return _MemberContext(gset.tables(m), m)


def left_member(f: BooleanFunction, gset: FunctionSet, target_clone: str,
                probe_arity: int = 3,
                budget: int = DEFAULT_BUDGET) -> Optional[bool]:
    """Is f in C2 G?  True/False when decidable exactly, else None.

    The exact procedures, one per target family (phi denotes the outer
    function, of unconstrained arity):

    * essentially unary targets: direct set arithmetic;
    * meet targets: phi(...) is a meet of a nonempty subset of its
      arguments (or a permitted constant), so f belongs iff the meet of
      all its majorants in G reproduces f;
    * join targets: dually with minorants;
    * affine targets: phi(...) is an XOR of arguments plus a constant,
      so membership is a GF(2) span/coset test;
    * Uinf: a 1-separating outer is dominated by one coordinate, so f
      belongs iff some member majorizes f and members separate every
      true point of f from every false point (then the indicator of the
      image of the true points is itself 1-separating); Winf dually;
    * anchored targets (OX, XI, OI, All): f belongs iff it is constant
      on the fibers of the joint evaluation map of G, with the anchor
      value forced on the all-zero / all-one fiber when present.
    """
    if gset.is_empty():
        return False
    m = _single_arity(gset)
    if f.arity != m:
        raise ArityMismatchError(f"member arity {f.arity} vs set arity {m}")
    if gset.provenance != EXACT:
        # G itself is a lower bound only; a positive stays trustworthy
        return True if f.table in gset.tables(m) else None
    if target_clone in _DECIDABLE_TARGETS:
        return _decide_left(f, target_clone, _member_context(gset, m))
    if clones.get(target_clone).generator_exact:
        closed = left_close(gset, target_clone, probe_arity, budget)
        return f.table in closed.tables(m)
    approx = _bounded_left_close(gset, target_clone, probe_arity, budget)
    return True if f.table in approx.tables(m) else None


def _decide_left(f: BooleanFunction, target: str, ctx: _MemberContext) -> bool:
    t, full = f.table, ctx.full
    in_g = t in ctx.tables

    if target == "Ic":
        return in_g
    if target in ("I0", "I1", "I", "Istar", "Omega1"):
        if in_g:
            return True
        if target in ("Istar", "Omega1") and (t ^ full) in ctx.tables:
            return True
        allowed = {"I0": (0,), "I1": (full,), "I": (0, full),
                   "Istar": (), "Omega1": (0, full)}[target]
        return t in allowed

    if target in ("Lambdac", "Lambda0", "Lambda1", "Lambda"):
        escapes = {"Lambdac": (), "Lambda0": (0,), "Lambda1": (full,),
                   "Lambda": (0, full)}[target]
        if t in escapes:
            return True
        meet, found = full, False
        for g in ctx.tables:
            if t & ~g == 0:
                meet &= g
                found = True
        return found and meet == t
    if target in ("Vc", "V0", "V1", "V"):
        escapes = {"Vc": (), "V0": (0,), "V1": (full,), "V": (0, full)}[target]
        if t in escapes:
            return True
        join, found = 0, False
        for g in ctx.tables:
            if g & ~t == 0:
                join |= g
                found = True
        return found and join == t

    if target in ("Lc", "L0", "L1", "LS", "L"):
        return _affine_member(t, target, ctx)

    if target in ("Uinf", "Winf"):
        if target == "Uinf":
            anchored = any(t & ~g == 0 for g in ctx.tables)
        else:
            anchored = any(g & ~t == 0 for g in ctx.tables)
        return anchored and _separates(t, ctx)

    if target in ("OX", "XI", "OI", "All"):
        if not _constant_on_fibers(t, ctx):
            return False
        if target in ("OX", "OI"):
            zero_fiber = tuple(0 for _ in ctx.tables)
            for a in range(ctx.size):
                if ctx.fiber_ids[a] == zero_fiber and (t >> a) & 1:
                    return False
        if target in ("XI", "OI"):
            one_fiber = tuple(1 for _ in ctx.tables)
            for a in range(ctx.size):
                if ctx.fiber_ids[a] == one_fiber and not (t >> a) & 1:
                    return False
        return True

    raise AssertionError(f"no decision procedure for {target}")


def _separates(t: int, ctx: _MemberContext) -> bool:
    trues = [a for a in range(ctx.size) if (t >> a) & 1]
    falses_mask = 0
    for b in range(ctx.size):
        if not (t >> b) & 1:
            falses_mask |= 1 << b
    return all(falses_mask & ~ctx.sep[a] == 0 for a in trues)


def _constant_on_fibers(t: int, ctx: _MemberContext) -> bool:
    seen: dict[tuple, int] = {}
    for a in range(ctx.size):
        v = (t >> a) & 1
        prev = seen.setdefault(ctx.fiber_ids[a], v)
        if prev != v:
            return False
    return True


def _affine_member(t: int, target: str, ctx: _MemberContext) -> bool:
    g0 = ctx.tables[0]
    even_basis = _gf2_basis([g for g in ctx.tables[1:]], shift=g0)
    full = ctx.full

    def in_even(x):
        return _gf2_reduce(x, even_basis) == 0

    span_hits = in_even(t) or in_even(t ^ g0)        # span(G) = E  u  (g0 + E)
    odd = in_even(t ^ g0)
    even = in_even(t)
    if target == "L0":
        return span_hits
    if target == "Lc":
        return odd
    if target == "L1":
        return odd or in_even(t ^ full)
    if target == "LS":
        return odd or in_even(t ^ g0 ^ full)
    if target == "L":
        return even or odd or in_even(t ^ full) or in_even(t ^ g0 ^ full)
    raise AssertionError(target)


def _gf2_basis(vectors: Iterable[int], shift: int = 0) -> list[int]:
    basis: list[int] = []
    for v in vectors:
        v ^= shift
        v = _gf2_reduce(v, basis)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def _gf2_reduce(v: int, basis: list[int]) -> int:
    for b in basis:
        v = min(v, v ^ b)
    return v


# ---------------------------------------------------------------------------
# generation, membership, stability
# ---------------------------------------------------------------------------


def generate_clonoid(req: GenerationRequest, probe_arity: int = 3) -> FunctionSet:
    """The output-arity part of the least (C1, C2)-stable class containing F."""
    g = right_compose(req.generators, req.source_clone, req.output_arity, req.budget)
    if g.is_empty():
        return g
    return left_close(g, req.target_clone, probe_arity, req.budget)


def is_clonoid_member(f: BooleanFunction, generators: FunctionSet,
                      source_clone: str, target_clone: str,
                      budget: int = DEFAULT_BUDGET,
                      probe_arity: int = 3) -> Optional[bool]:
    """Membership of f in the generated class, at f's own arity.

    True/False are exact; None means the only available left closure is
    approximate and f was not found in it.
    """
    g = right_compose(generators, source_clone, f.arity, budget)
    if g.is_empty():
        return False
    if f.table in g.tables(f.arity):
        return True
    return left_member(f, g, target_clone, probe_arity, budget)


def transform_set(fset: FunctionSet, kind: str) -> FunctionSet:
    """Elementwise transform or union with constants, arity by arity."""
    tables: dict[int, set[int]] = {n: set(tabs) for n, tabs in fset.parts}
    if kind == "negate":
        tables = {n: {t ^ full_mask(n) for t in tabs} for n, tabs in tables.items()}
    elif kind == "innerNegate":
        tables = {n: {bf.inner_negate_table(t, n) for t in tabs}
                  for n, tabs in tables.items()}
    elif kind == "dual":
        tables = {n: {bf.inner_negate_table(t, n) ^ full_mask(n) for t in tabs}
                  for n, tabs in tables.items()}
    elif kind == "unionNegations":
        for n in tables:
            tables[n] |= {t ^ full_mask(n) for t in tables[n]}
    elif kind in ("unionConst0", "unionConst1", "unionConstBoth"):
        for n in range(1, max(tables, default=0) + 1):
            tables.setdefault(n, set())
            if kind in ("unionConst0", "unionConstBoth"):
                tables[n].add(0)
            if kind in ("unionConst1", "unionConstBoth"):
                tables[n].add(full_mask(n))
    else:
        raise bf.DomainError(f"unknown transform kind {kind!r}")
    return FunctionSet.build(tables, fset.provenance)


def compose_sets(outer: FunctionSet, inner: FunctionSet) -> FunctionSet:
    """Plain function class composition: every f(g_1..g_n) with matching arities."""
    out: dict[int, set[int]] = {}
    for n, ftabs in outer.parts:
        for m, gtabs in inner.parts:
            dest = out.setdefault(m, set())
            for ft in ftabs:
                for gs in product(gtabs, repeat=n):
                    dest.add(bf.compose_tables(ft, n, gs, m))
    return FunctionSet.build(out)


@dataclass(frozen=True)
class StabilityViolation:
    side: str                     # "right" or "left"
    outer: str                    # truth-table literal
    inners: tuple[str, ...]
    composite: str


def is_stable(kset: FunctionSet, source_clone: str, target_clone: str,
              probe_arity: int = 3,
              budget: int = DEFAULT_BUDGET) -> Optional[StabilityViolation]:
    """First violation of K C1 subseteq K or C2 K subseteq K, bounded.

    Right: every f in K composed with tuples from C1^(k) for each arity
    k covered by K must land back in K.  Left: every outer from
    C2^(<= probe_arity) applied to tuples of K members.  None means no
    violation at these bounds.
    """
    arity_list = list(kset.arities())
    max_arity = max(arity_list, default=0)
    part_sets = {n: frozenset(kset.tables(n)) for n in range(1, max_arity + 1)}
    full_parts = all(len(part_sets[n]) == 1 << (1 << n)
                     for n in range(1, max_arity + 1))

    for k in range(1, max_arity + 1):
        inner = [g.table for g in clones.arity_part(source_clone, k, budget)]
        ctx = _ScanContext(inner, k, part_sets[k], budget)
        for n, ftabs in kset.parts:
            for ft in ftabs:
                if ft in (0, full_mask(n)):
                    # composing a constant yields the same constant at arity k
                    ct = 0 if ft == 0 else full_mask(k)
                    if ct not in part_sets[k]:
                        gs = tuple(inner[:1] * n)
                        return _violation("right", n, ft, gs, k, ct)
                    continue
                if full_parts:
                    continue
                viol = ctx.first_escape(ft, n)
                if viol is not None:
                    return _violation("right", n, ft, viol[0], k, viol[1])

    target_desc = clones.get(target_clone)
    if target_desc.generator_exact:
        # closure under the generators' pointwise action is equivalent to
        # closure under every outer (term induction over the generators),
        # and any generator violation is itself a small-outer violation
        outers = [(g.arity, g.table) for g in target_desc.generator_functions()]
    else:
        outers = []
        for ell in range(1, probe_arity + 1):
            outers += [(ell, g.table)
                       for g in clones.arity_part(target_clone, ell, budget)]
    for k in arity_list:
        gammas = sorted(part_sets[k])
        if full_parts or not gammas:
            continue
        ctx = _ScanContext(gammas, k, part_sets[k], budget)
        for ell, ot in outers:
            viol = ctx.first_escape(ot, ell)
            if viol is not None:
                return _violation("left", ell, ot, viol[0], k, viol[1])
    return None


def _violation(side, n, outer_table, inner_tables, k, composite) -> StabilityViolation:
    return StabilityViolation(
        side=side,
        outer=bf.to_literal(BooleanFunction(n, outer_table)),
        inners=tuple(bf.to_literal(BooleanFunction(k, t)) for t in inner_tables),
        composite=bf.to_literal(BooleanFunction(k, composite)),
    )


class _ScanContext:
    """Shared arrays for scanning many outers over one inner list."""

    def __init__(self, inner: Sequence[int], k: int, allowed: frozenset,
                 budget: int):
        self.inner = list(inner)
        self.k = k
        self.allowed = allowed
        self.budget = budget
        self.numpy_ok = (1 << k) <= 64 and bool(self.inner)
        self._vals = None
        self._allowed_arr = None
        self._blocks: dict = {}

    def _prepare(self, n: int):
        if self._vals is None:
            self._vals = _scan.values_matrix(self.inner, self.k)
            self._allowed_arr = np.array(sorted(self.allowed), dtype=np.uint64)
        if n not in self._blocks:
            mult = [1 << (n - i) for i in range(1, n + 1)]
            self._blocks[n] = list(_scan.block_scan(self._vals, n, mult))
        return self._blocks[n]

    def first_escape(self, outer_table: int, n: int):
        """First inner tuple whose composite with the outer leaves
        ``allowed``, as (tuple, composite), or None."""
        if not self.inner:
            return None
        combos = len(self.inner) ** n
        if combos > self.budget:
            raise BudgetError(f"{combos} tuples exceed budget {self.budget}",
                              estimated_cost=combos)
        if combos <= 256 or not self.numpy_ok:
            for gs in product(self.inner, repeat=n):
                ct = bf.compose_tables(outer_table, n, gs, self.k)
                if ct not in self.allowed:
                    return gs, ct
            return None
        lookup = _scan.values_matrix([outer_table], n)[0]
        for start, block in self._prepare(n):
            packed = np.array(_scan.pack_rows(lookup[block]), dtype=np.uint64)
            ok = np.isin(packed, self._allowed_arr)
            if not ok.all():
                r = int(np.nonzero(~ok)[0][0])
                gs = tuple(self.inner[c]
                           for c in _scan.decode_tuple(start + r,
                                                       len(self.inner), n))
                return gs, int(packed[r])
        return None


# ---------------------------------------------------------------------------
# cost estimation
# ---------------------------------------------------------------------------


def estimate_cost(req: GenerationRequest) -> int:
    """Projected number of elementary composite evaluations.

    Dominated by the right stage: |C1^(m)|^n per n-ary generator.  The
    left stage adds the cost of enumerating the target's probe parts
    when no exact closure is available; exact closures are linear-ish in
    their output and are not charged here.
    """
    m = req.output_arity
    inner_count = clones.part_size(req.source_clone, m)
    if inner_count is None:
        inner_count = len(clones.arity_part(req.source_clone, m, req.budget))
    cost = sum(len(tabs) * inner_count ** n for n, tabs in req.generators.parts)
    desc = clones.get(req.target_clone)
    if not desc.generator_exact and req.target_clone not in _DECIDABLE_TARGETS:
        for ell in range(1, min(3, m) + 1):
            cost += 1 << (1 << ell)
    return cost
