"""Disjointness hypergraphs and minor tests through 1-separating inner functions.

For a Boolean function f the rank-k disjointness hypergraph has the true
points of f as vertices and the sets of 2..k true points whose
coordinatewise meet is the zero tuple as hyperedges.  Zero-meet sets are
upward closed, so for unbounded rank only the inclusion-minimal ones are
stored and a map is a homomorphism when the image of every stored edge
again has meet zero (equivalently: contains an edge).

``uk_minor`` decides "f is obtainable from g with 1-separating inner
functions of rank k" through a hypergraph homomorphism search;
``uk_minor_brute`` is the independent oracle that decides the same
question by exhausting the inner tuples, and pins down the homomorphism
convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from . import _scan, bf, clones
from .bf import BitTuple, BooleanFunction, DomainError
from .clones import INF, BudgetError
from .engine import DEFAULT_BUDGET, FunctionSet, left_close, right_compose
from .reports import CheckReport, FAIL, PASS


@dataclass(frozen=True)
class Hypergraph:
    width: int
    vertices: tuple[int, ...]               # true-point masks, ascending
    edges: tuple[frozenset, ...]            # vertex-index sets, |edge| >= 2

    def __post_init__(self):
        for e in self.edges:
            if len(e) < 2:
                raise DomainError("edges must have at least 2 vertices")
            if not all(0 <= i < len(self.vertices) for i in e):
                raise DomainError("edge references unknown vertex")

    def vertex_tuples(self) -> list[BitTuple]:
        return [BitTuple.from_index(self.width, v) for v in self.vertices]

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)


def disjointness_hypergraph(f: BooleanFunction, k) -> Hypergraph:
    """Vertices: true points of f; edges: zero-meet sets of 2..k of them.

    With k unbounded only inclusion-minimal zero-meet sets are stored.
    """
    _check_rank(k)
    verts = sorted(f.true_indices())
    pos = {v: i for i, v in enumerate(verts)}
    edges = []
    if k is INF:
        found: list = []
        _minimal_zero_meets(verts, found)
        edges = [frozenset(pos[v] for v in e) for e in found]
    else:
        for size in range(2, int(k) + 1):
            if size > len(verts):
                break
            for combo in combinations(verts, size):
                meet = combo[0]
                for v in combo[1:]:
                    meet &= v
                if meet == 0:
                    edges.append(frozenset(pos[v] for v in combo))
    edges = sorted(set(edges), key=lambda e: sorted(e))
    return Hypergraph(f.arity, tuple(verts), tuple(edges))


def _check_rank(k) -> None:
    if k is INF:
        return
    if not isinstance(k, int) or k < 2:
        raise DomainError(f"rank must be an integer >= 2 or infinity, got {k!r}")


def _minimal_zero_meets(verts: Sequence[int], out: list) -> None:
    """Inclusion-minimal subsets of size >= 2 with meet zero."""

    def extend(start: int, chosen: tuple, meet: int):
        for i in range(start, len(verts)):
            v = verts[i]
            new_meet = meet & v
            if new_meet == meet:
                continue  # v removes nothing; cannot be part of a minimal set
            nxt = chosen + (v,)
            if new_meet == 0:
                if len(nxt) >= 2 and _is_minimal(nxt):
                    out.append(nxt)
            else:
                extend(i + 1, nxt, new_meet)

    def _is_minimal(vs: tuple) -> bool:
        for j in range(len(vs)):
            rest = vs[:j] + vs[j + 1:]
            m = ~0
            for v in rest:
                m &= v
            if m == 0:
                return False
        return True

    for i, v in enumerate(verts):
        extend(i + 1, (v,), v)


def exists_homomorphism(g: Hypergraph, h: Hypergraph
                        ) -> tuple[bool, Optional[dict]]:
    """Vertex map sending every edge of g onto a zero-meet image in h.

    Backtracking over g's vertices in order of descending edge degree;
    deterministic, returns the first witness map (vertex mask to vertex
    mask) when one exists.
    """
    if not g.vertices:
        return True, {}
    if not h.vertices:
        return False, None
    order = sorted(range(len(g.vertices)),
                   key=lambda i: (-g.degree(i), i))
    rank_of = {v: r for r, v in enumerate(order)}
    edges_by_last = [[] for _ in order]
    for e in g.edges:
        last = max(rank_of[i] for i in e)
        edges_by_last[last].append(tuple(e))
    assign = [-1] * len(g.vertices)

    def feasible(depth: int) -> bool:
        for e in edges_by_last[depth]:
            meet = ~0
            for i in e:
                meet &= h.vertices[assign[i]]
            if meet != 0:
                return False
        return True

    def search(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for cand in range(len(h.vertices)):
            assign[v] = cand
            if feasible(depth) and search(depth + 1):
                return True
        assign[v] = -1
        return False

    if search(0):
        mapping = {g.vertices[i]: h.vertices[assign[i]]
                   for i in range(len(g.vertices))}
        return True, mapping
    return False, None


def uk_minor(f: BooleanFunction, g: BooleanFunction, k) -> bool:
    """f = g(h_1, ..., h_m) for some 1-separating h_i of rank k, decided
    through the disjointness hypergraphs; requires 0-preserving f, g."""
    _check_zero_preserving(f)
    _check_zero_preserving(g)
    ok, _ = exists_homomorphism(disjointness_hypergraph(f, k),
                                disjointness_hypergraph(g, k))
    return ok


def _check_zero_preserving(f: BooleanFunction) -> None:
    if f.table & 1:
        raise DomainError(f"{bf.to_literal(f)} does not preserve 0")


_BRUTE_CACHE: dict = {}
_TUPLE_PATH_LIMIT = 1 << 21


def uk_minor_brute(f: BooleanFunction, g: BooleanFunction, k,
                   budget: int = DEFAULT_BUDGET) -> bool:
    """The exhaustive oracle: tests f = g(h_1, ..., h_m) over all tuples
    of rank-k 1-separating inner functions of f's arity.

    Small instances enumerate the inner tuples outright (cached per g);
    larger ones run an equivalent exhaustive search over the per-input
    image columns, pruning a partial assignment as soon as some inner
    component could no longer be 1-separating of rank k.
    """
    _check_rank(k)
    n = f.arity
    clone_id = {2: "U2", 3: "U3", INF: "Uinf"}.get(k)
    if clone_id is None:
        raise DomainError(f"brute oracle only knows ranks 2, 3 and infinity, not {k}")
    inner = tuple(x.table for x in clones.arity_part(clone_id, n, budget))
    cost = len(inner) ** g.arity
    if cost <= _TUPLE_PATH_LIMIT:
        key = (g.arity, g.table, n, clone_id)
        composites = _BRUTE_CACHE.get(key)
        if composites is None:
            composites = frozenset(_scan.compose_set(g.table, g.arity, inner, n))
            _BRUTE_CACHE[key] = composites
        return f.table in composites
    return _column_search(f, g, k, budget)


def _column_search(f: BooleanFunction, g: BooleanFunction, k,
                   budget: int) -> bool:
    """Assign to every input of f an image column under (h_1, ..., h_m).

    A column choice c at input a commits a to the true set of every
    component h_i with bit i set in c; the partial true sets must stay
    extendable to rank-k 1-separating functions, which for upward-closed
    zero-meet witnesses means: no zero tuple, no zero-meet subset of
    size <= k already present (running meet for unbounded rank).
    """
    n, m = f.arity, g.arity
    choices = []
    for a in range(1 << n):
        cols = [c for c in range(1 << m) if g.value_at(c) == f.value_at(a)]
        if not cols:
            return False
        choices.append((a, cols))
    choices.sort(key=lambda ac: (len(ac[1]), ac[0]))

    true_sets: list[list[int]] = [[] for _ in range(m)]
    meets: list[int] = [-1] * m  # -1 acts as the all-ones mask
    nodes = 0

    def admissible(i: int, a: int) -> bool:
        if a == 0:
            return False
        if k is INF:
            return meets[i] & a != 0
        for x in true_sets[i]:
            if x & a == 0:
                return False
        if k == 3:
            ts = true_sets[i]
            for p in range(len(ts)):
                for q_ in range(p + 1, len(ts)):
                    if ts[p] & ts[q_] & a == 0:
                        return False
        return True

    def search(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetError(f"column search exceeded budget {budget}",
                              estimated_cost=nodes)
        if pos == len(choices):
            return True
        a, cols = choices[pos]
        for c in cols:
            comps = [i for i in range(m) if (c >> (m - 1 - i)) & 1]
            if all(admissible(i, a) for i in comps):
                saved = [meets[i] for i in comps]
                for i in comps:
                    true_sets[i].append(a)
                    meets[i] &= a
                if search(pos + 1):
                    return True
                for i, sv in zip(comps, saved):
                    true_sets[i].pop()
                    meets[i] = sv
        return False

    return search(0)


def u2_uinf_generation_equality(kset: FunctionSet, m: int,
                                budget: int = DEFAULT_BUDGET) -> CheckReport:
    """Compare the generated classes with rank-2 source and unbounded-rank
    versus trivial target at one output arity; they must coincide."""
    for fn in kset.functions():
        _check_zero_preserving(fn)
    stats = {"output_arity": m, "generators": kset.size()}
    if kset.is_empty():
        return CheckReport("u2-uinf-generation-equality", PASS,
                           {**stats, "members": 0})
    g = right_compose(kset, "U2", m, budget)          # = the (U2, Ic) closure
    lhs = left_close(g, "Uinf", budget=budget)        # exact for m <= 4
    stats["members"] = g.size()
    if lhs == g:
        return CheckReport("u2-uinf-generation-equality", PASS, stats)
    extra = sorted(set(lhs.tables(m)) - set(g.tables(m)))
    witness = bf.to_literal(BooleanFunction(m, extra[0]))
    return CheckReport(
        "u2-uinf-generation-equality", FAIL, stats,
        counterexample={"function": witness,
                        "side": "in (U2,Uinf) closure only"})


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def to_dot(h: Hypergraph, name: str = "G") -> str:
    """Rank-2 graphs as plain graphs, higher ranks as bipartite incidence."""
    labels = {i: "".join(str(b) for b in BitTuple.from_index(h.width, v).bits)
              for i, v in enumerate(h.vertices)}
    lines = [f"graph {name} {{"]
    for i in sorted(labels):
        lines.append(f'  v{i} [label="{labels[i]}"];')
    if all(len(e) == 2 for e in h.edges):
        for e in h.edges:
            a, b = sorted(e)
            lines.append(f"  v{a} -- v{b};")
    else:
        for j, e in enumerate(h.edges):
            lines.append(f'  e{j} [shape=box,label="e{j}"];')
            for i in sorted(e):
                lines.append(f"  e{j} -- v{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
