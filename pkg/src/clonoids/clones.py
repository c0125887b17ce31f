"""The named clones of Boolean functions and their lattice.

Every clone that this package knows about is listed in ``REGISTRY``,
keyed by an ASCII id (``Istar``, ``Omega1``, ``U2``, ``McUinf``, ...).
Membership predicates are the ground truth; generator lists are
documentation plus acceleration, and the registry self-test asserts at
small arity that the two agree wherever a generator list is vetted.
The 1-/0-separating families and a few classes without convenient
finite generating sets are deliberately left predicate-only.

The covering relation of the clone lattice is encoded explicitly in
``COVER_EDGES`` (separating ranks other than 2, 3 and infinity are not
represented, so the two dashed rank steps compress infinite chains).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Optional, Sequence

from . import bf
from .bf import BooleanFunction, DomainError, full_mask, proj_table
from .reports import CheckReport, FAIL, PASS

INF = math.inf

#: Predicate-filter enumeration is refused above this arity (2^(2^m) blowup).
FILTER_ARITY_LIMIT = 4


class BudgetError(RuntimeError):
    """Raised when an enumeration would exceed its evaluation budget."""

    def __init__(self, message: str, estimated_cost: Optional[int] = None):
        super().__init__(message)
        self.estimated_cost = estimated_cost


# ---------------------------------------------------------------------------
# membership primitives on (arity, table) pairs
# ---------------------------------------------------------------------------


def preserves_zero(n: int, t: int) -> bool:
    return t & 1 == 0


def preserves_one(n: int, t: int) -> bool:
    return (t >> ((1 << n) - 1)) & 1 == 1


@lru_cache(maxsize=None)
def _coord_masks(n: int) -> tuple:
    """For each index-bit position p: the mask of table bits whose input has 0 at p."""
    size = 1 << n
    masks = []
    for p in range(n):
        m = 0
        for a in range(size):
            if not (a >> p) & 1:
                m |= 1 << a
        masks.append((p, m))
    return tuple(masks)


def is_monotone(n: int, t: int) -> bool:
    for p, mask0 in _coord_masks(n):
        low = t & mask0
        high = (t >> (1 << p)) & mask0
        if low & ~high:
            return False
    return True


def is_self_dual(n: int, t: int) -> bool:
    return t == full_mask(n) ^ bf.inner_negate_table(t, n)


def is_affine(n: int, t: int) -> bool:
    # affine iff every directional derivative is constant
    for p, mask0 in _coord_masks(n):
        d = (t ^ (t >> (1 << p))) & mask0
        if d != 0 and d != mask0:
            return False
    return True


def true_masks(n: int, t: int) -> list[int]:
    """True points as coordinate masks (the input indices themselves)."""
    return [a for a in range(1 << n) if (t >> a) & 1]


def is_one_separating(n: int, t: int, k) -> bool:
    """No <= k true points have coordinatewise meet equal to the zero tuple."""
    trues = true_masks(n, t)
    if not trues:
        return True
    if trues[0] == 0:  # the zero tuple itself is a true point
        return False
    meet_all = trues[0]
    for a in trues[1:]:
        meet_all &= a
    if meet_all != 0:
        return True
    if k == INF:
        return False
    # zero-meet sets are upward closed, so only sizes 2..k matter
    for size in range(2, int(k) + 1):
        for combo in combinations(trues, size):
            m = combo[0]
            for a in combo[1:]:
                m &= a
            if m == 0:
                return False
    return True


def is_zero_separating(n: int, t: int, k) -> bool:
    return is_one_separating(n, full_mask(n) ^ bf.inner_negate_table(t, n), k)


def min_zero_cover(n: int, t: int):
    """Smallest number of true points whose meet is the zero tuple (inf if none).

    f is 1-separating of rank k exactly when this minimum exceeds k.
    """
    trues = true_masks(n, t)
    if not trues:
        return INF
    meet_all = trues[0]
    for a in trues[1:]:
        meet_all &= a
    if meet_all != 0:
        return INF
    if trues[0] == 0:
        return 1
    for size in range(2, len(trues) + 1):
        for combo in combinations(trues, size):
            m = combo[0]
            for a in combo[1:]:
                m &= a
            if m == 0:
                return size
    return INF  # unreachable: global meet was zero


def is_projection(n: int, t: int) -> bool:
    return any(t == proj_table(n, i) for i in range(1, n + 1))


def is_neg_projection(n: int, t: int) -> bool:
    return any(t == full_mask(n) ^ proj_table(n, i) for i in range(1, n + 1))


def is_constant(n: int, t: int) -> bool:
    return t == 0 or t == full_mask(n)


def _join_support(n: int, t: int) -> Optional[int]:
    """If f is a disjunction of variables (or a constant), the support mask."""
    if is_constant(n, t):
        return None
    supp = 0
    for i in range(1, n + 1):
        if (t >> (1 << (n - i))) & 1:  # value at e_i
            supp |= 1 << (n - i)
    built = 0
    for a in range(1, 1 << n):
        if a & supp:
            built |= 1 << a
    return supp if built == t else -1


def in_join_clone(n: int, t: int) -> bool:
    """Member of the clone generated by disjunction and both constants."""
    s = _join_support(n, t)
    return s is None or s != -1


def in_meet_clone(n: int, t: int) -> bool:
    if is_constant(n, t):
        return True
    supp = 0
    for i in range(1, n + 1):
        # value at the complement of e_i
        if not (t >> (full_mask_index(n) ^ (1 << (n - i)))) & 1:
            supp |= 1 << (n - i)
    if supp == 0:
        return False
    built = 0
    for a in range(1 << n):
        if a & supp == supp:
            built |= 1 << a
    return built == t


def full_mask_index(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CloneDescriptor:
    id: str
    display: str
    predicate: Callable[[int, int], bool]
    generators: tuple[str, ...]          # truth-table literals
    dual_id: str
    generator_exact: bool
    part_size: Optional[Callable[[int], int]] = None  # |C^(m)| closed form

    def contains(self, f: BooleanFunction) -> bool:
        return self.predicate(f.arity, f.table)

    def generator_functions(self) -> list[BooleanFunction]:
        return [bf.parse(s) for s in self.generators]


def _pred(*conds):
    def p(n, t):
        return all(c(n, t) for c in conds)
    return p


_P0 = preserves_zero
_P1 = preserves_one


def _make_registry() -> dict[str, CloneDescriptor]:
    lit_and, lit_or, lit_xor, lit_xnor = "2:0001", "2:0111", "2:0110", "2:1001"
    lit_not, lit_c0, lit_c1, lit_xor3 = "1:10", "1:00", "1:11", "3:01101001"

    def sz(fn):
        return fn

    entries = [
        # id, display, predicate, generators, dual, generator_exact, |C^(m)|
        ("Ic", "Ic", _pred(is_projection), (), "Ic", True, sz(lambda m: m)),
        ("I0", "I0", lambda n, t: is_projection(n, t) or t == 0,
         (lit_c0,), "I1", True, sz(lambda m: m + 1)),
        ("I1", "I1", lambda n, t: is_projection(n, t) or t == full_mask(n),
         (lit_c1,), "I0", True, sz(lambda m: m + 1)),
        ("I", "I", lambda n, t: is_projection(n, t) or is_constant(n, t),
         (lit_c0, lit_c1), "I", True, sz(lambda m: m + 2)),
        ("Istar", "I*", lambda n, t: is_projection(n, t) or is_neg_projection(n, t),
         (lit_not,), "Istar", True, sz(lambda m: 2 * m)),
        ("Omega1", "Omega(1)",
         lambda n, t: is_projection(n, t) or is_neg_projection(n, t) or is_constant(n, t),
         (lit_not, lit_c0), "Omega1", True, sz(lambda m: 2 * m + 2)),
        ("Vc", "Vc", _pred(in_join_clone, _P0, _P1), (lit_or,), "Lambdac", True,
         sz(lambda m: (1 << m) - 1)),
        ("V0", "V0", _pred(in_join_clone, _P0), (lit_or, lit_c0), "Lambda1", True,
         sz(lambda m: 1 << m)),
        ("V1", "V1", _pred(in_join_clone, _P1), (lit_or, lit_c1), "Lambda0", True,
         sz(lambda m: 1 << m)),
        ("V", "V", in_join_clone, (lit_or, lit_c0, lit_c1), "Lambda", True,
         sz(lambda m: (1 << m) + 1)),
        ("Lambdac", "Lambdac", _pred(in_meet_clone, _P0, _P1), (lit_and,), "Vc", True,
         sz(lambda m: (1 << m) - 1)),
        ("Lambda0", "Lambda0", _pred(in_meet_clone, _P0), (lit_and, lit_c0), "V1", True,
         sz(lambda m: 1 << m)),
        ("Lambda1", "Lambda1", _pred(in_meet_clone, _P1), (lit_and, lit_c1), "V0", True,
         sz(lambda m: 1 << m)),
        ("Lambda", "Lambda", in_meet_clone, (lit_and, lit_c0, lit_c1), "V", True,
         sz(lambda m: (1 << m) + 1)),
        ("Lc", "Lc", _pred(is_affine, _P0, _P1), (lit_xor3,), "Lc", True,
         sz(lambda m: 1 << (m - 1))),
        ("L0", "L0", _pred(is_affine, _P0), (lit_xor,), "L1", True,
         sz(lambda m: 1 << m)),
        ("L1", "L1", _pred(is_affine, _P1), (lit_xnor,), "L0", True,
         sz(lambda m: 1 << m)),
        ("LS", "LS", _pred(is_affine, is_self_dual), (lit_xor3, lit_not), "LS", True,
         sz(lambda m: 1 << m)),
        ("L", "L", is_affine, (lit_xor, lit_c1), "L", True,
         sz(lambda m: 1 << (m + 1))),
        ("SM", "SM", _pred(is_self_dual, is_monotone), (), "SM", False, None),
        ("Sc", "Sc", _pred(is_self_dual, _P0, _P1), (), "Sc", False, None),
        ("S", "S", is_self_dual, (), "S", False,
         sz(lambda m: 1 << ((1 << m) // 2))),
        ("Mc", "Mc", _pred(is_monotone, _P0, _P1), (lit_and, lit_or), "Mc", True, None),
        ("M0", "M0", _pred(is_monotone, _P0), (lit_and, lit_or, lit_c0), "M1", True, None),
        ("M1", "M1", _pred(is_monotone, _P1), (lit_and, lit_or, lit_c1), "M0", True, None),
        ("M", "M", is_monotone, (lit_and, lit_or, lit_c0, lit_c1), "M", True, None),
        ("OI", "OI", _pred(_P0, _P1), (), "OI", False,
         sz(lambda m: 1 << ((1 << m) - 2))),
        ("OX", "OX", _P0, (), "XI", False, sz(lambda m: 1 << ((1 << m) - 1))),
        ("XI", "XI", _P1, (), "OX", False, sz(lambda m: 1 << ((1 << m) - 1))),
        ("All", "All", lambda n, t: True, (), "All", False,
         sz(lambda m: 1 << (1 << m))),
    ]
    for k, tag in ((2, "2"), (3, "3"), (INF, "inf")):
        kk = k  # bind
        entries += [
            (f"U{tag}", f"U{tag}", lambda n, t, kk=kk: is_one_separating(n, t, kk),
             (), f"W{tag}", False, None),
            (f"TcU{tag}", f"TcU{tag}",
             _pred(_P0, _P1, lambda n, t, kk=kk: is_one_separating(n, t, kk)),
             (), f"TcW{tag}", False, None),
            (f"MU{tag}", f"MU{tag}",
             _pred(is_monotone, lambda n, t, kk=kk: is_one_separating(n, t, kk)),
             (), f"MW{tag}", False, None),
            (f"McU{tag}", f"McU{tag}",
             _pred(is_monotone, _P0, _P1, lambda n, t, kk=kk: is_one_separating(n, t, kk)),
             (), f"McW{tag}", False, None),
            (f"W{tag}", f"W{tag}", lambda n, t, kk=kk: is_zero_separating(n, t, kk),
             (), f"U{tag}", False, None),
            (f"TcW{tag}", f"TcW{tag}",
             _pred(_P0, _P1, lambda n, t, kk=kk: is_zero_separating(n, t, kk)),
             (), f"TcU{tag}", False, None),
            (f"MW{tag}", f"MW{tag}",
             _pred(is_monotone, lambda n, t, kk=kk: is_zero_separating(n, t, kk)),
             (), f"MU{tag}", False, None),
            (f"McW{tag}", f"McW{tag}",
             _pred(is_monotone, _P0, _P1, lambda n, t, kk=kk: is_zero_separating(n, t, kk)),
             (), f"McU{tag}", False, None),
        ]
    registry = {}
    for cid, disp, pred, gens, dual_id, exact, size in entries:
        registry[cid] = CloneDescriptor(cid, disp, pred, gens, dual_id, exact, size)
    return registry


REGISTRY: dict[str, CloneDescriptor] = _make_registry()

#: Covering edges (sub, super) of the encoded lattice.  The rank steps
#: inf->3 compress the omitted finite ranks above 3.
COVER_EDGES: tuple[tuple[str, str], ...] = (
    ("Ic", "Istar"), ("Istar", "Omega1"), ("I", "Omega1"), ("Omega1", "L"),
    ("Ic", "I0"), ("I0", "I"), ("Ic", "I1"), ("I1", "I"),
    ("Ic", "Lc"), ("Ic", "SM"),
    ("I0", "L0"), ("I1", "L1"), ("Istar", "LS"),
    ("Ic", "Lambdac"), ("I0", "Lambda0"), ("I1", "Lambda1"), ("I", "Lambda"),
    ("Ic", "Vc"), ("I0", "V0"), ("I1", "V1"), ("I", "V"),
    ("Lambdac", "Lambda0"), ("Lambda0", "Lambda"),
    ("Lambdac", "Lambda1"), ("Lambda1", "Lambda"),
    ("Lambdac", "McUinf"), ("Lambda0", "MUinf"), ("Lambda1", "M1"), ("Lambda", "M"),
    ("Vc", "V0"), ("V0", "V"), ("Vc", "V1"), ("V1", "V"),
    ("Vc", "McWinf"), ("V0", "M0"), ("V1", "MWinf"), ("V", "M"),
    ("McUinf", "TcUinf"), ("TcUinf", "Uinf"), ("McUinf", "MUinf"), ("MUinf", "Uinf"),
    ("McUinf", "McU3"), ("MUinf", "MU3"), ("TcUinf", "TcU3"), ("Uinf", "U3"),
    ("McU3", "TcU3"), ("TcU3", "U3"), ("McU3", "MU3"), ("MU3", "U3"),
    ("McU3", "McU2"), ("MU3", "MU2"), ("TcU3", "TcU2"), ("U3", "U2"),
    ("McU2", "TcU2"), ("TcU2", "U2"), ("McU2", "MU2"), ("MU2", "U2"),
    ("McU2", "Mc"), ("MU2", "M0"), ("TcU2", "OI"), ("U2", "OX"),
    ("McWinf", "TcWinf"), ("TcWinf", "Winf"), ("McWinf", "MWinf"), ("MWinf", "Winf"),
    ("McWinf", "McW3"), ("MWinf", "MW3"), ("TcWinf", "TcW3"), ("Winf", "W3"),
    ("McW3", "TcW3"), ("TcW3", "W3"), ("McW3", "MW3"), ("MW3", "W3"),
    ("McW3", "McW2"), ("MW3", "MW2"), ("TcW3", "TcW2"), ("W3", "W2"),
    ("McW2", "TcW2"), ("TcW2", "W2"), ("McW2", "MW2"), ("MW2", "W2"),
    ("McW2", "Mc"), ("MW2", "M1"), ("TcW2", "OI"), ("W2", "XI"),
    ("SM", "McU2"), ("SM", "McW2"),
    ("Lc", "LS"), ("LS", "L"), ("Lc", "L0"), ("L0", "L"), ("Lc", "L1"), ("L1", "L"),
    ("Lc", "Sc"), ("LS", "S"), ("L0", "OX"), ("L1", "XI"), ("L", "All"),
    ("SM", "Sc"), ("Sc", "S"), ("Sc", "OI"), ("S", "All"),
    ("Mc", "M0"), ("M0", "M"), ("Mc", "M1"), ("M1", "M"),
    ("Mc", "OI"), ("M0", "OX"), ("M1", "XI"), ("M", "All"),
    ("OI", "OX"), ("OX", "All"), ("OI", "XI"), ("XI", "All"),
)


@lru_cache(maxsize=None)
def ancestors(clone_id: str) -> frozenset:
    """All registry clones that include the given one (reflexive)."""
    up: dict[str, set] = {c: set() for c in REGISTRY}
    for sub, sup in COVER_EDGES:
        up[sub].add(sup)
    seen = {clone_id}
    stack = [clone_id]
    while stack:
        for nxt in up[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)


def is_subclone(a: str, b: str) -> bool:
    """a is a subclone of b in the encoded order (reflexive)."""
    _require(a)
    _require(b)
    return b in ancestors(a)


def _require(clone_id: str) -> CloneDescriptor:
    try:
        return REGISTRY[clone_id]
    except KeyError:
        raise DomainError(
            f"unknown clone {clone_id!r}; see list_clones()"
        ) from None


def get(clone_id: str) -> CloneDescriptor:
    return _require(clone_id)


def contains(clone_id: str, f: BooleanFunction) -> bool:
    return _require(clone_id).contains(f)


def dual_clone(clone_id: str) -> CloneDescriptor:
    return REGISTRY[_require(clone_id).dual_id]


def list_clones() -> list[CloneDescriptor]:
    return [REGISTRY[c] for c in sorted(REGISTRY)]


# ---------------------------------------------------------------------------
# arity parts
# ---------------------------------------------------------------------------


def arity_part(clone_id: str, m: int, budget: int = 10**8,
               registry: Optional[dict] = None) -> list[BooleanFunction]:
    """The m-ary part of a clone, canonical order.

    Generator-exact clones are computed as the fixpoint closure of the
    m-ary projections under the generators; the rest fall back to a
    predicate filter over all 2^(2^m) candidates, which is refused for
    m > FILTER_ARITY_LIMIT.
    """
    reg = registry if registry is not None else REGISTRY
    c = reg.get(clone_id)
    if c is None:
        raise DomainError(f"unknown clone {clone_id!r}; see list_clones()")
    if m < 1:
        raise DomainError(f"arity must be >= 1, got {m}")
    if c.generator_exact:
        tables = closure_tables(
            [proj_table(m, i) for i in range(1, m + 1)],
            [(g.arity, g.table) for g in c.generator_functions()],
            m, budget,
        )
    else:
        if m > FILTER_ARITY_LIMIT:
            raise BudgetError(
                f"{clone_id} has no vetted generators; the predicate filter over "
                f"2^(2^{m}) candidates is refused above arity {FILTER_ARITY_LIMIT} "
                f"(cheapest viable strategy: restrict to arity <= {FILTER_ARITY_LIMIT})",
            )
        count = 1 << (1 << m)
        if count > budget:
            raise BudgetError(
                f"predicate filter over {count} candidates exceeds budget {budget} "
                f"(cheapest viable strategy: raise the budget; no generator closure "
                f"is available for {clone_id})",
                estimated_cost=count,
            )
        tables = [t for t in range(count) if c.predicate(m, t)]
    return [BooleanFunction(m, t) for t in sorted_tables(tables, m)]


def sorted_tables(tables: Iterable[int], m: int) -> list[int]:
    size = 1 << m
    return sorted(set(tables), key=lambda t: format(bf._bit_reverse(t, size), f"0{size}b"))


def closure_tables(seed: Sequence[int], ops: Sequence[tuple[int, int]], m: int,
                   budget: int = 10**8) -> set[int]:
    """Fixpoint of seed tables under applying each (arity, table) op.

    This is the m-ary part of the clone generated by the ops: the
    subuniverse of the 2^m-th power of ({0,1}, ops) generated by the
    seed.  Semi-naive rounds: each round only applies the ops to tuples
    touching at least one member discovered in the previous round.
    """
    members = set(seed)
    fresh = set(seed)
    appliers = [(r, _op_applier(op_t, r, m)) for r, op_t in ops]
    spent = 0
    while fresh:
        added = set()
        all_sorted = sorted(members)
        old_sorted = sorted(members - fresh)
        fresh_sorted = sorted(fresh)
        for r, apply_op in appliers:
            # tuples with at least one fresh entry, first fresh one at p
            for p in range(r):
                pools = [old_sorted] * p + [fresh_sorted] \
                    + [all_sorted] * (r - 1 - p)
                for combo in product(*pools):
                    spent += 1
                    if spent > budget:
                        raise BudgetError(
                            f"closure exceeded budget {budget} with "
                            f"{len(members)} members",
                            estimated_cost=spent,
                        )
                    t = apply_op(combo)
                    if t not in members:
                        added.add(t)
        members |= added
        fresh = added
    return members


def _op_applier(op_t: int, r: int, m: int):
    """Pointwise application of one op to m-ary tables, specialized for
    the shapes the named generators take."""
    mask = full_mask(m)
    if r == 1:
        if op_t == 0b10:                       # identity
            return lambda c: c[0]
        if op_t == 0b01:                       # negation
            return lambda c: mask ^ c[0]
        if op_t == 0b00:
            return lambda c: 0
        if op_t == 0b11:
            return lambda c: mask
    if r == 2:
        if op_t == 0b1000:                     # conjunction
            return lambda c: c[0] & c[1]
        if op_t == 0b1110:                     # disjunction
            return lambda c: c[0] | c[1]
        if op_t == 0b0110:                     # addition
            return lambda c: c[0] ^ c[1]
        if op_t == 0b1001:                     # biconditional
            return lambda c: mask ^ c[0] ^ c[1]
    if r == 3 and op_t == 0x96:                # ternary addition
        return lambda c: c[0] ^ c[1] ^ c[2]
    return lambda c: bf.compose_tables(op_t, r, c, m)


def part_size(clone_id: str, m: int) -> Optional[int]:
    """|C^(m)| by closed form where one is known, else None."""
    c = _require(clone_id)
    return c.part_size(m) if c.part_size else None


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def classify(f: BooleanFunction) -> dict:
    """Invariant vector and the least registry clone containing f."""
    n, t = f.arity, f.table
    record = {
        "preserves_zero": preserves_zero(n, t),
        "preserves_one": preserves_one(n, t),
        "monotone": is_monotone(n, t),
        "self_dual": is_self_dual(n, t),
        "affine": is_affine(n, t),
        "one_separating": {k: is_one_separating(n, t, kk)
                           for k, kk in (("2", 2), ("3", 3), ("inf", INF))},
        "zero_separating": {k: is_zero_separating(n, t, kk)
                            for k, kk in (("2", 2), ("3", 3), ("inf", INF))},
    }
    containing = [c for c in REGISTRY if REGISTRY[c].predicate(n, t)]
    minimal = [c for c in containing
               if not any(o != c and is_subclone(o, c) for o in containing)]
    if len(minimal) != 1:
        raise RuntimeError(
            f"registry order broken: minima {sorted(minimal)} for {bf.to_literal(f)}"
        )
    record["minimal_clone"] = minimal[0]
    return record


def registry_self_test(max_arity: int = 3, budget: int = 10**8,
                       registry: Optional[dict] = None) -> CheckReport:
    """Closure-versus-filter agreement for every generator-exact clone.

    Each generator-exact descriptor must produce, by generator closure,
    exactly the functions its predicate accepts, at every arity up to
    ``max_arity``.  The first mismatch is reported as a counterexample.
    """
    reg = registry if registry is not None else REGISTRY
    checked = 0
    for cid in sorted(reg):
        c = reg[cid]
        if not c.generator_exact:
            continue
        for m in range(1, max_arity + 1):
            by_closure = {f.table for f in arity_part(cid, m, budget, registry=reg)}
            by_filter = {t for t in bf.all_tables(m) if c.predicate(m, t)}
            checked += 1
            if by_closure != by_filter:
                extra = sorted_tables(by_closure - by_filter, m)
                missing = sorted_tables(by_filter - by_closure, m)
                witness = extra[0] if extra else missing[0]
                return CheckReport(
                    check_id="registry-self-test",
                    status=FAIL,
                    statistics={"parts_checked": checked, "max_arity": max_arity},
                    counterexample={
                        "clone": cid,
                        "arity": m,
                        "function": bf.to_literal(BooleanFunction(m, witness)),
                        "side": "closure-only" if extra else "filter-only",
                    },
                )
    return CheckReport(
        check_id="registry-self-test",
        status=PASS,
        statistics={"parts_checked": checked, "max_arity": max_arity},
    )
