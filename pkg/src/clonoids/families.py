"""Explicit function families and witness constructions.

The two indexed families:

* ``pippenger_f(n)``: true exactly on the tuples of Hamming weight 1 and
  n-1 (the points e_i and their complements), n >= 3.
* ``pippenger_q(n)``: true exactly on the tuples of weight 1 and the
  all-ones tuple, n >= 3.

The lift constructions turn an arbitrary function into a monotone,
0- and 1-preserving, 1-separating function from which the original can
be recovered by composing with projections, negated projections,
constants or a disjunction; they are what make whole classes reachable
from a single generator.  ``build_theta`` composes a family member with
linear inner maps and a conjunction to produce the member two indices
up.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from . import bf
from .bf import (BooleanFunction, DEFAULT_ARITY_CAP, DomainError, compose,
                 const, full_mask, neg_proj, proj)


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # "pippengerF" | "pippengerQ"
    index: int

    def __post_init__(self):
        if self.kind not in ("pippengerF", "pippengerQ"):
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.index < 3:
            raise DomainError(f"family index must be >= 3, got {self.index}")

    def build(self, arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
        fn = pippenger_f if self.kind == "pippengerF" else pippenger_q
        return fn(self.index, arity_cap)


def _weight_indicator(n: int, weights: Iterable[int]) -> BooleanFunction:
    ws = set(weights)
    t = 0
    for a in range(1 << n):
        if bin(a).count("1") in ws:
            t |= 1 << a
    return BooleanFunction(n, t)


def pippenger_f(n: int, arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    if n < 3 or n > arity_cap:
        raise DomainError(f"pippenger_f needs 3 <= n <= {arity_cap}, got {n}")
    return _weight_indicator(n, (1, n - 1))


def pippenger_q(n: int, arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    if n < 3 or n > arity_cap:
        raise DomainError(f"pippenger_q needs 3 <= n <= {arity_cap}, got {n}")
    return _weight_indicator(n, (1, n))


def join_all(m: int) -> BooleanFunction:
    """x1 v ... v xm."""
    return BooleanFunction(m, full_mask(m) ^ 1)


def parity_of(n: int, coords: Iterable[int]) -> BooleanFunction:
    """Sum mod 2 of the given coordinates (1-based)."""
    mask = 0
    for i in coords:
        if not 1 <= i <= n:
            raise DomainError(f"coordinate {i} not in 1..{n}")
        mask |= 1 << (n - i)
    t = 0
    for a in range(1 << n):
        if bin(a & mask).count("1") & 1:
            t |= 1 << a
    return BooleanFunction(n, t)


# ---------------------------------------------------------------------------
# lifts into McUinf
# ---------------------------------------------------------------------------


def _check_lift_arity(m: int, cap: int) -> None:
    if m > cap:
        raise DomainError(f"lifted arity {m} exceeds cap {cap}")


def witness_m(phi: BooleanFunction,
              arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """Lift phi to arity m+2: 1 when c = d = 1, phi(a) when c = 1 and
    d = 0, else 0 (c, d are the two extra arguments).

    For monotone phi the lift is monotone, preserves both constants and
    is 1-separating (all true points share c = 1), and
    phi = lift(pr_1, ..., pr_m, 1, 0).
    """
    m = phi.arity
    _check_lift_arity(m + 2, arity_cap)
    t = 0
    for a in range(1 << (m + 2)):
        c, d = (a >> 1) & 1, a & 1
        head = a >> 2
        if c and d:
            v = 1
        elif c:
            v = phi.value_at(head)
        else:
            v = 0
        t |= v << a
    return BooleanFunction(m + 2, t)


def witness_mneg(phi: BooleanFunction,
                 arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """As witness_m but evaluating phi on complemented arguments, so an
    antitone phi yields a monotone lift; phi = lift(!pr_1, ..., !pr_m, 1, 0)."""
    m = phi.arity
    _check_lift_arity(m + 2, arity_cap)
    t = 0
    head_mask = (1 << m) - 1
    for a in range(1 << (m + 2)):
        c, d = (a >> 1) & 1, a & 1
        head = a >> 2
        if c and d:
            v = 1
        elif c:
            v = phi.value_at(head ^ head_mask)
        else:
            v = 0
        t |= v << a
    return BooleanFunction(m + 2, t)


def witness_all(phi: BooleanFunction,
                arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """Lift an arbitrary phi (arity n) to a 2n+2-ary function:

    value 1      if c = 1 and (d = 1 or the first 2n arguments have
                 weight > n),
    phi(a)       if c = 1, d = 0 and b is the complement of a,
    value 0      otherwise,

    where the input is (a, b, c, d).  The lift is monotone regardless of
    phi and phi = lift(pr_1, .., pr_n, !pr_1, .., !pr_n, 1, 0).
    """
    n = phi.arity
    _check_lift_arity(2 * n + 2, arity_cap)
    t = 0
    bmask = (1 << n) - 1
    for x in range(1 << (2 * n + 2)):
        c, d = (x >> 1) & 1, x & 1
        ab = x >> 2
        a, b = ab >> n, ab & bmask
        w = bin(ab).count("1")
        if c and (d or w > n):
            v = 1
        elif c and not d and b == a ^ bmask:
            v = phi.value_at(a)
        else:
            v = 0
        t |= v << x
    return BooleanFunction(2 * n + 2, t)


def witness_ox(phi: BooleanFunction,
               arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """Lift phi (arity m) to arity 2m+1:

    phi(a)   if the second block equals the complement of the first and
             the last argument is 1,
    1        if the first 2m arguments have weight > m and the last is 1,
    0        otherwise.

    Monotone for every phi; phi is recovered by plugging projections,
    the beta helpers (complements away from the zero tuple) and a
    disjunction, or projections, negated projections and the constant 1.
    """
    m = phi.arity
    _check_lift_arity(2 * m + 1, arity_cap)
    t = 0
    bmask = (1 << m) - 1
    for x in range(1 << (2 * m + 1)):
        last = x & 1
        ab = x >> 1
        a, b = ab >> m, ab & bmask
        if last and b == a ^ bmask:
            v = phi.value_at(a)
        elif last and bin(ab).count("1") > m:
            v = 1
        else:
            v = 0
        t |= v << x
    return BooleanFunction(2 * m + 1, t)


def gate_by_last(phi: BooleanFunction,
                 arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """Lift phi to arity m+1: phi(a) when the last argument is 1, else 0.

    phi = lift(pr_1, ..., pr_m, x1 v ... v xm) for 0-preserving phi, and
    phi = lift(pr_1, ..., pr_m, 1) in general.
    """
    m = phi.arity
    _check_lift_arity(m + 1, arity_cap)
    t = 0
    for a in range(1 << (m + 1)):
        if a & 1:
            t |= phi.value_at(a >> 1) << a
    return BooleanFunction(m + 1, t)


def gate_by_last_negated(phi: BooleanFunction,
                         arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """Lift phi to arity m+1: phi(complement of a) when the last argument
    is 1, else 0; phi = lift(!pr_1, ..., !pr_m, 1)."""
    m = phi.arity
    _check_lift_arity(m + 1, arity_cap)
    t = 0
    head_mask = (1 << m) - 1
    for a in range(1 << (m + 1)):
        if a & 1:
            t |= phi.value_at((a >> 1) ^ head_mask) << a
    return BooleanFunction(m + 1, t)


# ---------------------------------------------------------------------------
# witness pairs and the alpha/beta helpers
# ---------------------------------------------------------------------------


def increasing_pair(f: BooleanFunction) -> Optional[tuple[int, int]]:
    """First pair of input indices u < v (as masks) with f(u) = 0 < 1 = f(v)."""
    return _witness_pair(f, 0, 1)


def decreasing_pair(f: BooleanFunction) -> Optional[tuple[int, int]]:
    """First u < v with f(u) = 1 > 0 = f(v)."""
    return _witness_pair(f, 1, 0)


def _witness_pair(f, want_low, want_high):
    size = 1 << f.arity
    for v in range(size):
        for u in range(size):
            if u != v and u & v == u:  # u < v in the pointwise order
                if f.value_at(u) == want_low and f.value_at(v) == want_high:
                    return (u, v)
    return None


def substitution_for_pair(u: int, v: int, n: int, m: int,
                          i: int) -> list[BooleanFunction]:
    """Inner functions freezing coordinates to the pair (u, v): constants
    where u and v agree, the i-th m-ary projection where they differ."""
    inner = []
    for j in range(1, n + 1):
        bit_u = (u >> (n - j)) & 1
        bit_v = (v >> (n - j)) & 1
        if bit_u == bit_v:
            inner.append(const(m, bit_u))
        else:
            inner.append(proj(m, i))
    return inner


def alpha_beta(f: BooleanFunction) -> tuple[BooleanFunction,
                                            Callable[[int, int], BooleanFunction]]:
    """The binary helper alpha and the beta family for a 0-preserving,
    non-monotone f.

    alpha is f with coordinates frozen along a witness pair u < v with
    f(u) = 1, f(v) = 0: positions where u has 1 read the first argument,
    positions where only v has 1 read the second, the rest are 0.  Then
    alpha(0,0) = 0, alpha(1,0) = 1, alpha(1,1) = 0, and
    beta(m, i) = alpha(x1 v ... v xm, x_i) equals the complement of x_i
    except at the zero tuple, where it is 0.
    """
    if f.table & 1:
        raise DomainError("alpha_beta needs a 0-preserving function")
    pair = decreasing_pair(f)
    if pair is None:
        raise DomainError("alpha_beta needs a witness pair u < v with "
                          "f(u) = 1, f(v) = 0 (f must not be monotone)")
    u, v = pair
    n = f.arity
    inner = []
    for j in range(1, n + 1):
        bit_u = (u >> (n - j)) & 1
        bit_v = (v >> (n - j)) & 1
        if bit_u:
            inner.append(proj(2, 1))
        elif bit_v:
            inner.append(proj(2, 2))
        else:
            inner.append(const(2, 0))
    alpha = compose(f, inner)

    def beta(m: int, i: int) -> BooleanFunction:
        return compose(alpha, [join_all(m), proj(m, i)])

    return alpha, beta


# ---------------------------------------------------------------------------
# the two-indices-up construction
# ---------------------------------------------------------------------------


def build_gs(n: int, s: Sequence[int]) -> list[BooleanFunction]:
    """Inner maps for one 3-subset s of {1..n+2}: the n+2-ary projections
    onto the complement of s in ascending order, followed by the parity
    of the coordinates in s."""
    if n < 5:
        raise DomainError(f"construction needs n >= 5, got {n}")
    sset = set(s)
    if len(sset) != 3 or not sset <= set(range(1, n + 3)):
        raise DomainError(f"s must be a 3-subset of 1..{n + 2}, got {s!r}")
    keep = [i for i in range(1, n + 3) if i not in sset]
    inner = [proj(n + 2, i) for i in keep]
    inner.append(parity_of(n + 2, sorted(sset)))
    return inner


def theta_of(base: BooleanFunction,
             arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """The conjunction construction applied to an arbitrary n-ary base:
    AND over all 3-subsets s of {1..n+2} of base composed with the
    corresponding inner maps."""
    n = base.arity
    if n + 2 > arity_cap:
        raise DomainError(f"output arity {n + 2} exceeds cap {arity_cap}")
    table = full_mask(n + 2)
    for s in combinations(range(1, n + 3), 3):
        phi_s = compose(base, build_gs(n, s))
        table &= phi_s.table
    return BooleanFunction(n + 2, table)


def build_theta(kind: str, n: int,
                arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """theta_of applied to the family member of index n; equals the
    member of index n+2."""
    return theta_of(FamilySpec(kind, n).build(arity_cap), arity_cap)
