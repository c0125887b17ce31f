"""Bit-packed Boolean functions and tuples.

Conventions used everywhere in this package:

* A tuple (a1, ..., an) is identified with the integer index
  sum(ai * 2**(n-i)), i.e. a1 is the most significant bit.  This packing
  makes an input index usable directly as a coordinate mask, so the
  pointwise order on tuples is the bitwise-subset order on indices and
  the coordinatewise meet/join are ``&``/``|``.
* A truth table is an integer whose bit j (least significant first)
  holds the function value at input index j.  The text form is
  ``<arity>:<bits>`` with 2**arity characters written left to right from
  index 0, or ``<arity>:x<HEX>`` where the most significant nibble of
  the hex string covers indices 0-3.

Both conventions are load-bearing: hashing, canonical ordering, file
formats and the CLI all rely on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

DEFAULT_ARITY_CAP = 16


class ArityMismatchError(ValueError):
    """Operands disagree on arity/width."""


class DomainError(ValueError):
    """Argument outside the operation's domain (bad index, arity cap, ...)."""


class ParseError(ValueError):
    """Malformed truth-table literal; carries the offending position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _check_arity(n: int, cap: int = DEFAULT_ARITY_CAP) -> None:
    if n < 1:
        raise DomainError(f"arity must be >= 1, got {n}")
    if n > cap:
        raise DomainError(f"arity {n} exceeds cap {cap}")


@dataclass(frozen=True)
class BitTuple:
    """An element of {0,1}^n, n >= 1."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) < 1:
            raise DomainError("width must be >= 1")
        if any(b not in (0, 1) for b in self.bits):
            raise DomainError(f"components must be 0/1, got {self.bits}")

    @property
    def width(self) -> int:
        return len(self.bits)

    def complement(self) -> "BitTuple":
        return BitTuple(tuple(1 - b for b in self.bits))

    def index(self) -> int:
        """Integer index of the tuple, first component most significant."""
        i = 0
        for b in self.bits:
            i = (i << 1) | b
        return i

    @staticmethod
    def from_index(width: int, index: int) -> "BitTuple":
        _check_arity(width)
        if not 0 <= index < (1 << width):
            raise DomainError(f"index {index} out of range for width {width}")
        return BitTuple(tuple((index >> (width - i)) & 1 for i in range(1, width + 1)))

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"


def weight(t: BitTuple) -> int:
    """Hamming weight: the number of 1 components."""
    return sum(t.bits)


def distance(s: BitTuple, t: BitTuple) -> int:
    """Hamming distance; equals the weight of the componentwise sum mod 2."""
    if s.width != t.width:
        raise ArityMismatchError(f"width mismatch: {s.width} vs {t.width}")
    return sum(a != b for a, b in zip(s.bits, t.bits))


def char_tuple(n: int, indices: Iterable[int]) -> BitTuple:
    """Characteristic n-tuple of a subset of {1..n} (1-based positions)."""
    _check_arity(n)
    s = set(indices)
    for i in s:
        if not 1 <= i <= n:
            raise DomainError(f"position {i} not in 1..{n}")
    return BitTuple(tuple(1 if i in s else 0 for i in range(1, n + 1)))


@dataclass(frozen=True)
class BooleanFunction:
    """An n-ary Boolean function as (arity, bit-packed truth table)."""

    arity: int
    table: int

    def __post_init__(self):
        _check_arity(self.arity)
        if not 0 <= self.table < (1 << (1 << self.arity)):
            raise DomainError(
                f"table does not fit 2^{self.arity} bits: {self.table:#x}"
            )

    # -- raw access ---------------------------------------------------

    def value_at(self, index: int) -> int:
        return (self.table >> index) & 1

    def bit_string(self) -> str:
        """Table bits left to right from index 0; the canonical sort key."""
        size = 1 << self.arity
        return format(_bit_reverse(self.table, size), f"0{size}b")

    def true_indices(self) -> list[int]:
        size = 1 << self.arity
        return [i for i in range(size) if (self.table >> i) & 1]

    def true_points(self) -> list[BitTuple]:
        return [BitTuple.from_index(self.arity, i) for i in self.true_indices()]

    def false_indices(self) -> list[int]:
        size = 1 << self.arity
        return [i for i in range(size) if not (self.table >> i) & 1]

    def canonical_key(self) -> tuple[int, str]:
        return (self.arity, self.bit_string())

    def __str__(self) -> str:
        return to_literal(self)


def _bit_reverse(t: int, size: int) -> int:
    r = 0
    for _ in range(size):
        r = (r << 1) | (t & 1)
        t >>= 1
    return r


# ---------------------------------------------------------------------------
# constructors for the named functions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def proj_table(n: int, i: int) -> int:
    """Table of the i-th n-ary projection (1-based i)."""
    if not 1 <= i <= n:
        raise DomainError(f"projection index {i} not in 1..{n}")
    t = 0
    for a in range(1 << n):
        if (a >> (n - i)) & 1:
            t |= 1 << a
    return t


def proj(n: int, i: int) -> BooleanFunction:
    return BooleanFunction(n, proj_table(n, i))


def neg_proj(n: int, i: int) -> BooleanFunction:
    return BooleanFunction(n, full_mask(n) ^ proj_table(n, i))


def const(n: int, value: int) -> BooleanFunction:
    if value not in (0, 1):
        raise DomainError(f"constant value must be 0/1, got {value}")
    return BooleanFunction(n, full_mask(n) if value else 0)


def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


ID = BooleanFunction(1, 0b10)       # 1:01
NOT = BooleanFunction(1, 0b01)      # 1:10
AND = BooleanFunction(2, 0b1000)    # 2:0001
OR = BooleanFunction(2, 0b1110)     # 2:0111
XOR = BooleanFunction(2, 0b0110)    # 2:0110
XNOR = BooleanFunction(2, 0b1001)   # 2:1001
XOR3 = BooleanFunction(3, 0x96)     # 3:01101001, ternary parity


# ---------------------------------------------------------------------------
# elementary operations
# ---------------------------------------------------------------------------


def evaluate(f: BooleanFunction, t: BitTuple) -> int:
    if t.width != f.arity:
        raise ArityMismatchError(f"arity {f.arity} function applied to width {t.width}")
    return f.value_at(t.index())


def compose(f: BooleanFunction, gs: Sequence[BooleanFunction]) -> BooleanFunction:
    """f(g1, ..., gn) where n = arity(f) and all gi share one arity."""
    if len(gs) != f.arity:
        raise ArityMismatchError(f"{f.arity} inner functions required, got {len(gs)}")
    m = gs[0].arity
    if any(g.arity != m for g in gs):
        raise ArityMismatchError("inner functions disagree on arity")
    return BooleanFunction(m, compose_tables(f.table, f.arity, [g.table for g in gs], m))


def compose_tables(ft: int, n: int, gts: Sequence[int], m: int) -> int:
    """Composite truth table via the minterm expansion of the outer: the
    composite is the union, over true rows v of the outer, of the inputs
    where every inner table matches v.  Bitwise on whole tables, so the
    cost scales with the outer's size rather than with 2^m."""
    mask = full_mask(m)
    out = 0
    ones = bin(ft).count("1")
    if 2 * ones > (1 << n):  # expand the smaller side
        return mask ^ compose_tables(ft ^ full_mask(n), n, gts, m)
    for v in range(1 << n):
        if (ft >> v) & 1:
            term = mask
            for i, gt in enumerate(gts):
                term &= gt if (v >> (n - 1 - i)) & 1 else mask ^ gt
                if not term:
                    break
            out |= term
    return out


def negate(f: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(f.arity, f.table ^ full_mask(f.arity))


def inner_negate(f: BooleanFunction) -> BooleanFunction:
    """f with all inputs complemented; permutes the table by index complement."""
    return BooleanFunction(f.arity, inner_negate_table(f.table, f.arity))


def inner_negate_table(t: int, n: int) -> int:
    size = 1 << n
    out = 0
    for a in range(size):
        if (t >> a) & 1:
            out |= 1 << (size - 1 - a)
    return out


def dual(f: BooleanFunction) -> BooleanFunction:
    """Outputs negated and inputs complemented: dual = negate o inner_negate."""
    return negate(inner_negate(f))


def is_minorant(f: BooleanFunction, g: BooleanFunction) -> bool:
    """True iff f <= g pointwise (every true point of f is one of g)."""
    if f.arity != g.arity:
        raise ArityMismatchError(f"arity mismatch: {f.arity} vs {g.arity}")
    return f.table & ~g.table == 0


def alt_number(f: BooleanFunction) -> int:
    """Length of the longest chain in {0,1}^n on which f's values alternate.

    Dynamic program over the subset order: longest[u] is the longest
    alternating chain ending at u.  Cost 3^n, fine for the arities this
    package works at.
    """
    n = f.arity
    t = f.table
    longest = [0] * (1 << n)
    for u in _indices_by_weight(n):
        fu = (t >> u) & 1
        best = 0
        v = (u - 1) & u
        while True:
            if ((t >> v) & 1) != fu and longest[v] + 1 > best:
                best = longest[v] + 1
            if v == 0:
                break
            v = (v - 1) & u
        longest[u] = best
    return max(longest)


@lru_cache(maxsize=None)
def _indices_by_weight(n: int) -> tuple:
    return tuple(sorted(range(1 << n), key=lambda u: (bin(u).count("1"), u)))


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------


def parse(text: str, arity_cap: int = DEFAULT_ARITY_CAP) -> BooleanFunction:
    """Parse ``<arity>:<bits>`` or ``<arity>:x<HEX>``."""
    colon = text.find(":")
    if colon < 0:
        raise ParseError("missing ':' separator", len(text))
    head = text[:colon]
    if not head.isdigit():
        raise ParseError(f"arity is not a number: {head!r}", 0)
    n = int(head)
    if n < 1:
        raise ParseError("arity must be >= 1", 0)
    if n > arity_cap:
        raise ParseError(f"arity {n} exceeds cap {arity_cap}", 0)
    size = 1 << n
    body = text[colon + 1:]
    if body.startswith("x") or body.startswith("X"):
        return BooleanFunction(n, _parse_hex(body[1:], size, colon + 2))
    if len(body) != size:
        raise ParseError(
            f"expected {size} table bits, got {len(body)}", colon + 1 + len(body)
        )
    table = 0
    for j, ch in enumerate(body):
        if ch == "1":
            table |= 1 << j
        elif ch != "0":
            raise ParseError(f"invalid table character {ch!r}", colon + 1 + j)
    return BooleanFunction(n, table)


def _parse_hex(digits: str, size: int, offset: int) -> int:
    ndigits = -(-size // 4)
    if len(digits) != ndigits:
        raise ParseError(
            f"expected {ndigits} hex digits, got {len(digits)}", offset + len(digits)
        )
    table = 0
    for d, ch in enumerate(digits):
        try:
            v = int(ch, 16)
        except ValueError:
            raise ParseError(f"invalid hex digit {ch!r}", offset + d) from None
        for b in range(4):
            j = 4 * d + b  # index 4d is the most significant bit of the nibble
            if (v >> (3 - b)) & 1:
                if j >= size:
                    raise ParseError("nonzero padding bits in hex form", offset + d)
                table |= 1 << j
    return table


def to_literal(f: BooleanFunction) -> str:
    """Canonical binary text form."""
    size = 1 << f.arity
    return f"{f.arity}:" + "".join("1" if (f.table >> j) & 1 else "0" for j in range(size))


def to_hex_literal(f: BooleanFunction) -> str:
    size = 1 << f.arity
    ndigits = -(-size // 4)
    digits = []
    for d in range(ndigits):
        v = 0
        for b in range(4):
            j = 4 * d + b
            if j < size and (f.table >> j) & 1:
                v |= 1 << (3 - b)
        digits.append(format(v, "X"))
    return f"{f.arity}:x" + "".join(digits)


def all_tables(n: int) -> Iterator[int]:
    """All 2^(2^n) truth tables of arity n, ascending."""
    return iter(range(1 << (1 << n)))


def canonical_sorted(fs: Iterable[BooleanFunction]) -> list[BooleanFunction]:
    """Sorted by (arity, table bits lexicographic), duplicates removed."""
    return sorted(set(fs), key=BooleanFunction.canonical_key)
