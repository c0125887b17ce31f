"""Vectorized enumeration of inner-function tuples.

The heavy computations in this package all have the same shape: an outer
function f of arity m is composed with every tuple (g_1, ..., g_m) drawn
from a fixed list of inner candidates of arity n, and some condition is
evaluated on each composite.  With N candidates that is N^m tuples; this
module walks them in blocks, vectorizing the last few tuple positions
with numpy while the leading positions are enumerated in Python.

Tuples are numbered 0 .. N^m - 1 with g_1 the most significant base-N
digit, so results are reproducible and a tuple index can be decoded back
into its components for counterexample payloads.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

import numpy as np

MAX_BLOCK = 1 << 16


def values_matrix(tables: Sequence[int], n: int) -> np.ndarray:
    """Row r holds the value vector of tables[r] over all 2^n inputs."""
    size = 1 << n
    out = np.zeros((len(tables), size), dtype=np.uint8)
    for r, t in enumerate(tables):
        s = format(t, f"0{size}b")[::-1]  # index 0 first
        out[r] = np.frombuffer(s.encode(), dtype=np.uint8) - ord("0")
    return out


def block_scan(values: np.ndarray, m: int, multipliers: Sequence[int],
               max_block: int = MAX_BLOCK) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (first_tuple_index, S) blocks covering all N^m tuples.

    S[r, p] = sum over positions i of multipliers[i] * values[c_i, p]
    for the tuple with index first_tuple_index + r.  With multipliers
    all 1 this is the composite image weight at each point; with powers
    of two it is the packed inner index fed to an outer table lookup.
    """
    n_cand = values.shape[0]
    suffix = 0
    while suffix < m and n_cand ** (suffix + 1) <= max_block:
        suffix += 1
    prefix = m - suffix
    dtype = np.uint8 if sum(multipliers) * 1 < 256 else np.uint32
    vals = values.astype(dtype)

    suf = np.zeros((1, values.shape[1]), dtype=dtype)
    for i in range(prefix, m):
        suf = (suf[:, None, :] + multipliers[i] * vals[None, :, :]).reshape(
            -1, values.shape[1]
        )
    block = n_cand ** suffix
    if prefix == 0:
        yield 0, suf
        return
    for k, combo in enumerate(product(range(n_cand), repeat=prefix)):
        pre = np.zeros(values.shape[1], dtype=dtype)
        for i, c in enumerate(combo):
            pre += multipliers[i] * vals[c]
        yield k * block, pre[None, :] + suf


def decode_tuple(tuple_index: int, n_cand: int, m: int) -> tuple[int, ...]:
    """Inverse of the tuple numbering: big-endian base-N digits."""
    digits = []
    for _ in range(m):
        digits.append(tuple_index % n_cand)
        tuple_index //= n_cand
    return tuple(reversed(digits))


def pack_rows(truth: np.ndarray) -> list[int]:
    """Pack each 0/1 row into a table integer (bit j = column j)."""
    packed = np.packbits(truth, axis=1, bitorder="little")
    if packed.shape[1] <= 8:
        padded = np.zeros((packed.shape[0], 8), dtype=np.uint8)
        padded[:, : packed.shape[1]] = packed
        return [int(x) for x in padded.view(np.uint64).ravel()]
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def compose_set(outer_table: int, outer_arity: int, inner_tables: Sequence[int],
                inner_arity: int) -> set[int]:
    """All distinct tables of outer(g_1, ..., g_k) with g_i from the candidates."""
    if not inner_tables or outer_arity == 0:
        return set()
    vals = values_matrix(inner_tables, inner_arity)
    mult = [1 << (outer_arity - i) for i in range(1, outer_arity + 1)]
    lookup = values_matrix([outer_table], outer_arity)[0]
    out: set[int] = set()
    for _, block in block_scan(vals, outer_arity, mult):
        truth = lookup[block]
        out.update(pack_rows(truth))
    return out
