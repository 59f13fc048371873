"""Set families over [n] and their odd pair graphs.

A family is an ordered tuple of distinct subsets (see gf2.SetVector).  The
odd pair graph H(A) has the members as vertices and an edge between two
members exactly when their intersection has odd size.  op(A) = e(H(A)) is
the quantity everything else in this package bounds, constructs or searches.

The O(m^2) pair loop is the hot path: small families use a plain bitset
double loop, larger ones a blocked numpy matrix product (exact, since all
intersection sizes are at most 63 and far below float32's integer range).
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .gf2 import SetVector, _check_dimension

__all__ = [
    "SetFamily",
    "OddPairGraph",
    "op_count",
    "build_odd_pair_graph",
    "induced_subgraph_edge_count",
    "bipartite_edge_count",
    "parse_family",
    "format_family",
    "read_family",
    "write_family",
]

# below this member count the plain Python loop beats numpy call overhead
_DENSE_THRESHOLD = 256


@dataclass(frozen=True)
class SetFamily:
    """Ordered family of distinct subsets of [n]."""

    members: tuple[SetVector, ...]
    n: int

    def __post_init__(self) -> None:
        _check_dimension(self.n)
        seen = set()
        for v in self.members:
            if v.n != self.n:
                raise ValueError(f"member dimension {v.n} != family dimension {self.n}")
            if v.bits in seen:
                raise ValueError(f"duplicate member {v!r}")
            seen.add(v.bits)

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> SetFamily:
        return cls(tuple(SetVector(m, n) for m in masks), n)

    @classmethod
    def from_element_lists(cls, lists: Iterable[Iterable[int]], n: int) -> SetFamily:
        return cls(tuple(SetVector.from_elements(xs, n) for xs in lists), n)

    @property
    def size(self) -> int:
        return len(self.members)

    def masks(self) -> tuple[int, ...]:
        return tuple(v.bits for v in self.members)

    @property
    def parity_profile(self) -> str:
        """One of all-odd / all-even / mixed; an empty family counts as all-even."""
        parities = {v.parity() for v in self.members}
        if parities == {1}:
            return "all-odd"
        if parities <= {0}:
            return "all-even"
        return "mixed"

    def is_all_odd(self) -> bool:
        return all(v.parity() == 1 for v in self.members)

    def is_all_even(self) -> bool:
        return all(v.parity() == 0 for v in self.members)

    def odd_vertex_count(self) -> int:
        """Number of odd-sized members, v_o(H)."""
        return sum(v.parity() for v in self.members)

    def subfamily(self, indices: Sequence[int]) -> SetFamily:
        """Members at the given 0-based indices, order preserved, indices distinct."""
        _check_indices(indices, self.size)
        return SetFamily(tuple(self.members[i] for i in indices), self.n)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _check_indices(indices: Sequence[int], size: int) -> None:
    seen = set()
    for i in indices:
        if not 0 <= i < size:
            raise ValueError(f"index {i} out of range for family of size {size}")
        if i in seen:
            raise ValueError(f"index {i} repeated")
        seen.add(i)


def _bits_matrix(masks: Sequence[int], n: int) -> np.ndarray:
    arr = np.asarray(masks, dtype=np.uint64)
    return ((arr[:, None] >> np.arange(n, dtype=np.uint64)) & 1).astype(np.uint8)


def _parity_matrix(masks: Sequence[int], n: int) -> np.ndarray:
    """m x m uint8 matrix of intersection-size parities, zero diagonal."""
    bits = _bits_matrix(masks, n).astype(np.float32)
    counts = bits @ bits.T  # exact: every entry is an integer <= 63
    par = counts.astype(np.int64) & 1
    np.fill_diagonal(par, 0)
    return par.astype(np.uint8)


def _pair_stats_python(masks: Sequence[int]) -> tuple[int, list[int]]:
    m = len(masks)
    deg = [0] * m
    edges = 0
    for i in range(m):
        mi = masks[i]
        for j in range(i + 1, m):
            if (mi & masks[j]).bit_count() & 1:
                deg[i] += 1
                deg[j] += 1
                edges += 1
    return edges, deg


def _pair_stats(masks: Sequence[int], n: int) -> tuple[int, list[int]]:
    if len(masks) < _DENSE_THRESHOLD:
        return _pair_stats_python(masks)
    par = _parity_matrix(masks, n)
    deg = par.sum(axis=1, dtype=np.int64)
    edges = int(deg.sum()) // 2
    return edges, [int(d) for d in deg]


def _adjacency_rows(masks: Sequence[int], n: int) -> list[int]:
    """Row i is the bitset of member indices adjacent to i in H(A)."""
    m = len(masks)
    if m < _DENSE_THRESHOLD:
        rows = [0] * m
        for i in range(m):
            mi = masks[i]
            for j in range(i + 1, m):
                if (mi & masks[j]).bit_count() & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return rows
    par = _parity_matrix(masks, n)
    packed = np.packbits(par, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


@dataclass(frozen=True)
class OddPairGraph:
    """Odd pair graph H(A) with eagerly computed degrees and edge count."""

    family: SetFamily
    degrees: tuple[int, ...]
    edge_count: int
    odd_vertex_count: int
    adjacency: tuple[int, ...] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return self.family.size

    def neighbors(self, i: int) -> tuple[int, ...]:
        row = self.adjacency[i]
        return tuple(j for j in range(self.family.size) if row >> j & 1)

    def density(self) -> Fraction:
        v = self.vertex_count
        if v < 2:
            return Fraction(0)
        return Fraction(2 * self.edge_count, v * (v - 1))


def build_odd_pair_graph(family: SetFamily) -> OddPairGraph:
    masks = family.masks()
    rows = _adjacency_rows(masks, family.n)
    degrees = tuple(r.bit_count() for r in rows)
    return OddPairGraph(
        family=family,
        degrees=degrees,
        edge_count=sum(degrees) // 2,
        odd_vertex_count=family.odd_vertex_count(),
        adjacency=tuple(rows),
    )


def op_count(family: SetFamily) -> int:
    """Number of unordered member pairs with odd intersection size."""
    edges, _ = _pair_stats(family.masks(), family.n)
    return edges


def induced_subgraph_edge_count(family: SetFamily, indices: Sequence[int]) -> int:
    """op of the subfamily at the given indices."""
    _check_indices(indices, family.size)
    masks = family.masks()
    edges, _ = _pair_stats([masks[i] for i in indices], family.n)
    return edges


def bipartite_edge_count(
    family: SetFamily, left: Sequence[int], right: Sequence[int]
) -> int:
    """Odd pairs with one member in each index block; blocks must be disjoint."""
    _check_indices(left, family.size)
    _check_indices(right, family.size)
    overlap = set(left) & set(right)
    if overlap:
        raise ValueError(f"index blocks overlap: {sorted(overlap)}")
    masks = family.masks()
    count = 0
    for i in left:
        mi = masks[i]
        for j in right:
            if (mi & masks[j]).bit_count() & 1:
                count += 1
    return count


# --- family text format -------------------------------------------------
#
# line 1: "n=<int>"; one member per line as comma-separated 1-indexed
# elements; the empty set is the literal "empty"; "#" lines are comments.


def parse_family(text: str) -> SetFamily:
    n: int | None = None
    members: list[SetVector] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise ValueError(f"line {lineno}: expected 'n=<int>' header, got {line!r}")
            try:
                n = int(line[2:])
            except ValueError:
                raise ValueError(f"line {lineno}: bad dimension {line[2:]!r}") from None
            _check_dimension(n)
            continue
        if line == "empty":
            members.append(SetVector.empty(n))
            continue
        try:
            elements = [int(tok) for tok in line.split(",")]
        except ValueError:
            raise ValueError(f"line {lineno}: bad element list {line!r}") from None
        try:
            members.append(SetVector.from_elements(elements, n))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("missing 'n=<int>' header")
    return SetFamily(tuple(members), n)


def format_family(family: SetFamily) -> str:
    out = io.StringIO()
    out.write(f"n={family.n}\n")
    for v in family.members:
        if v.bits == 0:
            out.write("empty\n")
        else:
            out.write(",".join(map(str, v.elements())) + "\n")
    return out.getvalue()


def read_family(path: str) -> SetFamily:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family(fh.read())


def write_family(family: SetFamily, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_family(family))
