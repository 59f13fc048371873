"""GF(2) linear algebra on subsets of [n] encoded as int bitsets.

Element i of [n] sits at bit i-1, so a subset is a plain machine integer
and all vector arithmetic is XOR/AND/popcount.  The ambient dimension is
capped at 63 so every vector fits a single word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "MAX_DIMENSION",
    "SetVector",
    "Gf2Subspace",
    "inner_product",
    "set_parity",
    "span",
    "orthogonal_complement",
    "subspace_sum",
    "subspace_intersection",
]

MAX_DIMENSION = 63


def _check_dimension(n: int) -> None:
    if not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"ambient dimension must be in [1, {MAX_DIMENSION}], got {n}")


@dataclass(frozen=True, order=True, slots=True)
class SetVector:
    """A subset of [n] as a GF(2)^n vector; bits is the bitset, n the ambient size."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        _check_dimension(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits:#x} out of range for n={self.n}")

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> SetVector:
        """Build from 1-indexed elements; rejects out-of-range and repeated ones."""
        _check_dimension(n)
        bits = 0
        for e in elements:
            if not 1 <= e <= n:
                raise ValueError(f"element {e} out of range for n={n}")
            b = 1 << (e - 1)
            if bits & b:
                raise ValueError(f"element {e} repeated")
            bits |= b
        return cls(bits, n)

    @classmethod
    def empty(cls, n: int) -> SetVector:
        return cls(0, n)

    @classmethod
    def all_ones(cls, n: int) -> SetVector:
        """The full set [n], i.e. the all-one vector."""
        _check_dimension(n)
        return cls((1 << n) - 1, n)

    def elements(self) -> tuple[int, ...]:
        """1-indexed elements in increasing order."""
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    def size(self) -> int:
        return self.bits.bit_count()

    def parity(self) -> int:
        """|A| mod 2."""
        return self.bits.bit_count() & 1

    def __repr__(self) -> str:
        return f"SetVector({{{','.join(map(str, self.elements()))}}}, n={self.n})"


def inner_product(u: SetVector, v: SetVector) -> int:
    """GF(2) inner product: |U cap V| mod 2."""
    if u.n != v.n:
        raise ValueError(f"dimension mismatch: {u.n} != {v.n}")
    return (u.bits & v.bits).bit_count() & 1


def set_parity(v: SetVector) -> int:
    """|A| mod 2; equals inner_product(v, v)."""
    return v.parity()


def _insert_echelon(basis: list[int], v: int) -> None:
    # basis stays sorted by value descending, which in echelon form is
    # exactly pivot (highest set bit) descending
    for r in basis:
        if v ^ r < v:
            v ^= r
    if v:
        basis.append(v)
        basis.sort(reverse=True)


def _rref(vectors: Iterable[int]) -> tuple[int, ...]:
    basis: list[int] = []
    for v in vectors:
        _insert_echelon(basis, v)
    # back-substitute: clear every pivot from the other rows so the
    # reduced form, and hence the basis tuple, is canonical
    for i in range(len(basis) - 1, -1, -1):
        p = basis[i].bit_length() - 1
        for j in range(len(basis)):
            if j != i and basis[j] >> p & 1:
                basis[j] ^= basis[i]
    basis.sort(reverse=True)
    return tuple(basis)


@dataclass(frozen=True)
class Gf2Subspace:
    """A subspace of GF(2)^n held as a reduced row-echelon basis.

    Rows are sorted by pivot descending and every pivot bit occurs in a
    single row, so equal subspaces always carry identical basis tuples.
    """

    basis: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        _check_dimension(self.n)
        if self.basis != _rref(self.basis):
            raise ValueError("basis is not in canonical reduced row-echelon form")
        for r in self.basis:
            if not 0 < r < (1 << self.n):
                raise ValueError(f"basis row {r:#x} out of range for n={self.n}")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: SetVector) -> bool:
        if v.n != self.n:
            raise ValueError(f"dimension mismatch: {v.n} != {self.n}")
        return self.reduce_bits(v.bits) == 0

    def reduce_bits(self, bits: int) -> int:
        """Residue of a raw bitset after elimination against the basis."""
        for r in self.basis:
            if bits ^ r < bits:
                bits ^= r
        return bits

    def vectors(self) -> Iterator[SetVector]:
        """All 2^rank members; intended for small-rank checks."""
        for combo in range(1 << len(self.basis)):
            bits = 0
            for i, r in enumerate(self.basis):
                if combo >> i & 1:
                    bits ^= r
            yield SetVector(bits, self.n)

    def is_self_orthogonal(self) -> bool:
        """True when the subspace is contained in its own orthogonal complement."""
        rows = self.basis
        return all(
            (a & b).bit_count() & 1 == 0 for a in rows for b in rows
        )


def span(vectors: Iterable[SetVector], n: int | None = None) -> Gf2Subspace:
    """Canonical row-echelon span; empty input needs an explicit n."""
    vecs = list(vectors)
    if n is None:
        if not vecs:
            raise ValueError("span of empty input needs an explicit ambient dimension")
        n = vecs[0].n
    for v in vecs:
        if v.n != n:
            raise ValueError(f"dimension mismatch: {v.n} != {n}")
    return Gf2Subspace(_rref(v.bits for v in vecs), n)


def orthogonal_complement(space: Gf2Subspace) -> Gf2Subspace:
    """All vectors orthogonal to the subspace; dim(W) + dim(W-perp) == n."""
    n = space.n
    pivots = {r.bit_length() - 1 for r in space.basis}
    rows = []
    for f in range(n):
        if f in pivots:
            continue
        v = 1 << f
        for r in space.basis:
            if r >> f & 1:
                v |= 1 << (r.bit_length() - 1)
        rows.append(v)
    return Gf2Subspace(_rref(rows), n)


def subspace_sum(a: Gf2Subspace, b: Gf2Subspace) -> Gf2Subspace:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} != {b.n}")
    return Gf2Subspace(_rref(a.basis + b.basis), a.n)


def subspace_intersection(a: Gf2Subspace, b: Gf2Subspace) -> Gf2Subspace:
    """Computed as the complement of the sum of the two complements."""
    return orthogonal_complement(
        subspace_sum(orthogonal_complement(a), orthogonal_complement(b))
    )
