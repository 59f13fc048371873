"""Reference families with known odd-pair counts.

Every builder documents its member ordering, since families are ordered and
reports, witnesses and peeling traces all refer to member indices.
"""

from __future__ import annotations

from itertools import combinations

from .family import SetFamily
from .gf2 import SetVector, span

__all__ = [
    "build_as_family",
    "build_as_extended",
    "build_oneill_oddtown",
    "build_product_family",
    "build_eventown_blocks",
    "build_eventown_mixed",
    "build_full_even_family",
    "full_even_edge_count",
]

# the six 3-sets through element 1 whose odd pair graph is a perfect matching
_CENTER = ((1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5), (1, 4, 5))

_FULL_EVEN_CAP = 20


def build_as_family(s: int) -> SetFamily:
    """Odd family of size 2s+4 on [s+4] with op = s+2.

    Members: the six center sets first, then for i = 1..s-1 the pair
    {i+5}, {2,3,4,5,i+5}.  The odd pair graph is a perfect matching.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    n = s + 4
    lists: list[tuple[int, ...]] = list(_CENTER)
    for i in range(1, s):
        lists.append((i + 5,))
        lists.append((2, 3, 4, 5, i + 5))
    return SetFamily.from_element_lists(lists, n)


def build_as_extended(n: int, s: int) -> SetFamily:
    """The size-(n+s) odd family on [n]: A_s padded with fresh singletons.

    Requires 1 <= s <= n-4.  Singletons {i} for i = s+5..n follow the A_s
    members; they touch nothing and leave op at s+2.
    """
    if not 1 <= s <= n - 4:
        raise ValueError(f"need 1 <= s <= n-4, got s={s}, n={n}")
    base = build_as_family(s)
    lists = [v.elements() for v in base.members]
    lists.extend((i,) for i in range(s + 5, n + 1))
    return SetFamily.from_element_lists(lists, n)


def build_oneill_oddtown(n: int, s: int) -> SetFamily:
    """All singletons of [n] plus s triples drawn from disjoint 4-blocks; op = 3s.

    Blocks are {4j-3,...,4j} for j = 1, 2, ...; within a block the four
    triples appear in lexicographic order.  Requires 4*ceil(s/4) <= n so the
    triples fit inside [n].
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    blocks_needed = -(-s // 4)
    if 4 * blocks_needed > n:
        raise ValueError(f"s={s} needs {4 * blocks_needed} elements but n={n}")
    lists: list[tuple[int, ...]] = [(i,) for i in range(1, n + 1)]
    triples: list[tuple[int, ...]] = []
    for j in range(blocks_needed):
        block = range(4 * j + 1, 4 * j + 5)
        triples.extend(combinations(block, 3))
    lists.extend(triples[:s])
    return SetFamily.from_element_lists(lists, n)


def build_product_family(eventown: SetFamily, m: int, n: int) -> SetFamily:
    """{E + {i}} for E in the eventown family on [m] and i in [m+1, n].

    op = C(|E|, 2) * (n - m): two members collide exactly when they append
    the same new element.  Ordering: member-major, appended element minor.
    """
    if eventown.n != m:
        raise ValueError(f"base family lives on [{eventown.n}], not [{m}]")
    if n <= m:
        raise ValueError(f"need n > {m}, got n={n}")
    if eventown.size == 0:
        raise ValueError("eventown family must be nonempty")
    if not eventown.is_all_even():
        raise ValueError("base family has an odd-sized member")
    masks = eventown.masks()
    for a, b in combinations(masks, 2):
        if (a & b).bit_count() & 1:
            raise ValueError("base family has a pair with odd intersection")
    out = []
    for mask in masks:
        for i in range(m, n):
            out.append(mask | (1 << i))
    return SetFamily.from_masks(out, n)


def _pair_blocks(n: int, variant: str) -> list[int]:
    if n % 4 != 0 or n < 4:
        raise ValueError(f"n must be a positive multiple of 4, got {n}")
    if variant not in ("A", "B"):
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    blocks = []
    for i in range(1, n // 4 + 1):
        a, b, c, d = 4 * i - 4, 4 * i - 3, 4 * i - 2, 4 * i - 1  # bit positions
        if variant == "A":
            blocks.append((1 << a) | (1 << b))
            blocks.append((1 << c) | (1 << d))
        else:
            blocks.append((1 << a) | (1 << d))
            blocks.append((1 << b) | (1 << c))
    return blocks


def build_eventown_blocks(n: int, variant: str = "A") -> SetFamily:
    """Extremal eventown of size 2^(n/2) from n/2 disjoint pair-blocks.

    Variant A uses blocks {4i-3,4i-2}, {4i-1,4i}; variant B the crossed
    blocks {4i-3,4i}, {4i-2,4i-1}.  Members are all unions of blocks, in
    binary-counter order over the block index set.
    """
    blocks = _pair_blocks(n, variant)
    k = len(blocks)
    out = []
    for j in range(1 << k):
        mask = 0
        for b in range(k):
            if j >> b & 1:
                mask |= blocks[b]
        out.append(mask)
    return SetFamily.from_masks(out, n)


def build_eventown_mixed(n: int, s: int) -> SetFamily:
    """Variant-A eventown plus the first s variant-B members outside its span.

    op = s * 2^(n/2 - 1): each appended member meets exactly half of the
    2^(n/2) span members oddly, and appended members pairwise evenly.
    Requires 1 <= s <= 2^(n/2) - 2^(n/4).
    """
    k, l = n // 2, n // 4
    cap = (1 << k) - (1 << l) if n % 4 == 0 else 0
    if not 1 <= s <= cap:
        raise ValueError(f"need 1 <= s <= {cap} for n={n}, got s={s}")
    base = build_eventown_blocks(n, "A")
    w = span(base.members, n)
    extra = [v.bits for v in build_eventown_blocks(n, "B").members
             if w.reduce_bits(v.bits) != 0]
    assert len(extra) == cap
    return SetFamily.from_masks(base.masks() + tuple(extra[:s]), n)


def build_full_even_family(n: int) -> SetFamily:
    """All 2^(n-1) even-sized subsets of [n], bitmask ascending."""
    if not 1 <= n <= _FULL_EVEN_CAP:
        raise ValueError(f"n must be in [1, {_FULL_EVEN_CAP}], got {n}")
    return SetFamily.from_masks(
        (m for m in range(1 << n) if m.bit_count() & 1 == 0), n
    )


def full_even_edge_count(n: int) -> int:
    """Closed form for op of the full even family on [n]."""
    v = 1 << (n - 1)
    if n % 2 == 1:
        return v * (v - 1) // 4
    return v * (v - 2) // 4
