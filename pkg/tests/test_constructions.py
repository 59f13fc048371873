"""Reference families: structure and odd-pair counts against oracles."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import as_sets, op_oracle
from oelab import (
    SetFamily,
    build_as_extended,
    build_as_family,
    build_eventown_blocks,
    build_eventown_mixed,
    build_full_even_family,
    build_odd_pair_graph,
    build_oneill_oddtown,
    build_product_family,
    full_even_edge_count,
    op_count,
)


@pytest.mark.parametrize("s", [1, 2, 3, 5, 8])
def test_as_family_shape_and_op(s):
    fam = build_as_family(s)
    assert fam.n == s + 4
    assert fam.size == 2 * s + 4
    assert fam.is_all_odd()
    assert op_count(fam) == s + 2
    assert op_oracle(as_sets(fam)) == s + 2


def test_as_family_graph_is_perfect_matching():
    graph = build_odd_pair_graph(build_as_family(3))
    assert set(graph.degrees) == {1}
    assert graph.edge_count == 5


@pytest.mark.parametrize("n,s", [(9, 3), (12, 1), (12, 8), (5, 1)])
def test_as_extended_shape_and_op(n, s):
    fam = build_as_extended(n, s)
    assert fam.n == n
    assert fam.size == n + s
    assert fam.is_all_odd()
    assert op_count(fam) == s + 2


def test_as_extended_rejects_bad_range():
    with pytest.raises(ValueError):
        build_as_extended(8, 5)
    with pytest.raises(ValueError):
        build_as_extended(8, 0)


@pytest.mark.parametrize("n,s", [(4, 1), (4, 3), (8, 5), (12, 9), (8, 2)])
def test_oneill_op_is_3s(n, s):
    fam = build_oneill_oddtown(n, s)
    assert fam.size == n + s
    assert fam.is_all_odd()
    assert op_count(fam) == 3 * s
    assert op_oracle(as_sets(fam)) == 3 * s


def test_oneill_needs_room_for_triples():
    with pytest.raises(ValueError):
        build_oneill_oddtown(4, 5)  # five triples need two blocks
    with pytest.raises(ValueError):
        build_oneill_oddtown(3, 1)


def test_product_family_counts():
    base = build_eventown_blocks(4)
    fam = build_product_family(base, 4, 10)
    assert fam.size == base.size * 6
    assert fam.is_all_odd()
    # every pair of members sharing the appended element is an odd pair
    assert op_count(fam) == math.comb(base.size, 2) * 6
    assert op_oracle(as_sets(fam)) == op_count(fam)


def test_product_family_validation():
    base = build_eventown_blocks(4)
    with pytest.raises(ValueError):
        build_product_family(base, 4, 4)
    with pytest.raises(ValueError):
        build_product_family(base, 5, 10)
    odd = SetFamily.from_masks([1, 2], 4)
    with pytest.raises(ValueError):
        build_product_family(odd, 4, 6)
    # even sizes but an odd intersection
    crossing = SetFamily.from_masks([0b0011, 0b0110], 4)
    with pytest.raises(ValueError):
        build_product_family(crossing, 4, 6)


@pytest.mark.parametrize("variant", ["A", "B"])
@pytest.mark.parametrize("n", [4, 8, 12])
def test_eventown_blocks_is_extremal_eventown(n, variant):
    fam = build_eventown_blocks(n, variant)
    assert fam.size == 1 << (n // 2)
    assert fam.is_all_even()
    assert op_count(fam) == 0
    sets = as_sets(fam)
    assert len(set(map(frozenset, sets))) == fam.size


def test_eventown_blocks_variants_differ():
    a = set(build_eventown_blocks(8, "A").masks())
    b = set(build_eventown_blocks(8, "B").masks())
    assert a != b
    with pytest.raises(ValueError):
        build_eventown_blocks(6)
    with pytest.raises(ValueError):
        build_eventown_blocks(8, "C")


@pytest.mark.parametrize("n,s,expected", [(4, 1, 2), (4, 2, 4), (8, 1, 8), (8, 3, 24)])
def test_eventown_mixed_frozen_op(n, s, expected):
    fam = build_eventown_mixed(n, s)
    assert fam.size == (1 << (n // 2)) + s
    assert fam.is_all_even()
    assert op_count(fam) == expected
    assert expected == s * (1 << (n // 2 - 1))
    assert op_oracle(as_sets(fam)) == expected


def test_eventown_mixed_cap():
    # 2^(n/2) - 2^(n/4) members of variant B fall outside the variant-A span
    assert build_eventown_mixed(4, 2).size == 6
    with pytest.raises(ValueError):
        build_eventown_mixed(4, 3)
    with pytest.raises(ValueError):
        build_eventown_mixed(8, 13)
    build_eventown_mixed(8, 12)


@given(st.integers(1, 10))
@settings(max_examples=10)
def test_full_even_family_matches_closed_form(n):
    fam = build_full_even_family(n)
    assert fam.size == 1 << (n - 1)
    assert fam.is_all_even()
    assert op_count(fam) == full_even_edge_count(n)


def test_full_even_degree_structure():
    # the empty set and, for even n, the full set are isolated; every other
    # member meets exactly half of the remaining members oddly
    for n in (5, 6):
        fam = build_full_even_family(n)
        graph = build_odd_pair_graph(fam)
        masks = fam.masks()
        for mask, deg in zip(masks, graph.degrees):
            if mask == 0 or (n % 2 == 0 and mask == (1 << n) - 1):
                assert deg == 0
            else:
                assert deg == 1 << (n - 2)


def test_orderings_are_documented_and_stable():
    assert build_as_family(2).masks()[:6] == build_as_family(1).masks()[:6]
    blocks = build_eventown_blocks(4).masks()
    assert blocks[0] == 0  # binary-counter order starts at the empty union
    oneill = build_oneill_oddtown(4, 2)
    assert oneill.masks()[:4] == (1, 2, 4, 8)
