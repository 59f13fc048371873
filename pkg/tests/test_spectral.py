"""Fourier coefficients, Plancherel, concentration and the density floor."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_family
from oelab import (
    SetFamily,
    SetVector,
    build_eventown_blocks,
    build_full_even_family,
    build_odd_pair_graph,
    character_value,
    concentration_check,
    density_floor,
    emit_report,
    fourier_spectrum,
    indicator_fourier_coefficient,
    parse_report,
)


def coefficient_oracle(family, m_mask):
    total = 0
    for mask in family.masks():
        total += -1 if (mask & m_mask).bit_count() % 2 else 1
    return Fraction(total, 1 << family.n)


@given(st.integers(1, 8), st.integers(0, 10**6), st.data())
@settings(max_examples=100, deadline=None)
def test_coefficient_matches_sign_sum(n, seed, data):
    rng = random.Random(seed)
    fam = random_family(rng, n, rng.randint(0, min(10, 1 << n)))
    m_mask = data.draw(st.integers(0, (1 << n) - 1))
    m = SetVector(m_mask, n)
    assert indicator_fourier_coefficient(fam, m) == coefficient_oracle(fam, m_mask)


@given(st.integers(2, 8), st.integers(0, 10**6))
@settings(max_examples=80, deadline=None)
def test_member_coefficient_closed_form(n, seed):
    rng = random.Random(seed)
    fam = random_family(rng, n, rng.randint(1, min(12, 1 << n)))
    graph = build_odd_pair_graph(fam)
    v = fam.size
    for i, m in enumerate(fam.members):
        expected = Fraction(v - 2 * graph.degrees[i] - 2 * m.parity(), 1 << n)
        assert indicator_fourier_coefficient(fam, m) == expected


def test_character_value_signs():
    a = SetVector.from_elements([1, 2], 3)
    assert character_value(SetVector.from_elements([1], 3), a) == -1
    assert character_value(SetVector.from_elements([1, 2], 3), a) == 1
    assert character_value(SetVector.empty(3), a) == 1


def test_degree_two_member_has_zero_coefficient():
    # at n=3 and v=4, a member meeting two others oddly contributes
    # (4 - 2*2 - 0)/8 = 0
    fam = SetFamily.from_masks([0b011, 0b101, 0b110, 0b000], 3)
    graph = build_odd_pair_graph(fam)
    assert graph.degrees[0] == 2
    assert fam.members[0].parity() == 0
    assert indicator_fourier_coefficient(fam, fam.members[0]) == 0


@given(st.integers(1, 9), st.integers(0, 10**6))
@settings(max_examples=80, deadline=None)
def test_plancherel_exact(n, seed):
    rng = random.Random(seed)
    fam = random_family(rng, n, rng.randint(0, min(14, 1 << n)))
    diag = fourier_spectrum(fam)
    assert diag.plancherel_ok()
    assert diag.plancherel_lhs == Fraction(fam.size, 1 << n)
    assert len(diag.coefficients) == 1 << n
    # spot-check the table against the scalar path
    for m_mask in list(diag.coefficients)[:8]:
        assert diag.coefficients[m_mask] == indicator_fourier_coefficient(
            fam, SetVector(m_mask, n)
        )


@given(st.integers(1, 4), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_plancherel_restricted(k, seed):
    n = 2 * k + 1
    rng = random.Random(seed)
    fam = random_family(rng, n, rng.randint(0, min(12, 1 << (n - 1))), parity=0)
    diag = fourier_spectrum(fam, "even_restricted")
    assert diag.plancherel_ok()
    assert diag.plancherel_lhs == Fraction(fam.size, 1 << (n - 1))
    assert len(diag.coefficients) == 1 << (n - 1)
    assert all(m.bit_count() % 2 == 0 for m in diag.coefficients)


def test_restricted_mode_validation():
    with pytest.raises(ValueError):
        concentration_check(build_full_even_family(4), "even_restricted")
    odd_member = SetFamily.from_masks([1], 5)
    with pytest.raises(ValueError):
        concentration_check(odd_member, "even_restricted")
    with pytest.raises(ValueError):
        concentration_check(odd_member, "sideways")


@given(st.integers(1, 8), st.integers(0, 10**6))
@settings(max_examples=150, deadline=None)
def test_concentration_never_violated(n, seed):
    rng = random.Random(seed)
    fam = random_family(rng, n, rng.randint(0, min(16, 1 << n)))
    diag = concentration_check(fam)
    assert diag.concentration_holds
    assert diag.concentration_lhs**2 <= diag.concentration_rhs_squared


def test_concentration_tight_for_blocks_family():
    diag = concentration_check(build_eventown_blocks(4))
    assert diag.concentration_lhs == 16
    assert diag.concentration_rhs_squared == 256
    assert diag.concentration_holds  # equality case


def test_spectrum_dimension_cap():
    fam = SetFamily.from_masks([1], 21)
    with pytest.raises(ValueError):
        fourier_spectrum(fam)
    concentration_check(fam)  # the closed-form check has no such cap


def test_density_floor_full_even_family():
    res = density_floor(build_full_even_family(6))
    assert res.holds
    assert res.density == Fraction(15, 31)
    assert res.floor_lo <= res.floor_hi
    rep = res.to_report(6, 32)
    assert parse_report(emit_report(rep)).verdict == "holds"


def test_density_floor_validation():
    with pytest.raises(ValueError):
        density_floor(SetFamily.from_masks([1, 2], 4))
    with pytest.raises(ValueError):
        density_floor(SetFamily.from_masks([0], 4))


def test_diagnostic_report_roundtrip():
    diag = fourier_spectrum(build_eventown_blocks(4))
    rep = diag.to_report()
    back = parse_report(emit_report(rep))
    assert back.verdict == "holds"
    assert back.values["plancherel_lhs"] == back.values["plancherel_rhs"]
    assert back.values["edge_count"] == 0
