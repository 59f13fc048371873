"""Fourier-side diagnostics for set families, in exact arithmetic.

The indicator function of a family has Fourier coefficients with denominator
2^n (or 2^(n-1) over the even-weight character subgroup), so every identity
checked here reduces to integers: Plancherel becomes sum(T_m^2) == v * 2^n
with T_m the coefficient numerators, and the edge-count concentration
inequality is compared with both sides squared.  No verdict ever touches a
float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import isqrt_bracket
from .family import SetFamily, _bits_matrix, op_count
from .gf2 import SetVector, inner_product
from .report import Report

__all__ = [
    "SPECTRUM_DIM_CAP",
    "character_value",
    "indicator_fourier_coefficient",
    "FourierDiagnostic",
    "concentration_check",
    "fourier_spectrum",
    "DensityFloor",
    "density_floor",
]

SPECTRUM_DIM_CAP = 20

_MODES = ("general", "even_restricted")


def character_value(m: SetVector, a: SetVector) -> int:
    """(-1)^(m,a): +1 or -1."""
    return 1 - 2 * inner_product(m, a)


def indicator_fourier_coefficient(family: SetFamily, m: SetVector) -> Fraction:
    """Coefficient of the character indexed by m: sum of character values / 2^n.

    For a member m this equals (v - 2 d_H(m) - 2 (1,m)) / 2^n with d_H its
    degree in the odd pair graph.
    """
    if m.n != family.n:
        raise ValueError(f"dimension mismatch: {m.n} != {family.n}")
    total = sum(character_value(m, a) for a in family.members)
    return Fraction(total, 1 << family.n)


def _coefficient_numerators(family: SetFamily, restricted: bool) -> tuple[np.ndarray, list[int]]:
    """Integer numerators T_m for all characters m, plus the m masks in order."""
    n = family.n
    if n > SPECTRUM_DIM_CAP:
        raise ValueError(f"full spectra are limited to n <= {SPECTRUM_DIM_CAP}")
    if restricted:
        chars = [m for m in range(1 << n) if m.bit_count() & 1 == 0]
    else:
        chars = list(range(1 << n))
    v = family.size
    if v == 0:
        return np.zeros(len(chars), dtype=np.int64), chars
    member_bits = _bits_matrix(family.masks(), n).astype(np.float32)
    char_bits = _bits_matrix(chars, n).astype(np.float32)
    # block the (characters x members) parity table to bound peak memory
    block = 1 << 12
    odd_totals = np.zeros(len(chars), dtype=np.int64)
    for cs in range(0, len(chars), block):
        cb = char_bits[cs:cs + block]
        for ms in range(0, v, block):
            mb = member_bits[ms:ms + block]
            par = (cb @ mb.T).astype(np.int64) & 1  # parity of (m, a) per pair
            odd_totals[cs:cs + block] += par.sum(axis=1, dtype=np.int64)
    t = v - 2 * odd_totals
    return t, chars


def _verify_mode(family: SetFamily, mode: str) -> None:
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    if mode == "even_restricted":
        if family.n % 2 == 0:
            raise ValueError("even_restricted mode needs odd n")
        if not family.is_all_even():
            raise ValueError("even_restricted mode needs an all-even family")


@dataclass(frozen=True)
class FourierDiagnostic:
    """Concentration verdict and, when computed, the exact spectrum."""

    family: SetFamily
    mode: str
    vertex_count: int
    edge_count: int
    odd_vertex_count: int
    concentration_lhs: int           # |v^2 - 4e - 2 v_o|, or |v^2 - 4e| restricted
    concentration_rhs_squared: int   # 2^n v^2, or 2^(n-1) v^2 restricted
    concentration_holds: bool        # lhs^2 <= rhs_squared, exactly
    plancherel_lhs: Fraction | None = None
    plancherel_rhs: Fraction | None = None
    coefficients: dict[int, Fraction] | None = None

    def plancherel_ok(self) -> bool | None:
        if self.plancherel_lhs is None:
            return None
        return self.plancherel_lhs == self.plancherel_rhs

    def to_report(self) -> Report:
        values: dict = {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "odd_vertex_count": self.odd_vertex_count,
            "concentration_lhs": self.concentration_lhs,
            "concentration_rhs_squared": self.concentration_rhs_squared,
        }
        verdict = "holds" if self.concentration_holds else "violated"
        if self.plancherel_lhs is not None:
            values["plancherel_lhs"] = self.plancherel_lhs
            values["plancherel_rhs"] = self.plancherel_rhs
            if not self.plancherel_ok():
                verdict = "violated"
        return Report(
            kind="spectral",
            parameters={"n": self.family.n, "size": self.family.size, "mode": self.mode},
            values=values,
            verdict=verdict,
        )


def _concentration_fields(family: SetFamily, mode: str) -> tuple[int, int, int, int, int, bool]:
    v = family.size
    e = op_count(family)
    vo = family.odd_vertex_count()
    if mode == "general":
        lhs = abs(v * v - 4 * e - 2 * vo)
        rhs_sq = (1 << family.n) * v * v
    else:
        lhs = abs(v * v - 4 * e)
        rhs_sq = (1 << (family.n - 1)) * v * v
    return v, e, vo, lhs, rhs_sq, lhs * lhs <= rhs_sq


def concentration_check(family: SetFamily, mode: str = "general") -> FourierDiagnostic:
    """Check |v^2 - 4e - 2v_o| <= 2^(n/2) v (or the restricted variant) exactly.

    The even_restricted variant drops the v_o term, tightens 2^(n/2) to
    2^((n-1)/2), and requires an all-even family with odd n.
    """
    _verify_mode(family, mode)
    v, e, vo, lhs, rhs_sq, holds = _concentration_fields(family, mode)
    return FourierDiagnostic(
        family=family, mode=mode, vertex_count=v, edge_count=e,
        odd_vertex_count=vo, concentration_lhs=lhs,
        concentration_rhs_squared=rhs_sq, concentration_holds=holds,
    )


def fourier_spectrum(family: SetFamily, mode: str = "general") -> FourierDiagnostic:
    """Full exact spectrum plus the Plancherel identity, for n <= 20.

    In general mode the identity is sum of squared coefficients == v / 2^n
    over all 2^n characters; in even_restricted mode characters run over the
    even-weight masks and the denominator is 2^(n-1).
    """
    _verify_mode(family, mode)
    restricted = mode == "even_restricted"
    t, chars = _coefficient_numerators(family, restricted)
    n = family.n
    denom = 1 << (n - 1 if restricted else n)
    coeffs = {m: Fraction(int(ti), denom) for m, ti in zip(chars, t)}
    sum_sq = int(np.dot(t, t))
    v, e, vo, lhs, rhs_sq, holds = _concentration_fields(family, mode)
    return FourierDiagnostic(
        family=family, mode=mode, vertex_count=v, edge_count=e,
        odd_vertex_count=vo, concentration_lhs=lhs,
        concentration_rhs_squared=rhs_sq, concentration_holds=holds,
        plancherel_lhs=Fraction(family.size, denom),
        plancherel_rhs=Fraction(sum_sq, denom * denom),
        coefficients=coeffs,
    )


@dataclass(frozen=True)
class DensityFloor:
    """Observed edge density of H(A) against the floor (1 - 2^(n/2)/v) / 2."""

    density: Fraction
    floor_lo: Fraction
    floor_hi: Fraction
    holds: bool

    def to_report(self, n: int, size: int) -> Report:
        return Report(
            kind="spectral",
            parameters={"n": n, "size": size, "mode": "density-floor"},
            values={
                "density": self.density,
                "floor_lo": self.floor_lo,
                "floor_hi": self.floor_hi,
            },
            verdict="holds" if self.holds else "violated",
        )


def density_floor(family: SetFamily) -> DensityFloor:
    """Exact check of density >= (1 - 2^(n/2)/v)/2 for an all-even family.

    The irrational 2^(n/2) is bracketed for display; the verdict itself
    compares squares: density >= floor iff v(1 - 2 density) <= 0 or
    v^2 (1 - 2 density)^2 <= 2^n.
    """
    if not family.is_all_even():
        raise ValueError("density floor applies to all-even families")
    v = family.size
    if v < 2:
        raise ValueError("need at least two members")
    e = op_count(family)
    density = Fraction(2 * e, v * (v - 1))
    lo, hi = isqrt_bracket(1 << family.n)
    floor_lo = (1 - Fraction(hi, v)) / 2
    floor_hi = (1 - Fraction(lo, v)) / 2
    gap = v * (1 - 2 * density)
    holds = gap <= 0 or gap * gap <= (1 << family.n)
    return DensityFloor(density=density, floor_lo=floor_lo, floor_hi=floor_hi, holds=holds)
