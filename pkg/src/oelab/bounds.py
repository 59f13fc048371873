"""Lower bounds on op and related threshold evaluators, all in exact arithmetic.

Evaluators raise ValueError on out-of-range parameters; check_bound instead
folds precondition failures into a "not-applicable" verdict so the CLI can
report on arbitrary input families.  A "violated" verdict is reserved for a
family that satisfies a bound's preconditions yet beats the bound, which for
the proven statements here would be a bug somewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact import pow2_bracket, pow2_ceil
from .family import SetFamily, op_count
from .report import Report

__all__ = [
    "BoundReport",
    "oddtown_lower_bound",
    "oddtown_peeling_bound",
    "oddtown_asymptotic_mo",
    "oddtown_large_s_main_term",
    "eventown_lower_bound",
    "eventown_window_ok",
    "eventown_density_bounds",
    "turan_bound",
    "y_size_bound",
    "check_bound",
    "BOUND_NAMES",
]


def oddtown_lower_bound(s: int) -> int:
    """Minimum op of an odd family of size n+s when 1 <= s <= n."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return s + 2


def oddtown_peeling_bound(n: int, s: int) -> int:
    """Peeling lower bound C(q+1,2)n + (q+1)(s-nq), q = floor(s/n).

    Equals s for s <= n and grows like s^2/(2n) beyond.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    q = s // n
    return math.comb(q + 1, 2) * n + (q + 1) * (s - n * q)


def oddtown_asymptotic_mo(n: int, s: int, c: Fraction | int) -> Fraction:
    """Main term of the minimum op at s ~ cn: (C(fc+1,2) + (fc+1)(c-fc)) * n.

    fc = floor(c).  s is carried for context only; the o(n) slack at finite
    n is not modeled, so callers compare against oddtown_peeling_bound for
    concrete sizes.
    """
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    fc = math.floor(c)
    coeff = Fraction(math.comb(fc + 1, 2)) + (fc + 1) * (c - fc)
    return coeff * n


def oddtown_large_s_main_term(n: int, s: int) -> Fraction:
    """s^2/(2n) + s/2, the main term in the regime n = o(s)."""
    if n < 1 or s < 0:
        raise ValueError(f"need n >= 1 and s >= 0, got n={n}, s={s}")
    return Fraction(s * s, 2 * n) + Fraction(s, 2)


def eventown_lower_bound(n: int, s: int, strength: str = "proven_half") -> Fraction:
    """Lower bound on op of an even family of size 2^floor(n/2) + s.

    strength "conjectured_full" gives s * 2^(floor(n/2) - 1), attained by the
    mixed block construction; "proven_half" gives s * 2^(floor(n/2) - 2) and
    is a strict bound (op must exceed it).
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if strength == "conjectured_full":
        e = n // 2 - 1
    elif strength == "proven_half":
        e = n // 2 - 2
    else:
        raise ValueError(f"unknown strength {strength!r}")
    return s * (Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e))


def eventown_window_ok(n: int, s: int) -> bool:
    """Applicability window s*n <= 2^floor(n/8) of the full-strength bound."""
    return s * n <= 1 << (n // 8)


def eventown_density_bounds(n: int, eps: Fraction) -> tuple[Fraction, Fraction]:
    """Exact rational (lower, upper) for the minimum edge density f_n(eps).

    lower = (1 - 2^((eps-1/2)n)) / 2 with the power bracketed dyadically from
    above, so the returned value is still a valid lower bound; upper is 1/2
    for odd n and (1 - 1/(2^(n-1)-1))/2 for even n.
    """
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 2):
        raise ValueError(f"eps must be in (0, 1/2), got {eps}")
    if n * eps < 1:
        raise ValueError(f"need n >= 1/eps, got n={n}, eps={eps}")
    _, hi = pow2_bracket((eps - Fraction(1, 2)) * n)
    lower = (1 - hi) / 2
    if n % 2 == 1:
        upper = Fraction(1, 2)
    else:
        upper = (1 - Fraction(1, (1 << (n - 1)) - 1)) / 2
    assert lower <= upper
    return lower, upper


def turan_bound(n: int, r: int) -> Fraction:
    """Edge count bound (r-1)/r * n^2/2 for K_{r+1}-free graphs on n vertices."""
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    return Fraction(r - 1, r) * Fraction(n * n, 2)


def y_size_bound(n: int, s: int, i: int) -> int:
    """i * s * (2^(n/4) + 1) with the power rounded up to an integer."""
    if n < 1 or s < 0 or i < 1:
        raise ValueError(f"need n >= 1, s >= 0, i >= 1, got n={n}, s={s}, i={i}")
    return i * s * (pow2_ceil(n, 4) + 1)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking one named bound against one family."""

    bound_name: str
    parameters: dict[str, int | str | Fraction]
    bound_value: Fraction | None
    observed: Fraction | None
    verdict: str  # "holds" | "violated" | "not-applicable"
    strict: bool = False
    slack: Fraction | None = None
    notes: tuple[str, ...] = field(default=())

    def to_report(self) -> Report:
        params: dict = {"bound": self.bound_name, "strict": self.strict}
        params.update(self.parameters)
        for i, note in enumerate(self.notes):
            params[f"note_{i}"] = note
        values: dict = {}
        if self.bound_value is not None:
            values["bound_value"] = self.bound_value
        if self.observed is not None:
            values["observed"] = self.observed
        if self.slack is not None:
            values["slack"] = self.slack
        return Report(kind="bound", parameters=params, values=values, verdict=self.verdict)


def _not_applicable(name: str, params: dict, notes: tuple[str, ...]) -> BoundReport:
    return BoundReport(
        bound_name=name, parameters=params, bound_value=None, observed=None,
        verdict="not-applicable", notes=notes,
    )


def _compare(name, params, bound_value, observed, strict, notes=()) -> BoundReport:
    bound_value = Fraction(bound_value)
    observed = Fraction(observed)
    ok = observed > bound_value if strict else observed >= bound_value
    return BoundReport(
        bound_name=name, parameters=params, bound_value=bound_value,
        observed=observed, verdict="holds" if ok else "violated",
        strict=strict, slack=observed - bound_value, notes=notes,
    )


def _check_oddtown_lower(family: SetFamily, params: dict) -> BoundReport:
    n, size = family.n, family.size
    s = size - n
    p = {"n": n, "size": size, "s": s}
    if not family.is_all_odd():
        return _not_applicable("oddtown_lower", p, ("family is not all-odd",))
    if not 1 <= s <= n:
        return _not_applicable("oddtown_lower", p, (f"need 1 <= s <= n, s={s}",))
    return _compare("oddtown_lower", p, oddtown_lower_bound(s), op_count(family), False)


def _check_oddtown_peeling(family: SetFamily, params: dict) -> BoundReport:
    n, size = family.n, family.size
    s = size - n
    p = {"n": n, "size": size, "s": s}
    if not family.is_all_odd():
        return _not_applicable("oddtown_peeling", p, ("family is not all-odd",))
    if s < 0:
        return _not_applicable("oddtown_peeling", p, (f"need size >= n, s={s}",))
    return _compare(
        "oddtown_peeling", p, oddtown_peeling_bound(n, s), op_count(family), False
    )


def _check_oddtown_best(family: SetFamily, params: dict) -> BoundReport:
    """Max of the two oddtown lower bounds, whichever are applicable."""
    a = _check_oddtown_lower(family, params)
    b = _check_oddtown_peeling(family, params)
    live = [r for r in (a, b) if r.verdict != "not-applicable"]
    if not live:
        return _not_applicable("oddtown_best", a.parameters, a.notes + b.notes)
    best = max(live, key=lambda r: r.bound_value)
    return BoundReport(
        bound_name="oddtown_best", parameters=best.parameters,
        bound_value=best.bound_value, observed=best.observed,
        verdict=best.verdict, strict=best.strict, slack=best.slack,
        notes=(f"max over {len(live)} applicable bounds",),
    )


def _check_eventown(family: SetFamily, params: dict, strength: str) -> BoundReport:
    name = "eventown_full" if strength == "conjectured_full" else "eventown_half"
    n, size = family.n, family.size
    s = size - (1 << (n // 2))
    p = {"n": n, "size": size, "s": s}
    if not family.is_all_even():
        return _not_applicable(name, p, ("family is not all-even",))
    if s < 1:
        return _not_applicable(name, p, (f"need size > 2^floor(n/2), s={s}",))
    notes: tuple[str, ...] = ()
    strict = strength == "proven_half"
    if strength == "conjectured_full":
        inside = eventown_window_ok(n, s)
        notes = (
            "conjectured strength; window s*n <= 2^floor(n/8) "
            + ("satisfied" if inside else "not satisfied"),
        )
    return _compare(
        name, p, eventown_lower_bound(n, s, strength), op_count(family), strict, notes
    )


def _check_density(family: SetFamily, params: dict) -> BoundReport:
    n, v = family.n, family.size
    eps = params.get("eps")
    if eps is None:
        raise ValueError("density check needs an eps parameter")
    eps = Fraction(eps)
    p = {"n": n, "size": v, "eps": eps}
    if not family.is_all_even():
        return _not_applicable("density", p, ("family is not all-even",))
    if v < 2:
        return _not_applicable("density", p, ("need at least two members",))
    if not 0 < eps < Fraction(1, 2) or n * eps < 1:
        return _not_applicable("density", p, ("need 0 < eps < 1/2 and n >= 1/eps",))
    q = eps.denominator
    if v**q < 1 << (n * (q - eps.numerator)):
        return _not_applicable("density", p, ("family smaller than 2^((1-eps)n)",))
    lower, upper = eventown_density_bounds(n, eps)
    density = Fraction(op_count(family), math.comb(v, 2))
    rep = _compare("density", p, lower, density, False)
    return BoundReport(
        bound_name=rep.bound_name, parameters=rep.parameters,
        bound_value=rep.bound_value, observed=rep.observed, verdict=rep.verdict,
        strict=rep.strict, slack=rep.slack,
        notes=(f"upper bound on the minimum density: {upper}",),
    )


_FAMILY_CHECKS: dict[str, Callable[[SetFamily, dict], BoundReport]] = {
    "oddtown_lower": _check_oddtown_lower,
    "oddtown_peeling": _check_oddtown_peeling,
    "oddtown_best": _check_oddtown_best,
    "eventown_full": lambda f, p: _check_eventown(f, p, "conjectured_full"),
    "eventown_half": lambda f, p: _check_eventown(f, p, "proven_half"),
    "density": _check_density,
}

BOUND_NAMES = tuple(sorted(_FAMILY_CHECKS))


def check_bound(family: SetFamily, bound_name: str, **params) -> BoundReport:
    """Evaluate a named bound against a family; see BOUND_NAMES."""
    try:
        checker = _FAMILY_CHECKS[bound_name]
    except KeyError:
        raise ValueError(
            f"unknown bound {bound_name!r}; known: {', '.join(BOUND_NAMES)}"
        ) from None
    return checker(family, params)
