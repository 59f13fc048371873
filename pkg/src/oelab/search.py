"""Exhaustive minimum-op search over fixed-size families of one parity class.

Candidate subsets of [n] are indexed by bitmask value ascending and families
are enumerated in colex order over those indices, so the reported witness is
the colex-smallest family attaining the minimum.  The enumeration splits into
blocks by the largest member index; blocks are independent (no shared state),
which makes node counts, witnesses and budget behavior identical whether the
blocks run sequentially or on a process pool.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Sequence

from .family import SetFamily, _adjacency_rows
from .report import Report

__all__ = [
    "DEFAULT_BUDGET",
    "SearchResult",
    "min_op_exhaustive",
    "min_op_with_canonical_pruning",
    "max_oddtown_size",
    "max_eventown_size",
]

DEFAULT_BUDGET = 10**9
_BUDGET_ENV = "OELAB_BUDGET"
_SEARCH_DIM_CAP = 20
_EVENTOWN_CAP = 10
_ODDTOWN_CAP = 8


def resolve_budget(budget: int | None) -> int:
    if budget is None:
        budget = int(os.environ.get(_BUDGET_ENV, DEFAULT_BUDGET))
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    return budget


@dataclass(frozen=True)
class SearchResult:
    n: int
    size: int
    mode: str
    minimum_op: int
    witness: SetFamily
    explored: int
    pruned: int
    exhaustive: bool
    canonical: bool
    budget: int

    def to_report(self, witness_path: str | None = None) -> Report:
        return Report(
            kind="search",
            parameters={
                "n": self.n,
                "size": self.size,
                "mode": self.mode,
                "canonical": self.canonical,
                "budget": self.budget,
                "exhaustive": self.exhaustive,
            },
            values={
                "minimum_op": self.minimum_op,
                "explored": self.explored,
                "pruned": self.pruned,
            },
            witness_path=witness_path,
        )


def _candidates(n: int, mode: str) -> list[int]:
    if mode not in ("odd", "even"):
        raise ValueError(f"mode must be 'odd' or 'even', got {mode!r}")
    if not 1 <= n <= _SEARCH_DIM_CAP:
        raise ValueError(f"n must be in [1, {_SEARCH_DIM_CAP}] for search, got {n}")
    want = 1 if mode == "odd" else 0
    return [m for m in range(1 << n) if m.bit_count() & 1 == want]


def _block_worker(
    args: tuple[Sequence[int], int, int, int, int, int]
) -> tuple[int, tuple[int, ...] | None, int, int, bool]:
    """Enumerate families whose largest member index equals `top`.

    Returns (best op, colex-first witness at that op or None if none beat
    best_init, explored, pruned, block exhausted).
    """
    adj, size, top, best_init, node_budget, canon_mask = args
    best = best_init
    best_wit: tuple[int, ...] | None = None
    explored = 0
    pruned = 0
    out_of_budget = False
    stack_idx = [0] * size

    def rec(prev: int, need: int, chosen_mask: int, partial: int) -> bool:
        nonlocal best, best_wit, explored, pruned, out_of_budget
        last_level = need == 1
        lo = need - 1
        for i in range(lo, prev):
            if last_level and not canon_mask >> i & 1:
                continue
            explored += 1
            if explored >= node_budget:
                out_of_budget = True
                return False
            inc = (adj[i] & chosen_mask).bit_count()
            total = partial + inc
            if total >= best:
                pruned += 1
                continue
            stack_idx[size - need] = i
            if last_level:
                best = total
                best_wit = tuple(sorted(stack_idx))
            else:
                if not rec(i, need - 1, chosen_mask | (1 << i), total):
                    return False
        return True

    stack_idx[0] = top
    if size == 1:
        if canon_mask >> top & 1:
            explored += 1
            if 0 < best:
                best = 0
                best_wit = (top,)
    else:
        rec(top, size - 1, 1 << top, 0)
    return best, best_wit, explored, pruned, not out_of_budget


def _family_op(masks: Sequence[int]) -> int:
    count = 0
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if (a & b).bit_count() & 1:
                count += 1
    return count


def _seed_family(cands: Sequence[int], size: int, n: int, mode: str) -> tuple[int, tuple[int, ...]]:
    """(op, masks) of the best of a few explicit families; used to prime pruning
    and as the reported best-found when the node budget trips before any hit."""
    trials: list[tuple[int, ...]] = [tuple(cands[:size])]
    try:
        if mode == "odd" and 1 <= size - n <= n - 4:
            from .constructions import build_as_extended

            trials.append(build_as_extended(n, size - n).masks())
        if mode == "even" and n % 4 == 0:
            from .constructions import build_eventown_mixed

            s = size - (1 << (n // 2))
            if 1 <= s <= (1 << (n // 2)) - (1 << (n // 4)):
                trials.append(build_eventown_mixed(n, s).masks())
    except ValueError:
        pass
    scored = [(_family_op(masks), masks) for masks in trials]
    return min(scored, key=lambda t: t[0])


def _run_search(
    n: int,
    size: int,
    mode: str,
    budget: int | None,
    threads: int,
    canonical: bool,
) -> SearchResult:
    budget = resolve_budget(budget)
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    cands = _candidates(n, mode)
    m = len(cands)
    if not 1 <= size <= m:
        raise ValueError(f"size must be in [1, {m}] for n={n} mode={mode}, got {size}")
    adj = _adjacency_rows(cands, n)
    if canonical:
        packed = {(1 << k) - 1 for k in range(n + 1)}
        canon_mask = 0
        for i, c in enumerate(cands):
            if c in packed:
                canon_mask |= 1 << i
    else:
        canon_mask = (1 << m) - 1
    seed_op, seed_masks = _seed_family(cands, size, n, mode)
    best_init = seed_op + 1
    blocks = list(range(size - 1, m))
    per_budget = max(1, budget // len(blocks))
    args = [(adj, size, top, best_init, per_budget, canon_mask) for top in blocks]
    if threads == 1 or len(blocks) == 1:
        results = [_block_worker(a) for a in args]
    else:
        with Pool(processes=min(threads, len(blocks))) as pool:
            results = pool.map(_block_worker, args, chunksize=1)
    minimum = min(r[0] for r in results)
    explored = sum(r[2] for r in results)
    pruned = sum(r[3] for r in results)
    exhaustive = all(r[4] for r in results)
    if minimum < best_init:
        witness_idx = next(r[1] for r in results if r[0] == minimum and r[1] is not None)
        witness = SetFamily.from_masks([cands[i] for i in witness_idx], n)
    else:
        # budget tripped everywhere before any family beat the seed
        minimum = seed_op
        witness = SetFamily.from_masks(seed_masks, n)
    return SearchResult(
        n=n,
        size=size,
        mode=mode,
        minimum_op=minimum,
        witness=witness,
        explored=explored,
        pruned=pruned,
        exhaustive=exhaustive,
        canonical=canonical,
        budget=budget,
    )


def min_op_exhaustive(
    n: int, size: int, mode: str, budget: int | None = None, threads: int = 1
) -> SearchResult:
    """Exact minimum op over all size-subsets of the odd or even subsets of [n].

    Runs within the node budget; if the budget trips, the result carries the
    best value found and exhaustive=False.
    """
    return _run_search(n, size, mode, budget, threads, canonical=False)


def min_op_with_canonical_pruning(
    n: int, size: int, mode: str, budget: int | None = None, threads: int = 1
) -> SearchResult:
    """Like min_op_exhaustive, but the smallest member must be {1..k} for some k.

    Sound because op is invariant under permutations of [n] and any family can
    be relabeled so that a member of minimum size becomes {1..k}, which is then
    the smallest member bitmask.  Same minimum, far fewer nodes.
    """
    return _run_search(n, size, mode, budget, threads, canonical=True)


def _class_alpha(n: int, mode: str, cap: int, label: str) -> int:
    if not 1 <= n <= cap:
        raise ValueError(f"{label} search supports n in [1, {cap}], got {n}")
    from .decomposition import _max_independent_from_adjacency

    cands = _candidates(n, mode)
    adj = _adjacency_rows(cands, n)
    return len(_max_independent_from_adjacency(adj, lexicographic=False))


def max_oddtown_size(n: int, cap: int = _ODDTOWN_CAP) -> int:
    """Size of the largest odd family with no odd intersection pair, by search."""
    return _class_alpha(n, "odd", cap, "oddtown")


def max_eventown_size(n: int, cap: int = _EVENTOWN_CAP) -> int:
    """Size of the largest even family with all-even pair intersections, by search."""
    return _class_alpha(n, "even", cap, "eventown")
