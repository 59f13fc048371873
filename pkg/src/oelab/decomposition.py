"""Independent subfamilies of the odd pair graph: exact solver, peeling, diagnostics.

An independent set in H(A) restricted to an all-odd family is an oddtown
subfamily, and to an all-even family an eventown subfamily.  The exact solver
is a bitset branch-and-bound with greedy clique-cover upper bounds; vertex
sets are Python ints so all set algebra is single-word AND/OR/popcount.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bounds import y_size_bound
from .family import SetFamily, _check_indices, build_odd_pair_graph
from .gf2 import Gf2Subspace, orthogonal_complement, span, subspace_intersection

__all__ = [
    "SOLVER_CAP",
    "maximum_independent_indices",
    "maximum_independent_subfamily",
    "greedy_peeling",
    "PeelingTrace",
    "neighborhood_diagnostic",
    "NeighborhoodDiagnostic",
]

SOLVER_CAP = 40

_MODES = ("odd", "even")


def _check_mode(family: SetFamily, mode: str) -> None:
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    want = "all-odd" if mode == "odd" else "all-even"
    profile = family.parity_profile
    if family.size and profile != want:
        raise ValueError(f"mode {mode!r} needs an {want} family, got {profile}")


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _clique_cover(remaining: int, adj: Sequence[int]) -> int:
    """Number of cliques in a greedy cover of G[remaining]; upper-bounds alpha."""
    count = 0
    r = remaining
    while r:
        v = _lowest(r)
        r &= r - 1
        cand = adj[v] & r
        while cand:
            u = _lowest(cand)
            r &= ~(1 << u)
            cand &= adj[u] & r
        count += 1
    return count


def _sparse_pick(remaining: int, adj: Sequence[int]) -> int | None:
    """If max degree in G[remaining] <= 1, an optimal pick is direct: take all
    isolated vertices plus the lower endpoint of each matching edge."""
    chosen = 0
    r = remaining
    while r:
        v = _lowest(r)
        r &= r - 1
        nb = adj[v] & remaining & ~(1 << v)
        cnt = nb.bit_count()
        if cnt == 0:
            chosen |= 1 << v
        elif cnt == 1 and adj[_lowest(nb)] & remaining & ~(1 << v) == 0:
            chosen |= 1 << v  # v is the lower endpoint: its partner is above
            r &= ~nb
        else:
            return None
    return chosen


class _MisSolver:
    def __init__(self, adjacency: Sequence[int]):
        self.adj = list(adjacency)
        self.best_size = -1
        self.best_mask = 0

    def _branch_vertex(self, remaining: int) -> int:
        v_best, d_best = -1, -1
        r = remaining
        while r:
            v = _lowest(r)
            r &= r - 1
            d = (self.adj[v] & remaining).bit_count()
            if d > d_best:
                v_best, d_best = v, d
        return v_best

    def _expand(self, remaining: int, chosen: int, size: int) -> None:
        if not remaining:
            if size > self.best_size:
                self.best_size, self.best_mask = size, chosen
            return
        pick = _sparse_pick(remaining, self.adj)
        if pick is not None:
            total = size + pick.bit_count()
            if total > self.best_size:
                self.best_size, self.best_mask = total, chosen | pick
            return
        if size + _clique_cover(remaining, self.adj) <= self.best_size:
            return
        v = self._branch_vertex(remaining)
        bit = 1 << v
        self._expand(remaining & ~self.adj[v] & ~bit, chosen | bit, size + 1)
        self._expand(remaining & ~bit, chosen, size)

    def maximum(self, remaining: int) -> int:
        self.best_size, self.best_mask = -1, 0
        self._expand(remaining, 0, 0)
        return self.best_size

    def has_independent(self, remaining: int, need: int) -> bool:
        """Decision variant: is there an independent set of size need?"""
        if need <= 0:
            return True
        if remaining.bit_count() < need:
            return False
        found = [False]

        def rec(rem: int, size: int) -> None:
            if found[0]:
                return
            if size >= need:
                found[0] = True
                return
            pick = _sparse_pick(rem, self.adj)
            if pick is not None:
                if size + pick.bit_count() >= need:
                    found[0] = True
                return
            if size + _clique_cover(rem, self.adj) < need:
                return
            v = self._branch_vertex(rem)
            bit = 1 << v
            rec(rem & ~self.adj[v] & ~bit, size + 1)
            if not found[0]:
                rec(rem & ~bit, size)

        rec(remaining, 0)
        return found[0]


def _max_independent_from_adjacency(
    adjacency: Sequence[int], lexicographic: bool = True
) -> tuple[int, ...]:
    m = len(adjacency)
    full = (1 << m) - 1
    solver = _MisSolver(adjacency)
    alpha = solver.maximum(full) if m else 0
    if not lexicographic:
        mask = solver.best_mask
        return tuple(i for i in range(m) if mask >> i & 1)
    # rebuild the lexicographically smallest optimum index by index
    chosen: list[int] = []
    pool = full
    for i in range(m):
        if len(chosen) == alpha:
            break
        if not pool >> i & 1:
            continue
        cand = pool & ~adjacency[i] & ~((1 << (i + 1)) - 1)
        if solver.has_independent(cand, alpha - len(chosen) - 1):
            chosen.append(i)
            pool = cand
        else:
            pool &= ~(1 << i)
    assert len(chosen) == alpha
    return tuple(chosen)


def maximum_independent_indices(
    family: SetFamily, mode: str, cap: int | None = SOLVER_CAP
) -> tuple[int, ...]:
    """Indices of the lexicographically smallest maximum independent set of H(A)."""
    _check_mode(family, mode)
    if cap is not None and family.size > cap:
        raise ValueError(f"family size {family.size} exceeds solver cap {cap}")
    graph = build_odd_pair_graph(family)
    return _max_independent_from_adjacency(graph.adjacency)


def maximum_independent_subfamily(
    family: SetFamily, mode: str, cap: int | None = SOLVER_CAP
) -> SetFamily:
    """The subfamily at maximum_independent_indices; certified optimal."""
    return family.subfamily(maximum_independent_indices(family, mode, cap))


@dataclass(frozen=True)
class PeelingTrace:
    """Layers removed by repeated independent subfamilies, plus the op bound.

    lower_bound = sum of residual sizes: every member surviving layer i has a
    neighbor inside layer i (layers are maximal), and those edge sets are
    disjoint across layers, so op(A) >= sum_i |A minus first i layers|.
    """

    mode: str
    exactness: str  # "greedy" | "maximum"
    layers: tuple[tuple[int, ...], ...]
    residual_sizes: tuple[int, ...]
    lower_bound: int
    surplus: int | None = None
    alpha: int | None = None
    alpha_precondition_ok: bool | None = None

    @property
    def layer_count(self) -> int:
        return len(self.layers)


def _greedy_layer(order: Sequence[int], adj: Sequence[int]) -> list[int]:
    layer: list[int] = []
    layer_mask = 0
    for i in order:
        if adj[i] & layer_mask == 0:
            layer.append(i)
            layer_mask |= 1 << i
    return layer


def greedy_peeling(
    family: SetFamily, mode: str, exactness: str = "greedy", cap: int = SOLVER_CAP
) -> PeelingTrace:
    """Peel maximal (or maximum) independent layers until the family is gone."""
    _check_mode(family, mode)
    if exactness not in ("greedy", "maximum"):
        raise ValueError(f"exactness must be 'greedy' or 'maximum', got {exactness!r}")
    if exactness == "maximum" and family.size > cap:
        raise ValueError(f"family size {family.size} exceeds solver cap {cap}")
    graph = build_odd_pair_graph(family)
    adj = graph.adjacency
    residual = list(range(family.size))
    layers: list[tuple[int, ...]] = []
    residual_sizes: list[int] = []
    while residual:
        if exactness == "greedy":
            layer = _greedy_layer(residual, adj)
        else:
            sub_adj = _project_adjacency(adj, residual)
            local = _max_independent_from_adjacency(sub_adj)
            layer = [residual[j] for j in local]
        chosen = set(layer)
        residual = [i for i in residual if i not in chosen]
        layers.append(tuple(layer))
        residual_sizes.append(len(residual))
    surplus = alpha = pre_ok = None
    if mode == "even":
        surplus = family.size - (1 << (family.n // 2))
        if surplus >= 1:
            alpha = -(-family.size // (surplus + 2))
            pre_ok = (1 << (family.n // 2)) > (surplus + 1) ** 2
    return PeelingTrace(
        mode=mode,
        exactness=exactness,
        layers=tuple(layers),
        residual_sizes=tuple(residual_sizes),
        lower_bound=sum(residual_sizes),
        surplus=surplus,
        alpha=alpha,
        alpha_precondition_ok=pre_ok,
    )


def _project_adjacency(adj: Sequence[int], keep: Sequence[int]) -> list[int]:
    index = {v: j for j, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        src = adj[v]
        for u, j in index.items():
            if src >> u & 1:
                row |= 1 << j
        rows.append(row)
    return rows


@dataclass(frozen=True)
class NeighborhoodDiagnostic:
    """Single peel step bookkeeping around a non-core member x."""

    x_index: int
    core_indices: tuple[int, ...]
    neighbor_indices: tuple[int, ...]  # N(x) inside the core
    dominated_indices: tuple[int, ...]  # non-core y with N(y) inside N(x)
    dim_drop: int
    y_bound: int
    y_bound_holds: bool
    peel_index: int


def neighborhood_diagnostic(
    family: SetFamily,
    core_indices: Sequence[int],
    x_index: int,
    peel_index: int = 1,
) -> NeighborhoodDiagnostic:
    """Analyze how removing N(x) from an independent core drops the span.

    N(-) is always taken inside the core.  dim_drop is
    rank(span(core)) - rank(span(core minus N(x)) meet x-perp); dominated_indices
    collects the non-core members whose core neighborhood is contained in N(x),
    and the reported bound is y_size_bound(n, |N(x)|, peel_index).
    """
    core = tuple(core_indices)
    _check_indices(core, family.size)
    _check_indices([x_index], family.size)
    if x_index in core:
        raise ValueError(f"x (index {x_index}) must lie outside the core")
    graph = build_odd_pair_graph(family)
    adj = graph.adjacency
    core_mask = 0
    for i in core:
        core_mask |= 1 << i
    for i in core:
        if adj[i] & core_mask:
            raise ValueError("core is not independent in the odd pair graph")
    nx_mask = adj[x_index] & core_mask
    nx = tuple(i for i in core if nx_mask >> i & 1)
    dominated = tuple(
        y
        for y in range(family.size)
        if not core_mask >> y & 1 and adj[y] & core_mask & ~nx_mask == 0
    )
    members = family.members
    core_span = span((members[i] for i in core), family.n)
    survivors = span((members[i] for i in core if not nx_mask >> i & 1), family.n)
    x_perp = orthogonal_complement(span([members[x_index]], family.n))
    dropped = subspace_intersection(survivors, x_perp)
    bound = y_size_bound(family.n, len(nx), peel_index)
    return NeighborhoodDiagnostic(
        x_index=x_index,
        core_indices=core,
        neighbor_indices=nx,
        dominated_indices=dominated,
        dim_drop=core_span.rank - dropped.rank,
        y_bound=bound,
        y_bound_holds=len(dominated) < bound,
        peel_index=peel_index,
    )
