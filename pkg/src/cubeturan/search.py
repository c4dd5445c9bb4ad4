"""Exact small-n solving of the constrained maximization:

    most copies of a target pattern in a forbidden-pattern-free subgraph of Q_n.

Exhaustive 2^(edges) scan is guaranteed for n <= 3; branch-and-bound is
best-effort for n = 4 under a node/time budget.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .core import Subgraph, expand_edges, full_cube, iter_star_vectors
from .counting import ambient_count, count_in_subgraph, enumerate_cycle_witnesses
from .errors import BadRange, BudgetExceeded, CubeError, DimensionTooLarge
from .patterns import EDGE, SUBCUBE, Pattern
from .verification import is_c2k_free, is_qk_free

SEARCH_MAX_N = 4
EXHAUSTIVE_MAX_N = 3


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: Subgraph
    ambient_total: int
    density: Fraction
    nodes_explored: int
    method: str

    def to_json_dict(self) -> dict:
        return {
            "value": str(self.value),
            "ambient_total": str(self.ambient_total),
            "density": {"num": str(self.density.numerator), "den": str(self.density.denominator)},
            "nodes_explored": self.nodes_explored,
            "method": self.method,
            "witness_edges": self.witness.sorted_edges(),
        }


def pattern_copies(n: int, pattern: Pattern) -> list[frozenset[str]]:
    """Every copy of the pattern in Q_n, as a frozenset of edge keys."""
    if pattern.kind == EDGE:
        return [frozenset([e]) for e in full_cube(n).sorted_edges()]
    if pattern.kind == SUBCUBE:
        if pattern.order > n:
            return []
        return [
            frozenset(e.cells for e in expand_edges(sv))
            for sv in iter_star_vectors(n, pattern.order)
        ]
    return [
        frozenset(w.edge_keys())
        for w in enumerate_cycle_witnesses(full_cube(n), pattern.order)
    ]


def _verify_free(g: Subgraph, forbid: Pattern) -> bool:
    if forbid.kind == EDGE:
        return g.edge_count == 0
    if forbid.kind == SUBCUBE:
        return forbid.order > g.n or is_qk_free(g, forbid.order).free
    return is_c2k_free(g, forbid.order // 2).free


def exact_extremal(n: int, target: Pattern, forbid: Pattern,
                   budget_nodes: int | None = None,
                   budget_seconds: float | None = None,
                   method: str = "auto") -> SearchResult:
    """Exact optimum with a certified witness.

    method "auto" runs branch-and-bound; "exhaustive" scans all edge subsets
    (n <= 3 only) and exists as an independent cross-check of the solver.
    Raises BudgetExceeded (with bounds) when the budget runs out first.
    """
    if target == forbid:
        raise BadRange("target and forbidden patterns must differ")
    if n < 1 or n > SEARCH_MAX_N:
        raise DimensionTooLarge(f"exact search supports 1 <= n <= {SEARCH_MAX_N}, got {n}")
    if method not in ("auto", "exhaustive"):
        raise BadRange(f"unknown method {method!r}")
    if method == "exhaustive" and n > EXHAUSTIVE_MAX_N:
        raise DimensionTooLarge(f"exhaustive scan supports n <= {EXHAUSTIVE_MAX_N}")

    ambient = ambient_count(n, target)
    if ambient == 0:
        raise BadRange(f"target {target} has no copies in Q_{n}")

    # fixed edge order: most target copies first, then lexicographic
    edges = full_cube(n).sorted_edges()
    tcopies = pattern_copies(n, target)
    fcopies = pattern_copies(n, forbid)
    per_edge = {e: 0 for e in edges}
    for c in tcopies:
        for e in c:
            per_edge[e] += 1
    edges.sort(key=lambda e: (-per_edge[e], e))
    eidx = {e: i for i, e in enumerate(edges)}
    tmasks = sorted(sum(1 << eidx[e] for e in c) for c in tcopies)
    fmasks = sorted(sum(1 << eidx[e] for e in c) for c in fcopies)

    if method == "exhaustive":
        value, kept, nodes = _exhaustive(len(edges), tmasks, fmasks)
    else:
        value, kept, nodes = _branch_and_bound(
            len(edges), tmasks, fmasks, budget_nodes, budget_seconds
        )

    witness = Subgraph(
        n,
        frozenset(edges[i] for i in range(len(edges)) if kept >> i & 1),
        name=f"extremal(n={n},target={target},forbid={forbid})",
    )
    if not _verify_free(witness, forbid):
        raise CubeError("internal error: witness failed re-verification")
    recount = count_in_subgraph(witness, target)
    if recount != value:
        raise CubeError(f"internal error: witness recounts to {recount}, not {value}")
    return SearchResult(value, witness, ambient, Fraction(value, ambient),
                        nodes, method if method == "exhaustive" else "branch-and-bound")


def _exhaustive(ne: int, tmasks, fmasks) -> tuple[int, int, int]:
    best, best_kept = -1, 0
    for keep in range(1 << ne):
        if any(f & keep == f for f in fmasks):
            continue
        cnt = sum(1 for t in tmasks if t & keep == t)
        if cnt > best:
            best, best_kept = cnt, keep
    return best, best_kept, 1 << ne


def _branch_and_bound(ne, tmasks, fmasks, budget_nodes, budget_seconds):
    all_mask = (1 << ne) - 1
    if not fmasks:
        return len(tmasks), all_mask, 1

    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    state = {"nodes": 0, "best": -1, "best_kept": 0}
    open_ubs: list[int] = [len(tmasks)]  # root bound; ancestors push theirs below

    def propagate(kept: int, deleted: int):
        # a forbidden copy whose edges are all kept is a dead end; one with a
        # single undecided edge forces that edge deleted
        changed = True
        while changed:
            changed = False
            for f in fmasks:
                if f & deleted:
                    continue
                und = f & ~kept
                if und == 0:
                    return None
                if und & (und - 1) == 0:
                    deleted |= und
                    changed = True
        return deleted

    def upper_bound(deleted: int) -> int:
        return sum(1 for t in tmasks if not t & deleted)

    def dfs(kept: int, deleted: int) -> None:
        state["nodes"] += 1
        if budget_nodes is not None and state["nodes"] > budget_nodes:
            raise BudgetExceeded(
                "node budget exhausted",
                lower=max(state["best"], 0),
                upper=max([state["best"]] + open_ubs),
                nodes_explored=state["nodes"],
            )
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(
                "time budget exhausted",
                lower=max(state["best"], 0),
                upper=max([state["best"]] + open_ubs),
                nodes_explored=state["nodes"],
            )
        prop = propagate(kept, deleted)
        if prop is None:
            return
        deleted = prop
        ub = upper_bound(deleted)
        if ub <= state["best"]:
            return
        unhit = None
        for f in fmasks:
            if not f & deleted:
                unhit = f
                break
        if unhit is None:
            # every forbidden copy is broken: keeping all undecided edges is optimal here
            state["best"] = ub
            state["best_kept"] = all_mask & ~deleted
            return
        # one edge of the unhit copy must go; branch "delete e_i, keep e_1..e_{i-1}"
        open_ubs.append(ub)
        und = unhit & ~kept
        acc = kept
        while und:
            bit = und & -und
            und ^= bit
            dfs(acc, deleted | bit)
            acc |= bit
        open_ubs.pop()

    # Q_n is edge-transitive and Q_n itself is infeasible here, so some optimal
    # solution deletes the first edge in the fixed order: fix it at the root.
    try:
        dfs(0, 1)
    except BudgetExceeded:
        raise
    return state["best"], state["best_kept"], state["nodes"]


def density(n: int, target: Pattern, forbid: Pattern,
            budget_nodes: int | None = None,
            budget_seconds: float | None = None) -> Fraction:
    """Optimal target count divided by the ambient count, as an exact rational."""
    return exact_extremal(n, target, forbid, budget_nodes, budget_seconds).density
