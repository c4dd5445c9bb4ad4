"""Exhaustive freeness checking with witnesses, and the partite-representation test."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import StarVector, Subgraph, expand_edges
from .counting import CycleWitness, find_cycle
from .errors import BadRange, MixedDimensions


@dataclass(frozen=True)
class FreenessVerdict:
    """free=False comes with a witness that itself lies in the checked graph."""

    free: bool
    witness: StarVector | CycleWitness | None
    checked_count: int


def _colex_combinations(n: int, k: int):
    return sorted(itertools.combinations(range(n), k), key=lambda c: c[::-1])


def is_qk_free(g: Subgraph, k: int) -> FreenessVerdict:
    """Scan all Q_k names (colex position sets, ascending fills); stop at the
    first one fully contained in g."""
    if not 1 <= k <= g.n:
        raise BadRange(f"need 1 <= k <= n, got k={k}, n={g.n}")
    has = g.edges.__contains__
    checked = 0
    for pos in _colex_combinations(g.n, k):
        others = [i for i in range(g.n) if i not in pos]
        for fill in range(1 << (g.n - k)):
            cells = ["*"] * g.n
            for j, i in enumerate(others):
                cells[i] = "01"[fill >> j & 1]
            sv = StarVector(g.n, "".join(cells))
            checked += 1
            if all(has(e.cells) for e in expand_edges(sv)):
                return FreenessVerdict(False, sv, checked)
    return FreenessVerdict(True, None, checked)


def is_c2k_free(g: Subgraph, k: int) -> FreenessVerdict:
    """First 2k-cycle in canonical order, if any.

    checked_count here is the number of DFS extension attempts, not a number
    of whole cycles (there is no useful candidate list for cycles).
    """
    if k < 2:
        raise BadRange(f"need k >= 2, got {k}")
    witness, nodes = find_cycle(g, 2 * k)
    if witness is None:
        return FreenessVerdict(True, None, nodes)
    return FreenessVerdict(False, witness, nodes)


@dataclass(frozen=True)
class PartiteRepresentation:
    """A coloring of coordinate positions by {1..k} that is rainbow on the
    non-zero positions of every edge."""

    ell: int
    k: int
    sigma: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"ell": self.ell, "k": self.k, "sigma": list(self.sigma)}


def _nonzero_positions(sv: StarVector) -> tuple[int, ...]:
    return tuple(i for i, c in enumerate(sv.cells) if c != "0")


def has_k_partite_representation(edges, k: int) -> PartiteRepresentation | None:
    """Find sigma: positions -> {1..k} giving every edge k distinctly-colored
    non-zero positions, or None.

    Only positions that are non-zero in some edge are constrained; the rest
    map to 1. The search assigns constrained positions in increasing order,
    smallest color first, so the returned sigma is deterministic.
    """
    edges = list(edges)
    if not edges:
        raise BadRange("edge list must be non-empty")
    if k < 1:
        raise BadRange(f"need k >= 1, got {k}")
    ell = edges[0].n
    for sv in edges:
        if sv.n != ell:
            raise MixedDimensions(f"edges mix dimensions {ell} and {sv.n}")
        if sv.k != 1:
            raise BadRange(f"{sv.cells!r} is not an edge")
    supports = [_nonzero_positions(sv) for sv in edges]
    if any(len(s) != k for s in supports):
        return None
    used = sorted({p for s in supports for p in s})
    conflicts: dict[int, set[int]] = {p: set() for p in used}
    for s in supports:
        for a, b in itertools.combinations(s, 2):
            conflicts[a].add(b)
            conflicts[b].add(a)
    color: dict[int, int] = {}

    def assign(idx: int) -> bool:
        if idx == len(used):
            return True
        p = used[idx]
        taken = {color[q] for q in conflicts[p] if q in color}
        for c in range(1, k + 1):
            if c in taken:
                continue
            color[p] = c
            if assign(idx + 1):
                return True
            del color[p]
        return False

    if not assign(0):
        return None
    sigma = tuple(color.get(p, 1) for p in range(ell))
    return PartiteRepresentation(ell, k, sigma)
