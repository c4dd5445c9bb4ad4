"""Deterministic generators for the known extremal constructions.

Each generator returns an immutable Subgraph (or an explicit cycle family)
tagged with a provenance name.  Identical parameters always produce identical
edge sets, so saved files are byte-for-byte reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    STAR,
    StarVector,
    Subgraph,
    check_dimension,
    expand_edges,
    full_cube,
    iter_star_vectors,
)
from .counting import CycleWitness, binomial_residue_sum, find_cycle
from .errors import BadRange, CycleDoesNotFit


def _ones(s: str) -> int:
    return s.count("1")


def _edge_split(key: str) -> tuple[str, str]:
    p = key.index(STAR)
    return key[:p], key[p + 1:]


# ---------------------------------------------------------------------------
# layer graphs

def layer_union_mod(n: int, k: int, j: int, complement: bool = False) -> Subgraph:
    """Union of the edge layers congruent to j mod k (or its complement in Q_n).

    The complement (all layers not congruent to j) is Q_k-free: a Q_k spans k
    consecutive edge layers, which hit every residue class mod k.
    """
    if k < 1 or not 0 <= j < k:
        raise BadRange(f"need k >= 1 and 0 <= j < k, got k={k}, j={j}")
    cube = full_cube(n)
    want = (lambda key: _ones(key) % k != j) if complement else (lambda key: _ones(key) % k == j)
    name = f"layer-mod(n={n},k={k},j={j},complement={complement})"
    return Subgraph(n, frozenset(e for e in cube.edges if want(e)), name)


def layer_complement(n: int, k: int, i: int) -> Subgraph:
    """All edge layers except those congruent to i mod k; Q_k-free."""
    if not 2 <= k <= n:
        raise BadRange(f"need 2 <= k <= n, got k={k}, n={n}")
    g = layer_union_mod(n, k, i, complement=True)
    return g.replace_name(f"layer-complement(n={n},k={k},i={i})")


def even_odd_layers(n: int, j: int) -> Subgraph:
    """Edges in layers of parity j. C_4-free for any n: a 4-cycle always uses
    two adjacent layers."""
    if j not in (0, 1):
        raise BadRange(f"parity must be 0 or 1, got {j}")
    g = layer_union_mod(n, 2, j)
    return g.replace_name(f"even-odd(n={n},j={j})")


# ---------------------------------------------------------------------------
# deletion graphs driven by prefix/suffix residues

def aks_deletes(key: str, k: int, i: int, j: int) -> bool:
    """Deletion predicate: ones(prefix) = i mod floor((k+1)/2) and
    ones(suffix) = j mod ceil((k+1)/2)."""
    lo, hi = (k + 1) // 2, (k + 2) // 2
    left, right = _edge_split(key)
    return _ones(left) % lo == i and _ones(right) % hi == j


def aks_graph(n: int, k: int, i: int, j: int) -> Subgraph:
    """Q_n minus the edges hit by the (i, j) residue pair; Q_k-free.

    Any Q_k has enough stars on both sides of its middle star to realize
    every residue pair, so some edge of it is always deleted.
    """
    lo, hi = (k + 1) // 2, (k + 2) // 2
    if k < 2:
        raise BadRange(f"need k >= 2, got {k}")
    if not 0 <= i < lo or not 0 <= j < hi:
        raise BadRange(f"need 0 <= i < {lo} and 0 <= j < {hi}, got i={i}, j={j}")
    cube = full_cube(n)
    keep = frozenset(e for e in cube.edges if not aks_deletes(e, k, i, j))
    return Subgraph(n, keep, f"aks(n={n},k={k},i={i},j={j})")


def aks_appendix_deletes(key: str, k: int) -> bool:
    """Variant predicate with both residues 0 and moduli floor/ceil((k-1)/2)."""
    lo, hi = (k - 1) // 2, k // 2
    left, right = _edge_split(key)
    return _ones(left) % lo == 0 and _ones(right) % hi == 0


def aks_appendix_graph(n: int, k: int) -> Subgraph:
    """Single-graph variant of the residue deletion; Q_k-free for k >= 3."""
    if k < 3:
        raise BadRange(f"need k >= 3 (positive moduli), got {k}")
    cube = full_cube(n)
    keep = frozenset(e for e in cube.edges if not aks_appendix_deletes(e, k))
    return Subgraph(n, keep, f"aks-appendix(n={n},k={k})")


# ---------------------------------------------------------------------------
# parity-selected Q_2 packing (C_6-free)

def _even_weight_words(m: int):
    for bits in range(1 << m):
        if bits.bit_count() % 2 == 0:
            yield "".join("01"[bits >> i & 1] for i in range(m))


def parity_q2_selection(n: int) -> list[StarVector]:
    """Q_2 names with adjacent stars at (s, s+1), s even 0-based (odd in
    1-based prose), and even ones-counts in both prefix and suffix."""
    if n < 3:
        raise BadRange(f"need n >= 3, got {n}")
    out = []
    for s in range(0, n - 1, 2):
        for pre in _even_weight_words(s):
            for suf in _even_weight_words(n - s - 2):
                out.append(StarVector(n, pre + STAR + STAR + suf))
    return out


def parity_q2_packing(n: int) -> Subgraph:
    """Union of the parity-selected Q_2's; the selection is edge-disjoint and
    the union is C_6-free."""
    edges = set()
    for sv in parity_q2_selection(n):
        edges.update(e.cells for e in expand_edges(sv))
    return Subgraph(n, frozenset(edges), f"parity-q2(n={n})")


# ---------------------------------------------------------------------------
# the mod-3 congruence graph and its explicit cycle families

def conder_graph(n: int) -> Subgraph:
    """Edges with ones(prefix) - ones(suffix) = 0 mod 3 (Conder's 3-coloring
    class); C_6-free."""
    check_dimension(n)
    cube = full_cube(n)
    keep = frozenset(
        e for e in cube.edges
        if (_ones(_edge_split(e)[0]) - _ones(_edge_split(e)[1])) % 3 == 0
    )
    return Subgraph(n, keep, f"conder(n={n})")


def _mod3_targets(ell: int) -> tuple[int, ...]:
    # inter-star segments p_0..p_l; for l in {4,5} the middle segments need
    # ones = 1 mod 3, the outer ones 0; for l >= 6 all segments need 0.
    if ell >= 6:
        return (0,) * (ell + 1)
    return (0,) + (1,) * (ell - 1) + (0,)


def _segments(sv: StarVector) -> list[str]:
    return sv.cells.split(STAR)


def mod3_selected(sv: StarVector) -> bool:
    """Does this Q_l name satisfy the segment residue pattern?"""
    targets = _mod3_targets(sv.k)
    segs = _segments(sv)
    return all(_ones(s) % 3 == t for s, t in zip(segs, targets))


def mod3_ql_selection(n: int, ell: int) -> list[StarVector]:
    """All selected Q_l names, by enumeration (selection order is the
    deterministic subcube iteration order)."""
    if ell < 4 or n < ell:
        raise BadRange(f"need l >= 4 and n >= l, got l={ell}, n={n}")
    return [sv for sv in iter_star_vectors(n, ell) if mod3_selected(sv)]


def mod3_ql_selection_count(n: int, ell: int) -> int:
    """Exact selection cardinality via residue-class binomial sums; usable
    when full enumeration is too large."""
    if ell < 4 or n < ell:
        raise BadRange(f"need l >= 4 and n >= l, got l={ell}, n={n}")
    targets = _mod3_targets(ell)
    total = 0
    for pos in itertools.combinations(range(n), ell):
        prev = -1
        ways = 1
        for idx, p in enumerate(pos):
            ways *= binomial_residue_sum(p - prev - 1, 3, targets[idx])
            prev = p
        ways *= binomial_residue_sum(n - 1 - prev, 3, targets[ell])
        total += ways
    return total


#: explicit star-position value tables for the in-subcube cycles, one row per
#: vertex; row char i is the value at the i-th star (ascending positions)
_CYCLE_ROWS_L4 = ("0000", "1000", "1100", "1110", "1111", "0111", "0011", "0001")
_CYCLE_ROWS_L5 = ("00100", "01100", "01101", "01001", "11001", "11011",
                  "10011", "10010", "10110", "00110")


def _cycle_row_masks(ell: int) -> list[int]:
    if ell == 4:
        rows = _CYCLE_ROWS_L4
    elif ell == 5:
        rows = _CYCLE_ROWS_L5
    else:
        # sliding 111-block, then a fixed 5-edge closing tail
        sets = [{0, 1, 2}]
        for t in range(ell - 3):
            sets.append({t, t + 1, t + 2, t + 3})
            sets.append({t + 1, t + 2, t + 3})
        sets.append({1, ell - 3, ell - 2, ell - 1})
        sets.append({1, ell - 3, ell - 2})
        sets.append({1, ell - 2})
        sets.append({1, 2, ell - 2})
        sets.append({0, 1, 2, ell - 2})
        return [sum(1 << i for i in s) for s in sets]
    return [sum(1 << i for i, c in enumerate(r) if c == "1") for r in rows]


@dataclass(frozen=True)
class CycleFamily:
    """One explicit 2l-cycle inside each selected Q_l, plus their union."""

    n: int
    ell: int
    members: tuple[tuple[StarVector, CycleWitness], ...]
    union_graph: Subgraph = field(compare=False)


def conder_cycle_family(n: int, ell: int) -> CycleFamily:
    """For every mod-3 selected Q_l, the explicit 2l-cycle using all of its
    star positions; every edge of every member lies in conder_graph(n)."""
    if ell < 4 or n < ell:
        raise BadRange(f"need l >= 4 and n >= l, got l={ell}, n={n}")
    rows = _cycle_row_masks(ell)
    members = []
    union: set[str] = set()
    for sv in mod3_ql_selection(n, ell):
        base = sum(1 << i for i, c in enumerate(sv.cells) if c == "1")
        stars = sv.star_positions
        vertices = []
        for mask in rows:
            v = base
            for idx in range(ell):
                if mask >> idx & 1:
                    v |= 1 << stars[idx]
            vertices.append(v)
        witness = CycleWitness.from_vertices(n, vertices)
        members.append((sv, witness))
        union.update(witness.edge_keys())
    graph = Subgraph(n, frozenset(union), f"conder-cycles(n={n},l={ell})")
    return CycleFamily(n, ell, tuple(members), graph)


# ---------------------------------------------------------------------------
# vertex-disjoint subcube packings

def disjoint_qm_packing(n: int, m: int, with_cycles: bool = False,
                        ell: int | None = None) -> Subgraph:
    """2^(n-m) vertex-disjoint Q_m's (stars in the first m positions).

    Without cycles: the full union, which contains no cycle longer than 2^m.
    With cycles: one canonical 2l-cycle per copy (the lexicographically
    smallest in Q_m, translated into each copy), which contains no other
    cycle lengths at all.
    """
    if not 1 <= m <= n:
        raise BadRange(f"need 1 <= m <= n, got m={m}, n={n}")
    if not with_cycles:
        cube = full_cube(n)
        keep = frozenset(e for e in cube.edges if e.index(STAR) < m)
        return Subgraph(n, keep, f"qm-packing(n={n},m={m})")
    if ell is None or ell < 2:
        raise BadRange(f"with_cycles needs l >= 2, got {ell}")
    if 2 * ell > 1 << m:
        raise CycleDoesNotFit(f"C_{2 * ell} needs {2 * ell} vertices, Q_{m} has {1 << m}")
    witness, _ = find_cycle(full_cube(m), 2 * ell)
    if witness is None:  # cannot happen: Q_m hosts all even lengths up to 2^m
        raise CycleDoesNotFit(f"no C_{2 * ell} found in Q_{m}")
    edges = set()
    for fill in range(1 << (n - m)):
        offset = fill << m
        shifted = CycleWitness.from_vertices(
            n, [v | offset for v in witness.vertices]
        )
        edges.update(shifted.edge_keys())
    return Subgraph(n, frozenset(edges), f"qm-packing(n={n},m={m},c{2 * ell})")


# ---------------------------------------------------------------------------
# construction registry (the CLI dispatch surface)

KINDS = (
    "layer-complement", "aks", "aks-appendix", "parity-q2", "conder",
    "mod3-select", "conder-cycles", "qm-packing", "layer-mod", "even-odd",
)


@dataclass(frozen=True)
class ConstructionSpec:
    """A named construction plus its validated integer/flag parameters."""

    kind: str
    params: dict

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadRange(f"unknown construction {self.kind!r}")

    def _p(self, name: str) -> int:
        if name not in self.params:
            raise BadRange(f"construction {self.kind!r} needs parameter {name!r}")
        return self.params[name]

    def build(self) -> Subgraph:
        kind = self.kind
        if kind == "layer-complement":
            return layer_complement(self._p("n"), self._p("k"), self._p("i"))
        if kind == "aks":
            return aks_graph(self._p("n"), self._p("k"), self._p("i"), self._p("j"))
        if kind == "aks-appendix":
            return aks_appendix_graph(self._p("n"), self._p("k"))
        if kind == "parity-q2":
            return parity_q2_packing(self._p("n"))
        if kind == "conder":
            return conder_graph(self._p("n"))
        if kind == "mod3-select":
            edges = set()
            for sv in mod3_ql_selection(self._p("n"), self._p("l")):
                edges.update(e.cells for e in expand_edges(sv))
            return Subgraph(self._p("n"), frozenset(edges),
                            f"mod3-select(n={self._p('n')},l={self._p('l')})")
        if kind == "conder-cycles":
            return conder_cycle_family(self._p("n"), self._p("l")).union_graph
        if kind == "qm-packing":
            return disjoint_qm_packing(
                self._p("n"), self._p("m"),
                with_cycles=bool(self.params.get("with_cycles")),
                ell=self.params.get("l"),
            )
        if kind == "layer-mod":
            return layer_union_mod(self._p("n"), self._p("k"), self._p("j"),
                                   complement=bool(self.params.get("complement")))
        return even_odd_layers(self._p("n"), self._p("j"))

    def claimed_free_of(self) -> str | None:
        kind = self.kind
        if kind in ("layer-complement", "aks", "aks-appendix"):
            return f"q{self._p('k')}"
        if kind in ("parity-q2", "conder", "conder-cycles"):
            return "c6"
        if kind == "even-odd":
            return "c4"
        if kind == "layer-mod":
            if self.params.get("complement"):
                return f"q{self._p('k')}"
            return "c4" if self._p("k") == 2 else None
        if kind == "qm-packing":
            if self.params.get("with_cycles"):
                return f"every even cycle except c{2 * self._p('l')}"
            return f"every cycle longer than {1 << self._p('m')}"
        return None
