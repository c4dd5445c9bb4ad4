"""Exact counting: subcube copies, even cycles, the z-table, residue binomial sums.

All counts are exact arbitrary-precision ints; densities are exact Fractions.
Closed-form counts have no dimension cap; enumerations are capped (see
CYCLE_ENUM_MAX_N and the n<=30 materialization cap in core).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ._kernels import count_cycles_kernel, find_cycle_kernel
from ._version import __version__
from .core import (
    Subgraph,
    adjacency_lists,
    edge_key_from_endpoints,
    expand_edges,
    full_cube,
    iter_star_vectors,
)
from .errors import (
    BadLength,
    BadRange,
    EnumerationTooLarge,
    MissingZEntry,
)
from .patterns import CYCLE, EDGE, SUBCUBE, Pattern

#: cycle enumeration works on 2^n adjacency lists; beyond this it is refused
CYCLE_ENUM_MAX_N = 12


def closed_count_qk(n: int, k: int) -> int:
    """N(Q_n, Q_k) = C(n,k) * 2^(n-k)."""
    if n < 1 or not 0 <= k <= n:
        raise BadRange(f"need 0 <= k <= n with n >= 1, got n={n}, k={k}")
    return math.comb(n, k) << (n - k)


def closed_count_edges(n: int) -> int:
    """||Q_n|| = n * 2^(n-1)."""
    if n < 1:
        raise BadRange(f"dimension must be positive, got {n}")
    return n << (n - 1)


def min_star_count(ell: int) -> int:
    """Least k such that Q_k can host a 2l-cycle: ceil(log2(2l))."""
    return (2 * ell - 1).bit_length()


def closed_count_c2l(n: int, ell: int, z) -> int:
    """N(Q_n, C_2l) = sum over k of C(n,k) * 2^(n-k) * z_{k,l}.

    k runs from ceil(log2(2l)) to min(l, n). `z` may be a plain mapping
    (missing entries raise MissingZEntry) or a ZTable (computes on demand).
    """
    if n < 1 or ell < 2 or ell > 1 << (n - 1):
        raise BadRange(f"need 2 <= l <= 2^(n-1), got n={n}, l={ell}")
    total = 0
    for k in range(min_star_count(ell), min(ell, n) + 1):
        if isinstance(z, ZTable):
            zk = z.get(k, ell)
        else:
            try:
                zk = z[k, ell]
            except KeyError:
                raise MissingZEntry(f"no z entry for (k={k}, l={ell})") from None
        total += math.comb(n, k) * (1 << (n - k)) * zk
    return total


def z_kl(k: int, ell: int) -> int:
    """Number of 2l-cycles in Q_k whose edges use all k star positions.

    Zero exactly when k > l or k < ceil(log2(2l)); otherwise found by direct
    canonical cycle enumeration in Q_k.
    """
    if k < 1 or ell < 2:
        raise BadRange(f"need k >= 1 and l >= 2, got k={k}, l={ell}")
    if k > ell or k < min_star_count(ell):
        return 0
    if k > CYCLE_ENUM_MAX_N:
        raise EnumerationTooLarge(f"z_kl enumeration refused for k={k} > {CYCLE_ENUM_MAX_N}")
    adj = adjacency_lists(full_cube(k))
    return count_cycles_kernel(adj, 2 * ell, required_mask=(1 << k) - 1)


class ZTable:
    """Memoized z_{k,l} values with optional text-file persistence.

    File lines are `z <k> <l> <value>`; a `# cubeturan-ztable <version>`
    header keys the cache to the tool version (stale caches are discarded).
    """

    HEADER = "# cubeturan-ztable"

    def __init__(self, path=None):
        self.path = path
        self._values: dict[tuple[int, int], int] = {}
        if path is not None and os.path.exists(path):
            self._load(path)

    def _load(self, path) -> None:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        if not lines or lines[0].strip() != f"{self.HEADER} {__version__}":
            return  # stale or foreign cache: recompute rather than trust it
        for line in lines[1:]:
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 4 or parts[0] != "z":
                raise BadRange(f"bad z-table line {text!r}")
            self._values[int(parts[1]), int(parts[2])] = int(parts[3])

    def save(self, path=None) -> None:
        path = path or self.path
        if path is None:
            return
        lines = [f"{self.HEADER} {__version__}"]
        for (k, ell), v in sorted(self._values.items()):
            lines.append(f"z {k} {ell} {v}")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")

    def get(self, k: int, ell: int) -> int:
        if k > ell or k < min_star_count(ell):
            return 0
        if (k, ell) not in self._values:
            self._values[k, ell] = z_kl(k, ell)
            self.save()
        return self._values[k, ell]

    def __contains__(self, key) -> bool:
        return key in self._values

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._values)


@dataclass(frozen=True)
class CycleWitness:
    """A cycle as its canonical closed vertex sequence.

    Canonical means: of the 4l rotations/reflections, the stored tuple is the
    lexicographically smallest (so it starts at the minimum vertex and its
    second entry is below its last).
    """

    n: int
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        L = len(vs)
        if L < 4 or L % 2:
            raise BadLength(f"cycle length must be even and >= 4, got {L}")
        if len(set(vs)) != L:
            raise BadRange("cycle vertices must be distinct")
        for i, v in enumerate(vs):
            if not 0 <= v < 1 << self.n:
                raise BadRange(f"vertex {v} outside Q_{self.n}")
            if ((v ^ vs[(i + 1) % L]).bit_count()) != 1:
                raise BadRange("consecutive cycle vertices must be adjacent")
        if vs[0] != min(vs) or vs[1] > vs[-1]:
            raise BadRange("cycle sequence is not in canonical orientation")

    @classmethod
    def from_vertices(cls, n: int, vertices) -> "CycleWitness":
        """Canonicalize an arbitrary closed sequence (any rotation/direction)."""
        vs = list(vertices)
        i = vs.index(min(vs))
        fwd = tuple(vs[(i + j) % len(vs)] for j in range(len(vs)))
        bwd = tuple(vs[(i - j) % len(vs)] for j in range(len(vs)))
        return cls(n, min(fwd, bwd))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def star_list(self) -> tuple[int, ...]:
        vs = self.vertices
        return tuple(
            (vs[i] ^ vs[(i + 1) % len(vs)]).bit_length() - 1 for i in range(len(vs))
        )

    def edge_keys(self) -> list[str]:
        vs = self.vertices
        return [
            edge_key_from_endpoints(vs[i], vs[(i + 1) % len(vs)], self.n)
            for i in range(len(vs))
        ]

    def to_json_dict(self) -> dict:
        return {"length": self.length, "vertices": list(self.vertices)}


def _check_cycle_args(g: Subgraph, length: int) -> None:
    if length < 4 or length % 2:
        raise BadLength(f"cycle length must be even and >= 4, got {length}")
    if g.n > CYCLE_ENUM_MAX_N:
        raise EnumerationTooLarge(
            f"cycle enumeration refused for n={g.n} > {CYCLE_ENUM_MAX_N}"
        )


def count_cycles(g: Subgraph, length: int, threads: int = 1) -> int:
    """Number of distinct cycles on `length` vertices contained in g.

    The total is a sum of per-start-vertex counts, so it is independent of
    how the start range is partitioned across threads.
    """
    _check_cycle_args(g, length)
    if length > 1 << g.n:
        return 0
    adj = adjacency_lists(g)
    nv = len(adj)
    if threads <= 1:
        return count_cycles_kernel(adj, length)
    chunk = max(1, -(-nv // (4 * threads)))
    ranges = [(lo, min(lo + chunk, nv)) for lo in range(0, nv, chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda r: count_cycles_kernel(adj, length, 0, r[0], r[1]), ranges
        )
        return sum(parts)


def find_cycle(g: Subgraph, length: int):
    """First cycle of the given length in canonical order, or None.

    Returns (CycleWitness | None, extension_attempts).
    """
    _check_cycle_args(g, length)
    if length > 1 << g.n:
        return None, 0
    path, nodes = find_cycle_kernel(adjacency_lists(g), length)
    if path is None:
        return None, nodes
    return CycleWitness(g.n, path), nodes


def enumerate_cycle_witnesses(g: Subgraph, length: int) -> list[CycleWitness]:
    """All cycles of the given length, in canonical DFS order.

    Kept in pure Python and separate from the counting kernel; tests compare
    its length against count_cycles.
    """
    _check_cycle_args(g, length)
    if length > 1 << g.n:
        return []
    adj = adjacency_lists(g)
    adj_bits = [sum(1 << w for w in row) for row in adj]
    out: list[CycleWitness] = []
    in_path = bytearray(len(adj))

    def extend(path: list[int], used_mask: int) -> None:
        s = path[0]
        cur = path[-1]
        d = len(path) - 1
        if d == length - 1:
            return  # closing handled one level up
        for w in adj[cur]:
            if w <= s or in_path[w]:
                continue
            if (w ^ s).bit_count() > length - d - 1:
                continue
            if d + 1 == length - 1:
                if w > path[1] and adj_bits[w] >> s & 1:
                    out.append(CycleWitness(g.n, tuple(path) + (w,)))
                continue
            in_path[w] = 1
            path.append(w)
            extend(path, used_mask)
            path.pop()
            in_path[w] = 0

    for s in range(len(adj)):
        if len(adj[s]) < 2:
            continue
        in_path[s] = 1
        extend([s], 0)
        in_path[s] = 0
    return out


def count_copies_qk(g: Subgraph, ell: int, threads: int = 1) -> int:
    """Number of Q_l subcube names all of whose edges lie in g."""
    if not 0 <= ell <= g.n:
        raise BadRange(f"need 0 <= l <= n, got l={ell}, n={g.n}")
    if ell == 0:
        return 1 << g.n  # every vertex, vacuously
    has = g.edges.__contains__
    count = 0
    for sv in iter_star_vectors(g.n, ell):
        if all(has(e.cells) for e in expand_edges(sv)):
            count += 1
    return count


def binomial_residue_sum(m: int, r: int, a: int) -> int:
    """Exact sum of C(m, a + r*t) over t >= 0."""
    if m < 0 or not 0 <= a < r:
        raise BadRange(f"need m >= 0 and 0 <= a < r, got m={m}, r={r}, a={a}")
    return sum(math.comb(m, i) for i in range(a, m + 1, r))


def ambient_count(n: int, pattern: Pattern, z=None) -> int:
    """N(Q_n, pattern) by closed form (0 when a cycle cannot fit)."""
    if pattern.kind == EDGE:
        return closed_count_edges(n)
    if pattern.kind == SUBCUBE:
        if pattern.order > n:
            return 0
        return closed_count_qk(n, pattern.order)
    ell = pattern.order // 2
    if 2 * ell > 1 << n:
        return 0
    return closed_count_c2l(n, ell, z if z is not None else ZTable())


def count_in_subgraph(g: Subgraph, pattern: Pattern, threads: int = 1) -> int:
    """N(g, pattern) by enumeration."""
    if pattern.kind == EDGE:
        return g.edge_count
    if pattern.kind == SUBCUBE:
        if pattern.order > g.n:
            return 0
        return count_copies_qk(g, pattern.order, threads=threads)
    return count_cycles(g, pattern.order, threads=threads)


@dataclass(frozen=True)
class CountReport:
    n: int
    pattern: str
    count: int
    ambient_total: int
    density: Fraction
    method: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "count": str(self.count),
            "ambient_total": str(self.ambient_total),
            "density": {"num": str(self.density.numerator), "den": str(self.density.denominator)},
            "method": self.method,
        }


def count_report(n: int, pattern: Pattern, g: Subgraph | None = None,
                 z=None, threads: int = 1) -> CountReport:
    """Count a pattern in Q_n (closed form) or in a given subgraph (enumeration).

    Closed-form counting has no dimension cap; only the subgraph path
    materializes per-edge state.
    """
    if n < 1:
        raise BadRange(f"dimension must be positive, got {n}")
    ambient = ambient_count(n, pattern, z=z)
    if g is None:
        count = ambient
        method = "closed-form"
    else:
        if g.n != n:
            raise BadRange(f"subgraph has n={g.n}, expected {n}")
        count = count_in_subgraph(g, pattern, threads=threads)
        method = "enumeration"
    density = Fraction(count, ambient) if ambient else Fraction(0)
    return CountReport(n, str(pattern), count, ambient, density, method)
