"""Hypercube primitives: star vectors, edges, subgraphs, automorphisms, file I/O.

Conventions (used everywhere in the package):

* positions are 0-based and read left to right, so ``cells[i]`` is position i;
* a vertex is a plain int whose bit i is the value at position i (position 0
  is the least significant bit);
* an edge is identified by its star string, e.g. ``01*10`` — the canonical
  edge key used in sets and files;
* subgraphs are edge sets on the full vertex set of Q_n and are immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadChar,
    BadLength,
    BadRange,
    DimensionMismatch,
    DimensionTooLarge,
    DuplicateEdge,
    NoStars,
    ParseError,
)

STAR = "*"
ALPHABET = frozenset("01*")

#: operations that materialize per-vertex or per-edge state refuse n above this
MAX_MATERIALIZED_N = 30

FILE_MAGIC = "cube v1"


def check_dimension(n: int) -> None:
    if n < 1:
        raise BadRange(f"dimension must be positive, got {n}")
    if n > MAX_MATERIALIZED_N:
        raise DimensionTooLarge(f"n={n} exceeds the materialization cap {MAX_MATERIALIZED_N}")


@dataclass(frozen=True)
class StarVector:
    """A word over {0,1,*} naming a subcube of Q_n (k stars = a Q_k).

    k=0 is a single vertex, k=1 an edge.
    """

    n: int
    cells: str

    def __post_init__(self):
        if self.n < 1:
            raise BadRange(f"dimension must be positive, got {self.n}")
        if len(self.cells) != self.n:
            raise BadLength(f"expected {self.n} cells, got {len(self.cells)} in {self.cells!r}")
        bad = set(self.cells) - ALPHABET
        if bad:
            raise BadChar(f"invalid characters {sorted(bad)} in {self.cells!r}")

    @property
    def k(self) -> int:
        return self.cells.count(STAR)

    @property
    def star_positions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.cells) if c == STAR)

    def __str__(self) -> str:
        return self.cells


def parse_star_vector(text: str, n: int) -> StarVector:
    """Parse a star string of length n; round-trips through str() exactly."""
    return StarVector(n, text)


def vertex_to_bits(v: int, n: int) -> str:
    """Format a vertex int as its position-ordered bit string."""
    return "".join("1" if v >> i & 1 else "0" for i in range(n))


def bits_to_vertex(bits: str) -> int:
    v = 0
    for i, c in enumerate(bits):
        if c == "1":
            v |= 1 << i
        elif c != "0":
            raise BadChar(f"invalid vertex bit {c!r} in {bits!r}")
    return v


def expand_vertices(sv: StarVector) -> list[int]:
    """All 2^k vertices of the subcube, as ints, in increasing fill order."""
    base = sum(1 << i for i, c in enumerate(sv.cells) if c == "1")
    stars = sv.star_positions
    out = []
    for fill in range(1 << len(stars)):
        v = base
        for j, p in enumerate(stars):
            if fill >> j & 1:
                v |= 1 << p
        out.append(v)
    return out


def expand_edges(sv: StarVector) -> list[StarVector]:
    """All k*2^(k-1) edges of the subcube, each a one-star vector."""
    if sv.k == 0:
        raise NoStars(f"{sv.cells!r} has no stars to expand")
    stars = sv.star_positions
    cells = list(sv.cells)
    out = []
    for e in stars:
        rest = [p for p in stars if p != e]
        for fill in range(1 << len(rest)):
            w = cells[:]
            for j, p in enumerate(rest):
                w[p] = "01"[fill >> j & 1]
            out.append(StarVector(sv.n, "".join(w)))
    return out


def edge_star_position(edge: StarVector | str) -> int:
    cells = edge.cells if isinstance(edge, StarVector) else edge
    p = cells.index(STAR)
    if STAR in cells[p + 1:]:
        raise BadRange(f"{cells!r} is not an edge (more than one star)")
    return p


def edge_layer(edge: StarVector | str) -> int:
    """Number of 1-cells in the edge's star string."""
    cells = edge.cells if isinstance(edge, StarVector) else edge
    return cells.count("1")


def edge_endpoints(edge: StarVector | str) -> tuple[int, int]:
    """The two vertices of an edge, smaller first."""
    cells = edge.cells if isinstance(edge, StarVector) else edge
    p = edge_star_position(cells)
    u = sum(1 << i for i, c in enumerate(cells) if c == "1")
    return u, u | (1 << p)


def edge_key_from_endpoints(u: int, v: int, n: int) -> str:
    d = u ^ v
    if d == 0 or d & (d - 1):
        raise BadRange(f"vertices {u} and {v} are not adjacent in Q_{n}")
    p = d.bit_length() - 1
    return "".join(STAR if i == p else "01"[u >> i & 1] for i in range(n))


def _validate_edge_key(key: str, n: int) -> None:
    if len(key) != n:
        raise BadLength(f"edge {key!r} has length {len(key)}, expected {n}")
    if key.count(STAR) != 1:
        raise BadRange(f"edge {key!r} must contain exactly one star")
    bad = set(key) - ALPHABET
    if bad:
        raise BadChar(f"invalid characters {sorted(bad)} in {key!r}")


@dataclass(frozen=True)
class Subgraph:
    """An immutable edge set on the full vertex set of Q_n."""

    n: int
    edges: frozenset[str]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        check_dimension(self.n)
        for key in self.edges:
            _validate_edge_key(key, self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, edge: StarVector | str) -> bool:
        key = edge.cells if isinstance(edge, StarVector) else edge
        return key in self.edges

    def sorted_edges(self) -> list[str]:
        return sorted(self.edges)

    def replace_name(self, name: str) -> "Subgraph":
        return Subgraph(self.n, self.edges, name)


def subgraph_from_edges(n: int, edges: Iterable[StarVector | str], name: str | None = None) -> Subgraph:
    keys = frozenset(e.cells if isinstance(e, StarVector) else e for e in edges)
    return Subgraph(n, keys, name)


def full_cube(n: int) -> Subgraph:
    """Q_n itself: all n*2^(n-1) edges."""
    check_dimension(n)
    edges = []
    for p in range(n):
        others = [i for i in range(n) if i != p]
        for fill in range(1 << (n - 1)):
            cells = [STAR] * n
            for j, i in enumerate(others):
                cells[i] = "01"[fill >> j & 1]
            edges.append("".join(cells))
    return Subgraph(n, frozenset(edges), name=f"Q_{n}")


def iter_star_vectors(n: int, k: int) -> Iterator[StarVector]:
    """All C(n,k)*2^(n-k) subcube names, positions lexicographic, fills ascending."""
    if not 0 <= k <= n:
        raise BadRange(f"need 0 <= k <= n, got k={k}, n={n}")
    check_dimension(n)
    for pos in itertools.combinations(range(n), k):
        others = [i for i in range(n) if i not in pos]
        for fill in range(1 << (n - k)):
            cells = [STAR] * n
            for j, i in enumerate(others):
                cells[i] = "01"[fill >> j & 1]
            yield StarVector(n, "".join(cells))


def apply_automorphism(perm: Sequence[int], flips: int, g: Subgraph) -> Subgraph:
    """Image of g under "move position i to perm[i], then flip bits of `flips`".

    `flips` is a bit mask in image coordinates; star cells are unaffected by it.
    """
    n = g.n
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise DimensionMismatch(f"perm must be a permutation of range({n})")
    if not 0 <= flips < 1 << n:
        raise DimensionMismatch(f"flips must be a {n}-bit mask")
    flip01 = {"0": "1", "1": "0", STAR: STAR}
    out = []
    for key in g.edges:
        cells = [""] * n
        for i, c in enumerate(key):
            j = perm[i]
            cells[j] = flip01[c] if (flips >> j & 1 and c != STAR) else c
        out.append("".join(cells))
    image = frozenset(out)
    if len(image) != len(g.edges):  # cannot happen: the map is a bijection on keys
        raise DimensionMismatch("automorphism collapsed edges")
    return Subgraph(n, image, g.name)


def compose_automorphisms(perm2: Sequence[int], flips2: int,
                          perm1: Sequence[int], flips1: int) -> tuple[list[int], int]:
    """(perm2, flips2) after (perm1, flips1), as a single automorphism."""
    n = len(perm1)
    perm = [perm2[perm1[i]] for i in range(n)]
    flips = flips2 ^ sum(((flips1 >> i) & 1) << perm2[i] for i in range(n))
    return perm, flips


def adjacency_lists(g: Subgraph) -> list[list[int]]:
    """Neighbor lists indexed by vertex int, each sorted ascending."""
    adj: list[list[int]] = [[] for _ in range(1 << g.n)]
    for key in g.edges:
        u, v = edge_endpoints(key)
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort()
    return adj


def save_subgraph(g: Subgraph, path) -> None:
    """Write the canonical text format: header line, then edges in sorted order."""
    lines = [f"{FILE_MAGIC} n={g.n}"]
    if g.name:
        lines.append(f"# {g.name}")
    lines.extend(g.sorted_edges())
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_subgraph(path) -> Subgraph:
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read().split("\n")
    if not raw or not raw[0].startswith(FILE_MAGIC):
        raise ParseError(f"missing `{FILE_MAGIC}` header", line=1)
    header = raw[0][len(FILE_MAGIC):].strip()
    if not header.startswith("n="):
        raise ParseError("header must declare n=<dimension>", line=1)
    try:
        n = int(header[2:])
    except ValueError:
        raise ParseError(f"bad dimension {header[2:]!r}", line=1) from None
    check_dimension(n)
    seen: set[str] = set()
    for lineno, line in enumerate(raw[1:], start=2):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            _validate_edge_key(text, n)
        except (BadChar, BadLength, BadRange) as exc:
            raise ParseError(str(exc), line=lineno) from None
        if text in seen:
            raise DuplicateEdge(f"duplicate edge {text!r}", line=lineno)
        seen.add(text)
    return Subgraph(n, frozenset(seen))
