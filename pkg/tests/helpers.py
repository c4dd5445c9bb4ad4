"""Brute-force oracles shared across test modules.

Deliberately naive and independent of the package's counting algorithms:
adjacency is rebuilt from edge strings by hand, cycles are counted as closed
non-repeating walks or collected as edge-set frozensets with no
canonicalization tricks.
"""

from __future__ import annotations

import itertools
import random


def oracle_adjacency(g) -> dict[int, set[int]]:
    """Adjacency sets parsed straight out of the edge strings."""
    adj: dict[int, set[int]] = {}
    for key in g.edges:
        star = key.index("*")
        u = 0
        for i, c in enumerate(key):
            if c == "1":
                u |= 1 << i
        v = u | (1 << star)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def closed_walk_count(g, length: int) -> int:
    """Closed walks v0..v_{L-1},v0 with all vertices distinct.

    Every cycle is traversed 2L ways (L rotations x 2 directions), so this
    equals 2 * length * (number of cycles).
    """
    adj = oracle_adjacency(g)
    total = 0

    def extend(start, cur, steps, seen):
        nonlocal total
        if steps == length:
            if start in adj[cur]:
                total += 1
            return
        for w in adj[cur]:
            if w not in seen:
                seen.add(w)
                extend(start, w, steps + 1, seen)
                seen.remove(w)

    for s in adj:
        extend(s, s, 1, {s})
    return total


def brute_cycle_edge_sets(g, length: int) -> set[frozenset[frozenset[int]]]:
    """All cycles of the given length, deduplicated by their edge sets."""
    adj = oracle_adjacency(g)
    out: set[frozenset[frozenset[int]]] = set()

    def extend(path, seen):
        cur = path[-1]
        if len(path) == length:
            if path[0] in adj[cur]:
                out.add(frozenset(
                    frozenset((path[i], path[(i + 1) % length]))
                    for i in range(length)
                ))
            return
        for w in adj[cur]:
            if w not in seen:
                path.append(w)
                seen.add(w)
                extend(path, seen)
                seen.remove(w)
                path.pop()

    for s in adj:
        extend([s], {s})
    return out


def brute_z_words(ell: int) -> set[tuple[int, ...]]:
    """Filter all distinct double-occurrence words by the naive window scan."""
    symbols = []
    for s in range(1, ell + 1):
        symbols += [s, s]
    out = set()
    for word in set(itertools.permutations(symbols)):
        ok = True
        for k in range(1, ell):
            width = 2 * k
            for a in range(2 * ell - width + 1):
                window = word[a:a + width]
                if all(window.count(s) % 2 == 0 for s in range(1, ell + 1)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(word)
    return out


def random_subgraph(n: int, keep_probability: float, rng: random.Random):
    from cubeturan.core import Subgraph, full_cube

    cube = full_cube(n)
    kept = frozenset(e for e in sorted(cube.edges) if rng.random() < keep_probability)
    return Subgraph(n, kept)


def random_automorphism(n: int, rng: random.Random):
    perm = list(range(n))
    rng.shuffle(perm)
    flips = rng.randrange(1 << n)
    return perm, flips
