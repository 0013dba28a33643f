"""Graph-class recognition: 2-pairs, holes, weakly chordal, co-chordal,
forbidden patterns, exact chromatic number, and compactness checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Optional, Tuple

from .graph import (
    Graph,
    bits,
    complement,
    component_mask,
    induced_subgraph,
    is_anticonnected,
    is_clique,
    is_complete,
)


@dataclass(frozen=True)
class TwoPair:
    """A certified 2-pair: nonadjacent x, y whose common neighbourhood
    separates them."""

    x: int
    y: int
    separator: frozenset
    component_of_x: frozenset
    component_of_y: frozenset


@dataclass(frozen=True)
class HoleWitness:
    cycle: Tuple[int, ...]
    kind: str  # "hole" | "antihole"


@dataclass(frozen=True)
class AnticonnectedProbe:
    t: frozenset
    d_of_t: frozenset


@dataclass(frozen=True)
class CompactnessVerdict:
    compact: bool
    failing_subset: Optional[frozenset] = None
    certificate: Optional[object] = None  # EliminationCertificate when compact


# -- 2-pairs ----------------------------------------------------------------


def _make_two_pair(g: Graph, x: int, y: int) -> TwoPair:
    sep = g.adj[x] & g.adj[y]
    cx = component_mask(g, x, removed=sep)
    cy = component_mask(g, y, removed=sep)
    return TwoPair(
        x,
        y,
        frozenset(bits(sep)),
        frozenset(bits(cx)),
        frozenset(bits(cy)),
    )


def is_two_pair(g: Graph, x: int, y: int) -> bool:
    """Separator criterion: N(x) & N(y) puts x and y in different components."""
    if x == y or g.has_edge(x, y):
        return False
    sep = g.adj[x] & g.adj[y]
    return not (component_mask(g, x, removed=sep) >> y) & 1


def find_two_pairs(g: Graph) -> List[TwoPair]:
    """All 2-pairs {x, y} with x < y, in lexicographic order."""
    out = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            sep = g.adj[x] & g.adj[y]
            if not (component_mask(g, x, removed=sep) >> y) & 1:
                out.append(_make_two_pair(g, x, y))
    return out


# -- holes and antiholes ------------------------------------------------------


def _find_induced_cycle(g: Graph, min_len: int) -> Optional[Tuple[int, ...]]:
    """Least induced cycle of length >= min_len under ascending-id DFS, if any.

    Paths are grown with the cycle's smallest vertex first, so the search is
    deterministic and each cycle is considered from a canonical rotation.
    """

    def extend(v0: int, path: List[int], used: int) -> Optional[Tuple[int, ...]]:
        last = path[-1]
        interior = used & ~(1 << v0) & ~(1 << last)
        for w in bits(g.adj[last] & ~used):
            if w < v0:
                continue  # v0 is canonically the smallest cycle vertex
            if g.adj[w] & interior:
                continue
            if len(path) >= 2 and (g.adj[w] >> v0) & 1:
                if len(path) + 1 >= min_len:
                    return tuple(path) + (w,)
                continue  # closing now is too short; extending adds a chord
            path.append(w)
            hit = extend(v0, path, used | (1 << w))
            if hit:
                return hit
            path.pop()
        return None

    for v0 in range(g.n):
        hit = extend(v0, [v0], 1 << v0)
        if hit:
            return hit
    return None


def find_hole(g: Graph) -> Optional[HoleWitness]:
    cycle = _find_induced_cycle(g, 5)
    return HoleWitness(cycle, "hole") if cycle else None


def find_antihole(g: Graph) -> Optional[HoleWitness]:
    cycle = _find_induced_cycle(complement(g), 5)
    return HoleWitness(cycle, "antihole") if cycle else None


def is_weakly_chordal(g: Graph) -> bool:
    return find_hole(g) is None and find_antihole(g) is None


def is_co_chordal(g: Graph) -> bool:
    """(2K2, antihole)-free; cross-checked against chordality of the complement."""
    forbidden_free = contains_induced(g, "2k2") is None and find_antihole(g) is None
    complement_chordal = _find_induced_cycle(complement(g), 4) is None
    if forbidden_free != complement_chordal:
        raise AssertionError("co-chordal test routes disagree")
    return complement_chordal


# -- fixed forbidden patterns -------------------------------------------------


def _named_patterns() -> Dict[str, Graph]:
    return {
        "p5": Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
        "p5_complement": complement(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])),
        "c5": Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
        "2k2": Graph(4, [(0, 1), (2, 3)]),
        "k4": Graph(4, list(combinations(range(4), 2))),
        "diamond": Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    }


PATTERNS = _named_patterns()


def _induces_pattern(g: Graph, subset: Tuple[int, ...], pattern: Graph) -> bool:
    m = len(subset)
    local = [[g.has_edge(subset[i], subset[j]) for j in range(m)] for i in range(m)]
    degs = sorted(sum(row) for row in local)
    pdegs = sorted(pattern.degree(v) for v in range(m))
    if degs != pdegs:
        return False
    for perm in permutations(range(m)):
        if all(
            local[perm[i]][perm[j]] == pattern.has_edge(i, j)
            for i, j in combinations(range(m), 2)
        ):
            return True
    return False


def contains_induced(g: Graph, pattern: str) -> Optional[frozenset]:
    """First vertex set (lex order) inducing the named pattern, or None."""
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}")
    pat = PATTERNS[pattern]
    target_m = pat.edge_count()
    for subset in combinations(range(g.n), pat.n):
        m = sum(g.has_edge(u, v) for u, v in combinations(subset, 2))
        if m != target_m:
            continue
        if _induces_pattern(g, subset, pat):
            return frozenset(subset)
    return None


# -- chromatic number ---------------------------------------------------------


class ChromaticBoundExceeded(ValueError):
    """No proper colouring exists within the given upper bound."""


def find_k_colouring(g: Graph, k: int) -> Optional[Tuple[int, ...]]:
    """A proper k-colouring via saturation-ordered backtracking, or None."""
    n = g.n
    if n == 0:
        return ()
    if k <= 0:
        return None
    colour = [-1] * n
    sat = [0] * n  # bitmask of colours on coloured neighbours

    def pick() -> int:
        best = -1
        best_key = None
        for v in range(n):
            if colour[v] != -1:
                continue
            key = (sat[v].bit_count(), g.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def rec(coloured: int, used: int) -> bool:
        if coloured == n:
            return True
        v = pick()
        limit = min(k, used + 1)  # at most one brand-new colour
        for c in range(limit):
            if (sat[v] >> c) & 1:
                continue
            colour[v] = c
            touched = []
            for u in bits(g.adj[v]):
                if not (sat[u] >> c) & 1:
                    sat[u] |= 1 << c
                    touched.append(u)
            if rec(coloured + 1, max(used, c + 1)):
                return True
            colour[v] = -1
            for u in touched:
                sat[u] &= ~(1 << c)
        return False

    if rec(0, 0):
        return tuple(colour)
    return None


def chromatic_number(g: Graph, upper_bound: Optional[int] = None) -> int:
    """Least k admitting a proper k-colouring; exact backtracking search."""
    if g.n == 0:
        return 0
    if upper_bound is None:
        upper_bound = g.n
    if upper_bound < 1:
        raise ValueError("upper_bound must be >= 1")
    for k in range(1, upper_bound + 1):
        if find_k_colouring(g, k) is not None:
            return k
    raise ChromaticBoundExceeded(
        f"graph is not {upper_bound}-colourable; raise the bound"
    )


# -- compactness --------------------------------------------------------------


def qualifying_two_pair(g: Graph) -> Optional[Tuple[TwoPair, str]]:
    """First 2-pair orientation satisfying the nested-neighbourhood condition,
    else the first whose x-side plus separator is a clique of at most three
    vertices.  Oriented pairs are scanned in (x, y) lexicographic order."""
    if is_complete(g):
        raise ValueError("qualifying_two_pair is undefined on complete graphs")
    oriented = []
    for p in find_two_pairs(g):
        oriented.append((p.x, p.y))
        oriented.append((p.y, p.x))
    oriented.sort()
    for x, y in oriented:
        if g.adj[x] & ~g.adj[y] == 0:
            return _make_two_pair(g, x, y), "ii"
    for x, y in oriented:
        sep = g.adj[x] & g.adj[y]
        cx = component_mask(g, x, removed=sep)
        union = cx | sep
        if union.bit_count() <= 3 and is_clique(g, bits(union)):
            return _make_two_pair(g, x, y), "iii"
    return None


def subgraph_passes_compactness(g: Graph) -> bool:
    """Definition check for one graph: complete, or has a qualifying 2-pair."""
    if is_complete(g):
        return True
    return qualifying_two_pair(g) is not None


def is_compact_bruteforce(g: Graph, limit: int = 12) -> CompactnessVerdict:
    """Check every nonempty induced subgraph against the compactness cases.

    Subsets are enumerated in increasing size, then lexicographically, so a
    failing witness is the least minimum-size one.  On success the verdict
    carries an elimination certificate for the whole graph.
    """
    if g.n > limit:
        raise ValueError(f"n={g.n} exceeds the brute-force limit {limit}")
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, subset)
            if not subgraph_passes_compactness(sub):
                return CompactnessVerdict(False, failing_subset=frozenset(subset))
    from .recolour import find_elimination_certificate  # avoid import cycle

    cert = find_elimination_certificate(g)
    if cert is None:
        raise AssertionError("compact graph without elimination certificate")
    return CompactnessVerdict(True, certificate=cert)


# -- the anticonnected-set 2-pair finder --------------------------------------


def two_pair_via_anticonnected_set(
    g: Graph, a: int, m: int, b: int
) -> Tuple[AnticonnectedProbe, TwoPair]:
    """Grow an anticonnected set T from the centre of the chordless path
    a-m-b until maximal, then extract a 2-pair of g from the T-complete set.
    """
    if a == b or g.has_edge(a, b):
        raise ValueError("a and b must be distinct and nonadjacent")
    if not (g.has_edge(a, m) and g.has_edge(b, m)):
        raise ValueError("m must be adjacent to both a and b")
    if not is_weakly_chordal(g):
        raise ValueError("input graph must be weakly chordal")

    def t_complete(t_mask: int) -> int:
        d = 0
        for v in range(g.n):
            if (t_mask >> v) & 1:
                continue
            if t_mask & ~g.adj[v] == 0:
                d |= 1 << v
        return d

    def has_nonadjacent_pair(mask: int) -> bool:
        vs = list(bits(mask))
        return any(
            not g.has_edge(u, v) for u, v in combinations(vs, 2)
        )

    t_mask = 1 << m
    grown = True
    while grown:
        grown = False
        for t in range(g.n):
            if (t_mask >> t) & 1:
                continue
            cand = t_mask | (1 << t)
            if not is_anticonnected(g, bits(cand)):
                continue
            if not has_nonadjacent_pair(t_complete(cand)):
                continue
            t_mask = cand
            grown = True
            break

    d_mask = t_complete(t_mask)
    sub, mapping = induced_subgraph(g, bits(d_mask))
    inverse = {new: old for old, new in mapping.items()}
    pairs = find_two_pairs(sub)
    if not pairs:
        raise RuntimeError("no 2-pair found in the T-complete set")
    local = pairs[0]
    x, y = inverse[local.x], inverse[local.y]
    if not is_two_pair(g, x, y):
        raise RuntimeError("extracted pair is not a 2-pair of the host graph")
    probe = AnticonnectedProbe(frozenset(bits(t_mask)), frozenset(bits(d_mask)))
    return probe, _make_two_pair(g, x, y)
