"""Constructive recolouring: elimination certificates, the complete-graph
base case, the recursive recolouring of certified graphs with its 2n-per-vertex
guarantee, plus a sequence validator and a BFS distance oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .explorer import (
    DEFAULT_CAP,
    Colouring,
    ReconfigGraph,
    build_reconfiguration_graph,
    is_proper,
)
from .graph import Graph, bits, induced_subgraph, is_clique, is_complete
from .recognition import chromatic_number, qualifying_two_pair


class PaletteError(ValueError):
    """The palette is too small for the requested recolouring."""


class CertificateError(ValueError):
    """A certificate's structural facts fail to replay on the host graph."""


@dataclass(frozen=True)
class RecolourStep:
    vertex: int
    new_colour: int


@dataclass
class RecolourSequence:
    start: Colouring
    steps: List[RecolourStep]
    end: Colouring

    def __len__(self) -> int:
        return len(self.steps)

    def per_vertex_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for s in self.steps:
            counts[s.vertex] = counts.get(s.vertex, 0) + 1
        return counts

    def max_per_vertex(self) -> int:
        counts = self.per_vertex_counts()
        return max(counts.values()) if counts else 0


# -- elimination certificates --------------------------------------------------


@dataclass(frozen=True)
class PairRemoval:
    """Case (ii): {x, y} is a 2-pair with N(x) contained in N(y); x is removed."""

    x: int
    y: int


@dataclass(frozen=True)
class TriangleRemoval:
    """Case (iii) with a one-vertex separator {z}: the x-side is {x, w} and
    {x, w, z} is a clique; x and w are removed."""

    x: int
    w: int
    z: int
    y: int


@dataclass(frozen=True)
class CliqueComponentRemoval:
    """Case (iii) with an empty separator: the x-side is an entire connected
    component inducing a clique of at most three vertices, all removed."""

    vertices: Tuple[int, ...]


@dataclass(frozen=True)
class CompleteBase:
    remaining: Tuple[int, ...]


Event = Union[PairRemoval, TriangleRemoval, CliqueComponentRemoval, CompleteBase]


@dataclass
class EliminationCertificate:
    events: List[Event] = field(default_factory=list)


def find_elimination_certificate(g: Graph) -> Optional[EliminationCertificate]:
    """Greedy elimination per the compactness cases; None if some stage has no
    qualifying 2-pair (the graph is then not compact)."""
    active = set(range(g.n))
    events: List[Event] = []
    while True:
        sub, fwd = induced_subgraph(g, active)
        inv = {new: old for old, new in fwd.items()}
        if is_complete(sub):
            events.append(CompleteBase(tuple(sorted(active))))
            return EliminationCertificate(events)
        found = qualifying_two_pair(sub)
        if found is None:
            return None
        pair, tag = found
        x, y = inv[pair.x], inv[pair.y]
        sep = {inv[v] for v in pair.separator}
        cx = {inv[v] for v in pair.component_of_x}
        if tag == "ii" or len(sep) == 2:
            # a two-vertex separator forces C_x = {x}, i.e. condition (ii)
            events.append(PairRemoval(x, y))
            active.remove(x)
        elif len(sep) == 1:
            (z,) = sep
            (w,) = cx - {x}
            events.append(TriangleRemoval(x, w, z, y))
            active -= {x, w}
        else:  # empty separator: C_x is a whole clique component
            events.append(CliqueComponentRemoval(tuple(sorted(cx))))
            active -= cx


# -- complete-graph base case ---------------------------------------------------


def recolour_complete(
    n: int, palette: int, a: Colouring, b: Colouring
) -> RecolourSequence:
    """Recolour one proper colouring of K_n into another with >= n+1 colours.

    Vertices are fixed to their target in ascending order; a vertex holding
    the needed colour is first evicted to a colour nobody uses.
    """
    if palette < n + 1:
        raise PaletteError(f"palette {palette} < n+1 = {n + 1}")
    for c in (a, b):
        if len(c) != n or c.k != palette:
            raise ValueError("colouring does not match n and palette")
        if any(not 0 <= x < palette for x in c.assignment):
            raise ValueError("colour out of palette range")
        if len(set(c.assignment)) != n:
            raise ValueError("colouring of a complete graph must be injective")
    cur = list(a.assignment)
    steps: List[RecolourStep] = []
    for v in range(n):
        target = b[v]
        if cur[v] == target:
            continue
        holder = next((u for u in range(n) if u != v and cur[u] == target), None)
        if holder is not None:
            free = next(c for c in range(palette) if c not in cur)
            steps.append(RecolourStep(holder, free))
            cur[holder] = free
        steps.append(RecolourStep(v, target))
        cur[v] = target
    return RecolourSequence(a, steps, b)


# -- recolouring certified graphs ------------------------------------------------


def _least_colour_outside(palette: int, forbidden: set) -> int:
    for c in range(palette):
        if c not in forbidden:
            return c
    raise PaletteError("no evasion colour available")


def recolour_compact(
    g: Graph, cert: EliminationCertificate, a: Colouring, b: Colouring
) -> RecolourSequence:
    """Produce a recolouring sequence from a to b along the certificate.

    Requires palette >= chromatic number + 1, and >= 4 whenever the
    certificate contains a triangle removal.  Every emitted sequence keeps all
    intermediate colourings proper and recolours each vertex at most 2n times.
    """
    if a.k != b.k:
        raise ValueError("colourings use different palettes")
    p = a.k
    if not (is_proper(g, a) and is_proper(g, b)):
        raise ValueError("input colourings must be proper")
    chi = chromatic_number(g)
    if p < chi + 1:
        raise PaletteError(f"palette {p} < chromatic number + 1 = {chi + 1}")
    if any(isinstance(e, TriangleRemoval) for e in cert.events) and p < 4:
        raise PaletteError("triangle removals require a palette of at least 4")
    if not cert.events or not isinstance(cert.events[-1], CompleteBase):
        raise CertificateError("certificate must end with a complete base")
    if a.assignment == b.assignment:
        return RecolourSequence(a, [], b)

    def active_adj(v: int, active: int) -> int:
        return g.adj[v] & active

    def solve(idx: int, active: int, alpha: List[int], beta: List[int]) -> List[RecolourStep]:
        ev = cert.events[idx]
        if isinstance(ev, CompleteBase):
            remaining = list(ev.remaining)
            if set(bits(active)) != set(remaining):
                raise CertificateError("complete base does not match residual set")
            if not is_clique(g, remaining):
                raise CertificateError("residual set is not a clique")
            m = len(remaining)
            sub_a = Colouring(tuple(alpha[v] for v in remaining), p)
            sub_b = Colouring(tuple(beta[v] for v in remaining), p)
            inner = recolour_complete(m, p, sub_a, sub_b)
            return [RecolourStep(remaining[s.vertex], s.new_colour) for s in inner.steps]

        if isinstance(ev, PairRemoval):
            x, y = ev.x, ev.y
            if not ((active >> x) & 1 and (active >> y) & 1):
                raise CertificateError("pair removal names an inactive vertex")
            if g.has_edge(x, y):
                raise CertificateError("pair removal vertices are adjacent")
            if active_adj(x, active) & ~active_adj(y, active):
                raise CertificateError("pair removal lacks nested neighbourhoods")
            alpha2 = list(alpha)
            alpha2[x] = alpha[y]
            beta2 = list(beta)
            beta2[x] = beta[y]
            inner = solve(idx + 1, active & ~(1 << x), alpha2, beta2)
            out: List[RecolourStep] = []
            cur = list(alpha)
            if cur[x] != cur[y]:
                out.append(RecolourStep(x, cur[y]))
                cur[x] = cur[y]
            for s in inner:
                out.append(s)
                cur[s.vertex] = s.new_colour
                if s.vertex == y and cur[x] != s.new_colour:
                    # mirror rule: x copies every switch of y immediately
                    out.append(RecolourStep(x, s.new_colour))
                    cur[x] = s.new_colour
            if cur[x] != beta[x]:
                out.append(RecolourStep(x, beta[x]))
            return out

        if isinstance(ev, TriangleRemoval):
            x, w, z = ev.x, ev.w, ev.z
            for v in (x, w, z):
                if not (active >> v) & 1:
                    raise CertificateError("triangle removal names an inactive vertex")
            if active_adj(x, active) != (1 << w) | (1 << z):
                raise CertificateError("x must be adjacent exactly to w and z")
            if active_adj(w, active) != (1 << x) | (1 << z):
                raise CertificateError("w must be adjacent exactly to x and z")
            inner = solve(idx + 1, active & ~(1 << x) & ~(1 << w), alpha, beta)
            out = []
            cur = list(alpha)
            for s in inner:
                if s.vertex == z:
                    c = s.new_colour
                    if cur[x] == c:
                        t = _least_colour_outside(p, {cur[w], cur[z], c})
                        out.append(RecolourStep(x, t))
                        cur[x] = t
                    elif cur[w] == c:
                        t = _least_colour_outside(p, {cur[x], cur[z], c})
                        out.append(RecolourStep(w, t))
                        cur[w] = t
                out.append(s)
                cur[s.vertex] = s.new_colour
            # final fix-up: x first, vacating w once if it blocks x's target
            if cur[x] != beta[x] and cur[w] == beta[x]:
                t = _least_colour_outside(p, {cur[x], cur[z], beta[x]})
                out.append(RecolourStep(w, t))
                cur[w] = t
            if cur[x] != beta[x]:
                out.append(RecolourStep(x, beta[x]))
                cur[x] = beta[x]
            if cur[w] != beta[w]:
                out.append(RecolourStep(w, beta[w]))
                cur[w] = beta[w]
            return out

        if isinstance(ev, CliqueComponentRemoval):
            verts = list(ev.vertices)
            vmask = 0
            for v in verts:
                if not (active >> v) & 1:
                    raise CertificateError("component removal names an inactive vertex")
                vmask |= 1 << v
            if not is_clique(g, verts):
                raise CertificateError("removed component is not a clique")
            for v in verts:
                if active_adj(v, active) & ~vmask:
                    raise CertificateError("removed clique is not a full component")
            if p < len(verts) + 1:
                raise PaletteError("palette too small for clique component")
            inner = solve(idx + 1, active & ~vmask, alpha, beta)
            sub_a = Colouring(tuple(alpha[v] for v in verts), p)
            sub_b = Colouring(tuple(beta[v] for v in verts), p)
            comp = recolour_complete(len(verts), p, sub_a, sub_b)
            return inner + [
                RecolourStep(verts[s.vertex], s.new_colour) for s in comp.steps
            ]

        raise CertificateError(f"unknown certificate event {ev!r}")

    steps = solve(0, g.full_mask, list(a.assignment), list(b.assignment))
    return RecolourSequence(a, steps, b)


# -- validation and the BFS oracle -----------------------------------------------


@dataclass
class ValidationReport:
    ok: bool
    message: Optional[str]
    error_index: Optional[int]
    total_steps: int
    per_vertex_counts: Dict[int, int]


def validate_sequence(g: Graph, s: RecolourSequence) -> ValidationReport:
    """Replay a sequence and report the first violation, if any."""
    counts: Dict[int, int] = {}

    def fail(msg: str, idx: Optional[int] = None) -> ValidationReport:
        return ValidationReport(False, msg, idx, len(s.steps), counts)

    if s.start.k != s.end.k:
        return fail("start and end palettes differ")
    k = s.start.k
    if not is_proper(g, s.start):
        return fail("start colouring is not proper")
    cur = list(s.start.assignment)
    for i, step in enumerate(s.steps):
        v, c = step.vertex, step.new_colour
        if not 0 <= v < g.n:
            return fail(f"step {i}: vertex {v} out of range", i)
        if not 0 <= c < k:
            return fail(f"step {i}: colour {c} out of palette", i)
        if cur[v] == c:
            return fail(f"step {i}: vertex {v} already has colour {c}", i)
        if any(cur[u] == c for u in bits(g.adj[v])):
            return fail(f"step {i}: colour {c} clashes with a neighbour of {v}", i)
        cur[v] = c
        counts[v] = counts.get(v, 0) + 1
    if tuple(cur) != s.end.assignment:
        return fail("replay does not reach the stated end colouring")
    return ValidationReport(True, None, None, len(s.steps), counts)


def bfs_distance(
    g: Graph,
    k: int,
    a: Colouring,
    b: Colouring,
    cap: int = DEFAULT_CAP,
    reconfig: Optional[ReconfigGraph] = None,
) -> Optional[int]:
    """Exact distance between a and b in R_k(G); None if disconnected."""
    r = reconfig if reconfig is not None else build_reconfiguration_graph(g, k, cap=cap)
    try:
        src = r.index[a.assignment]
        dst = r.index[b.assignment]
    except KeyError:
        raise ValueError("colouring is not a node of the reconfiguration graph")
    if src == dst:
        return 0
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for wnode in r.adjacency[u]:
            if wnode not in dist:
                dist[wnode] = dist[u] + 1
                if wnode == dst:
                    return dist[wnode]
                queue.append(wnode)
    return None
