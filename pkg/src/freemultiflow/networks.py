"""Network data model: directed, skew-symmetric, bidirected and undirected.

All networks are index-based (nodes ``0..n-1``, arcs/edges by position) and
immutable after construction, so they can be shared freely across threads.
Solvers that need to mutate state work on private copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError

# Edge direction at an endpoint of a bidirected edge.
OUT = 1
IN = -1


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check: ``ok`` iff no violations were found."""

    violations: tuple[tuple[str, object, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_invalid(self):
        if self.violations:
            kind, where, detail = self.violations[0]
            more = f" (+{len(self.violations) - 1} more)" if len(self.violations) > 1 else ""
            raise ValidationError(f"{kind} at {where}: {detail}{more}")


@dataclass(frozen=True)
class DirectedNetwork:
    """Digraph with integer arc capacities; parallel arcs allowed."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    cap: tuple[int, ...]

    def __post_init__(self):
        if len(self.arcs) != len(self.cap):
            raise ValidationError("arcs and cap must have equal length")
        for i, (u, v) in enumerate(self.arcs):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationError(f"arc {i} has endpoint outside 0..{self.n - 1}")
        for i, c in enumerate(self.cap):
            if not isinstance(c, int) or c < 0:
                raise ValidationError(f"capacity of arc {i} is not a nonnegative integer")

    @property
    def m(self) -> int:
        return len(self.arcs)


def directed(n: int, arcs: Iterable[tuple[int, int]], cap: Iterable[int]) -> DirectedNetwork:
    return DirectedNetwork(n, tuple(tuple(a) for a in arcs), tuple(cap))


@dataclass(frozen=True)
class SkewNetwork:
    """Skew-symmetric digraph: node/arc involution, symmetric capacities.

    ``terminals`` lists one representative per terminal pair (the set S);
    the mate side S' is derived through the involution.
    """

    base: DirectedNetwork
    sigma_node: tuple[int, ...]
    sigma_arc: tuple[int, ...]
    terminals: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def arcs(self):
        return self.base.arcs

    @property
    def cap(self):
        return self.base.cap

    def mate_node(self, v: int) -> int:
        return self.sigma_node[v]

    def mate_arc(self, e: int) -> int:
        return self.sigma_arc[e]

    @property
    def terminal_set(self) -> frozenset[int]:
        """S together with its mates."""
        return frozenset(self.terminals) | frozenset(self.sigma_node[s] for s in self.terminals)

    def inner_nodes(self):
        t = self.terminal_set
        return [v for v in range(self.n) if v not in t]

    def representative_arcs(self):
        """Arc ids with id < mate id: one per mate pair."""
        return [e for e in range(self.m) if e < self.sigma_arc[e]]


def skew(n, arcs, cap, sigma_node, sigma_arc, terminals) -> SkewNetwork:
    return SkewNetwork(directed(n, arcs, cap), tuple(sigma_node), tuple(sigma_arc), tuple(terminals))


def skew_from_pairs(n_half: int, rep_arcs: Sequence[tuple[int, int, int]], terminals: Sequence[int]) -> SkewNetwork:
    """Build a SkewNetwork from one representative arc per mate pair.

    Nodes ``0..n_half-1`` are the plain side, node ``v`` has mate ``v+n_half``.
    Each ``(u, v, c)`` in ``rep_arcs`` adds the arc and its mate.
    """
    n = 2 * n_half
    sigma_node = [(v + n_half) % n for v in range(n)]
    arcs, cap, sigma_arc = [], [], []
    for (u, v, c) in rep_arcs:
        e = len(arcs)
        arcs.append((u, v))
        arcs.append((sigma_node[v], sigma_node[u]))
        cap.extend((c, c))
        sigma_arc.extend((e + 1, e))
    return skew(n, arcs, cap, sigma_node, sigma_arc, terminals)


@dataclass(frozen=True)
class BidirectedNetwork:
    """Bidirected graph: each edge end carries its own direction sign.

    An edge is ``(u, su, v, sv)`` with ``su, sv`` in {OUT, IN} telling whether
    the edge is directed out of or into that endpoint.  Loops must have equal
    signs at both ends.
    """

    n: int
    edges: tuple[tuple[int, int, int, int], ...]
    cap: tuple[int, ...]
    terminals: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def sign_at(self, edge: int, node: int, occurrence: int = 0) -> int:
        u, su, v, sv = self.edges[edge]
        if node == u and occurrence == 0:
            return su
        if node == v:
            return sv
        raise ValueError(f"edge {edge} is not incident with node {node}")

    def other_end(self, edge: int, node: int) -> int:
        u, _, v, _ = self.edges[edge]
        if node == u:
            return v
        if node == v:
            return u
        raise ValueError(f"edge {edge} is not incident with node {node}")


def bidirected(n, edges, cap, terminals) -> BidirectedNetwork:
    return BidirectedNetwork(n, tuple(tuple(e) for e in edges), tuple(cap), tuple(terminals))


@dataclass(frozen=True)
class UndirectedNetwork:
    n: int
    edges: tuple[tuple[int, int], ...]
    cap: tuple[int, ...]
    terminals: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)


def undirected(n, edges, cap, terminals=()) -> UndirectedNetwork:
    return UndirectedNetwork(n, tuple(tuple(e) for e in edges), tuple(cap), tuple(terminals))


def validate_bidirected(h: BidirectedNetwork) -> ValidationReport:
    """Structural checks plus inner-Eulerianness for a bidirected network."""
    bad = []
    tset = set(h.terminals)
    indeg = [0] * h.n
    outdeg = [0] * h.n
    for i, (u, su, v, sv) in enumerate(h.edges):
        if not (0 <= u < h.n and 0 <= v < h.n):
            bad.append(("bad endpoint", i, "edge endpoint outside node range"))
            continue
        if su not in (IN, OUT) or sv not in (IN, OUT):
            bad.append(("bad sign", i, "edge signs must be IN or OUT"))
            continue
        if u == v:
            if su != sv:
                bad.append(("mixed loop", i, "loops must enter or leave both ends"))
            if u in tset:
                bad.append(("terminal loop", i, f"loop at terminal {u}"))
        c = h.cap[i]
        for node, sign in ((u, su), (v, sv)):
            if sign == OUT:
                outdeg[node] += c
            else:
                indeg[node] += c
    for v in range(h.n):
        if v not in tset and indeg[v] != outdeg[v]:
            bad.append(("not inner-Eulerian", v, f"in-capacity {indeg[v]} != out-capacity {outdeg[v]}"))
    return ValidationReport(tuple(bad))


def validate_skew(g: SkewNetwork, *, require_normalized: bool = True) -> ValidationReport:
    """Check every SkewNetwork invariant plus inner-Eulerianness.

    All problems are reported, none raised.  With ``require_normalized=False``
    the two normalization clauses (no arcs into S, no arcs between terminal
    mates) are skipped, which is the state of a freshly parsed file before
    :func:`normalize_terminals` has run.
    """
    bad = []
    n, m = g.n, g.m
    if len(g.sigma_node) != n:
        return ValidationReport((("bad sigma", "nodes", "sigma_node length mismatch"),))
    if len(g.sigma_arc) != m:
        return ValidationReport((("bad sigma", "arcs", "sigma_arc length mismatch"),))
    for v in range(n):
        sv = g.sigma_node[v]
        if not 0 <= sv < n or g.sigma_node[sv] != v:
            bad.append(("bad involution", v, "sigma_node is not an involution"))
        elif sv == v:
            bad.append(("fixed point", v, "sigma_node must be fixed-point free"))
    for e in range(m):
        se = g.sigma_arc[e]
        if not 0 <= se < m or g.sigma_arc[se] != e:
            bad.append(("bad involution", e, "sigma_arc is not an involution"))
            continue
        if se == e:
            bad.append(("self-mate arc", e, "sigma_arc must be fixed-point free"))
            continue
        u, v = g.arcs[e]
        if u == v:
            bad.append(("loop", e, "skew-symmetric graphs admit no loops"))
        mu, mv = g.arcs[se]
        if (mu, mv) != (g.sigma_node[v], g.sigma_node[u]):
            bad.append(("mate mismatch", e, f"mate arc is {(mu, mv)}, expected {(g.sigma_node[v], g.sigma_node[u])}"))
        if g.cap[e] != g.cap[se]:
            bad.append(("asymmetric capacity", e, f"cap {g.cap[e]} != mate cap {g.cap[se]}"))
    sset = set(g.terminals)
    for s in g.terminals:
        if g.sigma_node[s] in sset:
            bad.append(("terminal mates", s, "S intersects sigma(S)"))
    if require_normalized:
        for e, (u, v) in enumerate(g.arcs):
            if v in sset:
                bad.append(("arc into terminal", e, f"arc enters terminal {v}"))
            if u in sset and v == g.sigma_node[u]:
                bad.append(("terminal mate arc", e, f"arc connects terminal {u} to its mate"))
    tset = g.terminal_set
    into = [0] * n
    outof = [0] * n
    for e, (u, v) in enumerate(g.arcs):
        outof[u] += g.cap[e]
        into[v] += g.cap[e]
    for v in range(n):
        if v not in tset and into[v] != outof[v]:
            bad.append(("not inner-Eulerian", v, f"in-capacity {into[v]} != out-capacity {outof[v]}"))
    return ValidationReport(tuple(bad))


def normalize_terminals(g: SkewNetwork) -> SkewNetwork:
    """Retarget arcs entering S to the mate side and drop terminal-mate arcs.

    Arcs between a terminal and its own mate cannot carry any essential flow,
    so they are deleted outright.  An arc entering ``s in S`` is redirected to
    enter ``sigma(s)`` instead, with its mate retargeted symmetrically, after
    which no arc enters any terminal in S and none leaves any mate in S'.
    All per-terminal minimum-cut values are unchanged by both steps.
    """
    sset = set(g.terminals)
    mates = frozenset(g.sigma_node[s] for s in g.terminals)
    sigma_n = g.sigma_node
    arcs, cap, sigma_arc = [], [], []
    for e in g.representative_arcs():
        u, v = g.arcs[e]
        if (u in sset and v == sigma_n[u]) or (v in sset and u == sigma_n[v]):
            continue
        if v in sset:
            v = sigma_n[v]
        if u in mates:
            u = sigma_n[u]
        i = len(arcs)
        arcs.append((u, v))
        arcs.append((sigma_n[v], sigma_n[u]))
        cap.extend((g.cap[e], g.cap[e]))
        sigma_arc.extend((i + 1, i))
    return SkewNetwork(
        DirectedNetwork(g.n, tuple(arcs), tuple(cap)),
        g.sigma_node,
        tuple(sigma_arc),
        g.terminals,
    )
