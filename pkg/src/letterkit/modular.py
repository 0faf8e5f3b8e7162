"""Modular decomposition: modules, primality, the prime quotient, and the
P4/bull classification of vertices in prime graphs.

Module finding works by minimal-module closures, a cubic-time approach
that is entirely adequate at this package's scale (n <= 64 or so); the
famously intricate linear-time algorithms are deliberately out of scope.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .graphs import Graph, bull, inflate, path, to_graph6


def is_module(g: Graph, vertex_set) -> bool:
    """True iff all members share the same neighborhood outside the set."""
    members = set(vertex_set)
    if any(not 0 <= v < g.n for v in members):
        raise ValueError("vertex id out of range")
    mask = 0
    for v in members:
        mask |= 1 << v
    outside = None
    for v in members:
        nbhd = g.rows[v] & ~mask
        if outside is None:
            outside = nbhd
        elif nbhd != outside:
            return False
    return True


def _module_closure(g: Graph, seed_mask: int) -> int:
    """Smallest module containing the seed set, as a bitmask."""
    mask = seed_mask
    changed = True
    while changed:
        changed = False
        for x in range(g.n):
            if mask >> x & 1:
                continue
            inside = g.rows[x] & mask
            if inside and inside != mask:  # x distinguishes a pair in mask
                mask |= 1 << x
                changed = True
    return mask


def is_prime(g: Graph) -> bool:
    """No proper module. Every proper module of size >= 2 contains a pair
    whose closure stays proper, so checking pair closures suffices."""
    full = (1 << g.n) - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if _module_closure(g, 1 << u | 1 << v) != full:
                return False
    return True


def _components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        mask = 1 << start
        frontier = [start]
        while frontier:
            v = frontier.pop()
            new = g.rows[v] & ~mask
            mask |= new
            frontier += [u for u in range(g.n) if new >> u & 1]
        seen |= mask
        comps.append([v for v in range(g.n) if mask >> v & 1])
    return comps


@dataclass(frozen=True)
class QuotientDecomposition:
    """Prime quotient H plus the module partition of the input graph."""

    quotient: Graph
    modules: tuple[tuple[int, ...], ...]
    module_graphs: tuple[Graph, ...]

    def to_json(self) -> str:
        return json.dumps({
            "quotient": to_graph6(self.quotient),
            "modules": [list(m) for m in self.modules],
        })


def quotient(g: Graph) -> QuotientDecomposition:
    """Decompose ``g`` as an inflation of a unique prime graph H.

    Maximal proper modules are used when H has four or more vertices. When
    ``g`` (resp. its complement) is disconnected the module collection is
    not unique; we deterministically split off the (co-)component of
    vertex 0 against the rest, giving a two-vertex quotient.
    """
    if g.n < 2:
        raise ValueError("quotient needs at least 2 vertices")
    comps = _components(g)
    if len(comps) > 1:
        first = comps[0]
        rest = sorted(v for v in range(g.n) if v not in first)
        parts = [first, rest]
        h = Graph(2, (0, 0))
    else:
        co_comps = _components(g.complement())
        if len(co_comps) > 1:
            first = co_comps[0]
            rest = sorted(v for v in range(g.n) if v not in first)
            parts = [first, rest]
            h = Graph.from_edges(2, [(0, 1)])
        else:
            # connected and co-connected: maximal proper modules partition
            # V; u, v share a part iff their pair closure is proper
            full = (1 << g.n) - 1
            parent = list(range(g.n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if find(u) != find(v) and \
                       _module_closure(g, 1 << u | 1 << v) != full:
                        parent[find(v)] = find(u)
            groups: dict[int, list[int]] = {}
            for v in range(g.n):
                groups.setdefault(find(v), []).append(v)
            parts = sorted(groups.values())
            reps = [p[0] for p in parts]
            h = Graph.from_edges(len(parts),
                                 ((i, j) for i, j in
                                  itertools.combinations(range(len(parts)), 2)
                                  if g.adjacent(reps[i], reps[j])))
    if not is_prime(h):  # pragma: no cover - guards the closure argument
        raise AssertionError("quotient produced a non-prime graph")
    for part in parts:
        if not is_module(g, part):  # pragma: no cover
            raise AssertionError("quotient part is not a module")
    return QuotientDecomposition(
        h, tuple(tuple(p) for p in parts),
        tuple(g.induced(p) for p in parts))


def reconstruct(decomposition: QuotientDecomposition) -> tuple[Graph, list[int]]:
    """Inflate the quotient back; returns the graph plus the vertex map
    sending each rebuilt vertex to the original id (a concrete isomorphism
    witness for the roundtrip)."""
    g, blocks = inflate(decomposition.quotient,
                        list(decomposition.module_graphs))
    mapping = [0] * g.n
    for part, block in zip(decomposition.modules, blocks):
        for orig, new in zip(part, block):
            mapping[new] = orig
    return g, mapping


P4_END = "P4End"
P4_MID = "P4Mid"
BULL_NOSE = "BullNose"


@dataclass(frozen=True)
class VertexRole:
    role: str
    witness: tuple[int, ...]


def classify_vertex(h: Graph, v: int) -> VertexRole:
    """Locate ``v`` in an induced P4 (as endpoint, then midpoint) or as the
    nose of an induced bull; one of these must exist in a prime graph on
    four or more vertices.

    Witnesses are in path order (P4 roles: v first for endpoints, second
    for midpoints) or path-then-nose order for the bull, and are the first
    found scanning candidate ids in ascending order.
    """
    if h.n < 4:
        raise ValueError("classification needs at least 4 vertices")
    others = [u for u in range(h.n) if u != v]

    def induced_path4(p):
        for i in range(4):
            for j in range(i + 1, 4):
                if h.adjacent(p[i], p[j]) != (j == i + 1):
                    return False
        return True

    for a, b, c in itertools.permutations(others, 3):
        if induced_path4((v, a, b, c)):
            return VertexRole(P4_END, (v, a, b, c))
    for a, b, c in itertools.permutations(others, 3):
        if induced_path4((a, v, b, c)):
            return VertexRole(P4_MID, (a, v, b, c))
    for a, b, c, d in itertools.permutations(others, 4):
        if induced_path4((a, b, c, d)) and \
                h.adjacent(v, b) and h.adjacent(v, c) and \
                not h.adjacent(v, a) and not h.adjacent(v, d):
            return VertexRole(BULL_NOSE, (a, b, c, d, v))
    raise AssertionError(
        "vertex of a prime graph is in no P4 and noses no bull")


def verify_role(h: Graph, v: int, role: VertexRole) -> bool:
    """Independent check that a classification witness is genuine."""
    w = role.witness
    if len(set(w)) != len(w) or v not in w:
        return False
    if role.role in (P4_END, P4_MID):
        expect = path(4)
        pos = 0 if role.role == P4_END else 1
        if w[pos] != v:
            return False
        return all(h.adjacent(w[i], w[j]) == expect.adjacent(i, j)
                   for i in range(4) for j in range(i + 1, 4))
    if role.role == BULL_NOSE:
        if w[4] != v:
            return False
        expect = bull()
        return all(h.adjacent(w[i], w[j]) == expect.adjacent(i, j)
                   for i in range(5) for j in range(i + 1, 5))
    return False


def decomposition_tree(g: Graph) -> dict:
    """Quotient applied recursively to each module, as a JSON-able tree."""
    node: dict = {"graph": to_graph6(g), "n": g.n}
    if g.n >= 2:
        dec = quotient(g)
        node["quotient"] = to_graph6(dec.quotient)
        node["modules"] = [
            {"vertices": list(part),
             "tree": decomposition_tree(sub)}
            for part, sub in zip(dec.modules, dec.module_graphs)
        ]
    return node
