"""Exact flow and chromatic polynomials for multigraphs.

The flow polynomial F(G, x) counts nowhere-zero flows: F evaluated at a
positive integer q is the number of nowhere-zero flows over any abelian group
of order q.  It satisfies the deletion-contraction recursion with base cases
F = 1 on an edgeless graph and F = 0 in the presence of a bridge, a factor
(x - 1) per loop, and multiplicativity over disjoint unions (hence over
blocks).

Two independent implementations live here on purpose:

* flow_poly: the production engine.  Structural reductions (block splitting,
  loop factors, contracting an edge of a 2-edge cut, factoring across a
  proper 3-edge cut, splitting at a cut vertex of G - e) run before generic
  deletion-contraction, and results are memoized on canonical codes.  Every
  division performed by a factorization step must be exact; a remainder
  would mean a reduction fired outside its hypotheses, so it aborts loudly.

* flow_poly_naive: the plain five-branch recursion, pivoting on the lowest
  edge index, no shortcuts, no memo.  It is the correctness oracle for
  flow_poly and for the factorization identities themselves, so it must
  stay free of the lemma machinery.

count_flows_oracle is a third route for small instances: brute-force
enumeration of nowhere-zero assignments over the integers mod q.

The chromatic polynomial P(G, x) is computed by deletion-contraction with
parallel-edge collapsing, switching to addition-identification when the
complement is small, with complete graphs, trees, and cycles as closed-form
base cases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .multigraph import (
    MultiGraph,
    articulation_points,
    blocks,
    bridges,
    canonical_code,
    components,
    contract_edge,
    delete_edge,
    simplify,
)
from .polyalg import ExactDivisionError, IntPoly, exact_divide

_X_MINUS_1 = IntPoly((-1, 1))
_X_MINUS_2 = IntPoly((-2, 1))


@dataclass(frozen=True)
class TraceNode:
    """One reduction step: the rule applied, the graph it was applied to,
    and the subproblems it produced.

    Rules and their replay semantics:
      empty             -> 1
      bridge-zero       -> 0
      memo-hit          -> cached (stored in `cached`)
      block-split       -> product over children
      loop-factor       -> (x-1)^loop_count * child
      two-cut-contract  -> child
      three-cut-split   -> child0 * child1 / ((x-1)(x-2))
      vertex-edge-split -> child0 * child1 / (x-1)
      delete-contract   -> child0 - child1   (contract first, delete second)
    """

    rule: str
    graph: MultiGraph
    children: tuple["TraceNode", ...] = ()
    loop_count: int = 0
    cached: IntPoly | None = None


@dataclass(frozen=True)
class ReductionTrace:
    root: TraceNode

    def steps(self) -> list[tuple[str, MultiGraph]]:
        """Applied rules in preorder, each with the graph it fired on."""
        out: list[tuple[str, MultiGraph]] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            out.append((node.rule, node.graph))
            stack.extend(reversed(node.children))
        return out


def replay_trace(trace: ReductionTrace | TraceNode) -> IntPoly:
    """Recompute the polynomial from a trace alone (no graph algorithms)."""
    node = trace.root if isinstance(trace, ReductionTrace) else trace
    rule = node.rule
    if rule == "empty":
        return IntPoly.one()
    if rule == "bridge-zero":
        return IntPoly.zero()
    if rule == "memo-hit":
        return node.cached
    kids = [replay_trace(c) for c in node.children]
    if rule == "block-split":
        out = IntPoly.one()
        for p in kids:
            out = out * p
        return out
    if rule == "loop-factor":
        return kids[0] * _X_MINUS_1 ** node.loop_count
    if rule == "two-cut-contract":
        return kids[0]
    if rule == "three-cut-split":
        return exact_divide(kids[0] * kids[1], _X_MINUS_1 * _X_MINUS_2)
    if rule == "vertex-edge-split":
        return exact_divide(kids[0] * kids[1], _X_MINUS_1)
    if rule == "delete-contract":
        return kids[0] - kids[1]
    raise ValueError(f"unknown trace rule {rule!r}")



def trace_lines(trace: ReductionTrace) -> list[str]:
    """Line-oriented rendering of a reduction trace: one line per step with
    the rule name and subgraph size, indented by recursion depth."""
    out: list[str] = []

    def walk(node: TraceNode, depth: int) -> None:
        extra = f" loops={node.loop_count}" if node.rule == "loop-factor" else ""
        out.append(f"{'  ' * depth}{node.rule} n={node.graph.n} m={node.graph.m}{extra}")
        for child in node.children:
            walk(child, depth + 1)

    walk(trace.root, 0)
    return out


def flow_poly(g: MultiGraph, memo: dict[bytes, IntPoly] | None = None) -> IntPoly:
    """Flow polynomial of any multigraph.

    memo maps canonical codes to polynomials and may be shared across calls;
    pass one explicitly when computing many related graphs.
    """
    if memo is None:
        memo = {}
    poly, _ = _flow(g, memo, False)
    return poly


def flow_poly_traced(
    g: MultiGraph, memo: dict[bytes, IntPoly] | None = None
) -> tuple[IntPoly, ReductionTrace]:
    """Flow polynomial plus the reduction trace that produced it."""
    if memo is None:
        memo = {}
    poly, node = _flow(g, memo, True)
    return poly, ReductionTrace(node)


def _flow(g: MultiGraph, memo: dict, tracing: bool) -> tuple[IntPoly, TraceNode | None]:
    if g.m == 0:
        return IntPoly.one(), TraceNode("empty", g) if tracing else None
    if bridges(g):
        return IntPoly.zero(), TraceNode("bridge-zero", g) if tracing else None
    code = canonical_code(g)
    hit = memo.get(code)
    if hit is not None:
        node = TraceNode("memo-hit", g, cached=hit) if tracing else None
        return hit, node
    poly, node = _flow_reduce(g, memo, tracing)
    memo[code] = poly
    return poly, node


def _flow_reduce(g: MultiGraph, memo: dict, tracing: bool) -> tuple[IntPoly, TraceNode | None]:
    # blocks (this also splits disconnected graphs and drops isolated vertices)
    bl = blocks(g)
    if len(bl) >= 2 or (len(bl) == 1 and bl[0].n < g.n):
        poly = IntPoly.one()
        kids = []
        for b in bl:
            p, child = _flow(b, memo, tracing)
            poly = poly * p
            if tracing:
                kids.append(child)
        return poly, TraceNode("block-split", g, tuple(kids)) if tracing else None

    # loops: each contributes a factor (x - 1)
    loop_ids = [i for i, (u, v) in enumerate(g.edges) if u == v]
    if loop_ids:
        rest = MultiGraph(g.n, [(u, v) for u, v in g.edges if u != v])
        p, child = _flow(rest, memo, tracing)
        poly = p * _X_MINUS_1 ** len(loop_ids)
        node = (
            TraceNode("loop-factor", g, (child,), loop_count=len(loop_ids))
            if tracing
            else None
        )
        return poly, node

    # g is now connected, loopless, bridgeless, nonseparable.

    # edge of a 2-edge cut: contracting it preserves F
    for i in range(g.m):
        if bridges(delete_edge(g, i)):
            p, child = _flow(contract_edge(g, i), memo, tracing)
            node = TraceNode("two-cut-contract", g, (child,)) if tracing else None
            return p, node

    # g is now 3-edge-connected; look for a proper 3-edge cut
    for i, j in itertools.combinations(range(g.m), 2):
        reduced = MultiGraph(g.n, [e for k, e in enumerate(g.edges) if k not in (i, j)])
        for h_local in sorted(bridges(reduced)):
            # recover the original index of the bridge
            h = h_local + (1 if h_local >= i else 0)
            h = h + (1 if h >= j else 0)
            cut = (i, j, h)
            sides = components(
                MultiGraph(g.n, [e for k, e in enumerate(g.edges) if k not in cut])
            )
            assert len(sides) == 2, "a 3-edge cut of a 3-edge-connected graph has two sides"
            if len(sides[0]) < 2 or len(sides[1]) < 2:
                continue  # vertex star, not a proper cut
            p1, c1 = _flow(_contract_side(g, cut, sides[1]), memo, tracing)
            p2, c2 = _flow(_contract_side(g, cut, sides[0]), memo, tracing)
            poly = exact_divide(p1 * p2, _X_MINUS_1 * _X_MINUS_2)
            node = TraceNode("three-cut-split", g, (c1, c2)) if tracing else None
            return poly, node

    # cut vertex of G - e: split into two edge-disjoint halves sharing it
    for i, (u1, u2) in enumerate(g.edges):
        arts = articulation_points(delete_edge(g, i))
        if not arts:
            continue
        a = min(arts)
        assert a not in (u1, u2), "a cut vertex of G - e cannot be an endpoint of e"
        side1 = _component_of(g, skip_edge=i, skip_vertex=a, start=u1)
        assert u2 not in side1, "every cut vertex of G - e separates the endpoints of e"
        rest = [v for v in range(g.n) if v != a and v not in side1]
        p1, c1 = _flow(_induced_plus(g, sorted(side1) + [a], i, (a, u1)), memo, tracing)
        p2, c2 = _flow(_induced_plus(g, sorted(rest) + [a], i, (a, u2)), memo, tracing)
        poly = exact_divide(p1 * p2, _X_MINUS_1)
        node = TraceNode("vertex-edge-split", g, (c1, c2)) if tracing else None
        return poly, node

    # generic deletion-contraction on a largest parallel class
    classes: dict[tuple[int, int], list[int]] = {}
    for i, (u, v) in enumerate(g.edges):
        classes.setdefault((u, v) if u < v else (v, u), []).append(i)
    pair = min(classes, key=lambda k: (-len(classes[k]), k))
    e = classes[pair][0]
    pc, cc = _flow(contract_edge(g, e), memo, tracing)
    pd, cd = _flow(delete_edge(g, e), memo, tracing)
    poly = pc - pd
    node = TraceNode("delete-contract", g, (cc, cd)) if tracing else None
    return poly, node


def _contract_side(g: MultiGraph, cut: tuple[int, ...], side: list[int]) -> MultiGraph:
    """Collapse `side` (one shore of the cut) to a single new vertex, keeping
    the other shore intact.  Edges inside the collapsed shore vanish; the cut
    edges become edges to the new vertex."""
    side_set = set(side)
    keep = sorted(v for v in range(g.n) if v not in side_set)
    local = {v: i for i, v in enumerate(keep)}
    w = len(keep)
    edges = []
    for k, (u, v) in enumerate(g.edges):
        if k in cut:
            inner = u if u in local else v
            edges.append((local[inner], w))
        elif u in local and v in local:
            edges.append((local[u], local[v]))
    return MultiGraph(w + 1, edges)


def _component_of(g: MultiGraph, skip_edge: int, skip_vertex: int, start: int) -> set[int]:
    """Vertices reachable from `start` in G - skip_edge - skip_vertex."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        if k != skip_edge and u != v and skip_vertex not in (u, v):
            adj[u].append(v)
            adj[v].append(u)
    seen = {start}
    queue = [start]
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def _induced_plus(
    g: MultiGraph, verts: list[int], skip_edge: int, extra: tuple[int, int]
) -> MultiGraph:
    """Induced subgraph on `verts` (original ids, order kept) minus one edge,
    plus one extra edge given in original ids."""
    local = {v: i for i, v in enumerate(verts)}
    edges = [
        (local[u], local[v])
        for k, (u, v) in enumerate(g.edges)
        if k != skip_edge and u in local and v in local
    ]
    edges.append((local[extra[0]], local[extra[1]]))
    return MultiGraph(len(verts), edges)


def flow_poly_naive(g: MultiGraph) -> IntPoly:
    """Reference implementation: the bare five-branch recursion.

    Branch order: edgeless, bridge, disjoint union, then pivot on the lowest
    edge index (loop factor or deletion-contraction).  Exponential; intended
    for graphs with at most a dozen edges.
    """
    if g.m == 0:
        return IntPoly.one()
    if bridges(g):
        return IntPoly.zero()
    comps = components(g)
    if len(comps) > 1:
        out = IntPoly.one()
        for comp in comps:
            local = {v: i for i, v in enumerate(comp)}
            edges = [
                (local[u], local[v]) for u, v in g.edges if u in local and v in local
            ]
            out = out * flow_poly_naive(MultiGraph(len(comp), edges))
        return out
    u, v = g.edges[0]
    if u == v:
        return _X_MINUS_1 * flow_poly_naive(delete_edge(g, 0))
    return flow_poly_naive(contract_edge(g, 0)) - flow_poly_naive(delete_edge(g, 0))


def count_flows_oracle(g: MultiGraph, q: int, work_limit: int = 10**8) -> int:
    """Count nowhere-zero flows over the integers mod q by brute force.

    Every edge gets a value in 1..q-1 under a fixed orientation (edge tuples
    read tail to head); conservation is checked at each vertex over its
    non-loop edges.  Loops satisfy conservation trivially, so each just
    multiplies the count by q-1.  Refuses instances whose raw assignment
    space exceeds work_limit.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    nonloop = [(u, v) for u, v in g.edges if u != v]
    n_loops = g.m - len(nonloop)
    if (q - 1) ** len(nonloop) > work_limit:
        raise ValueError(
            f"instance too large: {(q - 1) ** len(nonloop)} assignments exceed {work_limit}"
        )
    remaining = [0] * g.n
    for u, v in nonloop:
        remaining[u] += 1
        remaining[v] += 1
    balance = [0] * g.n

    def rec(k: int) -> int:
        if k == len(nonloop):
            return 1
        u, v = nonloop[k]
        remaining[u] -= 1
        remaining[v] -= 1
        total = 0
        for val in range(1, q):
            balance[u] += val
            balance[v] -= val
            if (remaining[u] > 0 or balance[u] % q == 0) and (
                remaining[v] > 0 or balance[v] % q == 0
            ):
                total += rec(k + 1)
            balance[u] -= val
            balance[v] += val
        remaining[u] += 1
        remaining[v] += 1
        return total

    return rec(0) * (q - 1) ** n_loops


# -- chromatic polynomials ---------------------------------------------------


def falling_factorial(t: int) -> IntPoly:
    """x(x-1)...(x-t+1); the chromatic polynomial of the complete graph K_t."""
    out = IntPoly.one()
    for i in range(t):
        out = out * IntPoly((-i, 1))
    return out


def chromatic_poly(g: MultiGraph, memo: dict[bytes, IntPoly] | None = None) -> IntPoly:
    """Chromatic polynomial; zero for graphs with loops.

    Parallel edges are collapsed up front.  Connected simple pieces recurse
    by deletion-contraction, or by addition-identification once the graph is
    within n-1 edges of complete; complete graphs, trees, and cycles are
    closed forms.  memo (canonical code -> polynomial) may be shared.
    """
    if any(u == v for u, v in g.edges):
        return IntPoly.zero()
    if memo is None:
        memo = {}
    s = simplify(g)
    out = IntPoly.one()
    for comp in components(s):
        local = {v: i for i, v in enumerate(comp)}
        edges = [(local[u], local[v]) for u, v in s.edges if u in local and v in local]
        out = out * _chrom(MultiGraph(len(comp), edges), memo)
    return out


def _chrom(s: MultiGraph, memo: dict) -> IntPoly:
    """Chromatic polynomial of a connected simple graph."""
    n = s.n
    if s.m == 0:
        return IntPoly.x() if n == 1 else IntPoly.one()  # n <= 1 when connected
    if s.m == n - 1:  # tree
        return IntPoly.x() * _X_MINUS_1 ** (n - 1)
    full = n * (n - 1) // 2
    if s.m == full:
        return falling_factorial(n)
    if s.m == n and all(d == 2 for d in s.degrees()):  # cycle
        sign = 1 if n % 2 == 0 else -1
        return _X_MINUS_1 ** n + _X_MINUS_1.scale(sign)

    code = canonical_code(s)
    hit = memo.get(code)
    if hit is not None:
        return hit

    if full - s.m <= n - 1:
        # nearly complete: P(G) = P(G + uv) + P(G with u,v identified)
        u, v = _first_nonadjacent(s)
        added = MultiGraph(n, list(s.edges) + [(u, v)])
        merged = simplify(_identify(s, u, v))
        result = chromatic_poly(added, memo) + chromatic_poly(merged, memo)
    else:
        # P(G) = P(G - e) - P(G / e)
        contracted = simplify(contract_edge(s, 0))
        result = chromatic_poly(delete_edge(s, 0), memo) - chromatic_poly(contracted, memo)
    memo[code] = result
    return result


def _first_nonadjacent(s: MultiGraph) -> tuple[int, int]:
    present = {(u, v) if u < v else (v, u) for u, v in s.edges}
    for u, v in itertools.combinations(range(s.n), 2):
        if (u, v) not in present:
            return u, v
    raise AssertionError("graph is complete")


def _identify(s: MultiGraph, u: int, v: int) -> MultiGraph:
    """Merge vertex v into u (u, v non-adjacent), keeping all edges."""
    lo, hi = (u, v) if u < v else (v, u)

    def remap(w: int) -> int:
        if w == hi:
            return lo
        return w - 1 if w > hi else w

    return MultiGraph(s.n - 1, [(remap(a), remap(b)) for a, b in s.edges])


def build_H_s(s: int) -> MultiGraph:
    """Complete graph K_s with one edge subdivided once: s+1 vertices, the
    subdividing vertex is s, and the split edge is (0,1)."""
    if s < 3:
        raise ValueError("s must be at least 3")
    edges = [e for e in itertools.combinations(range(s), 2) if e != (0, 1)]
    edges += [(0, s), (1, s)]
    return MultiGraph(s + 1, edges)
