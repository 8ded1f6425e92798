"""Isomorphism-free generation of small connected multigraphs.

The generator works in two layers.  First it enumerates unlabeled connected
simple graphs (the bases), one representative per isomorphism class, by
scanning all edge subsets on n labeled vertices and deduplicating with
canonical_code.  Second it decorates each base: every base edge receives a
multiplicity between 1 and the cap, and every vertex receives a loop count
between 0 and the cap, subject to a total edge budget.

Decorations are deduplicated by orbit minimality under the base's
automorphism group rather than by canonicalizing every candidate.  That is
exact: the loopless simplification of a decorated graph is its base, so an
isomorphism between two decorated graphs restricts to an automorphism of the
shared base carrying one decoration vector to the other.  Distinct bases can
never collide.  Keeping only decorations that are lexicographically minimal
in their orbit therefore hits every isomorphism class exactly once.

Scale: intended for desk-size surveys.  Base generation scans 2^C(n,2)
subsets, fine through n = 6 and a couple of minutes at n = 7.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .multigraph import MultiGraph, bridges, canonical_code

__all__ = [
    "connected_simple_graphs",
    "graph_automorphisms",
    "labeled_multigraph_bound",
    "enumerate_multigraphs",
]


def connected_simple_graphs(n: int) -> list[MultiGraph]:
    """All connected loopless simple graphs on n vertices, one per class.

    Ordered by (edge count, canonical code), so the output is stable across
    runs and Python versions.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        return [MultiGraph(1, [])]
    pairs = list(combinations(range(n), 2))
    seen: set[bytes] = set()
    reps: list[tuple[int, bytes, MultiGraph]] = []
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") < n - 1:
            continue
        adj = [0] * n
        for j, (u, v) in enumerate(pairs):
            if mask >> j & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        # bitmask BFS from vertex 0
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            v = frontier
            while v:
                low = v & -v
                nxt |= adj[low.bit_length() - 1]
                v ^= low
            frontier = nxt & ~reach
            reach |= frontier
        if reach != full:
            continue
        g = MultiGraph(n, [pairs[j] for j in range(len(pairs)) if mask >> j & 1])
        code = canonical_code(g)
        if code not in seen:
            seen.add(code)
            reps.append((g.m, code, g))
    reps.sort(key=lambda t: (t[0], t[1]))
    return [g for _, _, g in reps]


def graph_automorphisms(g: MultiGraph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving the edge multiset (loops included).

    Brute force over degree-compatible permutations; meant for the small
    bases this module generates, not for large graphs.
    """
    mult: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        if u > v:
            u, v = v, u
        mult[(u, v)] = mult.get((u, v), 0) + 1
    degs = g.degrees()
    auts = []
    for perm in permutations(range(g.n)):
        if any(degs[v] != degs[perm[v]] for v in range(g.n)):
            continue
        ok = True
        for (u, v), c in mult.items():
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            if mult.get((a, b), 0) != c:
                ok = False
                break
        if ok:
            auts.append(perm)
    return auts


def labeled_multigraph_bound(n: int, max_edges: int, max_multiplicity: int) -> int:
    """Number of labeled multigraphs on n vertices within the bounds.

    Counts multiplicity functions on the C(n,2) vertex pairs and n loop
    slots, each value in 0..max_multiplicity, total at most max_edges.  Used
    as the work estimate a search refuses to exceed.
    """
    slots = n * (n - 1) // 2 + n
    ways = [0] * (max_edges + 1)
    ways[0] = 1
    for _ in range(slots):
        nxt = [0] * (max_edges + 1)
        for s, w in enumerate(ways):
            if not w:
                continue
            for v in range(min(max_multiplicity, max_edges - s) + 1):
                nxt[s + v] += w
        ways = nxt
    return sum(ways)


def _decorations(
    lows: list[int], cap: int, budget: int
) -> "list[tuple[int, ...]] | None":
    """Iterator over vectors with lows[i] <= vec[i] <= cap and sum <= budget,
    in lexicographic order.  Returns None when even the floor overshoots."""
    k = len(lows)
    need = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        need[i] = need[i + 1] + lows[i]
    if need[0] > budget:
        return None

    def rec(i: int, left: int):
        if i == k:
            yield ()
            return
        hi = min(cap, left - need[i + 1])
        for v in range(lows[i], hi + 1):
            for rest in rec(i + 1, left - v):
                yield (v,) + rest

    return rec(0, budget)


def _decoration_count(lows: list[int], cap: int, budget: int) -> int:
    """Exact size of the vector family _decorations would yield."""
    floor = sum(lows)
    if floor > budget:
        return 0
    ways = [0] * (budget + 1)
    ways[floor] = 1
    for lo in lows:
        if lo > cap:
            return 0
        nxt = [0] * (budget + 1)
        for s, w in enumerate(ways):
            if w:
                for v in range(min(cap - lo, budget - s) + 1):
                    nxt[s + v] += w
        ways = nxt
    return sum(ways)


def enumerate_multigraphs(
    max_vertices: int,
    max_edges: int,
    max_multiplicity: int = 4,
    *,
    bridgeless_only: bool = False,
    work_cap: int = 10**8,
    shard: "tuple[int, int] | None" = None,
):
    """Yield connected multigraphs within the bounds, one per isomorphism
    class, in a deterministic order.

    Bounds: at most max_vertices vertices, at most max_edges edges counted
    with multiplicity, and no parallel class (loop classes included) larger
    than max_multiplicity.  With bridgeless_only, every base bridge is forced
    to multiplicity at least 2, which is necessary and sufficient: decorating
    never destroys a base cycle, so no other edge can become a bridge.

    Raises ValueError when the estimated work (base-subset scan plus
    decoration candidates) exceeds work_cap; refusing up front beats hanging.
    The estimate is exact for the decoration layer, so the cap measures real
    work rather than the far larger labeled-multigraph count.

    shard=(i, w) keeps only every w-th base starting at the i-th, letting w
    workers split the space; the union over i of the shards is exactly the
    unsharded output.  The work estimate still covers the whole job, so a
    refusal is identical for every shard.
    """
    if max_vertices < 1 or max_edges < 0:
        raise ValueError("bounds must be positive")
    if not 1 <= max_multiplicity <= 255:
        raise ValueError("max_multiplicity must be in 1..255")
    if shard is not None:
        index, width = shard
        if width < 1 or not 0 <= index < width:
            raise ValueError("shard must be (index, width) with 0 <= index < width")
    scan = sum(2 ** (n * (n - 1) // 2) for n in range(1, max_vertices + 1))
    if scan > work_cap:
        raise ValueError(
            f"base-graph scan of {scan} edge subsets exceeds work cap {work_cap}"
        )

    plan: list[tuple[MultiGraph, list[int]]] = []
    work = scan
    for n in range(1, max_vertices + 1):
        for base in connected_simple_graphs(n):
            if base.m > max_edges:
                continue
            base_bridges = bridges(base) if bridgeless_only else frozenset()
            lows = [2 if i in base_bridges else 1 for i in range(base.m)]
            lows += [0] * n  # loop slots
            cnt = _decoration_count(lows, max_multiplicity, max_edges)
            if cnt == 0:
                continue
            work += cnt
            plan.append((base, lows))
    if work > work_cap:
        raise ValueError(
            f"estimated work {work} decoration candidates exceeds cap {work_cap}"
        )
    if shard is not None:
        index, width = shard
        plan = plan[index::width]
    return _run_plan(plan, max_edges, max_multiplicity)


def _run_plan(
    plan: "list[tuple[MultiGraph, list[int]]]", max_edges: int, max_multiplicity: int
):
    for base, lows in plan:
        n = base.n
        gen = _decorations(lows, max_multiplicity, max_edges)
        assert gen is not None
        # automorphism action on decoration slots: edge slots permute by the
        # induced map on base edges, loop slots by the vertex map
        edge_index = {e: i for i, e in enumerate(base.edges)}
        slot_perms = []
        for perm in graph_automorphisms(base):
            sp = [0] * (base.m + n)
            for i, (u, v) in enumerate(base.edges):
                a, b = perm[u], perm[v]
                if a > b:
                    a, b = b, a
                sp[i] = edge_index[(a, b)]
            for v in range(n):
                sp[base.m + v] = base.m + perm[v]
            if sp != list(range(base.m + n)):
                slot_perms.append(sp)
        for vec in gen:
            minimal = True
            for sp in slot_perms:
                moved = tuple(vec[sp[i]] for i in range(len(vec)))
                if moved < vec:
                    minimal = False
                    break
            if not minimal:
                continue
            edges: list[tuple[int, int]] = []
            for i, e in enumerate(base.edges):
                edges.extend([e] * vec[i])
            for v in range(n):
                edges.extend([(v, v)] * vec[base.m + v])
            yield MultiGraph(n, edges)
