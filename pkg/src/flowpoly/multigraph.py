"""Multigraphs with loops and parallel edges, and the structure queries the
flow-polynomial machinery needs.

A multigraph is a vertex count n (vertices are 0..n-1) plus an ordered tuple
of edges, each an unordered pair (u, v) with u == v allowed for a loop.  Edge
identity is positional: deletion and contraction renumber nothing except the
removed edge, and duals inherit the primal edge order.  Contraction keeps any
loops and parallel edges it creates; nothing here ever simplifies a graph
implicitly.

Degree follows the usual multigraph convention: a loop adds 2 to its vertex.

Edge cuts are edge *subsets*: a set S of edges is a cut when S is exactly the
set of edges crossing some bipartition (V1, V2) of the vertices.  Counting
cuts therefore counts subsets, not bipartitions; a cut is "proper" when
removing it leaves no isolated vertex.

The canonical code is a complete isomorphism invariant computed by color
refinement plus individualization, minimizing a bytes encoding over the
admissible vertex orders.  Cost grows with the automorphism group, so it is
meant for the small graphs (a dozen vertices or so) this package works at.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, slots=True)
class MultiGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = []
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            norm.append((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for a, b in self.edges:
            d[a] += 1
            d[b] += 1
        return d

    def __repr__(self) -> str:
        return f"MultiGraph({self.n}, {list(self.edges)})"


def delete_edge(g: MultiGraph, i: int) -> MultiGraph:
    """Remove edge i, keeping every vertex and all other edge positions."""
    if not 0 <= i < g.m:
        raise IndexError(f"edge index {i} out of range")
    return MultiGraph(g.n, g.edges[:i] + g.edges[i + 1 :])


def contract_edge(g: MultiGraph, i: int) -> MultiGraph:
    """Contract the non-loop edge i, merging its endpoints.

    The higher endpoint is merged into the lower; vertices above it shift
    down by one.  Parallel copies of the contracted edge become loops, which
    are kept.
    """
    if not 0 <= i < g.m:
        raise IndexError(f"edge index {i} out of range")
    u, v = g.edges[i]
    if u == v:
        raise ValueError("cannot contract a loop")
    lo, hi = (u, v) if u < v else (v, u)

    def remap(w: int) -> int:
        if w == hi:
            return lo
        return w - 1 if w > hi else w

    edges = tuple(
        (remap(a), remap(b)) for j, (a, b) in enumerate(g.edges) if j != i
    )
    return MultiGraph(g.n - 1, edges)


def _adjacency(g: MultiGraph) -> list[list[tuple[int, int]]]:
    """Per-vertex list of (neighbor, edge index); loops are skipped."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    return adj


def components(g: MultiGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    adj = _adjacency(g)
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = [s]
        while queue:
            u = queue.pop()
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out


def is_connected(g: MultiGraph) -> bool:
    return len(components(g)) <= 1


def bridges(g: MultiGraph) -> frozenset[int]:
    """Edge indices whose removal disconnects their component.

    Iterative lowpoint DFS.  Parallel edges are handled by tracking the
    parent *edge index*, not the parent vertex: a second copy of the tree
    edge acts as a back edge, so neither copy is a bridge.  Loops never are.
    """
    adj = _adjacency(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[list] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, pe, pos = frame
            if pos < len(adj[u]):
                frame[2] = pos + 1
                v, ei = adj[u][pos]
                if ei == pe:
                    continue
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append([v, ei, 0])
                elif disc[v] < low[u]:
                    low[u] = disc[v]
            else:
                stack.pop()
                if stack:
                    pu = stack[-1][0]
                    if low[u] < low[pu]:
                        low[pu] = low[u]
                    if low[u] > disc[pu]:
                        out.append(pe)
    return frozenset(out)


def articulation_points(g: MultiGraph) -> frozenset[int]:
    """Cut vertices, computed by the same lowpoint DFS as bridges()."""
    adj = _adjacency(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[list] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, pe, pos = frame
            if pos < len(adj[u]):
                frame[2] = pos + 1
                v, ei = adj[u][pos]
                if ei == pe:
                    continue
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append([v, ei, 0])
                elif disc[v] < low[u]:
                    low[u] = disc[v]
            else:
                stack.pop()
                if stack:
                    pu = stack[-1][0]
                    if low[u] < low[pu]:
                        low[pu] = low[u]
                    if pu != root and low[u] >= disc[pu]:
                        out.add(pu)
        if root_children >= 2:
            out.add(root)
    return frozenset(out)


def blocks(g: MultiGraph) -> list[MultiGraph]:
    """Block decomposition: maximal nonseparable subgraphs plus loop blocks.

    Every loop forms its own single-edge block.  The non-loop edges are
    partitioned by a biconnected-components DFS; every edge of g lands in
    exactly one block.  Each block is returned with vertices renumbered 0..k
    in ascending original order and edges in ascending original order, and
    the list is sorted by least original edge index.  Isolated vertices
    produce no block.
    """
    block_edge_sets: list[list[int]] = []
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            block_edge_sets.append([i])

    adj = _adjacency(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    estack: list[int] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[list] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, pe, pos = frame
            if pos < len(adj[u]):
                frame[2] = pos + 1
                v, ei = adj[u][pos]
                if ei == pe:
                    continue
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    estack.append(ei)
                    stack.append([v, ei, 0])
                elif disc[v] < disc[u]:
                    # genuine back edge (each non-tree edge pushed once)
                    estack.append(ei)
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            else:
                stack.pop()
                if stack:
                    pu = stack[-1][0]
                    if low[u] < low[pu]:
                        low[pu] = low[u]
                    if low[u] >= disc[pu]:
                        blk = []
                        while True:
                            e = estack.pop()
                            blk.append(e)
                            if e == pe:
                                break
                        block_edge_sets.append(blk)

    out = []
    for edge_ids in sorted(block_edge_sets, key=min):
        edge_ids = sorted(edge_ids)
        verts = sorted({w for e in edge_ids for w in g.edges[e]})
        local = {w: i for i, w in enumerate(verts)}
        out.append(
            MultiGraph(len(verts), [(local[g.edges[e][0]], local[g.edges[e][1]]) for e in edge_ids])
        )
    return out


def is_nonseparable(g: MultiGraph) -> bool:
    """True for a single loop on one vertex, or for a connected loopless
    graph with no cut vertex.  (A lone vertex and a single edge both count.)"""
    if g.n == 1 and g.m == 1:
        return True  # the single loop
    if any(u == v for u, v in g.edges):
        return False
    return is_connected(g) and not articulation_points(g)


@dataclass(frozen=True)
class EdgeCut:
    """An edge cut: the crossing set of some vertex bipartition.

    edges is the subset of edge indices; sides is one bipartition realizing
    it; proper means no vertex of G - S is isolated.
    """

    edges: frozenset[int]
    sides: tuple[frozenset[int], frozenset[int]]
    proper: bool


def edge_cuts(g: MultiGraph, size: int) -> list[EdgeCut]:
    """All edge cuts of the given size, as distinct edge subsets.

    Requires g connected.  A subset S qualifies when S is exactly the set of
    edges crossing some bipartition; two bipartitions with the same crossing
    set contribute one cut.  Subsets are scanned in lexicographic index
    order, so the result order is deterministic.
    """
    if not is_connected(g):
        raise ValueError("edge cuts are defined here for connected graphs only")
    nonloop = [i for i, (u, v) in enumerate(g.edges) if u != v]
    out: list[EdgeCut] = []
    degs = g.degrees()
    for subset in itertools.combinations(nonloop, size):
        cut = _check_cut(g, subset)
        if cut is None:
            continue
        side1, side2 = cut
        proper = True
        for v in range(g.n):
            d = degs[v]
            for e in subset:
                a, b = g.edges[e]
                if a == v:
                    d -= 1
                if b == v:
                    d -= 1
            if d == 0:
                proper = False
                break
        out.append(EdgeCut(frozenset(subset), (side1, side2), proper))
    return out


def _check_cut(g: MultiGraph, subset: tuple[int, ...]) -> tuple[frozenset[int], frozenset[int]] | None:
    """If subset is exactly the crossing set of some bipartition, return one
    such bipartition (side containing vertex 0 first); else None."""
    removed = set(subset)
    # components of G - S
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if i not in removed and u != v:
            adj[u].append(v)
            adj[v].append(u)
    comp = [-1] * g.n
    ncomp = 0
    for s in range(g.n):
        if comp[s] != -1:
            continue
        comp[s] = ncomp
        queue = [s]
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if comp[v] == -1:
                    comp[v] = ncomp
                    queue.append(v)
        ncomp += 1
    if ncomp == 1:
        return None
    # every cut edge must join two different components
    links: list[list[int]] = [[] for _ in range(ncomp)]
    for e in subset:
        u, v = g.edges[e]
        if comp[u] == comp[v]:
            return None
        links[comp[u]].append(comp[v])
        links[comp[v]].append(comp[u])
    # 2-color the component graph so that every cut edge crosses
    color = [-1] * ncomp
    for s in range(ncomp):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            c = queue.pop()
            for d in links[c]:
                if color[d] == -1:
                    color[d] = 1 - color[c]
                    queue.append(d)
                elif color[d] == color[c]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[comp[v]] == 0)
    side1 = frozenset(v for v in range(g.n) if color[comp[v]] == 1)
    if 0 in side1:
        side0, side1 = side1, side0
    return (side0, side1)


def is_3_edge_connected(g: MultiGraph) -> bool:
    """Connected, bridgeless, and without any 2-edge cut.

    Checked by brute force: a connected bridgeless graph has a 2-edge cut
    exactly when deleting some single edge leaves a bridge.  Degenerate
    cases follow the definition literally: a lone vertex and the single
    loop both pass.
    """
    if not is_connected(g):
        return False
    if bridges(g):
        return False
    for i, (u, v) in enumerate(g.edges):
        if u != v and bridges(delete_edge(g, i)):
            return False
    return True


# -- canonical form --------------------------------------------------------

_ENUMERATION_LIMIT = 10080  # max orderings enumerated before individualizing


def canonical_code(g: MultiGraph) -> bytes:
    """Isomorphism-invariant byte encoding of a multigraph.

    Two multigraphs get the same code exactly when they are isomorphic.  The
    code is the minimum, over admissible vertex orders, of (n, then the
    multiplicity matrix lower triangle row by row, diagonal = loop count).
    Admissible orders are restricted by iterated degree refinement; when a
    color class stays large the search individualizes one vertex at a time,
    which keeps highly symmetric graphs (complete graphs, parallel families)
    from exploding factorially.
    """
    n = g.n
    if n == 0:
        return bytes([0])
    if n > 255:
        raise ValueError("canonical_code supports at most 255 vertices")
    mult = [[0] * n for _ in range(n)]
    loops = [0] * n
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            mult[u][v] += 1
            mult[v][u] += 1
    if any(c > 255 for row in mult for c in row) or any(c > 255 for c in loops):
        raise ValueError("edge multiplicity too large to encode")

    deg = [sum(mult[v]) + 2 * loops[v] for v in range(n)]
    initial = [(loops[v], deg[v]) for v in range(n)]
    colors = _renumber(initial)
    colors = _refine(colors, mult, n)
    return _min_code(colors, mult, loops, n)


def _renumber(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(colors: list[int], mult: list[list[int]], n: int) -> list[int]:
    while True:
        keys = []
        for v in range(n):
            row = mult[v]
            nb = sorted((colors[u], row[u]) for u in range(n) if row[u])
            keys.append((colors[v], tuple(nb)))
        new = _renumber(keys)
        if new == colors:
            return colors
        colors = new


def _min_code(colors: list[int], mult: list[list[int]], loops: list[int], n: int) -> bytes:
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]

    count = 1
    for cell in ordered_cells:
        for k in range(2, len(cell) + 1):
            count *= k
        if count > _ENUMERATION_LIMIT:
            break

    if count > _ENUMERATION_LIMIT:
        # individualize one vertex of the first big cell, refine, recurse
        target = next(cell for cell in ordered_cells if len(cell) > 1)
        best = None
        for v in target:
            branched = [c * 2 for c in colors]
            branched[v] -= 1
            refined = _refine(_renumber(branched), mult, n)
            code = _min_code(refined, mult, loops, n)
            if best is None or code < best:
                best = code
        return best

    best = None
    for perm_parts in itertools.product(*(itertools.permutations(c) for c in ordered_cells)):
        order = [v for part in perm_parts for v in part]
        entries = bytearray([n])
        for i, v in enumerate(order):
            row = mult[v]
            for j in range(i):
                entries.append(row[order[j]])
            entries.append(loops[v])
        code = bytes(entries)
        if best is None or code < best:
            best = code
    return best


def isomorphic(a: MultiGraph, b: MultiGraph) -> bool:
    return canonical_code(a) == canonical_code(b)


# -- planar duals ----------------------------------------------------------


@dataclass(frozen=True)
class FaceStructure:
    """The faces of one plane embedding, each face a collection of edge
    indices.  Order within a face is ignored; what matters is that every
    edge index appears exactly twice across the whole structure (twice in
    one face when both sides of the edge meet the same face)."""

    faces: tuple[tuple[int, ...], ...]

    def __init__(self, faces: Iterable[Iterable[int]]):
        object.__setattr__(self, "faces", tuple(tuple(f) for f in faces))


def validate_faces(g: MultiGraph, fs: FaceStructure) -> None:
    """Check fs against g: index range, double cover, Euler's formula."""
    count = [0] * g.m
    for face in fs.faces:
        for e in face:
            if not 0 <= e < g.m:
                raise ValueError(f"face refers to edge {e}, but graph has {g.m} edges")
            count[e] += 1
    bad = [i for i, c in enumerate(count) if c != 2]
    if bad:
        raise ValueError(f"each edge must appear exactly twice across faces; offending edges {bad}")
    if not is_connected(g):
        raise ValueError("face structures are for connected plane graphs")
    f = len(fs.faces)
    if g.n - g.m + f != 2:
        raise ValueError(
            f"Euler check failed: n - m + f = {g.n} - {g.m} + {f} != 2"
        )


def build_dual(g: MultiGraph, fs: FaceStructure) -> MultiGraph:
    """Planar dual for the given embedding.

    Dual vertices are faces; dual edge i joins the two faces containing
    primal edge i (a loop when both sides are the same face).  Edge order is
    inherited from the primal graph, so primal and dual edge indices agree.
    """
    validate_faces(g, fs)
    where: list[list[int]] = [[] for _ in range(g.m)]
    for fi, face in enumerate(fs.faces):
        for e in face:
            where[e].append(fi)
    edges = [(w[0], w[1]) for w in where]
    return MultiGraph(len(fs.faces), edges)


def vertex_incidence_faces(g: MultiGraph) -> FaceStructure:
    """Faces of the dual embedding induced by a primal embedding: one face
    per primal vertex, listing its incident edge indices (loops twice).

    Feeding build_dual's output together with this structure back into
    build_dual recovers a graph isomorphic to the primal, for 2-connected
    plane inputs."""
    faces: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        faces[u].append(i)
        faces[v].append(i)
    return FaceStructure(faces)


# -- chordality ------------------------------------------------------------


def simplify(g: MultiGraph) -> MultiGraph:
    """Underlying simple graph: loops dropped, parallel classes collapsed.
    Edges are ordered by first occurrence in the original edge list."""
    seen = set()
    edges = []
    for u, v in g.edges:
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return MultiGraph(g.n, edges)


def is_chordal(g: MultiGraph) -> bool:
    """Chordality of the underlying simple graph.

    Maximum-cardinality search produces an elimination order; the order is a
    perfect elimination order iff the graph is chordal, verified by the
    standard parent-subsumption check.
    """
    s = simplify(g)
    n = s.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in s.edges:
        adj[u].add(v)
        adj[v].add(u)

    weight = [0] * n
    numbered = [False] * n
    order: list[int] = []  # filled last-to-first
    for _ in range(n):
        v = max((w for w in range(n) if not numbered[w]), key=lambda w: (weight[w], -w))
        numbered[v] = True
        order.append(v)
        for u in adj[v]:
            if not numbered[u]:
                weight[u] += 1
    order.reverse()  # elimination order: order[0] eliminated first
    pos = {v: i for i, v in enumerate(order)}

    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda u: pos[u])
        rest = set(later) - {parent}
        if not rest <= adj[parent]:
            return False
    return True


# -- text formats ----------------------------------------------------------


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_edge_list(text: str) -> MultiGraph:
    """Parse the edge-list format: '#' comments, first data line 'n m',
    then m lines 'u v' (u == v for a loop).  Raises ValueError with the
    offending line number on malformed input."""
    lines = _data_lines(text)
    if not lines:
        raise ValueError("empty input: expected a header line 'n m'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {lineno}: header must be two integers, got {header!r}") from None
    if n < 0 or m < 0:
        raise ValueError(f"line {lineno}: negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        edges.append((u, v))
    return MultiGraph(n, edges)


def format_edge_list(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_faces(text: str) -> FaceStructure:
    """Parse the faces format: one line per face, space-separated 0-based
    edge indices; '#' comments allowed."""
    faces = []
    for lineno, line in _data_lines(text):
        try:
            faces.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError(f"line {lineno}: face entries must be integers") from None
    if not faces:
        raise ValueError("empty input: expected at least one face line")
    return FaceStructure(faces)


def format_faces(fs: FaceStructure) -> str:
    return "\n".join(" ".join(str(e) for e in face) for face in fs.faces) + "\n"
