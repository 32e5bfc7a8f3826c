"""Finite simple graphs at desk scale.

Vertices are 0..n-1.  The module covers exactly what the ideal constructions
and the classification sweeps need: induced subgraphs, connected vertex
subsets, path vertex sets, canonical forms with exhaustive-enumeration
backing, the named graph families (paths, cycles, stars, triangles with
pendant leaves, double brooms, spiders), subgraph containment and graph6 /
adjacency-list / JSON input and output.

Canonical forms are exact: colour refinement first, then minimisation of the
graph6 bit string over the colour-respecting orderings, branching through
individualisation when a colour class is too symmetric to enumerate directly.
The brute-force all-permutations form is kept alongside as a test oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

DEFAULT_CANONICAL_CAP = 10
DEFAULT_ENUMERATION_CAP = 7
DEFAULT_EMBEDDING_CAP = 12
_ORDERING_ENUM_LIMIT = 20000


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1 with edges as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad edge ({u}, {v}) for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(bin(m).count("1") for m in self.adjacency)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adjacency[v]))


def path_graph(r: int) -> SimpleGraph:
    if r < 1:
        raise GraphError("a path needs at least one vertex")
    return SimpleGraph.from_edges(r, [(i, i + 1) for i in range(r - 1)])


def cycle_graph(r: int) -> SimpleGraph:
    if r < 3:
        raise GraphError("a cycle needs at least three vertices")
    return SimpleGraph.from_edges(r, [(i, (i + 1) % r) for i in range(r)])


def star_graph(k: int) -> SimpleGraph:
    """Star with k leaves attached to the centre vertex 0; k = 0 is a single vertex."""
    if k < 0:
        raise GraphError("leaf count must be nonnegative")
    return SimpleGraph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("need at least one vertex")
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def triangle_with_leaves(k: int) -> SimpleGraph:
    """Triangle 0-1-2 with k pendant leaves, all attached to vertex 0."""
    if k < 0:
        raise GraphError("leaf count must be nonnegative")
    edges = [(0, 1), (0, 2), (1, 2)] + [(0, 3 + i) for i in range(k)]
    return SimpleGraph.from_edges(3 + k, edges)


def _spine_with_leaves(spine_len: int, attach: dict[int, int]) -> SimpleGraph:
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    next_vertex = spine_len
    for spine_vertex in sorted(attach):
        for _ in range(attach[spine_vertex]):
            edges.append((spine_vertex, next_vertex))
            next_vertex += 1
    return SimpleGraph.from_edges(next_vertex, edges)


def broom3_graph(m: int, n: int) -> SimpleGraph:
    """Path on three spine vertices with m pendant leaves at one end, n at the other."""
    if m < 0 or n < 0:
        raise GraphError("leaf counts must be nonnegative")
    return _spine_with_leaves(3, {0: m, 2: n})


def broom4_graph(m: int, n: int) -> SimpleGraph:
    """Path on four spine vertices with m pendant leaves at one end, n at the other."""
    if m < 0 or n < 0:
        raise GraphError("leaf counts must be nonnegative")
    return _spine_with_leaves(4, {0: m, 3: n})


def spider5_graph(m: int, n: int, p: int) -> SimpleGraph:
    """Path on five spine vertices with leaves at the ends (m, p) and the middle (n)."""
    if m < 0 or n < 0 or p < 0:
        raise GraphError("leaf counts must be nonnegative")
    return _spine_with_leaves(5, {0: m, 2: n, 4: p})


def spider6_graph(m: int, n: int, p: int) -> SimpleGraph:
    """Path on six spine vertices with leaves at the ends (m, p) and at the third
    spine vertex from the m end (n).  The family is closed under reversing the
    spine, so the third-versus-fourth attachment choice does not change the set
    of graphs it generates."""
    if m < 0 or n < 0 or p < 0:
        raise GraphError("leaf counts must be nonnegative")
    return _spine_with_leaves(6, {0: m, 2: n, 5: p})


@dataclass(frozen=True)
class FamilyTag:
    kind: str
    params: tuple[int, ...]

    def render(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(str(p) for p in self.params)})"

    def __str__(self) -> str:
        return self.render()


_FAMILY_BUILDERS = {
    "path": (1, path_graph),
    "cycle": (1, cycle_graph),
    "star": (1, star_graph),
    "triangle": (1, triangle_with_leaves),
    "broom3": (2, broom3_graph),
    "broom4": (2, broom4_graph),
    "spider5": (3, spider5_graph),
    "spider6": (3, spider6_graph),
}

# Recognition priority when a graph lies in several families at once.
FAMILY_PRIORITY = (
    "path", "cycle", "star", "triangle", "broom3", "broom4", "spider5", "spider6",
)


def make_family(tag: FamilyTag) -> SimpleGraph:
    if tag.kind not in _FAMILY_BUILDERS:
        raise GraphError(f"unknown family kind {tag.kind!r}")
    arity, builder = _FAMILY_BUILDERS[tag.kind]
    if len(tag.params) != arity:
        raise GraphError(f"family {tag.kind} takes {arity} parameters, got {len(tag.params)}")
    return builder(*tag.params)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def family_catalog(n: int) -> tuple[tuple[FamilyTag, SimpleGraph], ...]:
    """All family members with exactly n vertices, in recognition priority order."""
    out: list[tuple[FamilyTag, SimpleGraph]] = []
    for kind in FAMILY_PRIORITY:
        if kind == "path" and n >= 1:
            out.append((FamilyTag("path", (n,)), path_graph(n)))
        elif kind == "cycle" and n >= 3:
            out.append((FamilyTag("cycle", (n,)), cycle_graph(n)))
        elif kind == "star" and n >= 1:
            out.append((FamilyTag("star", (n - 1,)), star_graph(n - 1)))
        elif kind == "triangle" and n >= 3:
            out.append((FamilyTag("triangle", (n - 3,)), triangle_with_leaves(n - 3)))
        elif kind in ("broom3", "broom4", "spider5", "spider6"):
            spine = int(kind[-1]) if kind.startswith("broom") else int(kind[-1])
            free = n - spine
            if free < 0:
                continue
            arity = _FAMILY_BUILDERS[kind][0]
            for params in _compositions(free, arity):
                out.append((FamilyTag(kind, params), make_family(FamilyTag(kind, params))))
    return tuple(out)


def recognize_family(graph: SimpleGraph) -> FamilyTag | None:
    """Most specific family tag whose member is isomorphic to the graph, or None."""
    form = canonical_form(graph)
    for tag, member in family_catalog(graph.n):
        if canonical_form(member) == form:
            return tag
    return None


def induced_subgraph(
    graph: SimpleGraph, vertices: Iterable[int]
) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Induced subgraph on the given vertex set, relabelled to 0..k-1.

    Returns the subgraph together with the relabelling map: entry i is the
    original vertex that became vertex i.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        if not 0 <= v < graph.n:
            raise GraphError(f"vertex {v} out of range")
    position = {v: i for i, v in enumerate(chosen)}
    edges = [
        (position[u], position[v])
        for u, v in graph.edges
        if u in position and v in position
    ]
    return SimpleGraph.from_edges(len(chosen), edges), tuple(chosen)


def _connected_within(adjacency: Sequence[int], subset_mask: int) -> bool:
    if subset_mask == 0:
        return False
    start = subset_mask & -subset_mask
    visited = start
    frontier = start
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= adjacency[v]
        frontier = reach & subset_mask & ~visited
        visited |= frontier
    return visited == subset_mask


def is_connected(graph: SimpleGraph) -> bool:
    if graph.n == 0:
        return False
    return _connected_within(graph.adjacency, (1 << graph.n) - 1)


def connected_induced_subsets(graph: SimpleGraph, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-element vertex sets whose induced subgraph is connected, sorted."""
    if not 1 <= k <= graph.n:
        raise GraphError(f"subset size {k} out of range 1..{graph.n}")
    adjacency = graph.adjacency
    found = []
    for combo in itertools.combinations(range(graph.n), k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if _connected_within(adjacency, mask):
            found.append(combo)
    return tuple(found)


def path_vertex_sets(graph: SimpleGraph, t: int) -> tuple[tuple[int, ...], ...]:
    """Distinct vertex sets realizable as a simple path on t vertices, sorted.

    Two traversal directions (or any two paths through the same vertices) give
    the same set exactly once.
    """
    if t < 2:
        raise GraphError("paths of interest have at least two vertices")
    if t > graph.n:
        return ()
    adjacency = graph.adjacency
    found: set[tuple[int, ...]] = set()

    def extend(last: int, used_mask: int, depth: int, first: int) -> None:
        if depth == t:
            if first < last:
                found.add(tuple(_bits(used_mask)))
            return
        for nxt in _bits(adjacency[last] & ~used_mask):
            extend(nxt, used_mask | (1 << nxt), depth + 1, first)

    for start in range(graph.n):
        extend(start, 1 << start, 1, start)
    return tuple(sorted(found))


def diameter(graph: SimpleGraph) -> int:
    if not is_connected(graph):
        raise GraphError("diameter needs a connected graph")
    best = 0
    for source in range(graph.n):
        dist = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                for u in _bits(graph.adjacency[v]):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best


def removable_vertices(graph: SimpleGraph) -> tuple[int, ...]:
    """Vertices whose removal keeps the graph connected; empty for a single vertex."""
    if not is_connected(graph):
        raise GraphError("removable_vertices needs a connected graph")
    if graph.n == 1:
        return ()
    full = (1 << graph.n) - 1
    out = []
    for v in range(graph.n):
        rest = full & ~(1 << v)
        if _connected_within(graph.adjacency, rest):
            out.append(v)
    return tuple(out)


# ---------------------------------------------------------------------------
# canonical forms


def _refine_colors(adjacency: Sequence[int], colors: list[int]) -> list[int]:
    n = len(adjacency)
    num = len(set(colors))
    while True:
        signatures = []
        for v in range(n):
            neighbor_colors = sorted(colors[u] for u in _bits(adjacency[v]))
            signatures.append((colors[v], tuple(neighbor_colors)))
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [ranking[sig] for sig in signatures]
        if len(ranking) == num:
            return new_colors
        colors, num = new_colors, len(ranking)


def _order_bits(adjacency: Sequence[int], order: Sequence[int]) -> bytes:
    bits = bytearray()
    for j in range(1, len(order)):
        row = adjacency[order[j]]
        for i in range(j):
            bits.append((row >> order[i]) & 1)
    return bytes(bits)


def _color_classes(colors: Sequence[int]) -> list[list[int]]:
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def _min_bits_over_classes(adjacency: Sequence[int], classes: list[list[int]]) -> bytes:
    best: bytes | None = None
    for combo in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = tuple(itertools.chain.from_iterable(combo))
        bits = _order_bits(adjacency, order)
        if best is None or bits < best:
            best = bits
    assert best is not None
    return best


def _canonical_bits(adjacency: Sequence[int], colors: list[int]) -> bytes:
    colors = _refine_colors(adjacency, colors)
    classes = _color_classes(colors)
    total = 1
    for c in classes:
        total *= math.factorial(len(c))
        if total > _ORDERING_ENUM_LIMIT:
            break
    if total <= _ORDERING_ENUM_LIMIT:
        return _min_bits_over_classes(adjacency, classes)
    target = next(c for c in classes if len(c) > 1)
    best: bytes | None = None
    for v in target:
        branched = [colors[u] * 2 + (0 if u == v else 1) for u in range(len(colors))]
        bits = _canonical_bits(adjacency, branched)
        if best is None or bits < best:
            best = bits
    assert best is not None
    return best


def _pack_graph6(n: int, bits: bytes) -> bytes:
    if n > 62:
        raise GraphError("graph6 support here stops at 62 vertices")
    out = bytearray([n + 63])
    for start in range(0, len(bits), 6):
        chunk = bits[start:start + 6]
        value = 0
        for pos in range(6):
            value <<= 1
            if pos < len(chunk) and chunk[pos]:
                value |= 1
        out.append(value + 63)
    return bytes(out)


@lru_cache(maxsize=None)
def _canonical_form_cached(graph: SimpleGraph) -> bytes:
    if graph.n == 0:
        raise GraphError("canonical form needs at least one vertex")
    colors = _refine_colors(graph.adjacency, list(graph.degrees))
    bits = _canonical_bits(graph.adjacency, colors)
    return _pack_graph6(graph.n, bits)


def canonical_form(graph: SimpleGraph, max_vertices: int = DEFAULT_CANONICAL_CAP) -> bytes:
    """Canonical graph6 bytes; equal exactly for isomorphic graphs."""
    if graph.n > max_vertices:
        raise GraphError(f"canonical form capped at {max_vertices} vertices")
    return _canonical_form_cached(graph)


def canonical_form_bruteforce(graph: SimpleGraph, max_vertices: int = 8) -> bytes:
    """All-permutations canonical form, exponential; kept as an oracle."""
    if graph.n > max_vertices:
        raise GraphError(f"brute-force form capped at {max_vertices} vertices")
    best = min(
        _order_bits(graph.adjacency, order)
        for order in itertools.permutations(range(graph.n))
    )
    return _pack_graph6(graph.n, best)


def canonical_graph(graph: SimpleGraph, max_vertices: int = DEFAULT_CANONICAL_CAP) -> SimpleGraph:
    return parse_graph6(canonical_form(graph, max_vertices).decode("ascii"))


def are_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    return canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# exhaustive enumeration


_CONNECTED_CACHE: dict[int, tuple[SimpleGraph, ...]] = {}


def enumerate_connected_graphs(
    n: int, max_vertices: int = DEFAULT_ENUMERATION_CAP
) -> tuple[SimpleGraph, ...]:
    """One canonically labelled representative per connected isomorphism class.

    Generates all 2^C(n,2) labelled graphs, keeps the connected ones whose
    identity labelling already sorts degrees (every class has one), and
    deduplicates by canonical form.
    """
    if not 1 <= n <= max_vertices:
        raise GraphError(f"enumeration supports 1..{max_vertices} vertices")
    if n in _CONNECTED_CACHE:
        return _CONNECTED_CACHE[n]
    if n == 1:
        reps = (SimpleGraph(1, frozenset()),)
        _CONNECTED_CACHE[n] = reps
        return reps
    pairs = list(itertools.combinations(range(n), 2))
    full = (1 << n) - 1
    seen: dict[bytes, None] = {}
    for mask in range(1 << len(pairs)):
        adjacency = [0] * n
        degrees = [0] * n
        remaining = mask
        while remaining:
            low = remaining & -remaining
            u, v = pairs[low.bit_length() - 1]
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
            degrees[u] += 1
            degrees[v] += 1
            remaining ^= low
        if any(degrees[i] < degrees[i + 1] for i in range(n - 1)):
            continue
        if not _connected_within(adjacency, full):
            continue
        graph = SimpleGraph.from_edges(n, (pairs[i] for i in _bits(mask)))
        seen.setdefault(canonical_form(graph), None)
    reps = tuple(parse_graph6(form.decode("ascii")) for form in sorted(seen))
    _CONNECTED_CACHE[n] = reps
    return reps


_TREE_CACHE: dict[int, tuple[SimpleGraph, ...]] = {}


def enumerate_trees(n: int, max_vertices: int = 10) -> tuple[SimpleGraph, ...]:
    """One representative per tree isomorphism class, by leaf extension."""
    if not 1 <= n <= max_vertices:
        raise GraphError(f"tree enumeration supports 1..{max_vertices} vertices")
    if n in _TREE_CACHE:
        return _TREE_CACHE[n]
    if n == 1:
        reps = (SimpleGraph(1, frozenset()),)
    else:
        seen: dict[bytes, None] = {}
        for smaller in enumerate_trees(n - 1, max_vertices):
            for attach in range(smaller.n):
                grown = SimpleGraph(
                    n, smaller.edges | {(attach, n - 1)}
                )
                seen.setdefault(canonical_form(grown), None)
        reps = tuple(parse_graph6(form.decode("ascii")) for form in sorted(seen))
    _TREE_CACHE[n] = reps
    return reps


# ---------------------------------------------------------------------------
# containment


def _embeds(
    host: SimpleGraph, pattern: SimpleGraph, induced: bool
) -> bool:
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return False
    order: list[int] = []
    placed = set()
    # Grow the pattern order by connectivity to what is already placed.
    while len(order) < pattern.n:
        best_v, best_key = -1, (-1, -1)
        for v in range(pattern.n):
            if v in placed:
                continue
            anchored = sum(1 for u in order if pattern.has_edge(u, v))
            key = (anchored, pattern.degrees[v])
            if key > best_key:
                best_v, best_key = v, key
        order.append(best_v)
        placed.add(best_v)
    host_deg = host.degrees
    pat_deg = pattern.degrees
    image = [-1] * pattern.n

    def backtrack(k: int, used_mask: int) -> bool:
        if k == pattern.n:
            return True
        v = order[k]
        for g in range(host.n):
            bit = 1 << g
            if used_mask & bit or host_deg[g] < pat_deg[v]:
                continue
            ok = True
            for u in order[:k]:
                pattern_edge = pattern.has_edge(u, v)
                host_edge = host.has_edge(image[u], g)
                if induced:
                    if pattern_edge != host_edge:
                        ok = False
                        break
                elif pattern_edge and not host_edge:
                    ok = False
                    break
            if ok:
                image[v] = g
                if backtrack(k + 1, used_mask | bit):
                    return True
        return False

    return backtrack(0, 0)


def contains_subgraph(
    host: SimpleGraph, pattern: SimpleGraph, max_vertices: int = DEFAULT_EMBEDDING_CAP
) -> bool:
    """True if some (not necessarily induced) subgraph of host is isomorphic to pattern."""
    if host.n > max_vertices:
        raise GraphError(f"containment search capped at {max_vertices} vertices")
    if pattern.n > host.n:
        return False
    return _embeds(host, pattern, induced=False)


def contains_induced(
    host: SimpleGraph, pattern: SimpleGraph, max_vertices: int = DEFAULT_EMBEDDING_CAP
) -> bool:
    """True if some induced subgraph of host is isomorphic to pattern."""
    if host.n > max_vertices:
        raise GraphError(f"containment search capped at {max_vertices} vertices")
    if pattern.n > host.n:
        return False
    return _embeds(host, pattern, induced=True)


# ---------------------------------------------------------------------------
# input / output


def to_graph6(graph: SimpleGraph) -> str:
    bits = _order_bits(graph.adjacency, range(graph.n))
    return _pack_graph6(graph.n, bits).decode("ascii")


def parse_graph6(text: str) -> SimpleGraph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise GraphError("empty graph6 string")
    values = [ord(ch) - 63 for ch in data]
    if any(v < 0 or v > 63 for v in values):
        raise GraphError(f"invalid graph6 characters in {text!r}")
    n = values[0]
    if n > 62:
        raise GraphError("graph6 support here stops at 62 vertices")
    need = (n * (n - 1) // 2 + 5) // 6
    body = values[1:]
    if len(body) != need:
        raise GraphError(
            f"graph6 body length {len(body)} does not match {need} groups for n={n}"
        )
    bits = []
    for value in body:
        for pos in range(5, -1, -1):
            bits.append((value >> pos) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SimpleGraph.from_edges(n, edges)


def to_adjacency_text(graph: SimpleGraph) -> str:
    parts = ", ".join(f"{u}-{v}" for u, v in graph.sorted_edges())
    return f"n={graph.n}; edges: {parts}" if parts else f"n={graph.n}; edges:"


def parse_adjacency_text(text: str) -> SimpleGraph:
    """Parse the one-line 'n=5; edges: 0-1, 1-2' format; comments start with '#'."""
    graph_line = None
    graph_line_no = 0
    for line_no, raw in enumerate(text.splitlines() or [text], start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if graph_line is not None:
            raise GraphError(f"line {line_no}: expected a single graph line")
        graph_line, graph_line_no = line, line_no
    if graph_line is None:
        raise GraphError("line 1: no graph line found")
    try:
        head, _, tail = graph_line.partition(";")
        key, _, value = head.partition("=")
        if key.strip() != "n":
            raise GraphError("expected 'n=<count>' before ';'")
        n = int(value)
        tail = tail.strip()
        if not tail.startswith("edges:"):
            raise GraphError("expected 'edges:' after ';'")
        body = tail[len("edges:"):].strip()
        edges = []
        if body:
            for chunk in body.split(","):
                u_text, _, v_text = chunk.strip().partition("-")
                if not v_text:
                    raise GraphError(f"bad edge token {chunk.strip()!r}")
                edges.append((int(u_text), int(v_text)))
        return SimpleGraph.from_edges(n, edges)
    except (ValueError, GraphError) as exc:
        detail = exc.args[0] if exc.args else str(exc)
        raise GraphError(f"line {graph_line_no}: {detail}") from None


def to_json_dict(graph: SimpleGraph) -> dict:
    return {"n": graph.n, "edges": [list(e) for e in graph.sorted_edges()]}


def graph_from_json_dict(data: dict) -> SimpleGraph:
    return SimpleGraph.from_edges(int(data["n"]), data["edges"])
