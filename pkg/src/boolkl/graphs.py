"""Coxeter graphs: the group presentation as a labeled graph.

Vertices are the generators 1..n.  An edge {i, j} carries the order
m(s_i, s_j) >= 3 of the product s_i s_j; absent edges mean m = 2
(commuting generators).  m = infinity is stored as the constant INFINITY.

Two shapes are supported: trees (edge count n-1, connected) and cycles
(every vertex of degree 2, connected) for the affine type A groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

INFINITY = 0  # sentinel label for m(s, s') = infinity; compares like "no braid move"


class GraphError(ValueError):
    """Base class for graph construction and parsing failures."""


class MalformedLine(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class LabelBelow3(GraphError):
    pass


class DisconnectedGraph(GraphError):
    pass


class NotTreeOrCycle(GraphError):
    pass


@dataclass(frozen=True)
class CoxeterGraph:
    """A Coxeter graph on generators 1..n.

    edges maps the ordered pair (min, max) to the label m >= 3 (INFINITY
    for infinite order).  mode is "tree" or "cycle"; root is the rooted
    vertex for boolean expressions (for cycles it names the center).
    """

    n: int
    edges: dict[tuple[int, int], int]
    root: int | None = None
    mode: str = "tree"
    _adj: dict[int, tuple[int, ...]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("need at least one generator")
        adj: dict[int, list[int]] = {i: [] for i in range(1, self.n + 1)}
        for (i, j), m in self.edges.items():
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge ({i},{j}) out of range or unordered")
            if m != INFINITY and m < 3:
                raise LabelBelow3(f"edge ({i},{j}) labeled {m} < 3")
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "_adj", {v: tuple(sorted(ns)) for v, ns in adj.items()})
        if self.root is not None and not (1 <= self.root <= self.n):
            raise GraphError(f"root {self.root} out of range")
        self._check_shape()

    def _check_shape(self):
        if self.mode not in ("tree", "cycle"):
            raise GraphError(f"unknown mode {self.mode!r}")
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n:
            raise DisconnectedGraph("graph is not connected")
        if self.mode == "tree":
            if len(self.edges) != self.n - 1:
                raise NotTreeOrCycle(f"tree needs {self.n - 1} edges, got {len(self.edges)}")
        else:
            if len(self.edges) != self.n or any(len(self._adj[v]) != 2 for v in self._adj):
                raise NotTreeOrCycle("cycle needs every vertex of degree 2")

    # -- structure queries ------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def m(self, i: int, j: int) -> int:
        """Coxeter order m(s_i, s_j): 1 on the diagonal, 2 off-edge."""
        if i == j:
            return 1
        key = (i, j) if i < j else (j, i)
        return self.edges.get(key, 2)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def with_root(self, root: int) -> "CoxeterGraph":
        return CoxeterGraph(self.n, dict(self.edges), root, self.mode)

    def parent_map(self, root: int) -> dict[int, int | None]:
        """Parent of every vertex in the tree rooted at root.

        For cycles the "parents" follow the arc that ends at the center
        with the cut placed after it: the walk root -> root+... covers the
        cycle, and the vertex adjacent to root on the far side is deepest.
        """
        if self.mode == "cycle":
            order = self.cycle_order(root)
            par: dict[int, int | None] = {root: None}
            for a, b in zip(order, order[1:]):
                par[a] = b
            par[order[-1]] = root
            return par
        par = {root: None}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if w not in par:
                    par[w] = v
                    stack.append(w)
        return par

    def cycle_order(self, center: int) -> list[int]:
        """Non-center vertices in arc order, deepest (cut neighbor) first.

        Walking the returned list and then the center traverses the cycle.
        """
        if self.mode != "cycle":
            raise GraphError("cycle_order needs a cycle graph")
        # With the standard affine labeling (vertex k is s_{k-1}) the deepest
        # column next to center s_i is s_{i+1}, i.e. the cyclic successor.
        succ = center % self.n + 1
        first = succ if succ in self._adj[center] else max(self._adj[center])
        order = [first]
        prev = center
        cur = first
        while True:
            nxt = [w for w in self._adj[cur] if w != prev]
            prev, cur = cur, nxt[0]
            if cur == center:
                break
            order.append(cur)
        return order

    def is_path(self) -> bool:
        return self.mode == "tree" and all(self.degree(v) <= 2 for v in self._adj)

    def branch_vertices(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.degree(v) >= 3]

    def is_simply_laced(self) -> bool:
        return all(m == 3 for m in self.edges.values())


def parse_graph(text: str, mode_required: str | None = None) -> CoxeterGraph:
    """Parse the graph file format.

    One directive per line, '#' starts a comment:
        n <count>        generator count (required, first)
        edge <i> <j> <m> edge labeled m >= 3, or 'inf'
        root <i>         optional root / cycle center
        mode tree|cycle  optional; default auto-detect
    """
    n = None
    edges: dict[tuple[int, int], int] = {}
    root = None
    mode = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "n":
                if n is not None:
                    raise MalformedLine("duplicate 'n' directive")
                n = int(parts[1])
            elif parts[0] == "edge":
                if n is None:
                    raise MalformedLine("'n' must come first")
                i, j = int(parts[1]), int(parts[2])
                m = INFINITY if parts[3] == "inf" else int(parts[3])
                if i == j:
                    raise MalformedLine("self-loop")
                if not (1 <= i <= n and 1 <= j <= n):
                    raise MalformedLine("vertex out of range")
                if m != INFINITY and m < 3:
                    raise LabelBelow3(f"label {m} below 3")
                key = (min(i, j), max(i, j))
                if key in edges:
                    raise DuplicateEdge(f"edge {key} repeated")
                edges[key] = m
            elif parts[0] == "root":
                root = int(parts[1])
            elif parts[0] == "mode":
                if parts[1] not in ("tree", "cycle"):
                    raise MalformedLine(f"unknown mode {parts[1]!r}")
                mode = parts[1]
            else:
                raise MalformedLine(f"unknown directive {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise type(exc)(f"line {lineno}: {exc}") from None
            raise MalformedLine(f"line {lineno}: {raw.strip()!r}") from None
    if n is None:
        raise MalformedLine("missing 'n' directive")
    if mode is None:
        # auto-detect: tree if the edge count says so, else cycle
        mode = "tree" if len(edges) == n - 1 else "cycle"
    if mode_required is not None and mode != mode_required:
        raise NotTreeOrCycle(f"graph is {mode}, {mode_required} required")
    return CoxeterGraph(n, edges, root, mode)


# ready-made families, used all over the tests and the verify sweeps

def path_graph(n: int, root: int | None = None, labels: dict[int, int] | None = None) -> CoxeterGraph:
    """Path 1-2-...-n; labels maps the left vertex i of edge (i, i+1) to m."""
    edges = {(i, i + 1): (labels or {}).get(i, 3) for i in range(1, n)}
    return CoxeterGraph(n, edges, root if root is not None else n, "tree")


def type_a(n: int) -> CoxeterGraph:
    """A_n: path on n vertices, all labels 3, rooted at n."""
    return path_graph(n)


def type_b(n: int) -> CoxeterGraph:
    """B_n with s_0 mapped to vertex 1: edge (1,2) labeled 4, rest 3."""
    return path_graph(n, root=n, labels={1: 4})


def type_d(n: int) -> CoxeterGraph:
    """D_n with s_0, s_1 as the fork vertices 1, 2 hanging off vertex 3."""
    if n < 3:
        raise GraphError("D_n needs n >= 3")
    edges = {(1, 3): 3, (2, 3): 3}
    for i in range(3, n):
        edges[(i, i + 1)] = 3
    return CoxeterGraph(n, edges, n, "tree")


def affine_a(n: int) -> CoxeterGraph:
    """Affine A_n: a cycle on n+1 vertices (vertex k is the paper's s_{k-1})."""
    if n < 2:
        raise GraphError("affine A_n needs n >= 2")
    edges = {(i, i + 1): 3 for i in range(1, n + 1)}
    edges[(1, n + 1)] = 3
    return CoxeterGraph(n + 1, edges, n + 1, "cycle")
