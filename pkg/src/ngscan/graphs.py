"""Simple undirected graphs as per-vertex bitsets.

Vertices are 0..n-1 and every neighbourhood is a Python int used as a
bitset, so complementation, boundary counts and subset volumes are plain
mask arithmetic.  Vertex subsets are passed around as int bitmasks.
Graphs are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from itertools import combinations

MIN_VERTICES = 2
MAX_VERTICES = 62  # keeps graph6 single-byte headers and masks in one word
CANONICAL_LIMIT = 10


class GraphError(ValueError):
    """Invalid graph construction or graph operation input."""


class Graph:
    """Simple undirected graph on n vertices, adjacency as bitsets."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj):
        if not MIN_VERTICES <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [{MIN_VERTICES}, {MAX_VERTICES}]")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows, expected {n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} has bits beyond vertex {n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(n):
            for u in range(v + 1, n):
                if (adj[v] >> u & 1) != (adj[u] >> v & 1):
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"bad edge ({u},{v}) for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, adj)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.adj[u] >> v & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def permuted(self, perm) -> "Graph":
        """Relabel: vertex v of self becomes perm[v] of the result."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            while row:
                u = (row & -row).bit_length() - 1
                new |= 1 << perm[u]
                row &= row - 1
            adj[perm[v]] = new
        return Graph(self.n, adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def check_subset(g: Graph, x: int, proper: bool = True) -> int:
    """Validate a vertex-set bitmask against g; returns x."""
    full = g.vertex_mask()
    if x & ~full:
        raise GraphError(f"subset {x:#x} has bits beyond vertex {g.n - 1}")
    if proper and (x == 0 or x == full):
        raise GraphError("subset must be nonempty and proper")
    return x


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph(g.n, tuple(~row & full & ~(1 << v) for v, row in enumerate(g.adj)))


def boundary_size(g: Graph, x: int) -> int:
    """Number of edges with exactly one endpoint in x."""
    check_subset(g, x)
    inv = ~x
    count = 0
    rest = x
    while rest:
        v = (rest & -rest).bit_length() - 1
        count += (g.adj[v] & inv).bit_count()
        rest &= rest - 1
    return count


def volume(g: Graph, x: int) -> int:
    """Sum of degrees over the vertices in x."""
    check_subset(g, x, proper=False)
    total = 0
    while x:
        v = (x & -x).bit_length() - 1
        total += g.adj[v].bit_count()
        x &= x - 1
    return total


# ---------------------------------------------------------------------------
# graph6 codec
#
# Header byte n+63 (n <= 62), then ceil(n(n-1)/2 / 6) payload bytes of
# 63 + 6-bit groups.  Bit order is the upper triangle column-major:
# x(0,1), x(0,2), x(1,2), x(0,3), ...; the first bit of the stream sits in
# the high bit (value 32) of the first group; trailing pad bits are zero.
# The same slot order is used for labeled edge masks throughout the package,
# with slot s stored at mask bit s.
# ---------------------------------------------------------------------------

class Graph6Error(ValueError):
    """Malformed graph6 input."""


def edge_slots(n: int) -> int:
    return n * (n - 1) // 2


def slot_pairs(n: int) -> list[tuple[int, int]]:
    """Edge-slot order: pairs (i, j), i < j, sorted by (j, i)."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    s = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> s & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            s += 1
    return Graph(n, adj)


def mask_from_graph(g: Graph) -> int:
    mask = 0
    s = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            if row >> i & 1:
                mask |= 1 << s
            s += 1
    return mask


def encode_graph6(g: Graph) -> bytes:
    n = g.n
    mask = mask_from_graph(g)
    slots = edge_slots(n)
    out = [n + 63]
    for byte_idx in range((slots + 5) // 6):
        group = 0
        for k in range(6):
            s = 6 * byte_idx + k
            if s < slots and mask >> s & 1:
                group |= 1 << (5 - k)
        out.append(63 + group)
    return bytes(out)


def parse_graph6(data) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if not data:
        raise Graph6Error("empty graph6 record")
    n = data[0] - 63
    if not 0 <= n <= 62:
        raise Graph6Error(f"header byte {data[0]} outside graph6 single-byte range")
    if not MIN_VERTICES <= n <= MAX_VERTICES:
        raise Graph6Error(f"order {n} outside supported range [{MIN_VERTICES}, {MAX_VERTICES}]")
    slots = edge_slots(n)
    nbytes = (slots + 5) // 6
    if len(data) != 1 + nbytes:
        raise Graph6Error(f"expected {1 + nbytes} bytes for n={n}, got {len(data)}")
    mask = 0
    for byte_idx in range(nbytes):
        b = data[1 + byte_idx]
        if not 63 <= b <= 126:
            raise Graph6Error(f"payload byte {b} outside [63, 126]")
        group = b - 63
        for k in range(6):
            s = 6 * byte_idx + k
            if group >> (5 - k) & 1:
                if s >= slots:
                    raise Graph6Error("nonzero padding bits")
                mask |= 1 << s
    return graph_from_mask(n, mask)


# ---------------------------------------------------------------------------
# Canonical form: exact lexicographic minimum of the upper-triangle bit
# string over all vertex permutations, found by branch-and-bound over
# permutation prefixes.  Twin vertices (identical neighbourhoods modulo each
# other) generate automorphisms, so only one member per twin class is tried
# at each level; that keeps clique-heavy witness graphs fast without giving
# up exactness.  Intended for small witness lists only.
# ---------------------------------------------------------------------------

def _twin_classes(g: Graph) -> list[int]:
    """class_id[v]: vertices u,v share an id iff swapping them is an automorphism."""
    n = g.n
    ids = list(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if ids[v] != v:
                continue
            clear = ~((1 << u) | (1 << v))
            if (g.adj[u] & clear) == (g.adj[v] & clear):
                ids[v] = ids[u]
    return ids


def canonical_form(g: Graph, limit: int = CANONICAL_LIMIT) -> bytes:
    """Isomorphism-invariant key: minimal upper-triangle bits as b"01..."."""
    n = g.n
    if n > limit:
        raise GraphError(f"canonical_form limited to n <= {limit} (got {n})")
    adj = g.adj
    twin = _twin_classes(g)
    slots = edge_slots(n)
    best = (1 << slots) - 1  # all-ones string is the worst case

    # chosen[i] = original vertex placed at position i; prefix packs the
    # C(depth,2) decided bits with the earliest slot in the highest bit.
    def extend(prefix: int, depth: int, chosen: list[int], remaining: int) -> None:
        nonlocal best
        if depth == n:
            if prefix < best:
                best = prefix
            return
        options = []
        seen_twins = set()
        rest = remaining
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if twin[v] in seen_twins:
                continue
            seen_twins.add(twin[v])
            bits = 0
            row = adj[v]
            for u in chosen:
                bits = bits << 1 | (row >> u & 1)
            options.append((bits, v))
        options.sort()
        shift = depth
        done = (depth + 1) * depth // 2
        for bits, v in options:
            new_prefix = prefix << shift | bits
            # compare against best truncated to the same number of bits
            if new_prefix > best >> (slots - done):
                continue
            chosen.append(v)
            extend(new_prefix, depth + 1, chosen, remaining & ~(1 << v))
            chosen.pop()
        return

    extend(0, 0, [], g.vertex_mask())
    return format(best, f"0{slots}b").encode("ascii") if slots else b""


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(n, adj)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    n = g1.n + g2.n
    left = (1 << g1.n) - 1
    right = ((1 << n) - 1) ^ left
    adj = [row | right for row in g1.adj]
    adj += [(row << g1.n) | left for row in g2.adj]
    return Graph(n, adj)


def join_vertex_two_cliques(n: int) -> Graph:
    """Apex vertex n-1 joined to two disjoint cliques of size (n-1)/2 each."""
    if n < 3 or n % 2 == 0:
        raise GraphError(f"join_vertex_two_cliques needs odd n >= 3, got {n}")
    half = (n - 1) // 2
    edges = [(n - 1, v) for v in range(n - 1)]
    edges += list(combinations(range(half), 2))
    edges += list(combinations(range(half, n - 1), 2))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by lowest contained vertex."""
    out = []
    rest = g.vertex_mask()
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            scan = frontier
            while scan:
                u = (scan & -scan).bit_length() - 1
                grow |= g.adj[u]
                scan &= scan - 1
            frontier = grow & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    color = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            row = g.adj[v]
            while row:
                u = (row & -row).bit_length() - 1
                row &= row - 1
                if u not in color:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_k_regular(g: Graph, k: int) -> bool:
    return all(row.bit_count() == k for row in g.adj)


def dominating_vertices(g: Graph) -> int:
    """Bitmask of the vertices adjacent to all others."""
    mask = 0
    for v, row in enumerate(g.adj):
        if row.bit_count() == g.n - 1:
            mask |= 1 << v
    return mask


def components_within(g: Graph, x: int) -> list[int]:
    """Components of the subgraph induced on bitmask x, kept in g's labeling."""
    out = []
    rest = x
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            scan = frontier
            while scan:
                u = (scan & -scan).bit_length() - 1
                grow |= g.adj[u] & x
                scan &= scan - 1
            frontier = grow & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def is_clique(g: Graph, x: int) -> bool:
    rest = x
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if (g.adj[v] & x) != x & ~(1 << v):
            return False
    return True
