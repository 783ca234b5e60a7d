"""Triangle walk complexes: codec, goodness test, dual-graph diameter.

A pure 2-complex is handled as an ordered sequence of triangles (vertex
triples).  A sequence is *good* when consecutive triangles share exactly two
vertices and non-consecutive triangles share at most one; the dual graph of a
good linear sequence is a path, so its diameter equals the number of
triangles minus one.  Good sequences travel through the complete graph K_n
reusing edges as rarely as possible, which is what makes them the right
search space for maximising dual diameter.

The (LABELS, LAYOUT) codec stores a good sequence as one vertex label per
step plus one bit per step from the third triangle on.  The bit says which of
the two legal attachment edges of the previous triangle the new triangle is
glued to.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

Edge = tuple[int, int]
Triangle = frozenset[int]

__all__ = [
    "Edge",
    "Triangle",
    "TriangleSeq",
    "LabelsLayout",
    "Certificate",
    "edge",
    "all_edges",
    "expand_pair",
    "encode_triples",
    "covered_edges",
    "edge_multiplicities",
    "is_good",
    "dual_diameter",
    "hs_max_diameter",
    "certify",
]


def edge(u: int, v: int) -> Edge:
    """Return the canonical (sorted) form of the edge {u, v}."""
    if u == v:
        raise ValueError(f"degenerate edge ({u}, {v})")
    return (u, v) if u < v else (v, u)


def all_edges(n: int) -> set[Edge]:
    """All edges of the complete graph on vertices 0..n-1."""
    return {(u, v) for u in range(n) for v in range(u + 1, n)}


@dataclass
class TriangleSeq:
    """An ordered triangle sequence, optionally closed into a ring.

    ``circular`` means the last triangle is also adjacent to the first, i.e.
    the dual graph of a good sequence is a cycle rather than a path.  The
    class does not enforce goodness; use :func:`is_good`.
    """

    triangles: list[Triangle]
    circular: bool = False

    def __post_init__(self) -> None:
        if not self.triangles:
            raise ValueError("empty triangle sequence")
        for i, tri in enumerate(self.triangles):
            if len(tri) != 3:
                raise ValueError(f"triangle at index {i} has {len(tri)} vertices")

    def __len__(self) -> int:
        return len(self.triangles)


@dataclass
class LabelsLayout:
    """Codec form of a triangle sequence.

    ``labels`` lists one vertex per step (so ``len(labels) == t + 3`` for
    ``t + 1`` triangles) and ``layout`` holds the glue bits ``y_3 .. y_{t+2}``.
    Vertex ids live in ``range(n)``.
    """

    n: int
    labels: tuple[int, ...]
    layout: tuple[int, ...]

    def __post_init__(self) -> None:
        self.labels = tuple(self.labels)
        self.layout = tuple(self.layout)
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if len(self.labels) < 3:
            raise ValueError("need at least three labels")
        if len(self.labels) != len(self.layout) + 3:
            raise ValueError(
                f"label/layout length mismatch: {len(self.labels)} labels, "
                f"{len(self.layout)} bits (want labels = bits + 3)"
            )
        for x in self.labels:
            if not 0 <= x < self.n:
                raise ValueError(f"label {x} out of range for n={self.n}")
        for y in self.layout:
            if y not in (0, 1):
                raise ValueError(f"layout bit {y!r} is not 0 or 1")


@dataclass
class Certificate:
    """Verification summary for a triangle sequence on n vertices."""

    good: bool
    circular: bool
    covered_edges: int
    diameter: int | None
    optimum: int
    matches_optimum: bool
    uncovered_edges: list[Edge] = field(default_factory=list)


# ---------------------------------------------------------------------------
# codec
# ---------------------------------------------------------------------------

def expand_pair(pair: LabelsLayout) -> TriangleSeq:
    """Decode a (LABELS, LAYOUT) pair into its triangle sequence.

    The first triangle is ``{x_0, x_1, x_2}``.  Walking with state
    ``(carried, u, v)`` (initially ``(x_0, x_1, x_2)``), a step with label w
    and bit y appends ``{u, v, w}`` and moves to ``(u, v, w)`` when y = 0, or
    appends ``{carried, v, w}`` and moves to ``(carried, v, w)`` when y = 1.

    The result is flagged circular when the label sequence closes on itself
    (``x_N == x_0`` and ``x_{N+1} == x_1`` for N + 1 triangles) and the last
    triangle shares exactly two vertices with the first.

    Raises:
        ValueError: if any step would create a triangle with a repeated
            vertex (the offending step index is reported).
    """
    xs = pair.labels
    tri0 = frozenset(xs[:3])
    if len(tri0) != 3:
        raise ValueError("degenerate triangle at index 0")
    triangles = [tri0]
    carried, u, v = xs[0], xs[1], xs[2]
    for i, y in enumerate(pair.layout, start=3):
        w = xs[i]
        first = u if y == 0 else carried
        if w == first or w == v or first == v:
            raise ValueError(f"degenerate triangle at index {i - 2}")
        triangles.append(frozenset((first, v, w)))
        carried, u, v = first, v, w

    circular = (
        len(triangles) >= 3
        and xs[-2] == xs[0]
        and xs[-1] == xs[1]
        and len(triangles[-1] & triangles[0]) == 2
    )
    return TriangleSeq(triangles, circular=circular)


def encode_triples(seq: TriangleSeq, n: int | None = None) -> LabelsLayout:
    """Encode a triangle sequence back into (LABELS, LAYOUT) form.

    For linear sequences the starting end is chosen deterministically: the
    end whose triangle is lexicographically smaller (as a sorted triple)
    becomes the first.  The two shared vertices of the first adjacency are
    emitted in ascending order.  Circular sequences are encoded from
    ``triangles[0]`` in the given direction.

    ``expand_pair(encode_triples(seq))`` reproduces ``seq`` up to that choice
    of starting end.

    Raises:
        ValueError: if some consecutive pair does not share exactly two
            vertices, or a shared pair is not one of the two attachment
            edges the codec can express.
    """
    tris = seq.triangles
    if n is None:
        n = max(max(t) for t in tris) + 1

    if len(tris) == 1:
        return LabelsLayout(n, sorted(tris[0]), [])

    if not seq.circular and sorted(tris[-1]) < sorted(tris[0]):
        tris = list(reversed(tris))

    shared01 = tris[0] & tris[1]
    if len(shared01) != 2:
        raise ValueError("cannot encode: triangles 0 and 1 do not share 2 vertices")
    (x0,) = tris[0] - shared01
    if seq.circular:
        # Close the ring in codec order: x1 must be the vertex shared with
        # the final triangle so that the labels end with x0, x1.
        wrap = tris[0] & tris[-1]
        if len(wrap) != 2 or x0 not in wrap:
            raise ValueError("cannot encode: ring does not close on triangle 0")
        (x1,) = wrap - {x0}
        if x1 not in shared01:
            raise ValueError("cannot encode: ring does not close on triangle 0")
        (x2,) = shared01 - {x1}
    else:
        x1, x2 = sorted(shared01)

    labels = [x0, x1, x2]
    layout: list[int] = []
    carried, u, v = x0, x1, x2
    prev = tris[0]
    for k, tri in enumerate(tris[1:], start=1):
        shared = prev & tri
        if len(shared) != 2:
            raise ValueError(
                f"cannot encode: triangles {k - 1} and {k} share {len(shared)} vertices"
            )
        (w,) = tri - shared
        if shared == {u, v}:
            y = 0
        elif shared == {carried, v}:
            y = 1
        else:
            raise ValueError(
                f"cannot encode: triangle {k} reattaches to the edge already "
                f"shared by triangles {k - 2} and {k - 1}"
            )
        labels.append(w)
        layout.append(y)
        first = u if y == 0 else carried
        carried, u, v = first, v, w
        prev = tri

    pair = LabelsLayout(n, labels, layout)
    if seq.circular:
        if not (labels[-2] == labels[0] and labels[-1] == labels[1]):
            raise ValueError("cannot encode: circular walk does not close in codec order")
    return pair


# ---------------------------------------------------------------------------
# edge coverage and goodness
# ---------------------------------------------------------------------------

def edge_multiplicities(seq: TriangleSeq) -> Counter[Edge]:
    """Count how many triangles of the sequence contain each edge."""
    counts: Counter[Edge] = Counter()
    for tri in seq.triangles:
        a, b, c = sorted(tri)
        counts[(a, b)] += 1
        counts[(a, c)] += 1
        counts[(b, c)] += 1
    return counts


def covered_edges(seq: TriangleSeq) -> set[Edge]:
    """The set of distinct edges used by the sequence."""
    return set(edge_multiplicities(seq))


def _consecutive_pairs(seq: TriangleSeq) -> list[tuple[int, int]]:
    idx = range(len(seq.triangles))
    pairs = [(i, i + 1) for i in idx[:-1]]
    if seq.circular:
        pairs.append((len(seq.triangles) - 1, 0))
    return pairs


def is_good(seq: TriangleSeq) -> bool:
    """Whether the sequence is good.

    Consecutive triangles (including the wrap-around pair when circular)
    must share exactly two vertices, and no edge may belong to two
    non-consecutive triangles or to three triangles.  A single triangle is
    good.  Equivalent characterisation: a linear sequence of t+1 triangles
    is good iff it covers 2t+3 distinct edges (2t+2 when circular).
    """
    tris = seq.triangles
    if len(tris) == 1:
        return True

    shared: set[Edge] = set()
    for i, j in _consecutive_pairs(seq):
        inter = tris[i] & tris[j]
        if len(inter) != 2:
            return False
        a, b = sorted(inter)
        shared.add((a, b))

    for e, count in edge_multiplicities(seq).items():
        if count > 2:
            return False
        if count == 2 and e not in shared:
            return False
    return True


# ---------------------------------------------------------------------------
# dual graph diameter
# ---------------------------------------------------------------------------

def _dual_adjacency(seq: TriangleSeq) -> list[list[int]]:
    """Adjacency lists of the dual graph (triangles sharing an edge)."""
    where: dict[Edge, list[int]] = {}
    for i, tri in enumerate(seq.triangles):
        a, b, c = sorted(tri)
        for e in ((a, b), (a, c), (b, c)):
            where.setdefault(e, []).append(i)
    adj: list[set[int]] = [set() for _ in seq.triangles]
    for members in where.values():
        for i in members:
            for j in members:
                if i != j:
                    adj[i].add(j)
    return [sorted(s) for s in adj]


def _bfs_ecc(adj: list[list[int]], source: int) -> tuple[list[int], int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    far = source
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                if dist[y] > dist[far]:
                    far = y
                queue.append(y)
    return dist, far


def dual_diameter(seq: TriangleSeq) -> int:
    """Diameter of the dual graph of the sequence.

    Trees (in particular the path dual of a good linear sequence) are solved
    with a double BFS, a single cycle in closed form, anything else by BFS
    from every vertex.

    Raises:
        ValueError: if the dual graph is disconnected.
    """
    adj = _dual_adjacency(seq)
    t = len(adj)
    dist, far = _bfs_ecc(adj, 0)
    if any(d < 0 for d in dist):
        raise ValueError("dual graph is disconnected")
    if t == 1:
        return 0

    edge_count = sum(len(a) for a in adj) // 2
    if edge_count == t - 1:
        # Connected with t-1 edges: a tree, double BFS is exact.
        dist2, _ = _bfs_ecc(adj, far)
        return max(dist2)
    if edge_count == t and all(len(a) == 2 for a in adj):
        return t // 2

    best = 0
    for s in range(t):
        d, _ = _bfs_ecc(adj, s)
        best = max(best, max(d))
    return best


# ---------------------------------------------------------------------------
# extremal values and certification
# ---------------------------------------------------------------------------

def hs_max_diameter(n: int) -> int:
    """Largest dual-graph diameter over strongly connected pure triangle
    complexes on n vertices.

    Equals floor(C(n,2)/2 - 3/2) for every n >= 3 except n = 6, where the
    bound of 6 is not attainable and the true value is 5.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n == 6:
        return 5
    return (n * (n - 1) // 2 - 3) // 2


def certify(seq: TriangleSeq, n: int) -> Certificate:
    """Build the verification certificate of ``seq`` against K_n.

    ``diameter`` is None when the dual graph is disconnected.
    ``matches_optimum`` requires goodness, a linear (non-circular) sequence
    and diameter equal to :func:`hs_max_diameter`.
    """
    good = is_good(seq)
    covered = covered_edges(seq)
    try:
        diameter: int | None = dual_diameter(seq)
    except ValueError:
        diameter = None
    optimum = hs_max_diameter(n)
    matches = good and not seq.circular and diameter == optimum
    uncovered = sorted(all_edges(n) - covered)
    return Certificate(
        good=good,
        circular=seq.circular,
        covered_edges=len(covered),
        diameter=diameter,
        optimum=optimum,
        matches_optimum=matches,
        uncovered_edges=uncovered,
    )
