"""Deterministic constructors for the named graphs and families."""
from __future__ import annotations

import enum

from .graph import Graph, GraphError, complete_join, from_edge_list, square


class BrickKind(enum.Enum):
    """The two triangle-deleted bricks: K5 or the octahedron minus one triangle."""

    K5_NABLA = "k5"
    K222_NABLA = "k222"


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError("negative order")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def edgeless(n: int) -> Graph:
    if n < 0:
        raise GraphError("negative order")
    return Graph(n, [[] for _ in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 0:
        raise GraphError("negative order")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def basic(kind: str, n: int) -> Graph:
    makers = {"complete": complete, "edgeless": edgeless, "cycle": cycle, "path": path}
    if kind not in makers:
        raise GraphError(f"unknown basic family {kind!r}")
    return makers[kind](n)


def cycle_square(n: int) -> Graph:
    if n < 5:
        raise GraphError(f"cycle squares are taken for n >= 5, got {n}")
    return square(cycle(n))


def wheel(n: int) -> Graph:
    """W_n = C_n + K1 on n + 1 vertices; the hub is vertex n."""
    if n < 3:
        raise GraphError(f"a wheel needs a rim of at least 3 vertices, got {n}")
    return complete_join(cycle(n), complete(1))


# attachments are vertices 0, 1, 2 in both bricks
BRICK_ATTACHMENTS = (0, 1, 2)


def brick(kind: BrickKind) -> Graph:
    kind = BrickKind(kind)
    triangle = {(0, 1), (0, 2), (1, 2)}
    if kind is BrickKind.K5_NABLA:
        edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
        return from_edge_list(5, [e for e in edges if e not in triangle])
    # octahedron with antipodal pairs {0,3}, {1,4}, {2,5}
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if v - u != 3]
    return from_edge_list(6, [e for e in edges if e not in triangle])


def glued_pair(a: BrickKind, b: BrickKind, bijection=(0, 1, 2)) -> Graph:
    """Two bricks sharing exactly their attachment triples.

    The first brick keeps its labels; attachment ``i`` of the second is
    identified with attachment ``bijection[i]`` of the first and its internal
    vertices are appended.
    """
    A, B = brick(a), brick(b)
    if sorted(bijection) != [0, 1, 2]:
        raise GraphError("attachment bijection must permute (0, 1, 2)")
    index = {BRICK_ATTACHMENTS[i]: BRICK_ATTACHMENTS[bijection[i]] for i in range(3)}
    nxt = A.n
    for v in range(B.n):
        if v not in index:
            index[v] = nxt
            nxt += 1
    edges = [(e.u, e.v) for e in A.edges()] + [(index[e.u], index[e.v]) for e in B.edges()]
    return from_edge_list(nxt, edges)


def f_graph_labels(k: int) -> dict:
    """Vertex indices of the 2k-cycle read cyclically as v0 v1 .. vk u_{k-1} .. u1."""
    labels = {f"v{i}": i for i in range(k + 1)}
    labels.update({f"u{j}": 2 * k - j for j in range(1, k)})
    return labels


def _modified_cycle_square(k: int, added: tuple) -> Graph:
    if k < 4:
        raise GraphError(f"F_k is defined for k >= 4, got {k}")
    L = f_graph_labels(k)
    sq = square(cycle(2 * k))
    removed = {frozenset((L["u1"], L["v1"])), frozenset((L[f"u{k - 1}"], L[f"v{k - 1}"]))}
    edges = [(e.u, e.v) for e in sq.edges() if frozenset(e) not in removed]
    edges += [(L[a], L[b]) for a, b in added]
    return from_edge_list(2 * k, edges)


def f_graph(k: int) -> Graph:
    """Square of the 2k-cycle with u1v1 and u_{k-1}v_{k-1} replaced by the crossing pair
    v1u_{k-1} and u1v_{k-1}.

    4-regular, 5-col-critical, and every edge except the two added ones is
    double-col-critical.
    """
    return _modified_cycle_square(k, (("v1", f"u{k - 1}"), ("u1", f"v{k - 1}")))


def f_graph_literal(k: int) -> Graph:
    """Same square with v1v_{k-1} and u1u_{k-1} added instead.

    For k = 4 both pairs are already edges of the square (14 edges, col 4);
    for 5 <= k <= 10 the result has col 5 but no double-col-critical edge at
    all. Kept only to document that reading.
    """
    return _modified_cycle_square(k, (("v1", f"v{k - 1}"), ("u1", f"u{k - 1}")))


ICOSAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
    (6, 7), (7, 8), (8, 9), (9, 10), (6, 10),
    (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
)


def icosahedron() -> Graph:
    return from_edge_list(12, ICOSAHEDRON_EDGES)


def toroidal_triangulated(rows: int, cols: int) -> Graph:
    """Toroidal grid Z_rows x Z_cols plus every diagonal (i,j)-(i+1,j+1); (i,j) is vertex i*cols+j."""
    if rows < 3 or cols < 3:
        raise GraphError(f"toroidal grid needs both sides >= 3, got {rows}x{cols}")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            for di, dj in ((1, 0), (0, 1), (1, 1)):
                edges.append((v, ((i + di) % rows) * cols + (j + dj) % cols))
    return from_edge_list(rows * cols, edges)


def ratio_family(p: int, k: int) -> Graph:
    """F_k joined with p - 5 independent vertices."""
    if p < 5 or k < 4:
        raise GraphError(f"ratio family needs p >= 5 and k >= 4, got p={p}, k={k}")
    return complete_join(f_graph(k), edgeless(p - 5))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)
