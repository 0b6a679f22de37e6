"""2D Delaunay triangulation via incremental Bowyer-Watson insertion.

Coordinates are exact integers, so the orientation and in-circumcircle
predicates are evaluated in arbitrary-precision integer arithmetic and never
misclassify. Under the package's y-down axis convention a triangle (a, b, c)
is stored counter-clockwise when cross(b - a, c - a) > 0.

Determinism: points are inserted in (y, x) order, cocircular quads are
normalized to the lexicographically smallest diagonal, and the triangle list
is emitted sorted by its sorted index triples. Identical input always yields
the identical triangulation.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, ParameterError, TooFewPointsError
from .raster import PixelCoord
from .sampling import PointSet

Vertex = tuple[int, int]


@dataclass(frozen=True)
class Triangle:
    """Index triple into a vertex array, counter-clockwise, non-collinear."""

    a: int
    b: int
    c: int


@dataclass(eq=False)
class Triangulation:
    """vertices: (n, 2) int64 array of (x, y); triangles: (m, 3) int32."""

    vertices: np.ndarray
    triangles: np.ndarray

    def __post_init__(self):
        self.vertices = np.ascontiguousarray(self.vertices, dtype=np.int64)
        self.triangles = np.ascontiguousarray(self.triangles, dtype=np.int32)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    def to_json_dict(self) -> dict:
        return {
            "vertices": self.vertices.tolist(),
            "triangles": self.triangles.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, d: dict) -> "Triangulation":
        return cls(
            np.array(d["vertices"], dtype=np.int64).reshape(-1, 2),
            np.array(d["triangles"], dtype=np.int32).reshape(-1, 3),
        )


def orient2d(a: Vertex, b: Vertex, c: Vertex) -> int:
    """Twice the signed area of (a, b, c); > 0 means counter-clockwise."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def incircle_det(a: Vertex, b: Vertex, c: Vertex, p: Vertex) -> int:
    """Incircle determinant; > 0 means p strictly inside the circumcircle of
    a counter-clockwise (a, b, c). Exact for integer coordinates."""
    adx = a[0] - p[0]
    ady = a[1] - p[1]
    bdx = b[0] - p[0]
    bdy = b[1] - p[1]
    cdx = c[0] - p[0]
    cdy = c[1] - p[1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (
        alift * (bdx * cdy - cdx * bdy)
        + blift * (cdx * ady - adx * cdy)
        + clift * (adx * bdy - bdx * ady)
    )


def in_circumcircle(tri: tuple[Vertex, Vertex, Vertex], p: Vertex) -> bool:
    """True iff p lies strictly inside the circumcircle of the triangle.

    Points exactly on the circle count as outside (strict test).
    """
    a, b, c = tri
    o = orient2d(a, b, c)
    if o == 0:
        raise DegenerateInputError(f"collinear triangle {tri}")
    d = incircle_det(a, b, c, p)
    return d > 0 if o > 0 else d < 0


def _round_third(s: int) -> int:
    # round(s / 3) with ties away from zero; thirds cannot actually tie,
    # but the rule is pinned for platform independence.
    if s >= 0:
        return (2 * s + 3) // 6
    return -((-2 * s + 3) // 6)


def centroid(
    tri: Triangle | tuple[int, int, int],
    verts: np.ndarray,
    width: int | None = None,
    height: int | None = None,
) -> PixelCoord:
    """Average of the three vertex coordinates, rounded to nearest integers
    (ties away from zero), optionally clamped into image bounds."""
    ia, ib, ic = (tri.a, tri.b, tri.c) if isinstance(tri, Triangle) else tri
    sx = int(verts[ia][0]) + int(verts[ib][0]) + int(verts[ic][0])
    sy = int(verts[ia][1]) + int(verts[ib][1]) + int(verts[ic][1])
    x = _round_third(sx)
    y = _round_third(sy)
    if width is not None:
        x = min(max(x, 0), width - 1)
    if height is not None:
        y = min(max(y, 0), height - 1)
    return PixelCoord(x, y)


class _Mesh:
    """Mutable triangle soup with neighbor links for Bowyer-Watson.

    Triangle t has vertices verts[t] = [i, j, k] (counter-clockwise) and
    neighbor nbrs[t][e] across the edge opposite vertex e, or -1.
    """

    def __init__(self, points: list[Vertex]):
        self.pts = points
        self.verts: list[list[int]] = []
        self.nbrs: list[list[int]] = []
        self.alive: list[bool] = []

    def add(self, i: int, j: int, k: int) -> int:
        self.verts.append([i, j, k])
        self.nbrs.append([-1, -1, -1])
        self.alive.append(True)
        return len(self.verts) - 1


def _super_triangle(points: list[Vertex]) -> tuple[Vertex, Vertex, Vertex]:
    # Any empty circumcircle of integer points spanning a bounding box of
    # diameter D has radius at most D^3 / 2 (minimum lattice triangle area
    # is 1/2), so scaffold corners at distance ~2 D^3 provably cannot fall
    # inside one and never distort the real triangulation.
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    cx = (min(xs) + max(xs)) // 2
    cy = (min(ys) + max(ys)) // 2
    d = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    m = 2 * (2 * d + 2) ** 3
    return (cx - 3 * m, cy - m), (cx + 3 * m, cy - m), (cx, cy + 3 * m)


def _locate(mesh: _Mesh, start: int, p: Vertex) -> int:
    """Visibility walk toward p; terminates because the mesh is Delaunay."""
    pts = mesh.pts
    t = start
    while True:
        v = mesh.verts[t]
        moved = False
        for e in range(3):
            a = pts[v[(e + 1) % 3]]
            b = pts[v[(e + 2) % 3]]
            if orient2d(a, b, p) < 0:
                nxt = mesh.nbrs[t][e]
                if nxt >= 0:
                    t = nxt
                    moved = True
                    break
        if not moved:
            return t


def _insert(mesh: _Mesh, ip: int, start: int) -> int:
    """Insert point ip, returning a new triangle id to seed the next walk."""
    pts = mesh.pts
    p = pts[ip]
    t0 = _locate(mesh, start, p)
    # grow the cavity of circumcircle violators outward from the hit
    bad_list = [t0]
    bad = {t0}
    stack = [t0]
    while stack:
        t = stack.pop()
        for nb in mesh.nbrs[t]:
            if nb >= 0 and nb not in bad:
                i, j, k = mesh.verts[nb]
                if incircle_det(pts[i], pts[j], pts[k], p) > 0:
                    bad.add(nb)
                    bad_list.append(nb)
                    stack.append(nb)
    # cavity boundary edges, oriented as seen from inside
    boundary: list[tuple[int, int, int]] = []
    for t in bad_list:
        v = mesh.verts[t]
        for e in range(3):
            nb = mesh.nbrs[t][e]
            if nb < 0 or nb not in bad:
                boundary.append((v[(e + 1) % 3], v[(e + 2) % 3], nb))
    for t in bad_list:
        mesh.alive[t] = False
    # retriangulate: one new triangle per boundary edge
    half: dict[tuple[int, int], tuple[int, int]] = {}
    first = -1
    for a, b, outer in boundary:
        t_new = mesh.add(ip, a, b)
        if first < 0:
            first = t_new
        mesh.nbrs[t_new][0] = outer
        if outer >= 0:
            vv = mesh.verts[outer]
            for s in range(3):
                if {vv[(s + 1) % 3], vv[(s + 2) % 3]} == {a, b}:
                    mesh.nbrs[outer][s] = t_new
                    break
        half[(b, ip)] = (t_new, 1)
        half[(ip, a)] = (t_new, 2)
    for (u, w), (t_new, slot) in half.items():
        mate = half.get((w, u))
        if mate is not None:
            mesh.nbrs[t_new][slot] = mate[0]
    return first


def _normalize_cocircular(
    tris: set[tuple[int, int, int]], pts: list[Vertex]
) -> list[tuple[int, int, int]]:
    """Flip cocircular quads until every diagonal is the lexicographically
    smallest valid one.

    Four distinct concyclic points are always in convex position and share a
    single circumcircle, so each flip is geometrically valid and preserves
    the Delaunay property; each flip strictly lowers the edge multiset, so
    the worklist terminates.
    """
    edge_owners: dict[tuple[int, int], set[tuple[int, int, int]]] = {}

    def edges_of(key):
        a, b, c = key
        return (a, b), (a, c), (b, c)

    for key in tris:
        for e in edges_of(key):
            edge_owners.setdefault(e, set()).add(key)

    queue = deque(sorted(edge_owners))
    queued = set(queue)
    while queue:
        uv = queue.popleft()
        queued.discard(uv)
        owners = edge_owners.get(uv)
        if owners is None or len(owners) != 2:
            continue
        t1, t2 = sorted(owners)
        u, v = uv
        c = next(i for i in t1 if i != u and i != v)
        d = next(i for i in t2 if i != u and i != v)
        alt = (c, d) if c < d else (d, c)
        if alt >= uv:
            continue
        if incircle_det(pts[u], pts[v], pts[c], pts[d]) != 0:
            continue
        for old in (t1, t2):
            tris.discard(old)
            for e in edges_of(old):
                edge_owners[e].discard(old)
        for new in (tuple(sorted((c, d, u))), tuple(sorted((c, d, v)))):
            tris.add(new)
            for e in edges_of(new):
                edge_owners.setdefault(e, set()).add(new)
                if e not in queued:
                    queue.append(e)
                    queued.add(e)
    return sorted(tris)


def triangulate(ps: PointSet) -> Triangulation:
    """Delaunay triangulation of the point set.

    Raises TooFewPointsError for fewer than 3 points and
    DegenerateInputError when all points are collinear. Triangle indices
    refer to `ps.points` in its original order.
    """
    pts_arr = ps.points
    n = len(pts_arr)
    if n < 3:
        raise TooFewPointsError(f"triangulation needs at least 3 points, got {n}")
    points: list[Vertex] = [(int(x), int(y)) for x, y in pts_arr]
    if len(set(points)) != n:
        raise ParameterError("points must be unique")
    if all(orient2d(points[0], points[1], q) == 0 for q in points[2:]):
        raise DegenerateInputError("all points are collinear")

    order = sorted(range(n), key=lambda i: (points[i][1], points[i][0]))
    s1, s2, s3 = _super_triangle(points)
    mesh = _Mesh(points + [s1, s2, s3])
    mesh.add(n, n + 1, n + 2)  # counter-clockwise by construction
    seed_tri = 0
    for ip in order:
        seed_tri = _insert(mesh, ip, seed_tri)

    real = {
        tuple(sorted(mesh.verts[t]))
        for t in range(len(mesh.verts))
        if mesh.alive[t] and all(i < n for i in mesh.verts[t])
    }
    normalized = _normalize_cocircular(real, points)

    canon = []
    for a, b, c in normalized:
        if orient2d(points[a], points[b], points[c]) < 0:
            b, c = c, b
        canon.append((a, b, c))
    return Triangulation(pts_arr.copy(), np.array(canon, dtype=np.int32).reshape(-1, 3))
