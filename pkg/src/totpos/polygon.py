"""Combinatorics of the labeled n-gon: triangulations, flips, charts.

Vertices are labeled 1..n counterclockwise.  All cyclic arithmetic on
labels goes through the helpers here.
"""

from itertools import combinations

from .rational import scalar, scalar_str


class PolygonError(ValueError):
    pass


def cyclic_succ(v, n):
    return v % n + 1


def cyclic_interval(p, q, n):
    """Vertex labels of the cyclic interval [p..q], walking forward from p."""
    out = [p]
    while out[-1] != q:
        out.append(cyclic_succ(out[-1], n))
        if len(out) > n:
            raise PolygonError("bad interval [%d..%d] for n = %d" % (p, q, n))
    return out


def chords_cross(d1, d2, n):
    """Whether two chords of the n-gon cross in the interior."""
    a, b = sorted(d1)
    c, d = sorted(d2)
    return (a < c < b < d) or (c < a < d < b)


def _is_boundary(a, b, n):
    a, b = sorted((a, b))
    return b - a == 1 or (a == 1 and b == n)


class Triangulation:
    """A triangulation of the labeled n-gon by noncrossing diagonals."""

    __slots__ = ("n", "diagonals", "_triangles")

    def __init__(self, n, diagonals):
        if n < 3:
            raise PolygonError("need at least 3 vertices")
        diags = set()
        for d in diagonals:
            a, b = sorted(int(x) for x in d)
            if not (1 <= a < b <= n):
                raise PolygonError("bad vertex pair (%d, %d)" % (a, b))
            if _is_boundary(a, b, n):
                raise PolygonError("(%d, %d) is a boundary edge, not a diagonal" % (a, b))
            diags.add((a, b))
        if len(diags) != n - 3:
            raise PolygonError("a triangulation of the %d-gon needs %d diagonals, got %d"
                               % (n, n - 3, len(diags)))
        for d1, d2 in combinations(diags, 2):
            if chords_cross(d1, d2, n):
                raise PolygonError("diagonals %s and %s cross" % (d1, d2))
        self.n = n
        self.diagonals = frozenset(diags)
        self._triangles = None

    @classmethod
    def fan(cls, n, apex=1):
        diags = []
        for v in range(1, n + 1):
            if v != apex and not _is_boundary(apex, v, n):
                diags.append((min(apex, v), max(apex, v)))
        return cls(n, diags)

    def __eq__(self, other):
        return (isinstance(other, Triangulation)
                and self.n == other.n and self.diagonals == other.diagonals)

    def __hash__(self):
        return hash((self.n, self.diagonals))

    def __repr__(self):
        return "Triangulation(%d, %s)" % (self.n, sorted(self.diagonals))

    def boundary_edges(self):
        n = self.n
        return [(v, cyclic_succ(v, n)) if v < n else (1, n) for v in range(1, n + 1)]

    def edges(self):
        return sorted(set(self.boundary_edges()) | self.diagonals)

    def triangles(self):
        """The n-2 triangular faces, each as an ascending vertex triple.

        In a noncrossing triangulation every 3-clique of the edge graph
        bounds a face, so the faces are exactly the 3-cliques.
        """
        if self._triangles is None:
            edge_set = set(self.edges())
            adj = {v: set() for v in range(1, self.n + 1)}
            for a, b in edge_set:
                adj[a].add(b)
                adj[b].add(a)
            tris = []
            for a, b in sorted(edge_set):
                for c in sorted(adj[a] & adj[b]):
                    if c > b:
                        tris.append((a, b, c))
            if len(tris) != self.n - 2:
                raise PolygonError("face count %d != %d" % (len(tris), self.n - 2))
            self._triangles = tris
        return self._triangles

    def quadrilateral(self, d):
        """The four vertices around diagonal d, in cyclic order (a, b, c, e)
        with d = {a, c}."""
        d = tuple(sorted(d))
        if d not in self.diagonals:
            raise PolygonError("%s is not a diagonal" % (d,))
        adjacent = [t for t in self.triangles() if d[0] in t and d[1] in t]
        assert len(adjacent) == 2
        quad = sorted(set(adjacent[0]) | set(adjacent[1]))
        q1, q2, q3, q4 = quad
        if d == (q1, q3):
            return (q1, q2, q3, q4)
        assert d == (q2, q4)
        return (q2, q3, q4, q1)

    def flip(self, d):
        """Replace diagonal d by the opposite diagonal of its quadrilateral."""
        a, b, c, e = self.quadrilateral(d)
        new = tuple(sorted((b, e)))
        return Triangulation(self.n, (self.diagonals - {tuple(sorted(d))}) | {new})

    def to_json(self):
        return {"n": self.n, "diagonals": [list(d) for d in sorted(self.diagonals)]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n"]), data["diagonals"])


def flip_path(t1, t2):
    """A diagonal sequence transforming t1 into t2, routed through the fan
    at vertex 1.  Replaying the flips on t1 ends at t2."""
    if t1.n != t2.n:
        raise PolygonError("triangulations of different polygons")
    if t1 == t2:
        return []

    def path_to_fan(t):
        path = []
        while True:
            missing = [d for d in Triangulation.fan(t.n).diagonals
                       if d not in t.diagonals]
            if not missing:
                return path
            # flip any diagonal whose quadrilateral contains vertex 1
            for d in sorted(t.diagonals):
                if 1 in d:
                    continue
                if 1 in t.quadrilateral(d):
                    path.append(d)
                    t = t.flip(d)
                    break
            else:
                raise PolygonError("no progress toward the fan")

    path = path_to_fan(t1)
    # walk t2 toward the fan recording each created diagonal; flipping those
    # in reverse order leads from the fan back to t2
    t = t2
    created = []
    for d in path_to_fan(t2):
        _, b, _, e = t.quadrilateral(d)
        t = t.flip(d)
        created.append(tuple(sorted((b, e))))
    path.extend(reversed(created))
    return path


def chart_indices(t, m):
    """All multi-indices supported on the faces of a triangulation.

    One index per edge and weight split, plus the all-positive weights of
    each triangle; shared edges are not double counted.
    """
    if m < 2:
        raise PolygonError("need m >= 2")
    n = t.n
    out = set()
    for a, b in t.edges():
        for i in range(1, m):
            idx = [0] * n
            idx[a - 1] = i
            idx[b - 1] = m - i
            out.add(tuple(idx))
    for a, b, c in t.triangles():
        for i in range(1, m - 1):
            for j in range(1, m - i):
                k = m - i - j
                if k >= 1:
                    idx = [0] * n
                    idx[a - 1], idx[b - 1], idx[c - 1] = i, j, k
                    out.add(tuple(idx))
    return sorted(out)


def chart_dimension(n, m):
    """Closed-form count of chart coordinates."""
    return (n - 2) * (m + 1) * m // 2 + (m + 1) - n


class ChartPoint:
    """Positive values assigned to every chart index of a triangulation."""

    __slots__ = ("triangulation", "m", "values")

    def __init__(self, triangulation, m, values):
        keys = chart_indices(triangulation, m)
        values = {tuple(k): scalar(v) for k, v in values.items()}
        if sorted(values) != keys:
            raise PolygonError("chart values must be keyed by exactly the chart indices")
        for k, v in values.items():
            if v <= 0:
                raise PolygonError("chart value at %s is %s, not positive"
                                   % (k, scalar_str(v)))
        self.triangulation = triangulation
        self.m = m
        self.values = values

    def __eq__(self, other):
        return (isinstance(other, ChartPoint)
                and self.triangulation == other.triangulation
                and self.m == other.m and self.values == other.values)

    def __repr__(self):
        return "ChartPoint(%r, m=%d)" % (self.triangulation, self.m)

    def to_json(self):
        return {
            "triangulation": self.triangulation.to_json(),
            "m": self.m,
            "values": {",".join(map(str, k)): scalar_str(v)
                       for k, v in sorted(self.values.items())},
        }

    @classmethod
    def from_json(cls, data):
        t = Triangulation.from_json(data["triangulation"])
        values = {tuple(int(x) for x in k.split(",")): scalar(v)
                  for k, v in data["values"].items()}
        return cls(t, int(data["m"]), values)


def edge_values(config, a, b, m):
    """The m-1 coordinates of a configuration supported on edge {a, b}."""
    out = []
    for i in range(1, m):
        idx = [0] * config.n
        idx[a - 1] = i
        idx[b - 1] = m - i
        out.append(config.delta(idx))
    return out


def glue_check(assignment, t):
    """Whether per-triangle configurations agree along every shared diagonal.

    ``assignment`` maps each ascending triangle triple of ``t`` to an n=3
    Configuration whose flags sit at the triple's vertices in order.  True
    iff for every internal edge the two induced edge restrictions carry
    identical coordinates.
    """
    tris = t.triangles()
    if sorted(assignment) != sorted(tris):
        raise PolygonError("assignment keys must be the triangles of the triangulation")
    m = next(iter(assignment.values())).m
    for c in assignment.values():
        if c.n != 3 or c.m != m:
            raise PolygonError("each triangle needs an n=3 configuration of matching m")
    for d in t.diagonals:
        sides = [tri for tri in tris if d[0] in tri and d[1] in tri]
        assert len(sides) == 2
        vals = []
        for tri in sides:
            c = assignment[tri]
            pa, pb = tri.index(d[0]) + 1, tri.index(d[1]) + 1
            vals.append(edge_values(c, pa, pb, m))
        if vals[0] != vals[1]:
            return False
    return True
