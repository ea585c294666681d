"""Exact 2-D convex geometry: polygons, clipping, intersection, Minkowski sums.

Vertices are plain ``(x, y)`` tuples of exact scalars.  Everything here is
generic over the scalar type: rationals in the main pipeline, quadratic jets
when a caller runs a perturbed query.  Full-dimensional results are
``ConvexPolygon``; intersections that collapse to a segment or a point are
returned as flagged ``Degenerate2`` values, and empty results are ``None``.
"""

from __future__ import annotations

from math import gcd

from .exactnum import Q, is_rational


class GeometryError(Exception):
    pass


class AllCollinear(GeometryError):
    pass


class NonConvexInput(GeometryError):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def shoelace2(verts):
    """Twice the signed area of a closed chain."""
    total = 0
    n = len(verts)
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total


def dedupe_chain(verts):
    """Drop repeated and collinear vertices from a convex CCW chain."""
    out = []
    for p in verts:
        if not out or p != out[-1]:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    if len(out) < 3:
        return out
    kept = []
    n = len(out)
    for i in range(n):
        a, b, c = out[i - 1], out[i], out[(i + 1) % n]
        if cross(a, b, c) != 0:
            kept.append(b)
    return kept if len(kept) >= 3 else _extremes(out)


def _extremes(points):
    """Reduce collinear points to their two extremes (or one point)."""
    lo = min(points)
    hi = max(points)
    return [lo] if lo == hi else [lo, hi]


def clip_chain(verts, a, b, c):
    """Clip a convex CCW vertex list to the halfplane a*x + b*y <= c."""
    vals = [a * x + b * y - c for (x, y) in verts]
    if all(v <= 0 for v in vals):
        return list(verts)
    if all(v >= 0 for v in vals):
        on = [p for p, v in zip(verts, vals) if v == 0]
        return _extremes(on) if on else []
    out = []
    n = len(verts)
    for i in range(n):
        j = (i + 1) % n
        vi, vj = vals[i], vals[j]
        if vi <= 0:
            out.append(verts[i])
        if (vi < 0 < vj) or (vj < 0 < vi):
            t = vi / (vi - vj)
            xi, yi = verts[i]
            xj, yj = verts[j]
            out.append((xi + t * (xj - xi), yi + t * (yj - yi)))
    return dedupe_chain(out)


def hull_chain(points):
    """Monotone-chain hull, strict (collinear interior points removed)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 3 else _extremes(pts)


class Degenerate2:
    """A lower-dimensional convex region: a point or a segment."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        self.vertices = tuple(vertices)

    @property
    def kind(self):
        return "point" if len(self.vertices) == 1 else "segment"

    @property
    def area(self):
        return Q(0)

    def __repr__(self):
        return f"Degenerate2({self.kind}, {list(self.vertices)})"

    def __eq__(self, other):
        return isinstance(other, Degenerate2) and set(self.vertices) == set(other.vertices)


class ConvexPolygon:
    """Strictly convex polygon with CCW vertices, canonically rotated."""

    __slots__ = ("vertices",)

    def __init__(self, vertices, _trusted=False):
        verts = list(vertices)
        if not _trusted:
            verts = dedupe_chain(verts)
            if len(verts) < 3:
                raise NonConvexInput("fewer than 3 distinct non-collinear vertices")
            if shoelace2(verts) < 0:
                verts.reverse()
            n = len(verts)
            for i in range(n):
                if cross(verts[i - 1], verts[i], verts[(i + 1) % n]) <= 0:
                    raise NonConvexInput(
                        f"vertex {verts[i]} is not strictly convex", vertex=verts[i]
                    )
        k = min(range(len(verts)), key=verts.__getitem__)
        self.vertices = tuple(verts[k:] + verts[:k])

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"ConvexPolygon({list(self.vertices)})"

    @property
    def area(self):
        return shoelace2(self.vertices) / 2

    def translate(self, v):
        dx, dy = v
        return ConvexPolygon(
            [(x + dx, y + dy) for (x, y) in self.vertices], _trusted=True
        )

    def negate(self):
        return ConvexPolygon([(-x, -y) for (x, y) in self.vertices])

    def scale(self, s):
        if s <= 0:
            raise GeometryError("scale factor must be positive")
        return ConvexPolygon(
            [(x * s, y * s) for (x, y) in self.vertices], _trusted=True
        )

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def edge_halfplanes(self):
        """Halfplane (a, b, c) per edge with the polygon on a*x+b*y <= c."""
        out = []
        for (x0, y0), (x1, y1) in self.edges():
            a, b = y1 - y0, x0 - x1
            out.append((a, b, a * x0 + b * y0))
        return out

    def support(self, d):
        return max(d[0] * x + d[1] * y for (x, y) in self.vertices)

    def contains(self, p, strict=False):
        for a, b, c in self.edge_halfplanes():
            v = a * p[0] + b * p[1] - c
            if v > 0 or (strict and v == 0):
                return False
        return True

    def centroid(self):
        n = len(self.vertices)
        sx = sum(x for x, _ in self.vertices)
        sy = sum(y for _, y in self.vertices)
        return (sx / Q(n), sy / Q(n))


def polygon(points) -> ConvexPolygon:
    """Validating constructor used by parsers and tests."""
    return ConvexPolygon(points)


def polygon_area(p: ConvexPolygon):
    return p.area


def region_area(region):
    """Area of a ConvexPolygon | Degenerate2 | None result."""
    if region is None:
        return Q(0)
    if isinstance(region, Degenerate2):
        return Q(0)
    return region.area


def _classify(chain):
    if not chain:
        return None
    if len(chain) < 3:
        return Degenerate2(chain)
    return ConvexPolygon(chain, _trusted=True)


class Line2:
    """Oriented line a*x + b*y = c, normalized to integer coprime coeffs."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        if a == 0 and b == 0:
            raise GeometryError("degenerate line")
        if is_rational(a) and is_rational(b) and is_rational(c):
            qa, qb, qc = Q(a), Q(b), Q(c)
            m = qa.denominator * qb.denominator * qc.denominator
            ia, ib, ic = int(qa * m), int(qb * m), int(qc * m)
            g = gcd(gcd(abs(ia), abs(ib)), abs(ic)) or 1
            ia, ib, ic = ia // g, ib // g, ic // g
            if ia < 0 or (ia == 0 and ib < 0):
                ia, ib, ic = -ia, -ib, -ic
            self.a, self.b, self.c = Q(ia), Q(ib), Q(ic)
        else:
            self.a, self.b, self.c = a, b, c

    def key(self):
        return (self.a, self.b, self.c)

    def direction_key(self):
        return (self.a, self.b)

    def eval_at(self, p):
        return self.a * p[0] + self.b * p[1] - self.c

    def __eq__(self, other):
        return isinstance(other, Line2) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Line2({self.a}, {self.b}, {self.c})"


def line_through(p, q) -> Line2:
    a = q[1] - p[1]
    b = p[0] - q[0]
    return Line2(a, b, a * p[0] + b * p[1])


def line_intersection(l1: Line2, l2: Line2):
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return (x, y)


class HalfPlane:
    """The closed side a*x + b*y <= c of a Line2."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        if a == 0 and b == 0:
            raise GeometryError("degenerate halfplane")
        self.a, self.b, self.c = a, b, c

    @property
    def boundary(self):
        return Line2(self.a, self.b, self.c)

    def contains(self, p, strict=False):
        v = self.a * p[0] + self.b * p[1] - self.c
        return v < 0 if strict else v <= 0

    def __repr__(self):
        return f"HalfPlane({self.a}*x + {self.b}*y <= {self.c})"


def clip_halfplane(p: ConvexPolygon, h: HalfPlane):
    """p intersected with h: polygon, flagged degenerate, or None."""
    return _classify(clip_chain(p.vertices, h.a, h.b, h.c))


def intersect_convex(p: ConvexPolygon, q: ConvexPolygon):
    """Exact convex intersection via iterated halfplane clipping."""
    chain = list(p.vertices)
    for a, b, c in q.edge_halfplanes():
        chain = clip_chain(chain, a, b, c)
        if not chain:
            return None
    return _classify(chain)


def intersect_chain(chain, halfplanes):
    """Hot-path variant: clip a raw vertex list by (a, b, c) triples."""
    for a, b, c in halfplanes:
        chain = clip_chain(chain, a, b, c)
        if not chain:
            return []
    return chain


def minkowski_sum(p: ConvexPolygon, q: ConvexPolygon) -> ConvexPolygon:
    """Exact Minkowski sum by merging edge direction sequences."""
    pv, qv = p.vertices, q.vertices
    n, m = len(pv), len(qv)
    i0 = min(range(n), key=lambda i: (pv[i][1], pv[i][0]))
    j0 = min(range(m), key=lambda j: (qv[j][1], qv[j][0]))
    out = []
    a = b = 0
    while a < n or b < m:
        pa = pv[(i0 + a) % n]
        qb = qv[(j0 + b) % m]
        out.append((pa[0] + qb[0], pa[1] + qb[1]))
        if a == n:
            b += 1
            continue
        if b == m:
            a += 1
            continue
        pa2 = pv[(i0 + a + 1) % n]
        qb2 = qv[(j0 + b + 1) % m]
        e1 = (pa2[0] - pa[0], pa2[1] - pa[1])
        e2 = (qb2[0] - qb[0], qb2[1] - qb[1])
        cr = e1[0] * e2[1] - e1[1] * e2[0]
        if cr > 0:
            a += 1
        elif cr < 0:
            b += 1
        else:
            a += 1
            b += 1
    return ConvexPolygon(out)


def convex_hull2(points) -> ConvexPolygon:
    """Strict CCW hull of >= 3 points; raises AllCollinear when flat."""
    chain = hull_chain(list(points))
    if len(chain) < 3:
        raise AllCollinear("hull of the given points is degenerate")
    return ConvexPolygon(chain, _trusted=True)
