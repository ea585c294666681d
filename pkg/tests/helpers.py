"""Shared random-instance generators and small oracles for the test suite."""

import random
from itertools import combinations

from convexmatch.exactnum import Q
from convexmatch.geom2d import AllCollinear, convex_hull2
from convexmatch.geom3d import (
    ConvexPolyhedron,
    Degenerate,
    convex_hull3,
    cross3,
    dot3,
    plane_eval,
    sub3,
    volume,
)


def rand_q(rng, lo=-10, hi=10, den=6):
    return Q(rng.randint(lo, hi), rng.randint(1, den))


def rand_polygon(rng, max_verts=8, spread=10, den=6):
    """Random strictly convex polygon with 3..max_verts vertices."""
    while True:
        k = rng.randint(max(5, max_verts), max_verts + 6)
        pts = [(rand_q(rng, -spread, spread, den), rand_q(rng, -spread, spread, den))
               for _ in range(k)]
        try:
            h = convex_hull2(pts)
        except AllCollinear:
            continue
        if 3 <= len(h) <= max_verts:
            return h


def rand_polyhedron(rng, max_verts=14, spread=8, den=4):
    """Random full-dimensional convex polyhedron with <= max_verts vertices."""
    while True:
        k = rng.randint(max(6, max_verts // 2), max_verts + 4)
        pts = [
            (rand_q(rng, -spread, spread, den), rand_q(rng, -spread, spread, den),
             rand_q(rng, -spread, spread, den))
            for _ in range(k)
        ]
        try:
            h = convex_hull3(pts)
        except Degenerate:
            continue
        if len(h.vertices) <= max_verts:
            return h


def pyramid():
    """Unit-square base at z=0, apex (1/2, 1/2, 1)."""
    verts = [(Q(0), Q(0), Q(0)), (Q(1), Q(0), Q(0)), (Q(1), Q(1), Q(0)),
             (Q(0), Q(1), Q(0)), (Q(1, 2), Q(1, 2), Q(1))]
    faces = [[3, 2, 1, 0], [0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]]
    return ConvexPolyhedron(verts, faces, validate=True)


def octahedron():
    return convex_hull3(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    )


def solve3(p1, p2, p3):
    """Intersection point of three planes, or None when singular."""
    (a1, b1, c1, d1), (a2, b2, c2, d2), (a3, b3, c3, d3) = p1, p2, p3
    m1 = b2 * c3 - b3 * c2
    m2 = a2 * c3 - a3 * c2
    m3 = a2 * b3 - a3 * b2
    det = a1 * m1 - b1 * m2 + c1 * m3
    if det == 0:
        return None
    x = d1 * m1 - b1 * (d2 * c3 - d3 * c2) + c1 * (d2 * b3 - d3 * b2)
    y = a1 * (d2 * c3 - d3 * c2) - d1 * m2 + c1 * (a2 * d3 - a3 * d2)
    z = a1 * (b2 * d3 - b3 * d2) - b1 * (a2 * d3 - a3 * d2) + d1 * m3
    return (x / det, y / det, z / det)


def halfspace_intersection_oracle(planes):
    """Vertex set of an intersection of halfspaces by plane-triple solves."""
    pts = set()
    for p1, p2, p3 in combinations(planes, 3):
        cand = solve3(p1, p2, p3)
        if cand is not None and all(plane_eval(pl, cand) <= 0 for pl in planes):
            pts.add(cand)
    return pts


def volume_oracle(planes):
    pts = halfspace_intersection_oracle(planes)
    if len(pts) < 4:
        return Q(0)
    try:
        return volume(convex_hull3(pts))
    except Degenerate:
        return Q(0)
