import random

import pytest

from convexmatch.exactnum import Q
from convexmatch.geom2d import (
    AllCollinear,
    ConvexPolygon,
    Degenerate2,
    HalfPlane,
    NonConvexInput,
    clip_halfplane,
    convex_hull2,
    hull_chain,
    intersect_convex,
    line_intersection,
    line_through,
    minkowski_sum,
    polygon,
    polygon_area,
    region_area,
)


def square(side=1, at=(0, 0)):
    s, (x, y) = Q(side), (Q(at[0]), Q(at[1]))
    return polygon([(x, y), (x + s, y), (x + s, y + s), (x, y + s)])


def rand_point(rng, bound=12, den=8):
    return (Q(rng.randint(-bound, bound), rng.randint(1, den)),
            Q(rng.randint(-bound, bound), rng.randint(1, den)))


def brute_minkowski(p, q):
    return convex_hull2([(a[0] + b[0], a[1] + b[1]) for a in p for b in q])


def brute_hull_halfplane(points):
    """O(n^3) hull oracle: a point is a hull vertex iff some directed line
    through it keeps all other points strictly on one side or on the line
    behind it."""
    pts = sorted(set(points))
    hull = set()
    from convexmatch.geom2d import cross
    for a in pts:
        for b in pts:
            if a == b:
                continue
            if all(cross(a, b, c) <= 0 for c in pts):
                hull.add(a)
                hull.add(b)
    return hull


def test_polygon_area_examples():
    tri = polygon([(0, 0), (1, 0), (0, 1)])
    assert polygon_area(tri) == Q(1, 2)
    assert polygon_area(square()) == 1
    # decomposition oracle: 2x2 square plus two unit-area spikes
    hexa = polygon([(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)])
    assert polygon_area(hexa) == 6


def test_polygon_validation():
    with pytest.raises(NonConvexInput):
        polygon([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])  # reflex at (1,1)
    with pytest.raises(NonConvexInput):
        polygon([(0, 0), (1, 0)])
    # collinear vertices are merged at construction
    p = polygon([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])
    assert len(p) == 4
    # clockwise input is reoriented
    p = polygon([(0, 0), (0, 1), (1, 1), (1, 0)])
    assert p.area == 1


def test_clip_halfplane_examples():
    sq = square()
    r = clip_halfplane(sq, HalfPlane(1, 0, Q(1, 2)))
    assert isinstance(r, ConvexPolygon) and r.area == Q(1, 2)
    assert clip_halfplane(sq, HalfPlane(1, 0, 2)) == sq
    r = clip_halfplane(sq, HalfPlane(1, 0, 0))
    assert isinstance(r, Degenerate2) and r.kind == "segment"
    assert set(r.vertices) == {(0, 0), (0, 1)}
    assert clip_halfplane(sq, HalfPlane(1, 0, -1)) is None


def test_clip_idempotent():
    rng = random.Random(5)
    for _ in range(50):
        poly = convex_hull2([rand_point(rng) for _ in range(8)])
        h = HalfPlane(Q(rng.randint(-3, 3)) or Q(1), Q(rng.randint(-3, 3)),
                      Q(rng.randint(-4, 4)))
        once = clip_halfplane(poly, h)
        if isinstance(once, ConvexPolygon):
            assert clip_halfplane(once, h) == once


def test_intersect_convex_examples():
    sq = square()
    assert intersect_convex(sq, sq) == sq
    shifted = sq.translate((Q(1, 2), Q(0)))
    assert region_area(intersect_convex(sq, shifted)) == Q(1, 2)
    diamond = polygon([(Q(1, 2), 0), (1, Q(1, 2)), (Q(1, 2), 1), (0, Q(1, 2))])
    r = intersect_convex(sq, diamond)
    assert r == diamond
    assert region_area(r) == Q(1, 2)


def test_intersect_commutative_and_bounded():
    rng = random.Random(9)
    for _ in range(60):
        p = convex_hull2([rand_point(rng) for _ in range(7)])
        q = convex_hull2([rand_point(rng) for _ in range(7)])
        pq = intersect_convex(p, q)
        qp = intersect_convex(q, p)
        a = region_area(pq)
        assert a == region_area(qp)
        assert a <= min(p.area, q.area)
        if pq is not None and not isinstance(pq, Degenerate2):
            assert set(pq.vertices) == set(qp.vertices)
        if a == p.area:
            assert all(q.contains(v) for v in p.vertices)


def test_minkowski_examples():
    sq = square()
    assert sq.translate((3, 4)).vertices == tuple((x + 3, y + 4) for x, y in sq.vertices)
    big = minkowski_sum(sq, sq)
    assert big.area == 4
    assert max(x for x, _ in big.vertices) == 2
    tri = polygon([(0, 0), (1, 0), (0, 1)])
    hexa = minkowski_sum(tri, tri.negate())
    assert len(hexa) == 6
    assert hexa.area == 3
    assert hexa == brute_minkowski(tri, tri.negate())


def test_minkowski_support_additive_and_brute():
    rng = random.Random(21)
    for _ in range(40):
        p = convex_hull2([rand_point(rng) for _ in range(6)])
        q = convex_hull2([rand_point(rng) for _ in range(6)])
        s = minkowski_sum(p, q)
        assert s == brute_minkowski(p, q)
        for _ in range(8):
            d = (Q(rng.randint(-9, 9)), Q(rng.randint(-9, 9)))
            if d == (0, 0):
                continue
            assert s.support(d) == p.support(d) + q.support(d)


def test_convex_hull2_examples():
    sq_pts = [(0, 0), (1, 0), (1, 1), (0, 1), (Q(1, 2), Q(1, 2))]
    assert convex_hull2(sq_pts) == square()
    tri = convex_hull2([(0, 0), (2, 1), (1, 3)])
    assert len(tri) == 3
    with pytest.raises(AllCollinear):
        convex_hull2([(0, 0), (1, 1), (2, 2), (3, 3)])


def test_convex_hull2_against_halfplane_oracle():
    rng = random.Random(33)
    for _ in range(20):
        pts = [rand_point(rng) for _ in range(20)]
        try:
            h = convex_hull2(pts)
        except AllCollinear:
            continue
        oracle = brute_hull_halfplane(pts)
        assert set(h.vertices) <= oracle
        # every point lies inside the hull
        assert all(h.contains(p) for p in pts)


def test_line_helpers():
    l1 = line_through((0, 0), (2, 2))
    l2 = line_through((0, 2), (2, 0))
    assert line_intersection(l1, l2) == (1, 1)
    assert l1.eval_at((1, 1)) == 0
    assert hull_chain([(0, 0), (1, 1)]) == [(0, 0), (1, 1)]
