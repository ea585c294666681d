"""Exact 3-D convex geometry: polyhedra, clipping, sections, prisms.

A ``ConvexPolyhedron`` stores vertices plus face cycles (CCW viewed from
outside) and caches outward face planes.  The clipping kernel keeps the face
structure exact through halfspace cuts, which powers polyhedron
intersection, slabs and prisms.  ``z_area_profile`` sweeps the vertex levels
once and returns the exact piecewise-quadratic horizontal cross-section
area, from which the maximum cross-section is read off per level interval.

Everything is generic over the scalar type (rationals or jets).
"""

from __future__ import annotations

from math import gcd

from .exactnum import Q, is_rational
from .geom2d import GeometryError, hull_chain


class Degenerate(GeometryError):
    pass


class EmptySlab(GeometryError):
    pass


class Degenerate3:
    """A polyhedron intersection that collapsed to dimension <= 2."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        self.vertices = tuple(dict.fromkeys(vertices))

    @property
    def kind(self):
        n = len(self.vertices)
        return "point" if n == 1 else "segment" if n == 2 else "polygon"

    def __repr__(self):
        return f"Degenerate3({self.kind}, {len(self.vertices)} vertices)"


def dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def sub3(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def add3(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def scale3(a, s):
    return (a[0] * s, a[1] * s, a[2] * s)


def plane_eval(plane, p):
    a, b, c, d = plane
    return a * p[0] + b * p[1] + c * p[2] - d


def plane_of_cycle(pts):
    """Outward plane of a planar CCW cycle: Newell normal plus offset."""
    nx = ny = nz = 0
    n = len(pts)
    for i in range(n):
        x0, y0, z0 = pts[i]
        x1, y1, z1 = pts[(i + 1) % n]
        nx += (y0 - y1) * (z0 + z1)
        ny += (z0 - z1) * (x0 + x1)
        nz += (x0 - x1) * (y0 + y1)
    if nx == 0 and ny == 0 and nz == 0:
        raise Degenerate("cycle has no area")
    d = nx * pts[0][0] + ny * pts[0][1] + nz * pts[0][2]
    return (nx, ny, nz, d)


def canonical_plane(plane):
    """Scale a rational plane to coprime integers with positive lead."""
    a, b, c, d = (Q(v) for v in plane)
    m = a.denominator * b.denominator * c.denominator * d.denominator
    ia, ib, ic, idd = int(a * m), int(b * m), int(c * m), int(d * m)
    g = gcd(gcd(abs(ia), abs(ib)), gcd(abs(ic), abs(idd))) or 1
    ia, ib, ic, idd = ia // g, ib // g, ic // g, idd // g
    for lead in (ia, ib, ic):
        if lead != 0:
            if lead < 0:
                ia, ib, ic, idd = -ia, -ib, -ic, -idd
            break
    return (ia, ib, ic, idd)


def plane_basis(normal):
    """Two independent in-plane directions (u, v) with u x v ~ normal."""
    a, b, c = normal
    if a != 0 or b != 0:
        u = (-b, a, 0)
    else:
        u = (1, 0, 0)
    v = cross3(normal, u)
    return u, v


class ConvexPolyhedron:
    """Convex polyhedron as vertices plus CCW-from-outside face cycles."""

    __slots__ = ("vertices", "faces", "_planes", "_edges")

    def __init__(self, vertices, faces, planes=None, validate=False):
        self.vertices = tuple(tuple(v) for v in vertices)
        self.faces = tuple(tuple(f) for f in faces)
        self._planes = list(planes) if planes is not None else None
        self._edges = None
        if validate:
            self.validate()

    @property
    def planes(self):
        if self._planes is None:
            self._planes = [
                plane_of_cycle([self.vertices[i] for i in f]) for f in self.faces
            ]
        return self._planes

    def edge_list(self):
        """Undirected edges as (i, j, face_a, face_b) with i < j."""
        if self._edges is None:
            seen = {}
            for fi, f in enumerate(self.faces):
                n = len(f)
                for k in range(n):
                    a, b = f[k], f[(k + 1) % n]
                    key = (a, b) if a < b else (b, a)
                    if key in seen:
                        seen[key].append(fi)
                    else:
                        seen[key] = [fi]
            self._edges = [
                (i, j, fs[0], fs[1] if len(fs) > 1 else fs[0])
                for (i, j), fs in seen.items()
            ]
        return self._edges

    def z_range(self):
        zs = [v[2] for v in self.vertices]
        return min(zs), max(zs)

    def z_levels(self):
        return sorted(set(v[2] for v in self.vertices))

    def translate(self, t):
        verts = [add3(v, t) for v in self.vertices]
        planes = None
        if self._planes is not None:
            planes = [
                (a, b, c, d + a * t[0] + b * t[1] + c * t[2])
                for (a, b, c, d) in self._planes
            ]
        return ConvexPolyhedron(verts, self.faces, planes)

    def contains(self, p, strict=False):
        for pl in self.planes:
            v = plane_eval(pl, p)
            if v > 0 or (strict and v == 0):
                return False
        return True

    def interior_point(self):
        n = len(self.vertices)
        sx = sum(v[0] for v in self.vertices)
        sy = sum(v[1] for v in self.vertices)
        sz = sum(v[2] for v in self.vertices)
        return (sx / Q(n), sy / Q(n), sz / Q(n))

    def support(self, d):
        return max(dot3(d, v) for v in self.vertices)

    def __repr__(self):
        return f"ConvexPolyhedron({len(self.vertices)} vertices, {len(self.faces)} faces)"

    def validate(self):
        V, F = len(self.vertices), len(self.faces)
        if V < 4 or F < 4:
            raise Degenerate("not a solid")
        E = len(self.edge_list())
        if V - E + F != 2:
            raise GeometryError(f"Euler check failed: V={V} E={E} F={F}")
        counts = {}
        for f in self.faces:
            for k in range(len(f)):
                a, b = f[k], f[(k + 1) % len(f)]
                key = (a, b) if a < b else (b, a)
                counts[key] = counts.get(key, 0) + 1
        if any(c != 2 for c in counts.values()):
            raise GeometryError("every edge must be shared by exactly 2 faces")
        for f, pl in zip(self.faces, self.planes):
            for i in f:
                if plane_eval(pl, self.vertices[i]) != 0:
                    raise GeometryError("face cycle is not planar")
        for pl in self.planes:
            if any(plane_eval(pl, v) > 0 for v in self.vertices):
                raise GeometryError("a vertex lies outside a face plane")
        return self


def volume(P: ConvexPolyhedron):
    """Exact volume via the divergence theorem over face fans."""
    total = 0
    for f in P.faces:
        pts = [P.vertices[i] for i in f]
        a = pts[0]
        for k in range(1, len(pts) - 1):
            b, c = pts[k], pts[k + 1]
            total += dot3(a, cross3(b, c))
    return total / Q(6)


def clip_halfspace(P, plane):
    """P intersected with {a*x+b*y+c*z <= d}.

    Returns a ConvexPolyhedron, a Degenerate3 (flat piece), or None.
    The unchanged polyhedron is returned as-is when no vertex is cut.
    """
    verts = P.vertices
    vals = [plane_eval(plane, v) for v in verts]
    if all(v <= 0 for v in vals):
        return P
    if all(v >= 0 for v in vals):
        on = [verts[i] for i, v in enumerate(vals) if v == 0]
        return Degenerate3(on) if on else None

    out_verts = []
    index_of = {}

    def emit(pt):
        k = index_of.get(pt)
        if k is None:
            k = len(out_verts)
            index_of[pt] = k
            out_verts.append(pt)
        return k

    cut_memo = {}

    def cut_point(i, j):
        key = (i, j) if i < j else (j, i)
        pt = cut_memo.get(key)
        if pt is None:
            vi, vj = vals[i], vals[j]
            t = vi / (vi - vj)
            A, B = verts[i], verts[j]
            pt = (
                A[0] + t * (B[0] - A[0]),
                A[1] + t * (B[1] - A[1]),
                A[2] + t * (B[2] - A[2]),
            )
            cut_memo[key] = pt
        return pt

    new_faces = []
    new_planes = []
    bridges = {}
    for f, fpl in zip(P.faces, P.planes):
        n = len(f)
        cycle = []
        for k in range(n):
            i, j = f[k], f[(k + 1) % n]
            if vals[i] <= 0:
                cycle.append(verts[i])
            if (vals[i] < 0 < vals[j]) or (vals[j] < 0 < vals[i]):
                cycle.append(cut_point(i, j))
        dedup = []
        for p in cycle:
            if not dedup or p != dedup[-1]:
                dedup.append(p)
        if len(dedup) > 1 and dedup[0] == dedup[-1]:
            dedup.pop()
        if len(dedup) < 3:
            continue
        on_flags = [plane_eval(plane, p) == 0 for p in dedup]
        if all(on_flags):
            continue  # face lies in the cut plane; cap replaces it
        m = len(dedup)
        for k in range(m):
            if on_flags[k] and on_flags[(k + 1) % m]:
                bridges[dedup[k]] = dedup[(k + 1) % m]
        new_faces.append([emit(p) for p in dedup])
        new_planes.append(fpl)

    if len(bridges) >= 3:
        start = next(iter(bridges))
        cap = [start]
        cur = bridges[start]
        while cur != start and len(cap) <= len(bridges):
            cap.append(cur)
            cur = bridges.get(cur)
            if cur is None:
                break
        if cur == start and len(cap) >= 3:
            cap_plane = plane_of_cycle(cap)
            a, b, c, _ = plane
            if cap_plane[0] * a + cap_plane[1] * b + cap_plane[2] * c < 0:
                cap.reverse()
            new_faces.append([emit(p) for p in cap])
            new_planes.append(plane)

    if len(out_verts) < 4 or len(new_faces) < 4:
        return Degenerate3(out_verts) if out_verts else None
    return ConvexPolyhedron(out_verts, new_faces, new_planes)


def clip_many(P, planes):
    for pl in planes:
        P = clip_halfspace(P, pl)
        if P is None or isinstance(P, Degenerate3):
            return P
    return P


def intersect_polyhedra(A, B):
    """Exact A intersect B: polyhedron, flagged flat piece, or None."""
    return clip_many(A, B.planes)


def slab(P, z0, z1):
    """P clipped to z in [z0, z1]; raises EmptySlab without interior overlap."""
    if not z0 < z1:
        raise EmptySlab("need z0 < z1")
    lo, hi = P.z_range()
    if not (z0 < hi and z1 > lo):
        raise EmptySlab("slab misses the polyhedron interior")
    out = clip_many(P, [(0, 0, 1, z1), (0, 0, -1, -z0)])
    if out is None or isinstance(out, Degenerate3):
        raise EmptySlab("slab misses the polyhedron interior")
    return out


def cross_section_chain(P, z):
    """Raw CCW 2-D chain of the section at height z ([] when empty)."""
    pts = []
    verts = P.vertices
    for v in verts:
        if v[2] == z:
            pts.append((v[0], v[1]))
    for i, j, _, _ in P.edge_list():
        zi, zj = verts[i][2], verts[j][2]
        if (zi < z < zj) or (zj < z < zi):
            t = (z - zi) / (zj - zi)
            A, B = verts[i], verts[j]
            pts.append((A[0] + t * (B[0] - A[0]), A[1] + t * (B[1] - A[1])))
    if not pts:
        return []
    return hull_chain(pts)


def cross_section(P, z):
    """Public section: ConvexPolygon | Degenerate2 | None."""
    from .geom2d import ConvexPolygon, Degenerate2

    chain = cross_section_chain(P, z)
    if not chain:
        return None
    if len(chain) < 3:
        return Degenerate2(chain)
    return ConvexPolygon(chain, _trusted=True)


def plane_section(P, plane):
    """Ordered 3-D vertices of P cut by a plane ([] when empty)."""
    a, b, c, d = plane
    verts = P.vertices
    vals = [plane_eval(plane, v) for v in verts]
    pts = [verts[i] for i, v in enumerate(vals) if v == 0]
    for i, j, _, _ in P.edge_list():
        vi, vj = vals[i], vals[j]
        if (vi < 0 < vj) or (vj < 0 < vi):
            t = vi / (vi - vj)
            A, B = verts[i], verts[j]
            pts.append(
                (
                    A[0] + t * (B[0] - A[0]),
                    A[1] + t * (B[1] - A[1]),
                    A[2] + t * (B[2] - A[2]),
                )
            )
    if not pts:
        return []
    u, v = plane_basis((a, b, c))
    planar = {}
    for p in pts:
        planar.setdefault((dot3(u, p), dot3(v, p)), p)
    chain = hull_chain(list(planar))
    return [planar[q] for q in chain]


def prism(Q2, line_point, line_dir, t_lo, t_hi):
    """{(x, y, t) : (x, y) in Q2 + p_xy + v_xy * t, t in [t_lo, t_hi]}.

    ``line_point``/``line_dir`` give the 2-D offset path (p + v*t); the
    third coordinate of the result is the parameter t itself.
    """
    if not t_lo < t_hi:
        raise GeometryError("need t_lo < t_hi")
    qv = list(Q2.vertices) if hasattr(Q2, "vertices") else list(Q2)
    px, py = line_point[0], line_point[1]
    vx, vy = line_dir[0], line_dir[1]
    n = len(qv)
    bot = [(x + px + vx * t_lo, y + py + vy * t_lo, t_lo) for (x, y) in qv]
    top = [(x + px + vx * t_hi, y + py + vy * t_hi, t_hi) for (x, y) in qv]
    verts = bot + top
    faces = [list(range(n - 1, -1, -1)), list(range(n, 2 * n))]
    for i in range(n):
        j = (i + 1) % n
        faces.append([i, j, n + j, n + i])
    return ConvexPolyhedron(verts, faces)


def prism_halfspaces(Q2, line_point, line_dir):
    """Side halfspaces of the (unbounded) sheared prism over Q2."""
    px, py = line_point[0], line_point[1]
    vx, vy = line_dir[0], line_dir[1]
    out = []
    for a, b, c in Q2.edge_halfplanes() if hasattr(Q2, "edge_halfplanes") else Q2:
        # a*(x - px - vx t) + b*(y - py - vy t) <= c
        out.append((a, b, -(a * vx + b * vy), c + a * px + b * py))
    return out


def z_area_profile(P):
    """Exact cross-section area as a piecewise quadratic in z.

    Returns [(z_lo, z_hi, A2, A1, A0)] over consecutive vertex levels with
    area(z) = A2*z^2 + A1*z + A0 on [z_lo, z_hi].  Empty for flat input.
    """
    levels = P.z_levels()
    if len(levels) < 2:
        return []
    verts = P.vertices
    edges = P.edge_list()
    spans = [[] for _ in range(len(levels) - 1)]
    level_index = {z: k for k, z in enumerate(levels)}
    import bisect

    for ei, (i, j, fa, fb) in enumerate(edges):
        zi, zj = verts[i][2], verts[j][2]
        if zi == zj:
            continue
        lo, hi = (zi, zj) if zi < zj else (zj, zi)
        k0 = level_index.get(lo)
        k1 = level_index.get(hi)
        if k0 is None:
            k0 = bisect.bisect_left(levels, lo)
        if k1 is None:
            k1 = bisect.bisect_left(levels, hi)
        for k in range(k0, k1):
            spans[k].append(ei)
    out = []
    for k in range(len(levels) - 1):
        z_lo, z_hi = levels[k], levels[k + 1]
        cross_edges = spans[k]
        if len(cross_edges) < 3:
            continue
        by_face = {}
        for ei in cross_edges:
            i, j, fa, fb = edges[ei]
            by_face.setdefault(fa, []).append(ei)
            if fb != fa:
                by_face.setdefault(fb, []).append(ei)
        if any(len(v) != 2 for v in by_face.values()):
            raise GeometryError("non-convex section structure")
        start = cross_edges[0]
        order = [start]
        prev_face = edges[start][3]
        cur = start
        while True:
            i, j, fa, fb = edges[cur]
            f = fa if fa != prev_face else fb
            pair = by_face[f]
            nxt = pair[0] if pair[1] == cur else pair[1]
            if nxt == start:
                break
            order.append(nxt)
            prev_face = f
            cur = nxt
            if len(order) > len(cross_edges):
                raise GeometryError("section walk failed to close")
        lin = []
        for ei in order:
            i, j, _, _ = edges[ei]
            A, B = verts[i], verts[j]
            dz = B[2] - A[2]
            dx = (B[0] - A[0]) / dz
            dy = (B[1] - A[1]) / dz
            lin.append((A[0] - dx * A[2], dx, A[1] - dy * A[2], dy))
        c2 = c1 = c0 = 0
        m = len(lin)
        for t in range(m):
            px_i, dx_i, py_i, dy_i = lin[t]
            px_j, dx_j, py_j, dy_j = lin[(t + 1) % m]
            c2 += dx_i * dy_j - dx_j * dy_i
            c1 += px_i * dy_j + dx_i * py_j - px_j * dy_i - dx_j * py_i
            c0 += px_i * py_j - px_j * py_i
        zm = (z_lo + z_hi) / Q(2)
        if (c2 * zm + c1) * zm + c0 < 0:
            c2, c1, c0 = -c2, -c1, -c0
        out.append((z_lo, z_hi, c2 / Q(2), c1 / Q(2), c0 / Q(2)))
    return out


def max_quadratic_on_interval(a2, a1, a0, lo, hi):
    """(argmax, value) of a2*t^2+a1*t+a0 on [lo, hi], ties to smaller t."""
    best_t, best_v = lo, (a2 * lo + a1) * lo + a0
    v_hi = (a2 * hi + a1) * hi + a0
    if v_hi > best_v:
        best_t, best_v = hi, v_hi
    if a2 < 0:
        tv = -a1 / (2 * a2)
        if lo < tv < hi:
            v = (a2 * tv + a1) * tv + a0
            if v > best_v:
                best_t, best_v = tv, v
    return best_t, best_v


def max_cross_section(P):
    """(z*, area*) maximizing the horizontal section area, ties to low z."""
    profile = z_area_profile(P)
    if not profile:
        zs = P.z_levels()
        if not zs:
            raise Degenerate("empty polyhedron")
        from .geom2d import shoelace2

        chain = cross_section_chain(P, zs[0])
        area = shoelace2(chain) / 2 if len(chain) >= 3 else Q(0)
        return zs[0], area
    best_t = best_v = None
    for z_lo, z_hi, a2, a1, a0 in profile:
        t, v = max_quadratic_on_interval(a2, a1, a0, z_lo, z_hi)
        if best_v is None or v > best_v or (v == best_v and t < best_t):
            best_t, best_v = t, v
    return best_t, best_v


def area_at(P, z):
    from .geom2d import shoelace2

    chain = cross_section_chain(P, z)
    return shoelace2(chain) / 2 if len(chain) >= 3 else Q(0)


def convex_hull3(points):
    """Exact hull with coplanar faces merged (desk-scale algorithm).

    Candidate planes come from point triples; a plane is a face plane when
    every input point lies on its inner side.  Raises Degenerate for
    coplanar input.
    """
    pts = sorted(set(tuple(p) for p in points))
    n = len(pts)
    if n < 4:
        raise Degenerate("need at least 4 points")
    kept = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                nrm = cross3(sub3(pts[j], pts[i]), sub3(pts[k], pts[i]))
                if nrm == (0, 0, 0):
                    continue
                d = dot3(nrm, pts[i])
                key = canonical_plane((nrm[0], nrm[1], nrm[2], d))
                if key in kept or (-key[0], -key[1], -key[2], -key[3]) in kept:
                    continue
                vals = [dot3(nrm, p) - d for p in pts]
                if all(v <= 0 for v in vals):
                    kept[key] = (nrm[0], nrm[1], nrm[2], d)
                elif all(v >= 0 for v in vals):
                    kept[key] = (-nrm[0], -nrm[1], -nrm[2], -d)
    if not kept:
        raise Degenerate("all points coplanar")
    planes = list(kept.values())
    faces_pts = []
    for pl in planes:
        on = [p for p in pts if plane_eval(pl, p) == 0]
        u, v = plane_basis(pl[:3])
        planar = {}
        for p in on:
            planar.setdefault((dot3(u, p), dot3(v, p)), p)
        chain = hull_chain(list(planar))
        if len(chain) < 3:
            continue
        faces_pts.append(([planar[q] for q in chain], pl))
    vert_index = {}
    verts = []
    faces = []
    fplanes = []
    for cyc, pl in faces_pts:
        idx = []
        for p in cyc:
            k = vert_index.get(p)
            if k is None:
                k = len(verts)
                vert_index[p] = k
                verts.append(p)
            idx.append(k)
        faces.append(idx)
        fplanes.append(pl)
    if len(verts) < 4:
        raise Degenerate("all points coplanar")
    return ConvexPolyhedron(verts, faces, fplanes, validate=True)


def _angle_half(d):
    # 0 for angle in [0, pi), 1 for [pi, 2*pi)
    return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1


def _dir_less(d1, d2):
    h1, h2 = _angle_half(d1), _angle_half(d2)
    if h1 != h2:
        return h1 < h2
    cr = d1[0] * d2[1] - d1[1] * d2[0]
    return cr > 0


def hull_drum(bot_chain, z0, top_chain, z1):
    """Hull of two horizontal convex sections (chains may be 1-2 points).

    Linear-time construction used for the support rebuild and the cone:
    side faces come from merging the two edge-direction sequences.
    """
    if not z0 < z1:
        raise GeometryError("need z0 < z1")
    bot = list(bot_chain)
    top = list(top_chain)
    if len(bot) < 1 or len(top) < 1 or (len(bot) < 3 and len(top) < 3):
        raise Degenerate("sections too small for a solid drum")

    def ring(chain):
        if len(chain) == 1:
            return [], chain
        if len(chain) == 2:
            a, b = chain
            return [(a, b), (b, a)], chain
        n = len(chain)
        return [(chain[i], chain[(i + 1) % n]) for i in range(n)], chain

    bot_edges, _ = ring(bot)
    top_edges, _ = ring(top)

    def start_index(chain):
        return min(range(len(chain)), key=lambda i: (chain[i][1], chain[i][0]))

    bi = start_index(bot)
    ti = start_index(top)
    nb, nt = len(bot_edges), len(top_edges)
    faces_pts = []
    a = b = 0
    cur_b, cur_t = bi, ti
    while a < nb or b < nt:
        eb = bot_edges[(bi + a) % nb] if nb and a < nb else None
        et = top_edges[(ti + b) % nt] if nt and b < nt else None
        take_b = take_t = False
        if eb is None:
            take_t = True
        elif et is None:
            take_b = True
        else:
            db = (eb[1][0] - eb[0][0], eb[1][1] - eb[0][1])
            dt = (et[1][0] - et[0][0], et[1][1] - et[0][1])
            if _dir_less(db, dt):
                take_b = True
            elif _dir_less(dt, db):
                take_t = True
            else:
                take_b = take_t = True
        pb = bot[cur_b % len(bot)]
        pt = top[cur_t % len(top)]
        cyc = []
        if take_b and take_t:
            qb = bot[(cur_b + 1) % len(bot)]
            qt = top[(cur_t + 1) % len(top)]
            cyc = [(pb[0], pb[1], z0), (qb[0], qb[1], z0), (qt[0], qt[1], z1), (pt[0], pt[1], z1)]
            cur_b += 1
            cur_t += 1
            a += 1
            b += 1
        elif take_b:
            qb = bot[(cur_b + 1) % len(bot)]
            cyc = [(pb[0], pb[1], z0), (qb[0], qb[1], z0), (pt[0], pt[1], z1)]
            cur_b += 1
            a += 1
        else:
            qt = top[(cur_t + 1) % len(top)]
            cyc = [(pb[0], pb[1], z0), (qt[0], qt[1], z1), (pt[0], pt[1], z1)]
            cur_t += 1
            b += 1
        dedup = list(dict.fromkeys(cyc))
        if len(dedup) >= 3:
            faces_pts.append(dedup)
    if len(bot) >= 3:
        faces_pts.append([(p[0], p[1], z0) for p in reversed(bot)])
    if len(top) >= 3:
        faces_pts.append([(p[0], p[1], z1) for p in top])

    all_pts = [(p[0], p[1], z0) for p in bot] + [(p[0], p[1], z1) for p in top]
    cx = sum(p[0] for p in all_pts) / Q(len(all_pts))
    cy = sum(p[1] for p in all_pts) / Q(len(all_pts))
    cz = (z0 + z1) / Q(2)
    centroid = (cx, cy, cz)
    vert_index = {}
    verts = []
    faces = []
    planes = []
    for cyc in faces_pts:
        pl = plane_of_cycle(cyc)
        if plane_eval(pl, centroid) > 0:
            cyc = list(reversed(cyc))
            pl = (-pl[0], -pl[1], -pl[2], -pl[3])
        idx = []
        for p in cyc:
            k = vert_index.get(p)
            if k is None:
                k = len(verts)
                vert_index[p] = k
                verts.append(p)
            idx.append(k)
        faces.append(idx)
        planes.append(pl)
    return ConvexPolyhedron(verts, faces, planes)


def cube(side=1, at=(0, 0, 0)):
    """Axis-aligned cube helper used across tests and fixtures."""
    s = Q(side)
    x, y, z = (Q(at[0]), Q(at[1]), Q(at[2]))
    verts = [
        (x, y, z), (x + s, y, z), (x + s, y + s, z), (x, y + s, z),
        (x, y, z + s), (x + s, y, z + s), (x + s, y + s, z + s), (x, y + s, z + s),
    ]
    faces = [
        [3, 2, 1, 0], [4, 5, 6, 7],
        [0, 1, 5, 4], [1, 2, 6, 5], [2, 3, 7, 6], [3, 0, 4, 7],
    ]
    return ConvexPolyhedron(verts, faces)
