"""Search machinery: weighted medians, sorted-matrix selection, verified
(1/2)-cuttings, and prune-and-search over families of parallel lines.

The prune engine locates a hidden point relative to every line in n families
of parallel lines using an oracle that reports the side of any probe line.
Each round probes O(1) lines chosen by weighted-median balancing so that at
least 1/18 of the still-active lines are eliminated; windows of undecided
indices per family are maintained against a small feasible region.
"""

from __future__ import annotations

import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

from .exactnum import Q
from .geom2d import Line2, clip_chain, shoelace2
from .geom3d import ConvexPolyhedron, clip_halfspace, Degenerate3, volume


class KernelError(Exception):
    pass


class BadWeights(KernelError):
    pass


class InconsistentOracle(KernelError):
    pass


class CuttingFailed(KernelError):
    pass


# Oracle outcomes: the side of the hidden point relative to an oriented
# line a*x + b*y = c ("right" means a*x + b*y > c).
LEFT, RIGHT, ON = "left", "right", "on"


def side_of_point(line: Line2, p) -> str:
    v = line.eval_at(p)
    return ON if v == 0 else (LEFT if v < 0 else RIGHT)


# ---------------------------------------------------------------------------
# weighted median


def _select_by_weight(pairs, need, total):
    """Smallest value whose cumulative weight reaches ``need``."""
    while True:
        if len(pairs) <= 8:
            acc = 0
            for v, w in sorted(pairs):
                acc += w
                if acc >= need:
                    return v
            raise KernelError("weight accounting failed")
        pivot = _mom_value([v for v, _ in pairs])
        lt = eq = 0
        for v, w in pairs:
            if v < pivot:
                lt += w
            elif v == pivot:
                eq += w
        if lt >= need:
            pairs = [(v, w) for v, w in pairs if v < pivot]
        elif lt + eq >= need:
            return pivot
        else:
            need -= lt + eq
            pairs = [(v, w) for v, w in pairs if v > pivot]


def _mom_value(values):
    """Median-of-medians pivot (exact comparisons, any ordered scalar)."""
    if len(values) <= 5:
        return sorted(values)[(len(values) - 1) // 2]
    meds = [
        sorted(values[i : i + 5])[(min(5, len(values) - i) - 1) // 2]
        for i in range(0, len(values), 5)
    ]
    return _mom_value(meds)


@dataclass(frozen=True)
class WeightedValue:
    value: object
    weight: object


def weighted_median(items):
    """Lower weighted median of distinct values with weights summing to 1."""
    if not items:
        raise BadWeights("empty input")
    pairs = [(it.value, it.weight) for it in items]
    total = 0
    for _, w in pairs:
        if w <= 0:
            raise BadWeights("weights must be positive")
        total += w
    if total != 1:
        raise BadWeights("weights must sum to 1")
    return _select_by_weight(pairs, Q(1, 2), Q(1))


# ---------------------------------------------------------------------------
# sorted-matrix selection


class SortedMatrixView:
    """Access-counted view of a matrix with nondecreasing rows and columns.

    ``entry(i, j)`` is called at most once per cell; repeats are memoized
    and the access counter records distinct cell reads.
    """

    def __init__(self, rows: int, cols: int, entry):
        self.rows = rows
        self.cols = cols
        self._entry = entry
        self._memo = {}
        self.access_count = 0

    def at(self, i, j):
        key = (i, j)
        v = self._memo.get(key)
        if v is None and key not in self._memo:
            v = self._entry(i, j)
            self._memo[key] = v
            self.access_count += 1
        return v


def _count_boundaries(M, pivot, strict):
    """Per-row counts of entries < pivot (strict) or <= pivot."""
    counts = [0] * M.rows
    j = M.cols
    for i in range(M.rows):
        while j > 0:
            v = M.at(i, j - 1)
            if (v >= pivot) if strict else (v > pivot):
                j -= 1
            else:
                break
        counts[i] = j
    return counts


def sorted_matrix_select(M: SortedMatrixView, k: int):
    """k-th smallest entry (1-based) by iterative weighted-median halving."""
    if not 1 <= k <= M.rows * M.cols:
        raise KernelError("rank out of range")
    lo = [0] * M.rows
    hi = [M.cols] * M.rows
    while True:
        ncand = sum(h - l for l, h in zip(lo, hi))
        if ncand <= max(16, 2 * (M.rows + M.cols)):
            break
        mids = [
            (M.at(i, (lo[i] + hi[i]) // 2), hi[i] - lo[i])
            for i in range(M.rows)
            if hi[i] > lo[i]
        ]
        total = sum(w for _, w in mids)
        pivot = _select_by_weight(mids, (total + 1) // 2, total)
        lt_rows = _count_boundaries(M, pivot, strict=True)
        le_rows = _count_boundaries(M, pivot, strict=False)
        n_lt, n_le = sum(lt_rows), sum(le_rows)
        if n_lt < k <= n_le:
            return pivot
        if n_le < k:
            for i in range(M.rows):
                if le_rows[i] > lo[i]:
                    lo[i] = min(hi[i], le_rows[i])
        else:
            for i in range(M.rows):
                if lt_rows[i] < hi[i]:
                    hi[i] = max(lo[i], lt_rows[i])
    values = sorted(
        set(
            M.at(i, j)
            for i in range(M.rows)
            for j in range(lo[i], hi[i])
        )
    )
    a, b = 0, len(values) - 1
    while a < b:
        mid = (a + b) // 2
        v = values[mid]
        if sum(_count_boundaries(M, v, strict=False)) >= k:
            b = mid
        else:
            a = mid + 1
    v = values[a]
    if sum(_count_boundaries(M, v, strict=True)) >= k:
        raise InconsistentOracle("matrix is not sorted")
    return v


# ---------------------------------------------------------------------------
# 2-D feasible-region utilities (halfplanes as (a, b, c): a*x + b*y <= c)


def _solve2(c1, c2):
    a1, b1, d1 = c1
    a2, b2, d2 = c2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return ((d1 * b2 - d2 * b1) / det, (a1 * d2 - a2 * d1) / det)


def region_vertices(cons):
    pts = []
    n = len(cons)
    for i in range(n):
        for j in range(i + 1, n):
            p = _solve2(cons[i], cons[j])
            if p is None:
                continue
            if all(a * p[0] + b * p[1] <= c for a, b, c in cons):
                pts.append(p)
    return pts


def max_linear(cons, obj):
    """(max value, witness) of obj over the region; (None, ray) if unbounded.

    The region is assumed nonempty (it always contains the hidden point).
    """
    ox, oy = obj
    candidates = [(ox, oy)]
    for a, b, _ in cons:
        candidates.extend([(-b, a), (b, -a), (a, b), (-a, -b)])
    for d in candidates:
        if d == (0, 0):
            continue
        if ox * d[0] + oy * d[1] > 0 and all(
            a * d[0] + b * d[1] <= 0 for a, b, _ in cons
        ):
            return None, d
    best = None
    witness = None
    for p in region_vertices(cons):
        v = ox * p[0] + oy * p[1]
        if best is None or v > best:
            best, witness = v, p
    if best is None:
        # no vertex: the optimum sits on a constraint line parallel to obj
        for a, b, c in cons:
            if a * oy - b * ox == 0 and a * ox + b * oy > 0:
                dd = a * a + b * b
                p0 = (a * c / dd, b * c / dd)
                t_lo, t_hi = clip_line_params(cons, p0, (-b, a))
                t = _pick_param(t_lo, t_hi)
                p = (p0[0] - b * t, p0[1] + a * t)
                v = ox * p[0] + oy * p[1]
                if best is None or v < best:
                    best, witness = v, p
    if best is None:
        raise InconsistentOracle("feasible region lost")
    return best, witness


def clip_line_params(cons, p0, d):
    """Parameter interval of {p0 + t d} inside the region (None = infinite)."""
    t_lo = t_hi = None
    for a, b, c in cons:
        num = c - (a * p0[0] + b * p0[1])
        den = a * d[0] + b * d[1]
        if den == 0:
            if num < 0:
                raise InconsistentOracle("line misses the feasible region")
            continue
        t = num / den
        if den > 0:
            if t_hi is None or t < t_hi:
                t_hi = t
        else:
            if t_lo is None or t > t_lo:
                t_lo = t
    return t_lo, t_hi


def _pick_param(t_lo, t_hi):
    if t_lo is not None and t_hi is not None:
        return (t_lo + t_hi) / Q(2)
    if t_lo is not None:
        return t_lo + 1
    if t_hi is not None:
        return t_hi - 1
    return Q(0)


def region_interior_point(cons, span=None):
    """A point strictly inside the region (box-clipped when unbounded)."""
    if not cons:
        return (Q(0), Q(0))
    B = span if span is not None else 1
    for a, b, c in cons:
        B = max(B, abs(a), abs(b), abs(c))
    box = [(1, 0, 4 * B * B), (-1, 0, 4 * B * B), (0, 1, 4 * B * B), (0, -1, 4 * B * B)]
    pts = region_vertices(list(cons) + box)
    if not pts:
        raise InconsistentOracle("feasible region lost")
    n = len(pts)
    x = sum(p[0] for p in pts) / Q(n)
    y = sum(p[1] for p in pts) / Q(n)
    return (x, y)


def drop_redundant(cons):
    """Remove constraints whose removal leaves the region unchanged."""
    out = list(dict.fromkeys(cons))
    i = 0
    while i < len(out):
        rest = out[:i] + out[i + 1 :]
        if not rest:
            break
        a, b, c = out[i]
        v, _ = max_linear(rest, (a, b))
        if v is not None and v <= c:
            out.pop(i)
        else:
            i += 1
    return out


# ---------------------------------------------------------------------------
# prune-and-search over parallel-line families


@dataclass
class LineFamily:
    """Parallel lines a*x + b*y = c_j, c_j strictly increasing (left to
    right for the canonical a > 0).  Lines must not be parallel to the
    x-axis (a != 0); callers pre-shear their data when needed."""

    a: object
    b: object
    offsets: list
    id: int = 0

    @classmethod
    def from_lines(cls, lines, id=0):
        from math import gcd

        lines = [l if isinstance(l, Line2) else Line2(*l) for l in lines]
        fam_a = fam_b = None
        offs = []
        for l in lines:
            ia, ib = int(l.a * l.a.denominator), int(l.b * l.b.denominator)
            num = l.a.denominator * l.b.denominator
            ia, ib = int(l.a * num), int(l.b * num)
            g = gcd(abs(ia), abs(ib)) or 1
            da, db = Q(ia, g), Q(ib, g)
            c = l.c * num / g
            if da < 0 or (da == 0 and db < 0):
                da, db, c = -da, -db, -c
            if fam_a is None:
                fam_a, fam_b = da, db
            elif (da, db) != (fam_a, fam_b):
                raise KernelError("family lines are not parallel")
            offs.append(c)
        if fam_a == 0:
            raise KernelError("lines parallel to the x-axis are not allowed")
        if any(offs[i] >= offs[i + 1] for i in range(len(offs) - 1)):
            raise KernelError("family offsets must increase left to right")
        return cls(fam_a, fam_b, offs, id)

    def line(self, j):
        return Line2(self.a, self.b, self.offsets[j])

    def __len__(self):
        return len(self.offsets)


@dataclass
class FeasibleRegion2:
    """<= 4 halfplanes, or a segment of a probe line the point fell on."""

    constraints: list = field(default_factory=list)
    segment: tuple = None  # (p0, d, t_lo, t_hi) in segment mode

    @property
    def degenerate(self):
        return self.segment is not None


@dataclass
class PruneReport:
    """Positions of the hidden point relative to every family line.

    positions[i] is ('on', j) with 1-based j, or ('between', j, j+1) where
    j = 0 means left of the whole family and j = len means right sentinel.
    """

    positions: list
    oracle_calls: int
    rounds: list
    region: FeasibleRegion2
    point: tuple = None

    def to_jsonable(self):
        return {
            "positions": [list(p) for p in self.positions],
            "oracle_calls": self.oracle_calls,
            "rounds": [list(r) for r in self.rounds],
            "point": None if self.point is None else [str(c) for c in self.point],
        }


class _PruneState:
    def __init__(self, families, oracle):
        self.fams = families
        self.oracle = oracle
        self.lo = [0] * len(families)
        self.hi = [len(f) for f in families]
        self.cons = []
        self.calls = 0
        self.rounds = []
        self.on_hits = {}
        self.segment = None  # (p0, d, t_lo, t_hi)
        self.point = None

    def probe(self, a, b, c):
        out = self.oracle(Line2(a, b, c))
        self.calls += 1
        if out == LEFT:
            self.cons.append((a, b, c))
        elif out == RIGHT:
            self.cons.append((-a, -b, -c))
        return out

    def active(self):
        return sum(h - l for l, h in zip(self.lo, self.hi))

    def update_windows(self):
        for i, f in enumerate(self.fams):
            if self.segment is not None:
                mn, mx = self._segment_extent(f.a, f.b)
            else:
                v_max, _ = max_linear(self.cons, (f.a, f.b))
                v_min, _ = max_linear(self.cons, (-f.a, -f.b))
                mn = None if v_min is None else -v_min
                mx = v_max
            lo = 0 if mn is None else bisect_right(f.offsets, mn)
            hi = len(f) if mx is None else bisect_left(f.offsets, mx)
            self.lo[i] = max(self.lo[i], lo)
            self.hi[i] = min(self.hi[i], hi)
            if self.lo[i] > self.hi[i]:
                self.lo[i] = self.hi[i]

    def _segment_extent(self, a, b):
        p0, d, t_lo, t_hi = self.segment
        v0 = a * p0[0] + b * p0[1]
        dv = a * d[0] + b * d[1]
        if dv == 0:
            return v0, v0
        ends = []
        for t in (t_lo, t_hi):
            ends.append(None if t is None else v0 + dv * t)
        lo, hi = ends if dv > 0 else ends[::-1]
        return lo, hi

    def enter_segment(self, a, b, c):
        # p* lies on a*x + b*y = c: parameterize and clip by the region
        dd = a * a + b * b
        p0 = (a * c / dd, b * c / dd)
        d = (-b, a)
        t_lo, t_hi = clip_line_params(self.cons, p0, d)
        self.segment = (p0, d, t_lo, t_hi)

    def narrow_segment(self, t, keep_low):
        p0, d, t_lo, t_hi = self.segment
        if keep_low:
            t_hi = t if t_hi is None else min(t_hi, t)
        else:
            t_lo = t if t_lo is None else max(t_lo, t)
        if t_lo is not None and t_hi is not None and t_lo > t_hi:
            raise InconsistentOracle("segment interval collapsed")
        self.segment = (p0, d, t_lo, t_hi)


def _slope_key(a, b):
    # slope of a*x + b*y = c is -a/b; vertical (b = 0) sorts as +infinity
    if b == 0:
        return (1, 0)
    return (-a, b) if b > 0 else (a, -b)


def _slope_less(s1, s2):
    n1, d1 = s1
    n2, d2 = s2
    return n1 * d2 < n2 * d1


def _plane_round(st: _PruneState):
    """One balanced-quadrant round; returns when probes are exhausted or a
    probe lands on the point (segment/point mode engaged by the caller)."""
    fams, lo, hi = st.fams, st.lo, st.hi
    N = st.active()
    slope_weight = {}
    for i, f in enumerate(fams):
        w = hi[i] - lo[i]
        if w:
            key = _slope_key(f.a, f.b)
            slope_weight[key] = slope_weight.get(key, 0) + w
    # weighted median of slopes under the exact slope order
    pairs = [(_SlopeVal(k), w) for k, w in slope_weight.items()]
    med = _select_by_weight(pairs, Q(N, 2), N).key

    if slope_weight[med] * 9 >= N:
        _heavy_class_probes(st, med)
    else:
        _balanced_pair_probes(st, med, N)
    if st.segment is not None or st.point is not None:
        return
    _shrink_region(st)


class _SlopeVal:
    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return _slope_less(self.key, other.key)

    def __le__(self, other):
        return not _slope_less(other.key, self.key)

    def __gt__(self, other):
        return _slope_less(other.key, self.key)

    def __ge__(self, other):
        return not _slope_less(self.key, other.key)

    def __eq__(self, other):
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)


def _heavy_class_probes(st, med):
    # same slope key implies identical coprime (a, b) after normalization,
    # so offsets of all class members are directly comparable
    fams, lo, hi = st.fams, st.lo, st.hi
    offs = []
    a = b = None
    for i, f in enumerate(fams):
        if hi[i] > lo[i] and _slope_key(f.a, f.b) == med:
            if a is None:
                a, b = f.a, f.b
            offs.extend(f.offsets[lo[i] : hi[i]])
    offs.sort()
    c_med = offs[(len(offs) - 1) // 2]
    out = st.probe(a, b, c_med)
    if out == ON:
        st.enter_segment(a, b, c_med)
        return
    # horizontal cut through a point of the median line inside the region
    t_lo, t_hi = clip_line_params(st.cons, _foot(a, b, c_med), (-b, a))
    t = _pick_param(t_lo, t_hi)
    p = _foot(a, b, c_med)
    y0 = p[1] + a * t
    out = st.probe(0, 1, y0)
    if out == ON:
        st.enter_segment(0, 1, y0)


def _foot(a, b, c):
    dd = a * a + b * b
    return (a * c / dd, b * c / dd)


def _balanced_pair_probes(st, med, N):
    fams, lo, hi = st.fams, st.lo, st.hi
    plus, minus = [], []
    for i, f in enumerate(fams):
        w = hi[i] - lo[i]
        if not w:
            continue
        key = _slope_key(f.a, f.b)
        if key == med:
            continue
        (plus if _slope_less(med, key) else minus).append([i, w])
    n_plus = sum(w for _, w in plus)
    n_minus = sum(w for _, w in minus)
    keep = min(n_plus, n_minus)
    if keep == 0:
        # degenerate slope distribution: fall back to the heavy branch
        _heavy_class_probes(st, med)
        return
    for side, n_side in ((plus, n_plus), (minus, n_minus)):
        drop = n_side - keep
        while drop > 0:
            take = min(drop, side[-1][1])
            side[-1][1] -= take
            drop -= take
            if side[-1][1] == 0:
                side.pop()
    runs = []
    ia = ib = 0
    posa = posb = 0
    while ia < len(plus) and ib < len(minus):
        fa, wa = plus[ia]
        fb, wb = minus[ib]
        L = min(wa - posa, wb - posb)
        runs.append((fa, posa, fb, posb, L))
        posa += L
        posb += L
        if posa == wa:
            ia += 1
            posa = 0
        if posb == wb:
            ib += 1
            posb = 0
    pts = []
    for fa, offa, fb, offb, L in runs:
        m = (L - 1) // 2
        A = fams[fa]
        B = fams[fb]
        ca = A.offsets[lo[fa] + offa + m]
        cb = B.offsets[lo[fb] + offb + m]
        p = _solve2((A.a, A.b, ca), (B.a, B.b, cb))
        pts.append((p, L))
    q_x = _select_by_weight([(p[0], w) for p, w in pts], Q(keep, 2), keep)
    out = st.probe(1, 0, q_x)
    if out == ON:
        st.enter_segment(1, 0, q_x)
        return
    decided = [
        (p, w) for p, w in pts if (p[0] >= q_x if out == LEFT else p[0] <= q_x)
    ]
    wtot = sum(w for _, w in decided)
    q_y = _select_by_weight([(p[1], w) for p, w in decided], Q(wtot, 2), wtot)
    out = st.probe(0, 1, q_y)
    if out == ON:
        st.enter_segment(0, 1, q_y)


def _shrink_region(st, limit=4):
    """Keep the feasible region at <= `limit` halfplanes.

    Chord probes cut the region like the paper's triangulation step (each
    is a legitimate oracle call); if they fail to reduce complexity the
    oldest constraints are dropped, which only relaxes the region."""
    st.cons = drop_redundant(st.cons)
    guard = 0
    while len(st.cons) > limit and guard < 4:
        guard += 1
        pts = sorted(set(region_vertices(st.cons)))
        if len(pts) < 4:
            break
        a_pt = pts[0]
        b_pt = pts[len(pts) // 2]
        aa = b_pt[1] - a_pt[1]
        bb = a_pt[0] - b_pt[0]
        if aa == 0 and bb == 0:
            break
        if aa < 0 or (aa == 0 and bb < 0):
            aa, bb = -aa, -bb
        cc = aa * a_pt[0] + bb * a_pt[1]
        out = st.probe(aa, bb, cc)
        if out == ON:
            st.enter_segment(aa, bb, cc)
            return
        st.cons = drop_redundant(st.cons)
    while len(st.cons) > limit:
        st.cons.pop(0)
        st.cons = drop_redundant(st.cons)


def _record_parallel_hits(st: _PruneState):
    """Families parallel to the segment line: resolve by direct comparison."""
    p0, d, _, _ = st.segment
    for i, f in enumerate(st.fams):
        if f.a * d[0] + f.b * d[1] != 0:
            continue
        v0 = f.a * p0[0] + f.b * p0[1]
        j = bisect_left(f.offsets, v0)
        if j < len(f.offsets) and f.offsets[j] == v0:
            st.on_hits[i] = j


def _segment_loop(st: _PruneState):
    """Resolve remaining windows for a point known to lie on a segment."""
    _record_parallel_hits(st)
    while st.point is None:
        cands = []
        p0, d, t_lo, t_hi = st.segment
        for i, f in enumerate(st.fams):
            v0 = f.a * p0[0] + f.b * p0[1]
            dv = f.a * d[0] + f.b * d[1]
            for j in range(st.lo[i], st.hi[i]):
                c = f.offsets[j]
                if dv == 0:
                    if c == v0:
                        st.on_hits[i] = j
                    continue
                t = (c - v0) / dv
                inside = (t_lo is None or t > t_lo) and (t_hi is None or t < t_hi)
                if inside:
                    cands.append((t, i, j))
        if not cands:
            break
        if len(cands) <= 17:
            for t, i, j in cands:
                f = st.fams[i]
                out = st.oracle(f.line(j))
                st.calls += 1
                if out == ON:
                    if i in st.on_hits and st.on_hits[i] != j:
                        raise InconsistentOracle("point on two parallel lines")
                    st.on_hits[i] = j
                    st.narrow_segment(t, True)
                    st.narrow_segment(t, False)
            break
        cands.sort()
        t_med, i, j = cands[(len(cands) - 1) // 2]
        f = st.fams[i]
        out = st.oracle(f.line(j))
        st.calls += 1
        dv = f.a * d[0] + f.b * d[1]
        if out == ON:
            st.on_hits[i] = j
            st.point = (p0[0] + d[0] * t_med, p0[1] + d[1] * t_med)
            break
        keep_low = (out == LEFT) == (dv > 0)
        st.narrow_segment(t_med, keep_low)
        st.update_windows()


def prune_parallel_families(families, oracle, brute_threshold=18):
    """Locate the hidden point relative to every line of every family.

    ``families`` are LineFamily values (or lists of parallel Line2);
    ``oracle(line)`` returns LEFT, RIGHT or ON consistently with one point.
    """
    fams = [
        f if isinstance(f, LineFamily) else LineFamily.from_lines(f, id=i)
        for i, f in enumerate(families)
    ]
    st = _PruneState(fams, oracle)
    st.update_windows()
    while st.point is None and st.segment is None:
        n_before = st.active()
        if n_before < brute_threshold:
            break
        _plane_round(st)
        st.update_windows()
        n_after = st.active()
        st.rounds.append((n_before, n_after))
        if n_after >= n_before:
            raise InconsistentOracle("no elimination progress")
    if st.segment is not None and st.point is None:
        st.update_windows()
        _segment_loop(st)
    if st.point is None and st.segment is None:
        # brute-force the residue
        for i, f in enumerate(fams):
            for j in range(st.lo[i], st.hi[i]):
                out = st.oracle(f.line(j))
                st.calls += 1
                if out == ON:
                    st.on_hits[i] = j
                elif out == LEFT:
                    st.cons.append((f.a, f.b, f.offsets[j]))
                else:
                    st.cons.append((-f.a, -f.b, -f.offsets[j]))
        st.cons = drop_redundant(st.cons)
        st.update_windows()

    positions = []
    for i, f in enumerate(fams):
        if i in st.on_hits:
            positions.append(("on", st.on_hits[i] + 1))
            continue
        if st.point is not None:
            v = None
            k = 0
            for j, c in enumerate(f.offsets):
                e = f.a * st.point[0] + f.b * st.point[1] - c
                if e == 0:
                    v = ("on", j + 1)
                    break
                if e > 0:
                    k = j + 1
            positions.append(v if v is not None else ("between", k, k + 1))
            continue
        if st.lo[i] != st.hi[i]:
            raise InconsistentOracle(
                f"family {i} still has undecided lines after pruning"
            )
        positions.append(("between", st.lo[i], st.lo[i] + 1))
    region = FeasibleRegion2(constraints=list(st.cons), segment=st.segment)
    return PruneReport(positions, st.calls, st.rounds, region, st.point)


def balanced_quadrant_step(families, cons, oracle):
    """One elimination round on explicit state; returns (region, eliminated).

    Exposed for direct testing of the 17/18 bound; the full search drives
    the same code through prune_parallel_families.
    """
    fams = [
        f if isinstance(f, LineFamily) else LineFamily.from_lines(f, id=i)
        for i, f in enumerate(families)
    ]
    st = _PruneState(fams, oracle)
    st.cons = list(cons)
    st.update_windows()
    before = st.active()
    if before < 18:
        raise KernelError("balanced step needs >= 18 active lines")
    _plane_round(st)
    st.update_windows()
    after = st.active()
    region = FeasibleRegion2(constraints=list(st.cons), segment=st.segment)
    return region, before - after


# ---------------------------------------------------------------------------
# verified (1/2)-cuttings


@dataclass
class Cutting:
    simplices: list  # vertex tuples per simplex
    crossings: list  # per simplex: indices of hyperplanes crossing it
    dim: int


def _crosses_simplex(hp, verts):
    vals = [sum(a * x for a, x in zip(hp[:-1], v)) - hp[-1] for v in verts]
    return min(vals) < 0 < max(vals)


def _split_cells_2d(region, lines):
    cells = [list(region)]
    for a, b, c in lines:
        nxt = []
        for cell in cells:
            lo = clip_chain(cell, a, b, c)
            hi = clip_chain(cell, -a, -b, -c)
            if len(lo) >= 3:
                nxt.append(lo)
            if len(hi) >= 3:
                nxt.append(hi)
        cells = nxt
    return cells


def _triangulate_2d(cell):
    return [[cell[0], cell[i], cell[i + 1]] for i in range(1, len(cell) - 1)]


def _tetrahedralize(poly: ConvexPolyhedron):
    v0 = poly.vertices[0]
    out = []
    for f in poly.faces:
        pts = [poly.vertices[i] for i in f]
        if v0 in pts:
            continue
        for k in range(1, len(pts) - 1):
            out.append([v0, pts[0], pts[k], pts[k + 1]])
    return out


def _tet_volume6(t):
    a, b, c, d = t
    u = tuple(b[i] - a[i] for i in range(3))
    v = tuple(c[i] - a[i] for i in range(3))
    w = tuple(d[i] - a[i] for i in range(3))
    det = (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )
    return abs(det)


def half_cutting(hyperplanes, region, dim, rng_seed=0):
    """Verified (1/2)-cutting of a bounded simplex region.

    Samples a few input hyperplanes, builds the arrangement inside the
    region, triangulates, and verifies exactly that each simplex interior
    crosses at most ceil(n/2) hyperplanes and that the simplices cover the
    region (measure bookkeeping).  Retries with new samples; CuttingFailed
    after 64 verified-and-rejected attempts.
    """
    hps = list(hyperplanes)
    if not hps:
        raise KernelError("no hyperplanes to cut")
    n = len(hps)
    target = -(-n // 2)
    rng = random.Random(rng_seed)
    region = [tuple(p) for p in region]
    for attempt in range(64):
        s = min(n, 2 + attempt // 2)
        sample = rng.sample(range(n), s) if n > s else list(range(n))
        if dim == 2:
            cells = _split_cells_2d(region, [hps[i] for i in sample])
            simplices = [t for cell in cells for t in _triangulate_2d(cell)]
            total = sum(abs(shoelace2(t)) for t in simplices)
            covered = total == abs(shoelace2(region))
        elif dim == 3:
            pts = list(region)
            u = tuple(pts[1][i] - pts[0][i] for i in range(3))
            v = tuple(pts[2][i] - pts[0][i] for i in range(3))
            w = tuple(pts[3][i] - pts[0][i] for i in range(3))
            det = (
                u[0] * (v[1] * w[2] - v[2] * w[1])
                - u[1] * (v[0] * w[2] - v[2] * w[0])
                + u[2] * (v[0] * w[1] - v[1] * w[0])
            )
            if det == 0:
                raise KernelError("region simplex is flat")
            if det < 0:
                pts = [pts[0], pts[2], pts[1], pts[3]]
            base = ConvexPolyhedron(
                pts, [[0, 2, 1], [0, 1, 3], [1, 2, 3], [0, 3, 2]]
            )
            cells = [base]
            for i in sample:
                a, b, c, d = hps[i]
                nxt = []
                for cell in cells:
                    for pl in ((a, b, c, d), (-a, -b, -c, -d)):
                        piece = clip_halfspace(cell, pl)
                        if piece is not None and not isinstance(piece, Degenerate3):
                            nxt.append(piece)
                cells = nxt
            simplices = [t for cell in cells for t in _tetrahedralize(cell)]
            total = sum(_tet_volume6(t) for t in simplices)
            covered = total == 6 * volume(base)
        else:
            raise KernelError("dim must be 2 or 3")
        if not covered:
            continue
        crossings = []
        ok = True
        for t in simplices:
            cr = [i for i, hp in enumerate(hps) if _crosses_simplex(hp, t)]
            if len(cr) > target:
                ok = False
                break
            crossings.append(cr)
        if ok and len(simplices) <= 64:
            return Cutting(simplices, crossings, dim)
    raise CuttingFailed(f"no verified (1/2)-cutting found for n={n}")
