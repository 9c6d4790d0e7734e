"""Exact segment/mirror intersection kernel.

All geometry runs on integer-scaled coordinates: mirror polylines are
premultiplied by the least common denominator of their vertices, and a
per-query factor absorbs denominators of the query segment.

Crossing candidates are enumerated per mirror edge by clipping the
Minkowski parallelogram {segment point - edge point} against the
translate lattice, column by column, so the work stays proportional to
the number of nearby translates rather than to the area of a bounding
box.  Every candidate is then confirmed by an exact integer
segment-intersection predicate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd, lcm

from .errors import DegenerateIncidenceError, NonTransverseError
from .lattice import Vec, cross, vadd, vneg, vscale, vsub
from .presentation import NetMapPresentation, class_table, postcritical_lookup

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ScaledMirror:
    index: int
    degenerate: bool
    midpoint: Vec           # times scale
    chain: tuple[Vec, ...]  # full polyline, times scale


@dataclass(frozen=True)
class MirrorSystem:
    scale: int
    mirrors: tuple[ScaledMirror, ...]
    u2: Vec                 # 2 * lambda1 basis, times scale
    v2: Vec


@lru_cache(maxsize=None)
def mirror_system(pres: NetMapPresentation) -> MirrorSystem:
    denoms = [1]
    for mirror in pres.mirrors:
        for p in mirror.full_polyline():
            denoms.append(p[0].denominator)
            denoms.append(p[1].denominator)
    scale = lcm(*denoms)
    mirrors = []
    for k, mirror in enumerate(pres.mirrors):
        chain = tuple(
            (int(p[0] * scale), int(p[1] * scale)) for p in mirror.full_polyline()
        )
        mirrors.append(
            ScaledMirror(
                index=k,
                degenerate=mirror.degenerate,
                midpoint=vscale(scale, mirror.midpoint),
                chain=chain,
            )
        )
    return MirrorSystem(
        scale=scale,
        mirrors=tuple(mirrors),
        u2=vscale(2 * scale, pres.lambda1.u),
        v2=vscale(2 * scale, pres.lambda1.v),
    )


def _parallelogram_candidates(u2: Vec, v2: Vec, quad: list[Vec]):
    """Integer (alpha, beta) with alpha*u2 + beta*v2 in the closed quad.

    ``quad`` lists the vertices of a (possibly degenerate) convex
    quadrilateral in boundary order.  A slight superset may be yielded;
    callers re-verify every candidate exactly.
    """
    det = cross(u2, v2)
    sgn = 1 if det > 0 else -1
    d = abs(det)
    avals = [sgn * cross(c, v2) for c in quad]
    bvals = [sgn * cross(u2, c) for c in quad]
    amin, amax = min(avals), max(avals)
    n = len(quad)
    for alpha in range(-((-amin) // d), amax // d + 1):
        x = alpha * d
        lo_n = lo_d = hi_n = hi_d = None
        for i in range(n):
            j = i + 1 if i + 1 < n else 0
            ai, aj = avals[i], avals[j]
            if ai == x:
                num, den = bvals[i], 1
            elif (ai < x < aj) or (aj < x < ai):
                den = aj - ai
                num = bvals[i] * den + (x - ai) * (bvals[j] - bvals[i])
                if den < 0:
                    num, den = -num, -den
            else:
                continue
            if lo_n is None:
                lo_n, lo_d, hi_n, hi_d = num, den, num, den
                continue
            if num * lo_d < lo_n * den:
                lo_n, lo_d = num, den
            if num * hi_d > hi_n * den:
                hi_n, hi_d = num, den
        if lo_n is None:
            continue
        for beta in range(-((-lo_n) // (lo_d * d)), hi_n // (hi_d * d) + 1):
            yield alpha, beta


def mirror_midpoint_at(pres: NetMapPresentation, point: Vec) -> Vec:
    """Midpoint of the unique mirror containing a marked lattice point.

    ``point`` must lie in a postcritical coset; for a degenerate mirror
    the point is its own midpoint.
    """
    table = class_table(pres)
    entry = postcritical_lookup(pres).get(table.key(point))
    if entry is None or entry[0] != "P2":
        raise ValueError(f"{point} is not in a postcritical coset")
    mirror = pres.mirrors[entry[1]]
    if mirror.degenerate:
        return point
    poly = mirror.full_polyline()
    zero_key = table.key((0, 0))
    for end in (poly[0], poly[-1]):
        e = (int(end[0]), int(end[1]))
        t = vsub(point, e)
        if table.key(t) == zero_key:
            return vadd(mirror.midpoint, t)
    raise ValueError(f"{point} is not an endpoint of its class mirror")


def _line_hit(p: Vec, q: Vec, a: Vec, b: Vec) -> Fraction | None:
    """Classify the intersection of closed segments pq and ab.

    Returns None when disjoint or touching only at p or q, a Fraction
    t in (0, 1) for a transverse crossing at p + t(q - p), and raises
    NonTransverseError for collinear overlap or for contact with a
    vertex of ab inside the open segment.
    """
    dpq = vsub(q, p)
    dab = vsub(b, a)
    den = cross(dpq, dab)
    w = vsub(a, p)
    if den == 0:
        if cross(w, dpq) != 0:
            return None  # parallel, distinct lines
        dd = dpq[0] * dpq[0] + dpq[1] * dpq[1]
        ta = Fraction(w[0] * dpq[0] + w[1] * dpq[1], dd)
        wb = vsub(b, p)
        tb = Fraction(wb[0] * dpq[0] + wb[1] * dpq[1], dd)
        lo, hi = (ta, tb) if ta <= tb else (tb, ta)
        lo = lo if lo > 0 else Fraction(0)
        hi = hi if hi < 1 else Fraction(1)
        if lo < hi:
            raise NonTransverseError("segment runs along a mirror edge")
        if lo == hi and 0 < lo < 1:
            raise NonTransverseError("segment touches a mirror vertex")
        return None
    tn = cross(w, dab)
    un = cross(w, dpq)
    if den < 0:
        tn, un, den = -tn, -un, -den
    if tn < 0 or tn > den or un < 0 or un > den:
        return None
    if tn == 0 or tn == den:
        return None  # contact at v or w, which sit on their own mirrors
    if un == 0 or un == den:
        raise NonTransverseError("segment passes through a mirror endpoint or midpoint")
    return Fraction(tn, den)


def _scaled(point: Point | Vec, factor: int) -> Vec:
    x, y = Fraction(point[0]) * factor, Fraction(point[1]) * factor
    return (int(x), int(y))


def interior_crossings(
    pres: NetMapPresentation, v: Point | Vec, w: Point | Vec
) -> list[tuple[Fraction, Vec]]:
    """Transverse crossings of the open segment (v, w) with the mirrors.

    Returns (t, midpoint) pairs sorted by the segment parameter, with
    midpoints in unscaled coordinates.  Raises NonTransverseError for
    non-transverse incidence and DegenerateIncidenceError when the open
    segment meets a degenerate mirror point.
    """
    sys = mirror_system(pres)
    extra = lcm(
        Fraction(v[0]).denominator,
        Fraction(v[1]).denominator,
        Fraction(w[0]).denominator,
        Fraction(w[1]).denominator,
    )
    s = sys.scale * extra
    p = _scaled(v, s)
    q = _scaled(w, s)
    u2 = vscale(extra, sys.u2)
    v2 = vscale(extra, sys.v2)

    _check_degenerate_incidence(pres, v, w)

    hits: list[tuple[Fraction, Vec]] = []
    for mirror in sys.mirrors:
        if mirror.degenerate:
            continue
        chain = [vscale(extra, c) for c in mirror.chain]
        midpoint = vscale(extra, mirror.midpoint)
        for a, b in zip(chain, chain[1:]):
            quad = [vsub(p, a), vsub(p, b), vsub(q, b), vsub(q, a)]
            for alpha, beta in _parallelogram_candidates(u2, v2, quad):
                t_vec = vadd(vscale(alpha, u2), vscale(beta, v2))
                hit = _line_hit(p, q, vadd(a, t_vec), vadd(b, t_vec))
                if hit is not None:
                    mid = vadd(midpoint, t_vec)
                    hits.append((hit, (mid[0] // s, mid[1] // s)))
    hits.sort(key=lambda item: item[0])
    return hits


def _check_degenerate_incidence(pres, v, w) -> None:
    table = class_table(pres)
    degenerate_keys = set()
    for mirror, h in zip(pres.mirrors, pres.postcritical):
        if mirror.degenerate:
            degenerate_keys.add(table.key(h))
            degenerate_keys.add(table.key(vneg(h)))
    if not degenerate_keys:
        return
    for pt in _lattice_points_on_open_segment(v, w):
        if table.key(pt) in degenerate_keys:
            raise DegenerateIncidenceError(
                f"open segment passes through degenerate mirror point {pt}"
            )


def _lattice_points_on_open_segment(v, w):
    if all(isinstance(c, int) for c in (*v, *w)):
        # Between lattice endpoints the lattice points sit at the gcd steps.
        dx, dy = w[0] - v[0], w[1] - v[1]
        g = gcd(dx, dy)
        sx, sy = dx // g, dy // g
        for i in range(1, g):
            yield (v[0] + i * sx, v[1] + i * sy)
        return
    vx, vy = Fraction(v[0]), Fraction(v[1])
    wx, wy = Fraction(w[0]), Fraction(w[1])
    dx, dy = wx - vx, wy - vy
    if dx == 0:
        if vx.denominator != 1:
            return
        x = int(vx)
        lo, hi = (vy, wy) if vy <= wy else (wy, vy)
        for y in range(floor(lo) + 1, ceil(hi)):
            yield (x, y)
        return
    lo, hi = (vx, wx) if vx <= wx else (wx, vx)
    for x in range(floor(lo) + 1, ceil(hi)):
        fx = Fraction(x)
        if fx == lo or fx == hi:
            continue
        y = vy + (fx - vx) * dy / dx
        if y.denominator == 1:
            yield (x, int(y))


def translation_preserves_mirrors(pres: NetMapPresentation, t: Vec) -> bool:
    """Whether translating by t maps the mirror system onto itself.

    Each representative mirror must land on a twice-sublattice translate
    of a representative mirror (in either traversal order), and each
    degenerate class must map to a degenerate class.
    """
    table = class_table(pres)
    degenerate_keys = set()
    for mirror, h in zip(pres.mirrors, pres.postcritical):
        if mirror.degenerate:
            degenerate_keys.add(table.key(h))
            degenerate_keys.add(table.key(vneg(h)))
    for mirror, h in zip(pres.mirrors, pres.postcritical):
        if mirror.degenerate and table.key(vadd(h, t)) not in degenerate_keys:
            return False
    sys = mirror_system(pres)
    s = sys.scale
    ts = vscale(s, t)
    zero_key = table.key((0, 0))

    def is_double_translate(vec: Vec) -> bool:
        if vec[0] % s or vec[1] % s:
            return False
        return table.key((vec[0] // s, vec[1] // s)) == zero_key

    for mirror in sys.mirrors:
        if mirror.degenerate:
            continue
        image = tuple(vadd(c, ts) for c in mirror.chain)
        ok = False
        for other in sys.mirrors:
            if other.degenerate or len(other.chain) != len(image):
                continue
            for candidate in (image, tuple(reversed(image))):
                shift = vsub(candidate[0], other.chain[0])
                if is_double_translate(shift) and all(
                    vsub(c, o) == shift for c, o in zip(candidate, other.chain)
                ):
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True


def point_on_any_mirror(pres: NetMapPresentation, point: Point | Vec) -> bool:
    """Whether the point lies on some mirror translate (closed arcs)."""
    table = class_table(pres)
    px, py = Fraction(point[0]), Fraction(point[1])
    if px.denominator == 1 and py.denominator == 1:
        key = table.key((int(px), int(py)))
        for mirror, h in zip(pres.mirrors, pres.postcritical):
            if mirror.degenerate and key in (table.key(h), table.key(vneg(h))):
                return True
    sys = mirror_system(pres)
    extra = lcm(px.denominator, py.denominator)
    s = sys.scale * extra
    pt = (int(px * s), int(py * s))
    u2 = vscale(extra, sys.u2)
    v2 = vscale(extra, sys.v2)
    for mirror in sys.mirrors:
        if mirror.degenerate:
            continue
        chain = [vscale(extra, c) for c in mirror.chain]
        for a, b in zip(chain, chain[1:]):
            quad = [vsub(pt, a), vsub(pt, b)]
            for alpha, beta in _parallelogram_candidates(u2, v2, quad):
                t_vec = vadd(vscale(alpha, u2), vscale(beta, v2))
                aa, bb = vadd(a, t_vec), vadd(b, t_vec)
                if cross(vsub(bb, aa), vsub(pt, aa)) == 0 and (
                    min(aa[0], bb[0]) <= pt[0] <= max(aa[0], bb[0])
                    and min(aa[1], bb[1]) <= pt[1] <= max(aa[1], bb[1])
                ):
                    return True
    return False
