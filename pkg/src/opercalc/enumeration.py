"""Exhaustive enumeration of admissible degree-0 HN polygons and the
dominance verification against the oper polygon.

A degree-0 rank-r polygon is admissible when successive quotient slopes
differ by at most 2g-2 (the slope-gap constraint for semistable local
systems).  Admissible polygons of fixed rank form a finite set; the gap
constraint together with degree 0 bounds every slope by (l-1)(2g-2) in
absolute value, which truncates the search.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .core import HNPolygon, polygon_from_quotient_data, shatz_leq
from .opers import oper_polygon

DEFAULT_MAX_RANK = 8


def _complete(
    r: int,
    g: int,
    pts: list[tuple[int, int]],
    prev_slope: Fraction | None,
    out: list[HNPolygon],
) -> None:
    """Extend a partial breakpoint chain ending at pts[-1] to (r, 0)."""
    x, y = pts[-1]
    gap = 2 * g - 2
    max_first = Fraction((r - 1) * gap)
    for x2 in range(x + 1, r + 1):
        dx = x2 - x
        if prev_slope is None:
            y2_hi = y + (max_first * dx).__floor__()
            y2_lo = -(r - 1) * gap * dx  # slack; tightened below
        else:
            # slope strictly below the previous one, gap at most 2g-2
            hi = y + prev_slope * dx
            y2_hi = hi.__ceil__() - 1
            y2_lo = (y + (prev_slope - gap) * dx).__ceil__()
        if x2 == r:
            if y2_lo <= 0 <= y2_hi:
                s = Fraction(-y, dx)
                if prev_slope is None or (s < prev_slope and prev_slope - s <= gap):
                    out.append(HNPolygon(tuple(pts) + ((r, 0),)))
            continue
        rest = r - x2
        for y2 in range(max(1, y2_lo), y2_hi + 1):
            s = Fraction(y2 - y, dx)
            # remaining chord slope: strictly below s, reachable within
            # at most `rest` further drops of 2g-2
            c = Fraction(-y2, rest)
            if not (s - rest * gap <= c < s):
                continue
            pts.append((x2, y2))
            _complete(r, g, pts, s, out)
            pts.pop()


def _enumerate_serial(r: int, g: int) -> list[HNPolygon]:
    out: list[HNPolygon] = []
    _complete(r, g, [(0, 0)], None, out)
    return sorted(set(out), key=lambda p: p.breakpoints)


def _first_steps(r: int, g: int) -> list[tuple[int, int]]:
    """All possible first breakpoints after (0, 0), for search partitioning."""
    gap = 2 * g - 2
    steps = []
    for x1 in range(1, r):
        for y1 in range(1, x1 * (r - 1) * gap + 1):
            s = Fraction(y1, x1)
            c = Fraction(-y1, r - x1)
            if s - (r - x1) * gap <= c < s:
                steps.append((x1, y1))
    return steps


def _enumerate_branch(args: tuple[int, int, tuple[int, int]]) -> list[HNPolygon]:
    r, g, first = args
    out: list[HNPolygon] = []
    _complete(r, g, [(0, 0), first], Fraction(first[1], first[0]), out)
    return out


def enumerate_admissible(
    r: int, g: int, max_rank: int = DEFAULT_MAX_RANK, jobs: int = 1
) -> tuple[HNPolygon, ...]:
    """Every admissible degree-0 rank-r polygon, including the trivial
    segment, in canonical sorted order.

    ``jobs > 1`` partitions the search by first breakpoint across worker
    processes; the merge is a deterministic sorted union.
    """
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    if r > max_rank:
        raise ValueError(
            f"rank {r} above enumeration cap {max_rank}; raise max_rank to proceed"
        )
    if jobs <= 1:
        return tuple(_enumerate_serial(r, g))
    polys = {HNPolygon.trivial(r)}
    work = [(r, g, first) for first in _first_steps(r, g)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for branch in pool.map(_enumerate_branch, work):
            polys.update(branch)
    return tuple(sorted(polys, key=lambda p: p.breakpoints))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_admissible_slow(r: int, g: int) -> tuple[HNPolygon, ...]:
    """Independent oracle: enumerate quotient data (rank, degree) vectors
    within the proven degree bounds and filter by convexity, degree 0 and
    the gap constraints.  Slower than :func:`enumerate_admissible` but
    structurally unrelated to it."""
    if r < 2 or g < 2:
        raise ValueError("need r >= 2 and g >= 2")
    gap = 2 * g - 2
    found: set[HNPolygon] = set()

    def extend(
        ranks: tuple[int, ...],
        degrees: tuple[int, ...],
        comp: tuple[int, ...],
        bound: int,
    ) -> None:
        i = len(degrees)
        if i == len(comp):
            if sum(degrees) == 0:
                slopes = [Fraction(d, n) for n, d in zip(comp, degrees)]
                if all(b - a <= gap for a, b in zip(slopes, slopes[1:])):
                    found.add(polygon_from_quotient_data(comp, degrees))
            return
        n = comp[i]
        lo = -n * bound
        if degrees:
            prev = Fraction(degrees[-1], comp[i - 1])
            lo = max(lo, (n * prev).__floor__() + 1)
        for d in range(lo, n * bound + 1):
            if degrees and Fraction(d, n) <= Fraction(degrees[-1], comp[i - 1]):
                continue
            extend(ranks, degrees + (d,), comp, bound)

    for l in range(1, r + 1):
        bound = (l - 1) * gap
        for comp in _compositions(r, l):
            extend(comp, (), comp, bound)
    return tuple(sorted(found, key=lambda p: p.breakpoints))


@dataclass(frozen=True)
class MaximalityReport:
    r: int
    g: int
    count: int
    all_dominated: bool
    oper_polygon_present: bool
    unique_maximum: bool
    counterexamples: tuple[HNPolygon, ...]

    @property
    def passed(self) -> bool:
        return self.all_dominated and self.oper_polygon_present and self.unique_maximum


def verify_oper_maximality(
    r: int, g: int, max_rank: int = DEFAULT_MAX_RANK, jobs: int = 1
) -> MaximalityReport:
    """Check that the oper polygon dominates every admissible polygon and is
    itself the unique admissible maximum."""
    polys = enumerate_admissible(r, g, max_rank=max_rank, jobs=jobs)
    top = oper_polygon(r, g)
    counterexamples = tuple(p for p in polys if not shatz_leq(p, top))
    maxima = [
        p
        for p in polys
        if not any(q != p and shatz_leq(p, q) for q in polys)
    ]
    return MaximalityReport(
        r=r,
        g=g,
        count=len(polys),
        all_dominated=not counterexamples,
        oper_polygon_present=top in polys,
        unique_maximum=maxima == [top],
        counterexamples=counterexamples,
    )


def verify_target_inequalities(polygon: HNPolygon, g: int) -> bool:
    """Check deg(V_i) <= (g-1)(n_1+...+n_i)(n_{i+1}+...+n_l) for every flag
    step, straight from the polygon's quotient data.

    Equivalent to dominance by the oper polygon of the same rank.
    """
    if polygon.breakpoints[-1][1] != 0:
        raise ValueError("target inequalities apply to degree-0 polygons")
    qd = polygon.quotient_data()  # slopes increasing: bottom-up order
    r = polygon.total_rank
    l = len(qd)
    for i in range(1, l):
        # deg(V_i) is the sum of the degrees of the quotients above step i
        deg_vi = sum(d for _, d in qd[i:])
        low = sum(n for n, _ in qd[:i])
        high = sum(n for n, _ in qd[i:])
        assert low + high == r
        if deg_vi > (g - 1) * low * high:
            return False
    return True


def key_inequality_check(l: int, m_values: Sequence[int]) -> bool:
    """2(m_{l-1} + 2 m_{l-2} + ... + (l-1) m_1) <= (2l-1)(m_1 + ... + m_{l-1}).

    Coefficient j pairs with m_{l-j}, following the displayed formula
    literally.  Always true for nonnegative m_i; exposed as a law.
    """
    if l < 2:
        raise ValueError(f"need l >= 2, got {l}")
    if len(m_values) != l - 1:
        raise ValueError(f"expected {l - 1} values, got {len(m_values)}")
    if any(m < 0 for m in m_values):
        raise ValueError("m values must be nonnegative")
    lhs = 2 * sum(j * m_values[l - j - 1] for j in range(1, l))
    rhs = (2 * l - 1) * sum(m_values)
    return lhs <= rhs


def polygons_to_json(polygons: Sequence[HNPolygon]) -> list[dict]:
    return [p.to_json() for p in polygons]


def polygons_to_csv_rows(
    polygons: Sequence[HNPolygon], r: int, g: int
) -> tuple[list[str], list[list[str]]]:
    """One row per polygon: flattened breakpoints plus verification flags."""
    top = oper_polygon(r, g)
    header = ["breakpoints", "is_oper", "dominated_by_oper"]
    rows = []
    for p in polygons:
        flat = ";".join(f"{x},{y}" for x, y in p.breakpoints)
        rows.append([flat, str(p == top), str(shatz_leq(p, top))])
    return header, rows
