"""Exact polygon arithmetic: bundle numerics, convex HN polygons, dominance order.

Everything here is a pure value computed with :class:`fractions.Fraction`;
no floating point is used anywhere in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def rational_to_json(x: Fraction) -> dict:
    """Serialize an exact rational as decimal strings (arbitrary precision)."""
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def format_rational(x: Fraction) -> str:
    """Human-readable exact form: ``a/b``, or just ``a`` when integral."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CurveParams:
    """Ambient arithmetic context: genus and characteristic.

    ``p = 0`` is allowed for characteristic-zero formulas that never
    mention the characteristic; positive ``p`` must be prime.
    """

    g: int
    p: int = 0

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")
        if self.p < 0:
            raise ValueError(f"characteristic must be >= 0, got {self.p}")
        if self.p > 0 and not _is_prime(self.p):
            raise ValueError(f"positive characteristic must be prime, got {self.p}")

    def require_positive_char(self) -> int:
        if self.p == 0:
            raise ValueError("operation requires positive characteristic")
        return self.p


@dataclass(frozen=True, order=True)
class BundleNumerics:
    """Discrete invariants of a bundle: (rank, degree) with exact slope."""

    rank: int
    degree: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)


@dataclass(frozen=True, order=True)
class HNPolygon:
    """Strictly convex polygon with integer breakpoints, starting at (0, 0).

    Ranks strictly increase along the breakpoint list and successive
    segment slopes strictly decrease, so each numerical HN filtration has
    exactly one representation (collinear interior points are forbidden).
    The straight segment with no interior breakpoints is admitted as the
    degenerate (semistable) polygon.
    """

    breakpoints: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pts = tuple((int(r), int(d)) for r, d in self.breakpoints)
        object.__setattr__(self, "breakpoints", pts)
        if len(pts) < 2:
            raise ValueError("polygon needs at least two breakpoints")
        if pts[0] != (0, 0):
            raise ValueError(f"first breakpoint must be (0, 0), got {pts[0]}")
        slopes = []
        for (r0, d0), (r1, d1) in zip(pts, pts[1:]):
            if r1 <= r0:
                raise ValueError("breakpoint ranks must strictly increase")
            slopes.append(Fraction(d1 - d0, r1 - r0))
        for s0, s1 in zip(slopes, slopes[1:]):
            if s1 >= s0:
                raise ValueError(
                    "segment slopes must strictly decrease (strict convexity)"
                )

    @property
    def total_rank(self) -> int:
        return self.breakpoints[-1][0]

    @property
    def total_degree(self) -> int:
        return self.breakpoints[-1][1]

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.breakpoints[-1]

    def segment_slopes(self) -> tuple[Fraction, ...]:
        """Slopes of the segments, left to right (strictly decreasing)."""
        return tuple(
            Fraction(d1 - d0, r1 - r0)
            for (r0, d0), (r1, d1) in zip(self.breakpoints, self.breakpoints[1:])
        )

    def quotient_data(self) -> tuple[tuple[int, int], ...]:
        """Per-quotient (rank, degree) pairs read bottom-up.

        Pair ``i`` (0-based) has slope equal to the ``i``-th smallest
        segment slope, so the slopes of the returned pairs strictly
        increase; this is the inverse of :func:`polygon_from_quotient_data`.
        """
        segs = [
            (r1 - r0, d1 - d0)
            for (r0, d0), (r1, d1) in zip(self.breakpoints, self.breakpoints[1:])
        ]
        return tuple(reversed(segs))

    def value_at(self, x: int | Fraction) -> Fraction:
        """Piecewise-linear interpolation at ``x``, exact."""
        x = Fraction(x)
        if x < 0 or x > self.total_rank:
            raise ValueError(f"abscissa {x} outside [0, {self.total_rank}]")
        for (r0, d0), (r1, d1) in zip(self.breakpoints, self.breakpoints[1:]):
            if x <= r1:
                return d0 + Fraction(d1 - d0, r1 - r0) * (x - r0)
        raise AssertionError("unreachable")

    def to_json(self) -> dict:
        return {"breakpoints": [[r, d] for r, d in self.breakpoints]}

    @classmethod
    def from_json(cls, obj: dict) -> "HNPolygon":
        return cls(tuple((int(r), int(d)) for r, d in obj["breakpoints"]))

    @classmethod
    def trivial(cls, rank: int, degree: int = 0) -> "HNPolygon":
        """The semistable polygon: a single segment to (rank, degree)."""
        return cls(((0, 0), (rank, degree)))


def polygon_from_quotient_data(
    ranks: Sequence[int], degrees: Sequence[int]
) -> HNPolygon:
    """Build the polygon whose quotients, read bottom-up, are (ranks, degrees).

    The slopes ``degrees[i] / ranks[i]`` must strictly increase; the polygon
    then has breakpoints given by the reversed cumulative sums, so its
    segment slopes strictly decrease.
    """
    if len(ranks) == 0:
        raise ValueError("empty quotient data")
    if len(ranks) != len(degrees):
        raise ValueError("ranks and degrees must have equal length")
    if any(n < 1 for n in ranks):
        raise ValueError("quotient ranks must be positive")
    slopes = [Fraction(d, n) for n, d in zip(ranks, degrees)]
    for s0, s1 in zip(slopes, slopes[1:]):
        if s1 <= s0:
            raise ValueError("quotient slopes must strictly increase")
    pts = [(0, 0)]
    r_acc = d_acc = 0
    for n, d in zip(reversed(ranks), reversed(degrees)):
        r_acc += n
        d_acc += d
        pts.append((r_acc, d_acc))
    return HNPolygon(tuple(pts))


def shatz_leq(a: HNPolygon, b: HNPolygon) -> bool:
    """True iff ``b`` lies on or above ``a`` (``a`` below ``b`` in the
    dominance order on polygons with common endpoints).

    Both polygons are piecewise linear with kinks only at integer ranks,
    so sampling at the integers decides dominance everywhere.
    """
    if a.endpoint != b.endpoint:
        raise ValueError(
            f"polygons not comparable: endpoints {a.endpoint} != {b.endpoint}"
        )
    return all(b.value_at(x) >= a.value_at(x) for x in range(a.total_rank + 1))


@dataclass(frozen=True)
class PosetDescription:
    """Hasse diagram of a finite set of polygons under dominance.

    ``elements`` is sorted lexicographically by breakpoint list; ``covers``
    holds index pairs ``(i, j)`` meaning ``elements[j]`` covers
    ``elements[i]`` (i.e. is strictly above with nothing in between).
    """

    elements: tuple[HNPolygon, ...]
    covers: tuple[tuple[int, int], ...]

    def maximal_indices(self) -> tuple[int, ...]:
        not_max = {i for i, _ in self.covers}
        return tuple(i for i in range(len(self.elements)) if i not in not_max)

    def minimal_indices(self) -> tuple[int, ...]:
        not_min = {j for _, j in self.covers}
        return tuple(i for i in range(len(self.elements)) if i not in not_min)


def strata_poset(polygons: Iterable[HNPolygon]) -> PosetDescription:
    """Cover relations of a finite set of polygons under :func:`shatz_leq`."""
    elements = tuple(sorted(set(polygons), key=lambda p: p.breakpoints))
    if not elements:
        return PosetDescription((), ())
    endpoint = elements[0].endpoint
    for p in elements:
        if p.endpoint != endpoint:
            raise ValueError("all polygons must share the same endpoints")
    n = len(elements)
    leq = [[shatz_leq(elements[i], elements[j]) for j in range(n)] for i in range(n)]
    covers = []
    for i, j in itertools.product(range(n), repeat=2):
        if i == j or not leq[i][j]:
            continue
        if any(k not in (i, j) and leq[i][k] and leq[k][j] for k in range(n)):
            continue
        covers.append((i, j))
    return PosetDescription(elements, tuple(sorted(covers)))
