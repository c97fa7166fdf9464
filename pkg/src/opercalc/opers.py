"""Closed-form oper invariants: polygons, quotient degree patterns, dimensions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import BundleNumerics, CurveParams, HNPolygon


@dataclass(frozen=True)
class OperShape:
    """Numerical shape of a flagged bundle: first quotient, flag length, curve.

    The underlying bundle has rank ``rk(Q) * l`` and degree
    ``l (deg(Q) + rk(Q)(l-1)(g-1))``; both are derived, never stored.
    With ``strict_char_divisibility`` the construction additionally insists
    that the degree is divisible by the characteristic (the necessary
    condition for the bundle to carry a connection in characteristic p).
    """

    quotient: BundleNumerics
    length: int
    curve: CurveParams
    strict_char_divisibility: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")
        if self.strict_char_divisibility and self.curve.p > 0:
            if self.degree % self.curve.p != 0:
                raise ValueError(
                    f"degree {self.degree} not divisible by characteristic {self.curve.p}"
                )

    @property
    def type(self) -> int:
        return self.quotient.rank

    @property
    def rank(self) -> int:
        return self.quotient.rank * self.length

    @property
    def degree(self) -> int:
        q, l, g = self.quotient, self.length, self.curve.g
        return l * (q.degree + q.rank * (l - 1) * (g - 1))

    @property
    def bundle(self) -> BundleNumerics:
        return BundleNumerics(self.rank, self.degree)

    @classmethod
    def degree_zero_type_one(cls, r: int, curve: CurveParams) -> "OperShape":
        """The canonical degree-0 type-1 shape: Q = (1, -(r-1)(g-1)), l = r."""
        if r < 2:
            raise ValueError(f"rank must be >= 2, got {r}")
        q = BundleNumerics(1, -(r - 1) * (curve.g - 1))
        return cls(q, r, curve)


def oper_polygon(r: int, g: int) -> HNPolygon:
    """Polygon with breakpoints (i, i(r-i)(g-1)) for 0 <= i <= r."""
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    return HNPolygon(tuple((i, i * (r - i) * (g - 1)) for i in range(r + 1)))


def oper_quotient_degrees(shape: OperShape) -> tuple[BundleNumerics, ...]:
    """(rank, degree) of each graded piece of the flag, top quotient first.

    Piece ``i`` has rank ``rk(Q)`` and degree ``deg(Q) + i rk(Q)(2g-2)``;
    the degrees sum to the shape's total degree.
    """
    q, g = shape.quotient, shape.curve.g
    return tuple(
        BundleNumerics(q.rank, q.degree + i * q.rank * (2 * g - 2))
        for i in range(shape.length)
    )


def dormant_sum_identity(r: int, g: int) -> bool:
    """Degrees deg(Q) + i(2g-2), i = 0..r-1, with deg(Q) = -(r-1)(g-1) sum to 0.

    An identity, exposed as a checkable law.
    """
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    deg_q = -(r - 1) * (g - 1)
    total = sum(deg_q + i * (2 * g - 2) for i in range(r))
    return total == 0


def threshold_C(r: int, g: int) -> int:
    """The characteristic threshold r(r-1)(r-2)(g-1)."""
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    return r * (r - 1) * (r - 2) * (g - 1)


def oper_space_dimensions(r: int, g: int) -> tuple[int, int]:
    """Dimensions of the space of pluricanonical sections and of the oper
    space; both equal (g-1)(r^2 - 1), so the pair is always equal."""
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    dim = (g - 1) * (r * r - 1)
    return dim, dim


def frobenius_oper_consistency(E: BundleNumerics, curve: CurveParams) -> bool:
    """Cross-formula law: the length-p shape on E has degree p * deg of the
    Frobenius pushforward of E. Holds for all inputs."""
    from .frobenius import pushforward_numerics

    p = curve.require_positive_char()
    shape = OperShape(E, p, curve)
    return shape.degree == p * pushforward_numerics(E, curve).degree
