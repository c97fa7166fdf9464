"""Frobenius pushforward numerics, subbundle existence bounds and the
destabilization predicates.

Every predicate distinguishes "hypothesis not met" from "false": the
underlying statements are one-directional.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import BundleNumerics, CurveParams


def pushforward_numerics(Q: BundleNumerics, curve: CurveParams) -> BundleNumerics:
    """Numerics of the Frobenius pushforward: rank pq, degree
    deg(Q) + q(p-1)(g-1).

    The resulting slope equals mu(Q)/p + (1 - 1/p)(g-1) exactly.
    """
    p, g = curve.require_positive_char(), curve.g
    q = Q.rank
    return BundleNumerics(p * q, Q.degree + q * (p - 1) * (g - 1))


def hirschowitz_bound(n: int, d: int, m: int, g: int) -> tuple[int, Fraction]:
    """Guaranteed slope of some rank-m subbundle of a rank-n degree-d bundle.

    Returns (epsilon, bound) where epsilon is the unique integer in
    [0, n-1] with epsilon + m(n-m)(g-1) = m d (mod n) and
    bound = d/n - ((n-m)/n)(g-1) - epsilon/(mn).
    """
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    if not 1 <= m <= n - 1:
        raise ValueError(f"subbundle rank {m} out of range [1, {n - 1}]")
    eps = (m * d - m * (n - m) * (g - 1)) % n
    bound = Fraction(d, n) - Fraction(n - m, n) * (g - 1) - Fraction(eps, m * n)
    return eps, bound


@dataclass(frozen=True)
class QuotProblem:
    """Rank-r subsheaves of fixed degree inside the pushforward of Q.

    The standing range is q < r < pq with q = rk(Q).
    """

    Q: BundleNumerics
    r: int
    target_degree: int
    curve: CurveParams

    def __post_init__(self) -> None:
        p = self.curve.require_positive_char()
        q = self.Q.rank
        if not q < self.r < p * q:
            raise ValueError(
                f"target rank must satisfy q < r < pq: q={q}, r={self.r}, pq={p * q}"
            )


@dataclass(frozen=True)
class QuotCertificate:
    """Outcome of the non-emptiness test.

    ``hypothesis_met`` is False when deg(Q) < -(r-q)(g-1); that is not a
    disproof.  When the hypothesis holds, ``case`` records which branch of
    the two-case analysis applies (1: the reduced residue
    r[deg(Q) + (r-q)(g-1)] already lies in [0, pq-1]; 2: it is >= pq) and
    ``slope_lower_bound`` is the certified lower bound (always >= 0) on the
    slope of some rank-r subbundle of the pushforward.
    """

    hypothesis_met: bool
    nonempty: Optional[bool]
    case: Optional[int] = None
    slope_lower_bound: Optional[Fraction] = None


def quot_nonempty(problem: QuotProblem) -> QuotCertificate:
    """Non-emptiness of the degree-0 subsheaf problem, with certificate."""
    if problem.target_degree != 0:
        raise ValueError("non-emptiness certificate applies to target degree 0")
    p, g = problem.curve.p, problem.curve.g
    q, r = problem.Q.rank, problem.r
    if problem.Q.degree < -(r - q) * (g - 1):
        return QuotCertificate(hypothesis_met=False, nonempty=None)
    fq = pushforward_numerics(problem.Q, problem.curve)
    n = p * q
    e = r * (problem.Q.degree + (r - q) * (g - 1))
    base = fq.slope - Fraction(n - r, n) * (g - 1)
    if e <= n - 1:
        # e is the canonical residue, so the existence bound applies verbatim.
        bound = base - Fraction(e, n * r)
        case = 1
    else:
        # epsilon <= pq - 1 always, so -epsilon/(pqr) >= -1/r.
        bound = base - Fraction(1, r)
        case = 2
    return QuotCertificate(
        hypothesis_met=True, nonempty=True, case=case, slope_lower_bound=bound
    )


def quot_dim_lower_bound(problem: QuotProblem) -> int:
    """Lower bound r[(r-q)(g-1) + deg(Q)] on the dimension of any component.

    May be negative; returned verbatim, interpretation left to the caller.
    """
    q, r, g = problem.Q.rank, problem.r, problem.curve.g
    return r * ((r - q) * (g - 1) + problem.Q.degree)


@dataclass(frozen=True)
class ExpectedDimensions:
    """Expected-dimension record for the canonical rank-r problems.

    ``destabilized_locus_dim`` (3g-4) is reported only for rank 2;
    ``quot_expected`` is the expected dimension of the canonical subsheaf
    problem (always 0); ``oper_quot_degree`` is -(r-1)(g-1).
    """

    destabilized_locus_dim: Optional[int]
    quot_expected: int
    oper_quot_degree: int


def expected_dimensions(r: int, g: int) -> ExpectedDimensions:
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    deg_q = -(r - 1) * (g - 1)
    # q = 1 line-bundle problem: r[(r-1)(g-1) + deg_q] = 0 identically.
    quot_expected = r * ((r - 1) * (g - 1) + deg_q)
    return ExpectedDimensions(
        destabilized_locus_dim=3 * g - 4 if r == 2 else None,
        quot_expected=quot_expected,
        oper_quot_degree=deg_q,
    )


@dataclass(frozen=True)
class DestabilizationPredicates:
    """Component predicates of the destabilized-bundle correspondence.

    ``degree0_target`` is None when deg(V) != 0 (the refined degree -1
    statement only applies to degree-0 bundles).
    """

    p_exceeds_threshold: bool
    rank_ok: bool
    slope_ok: bool
    degree0_target: Optional[bool]


def destabilization_predicates(
    V: BundleNumerics, Q: BundleNumerics, curve: CurveParams
) -> DestabilizationPredicates:
    from .opers import threshold_C

    p = curve.require_positive_char()
    return DestabilizationPredicates(
        p_exceeds_threshold=p > threshold_C(V.rank, curve.g),
        rank_ok=Q.rank < V.rank,
        slope_ok=Q.slope < p * V.slope,
        degree0_target=(Q.degree == -1) if V.degree == 0 else None,
    )


@dataclass(frozen=True)
class MaxDegreeCertificate:
    """Certificate that the maximal degree of rank-r subbundles of the
    pushforward equals 0.

    When a hypothesis fails it is reported in ``failed_hypotheses``, not
    thrown.  When all hypotheses hold, ``max_degree`` is 0, witnessed from
    below by the non-emptiness certificate (some degree-0 subbundle exists)
    and from above by the strict slope bound ``slope_upper_bound`` < 1/r.
    """

    hypotheses_met: bool
    failed_hypotheses: tuple[str, ...]
    max_degree: Optional[int] = None
    slope_upper_bound: Optional[Fraction] = None
    nonempty: Optional[QuotCertificate] = None


def maxdegree_certificate(
    Q: BundleNumerics, r: int, curve: CurveParams
) -> MaxDegreeCertificate:
    from .filtrations import worst_case_subbundle_slope_bound

    p, g = curve.require_positive_char(), curve.g
    q = Q.rank
    failed = []
    if not q < r < p * q:
        failed.append(f"rank range q < r < pq fails: q={q}, r={r}, pq={p * q}")
    if not -(r - q) * (g - 1) <= Q.degree < 0:
        failed.append(
            f"degree range -(r-q)(g-1) <= deg(Q) < 0 fails: deg(Q)={Q.degree}"
        )
    if not p > r * (r - 1) * (g - 1):
        failed.append(f"p > r(r-1)(g-1) fails: p={p}, r(r-1)(g-1)={r*(r-1)*(g-1)}")
    if failed:
        return MaxDegreeCertificate(hypotheses_met=False, failed_hypotheses=tuple(failed))
    cert = quot_nonempty(QuotProblem(Q, r, 0, curve))
    # p > r(r-1)(g-1) makes the closed-form bound with w = r strictly
    # smaller than mu(Q)/p + 1/r < 1/r, hence every rank-r subbundle has
    # slope <= 0, while the certificate exhibits one of slope exactly 0.
    upper = worst_case_subbundle_slope_bound(Q, r, curve)
    return MaxDegreeCertificate(
        hypotheses_met=True,
        failed_hypotheses=(),
        max_degree=0,
        slope_upper_bound=upper,
        nonempty=cert,
    )
