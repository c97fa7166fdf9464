"""Filtration profiles and the discrete slope optimization.

A profile is the sequence of ranks (r_0 >= ... >= r_m >= 1, r_0 <= cap)
induced on a subbundle by the canonical flag of a pushforward; the score
sum(i * r_i) controls how far the subbundle slope can rise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .core import BundleNumerics, CurveParams


@dataclass(frozen=True, order=True)
class FiltrationProfile:
    """Weakly decreasing positive integer parts capped by ``cap``."""

    parts: tuple[int, ...]
    cap: int

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("profile needs at least one part")
        if self.cap < 1:
            raise ValueError(f"cap must be >= 1, got {self.cap}")
        if parts[0] > self.cap:
            raise ValueError(f"leading part {parts[0]} exceeds cap {self.cap}")
        if parts[-1] < 1:
            raise ValueError("parts must be positive")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError("parts must be weakly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        """Largest index: the profile has m + 1 parts."""
        return len(self.parts) - 1


def profile_score(profile: FiltrationProfile) -> int:
    """sum(i * r_i) over the parts."""
    return sum(i * r for i, r in enumerate(profile.parts))


def max_score_closed_form(w: int) -> int:
    """Closed-form maximum w(w-1)/2 of the score over weight-w profiles."""
    if w < 1:
        raise ValueError(f"weight must be >= 1, got {w}")
    return w * (w - 1) // 2


def _partitions(w: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing positive sequences with parts <= cap summing to w."""

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(largest, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(w, cap, ())


def max_score_brute_force(
    w: int, q: int
) -> tuple[int, tuple[FiltrationProfile, ...]]:
    """Exhaustive maximum of the score over all profiles of weight w, cap q.

    Iterates over all lengths 1..w.  Returns the maximum and every
    maximizer, sorted.  Independent oracle for the closed form.
    """
    if w < 1:
        raise ValueError(f"weight must be >= 1, got {w}")
    if q < 1:
        raise ValueError(f"cap must be >= 1, got {q}")
    best = -1
    argmax: list[FiltrationProfile] = []
    for parts in _partitions(w, q):
        score = sum(i * r for i, r in enumerate(parts))
        if score > best:
            best = score
            argmax = [FiltrationProfile(parts, q)]
        elif score == best:
            argmax.append(FiltrationProfile(parts, q))
    if best < 0:
        raise ValueError(f"no profile of weight {w} with cap {q}")
    return best, tuple(sorted(argmax))


def sun_gap_term(parts: tuple[int, ...], g: int, p: int) -> Fraction:
    """(2(g-1)/(pw)) * sum(((p-1)/2 - i) r_i), evaluated exactly.

    Algebraic in p: for p = 2 the half-integer (p-1)/2 is kept as the
    exact rational 1/2.
    """
    w = sum(parts)
    half = Fraction(p - 1, 2)
    total = sum((half - i) * r for i, r in enumerate(parts))
    return Fraction(2 * (g - 1), p * w) * total


def sun_bound(
    profile: FiltrationProfile, curve: CurveParams, enforce_length: bool = True
) -> Fraction:
    """Guaranteed gap between the pushforward slope and the slope of a
    subbundle inducing this profile.

    With ``enforce_length`` (the default) the profile may not be longer
    than the canonical flag, i.e. m <= p - 1.
    """
    p = curve.require_positive_char()
    if enforce_length and profile.m >= p:
        raise ValueError(
            f"profile has {profile.m + 1} parts, longer than the canonical flag ({p})"
        )
    return sun_gap_term(profile.parts, curve.g, p)


def worst_case_subbundle_slope_bound(
    Q: BundleNumerics, w: int, curve: CurveParams
) -> Fraction:
    """mu(Q)/p + (g-1)(w-1)/p: the slope bound for rank-w subbundles of the
    pushforward, obtained from the gap formula at the score maximum."""
    p, g = curve.require_positive_char(), curve.g
    if w < 1:
        raise ValueError(f"rank must be >= 1, got {w}")
    return Q.slope / p + Fraction((g - 1) * (w - 1), p)


class OperSlopeBound(NamedTuple):
    bound: Fraction
    within_semistable_target: bool


def oper_subbundle_slope_bound(
    profile: FiltrationProfile, Q: BundleNumerics, l: int, g: int
) -> OperSlopeBound:
    """mu(Q) + (2g-2)/w * score: slope bound for a subbundle of a length-l
    flagged bundle inducing this profile, and whether it stays within the
    semistability target mu(Q) + (l-1)(g-1).  It always does."""
    if profile.m > l - 1:
        raise ValueError(
            f"profile has {profile.m + 1} parts, flag has length {l}"
        )
    bound = Q.slope + Fraction(2 * g - 2, profile.weight) * profile_score(profile)
    target = Q.slope + (l - 1) * (g - 1)
    return OperSlopeBound(bound, bound <= target)


def rearrangement_check(profile: FiltrationProfile, m: int | None = None) -> bool:
    """sum over i <= m/2 of (m - 2i)(r_i - r_{m-i}) is >= 0.

    Always true for weakly decreasing profiles; exposed as a law.
    """
    if m is None:
        m = profile.m
    elif m != profile.m:
        raise ValueError(f"profile has {profile.m + 1} parts, expected {m + 1}")
    r = profile.parts
    total = sum((m - 2 * i) * (r[i] - r[m - i]) for i in range(m // 2 + 1))
    return total >= 0
