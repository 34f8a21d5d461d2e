"""Orbit geometry of the Schottky group: bounded enumeration, discreteness
counting, limit-point bracketing for the theta sequence, radial certification,
quasi-isometry envelopes, and bounded subgroup intersection.

All verdicts here are bounded-depth evidence at the stated ranges, never
claims about the infinite group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from .freewords import EMPTY, Word, WordFamily, reduce, theta
from .mobius import (
    BASE_POINT,
    Boundary,
    GeodesicRay,
    GroupElement,
    Interior,
    apply,
    dist_to_ray,
    hyp_dist,
    inverse,
)
from .schottky import SchottkyData, nested_disk, word_to_element


class ToleranceNotReached(ValueError):
    def __init__(self, achieved_width: float, n_used: int):
        self.achieved_width = achieved_width
        self.n_used = n_used
        super().__init__(
            f"bracket width {achieved_width:g} after {n_used} prefixes"
        )


@dataclass(frozen=True)
class OrbitSample:
    word: Word
    element: GroupElement
    point: Interior
    displacement: float


def orbit_samples(sd: SchottkyData, max_length: int) -> Iterator[OrbitSample]:
    """All reduced words up to max_length with their exact elements, by DFS.

    Deterministic order: depth-first over letters sorted as a, A, b, B,
    extending only reduced words; the identity sample comes first.
    """
    o = BASE_POINT
    letters = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]
    gens = {let: sd.generator(*let) for let in letters}

    def sample(word_letters, g):
        w = Word(tuple(word_letters))
        p = apply(g, o)
        return OrbitSample(w, g, p, hyp_dist(o, p))

    yield sample([], GroupElement.identity())

    def walk(word_letters, g):
        for let in letters:
            if word_letters and word_letters[-1] == (let[0], -let[1]):
                continue
            nl = word_letters + [let]
            ng = g * gens[let]
            yield sample(nl, ng)
            if len(nl) < max_length:
                yield from walk(nl, ng)

    yield from walk([], GroupElement.identity())


@dataclass(frozen=True)
class QIEstimate:
    """Affine envelopes lower_alpha*|w| - lower_beta <= displacement(w)
    <= upper_alpha*|w| + upper_beta over all reduced words up to max_length."""

    lower_alpha: float
    lower_beta: float
    upper_alpha: float
    upper_beta: float
    max_length: int
    lower_witness: Word = EMPTY
    upper_witness: Word = EMPTY


def qi_check(sd: SchottkyData, max_length: int) -> QIEstimate:
    """Fit the tightest zero-intercept slopes over the bounded enumeration.

    With zero intercepts the envelopes trivially admit the identity sample
    (displacement 0 at length 0); the slopes are the extreme displacement
    per letter over all nonempty reduced words.
    """
    lower, upper = math.inf, 0.0
    lower_w = upper_w = EMPTY
    for s in orbit_samples(sd, max_length):
        if len(s.word) == 0:
            continue
        ratio = s.displacement / len(s.word)
        if ratio < lower:
            lower, lower_w = ratio, s.word
        if ratio > upper:
            upper, upper_w = ratio, s.word
    return QIEstimate(lower, 0.0, upper, 0.0, max_length, lower_w, upper_w)


@dataclass(frozen=True)
class OrbitCount:
    """Count of orbit points inside a hyperbolic ball around the base point."""

    count: int
    radius: float
    max_length: int
    complete: bool  # True when the QI lower bound rules out longer words
    qi: QIEstimate


def count_orbit_in_ball(sd: SchottkyData, R: float, max_length: int) -> OrbitCount:
    """Count reduced words of length <= max_length with displacement <= R.

    The count is flagged complete when the fitted lower envelope forces every
    word of length max_length + 1 outside the ball; otherwise it is returned
    flagged partial.
    """
    if R <= 0:
        raise ValueError("ball radius must be positive")
    qi = qi_check(sd, max_length)
    count = sum(1 for s in orbit_samples(sd, max_length) if s.displacement <= R)
    certified = qi.lower_alpha * (max_length + 1) - qi.lower_beta > R
    return OrbitCount(count, R, max_length, certified, qi)


def limit_point_brackets(
    fam: WordFamily, sd: SchottkyData, n_max: int
) -> List[Tuple[Fraction, Fraction]]:
    """Exact nested boundary intervals from the disks of the theta prefixes.

    theta_n is a prefix of theta_{n+1} (the default family uses only positive
    letters), so the disks nest and the footprints bracket the limit point.
    """
    brackets = []
    for n in range(1, n_max + 1):
        disk = nested_disk(theta(n, fam), sd)
        brackets.append(disk.interval())
    return brackets


def estimate_limit_point(
    fam: WordFamily, sd: SchottkyData, n_max: int, tol: float
) -> Boundary:
    """Certified bracketing of the limit of theta_n(i) on the boundary.

    Fails unless some interval up to depth n_max has Euclidean width below
    tol. The returned point is the midpoint of the deepest interval, which
    is far tighter than tol: downstream radial distances need the limit
    point resolved at the scale of the deepest orbit point, not merely tol.
    The true limit lies inside every computed interval.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    brackets = limit_point_brackets(fam, sd, n_max)
    widths = [float(hi - lo) for lo, hi in brackets]
    if min(widths) >= tol:
        raise ToleranceNotReached(min(widths), n_max)
    lo, hi = brackets[-1]
    return Boundary((lo + hi) / 2)


@dataclass(frozen=True)
class RadialWitness:
    """Distances from the theta orbit points to the ray toward the limit point."""

    eta: Boundary
    constant_c: float
    per_n: Tuple[Tuple[int, float], ...]

    @property
    def bounded_trend(self) -> bool:
        """No-growth heuristic: the overall max stays within a factor 1.5 of
        the first-half max, and the last-quartile max does not exceed it."""
        n = len(self.per_n)
        if n < 2:
            return True
        half = max(d for _, d in self.per_n[: max(1, n // 2)])
        tail = max(d for _, d in self.per_n[n - max(1, n // 4) :])
        return self.constant_c <= 1.5 * half and tail <= self.constant_c


def radial_check(
    eta: Boundary, fam: WordFamily, sd: SchottkyData, n_max: int
) -> RadialWitness:
    """Distance from each theta_n(i) to the ray [i, eta], n = 1..n_max.

    The reported constant is the max; boundedness of the whole sequence is
    only evidenced, not proven, at this depth.
    """
    if not isinstance(eta, Boundary):
        raise ValueError("eta must be a boundary point")
    ray = GeodesicRay(BASE_POINT, eta)
    per_n = []
    for n in range(1, n_max + 1):
        p = apply(word_to_element(theta(n, fam), sd), BASE_POINT)
        per_n.append((n, dist_to_ray(p, ray)))
    c = max(d for _, d in per_n)
    return RadialWitness(eta, c, tuple(per_n))


def point_along_ray(ray: GeodesicRay, t: float) -> Interior:
    """The point at hyperbolic distance t from the base along the ray."""
    from .mobius import _raw_apply, _raw_inverse, _standard_position

    g = _standard_position(ray)
    base = _raw_apply(g, ray.base)
    q = Interior(0.0, float(base.y) * math.exp(t))
    return _raw_apply(_raw_inverse(g), q)


def uniform_radial_check(
    eta: Boundary,
    gens: Sequence[Word],
    sd: SchottkyData,
    depth: int,
    samples: int = 200,
    ray_length: Optional[float] = None,
) -> float:
    """Empirical uniform-radial constant for the subgroup generated by gens.

    Samples the ray [i, eta] out to ray_length (default: the distance
    reachable by the bounded orbit enumeration) and returns the max over
    samples of the min distance to the enumerated orbit. Bounded-depth
    evidence only; monotonicity in depth holds for a fixed ray_length.
    """
    ray = GeodesicRay(BASE_POINT, eta)
    words = enumerate_subgroup(gens, depth) if gens else {EMPTY}
    orbit = [apply(word_to_element(w, sd), BASE_POINT) for w in sorted(
        words, key=lambda w: (len(w), w.to_string())
    )]
    reach = ray_length
    if reach is None:
        reach = max((hyp_dist(BASE_POINT, p) for p in orbit), default=0.0)
    if reach == 0.0:
        reach = 1.0
    worst = 0.0
    for k in range(samples + 1):
        t = reach * k / samples
        q = point_along_ray(ray, t)
        worst = max(worst, min(hyp_dist(q, p) for p in orbit))
    return worst


def enumerate_subgroup(gens: Sequence[Word], max_syllables: int) -> Set[Word]:
    """Reduced {a,b} normal forms of all products of <= max_syllables factors
    from gens and their inverses, reduced as symbol sequences first."""
    if not gens:
        raise ValueError("gens must be nonempty")
    factors = [reduce(g) for g in gens]
    out: Set[Word] = {EMPTY}
    frontier: List[Tuple[Tuple[Tuple[int, int], ...], Word]] = [((), EMPTY)]
    for _ in range(max_syllables):
        nxt = []
        for symbols, word in frontier:
            for i in range(len(factors)):
                for e in (1, -1):
                    if symbols and symbols[-1] == (i, -e):
                        continue
                    f = factors[i] if e == 1 else factors[i].inverse()
                    nw = reduce(word * f)
                    nxt.append((symbols + ((i, e),), nw))
                    out.add(nw)
        frontier = nxt
    return out


def intersect_subgroups(g1: Set[Word], g2: Set[Word]) -> Set[Word]:
    """Exact intersection on reduced normal forms.

    Valid as a group-element intersection once freeness of the ambient group
    is certified, since normal forms are then faithful.
    """
    return g1 & g2


def intersect_by_matrices(
    g1: Set[Word], g2: Set[Word], sd: SchottkyData
) -> Set[Word]:
    """Cross-check of intersect_subgroups by exact matrix comparison."""
    by_matrix = {word_to_element(w, sd): w for w in g1}
    return {w for w in g2 if word_to_element(w, sd) in by_matrix}
