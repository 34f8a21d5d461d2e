"""Rank-2 Schottky data: paired half-plane circles, the shipped default
generators, the exact ping-pong certifier, and nested disk images.

All certification is exact rational arithmetic; tangent circles are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .freewords import Word
from .mobius import (
    BASE_POINT,
    GroupElement,
    Interior,
    IsometryClass,
    apply,
    classify,
    inverse,
)


class EmptyWord(ValueError):
    pass


class NotReducedWord(ValueError):
    pass


class UnboundedDiskImage(ValueError):
    """The Mobius image of the disk is not a bounded disk (pole inside)."""


@dataclass(frozen=True)
class Circle:
    """Half-plane circle orthogonal to the real line: real center, r > 0.

    The bounded side is the open half-disk {|z - center| < radius, y > 0}.
    """

    center: Fraction
    radius: Fraction

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    def interval(self) -> Tuple[Fraction, Fraction]:
        return (self.center - self.radius, self.center + self.radius)

    def contains(self, p: Interior) -> bool:
        """Strict containment of an interior point in the bounded side."""
        dx = p.x - self.center
        return dx * dx + p.y * p.y < self.radius * self.radius

    def contains_circle(self, other: "Circle") -> bool:
        """Strict nesting of another half-plane circle's bounded side."""
        lo, hi = self.interval()
        olo, ohi = other.interval()
        return lo < olo and ohi < hi


def image_circle(g: GroupElement, c: Circle, require_bounded: bool = False) -> Circle:
    """Exact Mobius image of a boundary-orthogonal circle, as a curve.

    The image circle's footprint endpoints are the images of the source
    endpoints. With require_bounded the pole of g must lie outside the
    closed footprint, which makes the bounded side map onto the bounded
    side of the result; otherwise only the curve identity is meaningful.
    """
    lo, hi = c.interval()
    if g.m21 != 0:
        pole = -g.m22 / g.m21
        if pole == lo or pole == hi:
            raise UnboundedDiskImage(f"footprint endpoint maps to infinity")
        if require_bounded and lo < pole < hi:
            raise UnboundedDiskImage(f"pole {pole} inside footprint [{lo}, {hi}]")
    ilo = (g.m11 * lo + g.m12) / (g.m21 * lo + g.m22)
    ihi = (g.m11 * hi + g.m12) / (g.m21 * hi + g.m22)
    if ilo > ihi:
        ilo, ihi = ihi, ilo
    return Circle((ilo + ihi) / 2, (ihi - ilo) / 2)


@dataclass(frozen=True)
class SchottkyData:
    gen_a: GroupElement
    gen_b: GroupElement
    circle_a: Circle        # a maps the exterior of circle_a ...
    circle_a_prime: Circle  # ... onto the bounded side of circle_a_prime
    circle_b: Circle
    circle_b_prime: Circle

    def circles(self) -> Tuple[Circle, Circle, Circle, Circle]:
        return (self.circle_a, self.circle_a_prime, self.circle_b, self.circle_b_prime)

    def generator(self, letter: str, exponent: int) -> GroupElement:
        g = self.gen_a if letter == "a" else self.gen_b
        return g if exponent == 1 else inverse(g)

    def target_disk(self, letter: str, exponent: int) -> Circle:
        """The circle whose bounded side receives (letter^exponent)(exterior)."""
        if letter == "a":
            return self.circle_a_prime if exponent == 1 else self.circle_a
        return self.circle_b_prime if exponent == 1 else self.circle_b

    def source_circle(self, letter: str, exponent: int) -> Circle:
        """The circle whose exterior is the domain side of letter^exponent."""
        if letter == "a":
            return self.circle_a if exponent == 1 else self.circle_a_prime
        return self.circle_b if exponent == 1 else self.circle_b_prime

    def to_json_dict(self) -> dict:
        def mat(g):
            return [str(v) for v in g.entries()]

        def circ(c):
            return {"center": str(c.center), "radius": str(c.radius)}

        return {
            "gen_a": mat(self.gen_a),
            "gen_b": mat(self.gen_b),
            "circles": {
                "C_a": circ(self.circle_a),
                "C_a_prime": circ(self.circle_a_prime),
                "C_b": circ(self.circle_b),
                "C_b_prime": circ(self.circle_b_prime),
            },
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SchottkyData":
        def mat(entries):
            if not (isinstance(entries, list) and len(entries) == 4):
                raise ValueError("matrix must be a list of 4 rational strings")
            return GroupElement.of(*[Fraction(s) for s in entries])

        def circ(c):
            return Circle(Fraction(c["center"]), Fraction(c["radius"]))

        circles = d["circles"]
        return cls(
            gen_a=mat(d["gen_a"]),
            gen_b=mat(d["gen_b"]),
            circle_a=circ(circles["C_a"]),
            circle_a_prime=circ(circles["C_a_prime"]),
            circle_b=circ(circles["C_b"]),
            circle_b_prime=circ(circles["C_b_prime"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SchottkyData":
        return cls.from_json_dict(json.loads(text))


def default_generators() -> SchottkyData:
    """The shipped rank-2 instance.

    gen_a is diag(3, 1/3) conjugated to have axis endpoints -1 and 1, so the
    base point i lies on its axis; gen_b is gen_a conjugated by z -> z + 6.
    The paired circles are the isometric circles of each generator and its
    inverse; their footprints [-2,-1/2], [1/2,2], [4,11/2], [13/2,8] are
    pairwise disjoint.
    """
    f = Fraction
    gen_a = GroupElement.of(f(5, 3), f(4, 3), f(4, 3), f(5, 3))
    gen_b = GroupElement.of(f(29, 3), f(-140, 3), f(4, 3), f(-19, 3))
    return SchottkyData(
        gen_a=gen_a,
        gen_b=gen_b,
        circle_a=Circle(f(-5, 4), f(3, 4)),
        circle_a_prime=Circle(f(5, 4), f(3, 4)),
        circle_b=Circle(f(19, 4), f(3, 4)),
        circle_b_prime=Circle(f(29, 4), f(3, 4)),
    )


@dataclass(frozen=True)
class Certificate:
    checks: Tuple[str, ...]

    @property
    def certified(self) -> bool:
        return True


@dataclass(frozen=True)
class Violation:
    name: str
    detail: str

    @property
    def certified(self) -> bool:
        return False


CIRCLE_NAMES = ("C_a", "C_a_prime", "C_b", "C_b_prime")


def verify_ping_pong(sd: SchottkyData) -> Union[Certificate, Violation]:
    """Exact certification of the Schottky (ping-pong) configuration.

    Checks, in order: both generators loxodromic; the four footprint
    intervals pairwise disjoint (tangency fails); each generator maps its
    source circle exactly onto its partner; an exterior sample point lands
    strictly inside the partner's bounded side; and the base point i lies
    outside all four closed disks (required by the orbit-nesting machinery).
    """
    checks: List[str] = []

    for name, g in (("gen_a", sd.gen_a), ("gen_b", sd.gen_b)):
        if g.is_identity() or classify(g) != IsometryClass.LOXODROMIC:
            return Violation("not-loxodromic", f"{name} is not loxodromic")
        checks.append(f"{name} is loxodromic (|trace| > 2 exactly)")

    circles = sd.circles()
    for i in range(4):
        for j in range(i + 1, 4):
            lo1, hi1 = circles[i].interval()
            lo2, hi2 = circles[j].interval()
            if not (hi1 < lo2 or hi2 < lo1):
                return Violation(
                    "disks-not-disjoint",
                    f"{CIRCLE_NAMES[i]} and {CIRCLE_NAMES[j]} footprints meet",
                )
    checks.append("four disk footprints pairwise disjoint (strict, exact)")

    # exterior sample point: above every disk, outside all of them
    top = max(c.radius for c in circles)
    sample = Interior(Fraction(0), 2 * top + 1)

    pairings = [
        ("gen_a", sd.gen_a, sd.circle_a, sd.circle_a_prime),
        ("gen_a^-1", inverse(sd.gen_a), sd.circle_a_prime, sd.circle_a),
        ("gen_b", sd.gen_b, sd.circle_b, sd.circle_b_prime),
        ("gen_b^-1", inverse(sd.gen_b), sd.circle_b_prime, sd.circle_b),
    ]
    for name, g, src, dst in pairings:
        try:
            img = image_circle(g, src)
        except UnboundedDiskImage as exc:
            return Violation("image-circle-unbounded", f"{name}: {exc}")
        if img != dst:
            return Violation(
                "image-circle-mismatch",
                f"{name} maps its circle to {img}, expected {dst}",
            )
        if not dst.contains(apply(g, sample)):
            return Violation(
                "side-mapping-failed",
                f"{name} does not send the exterior sample into its target disk",
            )
        checks.append(f"{name}: image circle exact, exterior maps inside partner")

    o = BASE_POINT
    for name, c in zip(CIRCLE_NAMES, circles):
        dx = o.x - c.center
        if dx * dx + o.y * o.y <= c.radius * c.radius:
            return Violation("base-point-inside-disk", f"base point i inside {name}")
    checks.append("base point i exterior to all four closed disks")

    return Certificate(tuple(checks))


def word_to_element(w: Word, sd: SchottkyData) -> GroupElement:
    """Exact matrix of a word: a homomorphism from words to isometries."""
    g = GroupElement.identity()
    for letter, exponent in w.letters:
        g = g * sd.generator(letter, exponent)
    return g


def nested_disk(w: Word, sd: SchottkyData) -> Circle:
    """The disk guaranteed to contain w(i) and every w w'(i) with w w' reduced.

    For w = x_1 ... x_n this is (x_1 ... x_{n-1}) applied to the target disk
    of x_n; computed letterwise so each image is a bounded disk by the
    ping-pong disjointness.
    """
    if len(w) == 0:
        raise EmptyWord("nested_disk needs a nonempty word")
    if not w.is_reduced():
        raise NotReducedWord("nested_disk needs a reduced word")
    letter, exponent = w.letters[-1]
    disk = sd.target_disk(letter, exponent)
    for letter, exponent in reversed(w.letters[:-1]):
        disk = image_circle(sd.generator(letter, exponent), disk, require_bounded=True)
    return disk
