"""Full-pipeline construction report and its JSON schema.

The report JSON is deterministic: fixed field order, rationals as "p/q"
strings, floats as decimal strings with 12 significant digits.
"""

from __future__ import annotations

import json
from typing import Optional

from .freewords import WordFamily, theta, verify_free_generation
from .limits import (
    enumerate_subgroup,
    estimate_limit_point,
    intersect_subgroups,
    qi_check,
    radial_check,
)
from .schottky import Certificate, SchottkyData, Violation, verify_ping_pong


def fmt_float(v: float) -> str:
    return format(v, ".12g")


def certificate_dict(verdict) -> dict:
    if isinstance(verdict, Certificate):
        return {"status": "certified", "checks": list(verdict.checks)}
    return {
        "status": "violation",
        "name": verdict.name,
        "detail": verdict.detail,
    }


def build_report(
    sd: SchottkyData,
    fam: Optional[WordFamily] = None,
    n_max: int = 12,
    max_index: int = 6,
    max_syllables: int = 3,
    max_length: int = 8,
    tol: float = 1e-10,
) -> dict:
    """Run the whole pipeline and assemble the construction report.

    Pipeline: ping-pong certificate, bounded free-generation check, limit
    point bracketing, radial witness, QI envelope, and the odd/even theta
    subgroup intersection at the given syllable depth.
    """
    # geometry walks the theta sequence to n_max; exhaustive combinatorics
    # stays at max_index
    fam = fam or WordFamily(max_index=max(max_index, n_max))
    comb_fam = WordFamily(rule=fam.rule, max_index=max_index)
    verdict = verify_ping_pong(sd)
    report: dict = {"certificate": certificate_dict(verdict)}
    if isinstance(verdict, Violation):
        return report

    free = verify_free_generation(comb_fam, max_syllables)
    report["free_generation"] = {
        "verified": free.verified,
        "words_checked": free.words_checked,
        "pairs_checked": free.pairs_checked,
        "counterexample": free.counterexample,
        "note": "bounded verification",
    }

    eta = estimate_limit_point(fam, sd, n_max, tol)
    witness = radial_check(eta, fam, sd, n_max)
    report["eta"] = fmt_float(float(eta.x))
    report["constant_c"] = fmt_float(witness.constant_c)
    report["per_n"] = [
        {"n": n, "distance": fmt_float(d)} for n, d in witness.per_n
    ]
    report["radial_bounded_trend"] = witness.bounded_trend

    qi = qi_check(sd, max_length)
    report["qi"] = {
        "alphas": {
            "lower": fmt_float(qi.lower_alpha),
            "upper": fmt_float(qi.upper_alpha),
        },
        "betas": {
            "lower": fmt_float(qi.lower_beta),
            "upper": fmt_float(qi.upper_beta),
        },
        "max_length": qi.max_length,
    }

    odd = [theta(n, comb_fam) for n in range(1, max_index + 1, 2)]
    even = [theta(n, comb_fam) for n in range(2, max_index + 1, 2)]
    g1 = enumerate_subgroup(odd, max_syllables)
    g2 = enumerate_subgroup(even, max_syllables)
    common = intersect_subgroups(g1, g2)
    report["intersection"] = sorted(
        (w.to_string() for w in common), key=lambda s: (len(s), s)
    )
    report["subgroup_sizes"] = {"g1": len(g1), "g2": len(g2)}
    return report


def report_verified(report: dict) -> bool:
    return (
        report["certificate"]["status"] == "certified"
        and report.get("free_generation", {}).get("verified", False)
        and report.get("radial_bounded_trend", False)
        and report.get("intersection") == ["e"]
    )


def dumps(report: dict) -> str:
    """Byte-stable serialization: insertion order, two-space indent."""
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "ConstructionReport",
    "type": "object",
    "required": ["certificate"],
    "properties": {
        "certificate": {
            "type": "object",
            "required": ["status"],
            "properties": {
                "status": {"enum": ["certified", "violation"]},
                "checks": {"type": "array", "items": {"type": "string"}},
                "name": {"type": "string"},
                "detail": {"type": "string"},
            },
        },
        "free_generation": {
            "type": "object",
            "required": ["verified", "words_checked", "pairs_checked", "note"],
            "properties": {
                "verified": {"type": "boolean"},
                "words_checked": {"type": "integer"},
                "pairs_checked": {"type": "integer"},
                "counterexample": {"type": ["string", "null"]},
                "note": {"type": "string"},
            },
        },
        "eta": {"type": "string"},
        "constant_c": {"type": "string"},
        "per_n": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "distance"],
                "properties": {
                    "n": {"type": "integer"},
                    "distance": {"type": "string"},
                },
            },
        },
        "radial_bounded_trend": {"type": "boolean"},
        "qi": {
            "type": "object",
            "required": ["alphas", "betas", "max_length"],
            "properties": {
                "alphas": {
                    "type": "object",
                    "required": ["lower", "upper"],
                },
                "betas": {
                    "type": "object",
                    "required": ["lower", "upper"],
                },
                "max_length": {"type": "integer"},
            },
        },
        "intersection": {"type": "array", "items": {"type": "string"}},
        "subgroup_sizes": {"type": "object"},
    },
}

SCHOTTKY_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "SchottkyData",
    "type": "object",
    "required": ["gen_a", "gen_b", "circles"],
    "properties": {
        "gen_a": {
            "type": "array",
            "items": {"type": "string"},
            "minItems": 4,
            "maxItems": 4,
        },
        "gen_b": {
            "type": "array",
            "items": {"type": "string"},
            "minItems": 4,
            "maxItems": 4,
        },
        "circles": {
            "type": "object",
            "required": ["C_a", "C_a_prime", "C_b", "C_b_prime"],
            "additionalProperties": {
                "type": "object",
                "required": ["center", "radius"],
                "properties": {
                    "center": {"type": "string"},
                    "radius": {"type": "string"},
                },
            },
        },
    },
}
