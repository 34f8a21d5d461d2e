"""Command-line entry point.

Exit status: 0 when every verification in the command's scope passed,
1 on a violation or counterexample, 2 on input errors.

Custom generators are supplied as a SchottkyData JSON document:

    {
      "gen_a": ["5/3", "4/3", "4/3", "5/3"],
      "gen_b": ["29/3", "-140/3", "4/3", "-19/3"],
      "circles": {
        "C_a":       {"center": "-5/4", "radius": "3/4"},
        "C_a_prime": {"center": "5/4",  "radius": "3/4"},
        "C_b":       {"center": "19/4", "radius": "3/4"},
        "C_b_prime": {"center": "29/4", "radius": "3/4"}
      }
    }

Matrix entries and circle data are rational strings "p/q"; matrices must
normalize to determinant 1.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click
import jsonschema

from . import limits, report as report_mod
from .freewords import PrefixFreeViolated, WordFamily, theta, verify_free_generation
from .mobius import NonUnitDeterminant
from .render import render_svg
from .schottky import Certificate, SchottkyData, default_generators, verify_ping_pong


def _load_schottky(input_path: Optional[str]) -> SchottkyData:
    if input_path is None:
        return default_generators()
    try:
        with open(input_path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(2)
    try:
        jsonschema.validate(doc, report_mod.SCHOTTKY_SCHEMA)
        return SchottkyData.from_json_dict(doc)
    except (jsonschema.ValidationError, NonUnitDeterminant, KeyError, ValueError) as exc:
        click.echo(f"schema violation: {exc}", err=True)
        sys.exit(2)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _dump(doc: dict, out: Optional[str]) -> None:
    _emit(report_mod.dumps(doc), out)


input_opt = click.option("--input", "input_path", type=click.Path(), default=None,
                         help="SchottkyData JSON file (default: shipped generators).")
out_opt = click.option("--out", "out", type=click.Path(), default=None,
                       help="Output file (default: stdout).")
n_max_opt = click.option("--n-max", default=12, show_default=True,
                         help="Depth of the theta sequence used for geometry.")
max_index_opt = click.option("--max-index", default=6, show_default=True,
                             help="Largest family index for enumeration.")
max_syllables_opt = click.option("--max-syllables", default=3, show_default=True,
                                 help="Syllable bound for exhaustive enumeration.")
max_length_opt = click.option("--max-length", default=8, show_default=True,
                              help="Reduced-word length bound for orbit enumeration.")
tol_opt = click.option("--tol", default=1e-10, show_default=True,
                       help="Bracketing tolerance for the limit point.")
format_opt = click.option("--format", "fmt", type=click.Choice(["json", "svg"]),
                          default=None, help="Output format (inferred per command).")


@click.group()
def main():
    """Construct and verify a rank-2 Schottky group whose odd/even doubled-word
    subgroups intersect trivially while sharing a radial limit point."""


@main.command()
@input_opt
@out_opt
def certify(input_path, out):
    """Certify the ping-pong configuration with exact arithmetic."""
    sd = _load_schottky(input_path)
    verdict = verify_ping_pong(sd)
    _dump(report_mod.certificate_dict(verdict), out)
    sys.exit(0 if isinstance(verdict, Certificate) else 1)


@main.command()
@max_index_opt
@max_syllables_opt
@out_opt
def freeness(max_index, max_syllables, out):
    """Exhaustively verify bounded free generation of the doubled words."""
    fam = WordFamily(max_index=max_index)
    try:
        rep = verify_free_generation(fam, max_syllables)
    except PrefixFreeViolated as exc:
        _dump({"status": "prefix-free-violated", "detail": str(exc)}, out)
        sys.exit(1)
    _dump(
        {
            "status": "verified" if rep.verified else "counterexample",
            "note": "bounded verification",
            "max_index": rep.max_index,
            "max_syllables": rep.max_syllables,
            "words_checked": rep.words_checked,
            "pairs_checked": rep.pairs_checked,
            "counterexample": rep.counterexample,
        },
        out,
    )
    sys.exit(0 if rep.verified else 1)


@main.command()
@input_opt
@max_index_opt
@n_max_opt
@tol_opt
@out_opt
def construct(input_path, max_index, n_max, tol, out):
    """Bracket the shared limit point and report the radial witness."""
    sd = _load_schottky(input_path)
    fam = WordFamily(max_index=max(max_index, n_max))
    try:
        eta = limits.estimate_limit_point(fam, sd, n_max, tol)
    except limits.ToleranceNotReached as exc:
        _dump({"status": "tolerance-not-reached", "detail": str(exc)}, out)
        sys.exit(1)
    witness = limits.radial_check(eta, fam, sd, n_max)
    _dump(
        {
            "status": "ok",
            "eta": report_mod.fmt_float(float(eta.x)),
            "constant_c": report_mod.fmt_float(witness.constant_c),
            "per_n": [
                {"n": n, "distance": report_mod.fmt_float(d)}
                for n, d in witness.per_n
            ],
            "radial_bounded_trend": witness.bounded_trend,
        },
        out,
    )
    sys.exit(0 if witness.bounded_trend else 1)


@main.command()
@input_opt
@max_index_opt
@max_syllables_opt
@out_opt
def intersect(input_path, max_index, max_syllables, out):
    """Enumerate the odd/even theta subgroups and intersect their normal forms."""
    sd = _load_schottky(input_path)
    fam = WordFamily(max_index=max_index)
    odd = [theta(n, fam) for n in range(1, max_index + 1, 2)]
    even = [theta(n, fam) for n in range(2, max_index + 1, 2)]
    g1 = limits.enumerate_subgroup(odd, max_syllables)
    g2 = limits.enumerate_subgroup(even, max_syllables)
    common = limits.intersect_subgroups(g1, g2)
    cross = limits.intersect_by_matrices(g1, g2, sd)
    doc = {
        "g1_size": len(g1),
        "g2_size": len(g2),
        "intersection": sorted((w.to_string() for w in common),
                               key=lambda s: (len(s), s)),
        "matrix_cross_check_agrees": cross == common,
    }
    _dump(doc, out)
    trivial = doc["intersection"] == ["e"] and doc["matrix_cross_check_agrees"]
    sys.exit(0 if trivial else 1)


@main.command()
@input_opt
@n_max_opt
@max_index_opt
@max_syllables_opt
@max_length_opt
@tol_opt
@out_opt
def report(input_path, n_max, max_index, max_syllables, max_length, tol, out):
    """Run the full pipeline into one construction report."""
    sd = _load_schottky(input_path)
    doc = report_mod.build_report(
        sd,
        n_max=n_max,
        max_index=max_index,
        max_syllables=max_syllables,
        max_length=max_length,
        tol=tol,
    )
    _dump(doc, out)
    sys.exit(0 if report_mod.report_verified(doc) else 1)


@main.command()
@input_opt
@n_max_opt
@tol_opt
@out_opt
@format_opt
def render(input_path, n_max, tol, out, fmt):
    """Emit an SVG of the construction on the Poincare disk."""
    if fmt not in (None, "svg"):
        click.echo("render only supports --format svg", err=True)
        sys.exit(2)
    sd = _load_schottky(input_path)
    fam = WordFamily(max_index=max(n_max, 12))
    verdict = verify_ping_pong(sd)
    if not isinstance(verdict, Certificate):
        click.echo(f"violation: {verdict.name}: {verdict.detail}", err=True)
        sys.exit(1)
    try:
        eta = limits.estimate_limit_point(fam, sd, max(n_max, 12), tol)
    except limits.ToleranceNotReached:
        eta = None
    _emit(render_svg(sd, fam, eta, n_max), out)
    sys.exit(0)


if __name__ == "__main__":
    main()
