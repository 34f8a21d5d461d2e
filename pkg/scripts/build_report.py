"""Run the full verification pipeline on the shipped generators and write
report.json plus figure.svg into an output directory.

Usage: python scripts/build_report.py [outdir]
"""

import pathlib
import sys

from schottky_limits.freewords import WordFamily
from schottky_limits.limits import estimate_limit_point
from schottky_limits.render import render_svg
from schottky_limits.report import build_report, dumps, report_verified
from schottky_limits.schottky import default_generators


def main(argv):
    outdir = pathlib.Path(argv[1]) if len(argv) > 1 else pathlib.Path("out")
    outdir.mkdir(parents=True, exist_ok=True)

    sd = default_generators()
    doc = build_report(sd)
    (outdir / "report.json").write_text(dumps(doc))

    fam = WordFamily(max_index=12)
    eta = estimate_limit_point(fam, sd, 12, 1e-10)
    (outdir / "figure.svg").write_text(render_svg(sd, fam, eta, 12))

    status = "verified" if report_verified(doc) else "NOT verified"
    print(f"report {status}: eta = {doc['eta']}, c = {doc['constant_c']}")
    print(f"wrote {outdir / 'report.json'} and {outdir / 'figure.svg'}")
    return 0 if report_verified(doc) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))
