"""Tabulate orbit growth of the shipped Schottky group: word counts,
displacement extremes, the fitted quasi-isometry slopes, and ball counts
at a few radii with their completeness flags.

Usage: python scripts/orbit_growth.py [max_length]
"""

import sys
from collections import defaultdict

from schottky_limits.limits import count_orbit_in_ball, orbit_samples, qi_check
from schottky_limits.schottky import default_generators


def main(argv):
    max_length = int(argv[1]) if len(argv) > 1 else 8
    sd = default_generators()

    by_length = defaultdict(list)
    for s in orbit_samples(sd, max_length):
        by_length[len(s.word)].append(s.displacement)

    print(f"{'len':>4} {'words':>7} {'min disp':>10} {'max disp':>10}")
    for n in range(max_length + 1):
        d = by_length[n]
        print(f"{n:>4} {len(d):>7} {min(d):>10.4f} {max(d):>10.4f}")

    qi = qi_check(sd, max_length)
    print(f"\nQI slopes at length {max_length}: "
          f"lower {qi.lower_alpha:.6f} (witness {qi.lower_witness.to_string()}), "
          f"upper {qi.upper_alpha:.6f} (witness {qi.upper_witness.to_string()})")

    print(f"\n{'R':>6} {'count':>7} {'complete':>9}")
    for R in (1.0, 2.5, 4.4, 6.6, 8.8):
        c = count_orbit_in_ball(sd, R, max_length)
        print(f"{R:>6.1f} {c.count:>7} {str(c.complete):>9}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
