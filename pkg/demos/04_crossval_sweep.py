"""Cross-validate the symbolic conditions against brute-force enumeration.

Every generator tuple from the length-3 divisor lattice is checked twice:
the condition sets predict reversibility / reverse-complement closure, and
exhaustive enumeration observes them.  Disagreements are not hidden; each
one becomes a named erratum record (the literal equality reading of the
x^i*f2* = f2 clause is the usual culprit: it fails when the reciprocal
only matches up to a unit factor, yet the code is closed anyway).

Run:  python3 demos/04_crossval_sweep.py
"""

from collections import Counter

from z4udna.conditions import cross_validate, sweep
from z4udna.cyclic import GeneratorSet
from z4udna.poly import Poly

reports = sweep(3, max_f14_degree=1)   # a smaller alphabet keeps this quick
agree = sum(r.agree for r in reports)
print(f"n=3 sweep (f14 degree <= 1): {agree}/{len(reports)} agree")

direction = Counter((r.predicted, r.observed) for r in reports if not r.agree)
for (predicted, observed), count in sorted(direction.items()):
    print(f"  predicted={predicted} observed={observed}: {count}")

print("\nthe flagship disagreement family, f1 = f2 = x-1:")
gens = GeneratorSet(3, Poly.parse("3,1"), Poly.parse("3,1"))
report = cross_validate(gens, "reversible")
print(f"  predicted={report.predicted} observed={report.observed} "
      f"erratum={report.erratum}")

from z4udna.conditions import check_reversible_single
cond = check_reversible_single(gens)
print(f"  failures: {list(cond.failures)}")
print(f"  notes:    {list(cond.notes)}")
