"""Exhaustive verification sweeps over every small instance.

Two claims, checked mechanically against the exact solver:

* zero-distance criterion: W = 0 exactly when the diagram is fixed by
  the permutation.  Holds for every instance under every cost kind.
* candidate-matching optimality: the plan that fixes shared cells and
  permutes the rest attains the optimum.  Under the squared cost this
  fails (relay moves through shared cells are cheaper); under metric
  costs it survives until two moved blocks can be cross-paired.
"""

from partition_ot import (
    all_permutations,
    format_summary,
    involutions,
    verify_theorem_cor,
    verify_theorem_main,
)

print("zero-distance criterion, all kinds, every instance:")
for kind in ("sq", "l1", "euclid"):
    flat = verify_theorem_cor(1, 9, involutions(2), kind=kind)
    plane = verify_theorem_cor(2, 6, all_permutations(3), kind=kind)
    print(f"  kind={kind}: flat {flat.summary['records']} records, "
          f"{flat.violations} violations; plane {plane.summary['records']} records, "
          f"{plane.violations} violations")

print("\ncandidate matching vs exact optimum (involutions):")
for kind in ("sq", "l1"):
    flat = verify_theorem_main(1, 8, involutions(2), kind=kind)
    plane = verify_theorem_main(2, 6, involutions(3), kind=kind)
    print(f"  kind={kind}: flat {flat.violations}/{flat.summary['records']} "
          f"suboptimal, plane {plane.violations}/{plane.summary['records']}")

print("\nsmallest squared-cost counterexamples (flat, swap):")
report = verify_theorem_main(1, 6, involutions(2))
for rec in report.records:
    if rec["violation"]:
        hy, opt = rec["hybrid_cost"], rec["optimal_cost"]
        print(f"  {rec['partition']}: hybrid {hy[0]}/{hy[1]}, "
              f"optimal {opt[0]}/{opt[1]}")

print("\nnon-involutive permutations are recorded, never asserted:")
cycles = [s for s in all_permutations(3) if not s.is_involution()]
findings = verify_theorem_main(2, 4, cycles)
invalid = sum(1 for r in findings.records if not r["hybrid_valid"])
print(f"  3-cycle sweep: {findings.summary['noninvolutive_findings']} findings, "
      f"{invalid} instances where the candidate is not even a bijection")

print()
print(format_summary(verify_theorem_cor(2, 5, all_permutations(3))))
