"""Exact size and coverage checks by enumerating every outcome.

For small samples the rejection probability of ``p <= alpha`` is a finite sum,
so validity can be checked without simulation.  Compares the plain p-value
with the Berger-Boos variant under the Wald and the Clopper-Pearson sets.
"""

from fuzzy_pvalue import BergerBoosConfig, verify

for bb in (None, BergerBoosConfig(0.01), BergerBoosConfig(0.01, "clopper-pearson")):
    rep = verify(3, 3, bb=bb)
    print(f"{rep.variant:45s} worst excess {rep.worst_excess:+.3e}  "
          f"worst coverage deficit {rep.worst_coverage_deficit:+.3e}  {'PASS' if rep.passed else 'FAIL'}")
