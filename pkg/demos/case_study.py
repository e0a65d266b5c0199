"""Remission data: 4/10 on placebo, 17/20 on treatment.

Computes the membership curve of the difference in remission rates, the 95%
confidence interval read off its strong 0.05-cut, and the p-value of the
composite hypothesis that the treatment adds at most 20 points.

Run with ``python3 demos/case_study.py``; writes ``case_study.svg`` next to
the working directory.
"""

from fuzzy_pvalue import HypothesisSet, TwoSampleData, confidence_cut, extended_pvalue, mu_at, mu_curve
from fuzzy_pvalue.inference import grade_function
from fuzzy_pvalue.svg import render

data = TwoSampleData(x=4, m=10, y=17, n=20)
print(f"observed difference theta_hat = {data.theta_hat:.3f}")

curve = mu_curve(data, count=201)
print(f"height of the curve = {curve.values.max():.6f}")

# bisection on the exact grade puts the endpoints on the jumps of mu
cut = confidence_cut(curve, 0.05, refine=grade_function(data))
lo, hi = cut.hull
print(f"95% confidence interval: ({lo:.4f}, {hi:.4f})")

h0 = HypothesisSet(0.0, 0.2)
res = extended_pvalue(data, h0)
print(f"p-value of H0: 0 <= theta <= 0.2 is {res.p_value:.6f}, attained at theta = {res.refined_argmax:.6f}")
print(f"for comparison mu(0) = {mu_at(data, 0.0):.6f}")

with open("case_study.svg", "w") as fh:
    fh.write(render([("mu", curve.grid, curve.values)], title="membership of theta",
                    alpha_line=0.05, band=(h0.lo, h0.hi)))
