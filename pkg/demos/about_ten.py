"""Two fuzzy numbers "about 10" and the operations used on p-value curves.

A has support [9, 11] and B has support [8, 12].  Their strong alpha-cuts are
the open intervals (9 + alpha, 11 - alpha) and (8 + 2 alpha, 12 - 2 alpha), and
A is included in B because its grade never exceeds B's.
"""

from fuzzy_pvalue import height, included_in, strong_cut
from fuzzy_pvalue.fuzzy import about_ten_curves

a, b = about_ten_curves()
print(f"height(A) = {height(a)}, height(B) = {height(b)}")
for alpha in (0.25, 0.5, 0.75):
    ca, cb = strong_cut(a, alpha).hull, strong_cut(b, alpha).hull
    print(f"alpha={alpha}: A-cut ({ca[0]:.4f}, {ca[1]:.4f})  B-cut ({cb[0]:.4f}, {cb[1]:.4f})")
print(f"A <= B: {included_in(a, b)}   B <= A: {included_in(b, a)}")
