#!/usr/bin/env python3
"""Sign-invariant regions of a circle and a line.

The open-cell machinery answers a different question than the solver:
not "where are the solutions" but "which sign patterns happen, and
where".  Starting from the unit circle and a diagonal line, close the
pair under projection, pick one rational witness per open cell, and
read off which sign conditions on the closed basis actually occur.
Each realized condition is one connected open region, so the witness
list is a complete map of the plane minus the curves.
"""

from collections import defaultdict

from semialg.opencad import (
    generate_formula,
    oaf,
    revise_formula,
    sample_points,
)
from semialg.polyarith import VarOrder, format_poly, parse_poly

order = VarOrder(("u1", "u2"))
circle = parse_poly("u1^2+u2^2-1", order)
line = parse_poly("u1-u2", order)

A = (circle, line)
print("input:", ", ".join(format_poly(p) for p in A))

# Step 1: close the pair under projection.  Derivatives contribute the
# axis u2 = 0, eliminating u2 from each pair contributes u1, the fold
# lines u1^2 = 1 of the circle and the crossings 2*u1^2 = 1 with the
# line.  Without these the cells below would not be sign-invariant.
B = oaf(A)
print("closed basis:")
for p in B:
    print("  ", format_poly(p))
print()

# Step 2: one rational witness in every open cell of the decomposition
# that B induces, then the sign condition of B at each witness.  With
# this basis every condition happens to be realized by a single cell;
# coarser bases can split one region across several cells.
cells = sample_points(B, 2, order)
by_condition = defaultdict(list)
for s in cells:
    by_condition[generate_formula(B, s)].append(s)
print("open cells:", len(cells))
print("realized sign conditions:", len(by_condition))
rows = sorted(
    (" and ".join(str(a) for a in cond), pts)
    for cond, pts in by_condition.items()
)
for tag, pts in rows:
    print(f"  {tag}   at {pts[0]}")
print()

# Step 3: describe the inside of the circle as a formula.  The raw
# description is one clause per realized condition carrying circle < 0.
# Merging clauses that differ in a single complementary atom shrinks
# ten six-atom clauses to four shorter ones; the merge is greedy, so it
# stops there rather than reaching the two-atom optimum.
inside = [c for c in by_condition if any(
    a.poly == circle and a.sign < 0 for a in c)]
phi = revise_formula(inside)
print("inside the circle:", len(inside), "clauses merge into",
      len(phi.clauses))
print("  ", phi)

# The simplified formula must agree with the raw clause list on every
# witness, and it picks out exactly the cells it was built from.
claimed = [s for s in cells if phi.holds(s.values())]
assert len(claimed) == len(inside)
assert all(circle.eval_all(s.values()) < 0 for s in claimed)
print("check: formula holds at", len(claimed), "of", len(cells),
      "witnesses, all inside")
