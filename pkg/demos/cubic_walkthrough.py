#!/usr/bin/env python3
"""Walk through the running cubic example step by step.

For which real (a, b) does x^3 + a*x + b have a critical point that is
not real, with the extra constraints x*y < 1 and y != 0 on the critical
coordinates?  Encoded as equations F, inequalities P and inequations H,
the solver answers with regular semi-algebraic systems.  This script
shows the intermediate objects on the way there.
"""

from semialg.border import border_polynomial
from semialg.driver import (
    SemiAlgebraicSystem,
    generate_pre_regular_sas,
    lazy_real_triangularize,
    real_triangularize,
)
from semialg.polyarith import VarOrder, format_poly, parse_poly

order = VarOrder(("a", "b", "x", "y"))

F = [parse_poly(s, order) for s in ("x^3-3*x*y^2+a*x+b", "3*x^2-y^2+a")]
P = [parse_poly("1-x*y", order)]
H = [parse_poly("y", order)]
S = SemiAlgebraicSystem(order, F=tuple(F), P=tuple(P), H=tuple(H))

print("input system")
print(" ", S)
print()

# Step 1: triangularize the equations and refine against P and H.
# Each branch is a chain T, the factors B of its border polynomial,
# and the strict conditions P carried along.
pre, residuals = generate_pre_regular_sas(S)
print("pre-regular systems:", len(pre))
for k, br in enumerate(pre):
    print(f"  branch {k}: chain", [format_poly(t) for t in br.T.polys])
    print("            border factors", [format_poly(b) for b in br.B])
print("residual boundary systems:", len(residuals))
print()

# The border polynomial in full, with the per-source resultants.  h1 is
# the discriminant locus of the cubic, h2 comes from the y-level.
br = pre[0]
bd = border_polynomial(br.T, br.P + tuple(H))
print("border polynomial factors")
for f in bd.factors:
    print("  ", format_poly(f))
print()

# Step 2: the lazy answer.  One component describes the solutions away
# from the border; the deferred systems keep the boundary cases as data.
lazy = lazy_real_triangularize(S)
print("lazy output:", len(lazy.components), "component(s),",
      len(lazy.deferred), "deferred")
for c in lazy.components:
    print("  ", c)
    print("   witness:", c.witness)
print()

# Step 3: the full answer.  The deferred systems are solved recursively;
# here the h2 = 0 boundary carries real solutions too, while the h1 = 0
# branch turns out empty.
full = real_triangularize(S)
print("full output:", len(full), "components")
for c in full:
    print("  ", c)
print()
print("read the generic component as: above any parameter point with")
print("27*b^2+4*a^3 > 0 the chain has exactly one real solution with")
print("x*y < 1 and y != 0, so the cubic keeps a non-real critical root.")
