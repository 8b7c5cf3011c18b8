#!/usr/bin/env python3
"""Count real solutions of a parametric system region by region.

The system x^2 = a with x > 0 has one real solution when a > 0 and none
otherwise.  The solver derives that split instead of being told: the
border polynomial isolates a = 0 as the only wall, and counting real
roots at one sample point per side fills in the answer.  The same recipe
is then run on a quartic whose wall structure is less guessable.
"""

from fractions import Fraction

from semialg.chains import RegularChain
from semialg.driver import SemiAlgebraicSystem, generate_pre_regular_sas
from semialg.opencad import oaf, sample_points
from semialg.polyarith import Polynomial, VarOrder, format_poly, parse_poly
from semialg.realroots import real_root_counting


def count_at(T, P, a_value):
    """Real solutions of the chain specialized at a = a_value."""
    sub = VarOrder(T.main_variables())
    levels = []
    for t in T.polys:
        s = t.substitute({"a": a_value})
        levels.append(Polynomial(sub, {
            tuple(e for e, n in zip(exp, t.order.names) if n in sub.names): c
            for exp, c in s.terms.items()
        }))
    spec = RegularChain(sub, tuple(levels))
    conds = []
    for p in P:
        s = p.substitute({"a": a_value})
        conds.append(Polynomial(sub, {
            tuple(e for e, n in zip(exp, p.order.names) if n in sub.names): c
            for exp, c in s.terms.items()
        }))
    return real_root_counting(spec, tuple(conds)).count


def classify(eq, cond=None):
    order = VarOrder(("a", "x"))
    F = (parse_poly(eq, order),)
    P = (parse_poly(cond, order),) if cond else ()
    S = SemiAlgebraicSystem(order, F=F, P=P)
    print("system:", S)
    pre, _ = generate_pre_regular_sas(S)
    for br in pre:
        walls = [f for f in oaf(br.B) if not f.is_constant()] if br.B else []
        print("  walls:", [format_poly(w) for w in walls] or "none")
        # one rational sample per region between consecutive wall roots
        for sp in sample_points(walls, 1, order):
            a0 = sp.values()["a"]
            n = count_at(br.T, br.P, a0)
            print(f"  a = {str(a0):>8}: {n} real solution(s)")
    print()


classify("x^2-a", cond="x")

# the wall set of this one has three breakpoints, not one
classify("x^4-2*a*x^2+a^2-a-1")

# and a cubic with sign condition, where the discriminant rules
classify("x^3-3*x+a", cond="x")
