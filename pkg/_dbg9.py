import sys, types, importlib, time
from fractions import Fraction

pkg = types.ModuleType("semialg")
pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
dr = importlib.import_module("semialg.driver")

P = pa.parse_poly
R = pa.VarOrder(("a", "b", "x", "y"))

f = P("x^3-3*x*y^2+a*x+b", R)
g = P("3*x^2-y^2+a", R)
S = dr.SemiAlgebraicSystem(R, F=(f, g), P=(P("1-x*y", R),), H=(P("y", R),))

t0 = time.time()
comps = dr.real_triangularize(S)
print(f"--- full ({time.time()-t0:.2f}s): {len(comps)} components ---")
for c in comps:
    print(c)
    print("  witness:", c.witness)
