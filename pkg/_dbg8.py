import sys, types, importlib, time
from fractions import Fraction

pkg = types.ModuleType("semialg")
pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
dr = importlib.import_module("semialg.driver")

P = pa.parse_poly
R = pa.VarOrder(("a", "b", "x", "y"))  # y > x > b > a

f = P("x^3-3*x*y^2+a*x+b", R)
g = P("3*x^2-y^2+a", R)
one_m_xy = P("1-x*y", R)
y = P("y", R)

S = dr.SemiAlgebraicSystem(R, F=(f, g), P=(one_m_xy,), H=(y,))

t0 = time.time()
pres, residuals = dr.generate_pre_regular_sas(S)
print(f"--- pre-regular ({time.time()-t0:.2f}s) ---")
for pre in pres:
    print("T:", [pa.format_poly(t) for t in pre.T.polys])
    print("B:", [pa.format_poly(b) for b in pre.B])
    print("P:", [pa.format_poly(p) for p in pre.P])
print("residuals:", len(residuals))
for r in residuals:
    print("  ", r)

t0 = time.time()
lazy = dr.lazy_real_triangularize(S)
print(f"--- lazy ({time.time()-t0:.2f}s) ---")
for c in lazy.components:
    print("component:", c)
    print("  witness:", c.witness)
for dsys in lazy.deferred:
    print("deferred:", dsys)
