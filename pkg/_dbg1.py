import importlib
import sys
import types

import sympy

pkg = types.ModuleType("semialg")
pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
ch = importlib.import_module("semialg.chains")

# case A: why did ['x^2-x','y^2-x'] skip?
x, y = sympy.symbols("x y")
G = sympy.groebner([x**2 - x, y**2 - x], x, y, order="grevlex")
print("GB:", G.exprs, "zero-dim:", G.is_zero_dimensional)

# case B: ['-2*x^2-3', '-1*y^2+2*x*y'] -> my side point count
order = pa.VarOrder(("x", "y"))
fs = [pa.parse_poly(s, order) for s in ["-2*x^2-3", "-1*y^2+2*x*y"]]
chains = ch.triangularize(fs, order)
for c in chains:
    print("chain:", [pa.format_poly(p) for p in c.polys], "zdim:", c.is_zero_dimensional())
