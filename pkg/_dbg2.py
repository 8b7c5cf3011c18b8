import sys, types, importlib
pkg = types.ModuleType("semialg"); pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
ch = importlib.import_module("semialg.chains")
import sympy

xs, ys, as_, bs = sympy.symbols("x y a b")
t1s = sympy.Integer(3)*xs**2 - ys**2 + as_
t2s = 8*xs**3 + 2*as_*xs - bs
fs  = xs**3 - 3*xs*ys**2 + as_*xs + bs
h2s = -4*as_**3*bs**2 - 27*bs**4 + 16*as_**4 + 512*as_**2 + 4096
t4s = 2*as_**3*xs - as_**2*bs + 32*as_*xs - 48*bs + 18*xs*bs**2

# 1. r1 = res_y(t1, 1-xy); r2 = res_x(r1, t2) vs h2
r1 = sympy.resultant(t1s, 1 - xs*ys, ys)
print("r1 =", sympy.expand(r1))
r2 = sympy.resultant(r1, t2s, xs)
q, rem = sympy.div(sympy.expand(r2), h2s, bs)
print("r2 = c*h2?  rem==0:", rem == 0, " quotient:", sympy.factor(q))

# 2. disc_b(h2) factors
db = sympy.discriminant(h2s, bs)
print("disc_b(h2) =", sympy.factor(db))

# 3. run my engine: triangularize({f,g,h2}) then regularize(1-xy, chain)
order = ch.VarOrder(("a","b","x","y")) if hasattr(ch,"VarOrder") else None
