import sys, types, importlib
pkg = types.ModuleType("semialg"); pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
ch = importlib.import_module("semialg.chains")
bd = importlib.import_module("semialg.border")

R = pa.VarOrder(("a", "b", "x", "y"))
P = lambda s: pa.parse_poly(s, R)

f  = P("x^3 - 3*x*y^2 + a*x + b")
g  = P("3*x^2 - y^2 + a")
chain = ch.triangularize((f, g), R)[0]
print("chain:", [str(t) for t in chain.polys])
H = (P("y"), P("x*y - 1"))
data = bd.border_polynomial(chain, H)
print("factors:", [str(q) for q in data.factors])
print("bp totaldeg:", data.bp.total_degree())
rep = bd.degree_telemetry(data, chain, H)
print(rep)
for src, r in data.per_source.items():
    print("  src", str(src), "->", str(r))

# T = empty, H = {a}
empty = ch._chain(R, ())
d2 = bd.border_polynomial(empty, (P("a"),))
print("empty chain:", [str(q) for q in d2.factors], "| bp:", d2.bp)
print(bd.degree_telemetry(d2, empty, (P("a"),)))

# T = {y^2 - a}, H = empty -> bp = a via discriminant path
R2 = pa.VarOrder(("a", "y"))
t = pa.parse_poly("y^2 - a", R2)
c3 = ch._chain(R2, (t,))
d3 = bd.border_polynomial(c3, ())
print("disc path:", [str(q) for q in d3.factors])
