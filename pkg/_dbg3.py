import sys, types, importlib
pkg = types.ModuleType("semialg"); pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
ch = importlib.import_module("semialg.chains")

R = pa.VarOrder(("a", "b", "x", "y"))
P = lambda s: pa.parse_poly(s, R)

f  = P("x^3 - 3*x*y^2 + a*x + b")
g  = P("3*x^2 - y^2 + a")
h2 = P("-4*a^3*b^2 - 27*b^4 + 16*a^4 + 512*a^2 + 4096")
t4 = P("2*a^3*x - a^2*b + 32*a*x - 48*b + 18*x*b^2")
t3 = P("x*y + 1")
pin = P("1 - x*y")

chains = ch.triangularize((f, g, h2), R)
print("triangularize({f,g,h2}):", len(chains), "chain(s)")
for C in chains:
    print("  chain:", [str(t) for t in C.polys])

C = chains[0]
branches = ch.regularize(pin, C)
print("\nregularize(1-xy, chain):", len(branches), "branches")
for (T, flag) in branches:
    print("  in_sat=" + str(flag), [str(t) for t in T.polys])
print("\nnormalize(t4) =", pa.normalize(t4))
print("normalize(t3) =", pa.normalize(t3))
