import importlib
import sys
import types

pkg = types.ModuleType("semialg")
pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
ch = importlib.import_module("semialg.chains")

order = pa.VarOrder(("a", "b", "x", "y"))
P = lambda s: pa.parse_poly(s, order)
F = pa.format_poly


def show_chain(c):
    return "[" + ", ".join(F(p) for p in c.polys) + "]"


# 1. regularize(y-1, {y^2-1})
T = ch.RegularChain(order, (P("y^2-1"),))
branches = ch.regularize(P("y-1"), T)
print("regularize(y-1,{y^2-1}):")
for c, flag in branches:
    print("  ", show_chain(c), "in_sat" if flag else "regular")

# trivial regularize
assert ch.regularize(P("1"), T) == ((T, False),)
assert ch.regularize(P("0"), T) == ((T, True),)

# 2. is_regular
print("is_regular(y, {y^2-1}) =", ch.is_regular(P("y"), T))
T11 = ch.RegularChain(order, (P("y^2-2*y+1"),), squarefree_certified=False)
print("is_regular(y-1, {y^2-2*y+1}) =", ch.is_regular(P("y-1"), T11))

# 3. iterated resultant
Ta = ch.RegularChain(order, (P("y^2-a"),))
print("res(y, {y^2-a}) =", F(ch.iterated_resultant(P("y"), Ta)))
print("res(c const) =", F(ch.iterated_resultant(P("5"), Ta)))

# 4. triangularize section-1 system
f = P("x^3-3*x*y^2+a*x+b")
g = P("3*x^2-y^2+a")
chains = ch.triangularize([f, g], order)
print("triangularize({f,g}) ->", len(chains), "chain(s)")
for c in chains:
    print("  ", show_chain(c))
    print("   free vars:", c.free_variables(), "zero-dim:", c.is_zero_dimensional())
    print("   verify_regular:", c.verify_regular())
    print("   f in sat:", ch.saturated_membership(f, c), " g in sat:", ch.saturated_membership(g, c))
    print("   h_T in sat:", ch.saturated_membership(c.initial_product(), c))

# 5. empty / constant / single
print("triangularize([]) ->", [show_chain(c) for c in ch.triangularize([], order)])
print("triangularize([3]) ->", ch.triangularize([P("3")], order))
print("triangularize([x^2-1]) ->", [show_chain(c) for c in ch.triangularize([P("x^2-1")], order)])

# 6. make_squarefree
T2 = ch.RegularChain(order, (P("y^2-2*y+1"),), squarefree_certified=False)
print("make_squarefree({(y-1)^2}) ->", [show_chain(c) for c in ch.make_squarefree(T2)])
T3 = ch.RegularChain(order, (P("x^2-2*x+1"), P("y^2-x")), squarefree_certified=False)
print("make_squarefree({x^2-2x+1, y^2-x}) ->", [show_chain(c) for c in ch.make_squarefree(T3)])

# 7. small decompositions
chains2 = ch.triangularize([P("x^2-1"), P("y^2-x")], order)
print("triangularize({x^2-1, y^2-x}) ->", [show_chain(c) for c in chains2])

chains3 = ch.triangularize([P("x*y-1"), P("x^2-1")], order)
print("triangularize({xy-1, x^2-1}) ->", [show_chain(c) for c in chains3])

# splitting case: x*(x-1) = 0 with y^2 = x
chains4 = ch.triangularize([P("x^2-x"), P("y^2-x")], order)
print("triangularize({x^2-x, y^2-x}) ->", [show_chain(c) for c in chains4])

# inconsistent
chains5 = ch.triangularize([P("x"), P("x-1")], order)
print("triangularize({x, x-1}) ->", [show_chain(c) for c in chains5])
