import sys, types, importlib
from fractions import Fraction

pkg = types.ModuleType("semialg")
pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
oc = importlib.import_module("semialg.opencad")

P = pa.parse_poly
F = Fraction

# --- oproj pins ---
R1 = pa.VarOrder(("w", "u"))  # w below u; u greatest
assert oc.oproj([P("u^2+1", R1)], "u") == ()
got = oc.oproj([P("u^2-w", R1)], "u")
assert [pa.format_poly(p) for p in got] == ["w"], got
got = oc.oproj([P("u-w", R1), P("u+w", R1)], "u")
assert [pa.format_poly(p) for p in got] == ["w"], [pa.format_poly(p) for p in got]
# contract guard: projecting along a non-top variable must fail
try:
    oc.oproj([P("u^2-w", R1)], "w")
    raise SystemExit("guard missed")
except ValueError:
    pass

# --- derivative_closure pins ---
Rx = pa.VarOrder(("w", "x"))
dc = oc.derivative_closure([P("x^3", Rx)], "x")
assert sorted(pa.format_poly(p) for p in dc) == ["x", "x^2", "x^3"], dc
dc = oc.derivative_closure([P("w", Rx)], "x")
assert [pa.format_poly(p) for p in dc] == ["w"]
dc = oc.derivative_closure([P("x^2+w", Rx)], "x")
assert sorted(pa.format_poly(p) for p in dc) == ["x", "x^2+w"], [pa.format_poly(p) for p in dc]

# --- oaf pins ---
Rab = pa.VarOrder(("a", "b"))  # a below b
got = oc.oaf([P("a", Rab)])
assert [pa.format_poly(p) for p in got] == ["a"], got
got = oc.oaf([P("4*a^3+27*b^2", Rab)])
names = {pa.format_poly(p) for p in got}
assert {"27*b^2+4*a^3", "b", "a"} <= names, names
print("oaf(h1):", sorted(names))

# --- sample_points pins ---
Ru = pa.VarOrder(("u",))
pts = oc.sample_points([P("u", Ru)], 1)
assert len(pts) == 2 and pts[0].coords[0] < 0 < pts[1].coords[0], pts
pts = oc.sample_points([P("u^2-2", Ru)], 1)
assert len(pts) == 3, pts
vals = [p.coords[0] for p in pts]
assert vals[0] < -1 and -1 < vals[1] < 1 and vals[2] > 1, vals
print("samples u^2-2:", [str(p) for p in pts])
pts = oc.sample_points([P("u^2+1", Ru)], 1)
assert len(pts) == 1 and pts[0].coords == (F(0),), pts
pts = oc.sample_points([], 1, order=Ru)
assert len(pts) == 1 and pts[0].coords == (F(0),)

# two-variable quadrants
pts = oc.sample_points([P("a", Rab), P("b", Rab)], 2)
assert len(pts) >= 4, pts
quads = {(c[0] > 0, c[1] > 0) for c in (p.coords for p in pts)}
assert quads == {(True, True), (True, False), (False, True), (False, False)}, quads
for p in pts:
    assert all(q.eval_all(p.values()) != 0 for q in [P("a", Rab), P("b", Rab)])
print("quadrant samples:", [str(p) for p in pts])

# circle: complement of unit circle in the plane has inside + outside;
# sampling the factor set {a^2+b^2-1} must land in both
circ = P("a^2+b^2-1", Rab)
pts = oc.sample_points([circ], 2)
signs = {circ.eval_all(p.values()) > 0 for p in pts}
assert signs == {True, False}, [(str(p), circ.eval_all(p.values())) for p in pts]
print("circle samples:", [str(p) for p in pts])

# degenerate shared endpoints: roots of u(u-1)(u+1) with a factor split
pts = oc.sample_points([P("u", Ru), P("u^2-1", Ru)], 1)
assert len(pts) == 4, [str(p) for p in pts]
for p in pts:
    assert p.coords[0] not in (F(-1), F(0), F(1))

# --- formulas ---
h1 = pa.normalize(P("4*a^3+27*b^2", Rab))
h2ish = pa.normalize(P("b", Rab))
s_pp = oc.SamplePoint(("a", "b"), (F(1), F(1)))
c1 = oc.generate_formula([h1, h2ish], s_pp)
assert all(a.sign == 1 for a in c1), c1
s_pm = oc.SamplePoint(("a", "b"), (F(1), F(-1)))
c2 = oc.generate_formula([h1, h2ish], s_pm)
try:
    oc.generate_formula([P("a", Rab)], oc.SamplePoint(("a", "b"), (F(0), F(1))))
    raise SystemExit("ZeroAtSample missed")
except oc.ZeroAtSample:
    pass

# revise: {(h1+, b+), (h1+, b-)} -> h1 > 0
f = oc.revise_formula([c1, c2])
assert len(f.clauses) == 1 and len(f.clauses[0]) == 1, f
atom = f.clauses[0][0]
assert atom.poly == h1 and atom.sign == 1, f
print("revised:", f)

assert oc.revise_formula([]).is_false()
assert oc.revise_formula([()]).is_true()

# absorption: (h1+) or (h1+ and b+) -> h1+
f = oc.revise_formula([(oc.SignAtom(h1, 1),), c1])
assert len(f.clauses) == 1 and f.clauses[0] == (oc.SignAtom(h1, 1),), f

# full cube on two polys -> true
a_p = oc.SignAtom(pa.normalize(P("a", Rab)), 1)
a_m = oc.SignAtom(pa.normalize(P("a", Rab)), -1)
b_p = oc.SignAtom(h2ish, 1)
b_m = oc.SignAtom(h2ish, -1)
f = oc.revise_formula([(a_p, b_p), (a_p, b_m), (a_m, b_p), (a_m, b_m)])
assert f.is_true(), f

# holds(): h1>0 at (1,1), not at (-2,0.5)
f = oc.revise_formula([c1, c2])
assert f.holds({"a": F(1), "b": F(1)})
assert not f.holds({"a": F(-2), "b": F(1, 2)})

print("OK")
