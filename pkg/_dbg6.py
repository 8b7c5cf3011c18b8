import sys, types, importlib
from fractions import Fraction
pkg = types.ModuleType("semialg"); pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
ch = importlib.import_module("semialg.chains")
rr = importlib.import_module("semialg.realroots")

R1 = pa.VarOrder(("x",))
P1 = lambda s: pa.parse_poly(s, R1)

for txt, want in [("x^2 - 2", 2), ("x^2 + 1", 0), ("8*x^3 + 2*x - 1", 1),
                  ("x^3 - x", 3), ("x^2 - 4", 2), ("x", 1), ("2*x - 3", 1),
                  ("x^5 - 5*x^3 + 4*x", 5)]:
    boxes = rr.isolate_univariate(P1(txt))
    print(f"{txt}: {len(boxes)} roots", [str(b) for b in boxes], "want", want)
    assert len(boxes) == want

# counting with P
c = ch.RegularChain(R1, (P1("x^2 - 2"),))
rc = rr.real_root_counting(c, (P1("x"),))
print("{x^2-2}, P={x}:", rc.count)
assert rc.count == 1
rc = rr.real_root_counting(ch.RegularChain(R1, (P1("x^2 + 1"),)), ())
print("{x^2+1}:", rc.count); assert rc.count == 0

# bivariate tower: the section example specialized at a=1, b=1
R2 = pa.VarOrder(("x", "y"))
P2 = lambda s: pa.parse_poly(s, R2)
t2 = P2("8*x^3 + 2*x - 1")
t1 = P2("y^2 - 3*x^2 - 1")
T = ch.RegularChain(R2, (t2, t1))
rc = rr.real_root_counting(T, (P2("1 - x*y"),))
print("section system at (1,1), P={1-xy}:", rc.count, [str(b) for b in rc.boxes])
assert rc.count == 2

# sign_at
b = rr.isolate_univariate(P1("x^2 - 2"))[1]  # +sqrt2
print("sign_at(x, +sqrt2):", rr.sign_at(P1("x"), b))
print("sign_at(x^2-3, +sqrt2):", rr.sign_at(P1("x^2 - 3"), b))
assert rr.sign_at(P1("x"), b) == 1 and rr.sign_at(P1("x^2 - 3"), b) == -1

# empty chain
empty = ch.RegularChain(pa.VarOrder(()), ())
rc = rr.real_root_counting(empty, ())
print("empty chain:", rc.count); assert rc.count == 1

# rational roots exact: x^2 - 1/4 ... and degenerate boxes upward
boxes = rr.isolate_univariate(P1("4*x^2 - 1"))
print("4x^2-1:", [str(b) for b in boxes])

# tower with rational lower root: {x^2 - 4, y^2 - x}  -> x=2: y=±sqrt2; x=-2: none
T3 = ch.RegularChain(R2, (P2("x^2 - 4"), P2("y^2 - x")))
rc = rr.real_root_counting(T3, ())
print("{x^2-4, y^2-x}:", rc.count, [str(b) for b in rc.boxes])
assert rc.count == 2

# refinement
b0 = rc.boxes[0]
br = b0.refined(10)
print("refined widths:", float(b0.max_width()), "->", float(br.max_width()))
assert br.max_width() <= b0.max_width() / 500

# three-level tower {x^2-2, y^2-x, z^2 - y} (z>y>x): x=√2, y=±2^(1/4), z=±(2^(1/8)) for y>0
R3 = pa.VarOrder(("x", "y", "z"))
P3 = lambda s: pa.parse_poly(s, R3)
T4 = ch.RegularChain(R3, (P3("x^2 - 2"), P3("y^2 - x"), P3("z^2 - y")))
rc = rr.real_root_counting(T4, ())
print("3-level tower:", rc.count)
assert rc.count == 2
rc = rr.real_root_counting(T4, (P3("z"),))
print("3-level, z>0:", rc.count)
assert rc.count == 1
print("OK")
