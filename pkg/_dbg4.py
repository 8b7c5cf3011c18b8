import sympy
a, b, x, y = sympy.symbols("a b x y")
h2 = 27*b**4 + 4*a**3*b**2 - 16*a**4 - 512*a**2 - 4096
t4 = 18*b**2*x + 2*a**3*x + 32*a*x - a**2*b - 48*b
t3 = x*y + 1

# border of chain [h2, t4, t3] with H/P polys {y, 1-x*y}
# der(t3) wrt y = x ; res through t4 then h2
r = sympy.resultant(x, t4, x)
print("res_x(x, t4) =", sympy.factor(r))
print("  then res_b(., h2) =", sympy.factor(sympy.resultant(r, h2, b)))
# der(t4) wrt x = 18b^2+2a^3+32a
d4 = 18*b**2 + 2*a**3 + 32*a
print("res_b(der t4, h2) =", sympy.factor(sympy.resultant(d4, h2, b)))
# der(h2) wrt b -> disc (already known)
# res(1-xy, chain): prem(1-xy, t3, y) = 2x (computed), then as above
# res(y, chain): res_y(y, t3) = 1 -> constant
