"""Independent recomputation routes used by the test suite.

Everything in this module answers questions the package also answers,
but by a different method: Sturm sequences over exact rationals for
univariate real-root counts, sympy elimination ideals plus numpy root
finding for zero-dimensional systems, and plain numeric evaluation for
membership checks.  The package under test must never import from here.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import sympy

from semialg.polyarith import Polynomial, VarOrder, mvar, parse_poly

CLUSTER_TOL = 1e-8


# ---------------------------------------------------------------------------
# exact univariate counting via Sturm sequences (dense Fraction lists,
# ascending degree, no shared code with the package's isolation route)


def _dense(p: Polynomial, v: str) -> list[Fraction]:
    cm = p.coeffs_in(v)
    out = [Fraction(0)] * (max(cm) + 1)
    for d, c in cm.items():
        val = c.terms.get(tuple([0] * len(c.order.names)), Fraction(0))
        if len(c.terms) > (1 if val else 0):
            raise ValueError("not univariate")
        out[d] = val
    return out


def _dtrim(cs: list[Fraction]) -> list[Fraction]:
    while len(cs) > 1 and cs[-1] == 0:
        cs = cs[:-1]
    return cs


def _dderiv(cs: list[Fraction]) -> list[Fraction]:
    return _dtrim([c * i for i, c in enumerate(cs)][1:] or [Fraction(0)])


def _drem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= q * c
        a.pop()
    return _dtrim(a or [Fraction(0)])


def _deval(cs: list[Fraction], x: Fraction) -> Fraction:
    tot = Fraction(0)
    for c in reversed(cs):
        tot = tot * x + c
    return tot


def sturm_chain(cs: list[Fraction]) -> list[list[Fraction]]:
    chain = [_dtrim(list(cs)), _dderiv(cs)]
    while len(chain[-1]) > 1 or chain[-1][0] != 0:
        r = _drem(chain[-2], chain[-1])
        if len(r) == 1 and r[0] == 0:
            break
        chain.append([-c for c in r])
    return chain


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Polynomial, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Distinct real roots of univariate p in (lo, hi); None means infinite.

    Endpoint roots are not counted, matching open-interval isolation.
    """
    vs = p.variables()
    if not vs:
        return 0
    cs = _dense(p, vs[0])
    chain = sturm_chain(cs)

    def sgn_at(x: Fraction | None, at_inf: int) -> list[int]:
        out = []
        for member in chain:
            if x is None:
                lead = member[-1]
                deg = len(member) - 1
                s = (1 if lead > 0 else -1 if lead < 0 else 0)
                if at_inf < 0 and deg % 2:
                    s = -s
                out.append(s)
            else:
                v = _deval(member, x)
                out.append(1 if v > 0 else -1 if v < 0 else 0)
        return out

    v_lo = _variations(sgn_at(lo, -1))
    v_hi = _variations(sgn_at(hi, +1))
    n = v_lo - v_hi
    # Sturm counts roots in (lo, hi]; drop hi if it is a root.
    if hi is not None and _deval(cs, hi) == 0:
        n -= 1
    return n


# ---------------------------------------------------------------------------
# numeric evaluation of package polynomials


def eval_num(p: Polynomial, vals: dict[str, complex]) -> complex:
    tot = 0j
    for exp, coef in p.terms.items():
        term = complex(coef)
        for name, e in zip(p.order.names, exp):
            if e:
                term *= vals[name] ** e
        tot += term
    return tot


def eval_grid(p: Polynomial, grids: dict[str, np.ndarray]) -> np.ndarray:
    """Vectorized evaluation over meshgrid arrays, one per variable."""
    shape = next(iter(grids.values())).shape
    tot = np.zeros(shape, dtype=float)
    for exp, coef in p.terms.items():
        term = np.full(shape, float(coef))
        for name, e in zip(p.order.names, exp):
            if e:
                term = term * grids[name] ** e
        tot = tot + term
    return tot


# ---------------------------------------------------------------------------
# zero-dimensional complex solving by elimination (sympy + numpy)


def _polish_univ(coeffs: list[complex], r: complex) -> complex:
    dcoeffs = [c * (len(coeffs) - 1 - i) for i, c in enumerate(coeffs[:-1])]
    for _ in range(8):
        f = dv = 0j
        for c in coeffs:
            f = f * r + c
        for c in dcoeffs:
            dv = dv * r + c
        if dv == 0:
            break
        r = r - f / dv
    return r


def _cartesian(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _cartesian(lists[1:]):
            yield (head,) + rest


def cluster(pts: list[tuple], radius: float = 1e-7) -> list[tuple]:
    out: list[tuple] = []
    for p in pts:
        if not any(
            max(abs(a - b) for a, b in zip(p, q))
            < radius * max(1.0, max(abs(x) for x in q))
            for q in out
        ):
            out.append(p)
    return out


def oracle_solve(exprs_str: list[str], names: list[str]):
    """Distinct complex solutions of a zero-dimensional system, or None.

    For each coordinate a univariate generator of the elimination ideal
    (lex basis with that variable last) is made squarefree and solved
    numerically; candidate points are assembled coordinate-wise and kept
    when they satisfy the whole system.  None when the system is not
    zero-dimensional or grows past desk scale.
    """
    syms = [sympy.Symbol(n) for n in names]
    exprs = [sympy.parse_expr(s.replace("^", "**")) for s in exprs_str]
    G = sympy.groebner(exprs, *syms, order="grevlex")
    if set(G.exprs) == {sympy.Integer(1)}:
        return []
    if not G.is_zero_dimensional:
        return None
    per_var = []
    for s in syms:
        others = [t for t in syms if t is not s]
        Gi = sympy.groebner(exprs, *(others + [s]), order="lex")
        univ = [g for g in Gi.exprs if g.free_symbols <= {s}]
        if not univ:
            return None
        g = min(univ, key=lambda e: sympy.degree(e, s))
        poly = sympy.Poly(g, s)
        core = poly.quo(poly.gcd(poly.diff(s)))
        cs = [complex(c) for c in core.all_coeffs()]
        roots = [_polish_univ(cs, r) for r in np.roots(cs)]
        if len(roots) > 24:
            return None
        per_var.append(roots)
    total = 1
    for roots in per_var:
        total *= max(1, len(roots))
    if total > 30000:
        return None
    fnum = sympy.lambdify(syms, exprs, modules="numpy")
    pts = []
    for combo in _cartesian(per_var):
        scale = max(1.0, max(abs(c) for c in combo))
        vals = np.array(fnum(*combo), dtype=complex)
        if np.max(np.abs(vals)) < 1e-8 * scale**3:
            pts.append(combo)
    return cluster(pts)


def real_points(pts: list[tuple], tol: float = CLUSTER_TOL) -> list[tuple]:
    """The solutions with negligible imaginary parts, as real tuples."""
    out = []
    for p in pts:
        if max(abs(c.imag) for c in p) < tol * max(1.0, max(abs(c) for c in p)):
            out.append(tuple(c.real for c in p))
    return cluster(out)


def chain_solutions(chain, names: list[str]) -> list[tuple]:
    """All complex solutions of a zero-dimensional chain, numerically."""
    pts: list[tuple] = [()]
    for t in chain.polys:
        v = mvar(t)
        new = []
        for part in pts:
            vals = dict(zip(names, part))
            coeffs_map = t.coeffs_in(v)
            deg = max(coeffs_map)
            cs = []
            for d in range(deg, -1, -1):
                c = coeffs_map.get(d)
                cs.append(complex(eval_num(c, vals)) if c is not None else 0.0)
            if abs(cs[0]) < 1e-10:
                raise AssertionError("initial vanished at a chain point")
            for r in np.roots(cs):
                new.append(part + (r,))
        pts = new
    return pts


def close(p: tuple, q: tuple, tol: float = CLUSTER_TOL) -> bool:
    return max(abs(a - b) for a, b in zip(p, q)) < tol * max(
        1.0, max(abs(x) for x in p), max(abs(x) for x in q)
    )


# ---------------------------------------------------------------------------
# random inputs


def random_poly(rng: random.Random, names: list[str], maxdeg: int, nterms: int) -> str:
    parts = []
    for _ in range(rng.randint(1, nterms)):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        mono = []
        budget = maxdeg
        for n in names:
            e = rng.randint(0, budget)
            budget -= e
            if e:
                mono.append(f"{n}^{e}" if e > 1 else n)
        parts.append(f"{c}" + ("*" + "*".join(mono) if mono else ""))
    return "+".join(parts).replace("+-", "-")


def random_rational(rng: random.Random, span: int = 8, den: int = 16) -> Fraction:
    return Fraction(rng.randint(-span * den, span * den), rng.randint(1, den))


def parse_all(texts: list[str], order: VarOrder) -> list[Polynomial]:
    return [parse_poly(t, order) for t in texts]
