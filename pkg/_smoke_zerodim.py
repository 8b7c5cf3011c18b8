"""Random zero-dimensional stress test: chains output vs sympy/numpy oracle."""
import importlib
import random
import sys
import time
import types

import numpy as np
import sympy

pkg = types.ModuleType("semialg")
pkg.__path__ = ["/root/pkg/src/semialg"]
sys.modules["semialg"] = pkg
pa = importlib.import_module("semialg.polyarith")
ch = importlib.import_module("semialg.chains")

TOL = 1e-8


def oracle_solve(exprs, syms):
    """Distinct complex solutions of a zero-dimensional system.

    Elimination route: for each coordinate, a univariate generator of the
    elimination ideal (lex Groebner basis with that variable last), made
    squarefree so all roots are simple, isolated numerically; candidate
    points are assembled from the per-coordinate root sets and kept when
    they satisfy the whole system.  None if not zero-dimensional."""
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
        p = sympy.Poly(g, s)
        core = p.quo(p.gcd(p.diff(s)))
        cs = [complex(c) for c in core.all_coeffs()]
        roots = [_polish_univ(cs, r) for r in np.roots(cs)]
        if len(roots) > 24:
            return None
        per_var.append(roots)
    fnum = sympy.lambdify(syms, exprs, modules="numpy")
    total = 1
    for roots in per_var:
        total *= max(1, len(roots))
    if total > 30000:
        return None
    pts = []
    for combo in _cartesian(per_var):
        scale = max(1.0, max(abs(c) for c in combo))
        vals = np.array(fnum(*combo), dtype=complex)
        if np.max(np.abs(vals)) < 1e-8 * scale ** 3:
            pts.append(combo)
    return cluster(pts)


def _polish_univ(coeffs, r):
    # a few Newton steps on a squarefree polynomial: simple roots converge
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


def cluster(pts, radius=1e-7):
    out = []
    for p in pts:
        if not any(max(abs(a - b) for a, b in zip(p, q)) < radius * max(1.0, max(abs(x) for x in q)) for q in out):
            out.append(p)
    return out


def chain_solutions(chain, names):
    pts = [()]
    for t in chain.polys:
        v = pa.mvar(t)
        new = []
        for part in pts:
            vals = dict(zip(names, part))
            coeffs_map = t.coeffs_in(v)
            deg = max(coeffs_map)
            cs = []
            for d in range(deg, -1, -1):
                c = coeffs_map.get(d)
                cs.append(complex(_eval_num(c, vals)) if c is not None else 0.0)
            if abs(cs[0]) < 1e-10:
                raise AssertionError("initial vanished at chain point")
            for r in np.roots(cs):
                new.append(part + (r,))
        pts = new
    return pts


def _eval_num(p, vals):
    tot = 0j
    for exp, coef in p.terms.items():
        term = complex(coef)
        for name, e in zip(p.order.names, exp):
            if e:
                term *= vals[name] ** e
        tot += term
    return tot


def close(p, q):
    return max(abs(a - b) for a, b in zip(p, q)) < TOL * max(1.0, max(abs(x) for x in p), max(abs(x) for x in q))


def run_case(fs_str, names):
    order = pa.VarOrder(tuple(names))
    fs = [pa.parse_poly(s, order) for s in fs_str]
    syms = [sympy.Symbol(n) for n in names]
    exprs = [sympy.parse_expr(s.replace("^", "**")) for s in fs_str]
    want = oracle_solve(exprs, syms)
    if want is None:
        return "skip"
    chains = ch.triangularize(fs, order)
    for c in chains:
        if not c.is_zero_dimensional():
            return f"FAIL {fs_str}: non-zero-dim chain in output"
    got = []
    for c in chains:
        got.extend(chain_solutions(c, names))
    # soundness: every chain point satisfies the input system
    for p in got:
        vals = dict(zip(names, p))
        for f in fs:
            if abs(_eval_num(f, vals)) > 1e-6 * max(1.0, max(abs(x) for x in p)) ** max(1, f.total_degree()):
                return f"FAIL {fs_str}: chain point {p} violates {pa.format_poly(f)}"
    got = cluster(got)
    for p in want:
        if not any(close(p, q) for q in got):
            return f"FAIL {fs_str}: oracle point missing from chains: {p}"
    for q in got:
        if not any(close(q, p) for p in want):
            return f"FAIL {fs_str}: extra chain point {q}"
    return "ok"


def random_poly(rng, names, maxdeg, nterms):
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


def main():
    rng = random.Random(7)
    n_ok = n_skip = 0
    fails = []
    hand = [
        (["x^2-1", "y^2-x"], ["x", "y"]),
        (["x^2-x", "y^2-x"], ["x", "y"]),
        (["x*y-1", "x^2-2"], ["x", "y"]),
        (["x^2+y^2-1", "x-y"], ["x", "y"]),
        (["x^2+1", "y-x"], ["x", "y"]),
        (["x^3-x", "y^2-x", "z-x*y"], ["x", "y", "z"]),
        (["x^2-y", "y^2-x"], ["x", "y"]),
        (["-2*x^2-3", "-1*y^2+2*x*y"], ["x", "y"]),
        (["-1*y^2", "1*z+1*x^2", "-1*x^2+3*x-3"], ["x", "y", "z"]),
        (["1*y+1-2*x*y", "1*x^2"], ["x", "y"]),
        (["-3*z^2", "-2-3*y^2", "-2*x^2+2*x*z"], ["x", "y", "z"]),
    ]
    for fs, names in hand:
        r = run_case(fs, names)
        print(f"{fs} -> {r}")
        if r == "ok":
            n_ok += 1
        elif r == "skip":
            n_skip += 1
        else:
            fails.append(r)
    t0 = time.time()
    tries = 0
    while n_ok < 120 and tries < 900 and time.time() - t0 < 400:
        tries += 1
        nv = rng.choice([2, 2, 2, 3])
        names = ["x", "y", "z"][:nv]
        fs = [random_poly(rng, names, rng.choice([2, 2, 3]), 3) for _ in range(nv)]
        try:
            r = run_case(fs, names)
        except Exception as e:
            fails.append(f"ERROR {fs}: {type(e).__name__} {e}")
            continue
        if r == "ok":
            n_ok += 1
        elif r == "skip":
            n_skip += 1
        else:
            fails.append(r)
    dt = time.time() - t0
    print(f"\nrandom: ok={n_ok} skip={n_skip} tries={tries} time={dt:.1f}s")
    for f in fails[:12]:
        print(" ", f)
    print("FAILURES:", len(fails))


main()
