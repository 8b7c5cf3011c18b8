"""The decomposition drivers: pre-regular split, QE, lazy and full runs."""

from fractions import Fraction

import pytest

import oracles
from semialg.chains import RegularChain
from semialg.driver import (
    LazyOutput,
    RecursionDepthExceeded,
    SemiAlgebraicSystem,
    generate_pre_regular_sas,
    generate_regular_sas,
    lazy_real_triangularize,
    real_triangularize,
)
from semialg.polyarith import VarOrder, format_poly, parse_poly

OX = VarOrder(("x",))
OAX = VarOrder(("a", "x"))


def sysmake(order, F=(), N=(), P=(), H=()):
    mk = lambda ts: tuple(parse_poly(t, order) for t in ts)
    return SemiAlgebraicSystem(order, F=mk(F), N=mk(N), P=mk(P), H=mk(H))


class TestConstantScreening:
    def test_contradictory_equation(self):
        out = lazy_real_triangularize(sysmake(OX, F=("1",)))
        assert out.components == () and out.deferred == ()

    def test_negative_strict(self):
        out = lazy_real_triangularize(sysmake(OX, P=("-1",)))
        assert out.components == ()

    def test_zero_inequation(self):
        out = lazy_real_triangularize(sysmake(OX, H=("0",)))
        assert out.components == ()

    def test_satisfied_constants_drop_out(self):
        out = lazy_real_triangularize(sysmake(OX, N=("1",), P=("2",), H=("3",)))
        assert len(out.components) == 1
        assert out.components[0].Q.is_true()


class TestPreRegular:
    def test_running_example(self, cubic_system):
        pre, residuals = generate_pre_regular_sas(cubic_system)
        assert len(pre) == 1
        b = pre[0]
        assert tuple(format_poly(t) for t in b.T.polys) == (
            "8*x^3+2*a*x-b",
            "y^2-3*x^2-a",
        )
        assert sorted(format_poly(f) for f in b.B) == [
            "27*b^2+4*a^3",
            "27*b^4+4*a^3*b^2-16*a^4-512*a^2-4096",
        ]
        assert [format_poly(p) for p in b.P] == ["-x*y+1"]
        assert len(residuals) == 2
        for r in residuals:
            assert len(r.F) == len(cubic_system.F) + 1

    def test_empty_equations_inequality_only(self):
        pre, residuals = generate_pre_regular_sas(sysmake(OAX, P=("a",)))
        assert len(pre) == 1
        b = pre[0]
        assert b.T.is_empty()
        assert [format_poly(p) for p in b.B] == ["a"]
        assert [format_poly(p) for p in b.P] == ["a"]

    def test_no_real_solutions_still_pre_regular(self):
        pre, _ = generate_pre_regular_sas(sysmake(OX, F=("x^2+1",)))
        assert len(pre) == 1
        assert tuple(format_poly(t) for t in pre[0].T.polys) == ("x^2+1",)
        assert pre[0].B == ()

    def test_nonneg_in_ideal_is_dropped(self):
        # y >= 0 over the chain containing y holds with equality
        oxy = VarOrder(("x", "y"))
        pre, _ = generate_pre_regular_sas(sysmake(oxy, F=("x^2-4", "y"), N=("y",)))
        assert len(pre) == 1
        assert pre[0].P == ()


class TestGenerateRegular:
    def test_zero_dim_no_real_roots(self):
        T = RegularChain(OX, (parse_poly("x^2+1", OX),))
        D, R = generate_regular_sas((), T, ())
        assert list(R) == []

    def test_zero_dim_positive_root(self):
        T = RegularChain(OX, (parse_poly("x^2-2", OX),))
        D, R = generate_regular_sas((), T, (parse_poly("x", OX),))
        assert len(R) == 1
        assert R[0].Q.is_true()
        assert R[0].witness.names == ()

    def test_running_example_formula(self, cubic_system):
        pre, _ = generate_pre_regular_sas(cubic_system)
        b = pre[0]
        D, R = generate_regular_sas(b.B, b.T, b.P)
        assert set(b.B) <= set(D)
        assert len(R) == 1
        assert str(R[0].Q) == "27*b^2+4*a^3 > 0"
        # stored witness satisfies the formula
        assert R[0].Q.holds(R[0].witness.values())


class TestLazy:
    def test_running_example(self, cubic_system):
        out = lazy_real_triangularize(cubic_system)
        assert isinstance(out, LazyOutput)
        assert len(out.components) == 1
        c = out.components[0]
        assert str(c.Q) == "27*b^2+4*a^3 > 0"
        assert tuple(format_poly(t) for t in c.T.polys) == (
            "8*x^3+2*a*x-b",
            "y^2-3*x^2-a",
        )
        assert [format_poly(p) for p in c.P] == ["-x*y+1"]
        assert len(out.deferred) == 2
        adjoined = sorted(
            format_poly(d.F[-1]) for d in out.deferred
        )
        assert adjoined == [
            "27*b^2+4*a^3",
            "27*b^4+4*a^3*b^2-16*a^4-512*a^2-4096",
        ]

    def test_whole_space(self):
        out = lazy_real_triangularize(sysmake(OX))
        assert len(out.components) == 1
        c = out.components[0]
        assert c.Q.is_true() and c.T.is_empty() and c.P == ()
        assert out.deferred == ()

    def test_no_real_points_no_components(self):
        out = lazy_real_triangularize(sysmake(OX, F=("x^2+1",)))
        assert out.components == () and out.deferred == ()

    def test_deferred_equations_regular_mod_chain(self, cubic_system):
        from semialg.chains import is_regular, triangularize

        out = lazy_real_triangularize(cubic_system)
        for d in out.deferred:
            p = d.F[-1]
            for T in triangularize(list(cubic_system.F), cubic_system.order):
                assert is_regular(p, T)


class TestFull:
    def test_single_point(self):
        R = real_triangularize(sysmake(OX, F=("x",)))
        assert len(R) == 1
        assert R[0].Q.is_true()
        assert tuple(format_poly(t) for t in R[0].T.polys) == ("x",)

    def test_sqrt_branch_formula(self):
        R = real_triangularize(sysmake(OAX, F=("x^2-a",), P=("x",)))
        assert len(R) == 1
        assert str(R[0].Q) == "a > 0"

    def test_running_example_boundary_branch(self, cubic_system):
        comps = real_triangularize(cubic_system)
        assert len(comps) == 2
        by_depth = sorted(comps, key=lambda c: len(str(c.Q)))
        generic, boundary = by_depth
        assert str(generic.Q) == "27*b^2+4*a^3 > 0"
        assert tuple(format_poly(t) for t in boundary.T.polys) == (
            "27*b^4+4*a^3*b^2-16*a^4-512*a^2-4096",
            "18*b^2*x+2*a^3*x+32*a*x-a^2*b-48*b",
            "x*y+1",
        )
        atoms = sorted(
            format_poly(a.poly) for clause in boundary.Q.clauses for a in clause
        )
        assert atoms == ["a^2+12", "a^2+16", "a^2+48"]
        assert all(
            a.sign == 1 for clause in boundary.Q.clauses for a in clause
        )

    def test_depth_cap(self, cubic_system):
        with pytest.raises(RecursionDepthExceeded):
            real_triangularize(cubic_system, max_depth=0)

    def test_full_equals_lazy_plus_evaluation(self, cubic_system):
        # evaluating every deferred system must land on the same set of
        # components the direct full run produces
        full = {c.key() for c in real_triangularize(cubic_system)}
        agenda = [cubic_system]
        got = {}
        seen = set()
        while agenda:
            s = agenda.pop()
            if s.key() in seen:
                continue
            seen.add(s.key())
            out = lazy_real_triangularize(s)
            for c in out.components:
                got[c.key()] = c
            agenda.extend(out.deferred)
        assert set(got) == full

    def test_determinism(self, cubic_system):
        a = [str(c) for c in real_triangularize(cubic_system)]
        b = [str(c) for c in real_triangularize(cubic_system)]
        assert a == b


class TestWitnesses:
    def test_witness_counts_are_positive(self, cubic_system):
        # at each stored witness the specialized system must have a real
        # solution; verify numerically through the oracle solver
        for c in real_triangularize(cubic_system):
            vals = dict(c.witness.values())
            assert c.Q.holds(vals)
            names = [n for n in c.T.order.names if n not in vals]
            exprs = []
            for t in c.T.polys:
                e = format_poly(t)
                for n, v in vals.items():
                    e = e.replace(n, f"({v})")
                exprs.append(e)
            sols = oracles.oracle_solve(exprs, names)
            real = [
                s
                for s in sols
                if max(abs(c2.imag) for c2 in s) < 1e-7
            ]
            assert real, f"no real specialized solution at witness {vals}"
