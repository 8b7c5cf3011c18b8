"""Open projection, sample points and sign formulas."""

import itertools
import random
from fractions import Fraction

import pytest

import oracles
from semialg.opencad import (
    SamplePoint,
    SignAtom,
    SignFormula,
    ZeroAtSample,
    derivative_closure,
    generate_formula,
    oaf,
    oproj,
    revise_formula,
    sample_points,
)
from semialg.polyarith import VarOrder, format_poly, parse_poly

OX = VarOrder(("x",))
OXY = VarOrder(("x", "y"))


def p_(s, order=OXY):
    return parse_poly(s, order)


def fmt(polys):
    return sorted(format_poly(p) for p in polys)


class TestSignAtom:
    def test_rejects_constant(self):
        with pytest.raises(ValueError):
            SignAtom(p_("3"), 1)

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            SignAtom(p_("x"), 0)

    def test_holds(self):
        a = SignAtom(p_("x-1"), 1)
        assert a.holds({"x": Fraction(2), "y": Fraction(0)})
        assert not a.holds({"x": Fraction(0), "y": Fraction(0)})

    def test_str(self):
        assert str(SignAtom(p_("x"), 1)) == "x > 0"
        assert str(SignAtom(p_("x"), -1)) == "x < 0"


class TestSignFormula:
    def test_true_false(self):
        assert SignFormula.false().is_false()
        assert SignFormula.true().is_true()
        assert str(SignFormula.true()) == "true"
        assert str(SignFormula.false()) == "false"

    def test_clause_dedupe_and_order(self):
        a = SignAtom(p_("x"), 1)
        b = SignAtom(p_("y"), -1)
        f = SignFormula.of([(b, a), (a, b), (a, b, a)])
        assert len(f.clauses) == 1

    def test_holds_is_disjunction(self):
        f = SignFormula.of([(SignAtom(p_("x"), 1),), (SignAtom(p_("y"), 1),)])
        assert f.holds({"x": Fraction(1), "y": Fraction(-1)})
        assert f.holds({"x": Fraction(-1), "y": Fraction(1)})
        assert not f.holds({"x": Fraction(-1), "y": Fraction(-1)})


class TestProjection:
    def test_circle_projects_to_shadow_boundary(self):
        got = oproj([p_("x^2+y^2-1")], "y")
        assert fmt(got) == ["x^2-1"]

    def test_pairwise_resultant_included(self):
        got = oproj([p_("y-x"), p_("y+x")], "y")
        assert fmt(got) == ["x"]

    def test_free_polys_pass_below(self):
        got = oproj([p_("x^2-2"), p_("y-x")], "y")
        assert "x^2-2" in fmt(got)

    def test_rejects_higher_variable(self):
        with pytest.raises(ValueError):
            oproj([parse_poly("z", VarOrder(("x", "y", "z")))], "y")

    def test_degree_one_contributes_initial_only(self):
        # a linear-in-y poly has no discriminant content; only its initial
        got = oproj([p_("x*y-1")], "y")
        assert fmt(got) == ["x"]


class TestDerivativeClosure:
    def test_cubic_chain_of_derivatives(self):
        got = derivative_closure([p_("x^3-3*x", OX)], "x")
        assert fmt(got) == ["x", "x^2-1", "x^3-3*x"]

    def test_free_poly_kept(self):
        got = derivative_closure([p_("x^2-2")], "y")
        assert fmt(got) == ["x^2-2"]


class TestOaf:
    def test_circle(self):
        got = oaf([p_("x^2+y^2-1")])
        assert fmt(got) == ["x", "x^2-1", "y", "y^2+x^2-1"]

    def test_univariate_is_derivative_closure_basis(self):
        got = oaf([p_("x^2-1", OX)])
        assert fmt(got) == ["x", "x^2-1"]

    def test_empty(self):
        assert oaf([]) == ()


class TestSamplePoints:
    def test_line_gaps_and_outer_points(self):
        # one sample per region of the line minus {-1, 1}, in order
        pts = sample_points([p_("x^2-1", OX)], 1)
        coords = [s.coords[0] for s in pts]
        assert len(coords) == 3
        assert coords[0] < -1 < coords[1] < 1 < coords[2]

    def test_no_roots_single_sample(self):
        pts = sample_points([p_("x^2+1", OX)], 1)
        assert [s.coords[0] for s in pts] == [Fraction(0)]

    def test_empty_set_needs_order(self):
        pts = sample_points([], 1, order=OX)
        assert [s.coords[0] for s in pts] == [Fraction(0)]

    def test_no_poly_vanishes_at_any_sample(self):
        A = [p_("x^2+y^2-1"), p_("y-x")]
        pts = sample_points(A, 2)
        assert pts
        for s in pts:
            vals = s.values()
            for p in A:
                assert p.eval_all(vals) != 0

    def test_every_circle_region_is_hit(self):
        pts = sample_points([p_("x^2+y^2-1")], 2)
        signs = {1 if p_("x^2+y^2-1").eval_all(s.values()) > 0 else -1 for s in pts}
        assert signs == {1, -1}

    def test_random_sets_never_vanish(self):
        rng = random.Random(31)
        done = 0
        while done < 10:
            A = [
                p_(oracles.random_poly(rng, ["x", "y"], 2, 3)),
                p_(oracles.random_poly(rng, ["x", "y"], 2, 2)),
            ]
            A = [p for p in A if not (p.is_zero() or p.is_constant())]
            if not A:
                continue
            for s in sample_points(A, 2):
                for p in A:
                    assert p.eval_all(s.values()) != 0
            done += 1


class TestGenerateFormula:
    def test_signs_at_sample(self):
        s = SamplePoint(("x", "y"), (Fraction(2), Fraction(0)))
        clause = generate_formula([p_("x^2+y^2-1"), p_("x")], s)
        assert sorted(str(a) for a in clause) == ["x > 0", "y^2+x^2-1 > 0"]

    def test_zero_at_sample_raises(self):
        s = SamplePoint(("x",), (Fraction(1),))
        with pytest.raises(ZeroAtSample):
            generate_formula([p_("x-1", OX)], s)

    def test_constants_are_rejected(self):
        # the callers screen constants before asking for a clause
        s = SamplePoint(("x",), (Fraction(1),))
        with pytest.raises(ValueError):
            generate_formula([p_("5", OX)], s)


class TestReviseFormula:
    def test_consensus_merge(self):
        p, q = p_("x"), p_("y")
        g = [
            (SignAtom(p, 1), SignAtom(q, 1)),
            (SignAtom(p, 1), SignAtom(q, -1)),
        ]
        f = revise_formula(g)
        assert len(f.clauses) == 1
        assert str(f) == "x > 0"

    def test_absorption(self):
        p, q = p_("x"), p_("y")
        g = [
            (SignAtom(p, 1),),
            (SignAtom(p, 1), SignAtom(q, -1)),
        ]
        f = revise_formula(g)
        assert str(f) == "x > 0"

    def test_equivalent_off_vanishing_locus(self):
        # consensus and absorption may change truth on the zero set of an
        # eliminated polynomial, never off it
        rng = random.Random(32)
        polys = [p_("x"), p_("y"), p_("x+y-1")]
        for _ in range(40):
            clauses = []
            for _ in range(rng.randint(1, 5)):
                k = rng.randint(1, 3)
                chosen = rng.sample(polys, k)
                clauses.append(
                    tuple(SignAtom(p, rng.choice([1, -1])) for p in chosen)
                )
            raw = SignFormula.of(clauses)
            rev = revise_formula(clauses)
            for _ in range(40):
                vals = {
                    "x": oracles.random_rational(rng, 3, 7),
                    "y": oracles.random_rational(rng, 3, 7),
                }
                if any(p.eval_all(vals) == 0 for p in polys):
                    continue
                assert raw.holds(vals) == rev.holds(vals), (clauses, vals)

    def test_full_sign_cube_collapses_to_true(self):
        p, q = p_("x"), p_("y")
        g = [
            tuple(SignAtom(t, s) for t, s in zip((p, q), signs))
            for signs in itertools.product((1, -1), repeat=2)
        ]
        assert revise_formula(g).is_true()
