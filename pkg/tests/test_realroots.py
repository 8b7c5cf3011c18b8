"""Real root isolation and counting against a Sturm-sequence oracle."""

import random
from fractions import Fraction

import pytest

import oracles
from semialg.chains import RegularChain
from semialg.polyarith import VarOrder, ZeroInput, parse_poly, squarefree_part
from semialg.realroots import (
    NotZeroDimensional,
    isolate_chain,
    isolate_univariate,
    real_root_counting,
    sign_at,
)

OX = VarOrder(("x",))
OXY = VarOrder(("x", "y"))
OXYZ = VarOrder(("x", "y", "z"))


def p_(s, order=OX):
    return parse_poly(s, order)


def chain(order, *texts):
    return RegularChain(order, tuple(parse_poly(t, order) for t in texts))


class TestUnivariateIsolation:
    def test_counts_match_sturm(self):
        rng = random.Random(21)
        done = 0
        while done < 40:
            p = p_(oracles.random_poly(rng, ["x"], 6, 4))
            if p.is_zero() or p.is_constant():
                continue
            sf = squarefree_part(p)
            boxes = isolate_univariate(sf)
            assert len(boxes) == oracles.sturm_count(sf), str(p)
            done += 1

    def test_boxes_disjoint_sorted_one_root_each(self):
        rng = random.Random(22)
        done = 0
        while done < 25:
            p = p_(oracles.random_poly(rng, ["x"], 5, 4))
            if p.is_zero() or p.is_constant():
                continue
            sf = squarefree_part(p)
            boxes = isolate_univariate(sf)
            ivs = [b.intervals[0] for b in boxes]
            for (lo1, hi1), (lo2, hi2) in zip(ivs, ivs[1:]):
                assert hi1 <= lo2
            for lo, hi in ivs:
                if lo == hi:
                    assert sf.eval_all({"x": lo}) == 0
                else:
                    assert oracles.sturm_count(sf, lo, hi) == 1
            done += 1

    def test_origin_root_degenerate_box(self):
        boxes = isolate_univariate(p_("x^2-x"))
        assert len(boxes) == 2
        assert (Fraction(0), Fraction(0)) in [b.intervals[0] for b in boxes]

    def test_rejects_zero_and_multivariate(self):
        with pytest.raises(ZeroInput):
            isolate_univariate(p_("0"))
        with pytest.raises(ValueError):
            isolate_univariate(parse_poly("x*y", OXY))


class TestRefinement:
    def test_root_at_box_endpoint_survives_refinement(self):
        # x^3 - 4x has root 0 stripped into a degenerate box; the open
        # boxes around it then carry an endpoint that is itself a root of
        # the attached polynomial, which once steered bisection into the
        # rootless half.  Refinement must keep one root per box.
        p = p_("x^3-4*x")
        for b in isolate_univariate(p):
            lo, hi = b.intervals[0]
            if lo == hi:
                continue
            r = b.refined(8)
            rlo, rhi = r.intervals[0]
            assert oracles.sturm_count(p, rlo, rhi) == 1
            assert rhi - rlo <= (hi - lo) / 2**8

    def test_refinement_halves_width(self):
        b = isolate_univariate(p_("x^2-2"))[1]
        for _ in range(5):
            nb = b.refined()
            assert nb.max_width() <= b.max_width() / 2
            b = nb


class TestSignAt:
    def test_sign_of_independent_poly(self):
        boxes = isolate_univariate(p_("x^2-2"))
        signs = sorted(sign_at(p_("x"), b) for b in boxes)
        assert signs == [-1, 1]

    def test_vanishing_poly_is_refused_not_signed(self):
        # sign_at's precondition is nonvanishing; a chain multiple either
        # collapses to an exact zero enclosure or runs out the cap, and
        # both surface as SignUndecidable rather than a bogus sign.
        from semialg.realroots import SignUndecidable

        for b in isolate_univariate(p_("x^2-2")):
            with pytest.raises(SignUndecidable):
                sign_at(p_("x^2-2"), b)
        box00 = [b for b in isolate_univariate(p_("x^2-x")) if b.max_width() == 0]
        for b in box00:
            with pytest.raises(SignUndecidable):
                sign_at(p_("x"), b)

    def test_sign_matches_numeric_root(self):
        rng = random.Random(23)
        done = 0
        while done < 20:
            raw = p_(oracles.random_poly(rng, ["x"], 4, 3))
            q = p_(oracles.random_poly(rng, ["x"], 3, 3))
            if raw.is_zero() or raw.is_constant() or q.is_zero():
                continue
            p = squarefree_part(raw)
            if p.is_constant():
                continue
            import numpy as np

            cs = [float(c) for c in reversed(_dense(p))]
            for b in isolate_univariate(p):
                lo, hi = b.intervals[0]
                root = None
                for r in np.roots(cs):
                    if abs(r.imag) < 1e-9 and lo <= r.real <= hi:
                        root = r.real
                        break
                assert root is not None
                qv = oracles.eval_num(q, {"x": root}).real
                if abs(qv) > 1e-6:
                    assert sign_at(q, b) == (1 if qv > 0 else -1)
            done += 1


def _dense(p):
    cm = p.coeffs_in("x")
    out = [Fraction(0)] * (max(cm) + 1)
    for d, c in cm.items():
        out[d] = c.constant_value()
    return out


class TestChainCounting:
    def test_two_level_pin(self):
        T = chain(OXY, "x^2-2", "y-x")
        assert real_root_counting(T, ()).count == 2
        assert real_root_counting(T, (parse_poly("x", OXY),)).count == 1

    def test_parabola_tower(self):
        # x = +-sqrt(2); y^2 = x real only for x > 0, two y values
        T = chain(OXY, "x^2-2", "y^2-x")
        rc = real_root_counting(T, ())
        assert rc.count == 2

    def test_three_level_tower(self):
        T = chain(OXYZ, "x^2-2", "y^2-x", "z^2-y")
        assert real_root_counting(T, ()).count == 2
        assert real_root_counting(T, (parse_poly("z", OXYZ),)).count == 1

    def test_strict_condition_filters(self):
        T = chain(OXY, "x^2-1", "y-x")
        P = (parse_poly("x-y+1", OXY),)  # x - y + 1 = 1 at both roots? no: y=x so = 1
        assert real_root_counting(T, P).count == 2
        Q = (parse_poly("x", OXY),)
        assert real_root_counting(T, Q).count == 1

    def test_not_zero_dimensional_rejected(self):
        T = chain(OXY, "x^2-1")
        with pytest.raises(NotZeroDimensional):
            real_root_counting(T, ())

    def test_no_real_roots(self):
        T = chain(OXY, "x^2+1", "y-x")
        assert real_root_counting(T, ()).count == 0

    def test_isolate_chain_boxes_cover_numeric_solutions(self):
        # x^3-x, y^2-x is not squarefree as a single chain (double y-root
        # over x = 0); triangularize splits it into chains that are.
        from semialg.chains import triangularize

        chains = triangularize([p_(s, OXY) for s in ("x^3-x", "y^2-x")], OXY)
        assert len(chains) > 1
        boxes = []
        sols = []
        for T in chains:
            boxes.extend(isolate_chain(T))
            sols.extend(
                tuple(c.real for c in s)
                for s in oracles.chain_solutions(T, ["x", "y"])
                if max(abs(c.imag) for c in s) < 1e-9
            )
        sols = oracles.cluster(sols)
        assert len(boxes) == len(sols)
        for s in sols:
            hits = [
                b
                for b in boxes
                if all(
                    float(lo) - 1e-9 <= coord <= float(hi) + 1e-9
                    for coord, (lo, hi) in zip(s, b.intervals)
                )
            ]
            assert len(hits) == 1

    def test_unsquarefree_chain_fails_loud(self):
        # Direct construction can violate the squarefree precondition;
        # the answer must be an error, never a wrong count.
        T = chain(OXY, "x^3-x", "y^2-x")
        from semialg.realroots import SignUndecidable

        with pytest.raises((AssertionError, SignUndecidable)):
            isolate_chain(T)

    def test_random_towers_match_oracle(self):
        rng = random.Random(24)
        done = tries = 0
        while done < 12 and tries < 600:
            tries += 1
            deg = rng.choice([1, 2, 3])
            t1 = oracles.random_poly(rng, ["x"], deg, 3) + f"+x^{deg + 1}"
            t2 = oracles.random_poly(rng, ["x", "y"], 2, 3) + "+y^2"
            try:
                T = chain(OXY, t1, t2)
            except ValueError:
                continue
            fs = (t1, t2)
            if T.main_variables() != ("x", "y") or not T.verify_regular():
                continue
            from semialg.chains import make_squarefree

            parts = make_squarefree(T)
            if len(parts) != 1 or parts[0] != T:
                continue
            sols = oracles.chain_solutions(T, ["x", "y"])
            n_real = len(
                oracles.cluster(
                    [s for s in sols if max(abs(c.imag) for c in s) < 1e-7]
                )
            )
            assert real_root_counting(T, ()).count == n_real, fs
            done += 1
        assert done == 12
