"""Border polynomials: factor pins, provenance and the degree bound."""

import pytest

from semialg.border import (
    BorderData,
    BoundViolation,
    NonRegularInequation,
    border_polynomial,
    degree_telemetry,
)
from semialg.chains import RegularChain
from semialg.polyarith import VarOrder, format_poly, normalize, parse_poly

O4 = VarOrder(("a", "b", "x", "y"))
OXY = VarOrder(("x", "y"))


def chain(order, *texts):
    return RegularChain(order, tuple(parse_poly(t, order) for t in texts))


@pytest.fixture(scope="module")
def cubic_chain():
    return chain(O4, "8*x^3+2*a*x-b", "y^2-3*x^2-a")


@pytest.fixture(scope="module")
def cubic_border(cubic_chain):
    H = (parse_poly("1-x*y", O4), parse_poly("y", O4))
    return border_polynomial(cubic_chain, H)


class TestRunningExample:
    def test_factor_pin(self, cubic_border):
        got = sorted(format_poly(f) for f in cubic_border.factors)
        assert got == [
            "27*b^2+4*a^3",
            "27*b^4+4*a^3*b^2-16*a^4-512*a^2-4096",
        ]

    def test_factors_only_involve_parameters(self, cubic_border):
        for f in cubic_border.factors:
            assert set(f.variables()) <= {"a", "b"}

    def test_per_source_provenance(self, cubic_chain, cubic_border):
        # one entry per chain derivative plus one per condition polynomial
        assert len(cubic_border.per_source) == len(cubic_chain.polys) + 2

    def test_bp_is_factor_product(self, cubic_border):
        prod = cubic_border.factors[0]
        for f in cubic_border.factors[1:]:
            prod = prod * f
        from semialg.polyarith import normalize

        assert normalize(prod) == cubic_border.bp


class TestBoundaryBranchFactors:
    def test_multiplicity_separation(self):
        # On the boundary branch of the running example the second
        # derivative resultant carries (a^2+12)^2 (a^2+16)^2 (a^2+48)^4:
        # equal supports, different exponents.  The multiplicity split
        # must keep all three factors apart.
        T = chain(
            O4,
            "27*b^4+4*a^3*b^2-16*a^4-512*a^2-4096",
            "18*b^2*x+2*a^3*x+32*a*x-a^2*b-48*b",
            "x*y+1",
        )
        bd = border_polynomial(T, (parse_poly("1-x*y", O4),))
        names = {format_poly(f) for f in bd.factors}
        assert {"a^2+12", "a^2+16", "a^2+48"} <= names


class TestDegenerateShapes:
    def test_empty_chain_uses_conditions_directly(self):
        T = RegularChain(OXY, ())
        bd = border_polynomial(T, (parse_poly("x^2-1", OXY),))
        assert [format_poly(f) for f in bd.factors] == ["x^2-1"]

    def test_non_regular_inequation_rejected(self):
        T = chain(OXY, "x^2-1")
        with pytest.raises(NonRegularInequation):
            border_polynomial(T, (parse_poly("x-1", OXY),))

    def test_zero_inequation_rejected_on_empty_chain(self):
        T = RegularChain(OXY, ())
        from semialg.polyarith import Polynomial

        with pytest.raises(NonRegularInequation):
            border_polynomial(T, (Polynomial.constant(OXY, 0),))

    def test_factor_product_check_guards_construction(self):
        with pytest.raises(AssertionError):
            BorderData(
                bp=parse_poly("x", OXY),
                factors=(parse_poly("x-1", OXY),),
                per_source={},
            )


class TestTelemetry:
    def test_bound_holds_on_running_example(self, cubic_chain, cubic_border):
        H = (parse_poly("1-x*y", O4), parse_poly("y", O4))
        rep = degree_telemetry(cubic_border, cubic_chain, H)
        assert not rep.skipped
        assert rep.measured <= rep.bound
        # m = 2 levels, l = 2 conditions, delta = 3: (2+2) * 2^1 * 3^2
        assert rep.bound == 72

    def test_empty_chain_skips(self):
        T = RegularChain(OXY, ())
        bd = border_polynomial(T, (parse_poly("x^2-1", OXY),))
        rep = degree_telemetry(bd, T, (parse_poly("x^2-1", OXY),))
        assert rep.skipped and rep.bound is None and rep.envelope is None
        assert "skipped" in str(rep)

    def test_generic_cubic_exceeds_quoted_bound_quietly(self):
        # disc(x^3+a*x^2+b*x+c) has the 4*a^3*c term: total degree 4
        # against the quoted (0+1) * 2^0 * 3^1 = 3.  The report says so;
        # only the envelope (0+1) * 2^1 * 3^2 = 18 is enforced.
        o = VarOrder(("a", "b", "c", "x"))
        T = RegularChain(o, (parse_poly("x^3+a*x^2+b*x+c", o),))
        bd = border_polynomial(T, ())
        rep = degree_telemetry(bd, T, ())
        assert rep.measured == 4
        assert rep.bound == 3
        assert rep.envelope == 18
        assert "exceeds the quoted bound" in str(rep)

    def test_envelope_excess_raises(self):
        # Forge a border polynomial too big for its chain: only the
        # envelope check can see that, and it must go off loudly.
        o = VarOrder(("a", "x"))
        huge = parse_poly("a^40+1", o)
        bd = BorderData(bp=normalize(huge), factors=(normalize(huge),), per_source={})
        T = RegularChain(o, (parse_poly("x^2-a", o),))
        with pytest.raises(BoundViolation):
            degree_telemetry(bd, T, ())
