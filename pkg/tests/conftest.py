import pytest

from semialg.driver import SemiAlgebraicSystem
from semialg.polyarith import VarOrder, parse_poly


@pytest.fixture(scope="session")
def cubic_order() -> VarOrder:
    # y > x > b > a, stored ascending
    return VarOrder(("a", "b", "x", "y"))


@pytest.fixture(scope="session")
def cubic_system(cubic_order) -> SemiAlgebraicSystem:
    """The running example: where does a cubic keep a non-real critical root.

    f = x^3 - 3x y^2 + ax + b and its conjugate-pair partner
    g = 3x^2 - y^2 + a, with y != 0 (genuinely non-real) and 1 - xy > 0.
    """
    o = cubic_order
    return SemiAlgebraicSystem(
        o,
        F=(parse_poly("x^3-3*x*y^2+a*x+b", o), parse_poly("3*x^2-y^2+a", o)),
        P=(parse_poly("1-x*y", o),),
        H=(parse_poly("y", o),),
    )
