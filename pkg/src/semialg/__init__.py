"""Exact decomposition of semi-algebraic systems.

The package turns a system of polynomial equations and inequalities over
the rationals into finitely many regular semi-algebraic systems: a
parameter-space formula, a squarefree regular chain, and positivity
constraints whose real zero set is a smooth graph over each parameter
cell.  Both a lazy decomposition (generic parameters only, with deferred
boundary cases) and a full recursive one are provided, together with the
supporting machinery: polynomial arithmetic, regular chains, border
polynomials, real root isolation and open-cell projection formulas.
"""

from .polyarith import (
    ConstantPolynomial,
    Polynomial,
    PolyParseError,
    VarOrder,
    ZeroInput,
    format_poly,
    parse_poly,
)
from .chains import RegularChain, RegularSystem, TriangularSet, triangularize
from .driver import (
    LazyOutput,
    PreRegularSAS,
    RegularSAS,
    RecursionDepthExceeded,
    SemiAlgebraicSystem,
    lazy_real_triangularize,
    real_triangularize,
)

__all__ = [
    "ConstantPolynomial",
    "Polynomial",
    "PolyParseError",
    "VarOrder",
    "ZeroInput",
    "format_poly",
    "parse_poly",
    "RegularChain",
    "RegularSystem",
    "TriangularSet",
    "triangularize",
    "LazyOutput",
    "PreRegularSAS",
    "RegularSAS",
    "RecursionDepthExceeded",
    "SemiAlgebraicSystem",
    "lazy_real_triangularize",
    "real_triangularize",
]

__version__ = "0.1.0"
