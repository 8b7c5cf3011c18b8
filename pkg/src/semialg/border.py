"""Border polynomials of squarefree regular systems.

The border polynomial of a regular system [T, H] collects, in the free
variables of T, every degeneration locus that matters for specialization:
where an initial of T vanishes, where a chain polynomial stops being
squarefree, or where an inequation polynomial meets the zero set of the
chain.  Concretely it is the primitive squarefree part of the product of
the iterated resultants of der(t) for t in T and of each h in H.  Away
from its zero set the system specializes well: initials stay nonzero, the
specialized chain stays squarefree, and no h vanishes on a solution.

The factor set (a gcd-free basis of the border polynomial) is what the
quantifier elimination layer consumes; the polynomial itself is kept for
the degree telemetry check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import RegularChain, TriangularSet, is_regular, iterated_resultant
from .polyarith import (
    Polynomial,
    der,
    gcd_free_basis,
    normalize,
    squarefree_part,
    squarefree_split,
)


class NonRegularInequation(ValueError):
    """An inequation polynomial is zero or a zero divisor modulo sat(T)."""

    def __init__(self, h: Polynomial):
        self.h = h
        super().__init__(f"inequation {h} is not regular modulo the chain")


class BoundViolation(AssertionError):
    """Measured border degree exceeded the derived envelope: resultant bug.

    Raised only past the envelope (l+m) * 2^m * d^(m+1), which follows
    from the degree recurrence for iterated resultants.  The tighter
    quoted bound (l+m) * 2^(m-1) * d^m is reported but not enforced,
    because legitimate systems exceed it; see DegreeReport.
    """


@dataclass(frozen=True)
class BorderData:
    """Border polynomial of a squarefree regular system, with provenance.

    ``bp`` is the primitive squarefree part of the product of all
    ``per_source`` values.  ``factors`` is a gcd-free basis of that
    product: pairwise coprime, squarefree, normalized, with product equal
    to ``bp`` up to a positive rational unit.  ``per_source`` maps each
    contributing polynomial (the der(t) for chain levels, and each
    inequation) to its iterated resultant before any factoring, so tests
    and diagnostics can see where a factor came from.
    """

    bp: Polynomial
    factors: tuple[Polynomial, ...]
    per_source: dict[Polynomial, Polynomial]

    def __post_init__(self) -> None:
        prod = Polynomial.constant(self.bp.order, 1)
        for f in self.factors:
            prod = prod * f
        if not self.bp.is_zero():
            q = normalize(prod)
            if q != self.bp:
                raise AssertionError("factor product disagrees with bp")


def border_polynomial(T: RegularChain, H: tuple[Polynomial, ...]) -> BorderData:
    """Border polynomial and factor basis of the regular system [T, H].

    Every h in H must be regular modulo sat(T); a zero iterated resultant
    is treated as evidence of a violated precondition and raises
    NonRegularInequation rather than silently producing a zero border.
    For an empty chain the border degenerates to the squarefree part of
    the product of H itself (there is nothing to eliminate).
    """
    order = T.order
    per_source: dict[Polynomial, Polynomial] = {}
    if T.is_empty():
        for h in H:
            if h.is_zero():
                raise NonRegularInequation(h)
            per_source[h] = h
    else:
        for h in H:
            if not is_regular(h, T):
                raise NonRegularInequation(h)
        for t in T:
            per_source[der(t)] = iterated_resultant(der(t), T)
        for h in H:
            r = iterated_resultant(h, T)
            if r.is_zero():
                raise NonRegularInequation(h)
            per_source[h] = r

    # Splitting each source by factor multiplicity before the basis pass
    # separates factors the plain basis would merge: two sources can share
    # a pair of factors everywhere yet carry them with different exponents.
    sources = [
        g
        for r in per_source.values()
        if not (r.is_zero() or r.is_constant())
        for g in squarefree_split(r)
    ]
    factors = tuple(gcd_free_basis(sources))
    bp = Polynomial.constant(order, 1)
    for f in factors:
        bp = bp * f
    # The basis elements are squarefree and pairwise coprime, so their
    # product is already the squarefree part; normalize for the unit.
    bp = normalize(bp)
    assert bp == normalize(squarefree_part(bp))
    return BorderData(bp=bp, factors=factors, per_source=per_source)


@dataclass(frozen=True)
class DegreeReport:
    """Measured border degree against the quoted bound and the envelope.

    ``bound`` is the quoted worst case (l+m) * 2^(m-1) * d^m.  It is not
    a theorem: the border of the generic monic cubic {x^3+a*x^2+b*x+c}
    is its discriminant, total degree 4 against a quoted bound of 3.
    ``envelope`` is (l+m) * 2^m * d^(m+1), which the degree recurrence
    for iterated resultants does prove (each elimination step at most
    doubles the degree and multiplies by d), and which the telemetry
    enforces.  See notes/decisions.md in the development tree for the
    worked counterexamples.
    """

    measured: int
    bound: int | None
    envelope: int | None
    skipped: bool

    def __str__(self) -> str:
        if self.skipped:
            return f"border degree {self.measured} (bound skipped: empty chain)"
        if self.bound is not None and self.measured > self.bound:
            return (
                f"border degree {self.measured} exceeds the quoted bound "
                f"{self.bound} (envelope {self.envelope} holds)"
            )
        return f"border degree {self.measured} <= bound {self.bound}"


def degree_telemetry(
    bd: BorderData, T: TriangularSet, H: tuple[Polynomial, ...]
) -> DegreeReport:
    """Report deg(bp) against (l+m) * 2^(m-1) * d^m; enforce the envelope.

    Here m is the number of chain levels, l the number of inequations and
    d the maximum total degree over [T, H].  The quoted bound is the
    first formula; systems whose coefficients carry degree of their own
    (the generic monic cubic already does) genuinely exceed it, so the
    report records the comparison without raising.  What is enforced is
    the envelope (l+m) * 2^m * d^(m+1): one elimination step turns
    degrees (d, e) into at most d*e + e*d <= 2*d*e, so the iterated
    resultant of one source stays under 2^m * d^(m+1) and the product
    over all l+m sources under the envelope.  Exceeding that means the
    resultant machinery is wrong, not that the input is hard; that is
    why the failure is an AssertionError subclass.  With m = 0 there is
    no elimination step and both formulas degenerate, so the check is
    skipped.
    """
    measured = bd.bp.total_degree()
    m = len(T)
    if m == 0:
        return DegreeReport(measured=measured, bound=None, envelope=None, skipped=True)
    ell = len(H)
    delta = max(p.total_degree() for p in tuple(T) + tuple(H))
    bound = (ell + m) * 2 ** (m - 1) * delta**m
    envelope = (ell + m) * 2**m * delta ** (m + 1)
    if measured > envelope:
        raise BoundViolation(
            f"border degree {measured} exceeds envelope {envelope} "
            f"(m={m}, l={ell}, delta={delta})"
        )
    return DegreeReport(measured=measured, bound=bound, envelope=envelope, skipped=False)
