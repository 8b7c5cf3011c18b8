"""Sparse multivariate polynomials over the rationals.

This module is the arithmetic kernel for the whole package.  Polynomials
are stored sparsely as a map from exponent vectors to nonzero rational
coefficients, relative to an explicit variable order.  Terms are compared
lexicographically with the largest variable weighted first, which fixes a
canonical leading term, a canonical printed form, and a deterministic
normalization (primitive, positive leading coefficient).

On top of the ring operations the module provides the classical univariate
view of a polynomial with respect to one of its variables: main variable,
initial, main degree, separant, pseudo-division with a fixed co-factor
exponent, subresultant-based resultants and discriminants, gcds, squarefree
parts, and gcd-free bases.  Irreducible factorization is deliberately out
of scope; every consumer that would factor works with a gcd-free basis
instead.

Coefficients are `fractions.Fraction` throughout.  No floats, no modular
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Iterator, Mapping, Sequence


class ConstantPolynomial(ValueError):
    """Raised when a main-variable operation is applied to a constant."""


class ZeroInput(ValueError):
    """Raised when an operation requires a nonzero (or nonempty) input."""


class PolyParseError(ValueError):
    """Raised on malformed polynomial text."""


@dataclass(frozen=True)
class VarOrder:
    """An ordered tuple of variable names, smallest variable first.

    Index 0 is the least variable.  Two orders compare equal iff they
    list the same names in the same sequence.

    Examples
    --------
    >>> R = VarOrder(("a", "b", "x", "y"))
    >>> R.index("x")
    2
    >>> R.names[-1]
    'y'
    """

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names in order")
        for n in self.names:
            if not n.isidentifier():
                raise ValueError("invalid variable name: %r" % (n,))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self.names


Expvec = tuple[int, ...]


def _term_sort_key(exp: Expvec) -> tuple[int, ...]:
    # lex with the largest variable most significant
    return tuple(reversed(exp))


class Polynomial:
    """A sparse polynomial over Q with a fixed variable order.

    Instances are immutable by convention: the term map is built once and
    never mutated afterwards.  All arithmetic returns new objects.
    """

    __slots__ = ("order", "terms", "_key", "_hash")

    order: VarOrder
    terms: dict[Expvec, Fraction]

    def __init__(self, order: VarOrder, terms: Mapping[Expvec, Fraction] | None = None):
        object.__setattr__(self, "order", order)
        n = len(order)
        cleaned: dict[Expvec, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != n:
                    raise ValueError("exponent vector length mismatch")
                c = Fraction(c)
                if c != 0:
                    cleaned[tuple(exp)] = c
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "_key", None)
        object.__setattr__(self, "_hash", None)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, order: VarOrder) -> "Polynomial":
        return cls(order, {})

    @classmethod
    def constant(cls, order: VarOrder, c: Fraction | int) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return cls.zero(order)
        return cls(order, {(0,) * len(order): c})

    @classmethod
    def variable(cls, order: VarOrder, name: str) -> "Polynomial":
        i = order.index(name)
        exp = [0] * len(order)
        exp[i] = 1
        return cls(order, {tuple(exp): Fraction(1)})

    # ------------------------------------------------------------------
    # basic predicates and views

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()), Fraction(0))

    def variables(self) -> tuple[str, ...]:
        """Names of the variables actually occurring, ascending."""
        n = len(self.order)
        seen = [False] * n
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    seen[i] = True
        return tuple(self.order.names[i] for i in range(n) if seen[i])

    def degree(self, name: str) -> int:
        """Degree in one variable; 0 for constants and for absent variables.

        The zero polynomial reports degree 0 here; callers that need the
        usual -infinity convention test `is_zero` first.
        """
        i = self.order.index(name)
        return max((exp[i] for exp in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=0)

    def sort_key(self) -> tuple:
        """A canonical, order-compatible identity for deterministic sorting."""
        key = self._key
        if key is None:
            items = sorted(self.terms.items(), key=lambda t: _term_sort_key(t[0]), reverse=True)
            key = tuple((exp, c.numerator, c.denominator) for exp, c in items)
            object.__setattr__(self, "_key", key)
        return key

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the lex-leading term (largest variable first)."""
        if not self.terms:
            return Fraction(0)
        exp = max(self.terms, key=_term_sort_key)
        return self.terms[exp]

    # ------------------------------------------------------------------
    # equality and hashing

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.order, self.sort_key()))
            object.__setattr__(self, "_hash", h)
        return h

    # ------------------------------------------------------------------
    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if self.order != other.order:
            raise ValueError("mixed variable orders")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp, Fraction(0)) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return Polynomial(self.order, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.order, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.order)
        terms: dict[Expvec, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exp, Fraction(0)) + c1 * c2
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        return Polynomial(self.order, terms)

    def scale(self, c: Fraction | int) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.order)
        return Polynomial(self.order, {exp: k * c for exp, k in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------------
    # substitution and calculus

    def substitute(self, values: Mapping[str, Fraction | int]) -> "Polynomial":
        """Substitute rational values for some variables.

        Returns a polynomial in the same ring (the substituted variables
        simply no longer occur).
        """
        idx = {self.order.index(name): Fraction(v) for name, v in values.items()}
        if not idx:
            return self
        terms: dict[Expvec, Fraction] = {}
        for exp, c in self.terms.items():
            coeff = c
            new = list(exp)
            for i, v in idx.items():
                e = exp[i]
                if e:
                    coeff *= v ** e
                    new[i] = 0
            if coeff:
                key = tuple(new)
                s = terms.get(key, Fraction(0)) + coeff
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return Polynomial(self.order, terms)

    def eval_all(self, values: Mapping[str, Fraction | int]) -> Fraction:
        """Evaluate fully; requires a value for every occurring variable."""
        r = self.substitute(values)
        if not r.is_constant():
            raise ValueError("missing values for: %s" % (", ".join(r.variables()),))
        return r.constant_value()

    def derivative(self, name: str) -> "Polynomial":
        i = self.order.index(name)
        terms: dict[Expvec, Fraction] = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                new = list(exp)
                new[i] = e - 1
                key = tuple(new)
                s = terms.get(key, Fraction(0)) + c * e
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return Polynomial(self.order, terms)

    # ------------------------------------------------------------------
    # univariate view

    def coeffs_in(self, name: str) -> dict[int, "Polynomial"]:
        """Coefficients as a univariate polynomial in `name`.

        Returns a map from degree to coefficient polynomial (free of
        `name`); only nonzero coefficients are present.
        """
        i = self.order.index(name)
        split: dict[int, dict[Expvec, Fraction]] = {}
        for exp, c in self.terms.items():
            e = exp[i]
            new = list(exp)
            new[i] = 0
            split.setdefault(e, {})[tuple(new)] = c
        return {e: Polynomial(self.order, t) for e, t in split.items()}

    @staticmethod
    def from_coeffs(order: VarOrder, name: str, coeffs: Mapping[int, "Polynomial"]) -> "Polynomial":
        i = order.index(name)
        terms: dict[Expvec, Fraction] = {}
        for e, p in coeffs.items():
            for exp, c in p.terms.items():
                if exp[i] != 0:
                    raise ValueError("coefficient contains the main variable")
                new = list(exp)
                new[i] = e
                key = tuple(new)
                s = terms.get(key, Fraction(0)) + c
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return Polynomial(order, terms)

    # ------------------------------------------------------------------
    # printing

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return "Polynomial(%s)" % (format_poly(self),)


# ----------------------------------------------------------------------
# main-variable operations


def mvar(p: Polynomial) -> str:
    """The greatest variable occurring in `p`.

    Raises
    ------
    ConstantPolynomial
        If `p` is constant (including zero).

    Examples
    --------
    >>> R = VarOrder(("a", "b", "x"))
    >>> mvar(parse_poly("8*x^3+2*a*x-b", R))
    'x'
    """
    vs = p.variables()
    if not vs:
        raise ConstantPolynomial("constant polynomial has no main variable")
    return vs[-1]


def mdeg(p: Polynomial) -> int:
    """Degree of `p` in its main variable."""
    return p.degree(mvar(p))


def init(p: Polynomial) -> Polynomial:
    """The initial of `p`: its leading coefficient viewed in mvar(p).

    >>> R = VarOrder(("a", "b", "x"))
    >>> str(init(parse_poly("8*x^3+2*a*x-b", R)))
    '8'
    """
    v = mvar(p)
    return p.coeffs_in(v)[p.degree(v)]


def tail(p: Polynomial) -> Polynomial:
    """`p` minus its leading term in mvar(p)."""
    v = mvar(p)
    d = p.degree(v)
    coeffs = p.coeffs_in(v)
    coeffs.pop(d)
    return Polynomial.from_coeffs(p.order, v, coeffs)


def der(p: Polynomial) -> Polynomial:
    """Partial derivative of `p` with respect to its main variable."""
    return p.derivative(mvar(p))


# ----------------------------------------------------------------------
# pseudo-division


def pseudo_divide(p: Polynomial, t: Polynomial, name: str) -> tuple[Polynomial, Polynomial, int]:
    """Pseudo-divide `p` by `t` with respect to variable `name`.

    Returns (quotient, remainder, k) satisfying

        init(t)^k * p == quotient * t + remainder,   deg(remainder, v) < deg(t, v)

    where init(t) is the leading coefficient of `t` in v = `name`.  The
    exponent is fixed at k = max(deg(p, v) - deg(t, v) + 1, 0) regardless
    of how many reduction steps actually fire, so the identity above is
    exact and reproducible.

    Raises
    ------
    ZeroInput
        If `t` is zero.
    ConstantPolynomial
        If `t` does not involve v at all.
    """
    if t.is_zero():
        raise ZeroInput("pseudo-division by zero")
    dt = t.degree(name)
    if dt == 0:
        raise ConstantPolynomial("divisor is free of %s" % (name,))
    dp = p.degree(name)
    if p.is_zero() or dp < dt:
        return Polynomial.zero(p.order), p, 0
    k = dp - dt + 1
    lc_t = t.coeffs_in(name)[dt]
    v = Polynomial.variable(p.order, name)
    quotient = Polynomial.zero(p.order)
    rem = p
    steps = 0
    while not rem.is_zero() and rem.degree(name) >= dt:
        dr = rem.degree(name)
        lc_r = rem.coeffs_in(name)[dr]
        shift = lc_r * (v ** (dr - dt))
        quotient = quotient * lc_t + shift
        rem = rem * lc_t - shift * t
        steps += 1
    # pad so the stated power of the initial is exact
    for _ in range(k - steps):
        quotient = quotient * lc_t
        rem = rem * lc_t
    return quotient, rem, k


def prem(p: Polynomial, t: Polynomial, name: str) -> Polynomial:
    """Pseudo-remainder of `p` by `t` in variable `name`."""
    return pseudo_divide(p, t, name)[1]


def pquo(p: Polynomial, t: Polynomial, name: str) -> Polynomial:
    """Pseudo-quotient of `p` by `t` in variable `name`."""
    return pseudo_divide(p, t, name)[0]


def exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact division p / q; raises ValueError when q does not divide p."""
    if q.is_zero():
        raise ZeroInput("division by zero polynomial")
    if q.is_constant():
        return p.scale(1 / q.constant_value())
    result = Polynomial.zero(p.order)
    rem = p
    q_exp = max(q.terms, key=_term_sort_key)
    q_c = q.terms[q_exp]
    while not rem.is_zero():
        r_exp = max(rem.terms, key=_term_sort_key)
        diff = tuple(a - b for a, b in zip(r_exp, q_exp))
        if any(d < 0 for d in diff):
            raise ValueError("not an exact division")
        mono = Polynomial(p.order, {diff: rem.terms[r_exp] / q_c})
        result = result + mono
        rem = rem - mono * q
    return result


def divides(q: Polynomial, p: Polynomial) -> bool:
    """True when q divides p exactly (q nonzero)."""
    try:
        exact_div(p, q)
    except ValueError:
        return False
    return True


# ----------------------------------------------------------------------
# normalization, content, primitive part


def rational_content(p: Polynomial) -> Fraction:
    """Signed rational content: gcd of numerators over lcm of denominators,
    carrying the sign of the lex-leading coefficient.  Zero for zero."""
    if p.is_zero():
        return Fraction(0)
    num = 0
    den = 1
    for c in p.terms.values():
        num = int_gcd(num, abs(c.numerator))
        den = den * c.denominator // int_gcd(den, c.denominator)
    content = Fraction(num, den)
    if p.leading_coefficient() < 0:
        content = -content
    return content


def normalize(p: Polynomial) -> Polynomial:
    """Primitive associate with positive lex-leading coefficient.

    The result has coprime integer coefficients and a positive leading
    term under the term order; zero maps to zero.  This is the canonical
    representative used for chain polynomials, border factors and basis
    members.

    >>> R = VarOrder(("a", "x"))
    >>> str(normalize(parse_poly("-2*x^2+4*a", R)))
    'x^2-2*a'
    """
    if p.is_zero():
        return p
    return p.scale(1 / rational_content(p))


def content(p: Polynomial, name: str) -> Polynomial:
    """Content of `p` in v = `name`: the common divisor of its coefficients.

    The returned divisor is exact, i.e. p == content * primitive_part with
    a primitive_part that is integer-primitive with positive leading
    coefficient.  The content therefore carries both the rational unit and
    the sign of `p`.

    >>> R = VarOrder(("y", "x"))
    >>> str(content(parse_poly("2*x^2*y+4*y", R), "x"))
    '2*y'
    """
    if p.is_zero():
        return p
    coeffs = list(p.coeffs_in(name).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = gcd(g, c)
        if g.is_constant():
            break
    g = normalize(g)  # primitive, positive
    # reattach the rational unit and the sign so the division is exact
    unit = rational_content(exact_div_content(p, g, name))
    return g.scale(unit)


def exact_div_content(p: Polynomial, g: Polynomial, name: str) -> Polynomial:
    # divide every v-coefficient of p by g
    coeffs = p.coeffs_in(name)
    return Polynomial.from_coeffs(p.order, name, {e: exact_div(c, g) for e, c in coeffs.items()})


def primitive_part(p: Polynomial, name: str) -> Polynomial:
    """`p` divided by its content in `name`; integer-primitive, positive lead.

    >>> R = VarOrder(("y", "x"))
    >>> str(primitive_part(parse_poly("2*x^2*y+4*y", R), "x"))
    'x^2+2'
    """
    if p.is_zero():
        raise ZeroInput("primitive part of zero")
    return exact_div(p, content(p, name))


# ----------------------------------------------------------------------
# gcd


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Greatest common divisor over Q, normalized primitive with positive
    leading coefficient.

    gcd(p, 0) = normalize(p).  gcd of two constants (not both zero) is 1.

    Examples
    --------
    >>> R = VarOrder(("x",))
    >>> str(gcd(parse_poly("x^2-1", R), parse_poly("x^2-2*x+1", R)))
    'x-1'
    """
    if p.is_zero() and q.is_zero():
        return p
    if p.is_zero():
        return normalize(q)
    if q.is_zero():
        return normalize(p)
    if p.is_constant() or q.is_constant():
        return Polynomial.constant(p.order, 1)
    vs = sorted(set(p.variables()) | set(q.variables()), key=p.order.index)
    v = vs[-1]
    dp, dq = p.degree(v), q.degree(v)
    if dp == 0 or dq == 0:
        # v occurs in only one argument: gcd divides the other's content
        if dp == 0:
            return gcd(p, content(q, v))
        return gcd(content(p, v), q)
    cp, cq = content(p, v), content(q, v)
    a, b = exact_div(p, cp), exact_div(q, cq)
    cont_gcd = gcd(normalize(cp), normalize(cq))
    g = _primitive_prs_gcd(a, b, v)
    return normalize(cont_gcd * g)


def _primitive_prs_gcd(a: Polynomial, b: Polynomial, v: str) -> Polynomial:
    """Primitive PRS on primitive inputs; returns the primitive gcd in v."""
    if a.degree(v) < b.degree(v):
        a, b = b, a
    while True:
        r = prem(a, b, v)
        if r.is_zero():
            return primitive_part(b, v)
        if r.degree(v) == 0:
            return Polynomial.constant(a.order, 1)
        a, b = b, primitive_part(r, v)


# ----------------------------------------------------------------------
# squarefree part and gcd-free basis


def squarefree_part(p: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of `p`, normalized.

    Recurses on main variable: with p = c * pp (content and primitive part
    in v = mvar(p)), every factor of pp involves v, so stripping
    gcd(pp, d(pp)/dv) leaves exactly the distinct v-factors; the content,
    whose factors are coprime to those, is handled recursively.

    >>> R = VarOrder(("a", "b"))
    >>> q = parse_poly("4*a^3+27*b^2", R)
    >>> squarefree_part(q * q) == q
    True
    """
    if p.is_zero():
        raise ZeroInput("squarefree part of zero")
    if p.is_constant():
        return Polynomial.constant(p.order, 1)
    v = mvar(p)
    c = content(p, v)
    pp = exact_div(p, c)
    d = pp.derivative(v)
    g = gcd(pp, d)
    core = pp if g.is_constant() else exact_div(pp, g)
    if c.is_constant():
        return normalize(core)
    return normalize(core * squarefree_part(c))


def squarefree_split(p: Polynomial) -> list[Polynomial]:
    """Coprime squarefree groups of the factors of `p`, by multiplicity.

    Each returned polynomial is the normalized product of the distinct
    irreducible factors sharing one multiplicity in p, so p is a rational
    unit times the product of the groups raised to their multiplicities.
    Finer than squarefree_part (which is the product of all the groups)
    while still needing no irreducible factorization: two factors land in
    the same group only if their multiplicities agree.

    >>> R = VarOrder(("x",))
    >>> [str(g) for g in squarefree_split(parse_poly("x^3-2*x^2+x", R))]
    ['x', 'x-1']
    >>> [str(g) for g in squarefree_split(parse_poly("x^4-2*x^3+x^2", R))]
    ['x^2-x']
    """
    if p.is_zero():
        raise ZeroInput("multiplicity split of zero")
    if p.is_constant():
        return []
    sps: list[Polynomial] = []
    r = normalize(p)
    while not r.is_constant():
        s = squarefree_part(r)
        sps.append(s)
        r = normalize(exact_div(r, s))
    sps.append(Polynomial.constant(p.order, 1))
    groups = []
    for s, nxt in zip(sps, sps[1:]):
        g = normalize(exact_div(s, nxt)) if not nxt.is_constant() else s
        if not g.is_constant():
            groups.append(g)
    return groups


def gcd_free_basis(polys: Iterable[Polynomial]) -> list[Polynomial]:
    """A pairwise-coprime squarefree primitive basis for a set of polynomials.

    Every non-constant input is, up to a rational unit, a product of powers
    of basis members; constants are dropped.  The basis is returned sorted
    canonically, so equal inputs give identical output.

    Examples
    --------
    >>> R = VarOrder(("x",))
    >>> [str(b) for b in gcd_free_basis([parse_poly("x^2", R), parse_poly("x^3", R)])]
    ['x']
    >>> basis = gcd_free_basis([parse_poly("x^2-1", R), parse_poly("x-1", R)])
    >>> sorted(str(b) for b in basis)
    ['x+1', 'x-1']
    """
    basis: list[Polynomial] = []
    for p in polys:
        if p.is_zero():
            raise ZeroInput("gcd-free basis of a set containing zero")
        if p.is_constant():
            continue
        queue = [squarefree_part(p)]
        while queue:
            q = queue.pop()
            if q.is_constant():
                continue
            merged = False
            for i, b in enumerate(basis):
                g = gcd(q, b)
                if g.is_constant():
                    continue
                if g == b:
                    rest = normalize(exact_div(q, g))
                    if not rest.is_constant():
                        queue.append(rest)
                    merged = True
                    break
                # split b into g and b/g, requeue the leftover of q
                basis[i] = g
                cofactor = normalize(exact_div(b, g))
                if not cofactor.is_constant():
                    basis.append(cofactor)
                rest = normalize(exact_div(q, g))
                if not rest.is_constant():
                    queue.append(rest)
                merged = True
                break
            if not merged:
                basis.append(q)
    return sorted(set(basis), key=Polynomial.sort_key)


# ----------------------------------------------------------------------
# resultants


def resultant(p: Polynomial, q: Polynomial, name: str) -> Polynomial:
    """Resultant of `p` and `q` with respect to `name`.

    Follows the Sylvester-matrix sign convention: the result equals the
    determinant of the Sylvester matrix of (p, q) in v = `name`, with p
    supplying the first deg(q, v) rows.  When v does not occur in `p` the
    function returns `p` itself (the convention used by iterated
    resultants; note res(p, q) = p^deg(q) classically, this variant drops
    the power).

    Internally a subresultant polynomial remainder sequence is used, so
    coefficient growth stays polynomial.

    Raises
    ------
    ZeroInput
        If either input is zero.
    ConstantPolynomial
        If `q` is free of `name`.

    Examples
    --------
    >>> R = VarOrder(("x",))
    >>> str(resultant(parse_poly("x-1", R), parse_poly("x-2", R), "x"))
    '-1'
    """
    if p.is_zero() or q.is_zero():
        raise ZeroInput("resultant of zero polynomial")
    if q.degree(name) == 0:
        raise ConstantPolynomial("second argument free of %s" % (name,))
    if p.degree(name) == 0:
        return p
    return _subresultant_prs_resultant(p, q, name)


def _subresultant_prs_resultant(p: Polynomial, q: Polynomial, v: str) -> Polynomial:
    order = p.order
    one = Polynomial.constant(order, 1)
    a, b = p, q
    m, n = a.degree(v), b.degree(v)
    sign = 1
    if m < n:
        a, b = b, a
        m, n = n, m
        if (m * n) % 2 == 1:
            sign = -sign
    # strip contents; res(ca*A, cb*B) = ca^deg(B) * cb^deg(A) * res(A, B)
    ca, cb = content(a, v), content(b, v)
    a, b = exact_div(a, ca), exact_div(b, cb)
    mult = (ca ** n) * (cb ** m)
    g = one
    h = one
    while True:
        delta = m - n
        if m % 2 == 1 and n % 2 == 1:
            sign = -sign
        r = prem(a, b, v)
        if r.is_zero():
            return Polynomial.zero(order)
        a, m = b, n
        b = exact_div(r, g * (h ** delta))
        n = b.degree(v)
        g = a.coeffs_in(v)[m]
        h = exact_div(g ** delta, h ** (delta - 1)) if delta > 0 else h
        if n == 0:
            break
    # b is now free of v with deg(a, v) = m >= 1
    res = exact_div(b ** m, h ** (m - 1)) if m > 1 else b
    res = res if sign == 1 else -res
    return res * mult


def iterated_pairwise(polys: Sequence[Polynomial], name: str) -> Iterator[tuple[Polynomial, Polynomial]]:
    """All unordered pairs of distinct entries (helper for projections)."""
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            yield polys[i], polys[j]


def discriminant(p: Polynomial, name: str) -> Polynomial:
    """Discriminant of `p` in v = `name`.

    Defined as (-1)^(d(d-1)/2) * resultant(p, dp/dv, v) / init where d is
    the degree in v and init the leading coefficient, which makes
    discriminant(x^2-1, x) = 4 and discriminant(z^3+a*z+b, z) equal to
    -(4*a^3+27*b^2).

    Raises
    ------
    ConstantPolynomial
        If `p` has degree < 1 in `name`; degree 1 returns 1.
    """
    d = p.degree(name)
    if d == 0:
        raise ConstantPolynomial("discriminant of a polynomial free of %s" % (name,))
    if d == 1:
        return Polynomial.constant(p.order, 1)
    dp = p.derivative(name)
    lc = p.coeffs_in(name)[d]
    r = resultant(p, dp, name)
    r = exact_div(r, lc)
    if (d * (d - 1) // 2) % 2 == 1:
        r = -r
    return r


# ----------------------------------------------------------------------
# subresultant chain members (determinantal, used by regular gcds)


def subresultant(p: Polynomial, q: Polynomial, name: str, j: int) -> Polynomial:
    """The j-th subresultant polynomial of (p, q) in `name`.

    Requires deg(p, v) > deg(q, v) >= 0 and 0 <= j <= deg(q, v).  The
    member is computed from the determinantal definition with fraction-free
    elimination, so defective chains and sign conventions come out exactly.
    S_deg(q) is taken to be q itself.
    """
    v = name
    m, n = p.degree(v), q.degree(v)
    if m <= n:
        raise ValueError("need deg(p) > deg(q)")
    if not (0 <= j <= n):
        raise ValueError("subresultant index out of range")
    if j == n:
        return q
    rows = _sylvester_like_rows(p, q, v, j)
    ncols = m + n - j
    k = m + n - 2 * j
    coeffs: dict[int, Polynomial] = {}
    for i in range(j + 1):
        cols = list(range(k - 1)) + [ncols - 1 - i]
        d = _det_bareiss([[row[c] for c in cols] for row in rows])
        if not d.is_zero():
            coeffs[i] = d
    vpoly = Polynomial.variable(p.order, v)
    out = Polynomial.zero(p.order)
    for i, c in coeffs.items():
        out = out + c * (vpoly ** i)
    return out


def principal_subresultant_coefficient(p: Polynomial, q: Polynomial, name: str, j: int) -> Polynomial:
    """Coefficient of v^j in the j-th subresultant (may be zero)."""
    v = name
    m, n = p.degree(v), q.degree(v)
    if m <= n:
        raise ValueError("need deg(p) > deg(q)")
    if j == n:
        return q.coeffs_in(v).get(n, Polynomial.zero(p.order))
    rows = _sylvester_like_rows(p, q, v, j)
    k = m + n - 2 * j
    return _det_bareiss([row[:k] for row in rows])


def _sylvester_like_rows(p: Polynomial, q: Polynomial, v: str, j: int) -> list[list[Polynomial]]:
    order = p.order
    zero = Polynomial.zero(order)
    m, n = p.degree(v), q.degree(v)
    ncols = m + n - j
    pc = p.coeffs_in(v)
    qc = q.coeffs_in(v)
    rows = []
    for s in range(n - j):  # v^(n-j-1-s) * p
        row = [zero] * ncols
        for e, c in pc.items():
            col = ncols - 1 - (e + n - j - 1 - s)
            row[col] = c
        rows.append(row)
    for s in range(m - j):  # v^(m-j-1-s) * q
        row = [zero] * ncols
        for e, c in qc.items():
            col = ncols - 1 - (e + m - j - 1 - s)
            row[col] = c
        rows.append(row)
    return rows


def _det_bareiss(matrix: list[list[Polynomial]]) -> Polynomial:
    """Fraction-free determinant of a square polynomial matrix."""
    k = len(matrix)
    if k == 0:
        raise ValueError("empty matrix")
    order = matrix[0][0].order
    m = [row[:] for row in matrix]
    sign = 1
    prev = Polynomial.constant(order, 1)
    for i in range(k - 1):
        if m[i][i].is_zero():
            for r in range(i + 1, k):
                if not m[r][i].is_zero():
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(order)
        pivot = m[i][i]
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = exact_div(pivot * m[r][c] - m[r][i] * m[i][c], prev)
            m[r][i] = Polynomial.zero(order)
        prev = pivot
    d = m[k - 1][k - 1]
    return d if sign == 1 else -d


# ----------------------------------------------------------------------
# parsing and printing


def parse_poly(text: str, order: VarOrder) -> Polynomial:
    """Parse polynomial text like ``8*x^3+2*a*x-b``.

    The grammar has ``+ - * ^`` and parentheses, integer or ``p/q``
    rational coefficients, and named variables from `order`.  Implicit
    multiplication is rejected (``2x`` is an error).  `format_poly` is the
    exact inverse on reduced polynomials.

    Raises
    ------
    PolyParseError
        On any syntax error or unknown variable.
    """
    tokens = _tokenize(text)
    parser = _Parser(tokens, order)
    p = parser.expr()
    parser.expect("end")
    return p


_TOKEN_CHARS = {"+": "plus", "-": "minus", "*": "star", "^": "caret", "(": "lpar", ")": "rpar", "/": "slash"}


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((_TOKEN_CHARS[ch], ch))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and (text[j].isalpha() or text[j] == "_"):
                raise PolyParseError("implicit multiplication at %r" % (text[i:j + 1],))
            tokens.append(("int", text[i:j]))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            if j < n and text[j] == "(":
                raise PolyParseError("function calls are not part of the grammar")
            tokens.append(("name", text[i:j]))
            i = j
            continue
        raise PolyParseError("unexpected character %r" % (ch,))
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], order: VarOrder):
        self.tokens = tokens
        self.pos = 0
        self.order = order

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def next(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> str:
        k, val = self.next()
        if k != kind:
            raise PolyParseError("expected %s, found %r" % (kind, val or "end of input"))
        return val

    def expr(self) -> Polynomial:
        negate = False
        if self.peek() in ("plus", "minus"):
            negate = self.next()[0] == "minus"
        p = self.term()
        if negate:
            p = -p
        while self.peek() in ("plus", "minus"):
            op = self.next()[0]
            q = self.term()
            p = p - q if op == "minus" else p + q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek() == "star":
            self.next()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        p = self.base()
        if self.peek() == "caret":
            self.next()
            e = self.expect("int")
            p = p ** int(e)
        return p

    def base(self) -> Polynomial:
        kind, val = self.next()
        if kind == "int":
            c = Fraction(int(val))
            if self.peek() == "slash":
                self.next()
                den = int(self.expect("int"))
                if den == 0:
                    raise PolyParseError("zero denominator")
                c = c / den
            return Polynomial.constant(self.order, c)
        if kind == "name":
            if val not in self.order:
                raise PolyParseError("unknown variable %r" % (val,))
            return Polynomial.variable(self.order, val)
        if kind == "minus":
            return -self.base()
        if kind == "lpar":
            p = self.expr()
            self.expect("rpar")
            return p
        raise PolyParseError("unexpected %r" % (val or "end of input",))


def format_poly(p: Polynomial) -> str:
    """Canonical text form; `parse_poly` round-trips it bit-exactly."""
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda t: _term_sort_key(t[0]), reverse=True)
    parts: list[tuple[str, str]] = []
    names = p.order.names
    for exp, c in items:
        mono = "*".join(
            name if e == 1 else "%s^%d" % (name, e)
            for name, e in ((names[i], e) for i, e in enumerate(exp) if e)
        )
        if not mono:
            body = _format_coeff(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = "%s*%s" % (_format_coeff(abs(c)), mono)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)
