"""Triangular sets, regular chains, and triangular decomposition.

A triangular set is a list of nonconstant polynomials with pairwise
distinct main variables, stored by increasing main variable.  A regular
chain additionally has every initial regular (neither zero nor a zero
divisor) modulo the saturated ideal of the part of the chain below it.
The saturated ideal sat(T) is the ideal generated by T saturated by the
product of initials; its variety is the Zariski closure of the
quasi-component W(T) (the points of V(T) where no initial vanishes).

The decomposition algorithm is incremental: equations are intersected one
at a time against the current chains.  All case splitting funnels through
two primitives that refine a chain without changing its main variables or
shrinking its saturated ideal:

* ``regularize(p, T)`` splits T into chains on which p is either in the
  saturated ideal or regular modulo it;
* ``regular_gcd(p, q, v, C)`` walks the subresultant chain of p and q
  bottom-up modulo a lower chain C, splitting C whenever a principal
  subresultant coefficient is a zero divisor, and returns a gcd with
  regular initial on each branch.

Chains are kept squarefree throughout (each level has regular separant),
which makes every saturated ideal radical; the membership tags emitted by
``regularize`` rely on that invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .polyarith import (
    ConstantPolynomial,
    Polynomial,
    VarOrder,
    ZeroInput,
    exact_div,
    content,
    gcd,
    init,
    mdeg,
    mvar,
    normalize,
    prem,
    principal_subresultant_coefficient,
    pseudo_divide,
    resultant,
    squarefree_part,
    subresultant,
    tail,
)


@dataclass(frozen=True)
class TriangularSet:
    """Polynomials with pairwise distinct main variables, ascending."""

    order: VarOrder
    polys: tuple[Polynomial, ...] = ()

    def __post_init__(self) -> None:
        seen: list[int] = []
        for p in self.polys:
            if p.is_zero() or p.is_constant():
                raise ValueError("triangular sets contain nonconstant polynomials only")
            if p.order != self.order:
                raise ValueError("mixed variable orders in triangular set")
            i = self.order.index(mvar(p))
            if seen and i <= seen[-1]:
                raise ValueError("main variables must be distinct and ascending")
            seen.append(i)

    # structural helpers -------------------------------------------------

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def is_empty(self) -> bool:
        return not self.polys

    def main_variables(self) -> tuple[str, ...]:
        return tuple(mvar(p) for p in self.polys)

    def free_variables(self) -> tuple[str, ...]:
        alg = set(self.main_variables())
        return tuple(n for n in self.order.names if n not in alg)

    def is_zero_dimensional(self) -> bool:
        return len(self.polys) == len(self.order)

    def level(self, name: str) -> Polynomial | None:
        for p in self.polys:
            if mvar(p) == name:
                return p
        return None

    def below(self, name: str) -> "RegularChain":
        i = self.order.index(name)
        return RegularChain(self.order, tuple(p for p in self.polys if self.order.index(mvar(p)) < i))

    def above(self, name: str) -> tuple[Polynomial, ...]:
        i = self.order.index(name)
        return tuple(p for p in self.polys if self.order.index(mvar(p)) > i)

    def initial_product(self) -> Polynomial:
        h = Polynomial.constant(self.order, 1)
        for p in self.polys:
            h = h * init(p)
        return h

    def sort_key(self) -> tuple:
        return tuple(p.sort_key() for p in self.polys)


@dataclass(frozen=True)
class RegularChain(TriangularSet):
    """A triangular set whose initials are regular modulo the chain below.

    Instances produced by this module are regular by construction; the
    `squarefree_certified` flag records that every level also has a
    regular separant, so sat(T) is radical.
    """

    squarefree_certified: bool = True

    def verify_regular(self) -> bool:
        """Recheck the defining property from scratch (test support)."""
        for p in self.polys:
            if not is_regular(init(p), self.below(mvar(p))):
                return False
        return True


@dataclass(frozen=True)
class RegularSystem:
    """A regular chain together with inequations regular modulo it."""

    chain: RegularChain
    inequations: tuple[Polynomial, ...] = ()

    def verify_regular(self) -> bool:
        return self.chain.verify_regular() and all(
            is_regular(h, self.chain) for h in self.inequations
        )


def _chain(order: VarOrder, polys: Iterable[Polynomial]) -> RegularChain:
    ps = sorted(polys, key=lambda p: order.index(mvar(p)))
    return RegularChain(order, tuple(ps))


def chain_key(T: TriangularSet) -> tuple:
    return T.sort_key()


def _dedupe(chains: Iterable[RegularChain]) -> tuple[RegularChain, ...]:
    seen: dict[tuple, RegularChain] = {}
    for c in chains:
        seen.setdefault(chain_key(c), c)
    return tuple(seen[k] for k in sorted(seen))


# ----------------------------------------------------------------------
# reduction


def prem_chain(p: Polynomial, T: TriangularSet) -> Polynomial:
    """Iterated pseudo-remainder of p by the chain, top level first."""
    r = p
    for t in reversed(T.polys):
        v = mvar(t)
        if not r.is_zero() and r.degree(v) >= t.degree(v):
            r = prem(r, t, v)
    return r


def iterated_resultant(p: Polynomial, T: TriangularSet) -> Polynomial:
    """res(p, T): eliminate the chain's main variables from p, top first.

    Follows the convention that res(p, t, v) with v absent from p is p
    itself, so the result is p when the chain is empty or shares no
    variables with p.
    """
    r = p
    for t in reversed(T.polys):
        if r.is_zero() or r.is_constant():
            return r
        v = mvar(t)
        if r.degree(v) > 0:
            r = resultant(r, t, v)
    return r


# ----------------------------------------------------------------------
# regularity splitting

Branch = tuple[RegularChain, bool]  # (refined chain, p in sat(chain))


@lru_cache(maxsize=100000)
def regularize(p: Polynomial, T: RegularChain) -> tuple[Branch, ...]:
    """Split T so that p is either in sat or regular on every branch.

    Returns pairs (T_i, in_sat).  The branches have the same main
    variables as T, satisfy sat(T) contained in sat(T_i), and the union
    of the closures of their quasi-components is the closure of W(T).
    On a branch tagged in_sat, p lies in sat(T_i); otherwise p is
    regular modulo sat(T_i).
    """
    if p.is_zero():
        return ((T, True),)
    if p.is_constant():
        return ((T, False),)
    r = prem_chain(p, T)
    if r.is_zero():
        return ((T, True),)
    if r.is_constant():
        return ((T, False),)
    v = mvar(r)
    if T.level(v) is None:
        return _normalize_branches(_regularize_free(r, v, T))
    return _normalize_branches(_regularize_algebraic(r, v, T))


def _normalize_branches(branches: Iterable[Branch]) -> tuple[Branch, ...]:
    seen: dict[tuple, Branch] = {}
    for ch, flag in branches:
        seen.setdefault((chain_key(ch), flag), (ch, flag))
    return tuple(seen[k] for k in sorted(seen))


def _regularize_free(r: Polynomial, v: str, T: RegularChain) -> tuple[Branch, ...]:
    # v is transcendental over every component, so r is in sat exactly
    # when all its coefficients are, and regular as soon as one
    # coefficient is regular.
    coeffs = [c for _, c in sorted(r.coeffs_in(v).items(), reverse=True)]
    out: list[Branch] = []
    work: list[tuple[RegularChain, int]] = [(T, 0)]
    while work:
        C, i = work.pop()
        if i == len(coeffs):
            out.append((C, True))
            continue
        for C2, in_sat in regularize(coeffs[i], C):
            if in_sat:
                work.append((C2, i + 1))
            else:
                out.append((C2, False))
    return tuple(out)


def _regularize_algebraic(r: Polynomial, v: str, T: RegularChain) -> tuple[Branch, ...]:
    t = T.level(v)
    assert t is not None and r.degree(v) < t.degree(v)
    C = T.below(v)
    U = T.above(v)
    out: list[Branch] = []
    for C1, in_sat in regularize(init(r), C):
        if in_sat:
            rest = tail(r)
            for T2, flag in regularize(rest, _chain(T.order, C1.polys + (t,) + U)):
                out.append((T2, flag))
            continue
        for g, C2 in regular_gcd(t, r, v, C1):
            if g.degree(v) == 0:
                out.append((_chain(T.order, C2.polys + (t,) + U), False))
                continue
            gn = normalize(g)
            out.append((_chain(T.order, C2.polys + (gn,) + U), True))
            if g.degree(v) < t.degree(v):
                q = normalize(pseudo_divide(t, g, v)[0])
                for T3, flag in regularize(r, _chain(T.order, C2.polys + (q,) + U)):
                    out.append((T3, flag))
    return tuple(out)


@lru_cache(maxsize=100000)
def regular_gcd(
    A: Polynomial, B: Polynomial, v: str, C: RegularChain
) -> tuple[tuple[Polynomial, RegularChain], ...]:
    """GCD of A and B in v modulo sat(C), with case splitting.

    Requires deg(A, v) > deg(B, v) >= 1, v free with respect to C, and
    both initials regular modulo sat(C).  Walks the subresultant chain of
    (A, B) from the resultant upward; on each branch of C the first
    principal subresultant coefficient that is regular identifies the gcd.
    Returns pairs (g, C_i): g has regular initial modulo sat(C_i), lies
    in the ideal generated by A and B, and both prem(A, g) and
    prem(B, g) vanish on the closure of W(C_i).
    """
    n = B.degree(v)
    out: list[tuple[Polynomial, RegularChain]] = []
    work: list[tuple[RegularChain, int]] = [(C, 0)]
    while work:
        Ci, j = work.pop()
        if j == n:
            out.append((B, Ci))
            continue
        s_j = principal_subresultant_coefficient(A, B, v, j)
        if s_j.is_zero():
            work.append((Ci, j + 1))
            continue
        for Ci2, in_sat in regularize(s_j, Ci):
            if in_sat:
                work.append((Ci2, j + 1))
            else:
                out.append((subresultant(A, B, v, j), Ci2))
    seen: dict[tuple, tuple[Polynomial, RegularChain]] = {}
    for g, Ci in out:
        seen.setdefault((chain_key(Ci), g.sort_key()), (g, Ci))
    return tuple(seen[k] for k in sorted(seen))


def is_regular(p: Polynomial, T: RegularChain) -> bool:
    """True when p is neither zero nor a zero divisor modulo sat(T)."""
    if p.is_zero():
        return False
    if p.is_constant():
        return True
    r = iterated_resultant(p, T)
    if not r.is_zero():
        return True
    return all(not in_sat for _, in_sat in regularize(p, T))


def saturated_membership(p: Polynomial, T: RegularChain) -> bool:
    """Decide p in sat(T).  prem-reduction to zero is the fast path; the
    complete test asks regularize for an in-sat tag on every branch."""
    if p.is_zero():
        return True
    if prem_chain(p, T).is_zero():
        return True
    return all(in_sat for _, in_sat in regularize(p, T))


# ----------------------------------------------------------------------
# squarefree maintenance


def _level_squarefree(
    t: Polynomial, v: str, C: RegularChain
) -> tuple[tuple[Polynomial, RegularChain], ...]:
    """Replace t by its squarefree part modulo sat(C), splitting C.

    Requires init(t) regular modulo sat(C).  Each output pair (s, C_i)
    has s squarefree with regular initial and the same zero set as t over
    W(C_i).
    """
    if t.degree(v) == 1:
        return ((t, C),)
    d = t.derivative(v)
    out: list[tuple[Polynomial, RegularChain]] = []
    for g, C2 in regular_gcd(t, d, v, C):
        if g.degree(v) == 0:
            out.append((t, C2))
        else:
            s = normalize(pseudo_divide(t, g, v)[0])
            out.extend(_level_squarefree(s, v, C2))
    return tuple(out)


def make_squarefree(T: RegularChain) -> tuple[RegularChain, ...]:
    """Squarefree chains with the same union of quasi-component closures."""
    chains: list[RegularChain] = [RegularChain(T.order, ())]
    for t in T.polys:
        v = mvar(t)
        nxt: list[RegularChain] = []
        for C in chains:
            for s, C2 in _level_squarefree(t, v, C):
                nxt.append(_chain(T.order, C2.polys + (normalize(s),)))
        chains = nxt
    return _dedupe(chains)


def _extend(base: RegularChain, uppers: Sequence[Polynomial]) -> tuple[RegularChain, ...]:
    """Re-certify upper chain polynomials over a rebuilt lower chain.

    Branches where an upper initial falls into the saturated ideal are
    dropped: the original quasi-component had that initial nonzero, so
    such branches carry none of its points.
    """
    chains: list[RegularChain] = [base]
    for t in uppers:
        v = mvar(t)
        nxt: list[RegularChain] = []
        for C in chains:
            for C1, in_sat in regularize(init(t), C):
                if in_sat:
                    continue
                for s, C2 in _level_squarefree(t, v, C1):
                    nxt.append(_chain(C.order, C2.polys + (normalize(s),)))
        chains = nxt
    return tuple(chains)


# ----------------------------------------------------------------------
# intersection


def intersect(p: Polynomial, T: RegularChain) -> tuple[RegularChain, ...]:
    """Chains covering the solutions of p = 0 on the quasi-component of T.

    The union of the output quasi-component closures lies inside
    V(p) intersected with the closure of W(T) and covers V(p) ∩ W(T);
    this is the contract the incremental solver composes.
    """
    out: list[RegularChain] = []
    for T1, in_sat in regularize(p, T):
        if in_sat:
            out.append(T1)
        else:
            out.extend(_intersect_regular(prem_chain(p, T1), T1))
    return _dedupe(out)


def _intersect_regular(r: Polynomial, T: RegularChain) -> list[RegularChain]:
    # r is the reduced, nonzero form of an equation regular modulo sat(T)
    if r.is_zero():
        return [T]
    if r.is_constant():
        return []
    v = mvar(r)
    if T.level(v) is None:
        return _intersect_free(r, v, T)
    return _intersect_algebraic(r, v, T)


def _intersect_free(r: Polynomial, v: str, T: RegularChain) -> list[RegularChain]:
    out: list[RegularChain] = []
    c = content(r, v)
    if not c.is_constant():
        out.extend(intersect(c, T))
    pp = squarefree_part(exact_div(r, c))
    lead = init(pp)
    for T2, in_sat in regularize(lead, T):
        if in_sat:
            out.extend(intersect(tail(pp), T2))
            continue
        C = T2.below(v)
        U = T2.above(v)
        for s, C2 in _level_squarefree(pp, v, C):
            base = _chain(T.order, C2.polys + (normalize(s),))
            out.extend(_extend(base, U))
    # solutions where the leading coefficient vanishes without vanishing
    # identically on the branch
    if not lead.is_constant():
        for E in intersect(lead, T):
            out.extend(intersect(tail(pp), E))
    return out


def _intersect_algebraic(r: Polynomial, v: str, T: RegularChain) -> list[RegularChain]:
    t = T.level(v)
    assert t is not None
    C = T.below(v)
    U = T.above(v)
    out: list[RegularChain] = []
    for C1, in_sat in regularize(init(r), C):
        if in_sat:
            rebuilt = _chain(T.order, C1.polys + (t,) + U)
            out.extend(intersect(tail(r), rebuilt))
            continue
        for g, C2 in regular_gcd(t, r, v, C1):
            if g.degree(v) == 0:
                # generically no common zero over this branch; all common
                # zeros lie over the vanishing locus of the resultant
                for E in intersect(g, C2):
                    for ch in _extend(E, (t,) + U):
                        out.extend(intersect(r, ch))
                continue
            base = _chain(T.order, C2.polys + (normalize(g),) + U)
            out.append(base)
            lead = init(g)
            if not lead.is_constant():
                for E in intersect(lead, C2):
                    for ch in _extend(E, (t,) + U):
                        out.extend(intersect(r, ch))
    return out


# ----------------------------------------------------------------------
# decomposition


def triangularize(F: Iterable[Polynomial], order: VarOrder) -> tuple[RegularChain, ...]:
    """Decompose V(F) into regular chains in the sense of Kalkbrener.

    The union over the output chains of the Zariski closures of their
    quasi-components is V(F).  Chains are squarefree and canonically
    sorted; every input polynomial pseudo-reduces to zero modulo every
    output chain.  An empty system yields the empty chain; a nonzero
    constant in F yields no chains.
    """
    polys: list[Polynomial] = []
    for f in F:
        if f.order != order:
            raise ValueError("equation does not match the variable order")
        if f.is_zero():
            continue
        if f.is_constant():
            return ()
        polys.append(normalize(f))
    chains: tuple[RegularChain, ...] = (RegularChain(order, ()),)
    for f in sorted(polys, key=lambda q: (order.index(mvar(q)), mdeg(q), q.sort_key())):
        chains = _dedupe(c2 for c in chains for c2 in intersect(f, c))
        if not chains:
            return ()
    final: list[RegularChain] = []
    for c in chains:
        final.extend(make_squarefree(c))
    return _dedupe(final)
