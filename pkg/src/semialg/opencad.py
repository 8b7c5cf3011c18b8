"""Open CAD projection, sample points, and sign-condition formulas.

The projection operator here only has to preserve the open cells of a
sign-invariant decomposition, not full CAD adjacency: projecting a factor
set keeps the factors free of the top variable, the pairwise resultants
of the rest, and each initial times discriminant.  Closing a set under
derivatives before projecting (the augmented variant, oaf) upgrades
sign-invariance to the fingerprint property: over each connected sign
cell of the projected family, the number of real solutions of the system
the factors came from is constant.

Everything works on a gcd-free basis instead of irreducible factors.
The basis is squarefree and pairwise coprime, which is all the
connectivity argument consumes; a basis element that happens to be a
product of two irreducibles refines the sign conditions without
coarsening any cell.  Formulas are kept in a canonical disjunctive form
whose atoms are signed basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .polyarith import (
    Polynomial,
    VarOrder,
    discriminant,
    format_poly,
    gcd_free_basis,
    init,
    mvar,
    normalize,
    resultant,
    squarefree_part,
)
from .realroots import isolate_univariate

# Truth-table minimization is skipped past this many distinct atoms; the
# raw disjunctive form is still a correct answer, just not a short one.
_MINIMIZE_CAP_VARS = 12


class ZeroAtSample(ValueError):
    """A formula was requested at a point lying on one of its polynomials."""


@dataclass(frozen=True, order=True)
class SignAtom:
    """A strict sign condition poly * sign > 0 on a basis polynomial."""

    poly: Polynomial
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")
        if self.poly.is_constant():
            raise ValueError("sign atoms carry nonconstant polynomials")

    def holds(self, values: Mapping[str, Fraction]) -> bool:
        v = self.poly.eval_all(values)
        if v == 0:
            raise ZeroAtSample(f"{self.poly} vanishes at the query point")
        return (v > 0) == (self.sign > 0)

    def __str__(self) -> str:
        rel = ">" if self.sign > 0 else "<"
        return f"{format_poly(self.poly)} {rel} 0"


Clause = tuple[SignAtom, ...]


def _atom_key(a: SignAtom) -> tuple:
    return (a.poly.sort_key(), a.sign)


def _canonical_clause(atoms: Iterable[SignAtom]) -> Clause:
    return tuple(sorted(set(atoms), key=_atom_key))


@dataclass(frozen=True)
class SignFormula:
    """Disjunction of conjunctions of sign atoms, canonically ordered.

    The empty disjunction is false; a disjunction containing the empty
    clause is true (and collapses to just that clause).
    """

    clauses: tuple[Clause, ...]

    @classmethod
    def false(cls) -> "SignFormula":
        return cls(())

    @classmethod
    def true(cls) -> "SignFormula":
        return cls(((),))

    @classmethod
    def of(cls, clauses: Iterable[Iterable[SignAtom]]) -> "SignFormula":
        cs = {_canonical_clause(c) for c in clauses}
        if () in cs:
            return cls.true()
        return cls(tuple(sorted(cs, key=lambda c: tuple(_atom_key(a) for a in c))))

    def is_false(self) -> bool:
        return not self.clauses

    def is_true(self) -> bool:
        return self.clauses == ((),)

    def polynomials(self) -> tuple[Polynomial, ...]:
        seen = []
        for c in self.clauses:
            for a in c:
                if a.poly not in seen:
                    seen.append(a.poly)
        return tuple(sorted(seen, key=lambda p: p.sort_key()))

    def holds(self, values: Mapping[str, Fraction]) -> bool:
        return any(all(a.holds(values) for a in c) for c in self.clauses)

    def __str__(self) -> str:
        if self.is_false():
            return "false"
        if self.is_true():
            return "true"
        parts = []
        for c in self.clauses:
            body = " and ".join(str(a) for a in c)
            parts.append(f"({body})" if len(self.clauses) > 1 and len(c) > 1 else body)
        return " or ".join(parts)


@dataclass(frozen=True)
class SamplePoint:
    """A rational point in the first k variables of the working order."""

    names: tuple[str, ...]
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.coords):
            raise ValueError("names and coordinates differ in length")

    def values(self) -> dict[str, Fraction]:
        return dict(zip(self.names, self.coords))

    def __str__(self) -> str:
        inner = ", ".join(f"{n}={c}" for n, c in zip(self.names, self.coords))
        return f"({inner})"


# ---------------------------------------------------------------------------
# projection


def _nonconstant_basis(polys: Iterable[Polynomial]) -> list[Polynomial]:
    keep = [p for p in polys if not (p.is_zero() or p.is_constant())]
    return gcd_free_basis(keep)


def oproj(A: Iterable[Polynomial], v: str) -> tuple[Polynomial, ...]:
    """Open projection of the factor basis of A along its top variable v.

    Output: gcd-free basis of the factors free of v, the pairwise
    resultants of the v-level factors, and init * discriminant of each
    v-level factor.  Constants vanish from the basis, so a set whose
    projection carries no condition comes back empty.  v must be the
    greatest variable occurring anywhere in A.
    """
    basis = _nonconstant_basis(A)
    if basis:
        order = basis[0].order
        vi = order.index(v)
        for p in basis:
            above = [n for n in p.variables() if order.index(n) > vi]
            if above:
                raise ValueError(f"{p} involves {above} above projection variable {v}")
    below = [p for p in basis if v not in p.variables()]
    at_v = [p for p in basis if v in p.variables()]
    produced: list[Polynomial] = list(below)
    for f, g in combinations(at_v, 2):
        produced.append(resultant(f, g, v))
    for f in at_v:
        d = discriminant(f, v)
        produced.append(init(f) * d if f.degree(v) >= 2 else init(f))
    return tuple(_nonconstant_basis(produced))


def derivative_closure(A: Iterable[Polynomial], x: str) -> tuple[Polynomial, ...]:
    """All derivatives of each p up to order deg(p, x) - 1, normalized.

    A polynomial free of x contributes just itself; dropping it instead
    would lose the lower-level conditions when mixed sets are passed.
    """
    out: list[Polynomial] = []

    def add(q: Polynomial) -> None:
        nq = normalize(q)
        if nq not in out:
            out.append(nq)

    for p in A:
        if p.is_zero() or p.is_constant():
            continue
        d = p.degree(x)
        if d == 0:
            add(p)
            continue
        q = p
        for _ in range(d):
            add(q)
            q = q.derivative(x)
            if q.is_zero() or q.is_constant():
                break
    return tuple(out)


def _top_variable(polys: Sequence[Polynomial]) -> str:
    order = polys[0].order
    k = max(order.index(n) for p in polys for n in p.variables())
    return order.names[k]


def oaf(A: Iterable[Polynomial]) -> tuple[Polynomial, ...]:
    """Open augmented projected factors: derivative-close, project, recurse.

    The result is a fingerprint set for the family A: sign vectors on it
    separate the connected components of every open sign-invariant cell
    through all projection levels.
    """
    work = [p for p in A if not (p.is_zero() or p.is_constant())]
    if not work:
        return ()
    v = _top_variable(work)
    order = work[0].order
    cs = gcd_free_basis(list(derivative_closure(work, v)))
    result = list(cs)
    if order.index(v) > 0:
        projected = oproj(cs, v)
        for p in oaf(projected):
            if p not in result:
                result.append(p)
    return tuple(sorted(set(result), key=lambda p: p.sort_key()))


# ---------------------------------------------------------------------------
# sample points


# A shared box endpoint can itself be a root (degenerate neighbours); each
# refinement pass halves the gap boxes, so a valid cut point appears fast.
SIGN_GAP_TRIES = 64


def _line_samples(polys: Sequence[Polynomial], v: str) -> list[Fraction]:
    """Rational points meeting every component of the line minus roots.

    Midpoints of root gaps plus integer points outside the extremes;
    every candidate is verified to miss every root exactly, refining the
    neighbouring isolating boxes when a shared endpoint happens to be a
    root.
    """
    active = [p for p in polys if not (p.is_zero() or p.is_constant())]
    if not active:
        return [Fraction(0)]
    prod = active[0]
    for p in active[1:]:
        prod = prod * p
    prod = squarefree_part(prod)
    boxes = list(isolate_univariate(prod))
    if not boxes:
        return [Fraction(0)]

    def ok(c: Fraction) -> bool:
        return all(p.eval_all({v: c}) != 0 for p in active)

    for _ in range(SIGN_GAP_TRIES):
        ivs = [b.intervals[0] for b in boxes]
        candidates = [Fraction(_floor(ivs[0][0]) - 1)]
        good = True
        for (a, b), (c, d) in zip(ivs, ivs[1:]):
            mid = (b + c) / 2
            if not ok(mid):
                good = False
                break
            candidates.append(mid)
        if good:
            last = Fraction(_ceil(ivs[-1][1]) + 1)
            candidates.append(last)
            if all(ok(c) for c in candidates):
                return candidates
        boxes = [b.refined() for b in boxes]
    raise AssertionError("separating points kept landing on roots")


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def sample_points(
    A: Iterable[Polynomial], k: int, order: VarOrder | None = None
) -> list[SamplePoint]:
    """One rational point in each component of the complement of V(prod A).

    A must live in the first k variables of its order.  Recursion: sample
    the open projection in k-1 variables, then cut each fiber line at the
    specialized roots.  Points are verified to miss every polynomial of A
    exactly.  An empty A (no conditions anywhere) yields the origin; the
    order must then be passed explicitly.
    """
    polys = [p for p in A if not (p.is_zero() or p.is_constant())]
    if polys:
        order = polys[0].order
    elif order is None:
        raise ValueError("empty family: pass the variable order explicitly")
    if not 1 <= k <= len(order.names):
        raise ValueError(f"k={k} out of range for order {order.names}")
    names = order.names[:k]
    for p in polys:
        stray = [n for n in p.variables() if n not in names]
        if stray:
            raise ValueError(f"{p} involves {stray}, beyond the first {k} variables")
    return _sample_rec(order, polys, k)


def _sample_rec(
    order: VarOrder, polys: Sequence[Polynomial], k: int
) -> list[SamplePoint]:
    v = order.names[k - 1]
    if k == 1:
        return [
            SamplePoint((v,), (c,)) for c in _line_samples(polys, v)
        ]
    lower = _sample_rec(order, list(oproj(polys, v)), k - 1)
    out: list[SamplePoint] = []
    for s in lower:
        vals = s.values()
        fibre = []
        for p in polys:
            q = p.substitute(vals)
            if q.is_zero():
                raise AssertionError(
                    f"{p} vanished identically over sample {s}; projection bug"
                )
            if not q.is_constant():
                fibre.append(q)
        for c in _line_samples(fibre, v):
            out.append(SamplePoint(s.names + (v,), s.coords + (c,)))
    return out


# ---------------------------------------------------------------------------
# formulas


def generate_formula(A: Iterable[Polynomial], s: SamplePoint) -> Clause:
    """The sign conditions of the basis A at the sample point s."""
    values = s.values()
    atoms = []
    for p in A:
        q = normalize(p)
        val = q.eval_all(values)
        if val == 0:
            raise ZeroAtSample(f"{q} vanishes at sample {s}")
        atoms.append(SignAtom(q, 1 if val > 0 else -1))
    return _canonical_clause(atoms)


def revise_formula(G: Iterable[Clause]) -> SignFormula:
    """Equivalent simplified disjunction of the given sign clauses.

    Equivalence holds over the region where every mentioned polynomial is
    nonzero, which is the only region these formulas are read on.  Two
    clauses differing in a single atom's sign merge into their common
    part; clauses implied by a shorter one are dropped.  Past the
    minimization cap the raw disjunction is returned untouched.
    """
    clauses = {frozenset(c) for c in (tuple(g) for g in G)}
    if not clauses:
        return SignFormula.false()
    n_polys = len({a.poly for c in clauses for a in c})
    if n_polys > _MINIMIZE_CAP_VARS:
        return SignFormula.of(tuple(c) for c in clauses)

    changed = True
    while changed:
        changed = False
        items = sorted(clauses, key=lambda c: (len(c), sorted(map(_atom_key, c))))
        for c1, c2 in combinations(items, 2):
            diff = c1.symmetric_difference(c2)
            if len(diff) == 2:
                polys = {a.poly for a in diff}
                signs = {a.sign for a in diff}
                if len(polys) == 1 and signs == {-1, 1}:
                    merged = frozenset(c1 & c2)
                    clauses.discard(c1)
                    clauses.discard(c2)
                    clauses.add(merged)
                    changed = True
                    break
        if changed:
            continue
        for c1, c2 in combinations(items, 2):
            if c1 < c2:
                clauses.discard(c2)
                changed = True
                break
            if c2 < c1:
                clauses.discard(c1)
                changed = True
                break
    return SignFormula.of(tuple(c) for c in clauses)
