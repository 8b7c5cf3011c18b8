"""Semi-algebraic systems and their decomposition into regular pieces.

A system couples polynomial equations with three kinds of sign
conditions: nonnegativity, strict positivity, and nonvanishing.  The
decomposition proceeds in stages.  Equations are triangularized into
squarefree regular chains over the complex numbers.  Each chain is then
refined until every sign-constrained polynomial is regular modulo its
saturated ideal; branches on which a strict constraint degenerates to
zero are dropped, while a nonnegativity constraint that degenerates is
simply discharged.  The border polynomial of the refined branch fences
off the parameter values where the chain stops specializing well, and
away from that fence a fingerprint set of parameter polynomials is
sampled: real root counts at sample points become sign formulas on the
parameters, and the formulas with roots are merged into the defining
formula of a regular semi-algebraic system.

What happens on the fence itself is not computed eagerly.  The lazy
driver returns those cases as deferred systems, the original input with
one fingerprint polynomial appended as an equation.  The full driver
evaluates them recursively; each appended equation strictly grows the
equation ideal, so the recursion bottoms out, with a depth cap turning
pathological inputs into a diagnosable error instead of a hang.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .border import border_polynomial
from .chains import (
    RegularChain,
    chain_key,
    make_squarefree,
    regularize,
    triangularize,
)
from .opencad import (
    SamplePoint,
    SignAtom,
    SignFormula,
    generate_formula,
    oaf,
    revise_formula,
    sample_points,
)
from .polyarith import (
    Polynomial,
    VarOrder,
    format_poly,
    mdeg,
    mvar,
    normalize,
    rational_content,
)
from .realroots import real_root_counting


class RecursionDepthExceeded(RuntimeError):
    """The full decomposition recursed past its depth cap."""


# Refinement against the sign conditions is a fixpoint loop; this cap
# turns a cycle bug into an error instead of a hang.
_REFINE_CAP = 10_000


def _poly_key(p: Polynomial) -> tuple:
    return (p.total_degree(), p.sort_key())


def _positive_scale(p: Polynomial) -> Polynomial:
    """Primitive associate with the sign of p kept intact.

    normalize() flips signs to make the leading coefficient positive,
    which is wrong for polynomials standing in inequalities.
    """
    if p.is_zero():
        return p
    c = rational_content(p)
    return p.scale(Fraction(1) / abs(c))


def _rehome(p: Polynomial, new_order: VarOrder) -> Polynomial:
    """The same polynomial expressed over a different variable order.

    Every variable actually occurring in p must exist in the new order.
    """
    if p.order == new_order:
        return p
    width = len(new_order.names)
    terms: dict[tuple, Fraction] = {}
    for exp, c in p.terms.items():
        ne = [0] * width
        for i, e in enumerate(exp):
            if e:
                ne[new_order.index(p.order.names[i])] = e
        terms[tuple(ne)] = c
    return Polynomial(new_order, terms)


def _canonical_bucket(
    polys: Iterable[Polynomial], order: VarOrder, sign_matters: bool
) -> tuple[Polynomial, ...]:
    out = []
    for p in polys:
        if p.order != order:
            raise ValueError(f"{p} does not live in the declared order")
        q = _positive_scale(p) if sign_matters else (normalize(p) if not p.is_zero() else p)
        if q not in out:
            out.append(q)
    return tuple(sorted(out, key=_poly_key))


@dataclass(frozen=True)
class SemiAlgebraicSystem:
    """Equations F = 0, constraints N >= 0, P > 0, and H != 0."""

    order: VarOrder
    F: tuple[Polynomial, ...] = ()
    N: tuple[Polynomial, ...] = ()
    P: tuple[Polynomial, ...] = ()
    H: tuple[Polynomial, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "F", _canonical_bucket(self.F, self.order, False))
        object.__setattr__(self, "N", _canonical_bucket(self.N, self.order, True))
        object.__setattr__(self, "P", _canonical_bucket(self.P, self.order, True))
        object.__setattr__(self, "H", _canonical_bucket(self.H, self.order, False))

    def key(self) -> tuple:
        return (
            self.order.names,
            tuple(p.sort_key() for p in self.F),
            tuple(p.sort_key() for p in self.N),
            tuple(p.sort_key() for p in self.P),
            tuple(p.sort_key() for p in self.H),
        )

    def augmented(self, p: Polynomial) -> "SemiAlgebraicSystem":
        """This system with the equation p = 0 adjoined."""
        return SemiAlgebraicSystem(self.order, self.F + (p,), self.N, self.P, self.H)

    def __str__(self) -> str:
        parts = []
        for ps, rel in ((self.F, "= 0"), (self.N, ">= 0"), (self.P, "> 0"), (self.H, "!= 0")):
            parts.extend(f"{format_poly(p)} {rel}" for p in ps)
        return "[" + ", ".join(parts) + "]" if parts else "[]"


@dataclass(frozen=True)
class PreRegularSAS:
    """Border factors B, a squarefree refined chain T, strict conditions P.

    Away from the zero set of the product of B, the chain specializes
    well and every P-polynomial keeps a constant nonzero sign along each
    connected parameter region.
    """

    B: tuple[Polynomial, ...]
    T: RegularChain
    P: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        algebraic = set(self.T.main_variables())
        for b in self.B:
            bad = [v for v in b.variables() if v in algebraic]
            if bad:
                raise ValueError(f"border factor {b} involves bound variables {bad}")


@dataclass(frozen=True)
class RegularSAS:
    """A parameter formula Q, chain T, strict conditions P, and a witness.

    The witness is a parameter sample satisfying Q at which the
    specialized chain was counted to have at least one real solution
    meeting the conditions; for systems without free variables it is the
    empty point.
    """

    Q: SignFormula
    T: RegularChain
    P: tuple[Polynomial, ...]
    witness: SamplePoint

    def key(self) -> tuple:
        return (
            chain_key(self.T),
            tuple(tuple((a.poly.sort_key(), a.sign) for a in c) for c in self.Q.clauses),
            tuple(p.sort_key() for p in self.P),
        )

    def __str__(self) -> str:
        chain = ", ".join(format_poly(t) for t in self.T.polys)
        cond = ", ".join(f"{format_poly(p)} > 0" for p in self.P)
        bits = [str(self.Q), "{" + chain + "}"]
        if cond:
            bits.append(cond)
        return "[" + " | ".join(bits) + "]"


@dataclass(frozen=True)
class LazyOutput:
    """Evaluated components plus the deferred boundary systems."""

    components: tuple[RegularSAS, ...]
    deferred: tuple[SemiAlgebraicSystem, ...]


# ---------------------------------------------------------------------------
# Pre-regular decomposition


def _screen_constants(S: SemiAlgebraicSystem) -> tuple[bool, list, list, list]:
    """Evaluate constant constraints; returns (feasible, F', strict', N').

    strict' holds the nonconstant P and H polynomials that must stay
    regular (branches where one falls into the saturated ideal die); N'
    the nonconstant nonnegativity constraints.
    """
    for f in S.F:
        if f.is_constant() and not f.is_zero():
            return False, [], [], []
    for n in S.N:
        if n.is_constant() and n.constant_value() < 0:
            return False, [], [], []
    for p in S.P:
        if p.is_constant() and p.constant_value() <= 0:
            return False, [], [], []
    for h in S.H:
        if h.is_constant() and h.constant_value() == 0:
            return False, [], [], []
    eqs = [f for f in S.F if not f.is_constant()]
    strict = sorted(
        {normalize(p) for p in (*S.P, *S.H) if not p.is_constant()}, key=_poly_key
    )
    nonneg = [n for n in S.N if not n.is_constant()]
    return True, eqs, strict, nonneg


def _refine_chain(
    T: RegularChain,
    strict: Sequence[Polynomial],
    nonneg: Sequence[Polynomial],
) -> list[tuple[RegularChain, tuple[Polynomial, ...]]]:
    """Refine T until every condition is regular or discharged.

    Returns squarefree chains paired with the surviving nonnegativity
    polynomials.  Branches where a strict polynomial lies in the
    saturated ideal are discarded; a nonnegativity polynomial in the
    ideal is dropped from its branch (its constraint holds with
    equality), otherwise it survives as a strict one downstream.
    """
    stack: list[tuple[RegularChain, tuple[Polynomial, ...]]] = [(T, tuple(nonneg))]
    done: list[tuple[RegularChain, tuple[Polynomial, ...]]] = []
    steps = 0
    while stack:
        steps += 1
        if steps > _REFINE_CAP:
            raise AssertionError("chain refinement failed to stabilize")
        C, ns = stack.pop()
        sf = make_squarefree(C)
        if not (len(sf) == 1 and sf[0] == C):
            stack.extend((c, ns) for c in sf)
            continue
        progressed = False
        for p in strict:
            branches = regularize(p, C)
            if len(branches) == 1 and branches[0] == (C, False):
                continue
            stack.extend((c, ns) for c, in_sat in branches if not in_sat)
            progressed = True
            break
        if progressed:
            continue
        for i, n in enumerate(ns):
            branches = regularize(n, C)
            if len(branches) == 1 and branches[0] == (C, False):
                continue
            rest = ns[:i] + ns[i + 1 :]
            for c, in_sat in branches:
                stack.append((c, rest) if in_sat else (c, rest + (n,)))
            progressed = True
            break
        if not progressed:
            done.append((C, tuple(sorted(set(ns), key=_poly_key))))
    seen: dict[tuple, tuple[RegularChain, tuple[Polynomial, ...]]] = {}
    for C, ns in done:
        seen.setdefault((chain_key(C), tuple(p.sort_key() for p in ns)), (C, ns))
    return [seen[k] for k in sorted(seen)]


def generate_pre_regular_sas(
    S: SemiAlgebraicSystem,
) -> tuple[list[PreRegularSAS], list[SemiAlgebraicSystem]]:
    """Decompose S into pre-regular systems plus residual boundary systems.

    The union of the solutions of the pre-regular systems together with
    the solutions of S lying on the border hypersurfaces is exactly the
    solution set of S.  Residuals return that second part as data: S with
    one border factor appended as an equation, one system per factor per
    branch.
    """
    feasible, eqs, strict, nonneg = _screen_constants(S)
    if not feasible:
        return [], []
    out: list[PreRegularSAS] = []
    residuals: dict[tuple, SemiAlgebraicSystem] = {}
    for T in triangularize(eqs, S.order):
        for C, ns in _refine_chain(T, strict, nonneg):
            conditions = sorted({*strict, *(normalize(n) for n in ns)}, key=_poly_key)
            bd = border_polynomial(C, conditions)
            p_star = tuple(sorted({*(_positive_scale(p) for p in S.P if not p.is_constant()),
                                   *(_positive_scale(n) for n in ns)}, key=_poly_key))
            out.append(PreRegularSAS(tuple(bd.factors), C, p_star))
            for b in bd.factors:
                aug = S.augmented(b)
                residuals.setdefault(aug.key(), aug)
    return out, [residuals[k] for k in sorted(residuals)]


# ---------------------------------------------------------------------------
# Real root counting over a parameter sample


def _specialized_count(
    T: RegularChain, P: Sequence[Polynomial], values: Mapping[str, Fraction]
) -> int:
    """Number of real solutions of T = 0, P > 0 after fixing free variables."""
    alg = [n for n in T.order.names if n not in values]
    specialized: list[Polynomial] = []
    for t in T.polys:
        ts = t.substitute(dict(values))
        if ts.is_constant() or mvar(ts) != mvar(t) or mdeg(ts) != mdeg(t):
            raise AssertionError(
                f"chain degree dropped at {values}; sample escaped the border fence"
            )
        specialized.append(normalize(ts))
    pos: list[Polynomial] = []
    for p in P:
        ps = p.substitute(dict(values))
        if ps.is_zero():
            raise AssertionError(f"{p} vanished identically at {values}")
        if ps.is_constant():
            if ps.constant_value() < 0:
                return 0
            continue
        pos.append(ps)
    if not alg:
        return 1
    sub = VarOrder(tuple(alg))
    chain = RegularChain(sub, tuple(_rehome(t, sub) for t in specialized))
    return real_root_counting(chain, [_rehome(p, sub) for p in pos]).count


# ---------------------------------------------------------------------------
# Fingerprint QE over one pre-regular system


def _augment_order(cands: Sequence[Polynomial], order: VarOrder) -> list[Polynomial]:
    """Candidates sorted deepest projection level first, then by degree."""
    def level(p: Polynomial) -> int:
        return max(order.index(v) for v in p.variables())
    return sorted(cands, key=lambda p: (level(p), p.total_degree(), p.sort_key()))


def generate_regular_sas(
    B: Sequence[Polynomial], T: RegularChain, P: Sequence[Polynomial]
) -> tuple[tuple[Polynomial, ...], list[RegularSAS]]:
    """Fingerprint polynomials D and the regular systems over B != 0.

    Zero-dimensional chains are counted directly.  Otherwise the factors
    of B are sampled: one rational point per connected region of their
    complement, a real root count of the specialized system at each.
    Samples with and without solutions must be separated by their sign
    vectors; when a sign vector appears on both sides, D is augmented
    with one more derived polynomial and the sampling repeats.  The
    augmented D is part of the answer: the deferred boundary cases recurse
    on its members, not just on the border factors.
    """
    order = T.order
    free = [n for n in order.names if n not in T.main_variables()]
    d = len(free)
    if d == 0:
        count = real_root_counting(T, list(P)).count
        if count == 0:
            return tuple(B), []
        return tuple(B), [RegularSAS(SignFormula.true(), T, tuple(P), SamplePoint((), ()))]

    sub = VarOrder(tuple(free))
    D_sub = [_rehome(b, sub) for b in B]
    pool = None
    while True:
        samples = sample_points(D_sub, d, order=sub)
        g1: dict[tuple, SamplePoint] = {}
        g0: dict[tuple, SamplePoint] = {}
        clauses: dict[tuple, tuple] = {}
        for s in samples:
            count = _specialized_count(T, P, s.values())
            clause = generate_formula(D_sub, s)
            ck = tuple((a.poly.sort_key(), a.sign) for a in clause)
            clauses[ck] = clause
            (g1 if count > 0 else g0).setdefault(ck, s)
        conflicts = set(g1) & set(g0)
        if not conflicts:
            D_full = tuple(sorted((_rehome(p, order) for p in D_sub), key=_poly_key))
            if not g1:
                return D_full, []
            Q_sub = revise_formula([clauses[ck] for ck in sorted(g1)])
            Q = SignFormula.of(
                tuple(SignAtom(_rehome(a.poly, order), a.sign) for a in c)
                for c in Q_sub.clauses
            )
            witness = g1[sorted(g1)[0]]
            return D_full, [RegularSAS(Q, T, tuple(P), witness)]
        if pool is None:
            pool = _augment_order(oaf(D_sub), sub)
        fresh = [p for p in pool if p not in D_sub]
        if not fresh:
            raise AssertionError(
                "fingerprint set exhausted with sign vectors still ambiguous"
            )
        D_sub.append(fresh[0])


# ---------------------------------------------------------------------------
# Drivers


def lazy_real_triangularize(S: SemiAlgebraicSystem) -> LazyOutput:
    """Decompose away from the border; defer the border cases as systems.

    Every returned component's solutions solve S.  The deferred systems
    are S with one fingerprint polynomial appended as an equation; their
    solution sets jointly cover whatever part of S the components miss,
    and each appended polynomial is regular modulo the saturated ideal of
    its branch's chain, so the deferred part has strictly smaller
    dimension.
    """
    pres, _residuals = generate_pre_regular_sas(S)
    comps: dict[tuple, RegularSAS] = {}
    deferred: dict[tuple, tuple[tuple, SemiAlgebraicSystem]] = {}
    for pre in pres:
        D, R = generate_regular_sas(pre.B, pre.T, pre.P)
        for r in R:
            comps.setdefault(r.key(), r)
        for p in D:
            aug = S.augmented(p)
            deferred.setdefault(aug.key(), (_poly_key(p), aug))
    ordered = sorted(deferred.values(), key=lambda kv: (kv[0], kv[1].key()))
    return LazyOutput(
        tuple(comps[k] for k in sorted(comps)),
        tuple(sys for _, sys in ordered),
    )


def real_triangularize(
    S: SemiAlgebraicSystem, max_depth: int = 32
) -> list[RegularSAS]:
    """Full decomposition: evaluate every deferred boundary system.

    The zero sets of the returned regular systems cover exactly the
    solutions of S.  Each recursion step appends an equation that is not
    already in the ideal, so the chain of ideals ascends strictly; the
    depth cap converts a runaway recursion into an error.
    """
    comps: dict[tuple, RegularSAS] = {}
    seen: set[tuple] = set()

    def run(sys: SemiAlgebraicSystem, depth: int) -> None:
        key = sys.key()
        if key in seen:
            return
        if depth > max_depth:
            raise RecursionDepthExceeded(
                f"decomposition exceeded depth {max_depth}"
            )
        seen.add(key)
        lazy = lazy_real_triangularize(sys)
        for r in lazy.components:
            comps.setdefault(r.key(), r)
        for nxt in lazy.deferred:
            run(nxt, depth + 1)

    run(S, 0)
    return [comps[k] for k in sorted(comps)]
