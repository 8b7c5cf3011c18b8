"""Real root isolation and counting for zero-dimensional squarefree chains.

Univariate isolation is exact Descartes bisection over rationals: a
Cauchy bound caps the root region, and intervals are split until the
sign-variation count of the Moebius-transformed polynomial reaches 0 or
1.  Rational roots hit by a split point come back as degenerate [r, r]
boxes; all other boxes are open intervals whose endpoints are certified
non-roots with opposite signs.

Above the first level the coordinates are algebraic, so coefficients can
only be boxed, not evaluated.  Isolation there runs on certificates: an
interval with 0 outside the value enclosure has no root; an interval
where the derivative enclosure excludes 0 holds at most one root, and the
endpoint signs decide whether it is exactly one.  When neither applies
the interval is split at a point whose sign can be certified, stepping
through a ladder of nearby split points to dodge the (finitely many)
split candidates that happen to be roots.  Every sign query refines the
lower-level intervals on demand, up to a refinement cap; hitting the cap
raises SignUndecidable, which in practice means a caller broke the
squarefreeness or nonvanishing preconditions, since under those the true
value is nonzero and enclosures shrink to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .chains import RegularChain, TriangularSet
from .polyarith import Polynomial, ZeroInput, der, exact_div, gcd, mvar, normalize

Interval = tuple[Fraction, Fraction]

# Halvings allowed per sign query before giving up.  Generous: each step
# halves every interval, so enclosure widths fall by 2^64 before failure.
SIGN_CAP = 64
# Much smaller budget for ladder probes, which are allowed to fail (the
# probe point may be an actual root; the next probe sidesteps it).
_PROBE_CAP = 12


class SignUndecidable(RuntimeError):
    """Interval refinement hit the cap without determining a sign.

    Under the documented preconditions (squarefree chain, query
    polynomial nonvanishing at the point) this cannot happen; seeing it
    means a caller fed a degenerate input.
    """


class NotZeroDimensional(ValueError):
    """The chain leaves free variables, so its zero set is not finite."""


def _sgn(x: Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# interval arithmetic


def _iadd(a: Interval, b: Interval) -> Interval:
    return (a[0] + b[0], a[1] + b[1])


def _imul(a: Interval, b: Interval) -> Interval:
    c = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(c), max(c))


def _ipow(a: Interval, n: int) -> Interval:
    if n == 0:
        return (Fraction(1), Fraction(1))
    lo, hi = a[0] ** n, a[1] ** n
    if n % 2 == 0:
        top = max(lo, hi)
        if a[0] < 0 < a[1]:
            return (Fraction(0), top)
        return (min(lo, hi), top)
    return (lo, hi)


def _iscale(a: Interval, c: Fraction) -> Interval:
    if c >= 0:
        return (a[0] * c, a[1] * c)
    return (a[1] * c, a[0] * c)


def _ieval(p: Polynomial, env: Mapping[str, Interval]) -> Interval:
    """Enclosure of p over the box env, summed term by term.

    Termwise summation overestimates, but the callers compensate by
    refining; tightness only costs iterations, never correctness.
    """
    names = p.order.names
    total = (Fraction(0), Fraction(0))
    for exp, coeff in p.terms.items():
        term = (Fraction(1), Fraction(1))
        for i, e in enumerate(exp):
            if e:
                term = _imul(term, _ipow(env[names[i]], e))
        total = _iadd(total, _iscale(term, coeff))
    return total


def _excludes_zero(a: Interval) -> int:
    """Sign of the interval if it excludes 0, else 0."""
    if a[0] > 0:
        return 1
    if a[1] < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# boxes


@dataclass(frozen=True)
class IsolatingBox:
    """One real solution of a zero-dimensional chain, boxed per variable.

    ``names`` lists the chain's main variables ascending and ``intervals``
    the matching rational intervals; lo = hi marks an exact rational
    coordinate.  The attached chain makes the box self-refining.
    """

    chain: TriangularSet
    names: tuple[str, ...]
    intervals: tuple[Interval, ...]

    def interval(self, name: str) -> Interval:
        return self.intervals[self.names.index(name)]

    def env(self) -> dict[str, Interval]:
        return dict(zip(self.names, self.intervals))

    def midpoint(self) -> dict[str, Fraction]:
        return {n: (iv[0] + iv[1]) / 2 for n, iv in zip(self.names, self.intervals)}

    def max_width(self) -> Fraction:
        if not self.intervals:
            return Fraction(0)
        return max(iv[1] - iv[0] for iv in self.intervals)

    def refined(self, passes: int = 1) -> "IsolatingBox":
        """A copy with every non-exact interval halved `passes` times."""
        tower = _Tower.from_chain(self.chain, list(self.intervals))
        for _ in range(passes):
            tower.refine_all()
        return IsolatingBox(self.chain, self.names, tuple(tower.intervals))

    def __str__(self) -> str:
        parts = []
        for n, (lo, hi) in zip(self.names, self.intervals):
            if lo == hi:
                parts.append(f"{n} = {lo}")
            else:
                parts.append(f"{n} in ({lo}, {hi})")
        return "; ".join(parts) if parts else "(point)"


@dataclass(frozen=True)
class RootCount:
    count: int
    boxes: tuple[IsolatingBox, ...]

    def __post_init__(self) -> None:
        if self.count != len(self.boxes):
            raise AssertionError("count disagrees with box list")


# ---------------------------------------------------------------------------
# univariate isolation (exact coefficients)


def _dense_coeffs(p: Polynomial, v: str) -> list[Fraction]:
    out = [Fraction(0)] * (p.degree(v) + 1)
    for exp, c in p.terms.items():
        out[exp[p.order.index(v)]] = c
    return out


def _taylor_shift(cs: Sequence[Fraction], c: Fraction) -> list[Fraction]:
    """Coefficients of p(x + c), ascending, by synthetic division."""
    a = list(cs)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += c * a[j + 1]
    return a


def _scale_arg(cs: Sequence[Fraction], s: Fraction) -> list[Fraction]:
    """Coefficients of p(s * x), ascending."""
    out = []
    pw = Fraction(1)
    for c in cs:
        out.append(c * pw)
        pw *= s
    return out


def _variations(cs: Iterable[Fraction]) -> int:
    count = 0
    last = 0
    for c in cs:
        s = _sgn(c)
        if s and last and s != last:
            count += 1
        if s:
            last = s
    return count


def _roots_in_01(cs: Sequence[Fraction]) -> int:
    """Descartes bound on the roots of p in the open interval (0, 1)."""
    rev = list(reversed(cs))
    return _variations(_taylor_shift(rev, Fraction(1)))


def _eval_dense(cs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _isolate_segment(
    cs: Sequence[Fraction], lo: Fraction, hi: Fraction
) -> list[Interval]:
    """Isolate roots of the dense polynomial cs inside the open (lo, hi).

    Both endpoints must be non-roots; returned open intervals keep that
    property, so each carries a strict sign change.
    """
    seg = _scale_arg(_taylor_shift(cs, lo), hi - lo)
    v = _roots_in_01(seg)
    if v == 0:
        return []
    if v == 1:
        return [(lo, hi)]
    mid = (lo + hi) / 2
    out: list[Interval] = []
    if _eval_dense(cs, mid) == 0:
        out.append((mid, mid))
    out = _isolate_segment(cs, lo, mid) + out + _isolate_segment(cs, mid, hi)
    return out


def _trim_root_endpoints(cs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> Interval:
    """Shrink an isolating interval until neither endpoint is a root.

    The interval holds exactly one interior root; an endpoint can be a
    root only when it was emitted as a neighbouring degenerate box.
    """
    while True:
        s_lo = _sgn(_eval_dense(cs, lo))
        s_hi = _sgn(_eval_dense(cs, hi))
        if s_lo and s_hi:
            return (lo, hi)
        m = (lo + hi) / 2
        s_m = _sgn(_eval_dense(cs, m))
        if s_m == 0:
            return (m, m)
        if s_lo == 0:
            # the interior root sits left of m iff the sign flips on (m, hi)
            if s_hi and s_m != s_hi:
                lo = m
            else:
                hi = m
        else:
            if s_lo and s_m != s_lo:
                hi = m
            else:
                lo = m


def isolate_univariate(p: Polynomial) -> list[IsolatingBox]:
    """Disjoint rational isolating boxes, one per real root of p.

    p must be univariate, squarefree and nonzero.  Degenerate boxes mark
    exact rational roots.  Open boxes refine by bisection; an endpoint of
    an open box can itself be a root of p (the origin, when 0 is a root),
    but never an interior point.
    """
    if p.is_zero():
        raise ZeroInput("cannot isolate roots of the zero polynomial")
    if p.is_constant():
        return []
    vs = p.variables()
    if len(vs) != 1:
        raise ValueError(f"not univariate: variables {vs}")
    v = vs[0]
    cs = _dense_coeffs(p, v)

    roots: list[Interval] = []
    if cs[0] == 0:
        roots.append((Fraction(0), Fraction(0)))
        while cs[0] == 0:
            cs.pop(0)
    lead = abs(cs[-1])
    bound = Fraction(1) + max(abs(c) for c in cs) / lead
    for seg_lo, seg_hi in ((-bound, Fraction(0)), (Fraction(0), bound)):
        for lo, hi in _isolate_segment(cs, seg_lo, seg_hi):
            if lo != hi:
                lo, hi = _trim_root_endpoints(cs, lo, hi)
            roots.append((lo, hi))
    roots.sort()

    chain = RegularChain(p.order, (normalize(p),))
    return [IsolatingBox(chain, (v,), (iv,)) for iv in roots]


# ---------------------------------------------------------------------------
# towers: partial solutions with refinable algebraic coordinates


_LADDER = [
    Fraction(1, 2),
    Fraction(1, 4),
    Fraction(3, 4),
    Fraction(3, 8),
    Fraction(5, 8),
    Fraction(1, 8),
    Fraction(7, 8),
    Fraction(5, 16),
    Fraction(11, 16),
    Fraction(3, 16),
    Fraction(13, 16),
]


class _Tower:
    """Mutable stack of (variable, level polynomial, interval) triples.

    Knows how to certify the sign of a polynomial in its variables at the
    encoded point, refining its own intervals as needed.  Boxes snapshot
    the interval state; towers do the work.
    """

    def __init__(
        self,
        names: list[str],
        levels: list[Polynomial],
        intervals: list[Interval],
    ):
        self.names = names
        self.levels = levels
        self.intervals = intervals

    @classmethod
    def from_chain(cls, T: TriangularSet, intervals: list[Interval]) -> "_Tower":
        return cls([mvar(t) for t in T], list(T), intervals)

    def env(self, upto: int | None = None) -> dict[str, Interval]:
        k = len(self.names) if upto is None else upto
        return {self.names[i]: self.intervals[i] for i in range(k)}

    def point_sign(self, q: Polynomial, upto: int | None = None, cap: int = SIGN_CAP) -> int:
        """Exact sign of q at the tower point, or SignUndecidable.

        Returns 0 only when the value is provably exactly zero (the
        enclosure collapses to the point 0).
        """
        if q.is_zero():
            return 0
        if q.is_constant():
            return _sgn(q.constant_value())
        k = len(self.names) if upto is None else upto
        for _ in range(cap):
            enc = _ieval(q, self.env(k))
            if enc[0] == enc[1]:
                return _sgn(enc[0])
            s = _excludes_zero(enc)
            if s:
                return s
            self.refine_all(k)
        raise SignUndecidable(f"sign of {q} not determined after {cap} refinements")

    def refine_all(self, upto: int | None = None) -> None:
        k = len(self.names) if upto is None else upto
        for j in range(k):
            self.refine_level(j)

    def refine_level(self, j: int) -> None:
        lo, hi = self.intervals[j]
        if lo == hi:
            return
        t = self.levels[j]
        v = self.names[j]
        if not t.variables() or t.variables() == (v,):
            # exact univariate level
            m = (lo + hi) / 2
            s_m = _sgn(t.eval_all({v: m}))
            if s_m == 0:
                self.intervals[j] = (m, m)
                return
            # An endpoint can be a root of t itself (the origin after root
            # stripping); bisect against whichever endpoint has a sign.
            s_lo = _sgn(t.eval_all({v: lo}))
            if s_lo != 0:
                self.intervals[j] = (lo, m) if s_m != s_lo else (m, hi)
                return
            s_hi = _sgn(t.eval_all({v: hi}))
            if s_hi == 0:
                raise AssertionError(f"both endpoints of ({lo}, {hi}) are roots")
            self.intervals[j] = (m, hi) if s_m != s_hi else (lo, m)
            return
        s_lo = self.point_sign(t.substitute({v: lo}), j)
        if s_lo == 0:
            raise AssertionError(f"level {j} endpoint {lo} is a root")
        for frac in _LADDER:
            m = lo + (hi - lo) * frac
            try:
                s_m = self.point_sign(t.substitute({v: m}), j, cap=_PROBE_CAP)
            except SignUndecidable:
                continue
            if s_m == 0:
                continue
            self.intervals[j] = (lo, m) if s_m != s_lo else (m, hi)
            return
        raise SignUndecidable(f"no certifiable split point in ({lo}, {hi})")

    def copy(self) -> "_Tower":
        return _Tower(list(self.names), list(self.levels), list(self.intervals))


def _level_root_intervals(tower: _Tower, t: Polynomial, v: str) -> list[Interval]:
    """Isolate the real roots of t(point, v) over the tower's point.

    Certificate bisection: value enclosure excluding 0 means no root,
    derivative enclosure excluding 0 plus an endpoint sign change means
    exactly one.  Split points come from the probe ladder so endpoints
    are always certified non-roots.
    """
    j = len(tower.names)
    coeffs = t.coeffs_in(v)
    n = max(coeffs)
    # Certify the leading coefficient away from 0 (also refines the tower
    # until its enclosure is usable for the root bound).
    if tower.point_sign(coeffs[n], j) == 0:
        raise SignUndecidable("leading coefficient vanishes at the point")
    env = tower.env(j)
    lead = _ieval(coeffs[n], env)
    while _excludes_zero(lead) == 0:
        tower.refine_all(j)
        env = tower.env(j)
        lead = _ieval(coeffs[n], env)
    inf_lead = min(abs(lead[0]), abs(lead[1]))
    sup = Fraction(0)
    for d in range(n + 1):
        if d in coeffs:
            enc = _ieval(coeffs[d], env)
            sup = max(sup, abs(enc[0]), abs(enc[1]))
    bound = Fraction(1) + sup / inf_lead

    dt = der(t) if mvar(t) == v else t.derivative(v)
    sign_cache: dict[Fraction, int] = {}

    def endpoint_sign(x: Fraction) -> int:
        if x not in sign_cache:
            sign_cache[x] = tower.point_sign(t.substitute({v: x}), j)
        return sign_cache[x]

    out: list[Interval] = []

    def rec(lo: Fraction, hi: Fraction, depth: int) -> None:
        box = tower.env(j)
        box[v] = (lo, hi)
        if _excludes_zero(_ieval(t, box)):
            return
        if _excludes_zero(_ieval(dt, box)):
            s_lo, s_hi = endpoint_sign(lo), endpoint_sign(hi)
            if s_lo == 0 or s_hi == 0:
                raise SignUndecidable("root at a certified split point")
            if s_lo != s_hi:
                out.append((lo, hi))
            return
        if depth >= SIGN_CAP:
            raise SignUndecidable(
                f"no isolation certificate for {t} on ({lo}, {hi}); "
                "is the specialized level squarefree?"
            )
        tower.refine_all(j)
        for frac in _LADDER:
            m = lo + (hi - lo) * frac
            try:
                s_m = tower.point_sign(t.substitute({v: m}), j, cap=_PROBE_CAP)
            except SignUndecidable:
                continue
            if s_m == 0:
                continue
            sign_cache[m] = s_m
            rec(lo, m, depth + 1)
            rec(m, hi, depth + 1)
            return
        raise SignUndecidable(f"no certifiable split point in ({lo}, {hi})")

    rec(-bound, bound, 0)
    out.sort()
    return out


def _defensive_squarefree(t: Polynomial) -> Polynomial:
    """Strip any repeated factor of a chain level before isolation.

    Callers guarantee squarefreeness via border polynomials; this cheap
    gcd guard turns a silent miscount into either a fixed-up level or an
    honest SignUndecidable further down.
    """
    g = gcd(t, der(t))
    if g.is_constant():
        return t
    return normalize(exact_div(t, g))


def isolate_chain(T: TriangularSet) -> tuple[IsolatingBox, ...]:
    """Isolating boxes for all real solutions of a zero-dimensional chain."""
    if not T.is_zero_dimensional():
        raise NotZeroDimensional(
            f"free variables {T.free_variables()} remain; isolate needs a "
            "zero-dimensional chain"
        )
    levels = [_defensive_squarefree(t) for t in T]
    if not levels:
        return (IsolatingBox(T, (), ()),)
    if tuple(levels) != tuple(T.polys):
        T = RegularChain(T.order, tuple(levels))

    first = levels[0]
    partials: list[list[Interval]] = [
        list(b.intervals) for b in isolate_univariate(first)
    ]
    names = [mvar(t) for t in levels]
    for j in range(1, len(levels)):
        t, v = levels[j], names[j]
        grown: list[list[Interval]] = []
        for iv in partials:
            tower = _Tower(names[:j], levels[:j], list(iv))
            for root_iv in _level_root_intervals(tower, t, v):
                grown.append(list(tower.intervals) + [root_iv])
        partials = grown

    boxes = tuple(
        IsolatingBox(T, tuple(names), tuple(iv)) for iv in partials
    )
    return boxes


def sign_at(p: Polynomial, box: IsolatingBox) -> int:
    """Exact nonzero sign of p at the solution in box.

    Precondition: p does not vanish there (callers arrange this through
    border polynomials).  A p that does vanish either collapses to an
    exact zero enclosure, reported as SignUndecidable with a pointed
    message, or runs out the refinement cap.
    """
    if p.is_zero():
        raise SignUndecidable("polynomial is identically zero at the point")
    if p.is_constant():
        s = _sgn(p.constant_value())
        if s == 0:
            raise SignUndecidable("polynomial is identically zero at the point")
        return s
    missing = [n for n in p.variables() if n not in box.names]
    if missing:
        raise ValueError(f"box does not cover variables {missing}")
    tower = _Tower.from_chain(box.chain, list(box.intervals))
    s = tower.point_sign(p)
    if s == 0:
        raise SignUndecidable(f"{p} vanishes exactly at the boxed point")
    return s


def real_root_counting(T: TriangularSet, P: tuple[Polynomial, ...]) -> RootCount:
    """Count (and box) the real solutions of T = 0 with every p in P > 0.

    T must be zero-dimensional and squarefree; each p must be nonzero at
    every real solution.  The empty chain has the single empty solution,
    so with constant positive P the count is one.
    """
    boxes = isolate_chain(T)
    kept = []
    for b in boxes:
        ok = True
        for p in P:
            if sign_at(p, b) < 0:
                ok = False
                break
        if ok:
            kept.append(b)
    return RootCount(count=len(kept), boxes=tuple(kept))
