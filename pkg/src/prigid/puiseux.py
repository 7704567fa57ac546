"""Tame Newton-Puiseux solver over F_q((t)), restricted to p-power ramification.

Solves f(X) = 0 for squarefree f with Laurent-series coefficients.  The
restriction that keeps everything exact and checkable: Newton polygon
slopes must have p-power denominators (with p != ell, so the ramification
is tame) and residual equations must split after constant extensions of
p-power degree.  Anything outside that raises OutOfScopeError instead of
approximating.

Every root lands in some F_{q^{p^r}}((t^{1/p^s})).  `as_nonnested_radicals`
rewrites a root as a polynomial in the two radicals w = u*^(1/p^r) and
z = t^(1/p^s) (u* the canonical p-power nonresidue), one radical layer
deep by construction, and `splitting_descriptor` locates the splitting
field inside the iterated Kummer tower over the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import (
    OutOfScopeError,
    PrecisionError,
    ResourceBoundError,
    UsageError,
    VerificationError,
)
from .fields.embed import embed_field
from .fields.fq import FqField, Value, canonical_nonresidue, field_make, vp
from .fields.laurent import LaurentElem, LaurentField
from .fields.linalg import solve_mod
from .fields.poly import factorize, find_roots, is_irreducible, pdeg, ptrim

DEFAULT_TAME_BOUND = 27
_WINDOW_SLACK = 8


# ---------------------------------------------------------------------------
# polynomials with Laurent-series coefficients (low degree first)


def _trim(cs: Sequence[LaurentElem]) -> List[LaurentElem]:
    out = list(cs)
    while out and out[-1].is_exact_zero:
        out.pop()
    return out


def _refield(c: LaurentElem, target: LaurentField) -> LaurentElem:
    if c.is_exact_zero:
        return target.zero()
    return target.make(c.val, list(c.coeffs), c.exact, c.horizon)


def _peval(cs: Sequence[LaurentElem], x: LaurentElem, field: LaurentField) -> LaurentElem:
    acc = field.zero()
    for c in reversed(list(cs)):
        acc = acc * x + c
    return acc


def _pderiv(cs: Sequence[LaurentElem], field: LaurentField) -> List[LaurentElem]:
    out = []
    for i in range(1, len(cs)):
        out.append(cs[i].scale(field.fq.constant(i % field.fq.ell)))
    return out


def _taylor_shift(cs: Sequence[LaurentElem], a: LaurentElem) -> List[LaurentElem]:
    # coefficients of f(X + a), synthetic division n times
    out = list(cs)
    n = len(out) - 1
    for k in range(n):
        for j in range(n - 1, k - 1, -1):
            out[j] = out[j] + a * out[j + 1]
    return out


def _gcd_degree(f: Sequence[LaurentElem], g: Sequence[LaurentElem],
                field: LaurentField) -> int:
    """Degree of gcd over the series field; pivots must be decidable."""
    a, b = _trim(f), _trim(g)
    while b:
        inv = b[-1].inverse()
        mb = [c * inv for c in b]
        r = list(a)
        while len(r) >= len(mb):
            lead = r[-1]
            if lead.is_exact_zero:
                r.pop()
                continue
            if lead.is_unknown:
                raise PrecisionError(
                    "squarefree test undecidable at the working precision")
            shift = len(r) - len(mb)
            for i, c in enumerate(mb):
                r[shift + i] = r[shift + i] - lead * c
            r.pop()
        a, b = mb, _trim(r)
    return len(a) - 1


# ---------------------------------------------------------------------------
# Newton polygon


def newton_polygon(coeffs: Sequence[LaurentElem]) -> List[Tuple[Fraction, int]]:
    """Lower-hull segments of f as (root valuation, segment length).

    The valuation is exact (a Fraction); the length counts how many roots,
    with multiplicity, have that valuation.  Exact-zero coefficients are
    skipped; a coefficient whose valuation is below the stored window
    raises PrecisionError.
    """
    cs = _trim(coeffs)
    if not cs:
        raise UsageError("the zero polynomial has no Newton polygon")
    pts = []
    for i, c in enumerate(cs):
        if c.is_exact_zero:
            continue
        pts.append((i, c.valuation()))
    if len(pts) < 2:
        return []
    hull = _lower_hull(pts)
    out = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        out.append((Fraction(v1 - v2, i2 - i1), i2 - i1))
    return out


def _lower_hull(pts: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    hull: List[Tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


# ---------------------------------------------------------------------------
# roots


@dataclass
class PuiseuxRoot:
    """One root of f in F_{q^{p^r}}((t^{1/e})), e = p^s.

    `series` lives over a Laurent field in the variable z with z^e = t, so
    the term at z-exponent m contributes coefficient * t^(m/e).  `exact`
    roots terminate; otherwise terms are complete for m/e < precision.
    """

    e: int
    r: int
    field: FqField
    series: LaurentElem
    precision: int
    exact: bool
    base: FqField
    _emb: Optional[Callable[[Value], Value]]

    @property
    def s(self) -> int:
        return _plog(self.e)

    def terms(self) -> List[Tuple[int, Value]]:
        if self.series.is_exact_zero:
            return []
        out = []
        for i, c in enumerate(self.series.coeffs):
            if not self.field.is_zero(c):
                out.append((self.series.val + i, c))
        return out

    def sort_key(self):
        return (self.e, self.field.deg,
                tuple((Fraction(m, self.e), self.field.code_of(c))
                      for m, c in self.terms()))

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "r": self.r,
            "field": self.field.descriptor,
            "uniformizer": "t" if self.e == 1 else f"t^(1/{self.e})",
            "terms": [[m, self.field.code_of(c)] for m, c in self.terms()],
            "literal": self.series.to_literal(),
            "precision": self.precision,
            "exact": self.exact,
        }


def _plog(e: int) -> int:
    # e is a p-power by construction; recover the exponent
    s = 0
    n = e
    while n > 1:
        for q in range(2, n + 1):
            if n % q == 0:
                n //= q
                s += 1
                break
    return s


@dataclass
class _State:
    e: int
    C: FqField
    L: LaurentField
    emb: Optional[Callable[[Value], Value]]  # base constants -> C
    r: int


def _state_window(precision: int, e: int) -> int:
    return precision * e + _WINDOW_SLACK


def _lift_base(coeffs: Sequence[LaurentElem], st: _State) -> List[LaurentElem]:
    out = []
    for c in coeffs:
        if c.is_exact_zero:
            out.append(st.L.zero())
            continue
        if st.emb is not None:
            c = c.map_coefficients(st.emb, st.L)
        else:
            c = _refield(c, st.L)
        out.append(c.inflate(st.e, st.L) if st.e > 1 else c)
    return out


def _check_denominator(b: int, p: int, ell: int, tame_bound: int) -> int:
    """b must be a p-power <= tame_bound, coprime to ell; returns log_p b."""
    if b == 1:
        return 0
    if ell % p == 0 or b % ell == 0:
        raise OutOfScopeError(
            f"ramification index {b} is wild over characteristic {ell}")
    s = 0
    n = b
    while n % p == 0:
        n //= p
        s += 1
    if n != 1:
        raise OutOfScopeError(
            f"slope denominator {b} is not a power of p={p}")
    if b > tame_bound:
        raise ResourceBoundError(
            f"slope denominator {b} exceeds the tame bound {tame_bound}")
    return s


def _residual_poly(G: Sequence[LaurentElem], i1: int, i2: int, v1: int,
                   mu: int, C: FqField) -> tuple:
    # leading coefficients along the polygon edge, as a polynomial over C
    out = []
    for i in range(i1, i2 + 1):
        c = G[i]
        want = v1 - (i - i1) * mu
        if c.is_exact_zero:
            out.append(C.zero)
        elif c.valuation() == want:
            out.append(c.leading())
        else:
            out.append(C.zero)
    return ptrim(out)


def _truncate(x: LaurentElem, upto: int, L: LaurentField) -> LaurentElem:
    if x.is_exact_zero:
        return L.zero()
    end = upto if x.exact else min(upto, x.horizon)
    if end <= x.val:
        return L.make(end, [], False, end)
    keep = [x.coefficient(n) for n in range(x.val, end)]
    return L.make(x.val, keep, False, end)


def _newton_refine(fc: Sequence[LaurentElem], x: LaurentElem,
                   target_w: int, st: _State) -> Tuple[LaurentElem, bool]:
    """Refine a separated simple root to residual valuation >= target_w."""
    fpc = _pderiv(fc, st.L)
    limit = 2 * max(target_w, 2).bit_length() + 12
    for _ in range(limit):
        fx = _peval(fc, x, st.L)
        if fx.is_exact_zero:
            return x, True
        fpx = _peval(fpc, x, st.L)
        dv = fpx.valuation()
        if fx.is_unknown:
            if fx.val >= target_w + dv:
                return x, False
            raise PrecisionError(
                "residual vanished below the working window before the "
                "requested precision was reached")
        if fx.valuation() >= target_w + dv:
            return x, False
        x = x - fx / fpx
    raise PrecisionError("root refinement stalled; raise the precision")


def puiseux_roots(coeffs: Sequence[LaurentElem], p: int, precision: int,
                  tame_bound: int = DEFAULT_TAME_BOUND) -> List[PuiseuxRoot]:
    """All roots of the squarefree polynomial f, as Puiseux series.

    `coeffs` is f low degree first over one Laurent field; roots are
    reported with every t-exponent below `precision` determined and are
    sorted by (ramification, constants degree, term encoding).  Root count
    equals the degree or the run aborts with VerificationError.
    """
    cs = _trim(coeffs)
    if not cs:
        raise UsageError("cannot solve the zero polynomial")
    if len(cs) == 1:
        raise UsageError("a nonzero constant has no roots")
    if precision < 1:
        raise UsageError("precision must be positive")
    L0 = cs[0].field
    base = L0.fq
    if base.ell == p:
        raise OutOfScopeError(
            f"p={p} equals the residue characteristic; ramification would be wild")
    deg = len(cs) - 1

    work = LaurentField(base, _state_window(precision, 1), "t")
    cs = [_refield(c, work) for c in cs]
    if _gcd_degree(cs, _pderiv(cs, work), work) != 0:
        raise UsageError("polynomial must be squarefree")

    st0 = _State(e=1, C=base, L=work, emb=None, r=0)
    roots: List[PuiseuxRoot] = []

    def emit(st: _State, series: LaurentElem, exact: bool, copies: int = 1) -> None:
        root = PuiseuxRoot(e=st.e, r=st.r, field=st.C, series=series,
                           precision=precision, exact=exact, base=base,
                           _emb=st.emb)
        for _ in range(copies):
            roots.append(root)

    def branch(G: List[LaurentElem], partial: LaurentElem, st: _State,
               floor: Optional[Fraction], expected: int) -> None:
        target_w = precision * st.e
        if floor is not None and floor >= target_w:
            emit(st, _truncate(partial, target_w, st.L), False, expected)
            return
        used = 0
        if G[0].is_exact_zero:
            emit(st, partial, True)
            used += 1
        pts = [(i, c.valuation()) for i, c in enumerate(G) if not c.is_exact_zero]
        hull = _lower_hull(pts)
        for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
            mu = Fraction(v1 - v2, i2 - i1)
            if floor is not None and mu <= floor:
                continue
            used += i2 - i1
            _descend(G, partial, st, mu, i1, i2, v1)
        if used != expected:
            raise VerificationError(
                f"branch accounting mismatch: {used} continuations for "
                f"{expected} roots")

    def _descend(G: List[LaurentElem], partial: LaurentElem, st: _State,
                 mu: Fraction, i1: int, i2: int, v1: int) -> None:
        b = mu.denominator
        s_extra = _check_denominator(b, p, base.ell, tame_bound)
        if st.e * b > tame_bound:
            raise ResourceBoundError(
                f"total ramification {st.e * b} exceeds the tame bound {tame_bound}")
        if b > 1:
            L2 = LaurentField(st.C, _state_window(precision, st.e * b), "z")
            st = _State(e=st.e * b, C=st.C, L=L2, emb=st.emb, r=st.r)
            G = [c.inflate(b, L2) for c in G]
            partial = partial.inflate(b, L2)
            mu = mu * b
            v1 = v1 * b
        mu_w = int(mu)
        R = _residual_poly(G, i1, i2, v1, mu_w, st.C)
        _unit, factors = _residual_factors(R, st.C)
        for fac, mult in factors:
            if pdeg(fac) == 1:
                y0 = st.C.neg(fac[0])
                _continue_root(G, partial, st, mu, mu_w, y0, mult)
            else:
                d = pdeg(fac)
                if _plog_or_none(d, p) is None:
                    raise OutOfScopeError(
                        f"residual equation needs a degree-{d} constant "
                        f"extension, which is not a power of p={p}")
                C2 = field_make(base.ell, st.C.deg * d)
                step = embed_field(st.C, C2)
                old = st.emb
                emb2 = (lambda v, _s=step, _o=old:
                        _s.apply(_o(v)) if _o is not None else _s.apply(v))
                L2 = LaurentField(C2, st.L.prec, st.L.var)
                st2 = _State(e=st.e, C=C2, L=L2, emb=emb2,
                             r=st.r + _plog_or_none(d, p))
                G2 = [c.map_coefficients(step.apply, L2) for c in G]
                partial2 = (L2.zero() if partial.is_exact_zero
                            else partial.map_coefficients(step.apply, L2))
                lifted = tuple(step.apply(c) for c in fac)
                for y0 in find_roots(C2, lifted):
                    _continue_root(G2, partial2, st2, mu, mu_w, y0, mult)

    def _continue_root(G: List[LaurentElem], partial: LaurentElem, st: _State,
                       mu: Fraction, mu_w: int, y0: Value, mult: int) -> None:
        term = st.L.monomial(mu_w, y0)
        new_partial = partial + term
        if mult == 1:
            fc = _lift_base(cs, st)
            series, exact = _newton_refine(fc, new_partial, precision * st.e, st)
            if not exact:
                series = _truncate(series, precision * st.e, st.L)
            emit(st, series, exact)
            return
        G2 = _taylor_shift(G, term)
        branch(G2, new_partial, st, mu, mult)

    branch(cs, work.zero(), st0, None, deg)
    if len(roots) != deg:
        raise VerificationError(
            f"found {len(roots)} roots for a degree-{deg} polynomial")
    roots.sort(key=PuiseuxRoot.sort_key)
    return roots


def _plog_or_none(n: int, p: int) -> Optional[int]:
    s = 0
    while n % p == 0:
        n //= p
        s += 1
    return s if n == 1 else None


def _residual_factors(R: tuple, C: FqField):
    if pdeg(R) < 1:
        raise VerificationError("polygon edge produced a constant residual")
    unit, factors = factorize(C, R, seed=0)
    # linear parts first, ordered by root encoding; then by factor degree
    def key(item):
        fac, _ = item
        if pdeg(fac) == 1:
            return (0, C.code_of(C.neg(fac[0])))
        return (1, pdeg(fac), tuple(C.code_of(c) for c in fac))
    return unit, sorted(factors, key=key)


# ---------------------------------------------------------------------------
# verification and radical form


def verify_root(coeffs: Sequence[LaurentElem], root: PuiseuxRoot) -> dict:
    """Substitute the root back into f exactly and report the residual.

    The residual t-adic valuation must reach the root's stated precision
    unless the substitution vanishes exactly.
    """
    cs = _trim(coeffs)
    if not cs:
        raise UsageError("cannot verify against the zero polynomial")
    window = _state_window(root.precision, root.e)
    L = LaurentField(root.field, window, root.series.field.var)
    st = _State(e=root.e, C=root.field, L=L, emb=root._emb, r=root.r)
    fc = _lift_base(cs, st)
    x = _refield(root.series, L)
    res = _peval(fc, x, L)
    if res.is_exact_zero:
        return {"exact_zero": True, "valuation": None, "ok": True}
    if res.is_unknown:
        v = Fraction(res.val, root.e)
        return {"exact_zero": False, "valuation": str(v),
                "ok": v >= root.precision}
    v = Fraction(res.valuation(), root.e)
    if v < root.precision:
        return {"exact_zero": False, "valuation": str(v), "ok": False,
                "first_mismatch_exponent": str(v)}
    return {"exact_zero": False, "valuation": str(v), "ok": True}


def _radical_basis(base: FqField, C: FqField, p: int, r: int,
                   emb: Optional[Callable[[Value], Value]]) -> Tuple[Value, list]:
    """Canonical w with w^(p^r) = u* in C, plus the change-of-basis solver.

    Returns (w, columns) where columns holds the F_ell-coordinates of
    w^i * base_j over all (i < p^r, j < base.deg); solving against those
    rewrites any element of C as a polynomial in w with base-field
    coefficients.
    """
    ustar = canonical_nonresidue(base, p)
    pr = p ** r
    # the degree check: X^(p^r) - u* must be irreducible over the base,
    # otherwise w would generate a proper subfield and the rewrite fails
    minpoly = tuple([base.neg(ustar)] + [base.zero] * (pr - 1) + [base.one])
    if not is_irreducible(base, minpoly):
        raise VerificationError(
            f"X^{pr} - u* is reducible over {base.descriptor}; the radical "
            "basis does not generate the constants")
    lift = emb if emb is not None else (lambda v: v)
    target = tuple(lift(c) for c in minpoly)
    ws = find_roots(C, target)
    if not ws:
        raise VerificationError("no radical generator found in the constants")
    w = ws[0]
    cols = []
    wi = C.one
    for _i in range(pr):
        for j in range(base.deg):
            bj = lift(base.elem_from_code(base.ell ** j))
            cols.append(_flatten(C, C.mul(wi, bj)))
        wi = C.mul(wi, w)
    return w, cols


def _flatten(C: FqField, v: Value) -> List[int]:
    if C.deg == 1:
        return [v % C.ell]
    out = list(v)
    return [int(c) for c in out] + [0] * (C.deg - len(out))


def _in_radical_basis(base: FqField, C: FqField, cols: list, v: Value,
                      p: int, r: int) -> List[Value]:
    """Coordinates of v as sum c_i w^i with c_i in the base field."""
    n = C.deg
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
    sol = solve_mod(rows, _flatten(C, v), C.ell)
    if sol is None:
        raise VerificationError("constant does not lie in the radical span")
    pr = p ** r
    out = []
    for i in range(pr):
        digits = sol[i * base.deg:(i + 1) * base.deg]
        code = 0
        for d in reversed(digits):
            code = code * base.ell + d
        out.append(base.elem_from_code(code))
    return out


def _coeff_string(base: FqField, parts: List[Value]) -> str:
    terms = []
    for i, c in enumerate(parts):
        if base.is_zero(c):
            continue
        code = base.code_of(c)
        if i == 0:
            terms.append(str(code))
        elif code == 1:
            terms.append("w" if i == 1 else f"w^{i}")
        else:
            terms.append(f"{code}*w" if i == 1 else f"{code}*w^{i}")
    if not terms:
        return "0"
    joined = " + ".join(terms)
    return joined if len(terms) == 1 else f"({joined})"


def as_nonnested_radicals(root: PuiseuxRoot, p: int) -> dict:
    """Rewrite the root over the radical generators u*^(1/p^r), t^(1/p^s).

    Both generators live one radical deep over the ground field, and the
    returned record re-checks that syntactically: every radicand is a
    ground-field literal.
    """
    base = root.base
    gens: List[list] = []
    var_legend = {}
    pr = p ** root.r
    if root.r > 0:
        ustar = canonical_nonresidue(base, p)
        gens.append([base.code_of(ustar), pr])
        var_legend["w"] = f"{base.code_of(ustar)}^(1/{pr})"
        w, cols = _radical_basis(base, root.field, p, root.r, root._emb)
    if root.e > 1:
        gens.append(["t", root.e])
        var_legend["z"] = f"t^(1/{root.e})"

    terms = []
    pieces = []
    for m, c in root.terms():
        if root.r > 0:
            parts = _in_radical_basis(base, root.field, cols, c, p, root.r)
            cstr = _coeff_string(base, parts)
            coeff_codes = [base.code_of(x) for x in parts]
        else:
            cstr = str(root.field.code_of(c))
            coeff_codes = [root.field.code_of(c)]
        terms.append({"exponent": [m, root.e], "coefficient": coeff_codes})
        pieces.append(_term_string(cstr, m, root.e))
    expr = " + ".join(pieces) if pieces else "0"

    # non-nestedness, checked on the finished record: each radicand is
    # either an integer code from the ground field or the uniformizer
    nonnested = all(
        (isinstance(g[0], int) and 0 <= g[0] < base.q) or g[0] == "t"
        for g in gens)
    if not nonnested:
        raise VerificationError("radical rewrite produced a nested generator")
    out = {
        "generators": gens,
        "variables": var_legend,
        "terms": terms,
        "expression": expr,
        "nonnested": True,
        "exact": root.exact,
    }
    if not root.exact:
        out["order_bound"] = f"O(t^{root.precision})"
    return out


def _term_string(cstr: str, m: int, e: int) -> str:
    if m == 0:
        return cstr
    zname = "t" if e == 1 else "z"
    power = zname if m == 1 else f"{zname}^{m}"
    if cstr == "1":
        return power
    return f"{cstr}*{power}"


def splitting_descriptor(coeffs: Sequence[LaurentElem], p: int,
                         precision: int = 8,
                         tame_bound: int = DEFAULT_TAME_BOUND) -> dict:
    """Locate the splitting field of f inside the Kummer tower.

    Returns the componentwise-largest (r, s) over the roots and checks the
    splitting field F_{q^{p^r}}((t^{1/p^s})) sits inside tower level
    max(r, s) + 1 by comparing constants degree and ramification.
    """
    from .rigidity.context import make_context
    from .rigidity.towers import kummer_tower

    roots = puiseux_roots(coeffs, p, precision, tame_bound)
    r = max(root.r for root in roots)
    s = max(_plog_or_none(root.e, p) or 0 for root in roots)
    base = _trim(coeffs)[0].field.fq
    level = max(r, s) + 1
    ctx = make_context(f"laurent({base.q})", p,
                       prec=_state_window(precision, p ** s))
    tower = kummer_tower(ctx, level)
    tower_const_deg = tower["constants_degree"]
    tower_ram = tower["ramification"]
    ok_const = tower_const_deg % (base.deg * p ** r) == 0
    ok_ram = tower_ram % (p ** s) == 0
    if not (ok_const and ok_ram):
        raise VerificationError(
            f"splitting field F_(q^(p^{r}))((t^(1/p^{s}))) does not embed in "
            f"tower level {level}")
    return {
        "r": r,
        "s": s,
        "splitting_constants": f"gf({base.ell ** (base.deg * p ** r)})",
        "splitting_ramification": p ** s,
        "tower_level": level,
        "tower_constants_degree": tower_const_deg,
        "tower_ramification": tower_ram,
        "contained": True,
        "roots": len(roots),
    }
