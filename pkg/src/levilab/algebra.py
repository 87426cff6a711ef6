"""Exact algebra of real-analytic expressions in z_1..z_n, conj(z_1)..conj(z_n).

An expression is a finite sum of terms

    coeff * z^alpha * conj(z)^beta * prod_b  b(z)^(p2/2) * conj(b(z))^(q2/2)

with GaussianRational coefficients, nonnegative integer exponent vectors
alpha/beta, and half-integer powers (stored doubled, as p2/q2) of registered
holomorphic base polynomials b.  This closure is enough to hold defining
functions containing |z_1-1| and map families with factors like
(1-a*z_1)^(-1/2), and it is closed under Wirtinger differentiation.

Normal form:
  * like terms are combined, zero terms dropped, terms sorted;
  * radical exponents add under multiplication and stay attached to the base
    (integer powers of a base are NOT multiplied out, which keeps add/mul
    exactly associative term-by-term; expand_integer_powers does the
    multiplying-out when polynomial form is wanted);
  * constant bases fold into the coefficient whenever the resulting power of
    the constant is rational.

Numeric evaluation of a factor b^(p2/2)*conj(b)^(q2/2) at a point where
b(z) = v uses

    |v|^((p2+q2)/2) * u^((p2-q2)/2),     u = v/|v|,

so paired powers (p2 == q2) are plain modulus powers, integer differences
need no branch, and genuinely fractional unit powers use the branch with
argument in (0, 2*pi) (cut along the nonnegative real axis).
"""

from __future__ import annotations

import json
from collections import deque
from fractions import Fraction
from math import atan2, pi
from typing import Iterable, Mapping

from .rationals import GR, GaussianRational

__all__ = [
    "AlgebraError",
    "DimensionError",
    "PairingError",
    "BranchCutError",
    "ExactEvalError",
    "BaseFactor",
    "Term",
    "HermitianExpr",
    "ExactValue",
    "variable",
    "conj_variable",
    "constant",
    "modulus_sq",
    "expr_to_dict",
    "expr_from_dict",
    "expr_to_json",
    "expr_from_json",
]

_TWO_PI = 2.0 * pi


class AlgebraError(ValueError):
    pass


class DimensionError(AlgebraError):
    pass


class PairingError(AlgebraError):
    """A radical exponent cannot be resolved to the supported closure."""


class BranchCutError(AlgebraError):
    """A fractional power was evaluated on its branch cut."""


class ExactEvalError(AlgebraError):
    """The expression cannot be evaluated in the exact sqrt-extension."""


# ---------------------------------------------------------------------------
# base factors
# ---------------------------------------------------------------------------

PolyItems = tuple[tuple[tuple[int, ...], GaussianRational], ...]


def _normalize_poly(n: int, items) -> PolyItems:
    acc: dict[tuple[int, ...], GaussianRational] = {}
    for expo, c in items:
        expo = tuple(int(e) for e in expo)
        if len(expo) != n:
            raise DimensionError(f"exponent vector {expo} is not length {n}")
        if any(e < 0 for e in expo):
            raise AlgebraError("negative exponent in base polynomial")
        c = c if isinstance(c, GaussianRational) else GR(c)
        prev = acc.get(expo)
        acc[expo] = c if prev is None else prev + c
    out = tuple(sorted(((e, c) for e, c in acc.items() if c), key=lambda t: t[0]))
    return out


class BaseFactor:
    """A registered holomorphic polynomial that may carry half-integer powers."""

    __slots__ = ("id", "n", "poly")

    def __init__(self, id: str, n: int, poly):
        self.id = str(id)
        self.n = int(n)
        self.poly = _normalize_poly(n, poly.items() if isinstance(poly, dict) else poly)
        if not self.poly:
            raise AlgebraError(f"base factor {id!r} is identically zero")

    def constant_value(self) -> GaussianRational | None:
        """The value if the polynomial is constant, else None."""
        if len(self.poly) == 1 and not any(self.poly[0][0]):
            return self.poly[0][1]
        return None

    def wirtinger_poly(self, j: int) -> PolyItems:
        """d(poly)/dz_j as polynomial items."""
        items = []
        for expo, c in self.poly:
            if expo[j]:
                e = list(expo)
                k = e[j]
                e[j] -= 1
                items.append((tuple(e), c * k))
        return _normalize_poly(self.n, items)

    def compose_linear(self, rows: tuple[tuple[GaussianRational, ...], ...]) -> PolyItems:
        """poly(M z) where z_j is replaced by sum_k rows[j][k] z_k."""
        out: dict[tuple[int, ...], GaussianRational] = {}
        for expo, c in self.poly:
            parts = [((0,) * self.n, c)]
            for j, e in enumerate(expo):
                for _ in range(e):
                    nxt: dict[tuple[int, ...], GaussianRational] = {}
                    for pe, pc in parts:
                        for k, m in enumerate(rows[j]):
                            if m.is_zero():
                                continue
                            ne = list(pe)
                            ne[k] += 1
                            ne = tuple(ne)
                            prev = nxt.get(ne)
                            nxt[ne] = pc * m if prev is None else prev + pc * m
                    parts = list(nxt.items())
            for pe, pc in parts:
                prev = out.get(pe)
                out[pe] = pc if prev is None else prev + pc
        return _normalize_poly(self.n, out.items())

    def eval(self, point) -> complex:
        v = 0j
        for expo, c in self.poly:
            m = c.to_complex()
            for j, e in enumerate(expo):
                if e:
                    m *= point[j] ** e
            v += m
        return v

    def eval_exact(self, point: tuple[GaussianRational, ...]) -> GaussianRational:
        v = GR(0)
        for expo, c in self.poly:
            m = c
            for j, e in enumerate(expo):
                if e:
                    m = m * point[j] ** e
            v = v + m
        return v

    def __eq__(self, other):
        if not isinstance(other, BaseFactor):
            return NotImplemented
        return self.id == other.id and self.n == other.n and self.poly == other.poly

    def __hash__(self):
        return hash((self.id, self.n, self.poly))

    def __repr__(self):
        return f"BaseFactor({self.id!r}, n={self.n})"


def _merge_bases(*registries: Mapping[str, BaseFactor]) -> dict[str, BaseFactor]:
    out: dict[str, BaseFactor] = {}
    for reg in registries:
        for bid, bf in reg.items():
            cur = out.get(bid)
            if cur is None:
                out[bid] = bf
            elif cur != bf:
                raise AlgebraError(f"base id {bid!r} bound to two different polynomials")
    return out


# ---------------------------------------------------------------------------
# terms
# ---------------------------------------------------------------------------

Radicals = tuple[tuple[str, int, int], ...]


class Term:
    __slots__ = ("coeff", "alpha", "beta", "radicals")

    def __init__(self, coeff: GaussianRational, alpha, beta, radicals: Radicals = ()):
        self.coeff = coeff
        self.alpha = tuple(int(a) for a in alpha)
        self.beta = tuple(int(b) for b in beta)
        self.radicals = tuple(sorted((str(i), int(p), int(q)) for i, p, q in radicals))

    def key(self):
        return (self.alpha, self.beta, self.radicals)

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return self.coeff == other.coeff and self.key() == other.key()

    def __hash__(self):
        return hash((self.coeff, self.key()))

    def __repr__(self):
        return f"Term({self.coeff}, {self.alpha}, {self.beta}, {self.radicals})"


def _poly_pow(poly: PolyItems, n: int, k: int) -> PolyItems:
    out: PolyItems = (((0,) * n, GR(1)),)
    for _ in range(k):
        acc: dict[tuple[int, ...], GaussianRational] = {}
        for e1, c1 in out:
            for e2, c2 in poly:
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                prev = acc.get(e)
                acc[e] = c if prev is None else prev + c
        out = _normalize_poly(n, acc.items())
    return out


def _conj_poly(poly: PolyItems) -> PolyItems:
    return tuple((e, c.conjugate()) for e, c in poly)


# ---------------------------------------------------------------------------
# expressions
# ---------------------------------------------------------------------------


class HermitianExpr:
    """Normalized sum of terms over a shared registry of base factors."""

    __slots__ = ("n", "terms", "bases")

    def __init__(self, n: int, terms: Iterable[Term], bases: Mapping[str, BaseFactor] = ()):
        bases = dict(bases) if not isinstance(bases, Mapping) else dict(bases)
        norm_terms, used = _normalize_terms(int(n), terms, bases)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "terms", norm_terms)
        object.__setattr__(self, "bases", used)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianExpr is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "HermitianExpr":
        return HermitianExpr(n, ())

    @staticmethod
    def from_raw(n, terms, bases) -> "HermitianExpr":
        return HermitianExpr(n, terms, bases)

    # -- structural helpers --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(not t.radicals for t in self.terms)

    def is_holomorphic(self) -> bool:
        return all(
            not any(t.beta) and all(q2 == 0 for _, _, q2 in t.radicals) for t in self.terms
        )

    def constant_term(self) -> GaussianRational:
        z = (0,) * self.n
        for t in self.terms:
            if t.alpha == z and t.beta == z and not t.radicals:
                return t.coeff
        return GR(0)

    def monomial_items(self):
        """(alpha, beta, coeff) for the radical-free terms."""
        return [(t.alpha, t.beta, t.coeff) for t in self.terms if not t.radicals]

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other) -> "HermitianExpr | None":
        if isinstance(other, HermitianExpr):
            if other.n != self.n:
                raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return constant(other, self.n)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HermitianExpr(self.n, self.terms + o.terms, _merge_bases(self.bases, o.bases))

    __radd__ = __add__

    def __neg__(self):
        return HermitianExpr(
            self.n,
            (Term(-t.coeff, t.alpha, t.beta, t.radicals) for t in self.terms),
            self.bases,
        )

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prods = []
        for t1 in self.terms:
            for t2 in o.terms:
                rad: dict[str, list[int]] = {}
                for bid, p2, q2 in t1.radicals:
                    rad[bid] = [p2, q2]
                for bid, p2, q2 in t2.radicals:
                    cur = rad.setdefault(bid, [0, 0])
                    cur[0] += p2
                    cur[1] += q2
                prods.append(
                    Term(
                        t1.coeff * t2.coeff,
                        tuple(a + b for a, b in zip(t1.alpha, t2.alpha)),
                        tuple(a + b for a, b in zip(t1.beta, t2.beta)),
                        tuple((bid, pq[0], pq[1]) for bid, pq in rad.items()),
                    )
                )
        return HermitianExpr(self.n, prods, _merge_bases(self.bases, o.bases))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = constant(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_radical(self, base: BaseFactor, p2: int, q2: int) -> "HermitianExpr":
        """Multiply by base^(p2/2)*conj(base)^(q2/2), attaching to exponents."""
        if base.n != self.n:
            raise DimensionError("base factor dimension mismatch")
        new_terms = []
        for t in self.terms:
            rad = {bid: [p, q] for bid, p, q in t.radicals}
            cur = rad.setdefault(base.id, [0, 0])
            cur[0] += p2
            cur[1] += q2
            new_terms.append(
                Term(t.coeff, t.alpha, t.beta, tuple((b, pq[0], pq[1]) for b, pq in rad.items()))
            )
        return HermitianExpr(self.n, new_terms, _merge_bases(self.bases, {base.id: base}))

    def conjugate(self) -> "HermitianExpr":
        return HermitianExpr(
            self.n,
            (
                Term(
                    t.coeff.conjugate(),
                    t.beta,
                    t.alpha,
                    tuple((bid, q2, p2) for bid, p2, q2 in t.radicals),
                )
                for t in self.terms
            ),
            self.bases,
        )

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- calculus ------------------------------------------------------------

    def wirtinger(self, j: int, kind: str = "holo") -> "HermitianExpr":
        """Formal d/dz_j ("holo") or d/dconj(z_j) ("anti")."""
        if not 0 <= j < self.n:
            raise DimensionError(f"variable index {j} out of range for n={self.n}")
        if kind not in ("holo", "anti"):
            raise AlgebraError(f"kind must be 'holo' or 'anti', got {kind!r}")
        holo = kind == "holo"
        out = []
        for t in self.terms:
            expo = t.alpha if holo else t.beta
            if expo[j]:
                e = list(expo)
                e[j] -= 1
                e = tuple(e)
                out.append(
                    Term(
                        t.coeff * expo[j],
                        e if holo else t.alpha,
                        t.beta if holo else e,
                        t.radicals,
                    )
                )
            for idx, (bid, p2, q2) in enumerate(t.radicals):
                exp2 = p2 if holo else q2
                if not exp2:
                    continue
                base = self.bases[bid]
                dpoly = base.wirtinger_poly(j)
                if not dpoly:
                    continue
                rad = list(t.radicals)
                rad[idx] = (bid, p2 - 2, q2) if holo else (bid, p2, q2 - 2)
                half = GR(Fraction(exp2, 2))
                for de, dc in dpoly:
                    dc = dc if holo else dc.conjugate()
                    if holo:
                        na = tuple(a + d for a, d in zip(t.alpha, de))
                        nb = t.beta
                    else:
                        na = t.alpha
                        nb = tuple(b + d for b, d in zip(t.beta, de))
                    out.append(Term(t.coeff * half * dc, na, nb, tuple(rad)))
        return HermitianExpr(self.n, out, self.bases)

    # -- substitution ---------------------------------------------------------

    def substitute_linear(self, matrix) -> "HermitianExpr":
        """Compose with the linear map z_j -> sum_k M[j][k] z_k (exact entries)."""
        rows = tuple(
            tuple(m if isinstance(m, GaussianRational) else GR(m) for m in row)
            for row in matrix
        )
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise DimensionError("substitution matrix must be n x n")
        subs = [
            HermitianExpr(
                self.n,
                (Term(m, tuple(1 if t == k else 0 for t in range(self.n)), (0,) * self.n) for k, m in enumerate(row) if m),
            )
            for row in rows
        ]
        new_bases: dict[str, BaseFactor] = {}
        for bid, bf in self.bases.items():
            comp = bf.compose_linear(rows)
            if comp == bf.poly:
                new_bases[bid] = bf
            else:
                new_bases[bid] = BaseFactor(f"{bid}|L{abs(hash(rows)) % 99991}", self.n, comp)
        out = HermitianExpr.zero(self.n)
        for t in self.terms:
            piece = constant(t.coeff, self.n)
            for j, a in enumerate(t.alpha):
                if a:
                    piece = piece * subs[j] ** a
            for j, b in enumerate(t.beta):
                if b:
                    piece = piece * subs[j].conjugate() ** b
            for bid, p2, q2 in t.radicals:
                piece = piece.mul_radical(new_bases[bid], p2, q2)
            out = out + piece
        return out

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, point, strict: bool = True) -> complex:
        """Numeric value at a complex point.

        strict=True raises BranchCutError when a genuinely fractional unit
        power lands on the nonnegative real axis (constant positive bases are
        exempt: their fractional powers are real powers of positive reals).
        """
        if len(point) != self.n:
            raise DimensionError("point has wrong length")
        pt = [complex(p) for p in point]
        base_cache: dict[str, complex] = {}
        total = 0j
        for t in self.terms:
            v = t.coeff.to_complex()
            for j, a in enumerate(t.alpha):
                if a:
                    v *= pt[j] ** a
            for j, b in enumerate(t.beta):
                if b:
                    v *= pt[j].conjugate() ** b
            if v == 0:
                continue
            for bid, p2, q2 in t.radicals:
                bv = base_cache.get(bid)
                if bv is None:
                    bv = self.bases[bid].eval(pt)
                    base_cache[bid] = bv
                v *= _radical_value(self.bases[bid], bv, p2, q2, strict)
            total += v
        return total

    def evaluate_exact(self, point) -> "ExactValue":
        """Exact value at a GaussianRational point, in the sqrt-extension.

        The result maps a sorted tuple of base ids S to a GaussianRational
        coefficient c, meaning  sum_S c * sqrt(prod_{b in S} |b(z)|^2).
        Requires p2 == q2 (mod 2) for every radical.
        """
        pt = tuple(p if isinstance(p, GaussianRational) else GR(p) for p in point)
        if len(pt) != self.n:
            raise DimensionError("point has wrong length")
        base_cache: dict[str, GaussianRational] = {}
        acc: dict[tuple[str, ...], GaussianRational] = {}
        for t in self.terms:
            v = t.coeff
            for j, a in enumerate(t.alpha):
                if a:
                    v = v * pt[j] ** a
            for j, b in enumerate(t.beta):
                if b:
                    v = v * pt[j].conjugate() ** b
            odd: list[str] = []
            if not v.is_zero():
                for bid, p2, q2 in t.radicals:
                    if (p2 - q2) % 2:
                        raise ExactEvalError(
                            f"{bid}^({p2}/2)*conj^({q2}/2) is not exactly evaluable"
                        )
                    bv = base_cache.get(bid)
                    if bv is None:
                        bv = self.bases[bid].eval_exact(pt)
                        base_cache[bid] = bv
                    if bv.is_zero():
                        if p2 + q2 < 0 or p2 - q2 < 0:
                            raise ExactEvalError(f"base {bid} vanishes at the point")
                        v = GR(0)
                        break
                    e = (p2 - q2) // 2
                    v = v * bv**e * GR(bv.abs2()) ** (q2 // 2)
                    if q2 % 2:
                        odd.append(bid)
            if v.is_zero():
                continue
            key = tuple(sorted(odd))
            prev = acc.get(key)
            tot = v if prev is None else prev + v
            if tot.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = tot
        return ExactValue(acc, {bid: base_cache.get(bid) for bid in self.bases})

    def expand_integer_powers(self) -> "HermitianExpr":
        """Multiply nonnegative even radical exponents out into the monomials.

        Normal forms keep b^1 as a radical exponent (so products stay exactly
        associative term-by-term); this converts such factors to polynomial
        form, which is what denominator clearing and polynomial comparison
        need."""
        work = deque(self.terms)
        out = []
        while work:
            t = work.popleft()
            target = None
            for i, (bid, p2, q2) in enumerate(t.radicals):
                if (p2 > 0 and p2 % 2 == 0) or (q2 > 0 and q2 % 2 == 0):
                    target = (i, bid, p2, q2)
                    break
            if target is None:
                out.append(t)
                continue
            i, bid, p2, q2 = target
            base = self.bases[bid]
            rad = list(t.radicals)
            if p2 > 0 and p2 % 2 == 0:
                poly = _poly_pow(base.poly, self.n, p2 // 2)
                rad[i] = (bid, 0, q2)
                holo = True
            else:
                poly = _poly_pow(_conj_poly(base.poly), self.n, q2 // 2)
                rad[i] = (bid, p2, 0)
                holo = False
            for pe, pc in poly:
                if holo:
                    na = tuple(a + e for a, e in zip(t.alpha, pe))
                    nb = t.beta
                else:
                    na = t.alpha
                    nb = tuple(b + e for b, e in zip(t.beta, pe))
                work.append(Term(t.coeff * pc, na, nb, tuple(rad)))
        return HermitianExpr(self.n, out, self.bases)

    # -- denominators -----------------------------------------------------------

    def clear_denominators(self):
        """Return (P, D, mult) with self * D = P, P radical-free.

        D is the product over bases of (b*conj(b))^mult[b].  Requires every
        radical exponent to be an integer (p2 and q2 even).
        """
        mult: dict[str, int] = {}
        for t in self.terms:
            for bid, p2, q2 in t.radicals:
                if p2 % 2 or q2 % 2:
                    raise PairingError(
                        f"fractional exponent on base {bid!r}; pairing violated"
                    )
                need = max(0, -(p2 // 2), -(q2 // 2))
                mult[bid] = max(mult.get(bid, 0), need)
        num_terms = []
        for t in self.terms:
            rad = {bid: [p2, q2] for bid, p2, q2 in t.radicals}
            for bid, m in mult.items():
                if m:
                    cur = rad.setdefault(bid, [0, 0])
                    cur[0] += 2 * m
                    cur[1] += 2 * m
            num_terms.append(
                Term(t.coeff, t.alpha, t.beta, tuple((b, pq[0], pq[1]) for b, pq in rad.items()))
            )
        numerator = HermitianExpr(self.n, num_terms, self.bases).expand_integer_powers()
        if not numerator.is_polynomial():
            raise PairingError("fractional exponent remaining after clearing")
        den = constant(1, self.n)
        for bid, m in mult.items():
            if m:
                den = den.mul_radical(self.bases[bid], 2 * m, 2 * m)
        den = den.expand_integer_powers()
        return numerator, den, mult

    def zero_identity_residuals(self) -> list["HermitianExpr"]:
        """Nonzero polynomial residuals of the exact zero test.

        Terms are grouped by the parity signature of their radical exponents;
        each group is a rational multiple of one square-root factor.  If every
        group clears to the zero polynomial the expression is identically
        zero, unconditionally.  The converse (nonzero residual => nonzero
        expression) additionally uses that distinct square-root classes are
        linearly independent over rational functions, which holds when no two
        registered bases are proportional; a dependent choice of bases could
        only make this test conservatively report a residual, never certify a
        false zero.  Returns the nonzero cleared numerators.
        """
        if self.is_zero():
            return []
        groups: dict[tuple, list[Term]] = {}
        for t in self.terms:
            sig = tuple(
                (bid, p2 % 2, q2 % 2)
                for bid, p2, q2 in t.radicals
                if p2 % 2 or q2 % 2
            )
            groups.setdefault(sig, []).append(t)
        residuals = []
        for sig, terms in sorted(groups.items()):
            shifted = []
            for t in terms:
                rad = []
                for bid, p2, q2 in t.radicals:
                    rad.append((bid, p2 - (p2 % 2), q2 - (q2 % 2)))
                shifted.append(Term(t.coeff, t.alpha, t.beta, tuple(rad)))
            g = HermitianExpr(self.n, shifted, self.bases)
            num, _, _ = g.clear_denominators()
            if not num.is_zero():
                residuals.append(num)
        return residuals

    def is_zero_identity(self) -> bool:
        """Exact zero test, valid also for half-integer radical exponents."""
        return not self.zero_identity_residuals()

    # -- comparison / display ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HermitianExpr):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.terms, tuple(sorted(self.bases.items()))))

    def __repr__(self):
        if not self.terms:
            return "<expr 0>"
        return f"<expr n={self.n} {' + '.join(_term_str(t) for t in self.terms)}>"


def _term_str(t: Term) -> str:
    bits = [str(t.coeff)]
    for j, a in enumerate(t.alpha):
        if a:
            bits.append(f"z{j + 1}" + (f"^{a}" if a > 1 else ""))
    for j, b in enumerate(t.beta):
        if b:
            bits.append(f"~z{j + 1}" + (f"^{b}" if b > 1 else ""))
    for bid, p2, q2 in t.radicals:
        if p2:
            bits.append(f"{bid}^{Fraction(p2, 2)}")
        if q2:
            bits.append(f"~{bid}^{Fraction(q2, 2)}")
    return "*".join(bits)


# ---------------------------------------------------------------------------
# normalization
# ---------------------------------------------------------------------------


def _normalize_terms(n, terms, bases):
    acc: dict[tuple, GaussianRational] = {}
    for t in terms:
        if t.coeff.is_zero():
            continue
        if len(t.alpha) != n or len(t.beta) != n:
            raise DimensionError("term exponent vectors have wrong length")
        coeff = t.coeff
        rad: list[tuple[str, int, int]] = []
        for bid, p2, q2 in t.radicals:
            if p2 == 0 and q2 == 0:
                continue
            base = bases.get(bid)
            if base is None:
                raise AlgebraError(f"unregistered base factor {bid!r}")
            k = base.constant_value()
            if k is not None:
                coeff, extra = _fold_constant(coeff, k, p2, q2)
                if extra is not None:
                    rad.append((bid, extra[0], extra[1]))
                continue
            rad.append((bid, p2, q2))
        if coeff.is_zero():
            continue
        key = (t.alpha, t.beta, tuple(sorted(rad)))
        prev = acc.get(key)
        tot = coeff if prev is None else prev + coeff
        if tot.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = tot
    out = tuple(
        Term(c, k[0], k[1], k[2]) for k, c in sorted(acc.items(), key=lambda kv: kv[0])
    )
    used_ids = {bid for t in out for bid, _, _ in t.radicals}
    used = {bid: bases[bid] for bid in sorted(used_ids)}
    return out, used


def _fold_constant(coeff, k, p2, q2):
    """Fold a constant-base radical k^(p2/2)*conj(k)^(q2/2) into the coefficient.

    Returns (new_coeff, leftover) where leftover is None or a (p2, q2) pair
    that must stay as a radical (canonicalized to the holomorphic side for
    positive real constants).
    """
    if k == GR(1):
        return coeff, None
    if p2 % 2 == 0 and q2 % 2 == 0:
        return coeff * k ** (p2 // 2) * k.conjugate() ** (q2 // 2), None
    if k.is_positive_real():
        tot = p2 + q2
        if tot % 2 == 0:
            return coeff * k ** (tot // 2), None
        return coeff, (tot, 0)
    return coeff, (p2, q2)


def _radical_value(base: BaseFactor, v: complex, p2: int, q2: int, strict: bool) -> complex:
    s = (p2 + q2) / 2.0
    d2 = p2 - q2
    r = abs(v)
    if r == 0.0:
        if p2 + q2 < 0 or d2 < 0:
            raise AlgebraError(f"base {base.id!r} vanishes with a negative exponent")
        return 0.0 if (p2 or q2) else 1.0
    theta = atan2(v.imag, v.real)
    if theta < 0.0:
        theta += _TWO_PI
    if d2 % 2:
        if theta == 0.0:
            if base.constant_value() is not None and v.imag == 0.0 and v.real > 0.0:
                theta = 0.0
            elif strict:
                raise BranchCutError(
                    f"fractional power of base {base.id!r} on the branch cut"
                )
    mag = r**s
    if d2 == 0:
        return complex(mag)
    from cmath import exp as cexp

    return mag * cexp(1j * theta * (d2 / 2.0))


# ---------------------------------------------------------------------------
# exact values in the sqrt-extension
# ---------------------------------------------------------------------------


class ExactValue:
    """Exact value sum_S c_S * sqrt(prod_{b in S} |b|^2) over base-id sets S."""

    __slots__ = ("parts", "base_values")

    def __init__(self, parts: dict[tuple[str, ...], GaussianRational], base_values=None):
        self.parts = dict(parts)
        self.base_values = dict(base_values or {})

    def is_zero(self) -> bool:
        return not self.parts

    def rational(self) -> GaussianRational:
        """The value when no square-root part is present."""
        extra = [k for k in self.parts if k]
        if extra:
            raise ExactEvalError(f"value has irrational parts over {extra}")
        return self.parts.get((), GR(0))

    def conjugate(self) -> "ExactValue":
        return ExactValue(
            {k: c.conjugate() for k, c in self.parts.items()}, self.base_values
        )

    def to_complex(self) -> complex:
        from math import sqrt

        total = 0j
        for key, c in self.parts.items():
            scale = 1.0
            for bid in key:
                scale *= sqrt(float(self.base_values[bid].abs2()))
            total += c.to_complex() * scale
        return total

    def __eq__(self, other):
        if not isinstance(other, ExactValue):
            return NotImplemented
        return self.parts == other.parts

    def __repr__(self):
        return f"ExactValue({self.parts})"


# ---------------------------------------------------------------------------
# convenience constructors
# ---------------------------------------------------------------------------


def variable(j: int, n: int) -> HermitianExpr:
    """The coordinate function z_{j+1} (0-based index j)."""
    return HermitianExpr(n, (Term(GR(1), tuple(1 if t == j else 0 for t in range(n)), (0,) * n),))


def conj_variable(j: int, n: int) -> HermitianExpr:
    return HermitianExpr(n, (Term(GR(1), (0,) * n, tuple(1 if t == j else 0 for t in range(n))),))


def constant(c, n: int) -> HermitianExpr:
    c = c if isinstance(c, GaussianRational) else GR(c)
    return HermitianExpr(n, (Term(c, (0,) * n, (0,) * n),))


def modulus_sq(j: int, n: int) -> HermitianExpr:
    """|z_{j+1}|^2."""
    e = tuple(1 if t == j else 0 for t in range(n))
    return HermitianExpr(n, (Term(GR(1), e, e),))


# ---------------------------------------------------------------------------
# serialization (bit-exact JSON round trip)
# ---------------------------------------------------------------------------


def _gr_to_obj(c: GaussianRational):
    return {
        "re": [c.re.numerator, c.re.denominator],
        "im": [c.im.numerator, c.im.denominator],
    }


def _gr_from_obj(o) -> GaussianRational:
    return GR(Fraction(o["re"][0], o["re"][1]), Fraction(o["im"][0], o["im"][1]))


def expr_to_dict(e: HermitianExpr) -> dict:
    return {
        "n": e.n,
        "bases": [
            {
                "id": bid,
                "poly": [
                    {"coeff": _gr_to_obj(c), "alpha": list(expo)} for expo, c in bf.poly
                ],
            }
            for bid, bf in sorted(e.bases.items())
        ],
        "terms": [
            {
                "coeff": _gr_to_obj(t.coeff),
                "alpha": list(t.alpha),
                "beta": list(t.beta),
                "radicals": [
                    {"base": bid, "p2": p2, "q2": q2} for bid, p2, q2 in t.radicals
                ],
            }
            for t in e.terms
        ],
    }


def expr_from_dict(d: dict) -> HermitianExpr:
    n = int(d["n"])
    bases = {
        b["id"]: BaseFactor(
            b["id"],
            n,
            [(tuple(item["alpha"]), _gr_from_obj(item["coeff"])) for item in b["poly"]],
        )
        for b in d.get("bases", ())
    }
    terms = [
        Term(
            _gr_from_obj(t["coeff"]),
            tuple(t["alpha"]),
            tuple(t["beta"]),
            tuple((r["base"], r["p2"], r["q2"]) for r in t.get("radicals", ())),
        )
        for t in d.get("terms", ())
    ]
    return HermitianExpr(n, terms, bases)


def expr_to_json(e: HermitianExpr) -> str:
    return json.dumps(expr_to_dict(e), sort_keys=True, separators=(",", ":"))


def expr_from_json(s: str) -> HermitianExpr:
    return expr_from_dict(json.loads(s))
