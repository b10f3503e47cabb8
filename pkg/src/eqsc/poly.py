"""Exact polynomials in Z[x1, ..., xm] and their fractions.

The variables stand for the negative simple roots.  Monomials are exponent
tuples; the monomial order is graded lexicographic with x1 > x2 > ... and is
used for leading terms, canonical signs and printing.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import NonIntegralInput, PolynomialDivisionError

Monomial = tuple  # tuple[int, ...]


def grlex_key(exps: Monomial):
    return (sum(exps), exps)


class Polynomial:
    """Sparse multivariate polynomial with integer coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | None = None):
        self.nvars = nvars
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # terms already free of zero coefficients
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: int) -> "Polynomial":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.const(nvars, 1)

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "Polynomial":
        """The monomial x_{i+1}^power (``i`` is 0-based)."""
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls._raw(n, terms)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if k is None:
            return len(degs) <= 1
        return degs <= {k}

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def has_nonnegative_coeffs(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def leading_term(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                del terms[e]
        return Polynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.nvars)
            if other == 1:
                return self
            return Polynomial._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(self.nvars, other)
        return RatFn(self, other)

    def divmod(self, divisor: "Polynomial"):
        """Multivariate division by a single divisor in graded-lex order.

        Returns ``(quotient, remainder)``; the remainder is zero exactly when
        the divisor divides ``self``.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lt_e, lt_c = divisor.leading_term()
        rem = dict(self.terms)
        quot: dict = {}
        left: dict = {}
        while rem:
            e = max(rem, key=grlex_key)
            c = rem[e]
            if all(a >= b for a, b in zip(e, lt_e)) and c % lt_c == 0:
                qe = tuple(a - b for a, b in zip(e, lt_e))
                qc = c // lt_c
                quot[qe] = quot.get(qe, 0) + qc
                for de, dc in divisor.terms.items():
                    me = tuple(a + b for a, b in zip(qe, de))
                    v = rem.get(me, 0) - qc * dc
                    if v:
                        rem[me] = v
                    else:
                        rem.pop(me, None)
            else:
                left[e] = c
                del rem[e]
        return Polynomial(self.nvars, quot), Polynomial._raw(self.nvars, left)

    def exact_div(self, divisor: "Polynomial | int") -> "Polynomial":
        if isinstance(divisor, int):
            if divisor == 0:
                raise ZeroDivisionError("polynomial division by zero")
            if any(c % divisor for c in self.terms.values()):
                raise PolynomialDivisionError(f"{self} is not divisible by {divisor}")
            return Polynomial._raw(self.nvars, {e: c // divisor for e, c in self.terms.items()})
        if divisor.is_constant() and divisor.terms:
            return self.exact_div(divisor.constant_term())
        q, r = self.divmod(divisor)
        if r:
            raise PolynomialDivisionError(f"({self}) is not divisible by ({divisor})")
        return q

    def substitute_zero(self) -> int:
        """Value at x = 0."""
        return self.constant_term()

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant_term() == other
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, RatFn):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- text / json ------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {format_poly(self)!r})"

    def to_json(self) -> list:
        return [{"coeff": c, "exps": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars: int, records: Iterable[dict]) -> "Polynomial":
        terms: dict = {}
        for rec in records:
            e = tuple(rec["exps"])
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} has wrong length")
            terms[e] = terms.get(e, 0) + int(rec["coeff"])
        return cls(nvars, terms)


def _monomial_str(e: Monomial) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"x{i + 1}")
        elif k > 1:
            parts.append(f"x{i + 1}^{k}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for e, c in p.sorted_terms():
        mono = _monomial_str(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_poly(text: str, nvars: int) -> Polynomial:
    """Parse the canonical text form, e.g. ``x1^2*x2 + 3*x1 - 2``."""
    s = text.strip()
    if s == "0":
        return Polynomial.zero(nvars)
    terms: dict = {}
    pos = 0
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        e = [0] * nvars
        for factor in m.group(2).split("*"):
            if not factor:
                raise ValueError(f"cannot parse polynomial {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            fm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            i = int(fm.group(1)) - 1
            if not 0 <= i < nvars:
                raise ValueError(f"variable x{i + 1} out of range")
            e[i] += int(fm.group(2) or 1)
        key = tuple(e)
        terms[key] = terms.get(key, 0) + sign * coeff
    if pos != len(s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return Polynomial(nvars, terms)


# -- gcd ------------------------------------------------------------------

def _coeffs_in(p: Polynomial, k: int) -> dict:
    """View ``p`` as a polynomial in x_k: power -> coefficient polynomial."""
    out: dict = {}
    for e, c in p.terms.items():
        d = e[k]
        rest = e[:k] + (0,) + e[k + 1:]
        out.setdefault(d, {})[rest] = c
    return {d: Polynomial._raw(p.nvars, t) for d, t in out.items()}


def _content_in(p: Polynomial, k: int) -> Polynomial:
    g = Polynomial.zero(p.nvars)
    for c in _coeffs_in(p, k).values():
        g = poly_gcd(g, c)
        if g == 1:
            break
    return g


def _prem(a: Polynomial, b: Polynomial, k: int) -> Polynomial:
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in x_k."""
    db = b.degree_in(k)
    lcb = _coeffs_in(b, k)[db]
    r = a
    while r and r.degree_in(k) >= db:
        dr = r.degree_in(k)
        lcr = _coeffs_in(r, k)[dr]
        r = lcb * r - lcr * Polynomial.var(r.nvars, k, dr - db) * b
    return r


def _normalize_sign(p: Polynomial) -> Polynomial:
    if p and p.leading_term()[1] < 0:
        return -p
    return p


def _gcd_prs(a: Polynomial, b: Polynomial) -> Polynomial:
    """Content / primitive-part gcd with a primitive pseudo-remainder
    sequence in the highest variable present.  Slow but unconditional."""
    a._check(b)
    if a.is_zero():
        return _normalize_sign(b)
    if b.is_zero():
        return _normalize_sign(a)
    if a.is_constant() or b.is_constant():
        return Polynomial.const(a.nvars, gcd(a.content(), b.content()))
    present = [i for i in range(a.nvars) if a.degree_in(i) > 0 or b.degree_in(i) > 0]
    k = present[-1]
    ca, cb = _content_in(a, k), _content_in(b, k)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    cont = poly_gcd(ca, cb)
    if pa.degree_in(k) < pb.degree_in(k):
        pa, pb = pb, pa
    while True:
        if pb.degree_in(k) <= 0:
            # pb is free of x_k and primitive in x_k, hence a unit
            g = Polynomial.one(a.nvars)
            break
        r = _prem(pa, pb, k)
        if r.is_zero():
            g = pb
            break
        pa, pb = pb, r.exact_div(_content_in(r, k))
    g = g.exact_div(_content_in(g, k)) if g.degree_in(k) > 0 else g
    return _normalize_sign(cont * g)


def _height(p: Polynomial) -> int:
    return max((abs(c) for c in p.terms.values()), default=0)


def _evaluate(p: Polynomial, k: int, value: int) -> Polynomial:
    terms: dict = {}
    for e, c in p.terms.items():
        rest = e[:k] + (0,) + e[k + 1:]
        terms[rest] = terms.get(rest, 0) + c * value ** e[k]
    return Polynomial(p.nvars, terms)


def _smod(c: int, m: int) -> int:
    r = c % m
    return r - m if r > m // 2 else r


def _interpolate(g: Polynomial, k: int, xi: int) -> Polynomial:
    """Recover a polynomial in x_k from its value at x_k = xi (symmetric xi-adic digits)."""
    terms: dict = {}
    power = 0
    cur = dict(g.terms)
    while cur:
        nxt = {}
        for e, c in cur.items():
            digit = _smod(c, xi)
            if digit:
                terms[e[:k] + (power,) + e[k + 1:]] = digit
            rest = (c - digit) // xi
            if rest:
                nxt[e] = rest
        cur = nxt
        power += 1
    return Polynomial(g.nvars, terms)


def _divides(d: Polynomial, p: Polynomial) -> bool:
    return not p.divmod(d)[1]


def _gcd_heuristic(a: Polynomial, b: Polynomial, attempts: int = 6):
    """Heuristic gcd of two integer-primitive polynomials (evaluate at a large
    integer, recurse, interpolate, verify by division).  None on failure."""
    present = [i for i in range(a.nvars) if a.degree_in(i) > 0 or b.degree_in(i) > 0]
    if not present:
        return Polynomial.one(a.nvars)
    k = present[-1]
    xi = 2 * min(_height(a), _height(b)) + 29
    for _ in range(attempts):
        ea, eb = _evaluate(a, k, xi), _evaluate(b, k, xi)
        if ea and eb:
            g = _interpolate(poly_gcd(ea, eb), k, xi)
            if g:
                g = g.exact_div(g.content())
                if _divides(g, a) and _divides(g, b):
                    return g
        xi = xi * 73794 // 27011
    return None


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor in Z[x], normalized to a positive leading coefficient."""
    a._check(b)
    if a.is_zero():
        return _normalize_sign(b)
    if b.is_zero():
        return _normalize_sign(a)
    ca, cb = a.content(), b.content()
    c = gcd(ca, cb)
    if a.is_constant() or b.is_constant():
        return Polynomial.const(a.nvars, c)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    g = _gcd_heuristic(pa, pb)
    if g is None:
        g = _gcd_prs(pa, pb)
    return _normalize_sign(g * c)


# -- fractions ------------------------------------------------------------

class RatFn:
    """Element of the fraction field, kept in canonical form.

    Canonical form: ``gcd(num, den) = 1`` and the graded-lex leading
    coefficient of ``den`` is positive.  The zero fraction is ``0/1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, *, _canonical=False):
        if den is None:
            den = Polynomial.one(num.nvars)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("fraction with zero denominator")
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls, nvars):
        return cls(Polynomial.zero(nvars), Polynomial.one(nvars), _canonical=True)

    @classmethod
    def one(cls, nvars):
        return cls(Polynomial.one(nvars), Polynomial.one(nvars), _canonical=True)

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == 1

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise PolynomialDivisionError(f"{self} is not a polynomial")
        return self.num

    def degree(self):
        """Homogeneous degree (num minus den); None for zero or inhomogeneous."""
        if self.is_zero() or not (self.num.is_homogeneous() and self.den.is_homogeneous()):
            return None
        return self.num.degree() - self.den.degree()

    def normalize(self) -> "RatFn":
        return RatFn(self.num, self.den)

    @staticmethod
    def _lift(x, nvars):
        if isinstance(x, RatFn):
            return x
        if isinstance(x, Polynomial):
            return RatFn(x, Polynomial.one(x.nvars), _canonical=True)
        if isinstance(x, int):
            return RatFn(Polynomial.const(nvars, x), Polynomial.one(nvars), _canonical=True)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatFn.zero(self.nvars)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero fraction")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other, self.nvars) / self

    def __eq__(self, other):
        other = self._lift(other, self.nvars)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _canonicalize(num: Polynomial, den: Polynomial):
    if num.is_zero():
        return num, Polynomial.one(num.nvars)
    if den.is_constant():
        c = den.constant_term()
        g = gcd(num.content(), c)
        if c < 0:
            g = -g
        return num.exact_div(g), Polynomial.const(num.nvars, c // g)
    g = poly_gcd(num, den)
    if g != 1:
        num, den = num.exact_div(g), den.exact_div(g)
    if den.leading_term()[1] < 0:
        num, den = -num, -den
    return num, den


def phi(coords: Sequence, involution: Sequence[int]) -> Polynomial:
    """Image of the root-lattice vector ``sum coords[i] * beta_i``.

    ``beta_i`` is sent to the negative simple root ``-w0(beta_i)`` which is
    the variable ``x_{involution[i]}``.
    """
    n = len(coords)
    out = [0] * n
    for i, c in enumerate(coords):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise NonIntegralInput(f"non-integral coordinate {c}")
            c = int(c)
        elif not isinstance(c, int):
            raise NonIntegralInput(f"non-integral coordinate {c!r}")
        out[involution[i]] += c
    return Polynomial.linear(out)
