"""
Exact coefficient arithmetic.

Three kinds of scalars are used throughout the package:

- ``RatFunc``: rational functions in the generators ``v``, ``s``, ``l``,
  where ``v`` is a fixed fractional power of ``q`` (the grid is chosen by
  the caller, see ``daha.rootsys.Params``), ``s = t_sht^{1/2}`` and
  ``l = t_lng^{1/2}``.  Numerator and denominator are FLINT multivariate
  integer polynomials, with monomial factors pulled out into an exponent
  vector so that Laurent monomials are represented exactly.
- ``Cyclo``: elements of the cyclotomic field Q(zeta_M).
- ``QSeries``: Laurent polynomials in (v, s, l) truncated in ``v``.
"""

from fractions import Fraction
from math import lcm

import flint
import mpmath

CTX = flint.fmpz_mpoly_ctx.get(("v", "s", "l"), "lex")
_ZERO_E = (0, 0, 0)


class PoleError(ZeroDivisionError):
    """Raised when a specialization hits a vanishing denominator."""


def _poly(d):
    return CTX.from_dict(d)


_P_ZERO = _poly({})
_P_ONE = _poly({_ZERO_E: 1})


def _terms(p):
    return [(tuple(int(x) for x in m), int(c)) for m, c in p.terms()]


def _monoms(p):
    return [tuple(int(x) for x in m) for m in p.monoms()]


def _mono(e):
    return CTX.from_dict({e: 1})


def _add(e1, e2):
    return (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])


def _sub(e1, e2):
    return (e1[0] - e2[0], e1[1] - e2[1], e1[2] - e2[2])


def _strip(p):
    """Split a nonzero polynomial into (monomial exponent, cofactor)."""
    e = tuple(min(x) for x in zip(*_monoms(p)))
    if e == _ZERO_E:
        return e, p
    return e, p / _mono(e)


def _reverse(p):
    """Return (d, p_rev) with p(1/v, 1/s, 1/l) = v^-d * p_rev."""
    d = tuple(int(x) for x in p.degrees())
    return d, CTX.from_dict({_sub(d, m): c for m, c in _terms(p)})


class RatFunc:
    """
    A rational function ``v^a s^b l^c * num / den`` in canonical form.

    ``num`` and ``den`` are coprime, free of monomial factors, and ``den``
    has a positive leading coefficient.  Equality is structural.

    EXAMPLES::

        >>> q = RatFunc.mono(1)
        >>> (1 - q * q) / (1 - q)
        v + 1
    """

    __slots__ = ("num", "den", "exp")

    def __init__(self, num=_P_ZERO, den=_P_ONE, exp=_ZERO_E, canonical=False):
        if canonical:
            self.num, self.den, self.exp = num, den, exp
            return
        if num.is_zero():
            self.num, self.den, self.exp = _P_ZERO, _P_ONE, _ZERO_E
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        en, num = _strip(num)
        ed, den = _strip(den)
        exp = _add(exp, _sub(en, ed))
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num, self.den, self.exp = num, den, exp

    # constructors

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        if c == 0:
            return ZERO
        return cls(_poly({_ZERO_E: c.numerator}), _poly({_ZERO_E: c.denominator}))

    @classmethod
    def mono(cls, a=0, b=0, c=0, coeff=1):
        """The Laurent monomial coeff * v^a s^b l^c."""
        if coeff == 0:
            return ZERO
        coeff = Fraction(coeff)
        return cls(_poly({_ZERO_E: coeff.numerator}),
                   _poly({_ZERO_E: coeff.denominator}), (a, b, c))

    @classmethod
    def from_dict(cls, d):
        """Laurent polynomial from {(a, b, c): integer}."""
        d = {e: c for e, c in d.items() if c}
        if not d:
            return ZERO
        e0 = tuple(min(x) for x in zip(*d))
        return cls(_poly({_sub(e, e0): c for e, c in d.items()}), _P_ONE, e0)

    # predicates

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.exp == _ZERO_E and self.num.is_one() and self.den.is_one()

    def is_laurent(self):
        return self.den.is_one()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.const(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (self.exp == other.exp and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.exp, str(self.num), str(self.den)))

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        return RatFunc.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        e = tuple(min(x, y) for x, y in zip(self.exp, other.exp))
        n1 = self.num if self.exp == e else self.num * _mono(_sub(self.exp, e))
        n2 = other.num if other.exp == e else other.num * _mono(_sub(other.exp, e))
        if self.den == other.den:
            return RatFunc(n1 + n2, self.den, e)
        g = self.den.gcd(other.den)
        da, db = self.den / g, other.den / g
        return RatFunc(n1 * db + n2 * da, da * other.den, e)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.exp, canonical=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, int) and other == 1:
                return self
            other = RatFunc.const(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        exp = _add(self.exp, other.exp)
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, _P_ONE, exp, canonical=True)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num / g1) * (other.num / g2)
        den = (self.den / g2) * (other.den / g1)
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(num, den, exp, canonical=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(num, den, _sub(_ZERO_E, self.exp), canonical=True)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        return RatFunc(self.num ** n, self.den ** n,
                       tuple(n * x for x in self.exp), canonical=True)

    def conj(self):
        """The involution v -> 1/v, s -> 1/s, l -> 1/l."""
        if self.is_zero():
            return self
        dn, num = _reverse(self.num)
        dd, den = _reverse(self.den)
        exp = _add(_sub(_ZERO_E, self.exp), _sub(dd, dn))
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(num, den, exp, canonical=True)

    # substitutions

    def monomial_subs(self, images):
        """
        Apply the monomial substitution sending generator j to the Laurent
        monomial with exponent vector images[j].
        """
        def image(p):
            out = {}
            for m, c in _terms(p):
                e = tuple(sum(m[j] * images[j][i] for j in range(3)) for i in range(3))
                out[e] = out.get(e, 0) + c
            return RatFunc.from_dict(out)
        e = self.exp
        shift = RatFunc.mono(*(sum(e[j] * images[j][i] for j in range(3)) for i in range(3)))
        return shift * image(self.num) / image(self.den)

    def variables_used(self):
        used = [False, False, False]
        for p in (self.num, self.den):
            for m in _monoms(p):
                for i in range(3):
                    if m[i]:
                        used[i] = True
        for i in range(3):
            if self.exp[i]:
                used[i] = True
        return tuple(used)

    def to_cyclo(self, M, a=1):
        """
        Specialize ``v -> zeta_M^a``.  The element must not involve ``s`` or
        ``l``.  Raises PoleError when the denominator vanishes.
        """
        used = self.variables_used()
        if used[1] or used[2]:
            raise ValueError("t-parameters must be specialized before evaluation")
        num = _eval_cyclo(self.num, M, a)
        den = _eval_cyclo(self.den, M, a)
        if den.is_zero():
            raise PoleError("denominator %s vanishes at v = zeta_%d^%d" % (self.den, M, a))
        return num / den * Cyclo.zeta(M, a * self.exp[0])

    def evalf(self, v, s=1, l=1):
        """Numerical value (mpmath) at the given generator values."""
        def ev(p):
            return mpmath.fsum(c * v ** m[0] * s ** m[1] * l ** m[2] for m, c in _terms(p))
        return ev(self.num) / ev(self.den) * v ** self.exp[0] * s ** self.exp[1] * l ** self.exp[2]

    # display

    def __repr__(self):
        def part(p, e):
            pref = []
            for name, x in zip("vsl", e):
                if x:
                    pref.append(name if x == 1 else "%s^%d" % (name, x))
            body = str(p)
            if not pref:
                return body
            mono = "*".join(pref)
            if body == "1":
                return mono
            return "%s*(%s)" % (mono, body)
        if self.den.is_one():
            return _laurent_str(self.num, self.exp)
        en = tuple(max(x, 0) for x in self.exp)
        ed = tuple(max(-x, 0) for x in self.exp)
        top = part(self.num, en)
        if self.den.is_one() and ed == _ZERO_E:
            return top
        return "(%s) / (%s)" % (top, part(self.den, ed))

    def to_string(self):
        """Canonical string ``num / den`` used in JSON output."""
        return repr(self)


def _laurent_str(p, e):
    if p.is_zero():
        return "0"
    parts = []
    for m, c in sorted(_terms(p), reverse=True):
        m = _add(m, e)
        vars_ = "*".join(n if x == 1 else "%s^%d" % (n, x)
                         for n, x in zip("vsl", m) if x)
        if not vars_:
            parts.append(str(c))
        elif c == 1:
            parts.append(vars_)
        elif c == -1:
            parts.append("-" + vars_)
        else:
            parts.append("%d*%s" % (c, vars_))
    return " + ".join(parts).replace("+ -", "- ")


ZERO = RatFunc()
ONE = RatFunc(_P_ONE, _P_ONE, _ZERO_E, canonical=True)


# ---------------------------------------------------------------------------
# cyclotomic numbers

_PHI = {}


def _phi(M):
    if M not in _PHI:
        _PHI[M] = flint.fmpq_poly(flint.fmpz_poly.cyclotomic(M).coeffs())
    return _PHI[M]


def _eval_cyclo(p, M, a):
    coeffs = [0] * M
    for m, c in _terms(p):
        coeffs[(a * m[0]) % M] += int(c)
    return Cyclo(M, flint.fmpq_poly(coeffs))


class Cyclo:
    """
    An element of Q(zeta_M), stored as a polynomial in zeta_M reduced modulo
    the M-th cyclotomic polynomial.

    EXAMPLES::

        >>> z = Cyclo.zeta(4)
        >>> z * z == Cyclo.const(4, -1)
        True
    """

    __slots__ = ("M", "p")

    def __init__(self, M, p):
        self.M = M
        phi = _phi(M)
        if p.degree() >= phi.degree():
            p = p % phi
        self.p = p

    @classmethod
    def const(cls, M, c):
        c = Fraction(c)
        return cls(M, flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator)]))

    @classmethod
    def zeta(cls, M, a=1):
        a %= M
        return cls(M, flint.fmpq_poly([0] * a + [1]))

    def lift(self, L):
        """Embed into Q(zeta_L) for a multiple L of M."""
        if L == self.M:
            return self
        if L % self.M:
            raise ValueError("%d does not divide %d" % (self.M, L))
        r = L // self.M
        coeffs = self.p.coeffs()
        out = [0] * (r * (len(coeffs) - 1) + 1) if coeffs else [0]
        for i, c in enumerate(coeffs):
            out[r * i] = c
        return Cyclo(L, flint.fmpq_poly(out))

    def _pair(self, other):
        if not isinstance(other, Cyclo):
            return self, Cyclo.const(self.M, other)
        if other.M == self.M:
            return self, other
        L = lcm(self.M, other.M)
        return self.lift(L), other.lift(L)

    def __add__(self, other):
        a, b = self._pair(other)
        return Cyclo(a.M, a.p + b.p)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.M, -self.p)

    def __sub__(self, other):
        a, b = self._pair(other)
        return Cyclo(a.M, a.p - b.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        return Cyclo(a.M, a.p * b.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise PoleError("inverse of zero in Q(zeta_%d)" % self.M)
        g, s, _ = self.p.xgcd(_phi(self.M))
        return Cyclo(self.M, s / g)

    def __truediv__(self, other):
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return Cyclo.const(self.M, other) * self.inverse() if not isinstance(other, Cyclo) \
            else other / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclo.const(self.M, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self):
        return self.p.is_zero()

    def __eq__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        a, b = self._pair(other)
        return a.p == b.p

    def __hash__(self):
        return hash((self.M, str(self.p)))

    def conj(self):
        """Complex conjugation zeta -> zeta^-1."""
        coeffs = self.p.coeffs()
        out = [0] * self.M
        for i, c in enumerate(coeffs):
            out[(-i) % self.M] += c
        return Cyclo(self.M, flint.fmpq_poly(out))

    def is_rational(self):
        return self.p.degree() <= 0

    def complex(self, dps=50):
        with mpmath.workdps(dps):
            z = mpmath.expjpi(mpmath.mpf(2) / self.M)
            return mpmath.fsum(mpmath.mpf(c.p) / c.q * z ** i for i, c in enumerate(self.p.coeffs()))

    def sign_certified(self, prec=256):
        """
        Sign of a real element, certified with interval arithmetic.

        Returns +1 or -1; raises ValueError if the element is not real or
        if the enclosure does not exclude zero.
        """
        if self != self.conj():
            raise ValueError("element is not real")
        iv = mpmath.iv
        old = iv.prec
        iv.prec = prec
        try:
            ang = 2 * iv.pi / self.M
            total = iv.mpf(0)
            for i, c in enumerate(self.p.coeffs()):
                if c:
                    total += iv.mpf(int(c.p)) / int(c.q) * iv.cos(ang * i)
            lo, hi = total.a, total.b
            if hi - lo > mpmath.mpf(10) ** -30:
                raise ValueError("enclosure too wide")
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            raise ValueError("cannot separate value from zero")
        finally:
            iv.prec = old

    def __repr__(self):
        return "Cyclo(%d, %s)" % (self.M, self.p.str(var="z"))

    def to_string(self):
        terms = []
        for i, c in enumerate(self.p.coeffs()):
            if c:
                terms.append("%s*z%d^%d" % (c, self.M, i))
        return " + ".join(terms) if terms else "0"


def sqrt_integer(N, M):
    """
    The positive square root of the integer N >= 1 inside Q(zeta_M).

    Odd primes p use the quadratic Gauss sum sum_x zeta_p^(x^2), whose square
    is +-p; the factor i is attached when needed and the sign is fixed by a
    certified numerical check.  The prime 2 uses zeta_8 + zeta_8^-1.
    """
    from sympy import factorint

    root = Cyclo.const(M, 1)
    i_unit = None
    for p, a in factorint(N).items():
        root = root * (p ** (a // 2))
        if a % 2 == 0:
            continue
        if p == 2:
            if M % 8:
                raise ValueError("sqrt(2) needs 8 | M")
            r = Cyclo.zeta(M, M // 8) + Cyclo.zeta(M, -M // 8)
        else:
            if M % p:
                raise ValueError("sqrt(%d) needs %d | M" % (p, p))
            g = Cyclo.const(M, 0)
            for x in range(p):
                g = g + Cyclo.zeta(M, (M // p) * x * x)
            sq = g * g
            if sq == Cyclo.const(M, p):
                r = g
            else:
                if M % 4:
                    raise ValueError("sqrt(%d) needs 4 | M" % p)
                if i_unit is None:
                    i_unit = Cyclo.zeta(M, M // 4)
                r = -i_unit * g
        if r * r != Cyclo.const(M, p):
            raise ArithmeticError("square root construction failed for %d" % p)
        if r.sign_certified() < 0:
            r = -r
        root = root * r
    return root


# ---------------------------------------------------------------------------
# truncated series


class QSeries:
    """
    A truncated series ``v^a s^b l^c * poly + O(v^prec)`` where ``poly`` is a
    polynomial in (v, s, l).  The attribute ``grid`` records the meaning of
    ``v`` as ``q^(1/grid)``; ``prec`` is an absolute exponent of ``v``.

    EXAMPLES::

        >>> q = RatFunc.mono(1)
        >>> QSeries.expand(1 / (1 - q), 4)
        1 + q + q^2 + q^3 + O(q^4)
    """

    __slots__ = ("poly", "exp", "prec", "grid")

    def __init__(self, poly, exp, prec, grid=1):
        self.grid = grid
        self.prec = prec
        cut = prec - exp[0]
        if cut <= 0 or poly.is_zero():
            poly, exp = _P_ZERO, (prec, 0, 0)
        else:
            if int(poly.degrees()[0]) >= cut:
                poly = poly % _mono((cut, 0, 0))
            if poly.is_zero():
                exp = (prec, 0, 0)
            else:
                e, poly = _strip(poly)
                exp = _add(exp, e)
        self.poly = poly
        self.exp = exp

    @classmethod
    def zero(cls, prec, grid=1):
        return cls(_P_ZERO, (prec, 0, 0), prec, grid)

    @classmethod
    def from_laurent(cls, x, prec, grid=1):
        if not x.is_laurent():
            return cls.expand(x, prec, grid)
        return cls(x.num, x.exp, prec, grid)

    @classmethod
    def expand(cls, x, prec, grid=1):
        """
        Expand a RatFunc as a series in v up to (but excluding) v^prec.
        The denominator must reduce to a unit at v = 0.
        """
        if x.is_zero() or x.exp[0] >= prec:
            return cls.zero(prec, grid)
        num = cls(x.num, x.exp, prec, grid)
        if x.den.is_one():
            return num
        den = cls(x.den, _ZERO_E, prec - x.exp[0] + 1, grid)
        return num * den.inverse_series(prec - x.exp[0] + 1)

    def valuation(self):
        return self.exp[0] if not self.poly.is_zero() else self.prec

    def inverse_series(self, prec):
        """Multiplicative inverse for a series of v-valuation 0 with unit leading part."""
        if self.poly.is_zero():
            raise ZeroDivisionError("inverse of zero series")
        lead = self.poly.subs({"v": 0})
        terms = _terms(lead)
        if len(terms) != 1 or abs(terms[0][1]) != 1:
            raise ZeroDivisionError("leading part %s is not a unit" % lead)
        (m, c), = terms
        e = _add(self.exp, m)
        y = QSeries(_poly({_ZERO_E: int(c)}), (-e[0], -e[1], -e[2]), 1 - e[0], self.grid)
        cur = 1
        target = prec - self.exp[0]
        while cur < target:
            cur = min(2 * cur, target)
            yy = QSeries(y.poly, y.exp, cur - self.exp[0], self.grid)
            two = QSeries(_poly({_ZERO_E: 2}), _ZERO_E, cur, self.grid)
            y = yy * (two - self.truncate(cur + self.exp[0]) * yy)
            y = y.truncate(cur - self.exp[0])
        return y.truncate(prec - 2 * self.exp[0])

    def truncate(self, prec):
        return QSeries(self.poly, self.exp, min(prec, self.prec), self.grid)

    def _align(self, other):
        if not isinstance(other, QSeries):
            if isinstance(other, RatFunc):
                other = QSeries.expand(other, self.prec, self.grid)
            else:
                other = QSeries.from_laurent(RatFunc.const(other), self.prec, self.grid)
        if other.grid != self.grid:
            raise ValueError("series on different grids")
        return other

    def __add__(self, other):
        other = self._align(other)
        prec = min(self.prec, other.prec)
        if self.poly.is_zero():
            return other.truncate(prec)
        if other.poly.is_zero():
            return self.truncate(prec)
        e = tuple(min(x, y) for x, y in zip(self.exp, other.exp))
        p = self.poly * _mono(_sub(self.exp, e)) + other.poly * _mono(_sub(other.exp, e))
        return QSeries(p, e, prec, self.grid)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(-self.poly, self.exp, self.prec, self.grid)

    def __sub__(self, other):
        return self + (-self._align(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._align(other)
        prec = min(self.prec + other.valuation(), other.prec + self.valuation())
        if self.poly.is_zero() or other.poly.is_zero():
            return QSeries.zero(prec, self.grid)
        e = _add(self.exp, other.exp)
        a = self.poly
        b = other.poly
        cut = prec - e[0]
        if cut <= 0:
            return QSeries.zero(prec, self.grid)
        ma = _mono((cut, 0, 0))
        if int(a.degrees()[0]) >= cut:
            a = a % ma
        if int(b.degrees()[0]) >= cut:
            b = b % ma
        return QSeries(a * b, e, prec, self.grid)

    __rmul__ = __mul__

    def coefficients(self):
        """Map absolute v-exponent -> RatFunc (Laurent in s, l)."""
        out = {}
        for m, c in _terms(self.poly):
            k = m[0] + self.exp[0]
            out.setdefault(k, {})
            key = (0, m[1] + self.exp[1], m[2] + self.exp[2])
            out[k][key] = out[k].get(key, 0) + int(c)
        return {k: RatFunc.from_dict(d) for k, d in out.items()}

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        a = self.truncate(prec)
        b = other.truncate(prec)
        return a.exp == b.exp and a.poly == b.poly

    def __hash__(self):
        return hash((self.exp, str(self.poly), self.prec))

    def first_difference(self, other):
        """Smallest exponent (in units of q) where the two series differ, or None."""
        d = self - other
        if d.poly.is_zero():
            return None
        return Fraction(d.valuation(), self.grid)

    def __repr__(self):
        coeffs = self.coefficients()
        parts = []
        for k in sorted(coeffs):
            c = coeffs[k]
            e = Fraction(k, self.grid)
            qs = "" if e == 0 else ("q" if e == 1 else "q^%s" % (e if e.denominator == 1 else "(%s)" % e))
            cs = repr(c)
            if qs and cs == "1":
                parts.append(qs)
            elif qs and " " not in cs and "/" not in cs:
                parts.append("%s*%s" % (cs, qs))
            elif qs:
                parts.append("(%s)*%s" % (cs, qs))
            else:
                parts.append(cs)
        e = Fraction(self.prec, self.grid)
        parts.append("O(q^%s)" % (e if e.denominator == 1 else "(%s)" % e))
        return " + ".join(parts)
