"""Exact scalars: rationals, polynomials in ``t`` and the field Q(t).

``Rational`` is ``gmpy2.mpq`` (canonical, unbounded).  Polynomials are dense
coefficient tuples, lowest degree first, with no trailing zeros; the zero
polynomial is the empty tuple.  Degrees stay tiny in practice (bounded by
the number of substituted pivots), so nothing cleverer is needed.

Values flowing through the factorization are either plain rationals or
:class:`RatFunc` instances; the two interoperate through the usual operators.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import mpq

from .errors import ParseError, PoleAtZero

Rational = mpq

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def rational(value):
    """Coerce ``value`` (int, Fraction, mpq or "p/q" / "p" string) to a Rational."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def parse_rational(text):
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not an exact rational: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den is not None else 1)


def format_rational(x):
    """Render as "p/q", or "p" when the denominator is 1."""
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# -- polynomial helpers on raw coefficient tuples ---------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pneg(p):
    return tuple(-c for c in p)


def _psub(p, q):
    return _padd(p, _pneg(q))


def _pscale(p, c):
    if c == 0:
        return ()
    return tuple(x * c for x in p)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _pdivmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if len(q) == 2 and q[1] == 1 and len(p) > 1:
        # synthetic division by t - r
        r = -q[0]
        quot = [mpq(0)] * (len(p) - 1)
        acc = p[-1]
        for k in range(len(p) - 2, -1, -1):
            quot[k] = acc
            acc = acc * r + p[k]
        return _trim(quot), _trim((acc,))
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(rem) <= dq:
        return (), tuple(rem)
    quot = [mpq(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] / lead
        quot[k] = c
        if c != 0:
            for j in range(dq + 1):
                rem[k + j] -= c * q[j]
    return _trim(quot), _trim(rem[:dq])


def _pmonic(p):
    if not p or p[-1] == 1:
        return p
    lead = p[-1]
    return tuple(c / lead for c in p)


def _peval(p, x):
    acc = mpq(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pgcd(p, q):
    if len(p) == 1 or len(q) == 1:
        return _ONE
    # a linear operand divides the other iff its root is shared
    if len(q) == 2 or len(p) == 2:
        lin, other = (q, p) if len(q) == 2 else (p, q)
        if not other:
            return _pmonic(lin)
        root = -lin[0] / lin[1]
        return _pmonic(lin) if _peval(other, root) == 0 else _ONE
    if not q:
        return _pmonic(p)
    return _pgcd(q, _pmonic(_pdivmod(p, q)[1]))


_ONE = (mpq(1),)


class Poly:
    """Univariate polynomial in ``t`` over the rationals (immutable)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(rational(c) for c in coeffs))

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else mpq(0)

    def monic(self):
        return Poly._raw(_pmonic(self.coeffs))

    def __call__(self, x):
        acc = mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _wrap(self, other):
        if isinstance(other, Poly):
            return other.coeffs
        if isinstance(other, (int, _RationalABC)) or type(other) is type(mpq(0)):
            return _trim((rational(other),))
        return None

    def __add__(self, other):
        q = self._wrap(other)
        return NotImplemented if q is None else Poly._raw(_padd(self.coeffs, q))

    __radd__ = __add__

    def __sub__(self, other):
        q = self._wrap(other)
        return NotImplemented if q is None else Poly._raw(_psub(self.coeffs, q))

    def __rsub__(self, other):
        q = self._wrap(other)
        return NotImplemented if q is None else Poly._raw(_psub(q, self.coeffs))

    def __neg__(self):
        return Poly._raw(_pneg(self.coeffs))

    def __mul__(self, other):
        q = self._wrap(other)
        return NotImplemented if q is None else Poly._raw(_pmul(self.coeffs, q))

    __rmul__ = __mul__

    def __divmod__(self, other):
        q = self._wrap(other)
        if q is None:
            return NotImplemented
        a, b = _pdivmod(self.coeffs, q)
        return Poly._raw(a), Poly._raw(b)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        q = self._wrap(other)
        return NotImplemented if q is None else self.coeffs == q

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"({format_rational(c)})*{mono}")
            else:
                terms.append(format_rational(c))
        return " + ".join(terms)


def poly_gcd(p, q):
    """Monic gcd of two polynomials, not both zero."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return Poly._raw(_pgcd(p.coeffs, q.coeffs))


def _is_const(x):
    return isinstance(x, (int, _RationalABC)) or type(x) is _MPQ


_MPQ = type(mpq(0))


class RatFunc:
    """Element of Q(t) kept in canonical form.

    ``num / den`` with ``gcd(num, den) = 1`` and ``den`` monic, so equality
    is structural.  Arithmetic accepts plain rationals on either side, and
    a result that no longer involves ``t`` comes back as a plain Rational.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, num=0, den=1):
        n = num.coeffs if isinstance(num, Poly) else _trim((rational(num),))
        d = den.coeffs if isinstance(den, Poly) else _trim((rational(den),))
        if not d:
            raise ZeroDivisionError("RatFunc with zero denominator")
        self._n, self._d = _canon(n, d)

    @classmethod
    def _raw(cls, n, d):
        r = object.__new__(cls)
        r._n = n
        r._d = d
        return r

    @property
    def num(self):
        return Poly._raw(self._n)

    @property
    def den(self):
        return Poly._raw(self._d)

    def is_zero(self):
        return not self._n

    def is_constant(self):
        return len(self._n) <= 1 and len(self._d) == 1

    def constant(self):
        """The value as a Rational; only valid when :meth:`is_constant`."""
        if not self.is_constant():
            raise ValueError(f"{self} depends on t")
        return self._n[0] if self._n else mpq(0)

    def __add__(self, other):
        if _is_const(other):
            if other == 0:
                return self
            # gcd(n + c*d, d) = gcd(n, d) = 1, so no reduction needed
            return _result(_padd(self._n, _pscale(self._d, mpq(other))), self._d)
        if isinstance(other, RatFunc):
            d1, d2 = self._d, other._d
            if d1 == d2:
                return _result(*_canon(_padd(self._n, other._n), d1))
            g = _pgcd(d1, d2)
            if len(g) > 1:
                d1, d2 = _pdivmod(d1, g)[0], _pdivmod(d2, g)[0]
            n = _padd(_pmul(self._n, d2), _pmul(other._n, d1))
            # n is coprime to d1 * d2, so only g can still cancel
            d = _pmul(_pmul(d1, d2), g)
            if len(g) > 1 and n:
                g2 = _pgcd(n, g)
                if len(g2) > 1:
                    n, d = _pdivmod(n, g2)[0], _pdivmod(d, g2)[0]
            return _result(*_canon_lead(n, d))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return _result(_pneg(self._n), self._d)

    def __sub__(self, other):
        if _is_const(other) or isinstance(other, RatFunc):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if _is_const(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if _is_const(other):
            if other == 0:
                return _result((), _ONE)
            return _result(_pscale(self._n, mpq(other)), self._d)
        if isinstance(other, RatFunc):
            if not self._n or not other._n:
                return _result((), _ONE)
            if len(self._d) == 1 and len(other._d) == 1:
                return _result(_pmul(self._n, other._n), _ONE)
            # cross-cancel; each factor pair is already coprime on its own
            g1 = _pgcd(self._n, other._d)
            g2 = _pgcd(other._n, self._d)
            n1, d2 = self._n, other._d
            if len(g1) > 1:
                n1, d2 = _pdivmod(n1, g1)[0], _pdivmod(d2, g1)[0]
            n2, d1 = other._n, self._d
            if len(g2) > 1:
                n2, d1 = _pdivmod(n2, g2)[0], _pdivmod(d1, g2)[0]
            n, d = _pmul(n1, n2), _pmul(d1, d2)
            lead = d[-1]
            if lead != 1:
                n, d = _pscale(n, 1 / lead), _pscale(d, 1 / lead)
            return _result(n, d)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        if not self._n:
            raise ZeroDivisionError("inverse of the zero rational function")
        lead = self._n[-1]
        return _result(_pscale(self._d, 1 / lead), _pscale(self._n, 1 / lead))

    def __truediv__(self, other):
        if _is_const(other):
            if other == 0:
                raise ZeroDivisionError("RatFunc division by zero")
            return _result(_pscale(self._n, 1 / mpq(other)), self._d)
        if isinstance(other, RatFunc):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_const(other):
            return self.inverse() * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self._n == other._n and self._d == other._d
        if _is_const(other):
            return len(self._d) == 1 and self._n == _trim((mpq(other),))
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((self._n, self._d))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise PoleAtZero(f"denominator of {self} vanishes at t = {x}")
        return self.num(x) / d

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if len(self._d) == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _result(n, d):
    """Wrap canonical parts, demoting t-free results to a plain Rational."""
    if len(d) == 1:
        if not n:
            return mpq(0)
        if len(n) == 1:
            return n[0]
    return RatFunc._raw(n, d)


def _canon_lead(n, d):
    if not n:
        return (), _ONE
    lead = d[-1]
    if lead != 1:
        inv = 1 / lead
        n, d = _pscale(n, inv), _pscale(d, inv)
    return n, d


def _canon(n, d):
    if not n:
        return (), _ONE
    if len(d) > 1 and len(n) > 1:
        g = _pgcd(n, d)
        if len(g) > 1:
            n = _pdivmod(n, g)[0]
            d = _pdivmod(d, g)[0]
    lead = d[-1]
    if lead != 1:
        inv = 1 / lead
        n, d = _pscale(n, inv), _pscale(d, inv)
    return n, d


#: The symbol substituted for vanishing pivots.
T = RatFunc._raw((mpq(0), mpq(1)), _ONE)


def eval_at_zero(x):
    """Value at ``t = 0`` as a Rational; plain rationals pass through."""
    if isinstance(x, RatFunc):
        if not x._n:
            return mpq(0)
        if x._d[0] == 0:
            raise PoleAtZero(f"denominator of {x} vanishes at t = 0")
        return x._n[0] / x._d[0]
    return mpq(x)


@dataclass(frozen=True)
class Tolerance:
    """Float-mode breakdown threshold: ``|x| <= eps_abs + eps_rel * scale``."""

    eps_abs: float = 0.0
    eps_rel: float = 1e-12


DEFAULT_TOLERANCE = Tolerance()


def is_zero(x, scale=1.0, tol=DEFAULT_TOLERANCE):
    """Exact zero test for rationals and RatFuncs; thresholded for floats.

    ``scale`` only matters for floats, where it is floored at 1.
    """
    if isinstance(x, float):
        return abs(x) <= tol.eps_abs + tol.eps_rel * max(1.0, abs(scale))
    if isinstance(x, RatFunc):
        return x.is_zero()
    return x == 0
