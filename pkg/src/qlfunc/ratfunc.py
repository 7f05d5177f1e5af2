"""Exact rational-function arithmetic in one variable over Q.

Polynomials are dense integer coefficient tuples, low degree first, with
no trailing zeros; () is the zero polynomial.  A RatFunc keeps a Fraction
content out front, a primitive integer numerator and a *factored*
denominator (a dict mapping primitive factor polynomials to exponents).
Keeping the denominator factored lets the q-Bernoulli recursions divide by
the cyclotomic-style factors q^m - 1 thousands of times without ever
running a polynomial gcd; cancellation is done by cheap trial division of
the numerator by the stored factors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


# ----------------------------------------------------------------------
# integer polynomial helpers


def p_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def p_add(a, b):
    n = max(len(a), len(b))
    return p_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                   for i in range(n)])


def p_neg(a):
    return tuple(-x for x in a)


def p_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return p_trim(out)


def p_scale(a, k):
    if k == 0:
        return ()
    return tuple(x * k for x in a)


def p_content(a):
    g = 0
    for x in a:
        g = gcd(g, abs(x))
        if g == 1:
            return 1
    return g


def p_primitive(a):
    """(content-with-sign, primitive part with positive leading coeff)."""
    if not a:
        return 0, ()
    g = p_content(a)
    if a[-1] < 0:
        g = -g
    return g, tuple(x // g for x in a)


def p_eval(a, x):
    out = 0 * x if not isinstance(x, (int, float, complex)) else type(x)(0)
    for c in reversed(a):
        out = out * x + c
    return out


def p_divmod_exact(a, f):
    """Divide a by f over Q; return integer quotient if the division is
    exact with integer quotient, else None."""
    if not f:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(a) < len(f):
        return None
    rem = list(a)
    lead = f[-1]
    q = [0] * (len(a) - len(f) + 1)
    for i in range(len(a) - len(f), -1, -1):
        c = rem[i + len(f) - 1]
        if c % lead != 0:
            return None
        t = c // lead
        q[i] = t
        if t:
            for j, fj in enumerate(f):
                rem[i + j] -= t * fj
    if any(rem):
        return None
    return p_trim(q)


def p_pow_monomial(d):
    """q**d as a coefficient tuple (d >= 0)."""
    return (0,) * d + (1,)


def q_power_minus_one(d):
    """q**d - 1."""
    return p_trim([-1] + [0] * (d - 1) + [1])


class RatFunc:
    """c * num / prod(f**e) with num primitive and each f primitive."""

    __slots__ = ("c", "num", "den")

    def __init__(self, c=Fraction(0), num=(1,), den=None, _raw=False):
        if _raw:
            self.c, self.num, self.den = c, num, den or {}
            return
        c = Fraction(c)
        if not num or c == 0:
            self.c, self.num, self.den = Fraction(0), (1,), {}
            return
        k, npoly = p_primitive(num)
        self.c = c * k
        self.num = npoly
        self.den = dict(den) if den else {}
        self._cancel()

    # -- construction helpers

    @classmethod
    def const(cls, v):
        return cls(Fraction(v), (1,))

    @classmethod
    def variable(cls):
        return cls(Fraction(1), (0, 1))

    @classmethod
    def from_poly(cls, coeffs):
        return cls(Fraction(1), tuple(coeffs))

    def _cancel(self):
        if self.c == 0:
            self.num, self.den = (1,), {}
            return
        if len(self.num) == 1:
            # constant numerator: absorb into content, nothing cancels
            self.c *= self.num[0]
            self.num = (1,)
            return
        newden = {}
        num = self.num
        for f, e in self.den.items():
            while e > 0 and len(num) > len(f) - 1:
                q = p_divmod_exact(num, f)
                if q is None:
                    break
                num = q
                e -= 1
            if e > 0:
                newden[f] = e
        k, num = p_primitive(num)
        self.c *= k
        self.num = num
        self.den = newden

    # -- predicates

    def is_zero(self):
        return self.c == 0

    def is_constant(self):
        return len(self.num) <= 1 and not self.den

    def as_fraction(self):
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.c

    # -- arithmetic

    @staticmethod
    def _coerce(v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (int, Fraction)):
            return RatFunc.const(v)
        return NotImplemented

    def _den_poly(self):
        out = (1,)
        for f, e in self.den.items():
            for _ in range(e):
                out = p_mul(out, f)
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.c == 0:
            return other
        if other.c == 0:
            return self
        den = dict(self.den)
        for f, e in other.den.items():
            den[f] = max(den.get(f, 0), e)
        cof_a, cof_b = (1,), (1,)
        for f, e in den.items():
            ea = e - self.den.get(f, 0)
            eb = e - other.den.get(f, 0)
            for _ in range(ea):
                cof_a = p_mul(cof_a, f)
            for _ in range(eb):
                cof_b = p_mul(cof_b, f)
        ca, cb = self.c, other.c
        db = ca.denominator * cb.denominator // gcd(ca.denominator,
                                                    cb.denominator)
        ia = ca.numerator * (db // ca.denominator)
        ib = cb.numerator * (db // cb.denominator)
        poly = p_add(p_scale(p_mul(self.num, cof_a), ia),
                     p_scale(p_mul(other.num, cof_b), ib))
        return RatFunc(Fraction(1, db), poly, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.c, self.num, self.den, _raw=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.c == 0 or other.c == 0:
            return RatFunc()
        den = dict(self.den)
        for f, e in other.den.items():
            den[f] = den.get(f, 0) + e
        return RatFunc(self.c * other.c, p_mul(self.num, other.num), den)

    __rmul__ = __mul__

    def inverse(self):
        if self.c == 0:
            raise ZeroDivisionError("inverse of zero rational function")
        num = (1,)
        for f, e in self.den.items():
            for _ in range(e):
                num = p_mul(num, f)
        den = {}
        if len(self.num) > 1:
            den[self.num] = 1
        return RatFunc(1 / self.c, num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # -- evaluation / io

    def eval(self, x):
        """Evaluate at a Fraction / float / complex point."""
        if isinstance(x, int):
            x = Fraction(x)
        val = self.c * p_eval(self.num, x) if not isinstance(x, complex) \
            else complex(self.c) * p_eval(self.num, x)
        for f, e in self.den.items():
            fv = p_eval(f, x)
            if fv == 0:
                raise ZeroDivisionError("pole of rational function at %r" % (x,))
            val = val / fv ** e
        return val

    def num_den_coeffs(self):
        """(numerator, denominator) as Fraction coefficient lists."""
        num = [self.c * k for k in self.num]
        den = [Fraction(x) for x in self._den_poly()]
        return num, den

    def __repr__(self):
        if self.is_constant():
            return "RatFunc(%s)" % self.c
        return "RatFunc(%s * %s / %s)" % (self.c, list(self.num),
                                          {tuple(f): e for f, e in self.den.items()})
