"""Finite-precision p-adic arithmetic with explicit precision tracking.

A nonzero PadicScalar is p**valuation * unit with the unit known modulo
p**rel_prec; its absolute precision is valuation + rel_prec.  Zero is a
dedicated marker that only records an absolute precision: "the value is
divisible by p**N as far as we know".  All operations propagate the
guaranteed precision (min absolute precision for addition, min relative
precision for multiplication, valuation subtraction for division), so a
result's advertised precision is always sound.

Also provided: the extended Iwasawa logarithm and its inverse exponential,
Teichmuller lifts, q-brackets and q-powers for p-adic q, generalized
binomial coefficients, the unit-power base**(1-s), and the unramified
value ring Z_p[X]/(Phi_m(X)) used to host character values.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .ratfunc import p_divmod_exact, q_power_minus_one


class PadicError(ArithmeticError):
    """Domain or precision failure in p-adic arithmetic."""


def vp_int(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of integer zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_fraction(x, p: int) -> int:
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


def vp_factorial(n: int, p: int) -> int:
    v, pk = 0, p
    while pk <= n:
        v += n // pk
        pk *= p
    return v


class PadicScalar:
    """Element of Q_p at finite precision (immutable)."""

    __slots__ = ("p", "v", "unit", "r")

    def __init__(self, p, v, unit, r, _checked=False):
        if not _checked:
            if r < 0:
                raise PadicError("nonpositive relative precision")
            if unit == 0:
                r = 0
            else:
                unit %= p ** r
                if unit == 0 or unit % p == 0:
                    raise PadicError("unit part divisible by p")
        self.p, self.v, self.unit, self.r = p, v, unit, r

    # -- constructors

    @classmethod
    def zero(cls, p, abs_prec):
        return cls(p, abs_prec, 0, 0, _checked=True)

    @classmethod
    def from_rational(cls, x, p, prec):
        """Exact rational x as a p-adic number with prec relative digits."""
        x = Fraction(x)
        if x == 0:
            return cls.zero(p, prec)
        v = vp_fraction(x, p)
        red = x / Fraction(p) ** v
        mod = p ** prec
        unit = red.numerator % mod * pow(red.denominator, -1, mod) % mod
        return cls(p, v, unit, prec)

    # -- state

    @property
    def is_zero(self):
        """True when the value is indistinguishable from zero."""
        return self.unit == 0

    @property
    def abs_prec(self):
        """Known modulo p**abs_prec."""
        return self.v + self.r

    @property
    def valuation(self):
        if self.is_zero:
            raise PadicError(
                "valuation of a value indistinguishable from zero "
                "(>= %d)" % self.v)
        return self.v

    def valuation_lower_bound(self):
        return self.v

    # -- basic helpers

    def _require_same(self, other):
        if self.p != other.p:
            raise PadicError("prime mismatch: %d vs %d" % (self.p, other.p))

    def cap_abs(self, n):
        """Forget information beyond absolute precision n."""
        if self.abs_prec <= n:
            return self
        if self.is_zero:
            return PadicScalar.zero(self.p, n)
        r = n - self.v
        if r <= 0:
            return PadicScalar.zero(self.p, n)
        return PadicScalar(self.p, self.v, self.unit % self.p ** r, r)

    def residue(self, n):
        """Integer representative modulo p**n (requires valuation >= 0)."""
        if self.abs_prec < n:
            raise PadicError("not enough precision for residue mod p^%d" % n)
        if self.is_zero:
            return 0
        if self.v < 0:
            raise PadicError("negative valuation has no integer residue")
        return (self.unit * self.p ** self.v) % self.p ** n

    def lift(self):
        """Canonical rational representative p**v * unit."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.p) ** self.v * self.unit

    # -- arithmetic

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PadicScalar.from_rational(other, self.p, self.r + abs(self.v) + 1) \
                if not self.is_zero else PadicScalar.from_rational(other, self.p, max(self.v, 1))
        if not isinstance(other, PadicScalar):
            return NotImplemented
        self._require_same(other)
        n = min(self.abs_prec, other.abs_prec)
        if self.is_zero and other.is_zero:
            return PadicScalar.zero(self.p, n)
        if self.is_zero:
            return other.cap_abs(n)
        if other.is_zero:
            return self.cap_abs(n)
        v = min(self.v, other.v)
        if n - v <= 0:
            return PadicScalar.zero(self.p, n)
        mod = self.p ** (n - v)
        s = (self.unit * self.p ** (self.v - v)
             + other.unit * self.p ** (other.v - v)) % mod
        if s == 0:
            return PadicScalar.zero(self.p, n)
        dv = vp_int(s, self.p)
        if n - v - dv <= 0:
            return PadicScalar.zero(self.p, n)
        return PadicScalar(self.p, v + dv, s // self.p ** dv, n - v - dv)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return PadicScalar(self.p, self.v, self.p ** self.r - self.unit, self.r)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        if not isinstance(other, PadicScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                if self.is_zero:
                    return self
                return PadicScalar.zero(self.p, self.abs_prec)
            ov = vp_fraction(other, self.p)
            if self.is_zero:
                return PadicScalar.zero(self.p, self.v + ov)
            other = PadicScalar.from_rational(other, self.p, self.r)
        if not isinstance(other, PadicScalar):
            return NotImplemented
        self._require_same(other)
        if self.is_zero or other.is_zero:
            return PadicScalar.zero(self.p, self.v + other.v)
        r = min(self.r, other.r)
        return PadicScalar(self.p, self.v + other.v,
                           self.unit * other.unit % self.p ** r, r)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise PadicError("division by a value indistinguishable from zero")
        return PadicScalar(self.p, -self.v,
                           pow(self.unit, -1, self.p ** self.r), self.r)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PadicScalar.from_rational(other, self.p, max(self.r, 1))
        if not isinstance(other, PadicScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("integer exponent required; "
                            "use unit_power for p-adic exponents")
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            # x**0 = 1 exactly, even for a value only known to be small
            return PadicScalar(self.p, 0, 1, max(self.r, self.abs_prec, 1))
        if self.is_zero:
            return PadicScalar.zero(self.p, self.v * n)
        return PadicScalar(self.p, self.v * n,
                           pow(self.unit, n, self.p ** self.r), self.r)

    # -- comparisons

    def agrees_with(self, other, n):
        """True when v_p(self - other) >= n."""
        d = self - other
        return d.is_zero and d.v >= n or (not d.is_zero and d.v >= n)

    def __eq__(self, other):
        """Equality at the shared precision."""
        if isinstance(other, (int, Fraction)):
            other = PadicScalar.from_rational(other, self.p, self.r + abs(self.v) + 1)
        if not isinstance(other, PadicScalar):
            return NotImplemented
        d = self - other
        return d.is_zero

    __hash__ = None

    # -- printing

    def digits(self):
        """Little-endian base-p digits of p**max(v,0)*unit up to abs_prec."""
        if self.is_zero:
            return []
        n = self.abs_prec - min(self.v, 0)
        x = self.unit * self.p ** (self.v - min(self.v, 0))
        out = []
        for _ in range(n):
            x, d = divmod(x, self.p)
            out.append(d)
        return out

    def digit_string(self):
        if self.is_zero:
            return "0 + O(%d^%d)" % (self.p, self.v)
        head = "" if self.v >= 0 else "%d^%d * " % (self.p, self.v)
        return head + " ".join(str(d) for d in self.digits()) + \
            " + O(%d^%d)" % (self.p, self.abs_prec - min(self.v, 0))

    def __repr__(self):
        if self.is_zero:
            return "O(%d^%d)" % (self.p, self.v)
        return "%d^%d * %d (mod %d^%d)" % (self.p, self.v, self.unit,
                                           self.p, self.abs_prec)


# ----------------------------------------------------------------------
# Teichmuller lifts


def teichmuller(a, p, prec):
    """The root of unity congruent to a mod p (mod 4 when p = 2)."""
    if isinstance(a, PadicScalar):
        if a.is_zero or a.v != 0:
            raise PadicError("Teichmuller lift needs a unit")
        return _teich_unit(a.unit, p, min(prec, a.r))
    a = int(a)
    if a % p == 0:
        raise PadicError("Teichmuller lift of a multiple of p")
    return _teich_unit(a, p, prec)


def _teich_unit(a, p, prec):
    mod = p ** prec
    if p == 2:
        u = 1 if a % 4 == 1 else mod - 1
        return PadicScalar(p, 0, u, prec)
    x = a % mod
    while True:
        y = pow(x, p, mod)
        if y == x:
            return PadicScalar(p, 0, x, prec)
        x = y


# ----------------------------------------------------------------------
# exp / log


def _exp_min_val(p):
    return 2 if p == 2 else 1


def padic_exp(x: PadicScalar) -> PadicScalar:
    """exp(x) = sum x^n / n!, for v_p(x) >= 1 (>= 2 when p = 2)."""
    p = x.p
    if x.is_zero:
        return PadicScalar(p, 0, 1, max(x.v, 1))
    vx = x.v
    if vx < _exp_min_val(p):
        raise PadicError("argument outside exp convergence domain "
                         "(v_p = %d)" % vx)
    target = x.abs_prec
    acc = PadicScalar(p, 0, 1, target)
    term = acc
    n = 0
    while True:
        n += 1
        term = term * x / n
        acc = acc + term
        # remaining terms have valuation >= (n+1)*vx - v_p((n+1)!)
        if (n + 1) * vx - vp_factorial(n + 1, p) >= target and \
           (n + 1) * (vx * (p - 1) - 1) >= 0:
            break
    return acc


def padic_log(x: PadicScalar) -> PadicScalar:
    """Extended Iwasawa logarithm: log p = 0, log(root of unity) = 0."""
    p = x.p
    if x.is_zero:
        raise PadicError("logarithm of zero")
    omega = _teich_unit(x.unit, p, x.r)
    one_unit = PadicScalar(p, 0, x.unit, x.r) * omega.inverse()
    z = one_unit - 1
    if z.is_zero:
        return PadicScalar.zero(p, z.v)
    vz = z.v
    target = z.abs_prec
    acc = PadicScalar.zero(p, target)
    power = PadicScalar(p, 0, 1, target)
    n = 0
    while True:
        n += 1
        power = power * z
        term = power / n
        acc = acc + term if n % 2 else acc - term
        if (n + 1) * vz - _log_p_floor(n + 1, p) >= target:
            # n*vz - v_p(n) is nondecreasing from here on
            break
    return acc


def _log_p_floor(n, p):
    out, pk = 0, p
    while pk <= n:
        out += 1
        pk *= p
    return out


def unit_power(base: PadicScalar, expo: PadicScalar) -> PadicScalar:
    """base**expo = exp(expo * log base) for a 1-unit base, v_p(expo) >= 0."""
    p = base.p
    need = _exp_min_val(p)
    d = base - 1
    if not d.is_zero and d.v < need:
        raise PadicError("base is not close enough to 1 for p-adic powers")
    if not expo.is_zero and expo.v < 0:
        raise PadicError("exponent outside the certified disk (v_p < 0)")
    return padic_exp(expo * padic_log(base))


def power_one_minus_s(base: PadicScalar, s: PadicScalar) -> PadicScalar:
    """base**(1-s) under the same domain conditions as unit_power."""
    one = PadicScalar(s.p, 0, 1, max(s.r, 1) + abs(min(s.v, 0)))
    return unit_power(base, one - s)


def in_disk(s: PadicScalar) -> bool:
    """Membership in the certified sub-disk of admissible exponents s."""
    return s.is_zero or s.v >= 0


def binom_falling(s: PadicScalar, m: int) -> PadicScalar:
    """Generalized binomial coefficient s(s-1)...(s-m+1)/m!."""
    p = s.p
    out = PadicScalar(p, 0, 1, max(s.r, 1) + abs(min(s.v, 0)) * max(m, 1))
    for j in range(m):
        out = out * (s - j)
    if m:
        out = out / PadicScalar.from_rational(
            Fraction(_factorial(m)), p, out.r + vp_factorial(m, p) + 1)
    return out


def _factorial(m):
    out = 1
    for k in range(2, m + 1):
        out *= k
    return out


# ----------------------------------------------------------------------
# q-parameters, brackets and powers


class QParameter:
    """The deformation parameter q: an exact rational, optionally tied to
    a prime p (p-adic mode, enforcing the disk condition on q - 1)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p=None):
        self.value = Fraction(value)
        self.p = p
        if p is not None:
            if self.value == 1:
                raise PadicError("q = 1 is outside p-adic mode; "
                                 "use the classical-limit path")
            k = vp_fraction(self.value - 1, p)
            if k < _exp_min_val(p):
                raise PadicError(
                    "q - 1 has p-adic valuation %d; the p-adic disk needs "
                    ">= %d" % (k, _exp_min_val(p)))

    @property
    def is_padic(self):
        return self.p is not None

    def disk_valuation(self):
        return vp_fraction(self.value - 1, self.p)

    def scalar(self, prec) -> PadicScalar:
        return PadicScalar.from_rational(self.value, self.p, prec)

    def base_power(self, d: int) -> "QParameter":
        """q**d as a new parameter (same prime)."""
        return QParameter(self.value ** d, self.p)

    def __repr__(self):
        return "QParameter(%s%s)" % (self.value,
                                     ", p=%d" % self.p if self.p else "")


def qpow(q: QParameter, x, prec=None):
    """q**x: fast exact power for integer x, exp(x log q) for p-adic x."""
    if isinstance(x, int):
        if q.is_padic and prec is not None:
            return PadicScalar.from_rational(q.value ** x, q.p, prec)
        return q.value ** x
    if not q.is_padic:
        raise PadicError("non-integer exponent requires p-adic mode")
    if not isinstance(x, PadicScalar):
        raise TypeError("exponent must be an integer or PadicScalar")
    if not x.is_zero and x.v < 0:
        raise PadicError("q**x needs |x|_p <= 1")
    prec = prec if prec is not None else x.abs_prec
    logq = padic_log(q.scalar(prec + q.disk_valuation() + 1))
    return padic_exp((x * logq).cap_abs(prec + q.disk_valuation()))


def qbracket(x, q: QParameter, prec=None):
    """[x]_q = (1 - q**x)/(1 - q); [x]_1 = x on the classical path."""
    if q.value == 1:
        return x
    if isinstance(x, int):
        if q.is_padic and prec is not None:
            return PadicScalar.from_rational(
                (1 - q.value ** x) / (1 - q.value), q.p, prec)
        return (1 - q.value ** x) / (1 - q.value)
    qx = qpow(q, x, prec)
    one = PadicScalar(q.p, 0, 1, qx.abs_prec)
    return (one - qx) / PadicScalar.from_rational(1 - q.value, q.p, qx.r)


def p_star(p: int) -> int:
    return 4 if p == 2 else p


def angle_bracket(a: int, q: QParameter, t, prec) -> PadicScalar:
    """w(a)**(-1) * [a + p* t]_q, the 1-unit whose p-adic powers define
    the interpolation variable."""
    p = q.p
    if a % p == 0:
        raise PadicError("angle bracket needs gcd(a, p) = 1")
    if isinstance(t, int):
        t = PadicScalar.from_rational(t, p, prec)
    if not t.is_zero and t.v < 0:
        raise PadicError("|t|_p <= 1 required")
    w = teichmuller(a, p, prec)
    return w.inverse() * bracket_shifted(a, q, t, prec)


def bracket_shifted(a: int, q: QParameter, t, prec) -> PadicScalar:
    """[a + p* t]_q = (1 - q**a q**(p* t))/(1 - q)."""
    p = q.p
    if isinstance(t, int):
        t = PadicScalar.from_rational(t, p, prec)
    qpt = qpow(q, t * p_star(p), prec + 1)
    qa = PadicScalar.from_rational(q.value ** a, p, prec + 1)
    one = PadicScalar(p, 0, 1, prec + 1)
    return (one - qa * qpt) / PadicScalar.from_rational(1 - q.value, p, prec + 1)


# ----------------------------------------------------------------------
# cyclotomic value ring


def cyclotomic_poly(m: int):
    """Coefficients of the m-th cyclotomic polynomial (integer tuple)."""
    poly = q_power_minus_one(m)
    for d in range(1, m):
        if m % d == 0:
            poly = p_divmod_exact(poly, cyclotomic_poly(d))
    return poly


_CYCLO_CACHE = {}


def _cyclo(m):
    if m not in _CYCLO_CACHE:
        _CYCLO_CACHE[m] = cyclotomic_poly(m)
    return _CYCLO_CACHE[m]


class CycloScalar:
    """Element of Z_p[X]/(Phi_m(X)) with p-adic coefficients, p coprime
    to m.  The class of X is a root of unity of order exactly m."""

    __slots__ = ("m", "p", "coeffs")

    def __init__(self, m, p, coeffs):
        if gcd(m, p) != 1 and m != 1:
            raise PadicError("ramified value ring requested: p | m")
        self.m, self.p = m, p
        deg = len(_cyclo(m)) - 1
        coeffs = list(coeffs)
        if len(coeffs) > deg:
            coeffs = _reduce_mod_cyclo(coeffs, m, p)
        while len(coeffs) < deg:
            coeffs.append(PadicScalar.zero(p, coeffs[0].abs_prec if coeffs
                                           else 1))
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_padic(cls, x: PadicScalar, m: int):
        return cls(m, x.p, [x])

    @classmethod
    def generator(cls, m, p, prec):
        '''The class of X; checked once per (m, p) to have order m.'''
        deg = len(_cyclo(m)) - 1
        one = PadicScalar(p, 0, 1, prec)
        zero = PadicScalar.zero(p, prec)
        if deg == 1:
            # Phi_1 = X - 1 or Phi_2 = X + 1
            root = one if m == 1 else -one
            g = cls(m, p, [root])
        else:
            g = cls(m, p, [zero, one] + [zero] * (deg - 2))
        _check_generator_order(g, m, p)
        return g

    def _require_same(self, other):
        if self.m != other.m or self.p != other.p:
            raise PadicError("cyclotomic ring mismatch")

    def __add__(self, other):
        other = _cyclo_coerce(other, self.m, self.p, self.min_rel_prec())
        if other is NotImplemented:
            return NotImplemented
        self._require_same(other)
        return CycloScalar(self.m, self.p,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.m, self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = _cyclo_coerce(other, self.m, self.p, self.min_rel_prec())
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PadicScalar)):
            if isinstance(other, (int, Fraction)):
                other = PadicScalar.from_rational(other, self.p,
                                                  self.min_rel_prec())
            return CycloScalar(self.m, self.p,
                               [c * other for c in self.coeffs])
        if not isinstance(other, CycloScalar):
            return NotImplemented
        self._require_same(other)
        n = len(self.coeffs)
        prod = [PadicScalar.zero(self.p, self.abs_prec() + other.abs_prec())
                for _ in range(2 * n - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                prod[i + j] = prod[i + j] + a * b
        return CycloScalar(self.m, self.p, prod)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise PadicError("negative powers unsupported in the value ring")
        out = CycloScalar.from_padic(
            PadicScalar(self.p, 0, 1, self.min_rel_prec()), self.m)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def min_rel_prec(self):
        """A precision at which fresh exact constants should be created so
        they do not limit arithmetic with this element."""
        return max(1, self.abs_prec())

    def abs_prec(self):
        return min(c.abs_prec for c in self.coeffs)

    def valuation_lower_bound(self):
        return min(c.v for c in self.coeffs)

    def is_zero_to_precision(self):
        return all(c.is_zero for c in self.coeffs)

    def agrees_with(self, other, n):
        d = self - other
        return d.valuation_lower_bound() >= n

    def promote(self, big_m):
        """Image in the order-big_m ring (m | big_m) via X -> X**(big_m/m)."""
        if big_m == self.m:
            return self
        if big_m % self.m:
            raise PadicError("no embedding: %d does not divide %d"
                             % (self.m, big_m))
        g = CycloScalar.generator(big_m, self.p, self.min_rel_prec()) \
            ** (big_m // self.m)
        out = CycloScalar.from_padic(
            PadicScalar.zero(self.p, self.abs_prec()), big_m)
        for c in reversed(self.coeffs):
            out = out * g + CycloScalar.from_padic(c, big_m)
        return out

    def __repr__(self):
        return "CycloScalar(m=%d, %r)" % (self.m, list(self.coeffs))


def _cyclo_coerce(x, m, p, prec=1):
    if isinstance(x, CycloScalar):
        return x
    if isinstance(x, PadicScalar):
        return CycloScalar.from_padic(x, m)
    if isinstance(x, (int, Fraction)):
        return CycloScalar.from_padic(
            PadicScalar.from_rational(x, p, max(prec, 1)), m)
    return NotImplemented


def _reduce_mod_cyclo(coeffs, m, p):
    phi = _cyclo(m)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        lead = coeffs[i]
        if lead.is_zero and lead.v <= 0:
            continue
        for j in range(deg + 1):
            coeffs[i - deg + j] = coeffs[i - deg + j] - lead * phi[j]
    return coeffs[:deg]


_GENERATOR_CHECKED = set()


def _check_generator_order(g, m, p):
    if (m, p) in _GENERATOR_CHECKED:
        return
    acc = g
    for k in range(1, m):
        if _cyclo_is_one(acc):
            raise PadicError("generator order check failed at %d" % k)
        acc = acc * g
    if not _cyclo_is_one(acc):
        raise PadicError("generator does not have order %d" % m)
    _GENERATOR_CHECKED.add((m, p))


def _cyclo_is_one(x):
    one = PadicScalar(x.p, 0, 1, x.min_rel_prec())
    return (x - CycloScalar.from_padic(one, x.m)).valuation_lower_bound() >= 1 \
        and (x - CycloScalar.from_padic(one, x.m)).is_zero_to_precision()
