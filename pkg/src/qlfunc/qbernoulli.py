"""q-deformed Bernoulli numbers and polynomials, plain and character-twisted.

The defining recursion is

    b_0 = (q - 1)/log q,     (q b + 1)^n - b_n = [n = 1]

with the umbral convention b^i -> b_i.  In exact mode the transcendental
part is carried by the single symbol mu = 1/log q, so every value is
a(q) + b(q) mu with a, b rational functions of q; identities between such
values are decided exactly.  The same recursion runs p-adically with
mu = 1/log_p q at a working precision inflated enough to absorb the
divisions by q^n - 1.

Independent oracles kept alongside: the closed-form single sum, the
generating-function Taylor coefficients for complex |q| < 1, the
finite-level Riemann sums of the q-measure mu_q, and the classical
(q = 1) Bernoulli recursion.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
import cmath

from .padic import (PadicError, PadicScalar, QParameter, padic_log,
                    qbracket, qpow, vp_factorial, vp_fraction)
from .ratfunc import RatFunc


class ExactModeError(TypeError):
    """Raised when an exact-mode computation needs a value (for instance
    an irrational character value) that the coefficient field lacks."""


class ExactQScalar:
    """a(q) + b(q) * mu with mu the formal symbol 1/log q.

    The components are either Fractions (q specialized to a rational) or
    RatFuncs (q symbolic).  Products of two scalars that both carry a mu
    part are rejected: no supported identity multiplies two Bernoulli-type
    quantities, and the restriction catches umbral-calculus mistakes.
    """

    __slots__ = ("rat", "mu")

    def __init__(self, rat, mu):
        self.rat = rat
        self.mu = mu

    @classmethod
    def from_field(cls, x):
        return cls(x, x * 0)

    def __add__(self, other):
        if isinstance(other, ExactQScalar):
            return ExactQScalar(self.rat + other.rat, self.mu + other.mu)
        return ExactQScalar(self.rat + other, self.mu)

    __radd__ = __add__

    def __neg__(self):
        return ExactQScalar(-self.rat, -self.mu)

    def __sub__(self, other):
        if isinstance(other, ExactQScalar):
            return ExactQScalar(self.rat - other.rat, self.mu - other.mu)
        return ExactQScalar(self.rat - other, self.mu)

    def __rsub__(self, other):
        return (-self) + other

    def _mu_free(self):
        return self.mu == 0 or (hasattr(self.mu, "is_zero")
                                and self.mu.is_zero())

    def __mul__(self, other):
        if isinstance(other, ExactQScalar):
            if not self._mu_free() and not other._mu_free():
                raise ExactModeError(
                    "product of two mu-carrying scalars is not defined")
            return ExactQScalar(self.rat * other.rat,
                                self.rat * other.mu + self.mu * other.rat)
        return ExactQScalar(self.rat * other, self.mu * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExactQScalar):
            if not other._mu_free():
                raise ExactModeError("division by a mu-carrying scalar")
            other = other.rat
        return ExactQScalar(self.rat / other, self.mu / other)

    def __eq__(self, other):
        if not isinstance(other, ExactQScalar):
            other = ExactQScalar.from_field(self.rat * 0 + other)
        return self.rat == other.rat and self.mu == other.mu

    __hash__ = None

    def is_zero(self):
        return self._mu_free() and (self.rat == 0 or
                                    (hasattr(self.rat, "is_zero")
                                     and self.rat.is_zero()))

    # -- conversions

    def eval_at(self, q0):
        """Specialize symbolic components at the rational point q0."""
        if isinstance(self.rat, RatFunc):
            return ExactQScalar(self.rat.eval(q0), self.mu.eval(q0))
        raise TypeError("already specialized")

    def eval_complex(self, q0: complex) -> complex:
        rat = self.rat.eval(q0) if isinstance(self.rat, RatFunc) else self.rat
        mu = self.mu.eval(q0) if isinstance(self.mu, RatFunc) else self.mu
        return complex(rat) + complex(mu) / cmath.log(q0)

    def to_padic(self, q: QParameter, prec: int) -> PadicScalar:
        """Reduce at a p-adic q (components must be Fractions or symbolic)."""
        rat = self.rat.eval(q.value) if isinstance(self.rat, RatFunc) \
            else self.rat
        mu = self.mu.eval(q.value) if isinstance(self.mu, RatFunc) else self.mu
        p, k = q.p, q.disk_valuation()
        vneg = min(0, vp_fraction(rat, p) if rat else 0,
                   (vp_fraction(mu, p) if mu else 0) - k)
        work = prec - vneg + k + 2
        out = PadicScalar.from_rational(rat, p, work)
        if mu:
            logq = padic_log(q.scalar(work + 2 * k))
            out = out + PadicScalar.from_rational(mu, p, work) / logq
        return out

    def to_json(self):
        def comp(x):
            if isinstance(x, RatFunc):
                num, den = x.num_den_coeffs()
                return {"num": [str(c) for c in num],
                        "den": [str(c) for c in den]}
            return {"num": [str(Fraction(x))], "den": ["1"]}
        return {"rational_part": comp(self.rat), "mu_part": comp(self.mu)}

    def __repr__(self):
        return "ExactQScalar(%r + (%r) mu)" % (self.rat, self.mu)


SYMBOLIC_Q = RatFunc.variable()


# ----------------------------------------------------------------------
# the defining recursion (exact field mode)


_SYMBOLIC_BETAS = []
_AT_Q_BETAS = {}


def qbernoulli_list(n_max, q):
    """[b_0, ..., b_{n_max}] as ExactQScalars over the field of q.

    q is a Fraction (specialized) or RatFunc (symbolic); q = 1 rejected.
    """
    one = q ** 0
    betas = [ExactQScalar(one * 0, q - 1)]
    for n in range(1, n_max + 1):
        acc = None
        for i in range(n):
            term = betas[i] * (comb(n, i) * q ** i)
            acc = term if acc is None else acc + term
        num = -acc + (1 if n == 1 else 0)
        betas.append(num / (q ** n - 1))
    return betas


def qbernoulli_symbolic(n_max):
    """Cached symbolic q-Bernoulli numbers."""
    if len(_SYMBOLIC_BETAS) <= n_max:
        fresh = qbernoulli_list(n_max, SYMBOLIC_Q)
        _SYMBOLIC_BETAS.clear()
        _SYMBOLIC_BETAS.extend(fresh)
    return _SYMBOLIC_BETAS[: n_max + 1]


def qbernoulli_at(n_max, q: Fraction):
    """Cached q-Bernoulli numbers at a rational q."""
    q = Fraction(q)
    lst = _AT_Q_BETAS.get(q)
    if lst is None or len(lst) <= n_max:
        lst = qbernoulli_list(n_max, q)
        _AT_Q_BETAS[q] = lst
    return lst[: n_max + 1]


def qbernoulli_closed_form(n, q, signs="alternating"):
    """Single-sum closed form; the i = 0 summand is the continuous limit
    (q-1) mu.  signs='alternating' uses (-1)^i (consistent with the
    recursion); signs='displayed' uses (-1)^(n-i), which differs from the
    recursion by a global factor (-1)^n (recorded by the test suite)."""
    one = q ** 0
    acc = ExactQScalar(one * 0, (q - 1))  # i = 0 limit term
    if signs == "displayed":
        acc = acc * ((-1) ** n)
    for i in range(1, n + 1):
        c = comb(n, i) * i
        val = (one * c) * (1 - q) / (1 - q ** i)
        sign = (-1) ** i if signs == "alternating" else (-1) ** (n - i)
        acc = acc + ExactQScalar(val * sign, one * 0)
    return acc * ((1 - q) ** (-n))


def qbernoulli_poly(n, betas, q_pow_x, bracket_x):
    """b_n(x) = sum C(n,i) q^{xi} b_i [x]^{n-i} from an exponent pair
    (q^x, [x]_q).  Works for exact scalars and for p-adic values alike."""
    acc = None
    for i in range(n + 1):
        term = betas[i] * (comb(n, i) * q_pow_x ** i) * bracket_x ** (n - i)
        acc = term if acc is None else acc + term
    return acc


def integer_pair(x: int, q):
    """Exponent pair (q^x, [x]_q) for an integer argument in base q."""
    if q == 1:
        raise ValueError("q = 1 has no exact q-bracket pair")
    return q ** x, (1 - q ** x) / (1 - q)


def subdivided_pair(a: int, g: int, q):
    """Exponent pair for the argument a/g in base q**g, computed without
    fractional powers: (q^a, [a]_q / [g]_q)."""
    return q ** a, (1 - q ** a) / (1 - q ** g)


# ----------------------------------------------------------------------
# character-twisted versions (exact mode; values must be rational)


def _rational_char_value(chi, a):
    v = chi(a).as_rational_sign()
    if v is None:
        raise ExactModeError(
            "character of order %d has irrational values; exact mode "
            "supports orders 1 and 2" % chi.order)
    return v


def twisted_qbernoulli_list(n_max, chi, q):
    """[b_{0,chi}, ..., b_{n_max,chi}] over the period f = modulus of chi:
    b_{n,chi} = [f]^{n-1} sum_{a=0}^{f-1} chi(a) b_{n,q^f}(a/f)."""
    f = chi.modulus
    if f == 1:
        return qbernoulli_list(n_max, q) if not isinstance(q, Fraction) \
            else qbernoulli_at(n_max, q)
    bigq = q ** f
    base = qbernoulli_list(n_max, bigq)
    bracket_f = (1 - q ** f) / (1 - q)
    out = []
    for n in range(n_max + 1):
        acc = None
        for a in range(f):
            c = _rational_char_value(chi, a)
            if c == 0:
                continue
            qa, br = subdivided_pair(a, f, q)
            term = qbernoulli_poly(n, base, qa, br) * c
            acc = term if acc is None else acc + term
        if acc is None:
            acc = ExactQScalar.from_field(q * 0)
        out.append(acc * bracket_f ** (n - 1))
    return out


def twisted_qbernoulli_poly(n, chi, q, q_pow_x, bracket_x, twisted=None):
    """b_{n,chi}(x) = sum C(n,k) q^{kx} b_{k,chi} [x]^{n-k}."""
    if twisted is None:
        twisted = twisted_qbernoulli_list(n, chi, q)
    return qbernoulli_poly(n, twisted, q_pow_x, bracket_x)


def _char_values_signed(chi, g, negate=False):
    """[chi(a)] or [chi(-a)] for a = 0..g-1 as Fractions."""
    return [_rational_char_value(chi, (-a) if negate else a)
            for a in range(g)]


def twisted_sum_side(n, chi, q, g, x: int, negate=False):
    """[g]^{n-1} sum_{a=0}^{g-1} chi(+-a) b_{n,q^g}((x -+ a... x+a)/g),
    assembled with the order of summation swapped so the expensive
    b_{i,q^g} factors multiply one small polynomial each.

    negate=True computes the mirrored form [g]^{n-1} sum chi(-a)
    b_{n,q^g}((x-a)/g)."""
    if chi.modulus > 1 and g % chi.modulus:
        raise ValueError("summation length %d is not a multiple of the "
                         "character period %d" % (g, chi.modulus))
    vals = _char_values_signed(chi, g, negate)
    base = qbernoulli_list(n, q ** g)
    bracket_g = (1 - q ** g) / (1 - q)
    one = q ** 0
    acc = None
    for i in range(n + 1):
        inner = None
        for a in range(g):
            c = vals[a]
            if c == 0:
                continue
            e = x - a if negate else x + a
            qe = q ** e
            br = (1 - qe) / (1 - q)
            t = (qe ** i) * br ** (n - i) * c
            inner = t if inner is None else inner + t
        if inner is None:
            continue
        term = base[i] * (comb(n, i) * inner) * bracket_g ** (i - 1)
        acc = term if acc is None else acc + term
    if acc is None:
        acc = ExactQScalar.from_field(one * 0)
    return acc


def distribution_identity(n, chi, q, x: int, g: int):
    """Both sides of the multiplication formula: the twisted polynomial
    b_{n,chi}(x) against the subdivided sum of plain polynomials over a
    period g (a multiple of the character period)."""
    lhs = twisted_qbernoulli_poly(n, chi, q, *integer_pair(x, q)) \
        if x != 0 else twisted_qbernoulli_list(n, chi, q)[n]
    rhs = twisted_sum_side(n, chi, q, g, x)
    return lhs, rhs


def sums_of_powers(chi, q, n_blocks: int, ell: int):
    """(sum_{k<Nf} chi(k) q^k [k]^ell,
        (b_{ell+1,chi}(Nf) - b_{ell+1,chi})/(ell+1)) -- both exact."""
    f = chi.modulus
    top = n_blocks * f
    one = q ** 0
    lhs_f = one * 0
    for k in range(top):
        c = _rational_char_value(chi, k)
        if c == 0:
            continue
        lhs_f = lhs_f + c * q ** k * ((1 - q ** k) / (1 - q)) ** ell
    lhs = ExactQScalar.from_field(lhs_f)
    tw = twisted_qbernoulli_list(ell + 1, chi, q)
    poly_at_top = twisted_qbernoulli_poly(ell + 1, chi, q,
                                          *integer_pair(top, q), twisted=tw)
    rhs = (poly_at_top - tw[ell + 1]) / (ell + 1)
    return lhs, rhs


# ----------------------------------------------------------------------
# p-adic mode


_PADIC_BETAS = {}


def qbernoulli_padic(n_max, q: QParameter, prec):
    """[b_0, ..., b_{n_max}] as PadicScalars, absolute precision >= prec.

    The recursion divides by q^n - 1 (valuation v(q-1) + v_p(n)); the
    working precision is inflated to absorb the accumulated loss."""
    key = (q.p, q.value, n_max, prec)
    hit = _PADIC_BETAS.get(key)
    if hit is not None:
        return hit
    p = q.p
    k = q.disk_valuation()
    work = prec + n_max * k + vp_factorial(max(n_max, 1), p) + 6
    one = PadicScalar(p, 0, 1, work)
    logq = padic_log(q.scalar(work + k + 4))
    betas = [PadicScalar.from_rational(q.value - 1, p, work) / logq]
    qi = [PadicScalar.from_rational(q.value ** i, p, work)
          for i in range(n_max + 1)]
    for n in range(1, n_max + 1):
        acc = PadicScalar.zero(p, work)
        for i in range(n):
            acc = acc + betas[i] * comb(n, i) * qi[i]
        num = (one if n == 1 else PadicScalar.zero(p, work)) - acc
        den = PadicScalar.from_rational(q.value ** n - 1, p, work)
        betas.append(num / den)
    for b in betas:
        if b.abs_prec < prec:
            raise PadicError("q-Bernoulli precision shortfall: got %d, "
                             "need %d" % (b.abs_prec, prec))
    _PADIC_BETAS[key] = betas
    return betas


def twisted_qbernoulli_padic(n_max, chi, q: QParameter, prec, embed):
    """Character-twisted q-Bernoulli numbers with values realized by the
    callable embed(a) (from characters.char_embedder); the result lives in
    Z_p or the cyclotomic value ring accordingly."""
    f = chi.modulus
    if f == 1:
        return qbernoulli_padic(n_max, q, prec)
    p = q.p
    base = qbernoulli_padic(n_max, q.base_power(f), prec + n_max + 2)
    work = base[0].abs_prec + 4
    bracket_f = PadicScalar.from_rational(
        (1 - q.value ** f) / (1 - q.value), p, work)
    vF = vp_fraction((1 - q.value ** f) / (1 - q.value), p)
    out = []
    for n in range(n_max + 1):
        acc = None
        for a in range(f):
            cv = chi(a)
            if cv.is_zero:
                continue
            qa = PadicScalar.from_rational(q.value ** a, p, work)
            br = PadicScalar.from_rational(
                (1 - q.value ** a) / (1 - q.value ** f), p, work)
            term = qbernoulli_poly(n, base, qa, br) * embed(a)
            acc = term if acc is None else acc + term
        if acc is None:
            acc = PadicScalar.zero(p, prec)
        out.append(acc * bracket_f ** (n - 1))
    return out


# ----------------------------------------------------------------------
# q-measure (finite-level Riemann sums) and the closed moment form


def qmeasure_moment_riemann(m: int, q: QParameter, level: int, prec: int
                            ) -> PadicScalar:
    """(1/[p^N]_q) sum_{a<p^N} [a]_q^m q^a at level N."""
    p = q.p
    n_terms = p ** level
    work = prec + level + q.disk_valuation() + 2
    one = PadicScalar(p, 0, 1, work)
    qs = q.scalar(work)
    acc = PadicScalar.zero(p, work)
    qa = one            # q^a
    br = PadicScalar.zero(p, work)  # [a]_q
    for a in range(n_terms):
        if m == 0:
            acc = acc + qa
        else:
            acc = acc + br ** m * qa
        br = br * qs + one
        qa = qa * qs
    bracket_level = PadicScalar.from_rational(
        (1 - q.value ** n_terms) / (1 - q.value), p, work)
    return acc / bracket_level


def qmeasure_moment_closed(m: int, q: QParameter, prec: int) -> PadicScalar:
    """(1/(1-q)^m) sum_i C(m,i)(-1)^i (i+1)/[i+1]_q."""
    p = q.p
    work = prec + vp_factorial(m + 1, p) + q.disk_valuation() + 2
    acc = PadicScalar.zero(p, work)
    for i in range(m + 1):
        br = PadicScalar.from_rational(
            (1 - q.value ** (i + 1)) / (1 - q.value), p, work)
        term = PadicScalar.from_rational((-1) ** i * comb(m, i) * (i + 1),
                                         p, work) / br
        acc = acc + term
    scale = PadicScalar.from_rational((1 - q.value) ** (-m), p, work)
    return acc * scale


# ----------------------------------------------------------------------
# generating-function oracles (complex |q| < 1)


def gf_qbernoulli(n: int, q: complex, trunc: int) -> complex:
    """n-th Taylor coefficient (times n!) of the q-difference form of the
    generating function; geometric convergence in trunc."""
    if abs(q) >= 1:
        raise ValueError("|q| < 1 required")
    logq = cmath.log(q)
    if n == 0:
        return (q - 1) / logq
    head = (q - 1) / ((1 - q) ** n * logq)
    s = 0j
    for k in range(trunc):
        br = (1 - q ** k) / (1 - q)
        s += q ** k * br ** (n - 1)
    return head - n * s


def gf_twisted_qbernoulli(n: int, chi, q: complex, trunc: int) -> complex:
    """Taylor-coefficient oracle for the character-twisted numbers; the
    trivial character reduces to the plain oracle."""
    if abs(q) >= 1:
        raise ValueError("|q| < 1 required")
    if chi.modulus == 1:
        return gf_qbernoulli(n, q, trunc)
    if n == 0:
        return 0j
    s = 0j
    for k in range(1, trunc):
        cv = chi(k)
        if cv.is_zero:
            continue
        br = (1 - q ** k) / (1 - q)
        s += cv.as_complex() * q ** k * br ** (n - 1)
    return -n * s


# ----------------------------------------------------------------------
# classical (q = 1) oracles


_CLASSICAL = [Fraction(1)]


def bernoulli_numbers(n_max):
    """B_0..B_n (B_1 = -1/2) by the defining recursion, exact."""
    while len(_CLASSICAL) <= n_max:
        m = len(_CLASSICAL)
        s = sum(comb(m + 1, r) * _CLASSICAL[r] for r in range(m))
        _CLASSICAL.append(-s / (m + 1))
    return _CLASSICAL[: n_max + 1]


def bernoulli_poly(n, x):
    """B_n(x); x may be a Fraction or a PadicScalar."""
    bs = bernoulli_numbers(n)
    acc = None
    for k in range(n + 1):
        term = x ** (n - k) * bs[k] * comb(n, k)
        acc = term if acc is None else acc + term
    return acc


def twisted_bernoulli_numbers(n_max, chi):
    """Classical character-twisted Bernoulli numbers, exact Fractions
    (character order at most 2)."""
    f = chi.modulus
    if f == 1:
        return bernoulli_numbers(n_max)
    out = []
    for n in range(n_max + 1):
        acc = Fraction(0)
        for a in range(f):
            c = _rational_char_value(chi, a)
            if c:
                acc += c * bernoulli_poly(n, Fraction(a, f))
        out.append(acc * Fraction(f) ** (n - 1))
    return out


def twisted_bernoulli_poly(n, chi, x):
    """B_{n,chi}(x) = sum C(n,k) B_{k,chi} x^{n-k}; x Fraction or p-adic."""
    bs = twisted_bernoulli_numbers(n, chi)
    acc = None
    for k in range(n + 1):
        term = x ** (n - k) * bs[k] * comb(n, k)
        acc = term if acc is None else acc + term
    return acc
