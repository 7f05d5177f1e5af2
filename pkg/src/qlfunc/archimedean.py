"""Complex-side evaluation of the q-deformed zeta and L-series (|q| < 1).

Because [n+x]_q tends to 1/(1-q) while q^{n+x} decays geometrically, the
defining sums converge for every s away from the pole, so no analytic
continuation machinery is needed: truncation with a geometric tail bound
is enough.  The one-variable/two-variable L-series of a trivial character
carries the same pole-correction term as the q-Hurwitz zeta; for a
nontrivial character the corrections cancel, giving back the literal
Dirichlet-type sum.

Character sums run over the representatives 0..F-1; this differs from the
1..F convention only in the trivial-character term a = 0 and is the choice
under which the subdivision, power-sum and interpolation identities hold
simultaneously (the same convention used by the q-Bernoulli module).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .qbernoulli import (ExactQScalar, qbernoulli_list, qbernoulli_poly,
                         twisted_qbernoulli_list, twisted_qbernoulli_poly)


class ConvergenceError(ArithmeticError):
    """The requested series is outside its certified convergence regime."""


@dataclass(frozen=True)
class EvalParams:
    q: complex
    trunc: int = 2000
    tol: float = 1e-13

    def __post_init__(self):
        if abs(self.q) >= 1:
            raise ValueError("|q| < 1 strictly required")
        if self.trunc < 1:
            raise ValueError("truncation must be >= 1")


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    tail_bound: float
    terms_used: int


def _cpow(base: complex, expo: complex) -> complex:
    """Principal-branch power with the 0**0 = 1 convention."""
    if base == 0:
        if expo == 0:
            return 1.0 + 0j
        raise ZeroDivisionError("0 raised to a nonzero complex power")
    return cmath.exp(expo * cmath.log(base))


def _qbracket_c(x, q: complex) -> complex:
    return (1 - _cpow(q, x)) / (1 - q)


def _geometric_sum(params: EvalParams, term_at, start: int) -> SeriesValue:
    """Sum term_at(n) for n >= start with an empirical geometric tail."""
    q = abs(params.q)
    acc = 0j
    recent = []
    n = start
    for n in range(start, start + params.trunc):
        t = term_at(n)
        acc += t
        recent.append(abs(t))
        if len(recent) > 4:
            recent.pop(0)
        # zero character values punch holes in the term sequence, so only
        # a run of small magnitudes counts as convergence
        if n > start + 4 and max(recent) < params.tol * (1 - q):
            break
    tail = max(recent) * q / (1 - q)
    return SeriesValue(acc, tail, n - start + 1)


def _pole_correction(s: complex, q: complex, F: int = 1) -> complex:
    """-(1/(s-1)) (1-q)^s / (F log q), the analytic piece carrying the
    simple pole at s = 1; F > 1 gives the arithmetic-progression version
    (residue (q-1)/(F log q))."""
    return -_cpow(1 - q, s) / ((s - 1) * F * cmath.log(q))


def q_hurwitz_zeta(s: complex, x, params: EvalParams) -> SeriesValue:
    """sum_{n>=0} q^{n+x}/[n+x]^s plus the pole correction; x in (0, 1]."""
    if s == 1:
        raise ConvergenceError("simple pole at s = 1")
    x = float(x)
    if not 0 < x <= 1:
        raise ValueError("x must lie in (0, 1]")
    q = params.q

    def term(n):
        return _cpow(q, n + x) / _cpow(_qbracket_c(n + x, q), s)

    body = _geometric_sum(params, term, 0)
    return SeriesValue(body.value + _pole_correction(s, q),
                       body.tail_bound, body.terms_used)


def qL_two_variable(s: complex, x, chi, params: EvalParams) -> SeriesValue:
    """Two-variable L-series sum_n chi(n) q^{n+x}/[n+x]^s, with the pole
    correction when chi is trivial.  The n = 0 term belongs to the sum for
    trivial chi and x > 0 (representatives 0..f-1)."""
    trivial = chi.order == 1
    if trivial and s == 1:
        raise ConvergenceError("simple pole at s = 1 for the trivial "
                               "character")
    x = float(x)
    q = params.q
    start = 0 if (trivial and x > 0) or not trivial else 1

    def term(n):
        cv = chi(n)
        if cv.is_zero:
            return 0j
        return cv.as_complex() * _cpow(q, n + x) / \
            _cpow(_qbracket_c(n + x, q), s)

    body = _geometric_sum(params, term, start)
    corr = _pole_correction(s, q) if trivial else 0j
    return SeriesValue(body.value + corr, body.tail_bound, body.terms_used)


def qL_decomposed(s: complex, x, chi, params: EvalParams) -> SeriesValue:
    """[f]^{-s} sum_{a=0}^{f-1} chi(a) zeta_{q^f}(s, (a+x)/f)."""
    f = chi.modulus
    q = params.q
    sub = EvalParams(q ** f, params.trunc, params.tol)
    acc = 0j
    tail = 0.0
    terms = 0
    for a in range(f):
        cv = chi(a)
        if cv.is_zero:
            continue
        z = q_hurwitz_zeta(s, (a + float(x)) / f, sub)
        acc += cv.as_complex() * z.value
        tail += abs(cv.as_complex()) * z.tail_bound
        terms = max(terms, z.terms_used)
    scale = _cpow(_qbracket_c(f, q), -s)
    return SeriesValue(scale * acc, abs(scale) * tail, terms)


def partial_q_zeta(s: complex, a, F: int, params: EvalParams) -> SeriesValue:
    """sum over m = a mod F of q^m/[m]^s plus the level-F pole correction;
    a may be real (used as a + x), with 0 < a <= F."""
    if s == 1:
        raise ConvergenceError("simple pole at s = 1")
    a = float(a)
    if not 0 < a <= F:
        raise ValueError("need 0 < a <= F")
    q = params.q

    def term(n):
        y = a + n * F
        return _cpow(q, y) / _cpow(_qbracket_c(y, q), s)

    body = _geometric_sum(params, term, 0)
    return SeriesValue(body.value + _pole_correction(s, q, F),
                       body.tail_bound, body.terms_used)


def qL_from_partials(s: complex, x, chi, F: int, params: EvalParams
                     ) -> SeriesValue:
    """Reassembly sum_a chi(a) H_q(s, a+x, F) for nontrivial chi mod F."""
    if chi.order == 1:
        raise ConvergenceError("partial-zeta reassembly needs a "
                               "nontrivial character")
    if F % chi.modulus:
        raise ValueError("F must be a multiple of the character modulus")
    acc = 0j
    tail = 0.0
    terms = 0
    for a in range(F):
        cv = chi(a)
        if cv.is_zero:
            continue
        h = partial_q_zeta(s, a + float(x), F, params)
        acc += cv.as_complex() * h.value
        tail += h.tail_bound
        terms = max(terms, h.terms_used)
    return SeriesValue(acc, tail, terms)


# ----------------------------------------------------------------------
# the binomial expansion form


def _qbernoulli_complex(n_max: int, q: complex):
    """Floating-point q-Bernoulli numbers by the defining recursion."""
    from math import comb
    betas = [(q - 1) / cmath.log(q)]
    for n in range(1, n_max + 1):
        acc = 0j
        for i in range(n):
            acc += comb(n, i) * q ** i * betas[i]
        num = (1 if n == 1 else 0) - acc
        betas.append(num / (q ** n - 1))
    return betas


GUARD_RATIO = 0.9


def qL_expansion(s: complex, x, chi, F: int, params: EvalParams,
                 max_m: int = 200) -> SeriesValue:
    """Binomial-series form of the two-variable L-value.  A domain guard
    requires |q^{a+x}[F]_q/[a+x]_q| < 0.9 for every summand; the series is
    additionally abandoned if terms stop shrinking."""
    if s == 1:
        raise ConvergenceError("expansion has the pole factor 1/(s-1)")
    q = params.q
    if F % max(chi.modulus, 1):
        raise ValueError("F must be a multiple of the character modulus")
    brF = _qbracket_c(F, q)
    betas = _qbernoulli_complex(max_m, q ** F)
    acc = 0j
    worst_tail = 0.0
    terms = 0
    for a in range(F):
        cv = chi(a)
        if cv.is_zero:
            continue
        y = a + float(x)
        bry = _qbracket_c(y, q)
        ratio = _cpow(q, y) * brF / bry
        if abs(ratio) >= GUARD_RATIO:
            raise ConvergenceError(
                "expansion ratio %.3f at a=%d outside the guarded region"
                % (abs(ratio), a))
        binom = 1 + 0j
        inner = 0j
        last = float("inf")
        grew = 0
        m = 0
        for m in range(max_m):
            if m:
                binom *= (1 - s - (m - 1)) / m
            t = binom * betas[m] * ratio ** m
            inner += t
            mag = abs(t)
            if mag < params.tol and m > 4:
                break
            grew = grew + 1 if mag > last else 0
            if grew > 8:
                raise ConvergenceError("expansion terms are growing; "
                                       "outside the convergent regime")
            last = mag
        terms = max(terms, m + 1)
        worst_tail = max(worst_tail, abs(t))
        acc += cv.as_complex() * _cpow(bry, 1 - s) * inner
    value = acc / ((s - 1) * brF)
    return SeriesValue(value, worst_tail, terms)


def qL_expansion_exact(n: int, chi, q, F: int, x: int) -> ExactQScalar:
    """The expansion at s = 1-n, where the binomial sum terminates: an
    exact polynomial identity (value -b_{n,chi}(x)/n in exact mode)."""
    from math import comb
    if n < 1:
        raise ValueError("n >= 1 required")
    if F % max(chi.modulus, 1):
        raise ValueError("F must be a multiple of the character modulus")
    betas = qbernoulli_list(n, q ** F)
    one = q ** 0
    brF = (1 - q ** F) / (1 - q)
    acc = None
    for m in range(n + 1):
        inner = None
        for a in range(F):
            cv = chi(a).as_rational_sign()
            if cv is None:
                raise ConvergenceError("exact mode needs character order "
                                       "<= 2")
            if cv == 0:
                continue
            bry = (1 - q ** (a + x)) / (1 - q)
            t = (q ** ((a + x) * m)) * bry ** (n - m) * cv
            inner = t if inner is None else inner + t
        if inner is None:
            continue
        term = betas[m] * (comb(n, m) * inner) * brF ** m
        acc = term if acc is None else acc + term
    if acc is None:
        acc = ExactQScalar.from_field(one * 0)
    return acc * (one * Fraction(-1, n)) / brF


def qL_at_one(x, chi, F: int, params: EvalParams, max_m: int = 200
              ) -> SeriesValue:
    """Value at s = 1 for nontrivial chi:
    (1/[F]) sum_a chi(a) {-b_{0,q^F} log[a+x] +
                          sum_{m>=1} ((-1)^m/m) b_{m,q^F} ratio^m}."""
    if chi.order == 1:
        raise ConvergenceError("s = 1 is the pole of the trivial character")
    q = params.q
    brF = _qbracket_c(F, q)
    betas = _qbernoulli_complex(max_m, q ** F)
    beta0 = betas[0]
    acc = 0j
    worst = 0.0
    terms = 0
    for a in range(F):
        cv = chi(a)
        if cv.is_zero:
            continue
        y = a + float(x)
        bry = _qbracket_c(y, q)
        ratio = _cpow(q, y) * brF / bry
        if abs(ratio) >= GUARD_RATIO:
            raise ConvergenceError("ratio %.3f outside the guarded region"
                                   % abs(ratio))
        inner = -beta0 * cmath.log(bry)
        t = 0j
        for m in range(1, max_m):
            t = (-1) ** m / m * betas[m] * ratio ** m
            inner += t
            if abs(t) < params.tol and m > 4:
                break
        terms = max(terms, m)
        worst = max(worst, abs(t))
        acc += cv.as_complex() * inner
    return SeriesValue(acc / brF, worst, terms)
