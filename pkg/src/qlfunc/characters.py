"""Dirichlet characters mod f with exact root-of-unity values.

A character is stored through its images on a fixed generating set of
(Z/fZ)^*; values are CharValue objects (symbolic roots of unity), so the
group algebra is exact.  Embedding into Z_p (via Teichmuller lifts, when
the value order divides p - 1) or into the unramified cyclotomic value
ring is a separate, explicit step.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .padic import (CycloScalar, PadicError, PadicScalar, p_star,
                    teichmuller)


def _factorize(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n):
    out = 1
    for p, e in _factorize(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def _primitive_root(pe, p, e):
    """Smallest primitive root modulo p**e (p odd)."""
    phi = (p - 1) * p ** (e - 1)
    fac = [f for f, _ in _factorize(phi)]
    g = 2
    while True:
        if gcd(g, pe) == 1 and all(pow(g, phi // f, pe) != 1 for f in fac):
            return g
        g += 1


def _crt_lift(residue, modulus, total):
    """x = residue mod modulus, x = 1 mod total/modulus."""
    other = total // modulus
    if other == 1:
        return residue % total
    inv = pow(other, -1, modulus)
    return (1 + other * ((residue - 1) * inv % modulus)) % total


_UNIT_GROUP_CACHE = {}


def unit_group(f):
    """Generators and their orders for (Z/fZ)^*, deterministic."""
    if f in _UNIT_GROUP_CACHE:
        return _UNIT_GROUP_CACHE[f]
    gens, orders = [], []
    for p, e in _factorize(f):
        pe = p ** e
        if p == 2:
            if e == 2:
                gens.append(_crt_lift(3, 4, f))
                orders.append(2)
            elif e >= 3:
                gens.append(_crt_lift(pe - 1, pe, f))
                orders.append(2)
                gens.append(_crt_lift(5, pe, f))
                orders.append(2 ** (e - 2))
        else:
            gens.append(_crt_lift(_primitive_root(pe, p, e), pe, f))
            orders.append((p - 1) * p ** (e - 1))
    _UNIT_GROUP_CACHE[f] = (tuple(gens), tuple(orders))
    return _UNIT_GROUP_CACHE[f]


def _dlog_tables(f):
    """For each generator, the table power -> exponent (small moduli)."""
    gens, orders = unit_group(f)
    tables = []
    for g, s in zip(gens, orders):
        t, x = {}, 1
        for k in range(s):
            t[x] = k
            x = x * g % f
        tables.append(t)
    return tables


_DECOMP_CACHE = {}


def _unit_decomposition(f):
    """Map each unit a mod f to its exponent vector on the generators."""
    if f in _DECOMP_CACHE:
        return _DECOMP_CACHE[f]
    gens, orders = unit_group(f)
    decomp = {1 % f: tuple(0 for _ in gens)}
    frontier = [(1 % f, tuple(0 for _ in gens))]
    # breadth-first closure of the generator action
    seen = set(decomp)
    while frontier:
        a, vec = frontier.pop()
        for i, g in enumerate(gens):
            b = a * g % f
            if b not in seen:
                w = list(vec)
                w[i] = (w[i] + 1) % orders[i]
                decomp[b] = tuple(w)
                seen.add(b)
                frontier.append((b, tuple(w)))
    _DECOMP_CACHE[f] = decomp
    return decomp


class CharValue:
    """A root of unity exp(2 pi i k/m) in lowest terms, or zero."""

    __slots__ = ("k", "m")

    def __init__(self, k, m):
        if m <= 0:
            raise ValueError("order must be positive")
        k %= m
        g = gcd(k, m)
        self.k, self.m = k // g, m // g

    ZERO = None  # set below

    @classmethod
    def one(cls):
        return cls(0, 1)

    @property
    def is_zero(self):
        return self.m == 0

    @property
    def is_one(self):
        return self.m == 1 and self.k == 0

    def order(self):
        return self.m

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return CharValue.ZERO
        m = self.m * other.m // gcd(self.m, other.m)
        return CharValue(self.k * (m // self.m) + other.k * (m // other.m), m)

    def __pow__(self, n):
        if self.is_zero:
            return self if n > 0 else CharValue.one()
        return CharValue(self.k * n, self.m)

    def conj(self):
        return self ** (-1)

    def __eq__(self, other):
        return isinstance(other, CharValue) and \
            (self.k, self.m) == (other.k, other.m)

    def __hash__(self):
        return hash((self.k, self.m))

    def as_rational_sign(self):
        """+1/-1/0 for values of order <= 2, else None."""
        if self.is_zero:
            return Fraction(0)
        if self.m == 1:
            return Fraction(1)
        if self.m == 2:
            return Fraction(-1)
        return None

    def as_complex(self):
        import cmath
        if self.is_zero:
            return 0j
        return cmath.exp(2j * cmath.pi * self.k / self.m)

    def __repr__(self):
        if self.is_zero:
            return "CharValue(0)"
        return "CharValue(zeta_%d^%d)" % (self.m, self.k)


class _ZeroValue(CharValue):
    __slots__ = ()

    def __init__(self):
        self.k, self.m = 0, 0

    @property
    def is_zero(self):
        return True


CharValue.ZERO = _ZeroValue()


class DirichletCharacter:
    """Character mod f given by exponents on the unit-group generators.

    exps[i] encodes chi(g_i) = zeta_M ** exps[i] with M the exponent of
    (Z/fZ)^* (so exps[i] must be a multiple of M/order(g_i))."""

    __slots__ = ("modulus", "exps", "_conductor", "_values")

    def __init__(self, modulus, exps):
        self.modulus = modulus
        gens, orders = unit_group(modulus)
        if len(exps) != len(gens):
            raise ValueError("need one exponent per generator")
        M = self._group_exponent()
        for e, s in zip(exps, orders):
            if (e * s) % M:
                raise ValueError("exponent %d invalid for generator of "
                                 "order %d" % (e, s))
        self.exps = tuple(e % M for e in exps) if M else tuple(exps)
        self._conductor = None
        self._values = None

    def _group_exponent(self):
        _, orders = unit_group(self.modulus)
        M = 1
        for s in orders:
            M = M * s // gcd(M, s)
        return M

    # -- evaluation

    def _table(self):
        if self._values is None:
            M = self._group_exponent()
            decomp = _unit_decomposition(self.modulus)
            vals = {}
            _, orders = unit_group(self.modulus)
            for a, vec in decomp.items():
                k = sum(x * e for x, e in zip(vec, self.exps)) % M
                vals[a] = CharValue(k, M)
            self._values = vals
        return self._values

    def __call__(self, a) -> CharValue:
        a = a % self.modulus
        if self.modulus == 1:
            return CharValue.one()
        if gcd(a, self.modulus) != 1:
            return CharValue.ZERO
        return self._table()[a]

    # -- structure

    @property
    def order(self):
        M = self._group_exponent()
        g = M
        for e in self.exps:
            g = gcd(g, e)
        return M // g if M else 1

    @property
    def is_trivial(self):
        return all(e == 0 for e in self.exps)

    @property
    def conductor(self):
        if self._conductor is None:
            self._conductor = self._compute_conductor()
        return self._conductor

    def _compute_conductor(self):
        if self.is_trivial:
            return 1
        f = self.modulus
        for d in sorted(_divisors(f)):
            ok = True
            for a in range(1, f + 1):
                if a % d == 1 % d and gcd(a, f) == 1 and not self(a).is_one:
                    ok = False
                    break
            if ok:
                return d
        return f

    @property
    def is_primitive(self):
        return self.conductor == self.modulus

    def primitive_part(self) -> "DirichletCharacter":
        """The character mod conductor inducing this one."""
        d = self.conductor
        if d == self.modulus:
            return self
        return self.restrict(d)

    def restrict(self, d):
        """Character mod d (d divisible by the conductor) with the same
        values on units that lift to units mod modulus."""
        if d % self.conductor:
            raise ValueError("modulus %d is smaller than the conductor" % d)
        gens, orders = unit_group(d)
        M = 1
        for s in orders:
            M = M * s // gcd(M, s)
        exps = []
        for g, s in zip(gens, orders):
            a = self._lift_unit(g, d)
            v = self(a)
            if v.is_zero:
                raise AssertionError("unit lift failed")
            # v = zeta_{v.m}^{v.k}; express in zeta_M
            exps.append(v.k * (M // v.m) % M)
        return DirichletCharacter(d, exps)

    def _lift_unit(self, b, d):
        """A unit mod modulus congruent to b mod d."""
        f = self.modulus
        a = b % d if b % d else d
        while gcd(a, f) != 1:
            a += d
        return a

    def extend(self, F) -> "DirichletCharacter":
        """The character mod F (a multiple of the modulus) induced by this
        one: same values on units of F, zero elsewhere."""
        if F % self.modulus:
            raise ValueError("extension modulus must be a multiple")
        gens, orders = unit_group(F)
        M = 1
        for s in orders:
            M = M * s // gcd(M, s)
        exps = []
        for g in gens:
            v = self(g)
            exps.append(v.k * (M // v.m) % M)
        return DirichletCharacter(F, exps)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        f1, f2 = self.modulus, other.modulus
        F = f1 * f2 // gcd(f1, f2)
        a, b = self.extend(F), other.extend(F)
        gens, orders = unit_group(F)
        M = 1
        for s in orders:
            M = M * s // gcd(M, s)
        return DirichletCharacter(F, [(x + y) % M
                                      for x, y in zip(a.exps, b.exps)])

    def __pow__(self, n):
        M = self._group_exponent()
        return DirichletCharacter(self.modulus,
                                  [(e * n) % M for e in self.exps])

    def __eq__(self, other):
        return isinstance(other, DirichletCharacter) and \
            self.modulus == other.modulus and self.exps == other.exps

    def __hash__(self):
        return hash((self.modulus, self.exps))

    def __repr__(self):
        return "DirichletCharacter(mod %d, exps=%r, order %d, conductor %d)" \
            % (self.modulus, list(self.exps), self.order, self.conductor)


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def trivial_character(f=1):
    gens, _ = unit_group(f)
    return DirichletCharacter(f, [0] * len(gens))


def enumerate_characters(f):
    """All phi(f) characters mod f in a fixed lexicographic order."""
    gens, orders = unit_group(f)
    M = 1
    for s in orders:
        M = M * s // gcd(M, s)
    out = []

    def rec(i, acc):
        if i == len(gens):
            out.append(DirichletCharacter(f, list(acc)))
            return
        step = M // orders[i]
        for k in range(orders[i]):
            rec(i + 1, acc + [k * step])

    rec(0, [])
    return out


def quadratic_character(f):
    """The unique order-2 character mod f (f in {3, 4, ...} cyclic cases)."""
    for chi in enumerate_characters(f):
        if chi.order == 2:
            return chi
    raise ValueError("no quadratic character mod %d" % f)


def teichmuller_character(p) -> DirichletCharacter:
    """The character mod p* whose value at a is the root of unity
    congruent to a mod p (mod 4 when p = 2)."""
    ps = p_star(p)
    gens, orders = unit_group(ps)
    if p == 2:
        return DirichletCharacter(4, [1])
    # single generator g (smallest primitive root); w(g) = zeta_{p-1}
    return DirichletCharacter(p, [1])


def twist_teichmuller(chi: DirichletCharacter, n: int, p: int
                      ) -> DirichletCharacter:
    """chi * w**(-n) as a character mod lcm(f_chi, p*)."""
    w = teichmuller_character(p)
    return chi * (w ** (-n))


# ----------------------------------------------------------------------
# p-adic embeddings


def embed_char_value(v: CharValue, p: int, prec: int, ambient_order=None):
    """Realize a root-of-unity value in Z_p or in the cyclotomic value
    ring.  ambient_order fixes the codomain so that sums over several
    values of one character live in one ring."""
    m = ambient_order if ambient_order is not None else \
        (1 if v.is_zero else v.m)
    if m % max(v.m, 1) and not v.is_zero:
        raise PadicError("value of order %d outside ambient order %d"
                         % (v.m, m))
    if m > 2 and gcd(m, p) != 1:
        # +-1 are rational for every p; higher orders need p coprime
        raise PadicError("value order %d is not coprime to p = %d" % (m, p))
    d = gcd(m, p - 1) if p > 2 else gcd(m, 2)
    if m == d:
        # Teichmuller realization inside Z_p
        if v.is_zero:
            return PadicScalar.zero(p, prec)
        if v.m == 1:
            return PadicScalar(p, 0, 1, prec)
        root = _teich_root_of_unity(v.m, p, prec)
        return root ** v.k
    # cyclotomic realization
    g = CycloScalar.generator(m, p, prec)
    if v.is_zero:
        return CycloScalar.from_padic(PadicScalar.zero(p, prec), m)
    return g ** (v.k * (m // v.m))


def _teich_root_of_unity(m, p, prec):
    """The canonical m-th root of unity in Z_p (m | p-1): omega(r)**((p-1)/m)
    with r the smallest primitive root mod p."""
    if p == 2:
        return PadicScalar(p, 0, (2 ** prec) - 1, prec)  # -1
    r = _primitive_root(p, p, 1)
    return teichmuller(pow(r, (p - 1) // m, p), p, prec)


def twisted_embedder(chi: DirichletCharacter, n: int, p: int, prec: int):
    """p-adic realization of the primitive twist chi * w**(-n), decomposed
    as chi(b) * omega(b)**(-n) on unit lifts b.  Keeping the Teichmuller
    part a Z_p scalar makes the codomain chi's own value ring, so results
    are directly comparable with sums that twist by omega termwise."""
    chin = twist_teichmuller(chi, n, p).primitive_part()
    L = chi.modulus * p_star(p) // gcd(chi.modulus, p_star(p))
    fn = chin.modulus
    base = char_embedder(chi, p, prec)
    cache = {}

    def ev(a):
        a = a % fn if fn > 1 else 0
        if a in cache:
            return cache[a]
        if fn > 1 and gcd(a, fn) != 1:
            out = base(0) * 0 if base.cyclotomic else \
                PadicScalar.zero(p, prec)
            cache[a] = out
            return out
        b = a if a else 1
        while gcd(b, L) != 1:
            b += fn
        out = base(b) * (teichmuller(b, p, prec).inverse() ** (n % (
            2 if p == 2 else p - 1)))
        cache[a] = out
        return out

    ev.order = base.order
    ev.cyclotomic = base.cyclotomic
    ev.character = chin
    return ev


def char_embedder(chi: DirichletCharacter, p: int, prec: int):
    """A function a -> chi(a) realized p-adically, with a fixed codomain
    (Z_p when the order allows, else one cyclotomic ring)."""
    m = chi.order
    if m > 2 and gcd(m, p) != 1:
        raise PadicError("character order %d not coprime to p" % m)
    d = gcd(m, p - 1) if p > 2 else gcd(m, 2)
    cache = {}

    def ev(a):
        a = a % chi.modulus
        if a not in cache:
            cache[a] = embed_char_value(chi(a), p, prec, ambient_order=m)
        return cache[a]

    ev.order = m
    ev.cyclotomic = (m != d)
    return ev
