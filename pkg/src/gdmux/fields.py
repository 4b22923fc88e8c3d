"""Exact arithmetic in prime fields GF(p), extension fields GF(p^m), and
the Gaussian-integer ring GI(p^m) = GF(p^m)[j] / (j^2 + 1).

A FieldSpec fixes the odd prime p, the extension degree m and a monic
irreducible polynomial over GF(p), kept as a coefficient tuple with the
constant term first.  Elements are identified with their canonical
integer encoding ``enc(x) = sum(coeffs[i] * p**i)``, a bijection onto
[0, p^m).  Multiplication runs on discrete log/antilog tables built once
per field; every operation is exact integer arithmetic, no floats.

GI(q) is a field exactly when -1 is a quadratic non-residue in GF(q).
For p = 4k+1 it degenerates to a ring with zero divisors; inversion then
raises NotInvertibleError instead of returning garbage.

All values are immutable after construction and all operations are pure,
so concurrent use needs no synchronisation.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import (
    EvenCharacteristicError,
    NoSuchOrderError,
    NotInvertibleError,
    NotPrimeError,
    SpecMismatchError,
)

#: Desk-scale cap on the field size; keeps table construction cheap.
MAX_FIELD_SIZE = 1 << 20


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (fine at desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _distinct_prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p).  Coefficient lists, constant term first.

def _poly_mulmod(a, b, fred, p):
    """(a * b) mod f, where fred holds the first m coefficients of the
    monic modulus f (leading 1 implied)."""
    m = len(a)
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(2 * m - 2, m - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            off = i - m
            for t in range(m):
                prod[off + t] = (prod[off + t] - c * fred[t]) % p
    return prod[:m]


def _poly_powmod(a, e, fred, p):
    m = len(a)
    result = [1] + [0] * (m - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, fred, p)
        base = _poly_mulmod(base, base, fred, p)
        e >>= 1
    return result


def _poly_rem(a, g, p):
    """Remainder of a modulo the monic polynomial g."""
    a = list(a)
    dg = len(g) - 1
    for i in range(len(a) - 1, dg - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            off = i - dg
            for t in range(dg):
                a[off + t] = (a[off + t] - c * g[t]) % p
    return a[:dg]


def _is_irreducible(f, p):
    """Exhaustive trial division by every monic divisor candidate of
    degree up to deg(f)/2; plenty fast at desk scale."""
    m = len(f) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            g = list(lower) + [1]
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def _canonical_irreducible(p, m):
    """Monic degree-m irreducible with the smallest integer encoding
    (coefficients read constant-term-first as base-p digits)."""
    if m == 1:
        return (0, 1)
    for enc in range(p ** m):
        coeffs, e = [], enc
        for _ in range(m):
            coeffs.append(e % p)
            e //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------

class FieldSpec:
    """A concrete GF(p^m): modulus, degree, irreducible polynomial, and
    the log/antilog tables all element arithmetic runs on.

    Two specs compare equal iff they have the same (p, m, irreducible),
    so fields reconstructed from a file header interoperate with the
    originals.
    """

    __slots__ = ('p', 'm', 'irreducible', 'order', '_exp', '_log',
                 '_np_exp', '_np_log', '_np_e2c', '_np_ppow', '_hash')

    def __init__(self, p: int, m: int = 1, irreducible=None):
        if not isinstance(p, int) or not isinstance(m, int):
            raise TypeError("p and m must be integers")
        if p == 2:
            raise EvenCharacteristicError(
                "characteristic 2 unsupported: cas() divides by 2 and 2j")
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p ** m > MAX_FIELD_SIZE:
            raise ValueError(f"field size {p}^{m} exceeds desk-scale cap "
                             f"{MAX_FIELD_SIZE}")
        if irreducible is None:
            irreducible = _canonical_irreducible(p, m)
        irreducible = tuple(int(c) for c in irreducible)
        if len(irreducible) != m + 1 or irreducible[-1] != 1:
            raise ValueError("irreducible must be monic of degree m")
        if any(not 0 <= c < p for c in irreducible):
            raise ValueError("irreducible coefficients out of range")
        if m == 1:
            if irreducible != (0, 1):
                raise ValueError("degree-1 placeholder polynomial must be x")
        elif not _is_irreducible(list(irreducible), p):
            raise ValueError(f"{irreducible} is reducible over GF({p})")

        self.p = p
        self.m = m
        self.irreducible = irreducible
        self.order = p ** m
        self._hash = hash((p, m, irreducible))
        self._build_tables()

    # -- construction -------------------------------------------------------

    def _build_tables(self):
        p, m, q = self.p, self.m, self.order
        fred = self.irreducible[:m]
        one = [1] + [0] * (m - 1)

        def decode(e):
            c = []
            for _ in range(m):
                c.append(e % p)
                e //= p
            return c

        def encode(c):
            e = 0
            for d in reversed(c):
                e = e * p + d
            return e

        # smallest-encoding generator of the multiplicative group
        primes = _distinct_prime_factors(q - 1)
        gen = None
        for cand in range(2, q):
            a = decode(cand)
            if all(_poly_powmod(a, (q - 1) // r, fred, p) != one
                   for r in primes):
                gen = a
                break
        assert gen is not None

        exp = [0] * (2 * (q - 1))
        x = one
        for i in range(q - 1):
            exp[i] = encode(x)
            x = _poly_mulmod(x, gen, fred, p)
        assert x == one
        exp[q - 1:] = exp[:q - 1]
        log = [0] * q
        for i in range(q - 1):
            log[exp[i]] = i

        self._exp = exp
        self._log = log
        self._np_exp = np.array(exp, dtype=np.int64)
        self._np_log = np.array(log, dtype=np.int64)
        ar = np.arange(q, dtype=np.int64)
        e2c = np.empty((q, m), dtype=np.int64)
        for i in range(m):
            e2c[:, i] = ar % p
            ar //= p
        self._np_e2c = e2c
        self._np_ppow = p ** np.arange(m, dtype=np.int64)

    # -- scalar arithmetic on encodings -------------------------------------

    def add_enc(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        out, mult = 0, 1
        while a or b:
            out += ((a % p) + (b % p)) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub_enc(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a - b) % p
        out, mult = 0, 1
        while a or b:
            out += ((a % p) - (b % p)) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg_enc(self, a: int) -> int:
        return self.sub_enc(0, a)

    def mul_enc(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv_enc(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("cannot invert zero")
        return self._exp[self.order - 1 - self._log[a]]

    def pow_enc(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("cannot invert zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def order_of_enc(self, a: int) -> int:
        if a == 0:
            raise NoSuchOrderError("zero has no multiplicative order")
        n = self.order - 1
        return n // math.gcd(n, self._log[a])

    # -- vectorised arithmetic on int64 encoding arrays ---------------------

    def vec_mul(self, a, b):
        la = self._np_log[a]
        lb = self._np_log[b]
        out = self._np_exp[la + lb]
        return np.where((a == 0) | (b == 0), 0, out)

    def vec_add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        c = self._np_e2c[a] + self._np_e2c[b]
        return (c % self.p) @ self._np_ppow

    def vec_neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        return ((-self._np_e2c[a]) % self.p) @ self._np_ppow

    def vec_sum(self, a, axis):
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        c = self._np_e2c[a].sum(axis=axis)
        return (c % self.p) @ self._np_ppow

    def vec_sum_diff(self, pos, neg, axis):
        """sum(pos) - sum(neg) along axis, in one reduction."""
        if self.m == 1:
            return (pos.sum(axis=axis) - neg.sum(axis=axis)) % self.p
        c = self._np_e2c[pos].sum(axis=axis) - self._np_e2c[neg].sum(axis=axis)
        return (c % self.p) @ self._np_ppow

    def vec_sum2(self, a, b, axis):
        """sum(a) + sum(b) along axis, in one reduction."""
        if self.m == 1:
            return (a.sum(axis=axis) + b.sum(axis=axis)) % self.p
        c = self._np_e2c[a].sum(axis=axis) + self._np_e2c[b].sum(axis=axis)
        return (c % self.p) @ self._np_ppow

    def vec_pow(self, a, e):
        """a**e elementwise for e >= 1 (scalar or array); the exponent is
        reduced mod p^m - 1 and zeros stay zero."""
        n = self.order - 1
        out = self._np_exp[(self._np_log[a] * (e % n)) % n]
        return np.where(a == 0, 0, out)

    # -- element constructors ------------------------------------------------

    def element(self, enc: int) -> 'FieldElement':
        return FieldElement(self, enc)

    def from_coeffs(self, coeffs) -> 'FieldElement':
        coeffs = list(coeffs)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients")
        enc = 0
        for d in reversed(coeffs):
            if not 0 <= d < self.p:
                raise ValueError("coefficient out of range")
            enc = enc * self.p + d
        return FieldElement(self, enc)

    @property
    def zero(self) -> 'FieldElement':
        return FieldElement(self, 0)

    @property
    def one(self) -> 'FieldElement':
        return FieldElement(self, 1)

    def elements(self):
        """Iterate over all field elements in encoding order."""
        for enc in range(self.order):
            yield FieldElement(self, enc)

    def gaussian(self, re=0, im=0) -> 'GaussianElement':
        """Build re + j*im; ints are taken as encodings."""
        if not isinstance(re, FieldElement):
            re = self.element(re)
        if not isinstance(im, FieldElement):
            im = self.element(im)
        return GaussianElement(re, im)

    # -- misc ----------------------------------------------------------------

    def poly_encoding(self) -> int:
        """The irreducible read constant-term-first as base-p digits."""
        e = 0
        for d in reversed(self.irreducible):
            e = e * self.p + d
        return e

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.irreducible) == \
               (other.p, other.m, other.irreducible)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


_FIELD_CACHE: dict = {}


def make_field(p: int, m: int = 1) -> FieldSpec:
    """The canonical GF(p^m): its irreducible polynomial is the monic
    degree-m irreducible with the smallest integer encoding, so repeated
    calls (and independent runs) agree bit for bit."""
    key = (p, m)
    spec = _FIELD_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p, m)
        _FIELD_CACHE[key] = spec
    return spec


class FieldElement:
    """An element of GF(p^m), stored by its canonical integer encoding.

    Supports +, -, *, /, ** and mixes with plain ints, which are lifted
    into the prime subfield (i.e. taken mod p).
    """

    __slots__ = ('spec', 'enc')

    def __init__(self, spec: FieldSpec, enc: int):
        if not 0 <= enc < spec.order:
            raise ValueError(f"encoding {enc} out of range for {spec!r}")
        self.spec = spec
        self.enc = enc

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatchError(
                    f"mixed fields: {self.spec!r} vs {other.spec!r}")
            return other.enc
        if isinstance(other, int):
            return other % self.spec.p
        return None

    @property
    def coeffs(self):
        c, e, p = [], self.enc, self.spec.p
        for _ in range(self.spec.m):
            c.append(e % p)
            e //= p
        return tuple(c)

    def is_zero(self) -> bool:
        return self.enc == 0

    def in_prime_subfield(self) -> bool:
        return self.enc < self.spec.p

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add_enc(self.enc, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_enc(self.enc, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_enc(b, self.enc))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_enc(self.enc))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_enc(self.enc, b))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow_enc(self.enc, e))

    def inverse(self) -> 'FieldElement':
        return FieldElement(self.spec, self.spec.inv_enc(self.enc))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec,
                            self.spec.mul_enc(self.enc, self.spec.inv_enc(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.spec,
                            self.spec.mul_enc(b, self.spec.inv_enc(self.enc)))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.enc == other.enc
        if isinstance(other, int):
            return self.enc == other % self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec._hash, self.enc))

    def __int__(self):
        return self.enc

    def __repr__(self):
        return f"{self.spec!r}:{self.enc}"


class GaussianElement:
    """a + j*b with a, b in GF(p^m) and j^2 = -1.

    Inversion needs the norm a^2 + b^2 to be nonzero; when -1 is a square
    in GF(q) that can fail for nonzero elements (zero divisors), which
    raises NotInvertibleError.
    """

    __slots__ = ('re', 'im')

    def __init__(self, re: FieldElement, im: FieldElement):
        if re.spec != im.spec:
            raise SpecMismatchError("re and im live in different fields")
        self.re = re
        self.im = im

    @property
    def spec(self) -> FieldSpec:
        return self.re.spec

    def _coerce(self, other):
        if isinstance(other, GaussianElement):
            if other.spec != self.spec:
                raise SpecMismatchError(
                    f"mixed fields: {self.spec!r} vs {other.spec!r}")
            return other
        if isinstance(other, FieldElement):
            return GaussianElement(other, other.spec.zero)
        if isinstance(other, int):
            return GaussianElement(self.spec.element(other % self.spec.p),
                                   self.spec.zero)
        return None

    def is_real(self) -> bool:
        return self.im.enc == 0

    def is_zero(self) -> bool:
        return self.re.enc == 0 and self.im.enc == 0

    def conjugate(self) -> 'GaussianElement':
        return GaussianElement(self.re, -self.im)

    def norm(self) -> FieldElement:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianElement(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianElement(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussianElement(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s = self.spec
        ar, ai, br, bi = self.re.enc, self.im.enc, o.re.enc, o.im.enc
        re = s.sub_enc(s.mul_enc(ar, br), s.mul_enc(ai, bi))
        im = s.add_enc(s.mul_enc(ar, bi), s.mul_enc(ai, br))
        return GaussianElement(FieldElement(s, re), FieldElement(s, im))

    __rmul__ = __mul__

    def inverse(self) -> 'GaussianElement':
        n = self.norm()
        if n.enc == 0:
            raise NotInvertibleError(
                f"{self} has zero norm and no inverse in GI({self.spec!r})")
        return self.conjugate() * n.inverse()

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e: int):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = GaussianElement(self.spec.one, self.spec.zero)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (GaussianElement, FieldElement, int)):
            o = self._coerce(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        # canonical wire syntax: `A` when purely real, else `A+jB`
        if self.im.enc == 0:
            return str(self.re.enc)
        return f"{self.re.enc}+j{self.im.enc}"

    def __repr__(self):
        return f"GI({self.spec!r}):{self}"


def element_order(x: FieldElement) -> int:
    """Smallest n >= 1 with x^n = 1; divides p^m - 1."""
    return x.spec.order_of_enc(x.enc)


def find_element_of_order(spec: FieldSpec, n: int) -> FieldElement:
    """The element of multiplicative order exactly n with the smallest
    encoding; deterministic across runs."""
    if n < 1:
        raise NoSuchOrderError("order must be >= 1")
    if (spec.order - 1) % n:
        raise NoSuchOrderError(
            f"{n} does not divide {spec.order - 1} = |{spec!r}*|")
    for enc in range(1, spec.order):
        if spec.order_of_enc(enc) == n:
            return FieldElement(spec, enc)
    raise AssertionError("cyclic group must contain the order")  # unreachable


def minus_one_is_qr(p: int):
    """Whether -1 is a quadratic residue mod p, i.e. p = 4k+1.

    Returns (True, r) with r the smaller square root of -1, or
    (False, None).
    """
    if p == 2:
        raise EvenCharacteristicError("characteristic 2 unsupported")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p % 4 != 1:
        return False, None
    for r in range(2, p):
        if r * r % p == p - 1:
            return True, r
    raise AssertionError("p = 4k+1 must have a root of -1")  # unreachable
