"""Finite-field trigonometry and carrier (spreading-waveform) matrices.

With zeta a root of unity of order N in GF(p^m):

    cos(x) = (zeta^x + zeta^-x) / 2
    sin(x) = (zeta^x - zeta^-x) / 2j
    cas(x) = cos(x) + sin(x)

cos is real, sin purely imaginary, so cas lives in GI(p^m).  Row i of
the carrier matrix samples cas at i*k (k = 0..N-1): it is channel i's
spreading waveform.  In the default 'abstract' mode j stays formal; an
'embedded' context replaces j by a residue root of -1 (p = 4k+1 only),
which collapses the carriers onto one-dimensional sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import JNotEmbeddableError
from .fields import (
    FieldElement,
    FieldSpec,
    GaussianElement,
    element_order,
    find_element_of_order,
    minus_one_is_qr,
)

ABSTRACT = 'abstract'
EMBEDDED = 'embedded'


class TrigContext:
    """A field, a root of unity and the cached cas tables built on them."""

    __slots__ = ('spec', 'zeta', 'n', 'j_mode', 'embed_root',
                 '_zeta_pow', '_cos', '_sin', '_cas_re', '_cas_im',
                 '_np_zeta_pow', '_np_cas_re', '_np_cas_im', '_grid',
                 '_op_cache')

    def __init__(self, spec: FieldSpec, zeta, n: int | None = None,
                 j_mode: str = ABSTRACT):
        if isinstance(zeta, int):
            zeta = spec.element(zeta)
        if zeta.spec != spec:
            raise ValueError("zeta does not belong to the given field")
        order = element_order(zeta)
        if n is None:
            n = order
        elif n != order:
            raise ValueError(f"zeta has order {order}, expected {n}")
        if j_mode not in (ABSTRACT, EMBEDDED):
            raise ValueError(f"unknown j_mode {j_mode!r}")
        if j_mode == EMBEDDED:
            ok, root = minus_one_is_qr(spec.p)
            if not ok:
                raise JNotEmbeddableError(
                    f"-1 is not a square mod {spec.p}; cannot embed j")
            self.embed_root = root
        else:
            self.embed_root = None

        self.spec = spec
        self.zeta = zeta
        self.n = n
        self.j_mode = j_mode
        self._build_tables()
        self._grid = None
        self._op_cache = {}

    @classmethod
    def for_length(cls, spec: FieldSpec, n: int,
                   j_mode: str = ABSTRACT) -> 'TrigContext':
        """Context using the canonical (smallest-encoding) root of order n."""
        return cls(spec, find_element_of_order(spec, n), n, j_mode)

    def _build_tables(self):
        spec, n = self.spec, self.n
        zp = [1] * n
        z = self.zeta.enc
        for i in range(1, n):
            zp[i] = spec.mul_enc(zp[i - 1], z)
        inv2 = spec.inv_enc(2 % spec.p)
        # sin(x) = j * s(x) with s(x) = (zeta^x - zeta^-x) * (-2)^-1,
        # because (2j)^-1 = (-(2^-1)) * j
        sin_scale = spec.inv_enc(spec.neg_enc(2 % spec.p))
        cos = [0] * n
        sin = [0] * n
        for x in range(n):
            a, b = zp[x], zp[(n - x) % n]
            cos[x] = spec.mul_enc(spec.add_enc(a, b), inv2)
            sin[x] = spec.mul_enc(spec.sub_enc(a, b), sin_scale)
        if self.j_mode == EMBEDDED:
            r = self.embed_root
            cas_re = [spec.add_enc(c, spec.mul_enc(r, s))
                      for c, s in zip(cos, sin)]
            cas_im = [0] * n
        else:
            cas_re = cos
            cas_im = sin
        self._zeta_pow = zp
        self._cos = cos
        self._sin = sin
        self._cas_re = cas_re
        self._cas_im = cas_im
        self._np_zeta_pow = np.array(zp, dtype=np.int64)
        self._np_cas_re = np.array(cas_re, dtype=np.int64)
        self._np_cas_im = np.array(cas_im, dtype=np.int64)

    @property
    def kernel_grid(self):
        """(n, n) array of i*k mod n; cached."""
        if self._grid is None:
            ar = np.arange(self.n, dtype=np.int64)
            self._grid = np.outer(ar, ar) % self.n
        return self._grid

    def embedded(self) -> 'TrigContext':
        """The j-embedded twin of this context (p = 4k+1 only)."""
        return TrigContext(self.spec, self.zeta, self.n, EMBEDDED)

    def zeta_power(self, x: int) -> FieldElement:
        return self.spec.element(self._zeta_pow[x % self.n])

    def __eq__(self, other):
        if not isinstance(other, TrigContext):
            return NotImplemented
        return (self.spec, self.zeta.enc, self.n, self.j_mode) == \
               (other.spec, other.zeta.enc, other.n, other.j_mode)

    def __hash__(self):
        return hash((self.spec, self.zeta.enc, self.n, self.j_mode))

    def __repr__(self):
        return (f"TrigContext({self.spec!r}, zeta={self.zeta.enc}, "
                f"n={self.n}, j_mode={self.j_mode})")


def ff_cos(ctx: TrigContext, x: int) -> GaussianElement:
    """cos at x (any integer, reduced mod N); purely real, even."""
    spec = ctx.spec
    return GaussianElement(spec.element(ctx._cos[x % ctx.n]), spec.zero)


def ff_sin(ctx: TrigContext, x: int) -> GaussianElement:
    """sin at x; purely imaginary (or real via the embedded root), odd."""
    spec = ctx.spec
    s = ctx._sin[x % ctx.n]
    if ctx.j_mode == EMBEDDED:
        return GaussianElement(
            spec.element(spec.mul_enc(ctx.embed_root, s)), spec.zero)
    return GaussianElement(spec.zero, spec.element(s))


def ff_cas(ctx: TrigContext, x: int) -> GaussianElement:
    """cas(x) = cos(x) + sin(x); cas(0) = 1."""
    spec = ctx.spec
    x %= ctx.n
    return GaussianElement(spec.element(ctx._cas_re[x]),
                           spec.element(ctx._cas_im[x]))


class CarrierMatrix:
    """The N x N table rows[i][k] = cas(i*k): one spreading waveform per
    row.  Symmetric, with all-ones first row and column."""

    __slots__ = ('ctx', '_re', '_im', '_rows')

    def __init__(self, ctx: TrigContext, rows=None):
        self.ctx = ctx
        if rows is None:
            grid = ctx.kernel_grid
            self._re = ctx._np_cas_re[grid]
            self._im = ctx._np_cas_im[grid]
            self._rows = None
        else:
            rows = tuple(tuple(r) for r in rows)
            n = ctx.n
            if len(rows) != n or any(len(r) != n for r in rows):
                raise ValueError(f"expected a {n} x {n} table")
            self._re = np.array([[z.re.enc for z in r] for r in rows],
                                dtype=np.int64)
            self._im = np.array([[z.im.enc for z in r] for r in rows],
                                dtype=np.int64)
            self._rows = rows

    @property
    def n(self) -> int:
        return self.ctx.n

    def row(self, i: int):
        spec = self.ctx.spec
        return tuple(
            GaussianElement(spec.element(int(r)), spec.element(int(c)))
            for r, c in zip(self._re[i], self._im[i]))

    @property
    def rows(self):
        if self._rows is None:
            self._rows = tuple(self.row(i) for i in range(self.n))
        return self._rows

    def __eq__(self, other):
        if not isinstance(other, CarrierMatrix):
            return NotImplemented
        return (self.ctx == other.ctx
                and np.array_equal(self._re, other._re)
                and np.array_equal(self._im, other._im))

    def __repr__(self):
        return f"CarrierMatrix({self.ctx!r})"


def carrier_matrix(ctx: TrigContext) -> CarrierMatrix:
    """The cas table for the context; row i is user i's waveform."""
    return CarrierMatrix(ctx)


def embed_j(matrix: CarrierMatrix) -> CarrierMatrix:
    """Map every entry a + jb to the residue a + r*b, r the canonical
    root of -1 mod p.  Only possible for p = 4k+1."""
    ctx = matrix.ctx
    if ctx.j_mode == EMBEDDED:
        return matrix
    ectx = ctx.embedded()  # raises JNotEmbeddableError when p = 4k+3
    spec = ctx.spec
    r = np.int64(ectx.embed_root)
    re = spec.vec_add(matrix._re, spec.vec_mul(r, matrix._im))
    out = CarrierMatrix.__new__(CarrierMatrix)
    out.ctx = ectx
    out._re = re
    out._im = np.zeros_like(re)
    out._rows = None
    return out


@dataclass
class OrthogonalityReport:
    """Result of the inner-product sweep over a carrier matrix.

    `failures` lists (axis, i, j) triples where the plain (unconjugated)
    product of lines i and j missed N*delta(i,j); the conjugated variant
    is reported alongside for reference, it is *not* the pass criterion.
    """
    energy: FieldElement
    passed: bool
    failures: tuple
    conjugated_passed: bool
    conjugated_failures: tuple


def _gram(spec, are, aim, bre, bim):
    """G[i, j] = sum_k A[i, k] * B[j, k] over GI, as encoding arrays."""
    n = are.shape[0]
    gre = np.empty((n, n), dtype=np.int64)
    gim = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        rr = spec.vec_mul(are[i][None, :], bre)
        ii = spec.vec_mul(aim[i][None, :], bim)
        ri = spec.vec_mul(are[i][None, :], bim)
        ir = spec.vec_mul(aim[i][None, :], bre)
        gre[i] = spec.vec_sum_diff(rr, ii, axis=1)
        gim[i] = spec.vec_sum2(ri, ir, axis=1)
    return gre, gim


def _gram_failures(spec, n, axis, are, aim, bre, bim):
    gre, gim = _gram(spec, are, aim, bre, bim)
    energy = n % spec.p
    expect = np.zeros((n, n), dtype=np.int64)
    np.fill_diagonal(expect, energy)
    bad = (gre != expect) | (gim != 0)
    return [(axis, int(i), int(j)) for i, j in zip(*np.nonzero(bad))]


def verify_orthogonality(matrix: CarrierMatrix) -> OrthogonalityReport:
    """Check every row pair and column pair for inner product N*delta
    with the plain product convention; report the conjugated variant as
    a secondary field."""
    ctx = matrix.ctx
    spec, n = ctx.spec, ctx.n
    re, im = matrix._re, matrix._im
    failures = _gram_failures(spec, n, 'row', re, im, re, im)
    failures += _gram_failures(spec, n, 'col', re.T, im.T, re.T, im.T)
    nim = spec.vec_neg(im)
    cfail = _gram_failures(spec, n, 'row', re, im, re, nim)
    cfail += _gram_failures(spec, n, 'col', re.T, im.T, re.T, nim.T)
    return OrthogonalityReport(
        energy=spec.element(n % spec.p),
        passed=not failures,
        failures=tuple(failures),
        conjugated_passed=not cfail,
        conjugated_failures=tuple(cfail),
    )
