"""Length-N Fourier and Hartley transforms over GF(p^m) / GI(p^m).

Forward Fourier:  F_k = sum_i v_i * zeta^(k*i)
Forward Hartley:  V_k = sum_i v_i * cas(k*i)

Both are evaluated naively in O(N^2) (vectorised over numpy encoding
arrays); the inverses use the mirrored kernel scaled by N^-1 taken in
GF(p), so forward/inverse round trips are exact.  The Hartley kernel is
its own inverse up to the factor N.

verify_conjugacy checks the index symmetries a spectrum of a
prime-subfield signal must satisfy; coset compression relies on them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import KindMismatchError, SpecMismatchError
from .fields import GaussianElement
from .trig import ABSTRACT, TrigContext

FOURIER = 'fourier'
HARTLEY = 'hartley'
KINDS = (FOURIER, HARTLEY)


def _check_values(ctx, values):
    values = tuple(values)
    if len(values) != ctx.n:
        raise ValueError(f"expected {ctx.n} values, got {len(values)}")
    for z in values:
        if not isinstance(z, GaussianElement):
            raise TypeError("values must be GaussianElement")
        if z.spec != ctx.spec:
            raise SpecMismatchError("value does not belong to the context")
    return values


class SignalVector:
    """N Galois-domain samples attached to a TrigContext."""

    __slots__ = ('ctx', 'values')

    def __init__(self, ctx: TrigContext, values):
        self.ctx = ctx
        self.values = _check_values(ctx, values)

    @classmethod
    def from_ints(cls, ctx: TrigContext, symbols) -> 'SignalVector':
        """Lift prime-subfield symbols (ints mod p) to a signal vector."""
        spec = ctx.spec
        return cls(ctx, [spec.gaussian(s % spec.p, 0) for s in symbols])

    def _encs(self):
        re = np.fromiter((z.re.enc for z in self.values), np.int64, self.ctx.n)
        im = np.fromiter((z.im.enc for z in self.values), np.int64, self.ctx.n)
        return re, im

    def __eq__(self, other):
        if not isinstance(other, SignalVector):
            return NotImplemented
        return self.ctx == other.ctx and self.values == other.values

    def __repr__(self):
        return f"SignalVector({self.ctx!r}, {[str(z) for z in self.values]})"


class Spectrum:
    """Transform-domain counterpart of a SignalVector, tagged with kind."""

    __slots__ = ('ctx', 'kind', 'values')

    def __init__(self, ctx: TrigContext, kind: str, values):
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        self.ctx = ctx
        self.kind = kind
        self.values = _check_values(ctx, values)

    _encs = SignalVector._encs

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return (self.ctx == other.ctx and self.kind == other.kind
                and self.values == other.values)

    def __repr__(self):
        return (f"Spectrum({self.ctx!r}, {self.kind}, "
                f"{[str(z) for z in self.values]})")


# ---------------------------------------------------------------------------
# Transform evaluation.  Over the GF(p)-coefficient basis
# (1, x, .., x^(m-1), j, jx, .., jx^(m-1)) per slot, any of the four
# transforms is a single (2mN x 2mN) integer matrix mod p, which one
# exact matmul applies.  The matrices are cached per context; huge N
# falls back to the direct vectorised sum.

_MATRIX_LIMIT = 2048  # build the stacked matrix only while 2mN stays small


def _mult_matrices(spec, vre, vim):
    """(n, 2m, 2m) multiplication matrices of the GI values vre + j*vim
    on the coefficient basis."""
    m = spec.m
    n = len(vre)
    M = np.zeros((n, 2 * m, 2 * m), dtype=np.int64)
    nim = spec.vec_neg(vim)
    for b in range(m):
        xb = np.int64(spec.p ** b)
        rb = spec._np_e2c[spec.vec_mul(vre, xb)]
        ib = spec._np_e2c[spec.vec_mul(vim, xb)]
        nib = spec._np_e2c[spec.vec_mul(nim, xb)]
        M[:, 0:m, b] = rb
        M[:, m:, b] = ib
        M[:, 0:m, m + b] = nib
        M[:, m:, m + b] = rb
    return M


def _build_matrix(ctx, kind, inverse):
    spec, n, m = ctx.spec, ctx.n, ctx.spec.m
    if kind == FOURIER:
        tab_re = ctx._np_zeta_pow.copy()
        tab_im = np.zeros(n, dtype=np.int64)
    else:
        tab_re = ctx._np_cas_re.copy()
        tab_im = ctx._np_cas_im.copy()
    grid = ctx.kernel_grid
    if inverse:
        scale = np.int64(_n_inverse(ctx))
        tab_re = spec.vec_mul(tab_re, scale)
        tab_im = spec.vec_mul(tab_im, scale)
        if kind == FOURIER:
            grid = (-grid) % n
    M = _mult_matrices(spec, tab_re, tab_im)
    W = M[grid].transpose(0, 2, 1, 3).reshape(2 * m * n, 2 * m * n)
    # products stay exact in float64 well beyond desk scale, so the
    # matmul can ride BLAS; verified against the bound anyway
    if (spec.p - 1) ** 2 * (2 * m * n) < 2 ** 53:
        return W.astype(np.float64)
    return W


def _op_matrix(ctx, kind, inverse):
    cache = ctx._op_cache
    key = (kind, inverse)
    if key not in cache:
        cache[key] = _build_matrix(ctx, kind, inverse)
    return cache[key]


def _matrix_apply(ctx, re, im, kind, inverse):
    spec, m = ctx.spec, ctx.spec.m
    W = _op_matrix(ctx, kind, inverse)
    x = np.concatenate([spec._np_e2c[re], spec._np_e2c[im]],
                       axis=1).reshape(-1)
    if W.dtype == np.float64:
        y = (W @ x.astype(np.float64)).astype(np.int64) % spec.p
    else:
        y = (W @ x) % spec.p
    y = y.reshape(ctx.n, 2 * m)
    return y[:, :m] @ spec._np_ppow, y[:, m:] @ spec._np_ppow


def _wrap(spec, re, im):
    return tuple(
        GaussianElement(spec.element(int(r)), spec.element(int(i)))
        for r, i in zip(re, im))


def _apply_kernel(ctx, re, im, kre, kim, scale=None):
    """out_k = scale * sum_i (re_i + j im_i) * (kre[k,i] + j kim[k,i])."""
    spec = ctx.spec
    if kim is None:  # real kernel
        out_re = spec.vec_sum(spec.vec_mul(re[None, :], kre), axis=1)
        out_im = spec.vec_sum(spec.vec_mul(im[None, :], kre), axis=1)
    else:
        rr = spec.vec_mul(re[None, :], kre)
        ii = spec.vec_mul(im[None, :], kim)
        ri = spec.vec_mul(re[None, :], kim)
        ir = spec.vec_mul(im[None, :], kre)
        out_re = spec.vec_sum_diff(rr, ii, axis=1)
        out_im = spec.vec_sum2(ri, ir, axis=1)
    if scale is not None:
        s = np.int64(scale)
        out_re = spec.vec_mul(out_re, s)
        out_im = spec.vec_mul(out_im, s)
    return out_re, out_im


def _n_inverse(ctx) -> int:
    # N | p^m - 1 forces gcd(N, p) = 1, so N mod p is invertible and its
    # inverse lies in the prime subfield.
    return ctx.spec.inv_enc(ctx.n % ctx.spec.p)


def _evaluate(ctx, re, im, kind, inverse):
    if 2 * ctx.spec.m * ctx.n <= _MATRIX_LIMIT:
        return _matrix_apply(ctx, re, im, kind, inverse)
    scale = _n_inverse(ctx) if inverse else None
    grid = ctx.kernel_grid
    if kind == FOURIER:
        kre = ctx._np_zeta_pow[(-grid) % ctx.n if inverse else grid]
        kim = None
    else:
        kre = ctx._np_cas_re[grid]
        kim = ctx._np_cas_im[grid] if ctx.j_mode == ABSTRACT else None
    return _apply_kernel(ctx, re, im, kre, kim, scale=scale)


def _spectrum_of(ctx, kind, re, im):
    out = Spectrum.__new__(Spectrum)
    out.ctx = ctx
    out.kind = kind
    out.values = _wrap(ctx.spec, re, im)
    return out


def _signal_of(ctx, re, im):
    out = SignalVector.__new__(SignalVector)
    out.ctx = ctx
    out.values = _wrap(ctx.spec, re, im)
    return out


def ffft_forward(v: SignalVector) -> Spectrum:
    """Fourier spectrum F_k = sum_i v_i * zeta^(k*i)."""
    ctx = v.ctx
    re, im = _evaluate(ctx, *v._encs(), FOURIER, inverse=False)
    return _spectrum_of(ctx, FOURIER, re, im)


def ffft_inverse(F: Spectrum) -> SignalVector:
    """v_i = N^-1 * sum_k F_k * zeta^(-k*i); exact round trip."""
    if F.kind != FOURIER:
        raise KindMismatchError(f"expected a {FOURIER} spectrum, got {F.kind}")
    ctx = F.ctx
    re, im = _evaluate(ctx, *F._encs(), FOURIER, inverse=True)
    return _signal_of(ctx, re, im)


def ffht_forward(v: SignalVector) -> Spectrum:
    """Hartley spectrum V_k = sum_i v_i * cas(k*i)."""
    ctx = v.ctx
    re, im = _evaluate(ctx, *v._encs(), HARTLEY, inverse=False)
    return _spectrum_of(ctx, HARTLEY, re, im)


def ffht_inverse(V: Spectrum) -> SignalVector:
    """v_i = N^-1 * sum_k V_k * cas(i*k); same kernel, scaled."""
    if V.kind != HARTLEY:
        raise KindMismatchError(f"expected a {HARTLEY} spectrum, got {V.kind}")
    ctx = V.ctx
    re, im = _evaluate(ctx, *V._encs(), HARTLEY, inverse=True)
    return _signal_of(ctx, re, im)


def hartley_sign(ctx: TrigContext) -> int:
    """Sign s in the Hartley conjugacy law (V_k)^p = V_(s*p*k mod N):
    -1 with formal j when p = 4k+3, +1 otherwise."""
    return -1 if (ctx.spec.p % 4 == 3 and ctx.j_mode == ABSTRACT) else 1


@dataclass
class ConjugacyReport:
    """Indices where a spectrum violates the base-field symmetries."""
    kind: str
    sign: int
    passed: bool
    frobenius_failures: tuple
    conjugation_failures: tuple

    @property
    def violations(self):
        return tuple(sorted(set(self.frobenius_failures)
                            | set(self.conjugation_failures)))


def gi_frobenius_arrays(spec, re, im):
    """(a+jb)^p componentwise: a^p + j * sj * b^p with sj = -1 exactly
    when p = 4k+3 (since j^p = sj * j)."""
    fre = spec.vec_pow(re, spec.p)
    fim = spec.vec_pow(im, spec.p)
    if spec.p % 4 == 3:
        fim = spec.vec_neg(fim)
    return fre, fim


def conjugacy_violations(spec, n, re, im, sign, check_conjugation):
    """Index sets violating (V_k)^p = V_(sign*p*k) and, optionally,
    V_(N-k) = conj(V_k), on encoding arrays."""
    ks = np.arange(n, dtype=np.int64)
    perm = (sign * spec.p * ks) % n
    fre, fim = gi_frobenius_arrays(spec, re, im)
    bad = (fre != re[perm]) | (fim != im[perm])
    frob = tuple(int(k) for k in np.nonzero(bad)[0])
    conj = ()
    if check_conjugation:
        mirror = (n - ks) % n
        bad = (re[mirror] != re) | (im[mirror] != spec.vec_neg(im))
        conj = tuple(int(k) for k in np.nonzero(bad)[0])
    return frob, conj


def verify_conjugacy(V: Spectrum) -> ConjugacyReport:
    """Check the index laws spectra of prime-subfield signals satisfy.

    Fourier: V_(p*k mod N) = (V_k)^p.
    Hartley: (V_k)^p = V_(s*p*k mod N), and with formal j additionally
    V_(N-k) = conj(V_k).
    """
    ctx = V.ctx
    sign = 1 if V.kind == FOURIER else hartley_sign(ctx)
    re, im = V._encs()
    frob, conj = conjugacy_violations(
        ctx.spec, ctx.n, re, im, sign,
        check_conjugation=(V.kind == HARTLEY and ctx.j_mode == ABSTRACT))
    return ConjugacyReport(
        kind=V.kind,
        sign=sign,
        passed=not frob and not conj,
        frobenius_failures=frob,
        conjugation_failures=conj,
    )
