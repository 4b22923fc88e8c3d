"""Cyclotomic cosets mod N, counting cross-checks, and the coset-leader
spectrum compression they enable.

Indices k and p*k mod N carry Frobenius-related spectrum components, so
one representative per orbit determines the rest.  For Hartley spectra
the conjugation symmetry V_(N-k) = conj(V_k) additionally pairs each
orbit with its reciprocal, roughly halving the count.  Compression keeps
only the coset leaders; expansion walks each coset back out from its
leader.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    FormulaInapplicableError,
    InternalInconsistencyError,
    KindMismatchError,
    LeaderCountMismatchError,
    NotBaseFieldError,
    NotCoprimeError,
)
from .fields import GaussianElement, is_prime
from .transforms import (
    FOURIER,
    HARTLEY,
    Spectrum,
    conjugacy_violations,
    hartley_sign,
    verify_conjugacy,
)
from .trig import ABSTRACT, TrigContext


def mobius(n: int) -> int:
    """0 on squareful n, else (-1)^(number of prime factors)."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    count = 0
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            count += 1
        f += 1
    if n > 1:
        count += 1
    return -1 if count % 2 else 1


def irreducible_count(q: int, k: int) -> int:
    """Number of monic irreducible polynomials of degree k over GF(q):
    (1/k) * sum over d | k of mobius(d) * q^(k/d)."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    total = sum(mobius(d) * q ** (k // d) for d in range(1, k + 1)
                if k % d == 0)
    assert total % k == 0
    return total // k


@dataclass(frozen=True)
class CosetPartition:
    """Cyclotomic cosets of {0..N-1} under k -> p*k (Fourier) or under
    both k -> p*k and k -> N-k (Hartley), sorted members, leader-ordered.
    """
    n: int
    p: int
    kind: str
    sign: int
    cosets: tuple
    leaders: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'leaders', tuple(c[0] for c in self.cosets))

    @property
    def count(self) -> int:
        return len(self.cosets)

    def __str__(self):
        body = ' '.join(
            f"C{c[0]}=({','.join(map(str, c))})" for c in self.cosets)
        return f"{self.kind} cosets mod {self.n} (x{self.p}): {body}"


def fourier_cosets(n: int, p: int) -> CosetPartition:
    """Orbits of {0..N-1} under multiplication by p mod N."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if p < 1:
        raise ValueError("multiplier must be >= 1")
    if math.gcd(n, p) != 1:
        raise NotCoprimeError(f"gcd({n}, {p}) != 1")
    seen = bytearray(n)
    cosets = []
    for k in range(n):
        if seen[k]:
            continue
        orbit = []
        x = k
        while not seen[x]:
            seen[x] = 1
            orbit.append(x)
            x = x * p % n
        cosets.append(tuple(sorted(orbit)))
    return CosetPartition(n=n, p=p, kind=FOURIER, sign=1,
                          cosets=tuple(cosets))


def hartley_cosets(n: int, p: int) -> CosetPartition:
    """Fourier cosets merged with their reciprocals: each coset is closed
    under both k -> p*k and k -> N-k."""
    base = fourier_cosets(n, p)
    where = {}
    for idx, c in enumerate(base.cosets):
        for k in c:
            where[k] = idx
    merged = []
    done = set()
    for idx, c in enumerate(base.cosets):
        if idx in done:
            continue
        ridx = where[(n - c[0]) % n]
        done.add(idx)
        done.add(ridx)
        merged.append(tuple(sorted(set(c) | set(base.cosets[ridx]))))
    merged.sort(key=lambda c: c[0])
    sign = -1 if p % 4 == 3 else 1
    return CosetPartition(n=n, p=p, kind=HARTLEY, sign=sign,
                          cosets=tuple(merged))


def scheme_partition(n: int, p: int, kind: str,
                     j_mode: str = ABSTRACT) -> CosetPartition:
    """The partition a multiplex scheme compresses with.

    Hartley with formal j and p = 4k+3 uses the reciprocal-merged
    partition; for p = 4k+1 (where j collapses into GF(p) and the
    conjugation symmetry buys nothing extra) it falls back to the
    Fourier-style partition, so the degenerate prime-field case really
    transmits all N coefficients.
    """
    if kind == FOURIER:
        return fourier_cosets(n, p)
    if kind != HARTLEY:
        raise ValueError(f"unknown kind {kind!r}")
    if p % 4 == 3 and j_mode == ABSTRACT:
        return hartley_cosets(n, p)
    return fourier_cosets(n, p)


def hartley_count_closed_form(fourier_count: int, n: int) -> int:
    """(v_F - (N mod 2)) / 2 + 1 when that is a positive integer.

    Advisory only: it presumes exactly one self-reciprocal nonzero coset,
    which fails e.g. for N = 5, p = 2 or N = 80, p = 3.  Enumeration via
    hartley_cosets is the single source of truth.
    """
    num = fourier_count - (n % 2)
    if num < 0 or num % 2:
        raise FormulaInapplicableError(
            f"(v_F - (N mod 2)) / 2 + 1 is not a positive integer for "
            f"v_F={fourier_count}, N={n}; enumerate instead")
    return num // 2 + 1


@dataclass(frozen=True)
class CosetEstimates:
    """Ceiling rule-of-thumb coset counts, flagged approximate."""
    vf_est: int
    vh_est: int
    block_length_exact: bool  # whether N really is p^m - 1


def coset_estimates(n: int, m: int) -> CosetEstimates:
    """Rule-of-thumb counts vF ~ ceil(N/m), vH ~ ceil(ceil(N/m)/2 + 1).

    Intended for full block length N = p^m - 1; block_length_exact is
    False when N + 1 is not an m-th prime power."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    vf = -(-n // m)
    vh = -(-vf // 2) + 1
    root = round((n + 1) ** (1.0 / m))
    exact = any((root + d) ** m == n + 1 and is_prime(root + d)
                for d in (-1, 0, 1) if root + d >= 2)
    return CosetEstimates(vf_est=vf, vh_est=vh, block_length_exact=exact)


@dataclass
class LineFrame:
    """What actually goes on the line: one spectrum component per coset
    leader, plus the partition identity needed to refill the rest."""
    ctx: TrigContext
    kind: str
    partition: CosetPartition
    values: tuple

    def __post_init__(self):
        self.values = tuple(self.values)
        if len(self.values) != self.partition.count:
            raise LeaderCountMismatchError(
                f"{len(self.values)} values for {self.partition.count} "
                f"cosets")


def ensure_partition_compatible(kind, ctx, part):
    """Raise unless `part` can carry `kind` spectra from `ctx`."""
    if part.n != ctx.n or part.p != ctx.spec.p:
        raise ValueError(
            f"partition is for (N={part.n}, p={part.p}), spectrum has "
            f"(N={ctx.n}, p={ctx.spec.p})")
    if kind == FOURIER:
        if part.kind != FOURIER:
            raise KindMismatchError("Fourier spectra need Fourier cosets")
        return
    expected = hartley_sign(ctx)
    if part.kind == HARTLEY:
        # the conjugation walk needs a formal j to split re/im again
        if ctx.j_mode != ABSTRACT:
            raise KindMismatchError(
                "reciprocal-merged cosets need a formal-j spectrum")
        if part.sign != expected:
            raise KindMismatchError(
                f"partition sign {part.sign} does not match the context "
                f"({expected})")
    elif expected != 1:
        raise KindMismatchError(
            "Fourier-style cosets cannot carry a sign -1 Hartley spectrum")


def compress_spectrum(V: Spectrum, part: CosetPartition) -> LineFrame:
    """Keep only the leader components.  Refuses spectra that violate the
    conjugacy laws, because expansion could not reproduce them."""
    ensure_partition_compatible(V.kind, V.ctx, part)
    report = verify_conjugacy(V)
    if not report.passed:
        raise NotBaseFieldError(
            f"spectrum violates conjugacy at indices {report.violations}; "
            f"compression would be lossy")
    return LineFrame(ctx=V.ctx, kind=V.kind, partition=part,
                     values=tuple(V.values[l] for l in part.leaders))


@functools.lru_cache(maxsize=64)
def _expansion_plan(part: CosetPartition):
    """Per-index recipe (leader position, Frobenius count, conjugate?)
    from a breadth-first walk of every coset; cached per partition."""
    n, p = part.n, part.p
    leader_pos = [-1] * n
    frob_count = [0] * n
    conjugated = [False] * n
    for pos, leader in enumerate(part.leaders):
        queue = [(leader, 0, False)]
        while queue:
            k, t, c = queue.pop()
            if leader_pos[k] >= 0:
                continue
            leader_pos[k] = pos
            frob_count[k] = t
            conjugated[k] = c
            queue.append(((part.sign * p * k) % n, t + 1, c))
            if part.kind == HARTLEY:
                queue.append(((n - k) % n, t, not c))
    if min(leader_pos) < 0:
        raise InternalInconsistencyError("partition does not cover 0..N-1")
    return (np.array(leader_pos, dtype=np.int64),
            np.array(frob_count, dtype=np.int64),
            np.array(conjugated, dtype=bool))


def expand_spectrum(frame: LineFrame,
                    part: CosetPartition | None = None) -> Spectrum:
    """Rebuild the full spectrum from the coset leaders.

    Walks each coset applying V_(s*p*k) = (V_k)^p and, for Hartley
    partitions, V_(N-k) = conj(V_k); t Frobenius steps power a leader
    componentwise by p^t.  The result is then checked against the laws
    at every index, so a value set that cannot be expanded consistently
    raises InternalInconsistencyError instead of coming back mangled.
    """
    if part is None:
        part = frame.partition
    if len(frame.values) != part.count:
        raise LeaderCountMismatchError(
            f"{len(frame.values)} leader values for {part.count} cosets")
    if part.leaders != frame.partition.leaders:
        raise ValueError("partition leaders do not match the frame")
    ctx = frame.ctx
    spec, n, p = ctx.spec, part.n, part.p
    leader_pos, frob_count, conjugated = _expansion_plan(part)

    lead_re = np.fromiter((z.re.enc for z in frame.values), np.int64,
                          part.count)
    lead_im = np.fromiter((z.im.enc for z in frame.values), np.int64,
                          part.count)
    exps = np.array([pow(p, int(t), spec.order - 1) for t in frob_count],
                    dtype=np.int64)
    re = spec.vec_pow(lead_re[leader_pos], exps)
    im = spec.vec_pow(lead_im[leader_pos], exps)
    # j^(p^t) = sj^t * j with sj = -1 for p = 4k+3; conjugation flips once
    flip = conjugated.copy()
    if p % 4 == 3:
        flip ^= (frob_count % 2).astype(bool)
    im = np.where(flip, spec.vec_neg(im), im)

    frob, conj = conjugacy_violations(
        spec, n, re, im, part.sign,
        check_conjugation=(part.kind == HARTLEY))
    if frob or conj:
        raise InternalInconsistencyError(
            f"leader values are not expandable under this partition "
            f"(violations at {tuple(sorted(set(frob) | set(conj)))})")
    values = tuple(
        GaussianElement(spec.element(int(r)), spec.element(int(i)))
        for r, i in zip(re, im))
    return Spectrum(ctx, frame.kind, values)
