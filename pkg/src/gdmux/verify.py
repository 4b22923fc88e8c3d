"""Seeded property suite for a multiplex configuration.

Each check pins one structural promise of the scheme (kernel symmetry,
orthogonality, transform round trips, conjugacy laws, compression round
trips, crosstalk, metrics bookkeeping).  Results come back one per
property so the CLI can print pass/fail lines and exit accordingly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cosets import compress_spectrum, expand_spectrum
from .mux import MuxConfig, UserFrame, demux, link_metrics, mux, \
    transmit_pipeline
from .transforms import (
    SignalVector,
    ffft_forward,
    ffft_inverse,
    ffht_forward,
    ffht_inverse,
    hartley_sign,
    verify_conjugacy,
)
from .trig import carrier_matrix, ff_cas, ff_cos, ff_sin, \
    verify_orthogonality


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: str = ''


def _random_gi_vector(ctx, rng):
    q = ctx.spec.order
    return SignalVector(ctx, [ctx.spec.gaussian(rng.randrange(q),
                                                rng.randrange(q))
                              for _ in range(ctx.n)])


def _random_frame(ctx, rng):
    return UserFrame(p=ctx.spec.p,
                     symbols=tuple(rng.randrange(ctx.spec.p)
                                   for _ in range(ctx.n)))


def run_property_suite(cfg: MuxConfig, seed: int = 1,
                       trials: int = 200) -> list:
    """Run every property check for the configuration; deterministic
    given (cfg, seed, trials)."""
    ctx = cfg.ctx
    spec, n, p = ctx.spec, ctx.n, ctx.spec.p
    rng = random.Random(seed)
    results: list[PropertyResult] = []

    def check(name, fn):
        try:
            detail = fn()
        except Exception as exc:  # a property that raises has failed
            results.append(PropertyResult(name, False, f"raised {exc!r}"))
        else:
            results.append(PropertyResult(name, detail is None,
                                          detail or ''))

    matrix = carrier_matrix(ctx)

    def p_symmetry():
        import numpy as np
        if not (np.array_equal(matrix._re, matrix._re.T)
                and np.array_equal(matrix._im, matrix._im.T)):
            return "cas(i*k) table is not symmetric"

    def p_edges():
        one = spec.gaussian(1)
        row0 = matrix.row(0)
        col0 = tuple(matrix.row(i)[0] for i in range(n))
        if any(z != one for z in row0) or any(z != one for z in col0):
            return "row 0 / column 0 are not all ones"

    def p_unit_circle():
        for x in range(n):
            c, s = ff_cos(ctx, x), ff_sin(ctx, x)
            if c * c + s * s != 1:
                return f"cos^2+sin^2 != 1 at x={x}"

    def p_parity():
        for x in range(n):
            if ff_cos(ctx, -x) != ff_cos(ctx, x):
                return f"cos not even at x={x}"
            if ff_sin(ctx, -x) != -ff_sin(ctx, x):
                return f"sin not odd at x={x}"
            if ff_cas(ctx, x) + ff_cas(ctx, -x) != 2 * ff_cos(ctx, x):
                return f"cas(x)+cas(-x) != 2cos(x) at x={x}"

    def p_orthogonality():
        report = verify_orthogonality(matrix)
        if not report.passed:
            return f"{len(report.failures)} inner products off"
        if report.energy != n % p:
            return f"energy {report.energy.enc} != N = {n % p}"

    def p_kernel_frobenius():
        s = hartley_sign(ctx)
        for x in range(n):
            if ff_cas(ctx, x) ** p != ff_cas(ctx, s * p * x):
                return f"cas(x)^p != cas({s}*p*x) at x={x}"

    def p_fourier_round_trip():
        for t in range(trials):
            v = _random_gi_vector(ctx, rng)
            if ffft_inverse(ffft_forward(v)) != v:
                return f"trial {t} failed"

    def p_hartley_round_trip():
        for t in range(trials):
            v = _random_gi_vector(ctx, rng)
            if ffht_inverse(ffht_forward(v)) != v:
                return f"trial {t} failed"

    def p_self_inverse_kernel():
        for t in range(max(1, trials // 10)):
            v = _random_gi_vector(ctx, rng)
            twice = ffht_forward(SignalVector(ctx, ffht_forward(v).values))
            scaled = tuple(z * (n % p) for z in v.values)
            if twice.values != scaled:
                return f"kernel^2 != N*I (trial {t})"

    def p_linearity():
        for t in range(max(1, trials // 10)):
            a = spec.gaussian(rng.randrange(spec.order))
            b = spec.gaussian(rng.randrange(spec.order))
            u = _random_gi_vector(ctx, rng)
            v = _random_gi_vector(ctx, rng)
            comb = SignalVector(ctx, [a * x + b * y
                                      for x, y in zip(u.values, v.values)])
            for fwd in (ffft_forward, ffht_forward):
                lhs = fwd(comb).values
                rhs = tuple(a * x + b * y
                            for x, y in zip(fwd(u).values, fwd(v).values))
                if lhs != rhs:
                    return f"{fwd.__name__} not linear (trial {t})"

    def p_conjugacy():
        for t in range(trials):
            v = SignalVector.from_ints(
                ctx, [rng.randrange(p) for _ in range(n)])
            for fwd in (ffft_forward, ffht_forward):
                report = verify_conjugacy(fwd(v))
                if not report.passed:
                    return (f"{fwd.__name__} violates conjugacy at "
                            f"{report.violations} (trial {t})")

    def p_energy():
        # sum_k V_k^2 == N * sum_i v_i^2 for the Hartley spectrum
        for t in range(trials):
            v = _random_gi_vector(ctx, rng)
            V = ffht_forward(v)
            lhs = spec.gaussian(0)
            for z in V.values:
                lhs = lhs + z * z
            rhs = spec.gaussian(0)
            for z in v.values:
                rhs = rhs + z * z
            if lhs != rhs * (n % p):
                return f"energy identity failed (trial {t})"

    def p_compress_expand():
        for t in range(trials):
            frame = _random_frame(ctx, rng)
            spectrum = mux(cfg, frame)
            line = compress_spectrum(spectrum, cfg.partition)
            if expand_spectrum(line, cfg.partition) != spectrum:
                return f"compress/expand not the identity (trial {t})"

    def p_mux_demux():
        for t in range(trials):
            frame = _random_frame(ctx, rng)
            if demux(cfg, mux(cfg, frame)) != frame:
                return f"demux(mux(frame)) != frame (trial {t})"

    def p_pipeline():
        for t in range(trials):
            frame = _random_frame(ctx, rng)
            result = transmit_pipeline(cfg, frame)
            if result.recovered != frame:
                return f"pipeline did not recover frame (trial {t})"
            if len(result.line.values) != cfg.partition.count:
                return "line frame has the wrong number of leaders"

    def p_crosstalk():
        for user in range(n):
            frame = UserFrame(p=p, symbols=tuple(
                1 if i == user else 0 for i in range(n)))
            rec = demux(cfg, mux(cfg, frame))
            if rec != frame:
                return f"crosstalk onto other slots from user {user}"

    def p_metrics():
        metrics = link_metrics(p, n, cfg.partition.count)
        if metrics.channels_gained + metrics.processing_gain != n:
            return "channels_gained + processing_gain != N"
        if metrics.compactness * metrics.bandwidth_gdm_hz \
                != metrics.bandwidth_tdm_hz:
            return "bandwidth ratio inconsistent"

    check('carrier-symmetry', p_symmetry)
    check('carrier-edges-ones', p_edges)
    check('unit-circle', p_unit_circle)
    check('parity', p_parity)
    check('orthogonality', p_orthogonality)
    check('kernel-frobenius', p_kernel_frobenius)
    check('fourier-round-trip', p_fourier_round_trip)
    check('hartley-round-trip', p_hartley_round_trip)
    check('hartley-self-inverse', p_self_inverse_kernel)
    check('linearity', p_linearity)
    check('conjugacy-laws', p_conjugacy)
    check('energy-conservation', p_energy)
    check('compress-expand', p_compress_expand)
    check('mux-demux', p_mux_demux)
    check('pipeline-recovery', p_pipeline)
    check('zero-crosstalk', p_crosstalk)
    check('metrics-consistency', p_metrics)
    return results
