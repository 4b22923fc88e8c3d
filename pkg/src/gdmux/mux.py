"""The end-to-end Galois-division multiplex: modulate / transform,
compress to coset leaders, expand, inverse transform — plus the link
metrics (bandwidth compactness, channel gain, spectral efficiency,
Shannon feasibility) that motivate the scheme.

Users are identified with transform indices 0..N-1; user i's spreading
waveform is carrier row i, and summing all modulated carriers is exactly
the forward transform of the symbol vector, so mux/demux are transform
pairs with zero synchronous inter-user interference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cosets import (
    CosetPartition,
    LineFrame,
    compress_spectrum,
    ensure_partition_compatible,
    expand_spectrum,
    scheme_partition,
)
from .errors import (
    EvenCharacteristicError,
    KindMismatchError,
    NotBaseFieldError,
    NotPrimeError,
)
from .fields import (
    FieldElement,
    GaussianElement,
    find_element_of_order,
    is_prime,
    make_field,
)
from .transforms import (
    HARTLEY,
    KINDS,
    SignalVector,
    Spectrum,
    ffft_forward,
    ffft_inverse,
    ffht_forward,
    ffht_inverse,
)
from .trig import ABSTRACT, TrigContext


@dataclass(frozen=True)
class UserFrame:
    """One prime-subfield symbol per user (slot i belongs to user i)."""
    p: int
    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, 'symbols',
                           tuple(int(s) for s in self.symbols))
        for s in self.symbols:
            if not 0 <= s < self.p:
                raise ValueError(f"symbol {s} outside GF({self.p})")

    def __len__(self):
        return len(self.symbols)


class MuxConfig:
    """A multiplex scheme instance: context, transform kind, the coset
    partition used on the line, and the symbol period (metrics only)."""

    __slots__ = ('ctx', 'kind', 'partition', 'symbol_period')

    def __init__(self, ctx: TrigContext, kind: str = HARTLEY,
                 partition: CosetPartition | None = None,
                 symbol_period: float = 1.0):
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if partition is None:
            partition = scheme_partition(ctx.n, ctx.spec.p, kind, ctx.j_mode)
        else:
            ensure_partition_compatible(kind, ctx, partition)
        if symbol_period <= 0:
            raise ValueError("symbol period must be positive")
        self.ctx = ctx
        self.kind = kind
        self.partition = partition
        self.symbol_period = symbol_period

    @classmethod
    def build(cls, p: int, m: int = 1, n: int | None = None,
              kind: str = HARTLEY, zeta: int | None = None,
              j_mode: str = ABSTRACT,
              symbol_period: float = 1.0) -> 'MuxConfig':
        """Construct the canonical scheme for (p, m): N defaults to the
        full block length p^m - 1 and zeta to the smallest-encoding
        element of order N."""
        spec = make_field(p, m)
        if n is None:
            n = spec.order - 1
        if zeta is None:
            zel = find_element_of_order(spec, n)
        else:
            zel = spec.element(zeta)
        ctx = TrigContext(spec, zel, n, j_mode)
        return cls(ctx, kind, symbol_period=symbol_period)

    @property
    def users(self) -> int:
        return self.ctx.n

    def __repr__(self):
        return (f"MuxConfig({self.ctx!r}, kind={self.kind}, "
                f"v={self.partition.count})")


def galois_modulate(signal, carrier):
    """Elementwise product of a symbol sequence and a carrier sequence
    over GI(p^m) — the Galois modulator."""
    signal = tuple(signal)
    carrier = tuple(carrier)
    if len(signal) != len(carrier):
        raise ValueError(
            f"length mismatch: signal {len(signal)}, carrier {len(carrier)}")
    out = []
    for s, c in zip(signal, carrier):
        if isinstance(s, (int, FieldElement)):
            out.append(c * s)
        elif isinstance(s, GaussianElement):
            out.append(s * c)
        else:
            raise TypeError(f"cannot modulate {type(s).__name__}")
    return tuple(out)


def mux(cfg: MuxConfig, frame: UserFrame) -> Spectrum:
    """Spread all users onto the line signal: the forward transform of
    the symbol vector.  Each output coefficient lasts T/N seconds."""
    if frame.p != cfg.ctx.spec.p:
        raise ValueError(f"frame symbols are mod {frame.p}, scheme uses "
                         f"p={cfg.ctx.spec.p}")
    v = SignalVector.from_ints(cfg.ctx, frame.symbols)
    return ffht_forward(v) if cfg.kind == HARTLEY else ffft_forward(v)


def demux(cfg: MuxConfig, line: Spectrum) -> UserFrame:
    """Inverse transform back to one symbol per user.

    Raises NotBaseFieldError if any recovered value has an imaginary
    part or leaves the prime subfield — the line frame was corrupted.
    """
    if line.ctx != cfg.ctx:
        raise ValueError("spectrum context does not match the scheme")
    if line.kind != cfg.kind:
        raise KindMismatchError(
            f"scheme is {cfg.kind}, spectrum is {line.kind}")
    v = ffht_inverse(line) if cfg.kind == HARTLEY else ffft_inverse(line)
    p = cfg.ctx.spec.p
    symbols = []
    for i, z in enumerate(v.values):
        if not z.is_real() or not z.re.in_prime_subfield():
            raise NotBaseFieldError(
                f"recovered value {z} at slot {i} is not a GF({p}) symbol")
        symbols.append(z.re.enc)
    return UserFrame(p=p, symbols=tuple(symbols))


@dataclass
class PipelineResult:
    line: LineFrame
    recovered: UserFrame


def transmit_pipeline(cfg: MuxConfig, frame: UserFrame) -> PipelineResult:
    """mux -> compress to coset leaders -> expand -> demux.

    The line frame carries only the partition's v leader components;
    recovery is exact for every valid frame.
    """
    spectrum = mux(cfg, frame)
    line = compress_spectrum(spectrum, cfg.partition)
    recovered = demux(cfg, expand_spectrum(line, cfg.partition))
    return PipelineResult(line=line, recovered=recovered)


# ---------------------------------------------------------------------------
# Metrics.

def bandwidth_compactness(n: int, v: int) -> Fraction:
    """N/v: how much narrower the line is than N TDM channels."""
    if v < 1:
        raise ValueError("coset count must be >= 1")
    return Fraction(n, v)


@dataclass(frozen=True)
class GdmGain:
    """Channel gain over TDM/FDM in the same bandwidth."""
    channels: int
    percent: Fraction
    bandwidth_ratio: Fraction


def gdm_gain(n: int, v: int) -> GdmGain:
    """N - v extra channels, i.e. 100*(N-v)/N percent."""
    if not 1 <= v <= n:
        raise ValueError("need 1 <= v <= N")
    return GdmGain(channels=n - v,
                   percent=Fraction(100 * (n - v), n),
                   bandwidth_ratio=bandwidth_compactness(n, v))


@dataclass(frozen=True)
class LinkMetrics:
    """Rate/bandwidth/efficiency comparison of N-user TDM vs GDM."""
    p: int
    n: int
    v: int
    compactness: Fraction
    processing_gain: int
    channels_gained: int
    gain_percent: Fraction
    rate_user_bps: float
    rate_bps: float
    bandwidth_tdm_hz: float
    bandwidth_gdm_hz: float
    eta_tdm: float
    eta_gdm: float
    symbol_period: float
    channel_bandwidth: float


def link_metrics(p: int, n: int, v: int, symbol_period: float = 1.0,
                 channel_bandwidth: float = 1.0) -> LinkMetrics:
    """Aggregate rate N*log2(p)/T, line bandwidth v*B1 (vs N*B1 for
    TDM), and spectral efficiency (N/v)*log2(p) bits/s/Hz."""
    if p == 2:
        raise EvenCharacteristicError("p = 2 is rejected throughout")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not 1 <= v <= n:
        raise ValueError("need 1 <= v <= N")
    if symbol_period <= 0 or channel_bandwidth <= 0:
        raise ValueError("T and B1 must be positive")
    gamma = bandwidth_compactness(n, v)
    bits = math.log2(p)
    return LinkMetrics(
        p=p, n=n, v=v,
        compactness=gamma,
        processing_gain=v,
        channels_gained=n - v,
        gain_percent=Fraction(100 * (n - v), n),
        rate_user_bps=bits / symbol_period,
        rate_bps=n * bits / symbol_period,
        bandwidth_tdm_hz=n * channel_bandwidth,
        bandwidth_gdm_hz=v * channel_bandwidth,
        eta_tdm=bits,
        eta_gdm=float(gamma) * bits,
        symbol_period=symbol_period,
        channel_bandwidth=channel_bandwidth,
    )


def shannon_max_compactness(p: int, snr_linear: float) -> float:
    """Upper bound log2(1 + S/N) / log2(p) on the compactness factor:
    the aggregate rate may not exceed Gaussian-channel capacity."""
    if snr_linear < 0:
        raise ValueError("snr must be >= 0")
    if p < 3:
        raise ValueError("p must be >= 3")
    return math.log2(1.0 + snr_linear) / math.log2(p)


def shannon_min_snr(p: int, compactness) -> float:
    """Smallest linear S/N at which the given compactness is feasible:
    p^compactness - 1."""
    if p < 3:
        raise ValueError("p must be >= 3")
    if compactness < 0:
        raise ValueError("compactness must be >= 0")
    return p ** float(compactness) - 1.0


def shannon_feasible(p: int, snr_linear: float, compactness) -> bool:
    """Verdict: does the bound admit this compactness at this S/N?"""
    return float(compactness) <= shannon_max_compactness(p, snr_linear)
