"""Command-line front end.

Subcommands: design | table | cosets | mux | demux | compress | expand |
verify | metrics.  Exit codes: 0 success, 1 validation error,
2 verification failure.  All output is deterministic given the flags,
input files and seed.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import fileio
from .cosets import coset_estimates, fourier_cosets, hartley_cosets
from .errors import GdmError
from .mux import (
    MuxConfig,
    demux,
    link_metrics,
    mux,
    shannon_feasible,
    shannon_max_compactness,
    shannon_min_snr,
)
from .cosets import compress_spectrum, expand_spectrum
from .transforms import HARTLEY, KINDS
from .trig import carrier_matrix, embed_j
from .verify import run_property_suite


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def _add_common(sub):
    sub.add_argument('--p', type=int, help='field characteristic (odd prime)')
    sub.add_argument('--m', type=int, default=None,
                     help='extension degree (default 1)')
    sub.add_argument('--n', type=int, default=None,
                     help='sequence length (default p^m - 1)')
    sub.add_argument('--kind', choices=KINDS, default=None,
                     help=f'transform kind (default {HARTLEY})')
    sub.add_argument('--zeta', type=int, default=None,
                     help='root-of-unity encoding override')
    sub.add_argument('--seed', type=int, default=1)
    sub.add_argument('--in', dest='infile', help='input file')
    sub.add_argument('--out', dest='outfile', help='output file (stdout)')
    sub.add_argument('--embed-j', action='store_true',
                     help='replace j by the residue root of -1 (p = 4k+1)')
    sub.add_argument('--snr', type=float, default=None,
                     help='linear signal-to-noise ratio')
    sub.add_argument('--T', type=float, default=1.0, dest='T',
                     help='symbol period in seconds')
    sub.add_argument('--B1', type=float, default=1.0, dest='B1',
                     help='per-channel bandwidth in Hz')
    sub.add_argument('--figures', metavar='DIR', default=None,
                     help='also render report figures into DIR')
    sub.add_argument('--trials', type=int, default=200,
                     help='trials per randomised property (verify)')


def _require_p(args):
    if args.p is None:
        raise ValueError("--p is required for this command")


def _build_config(args) -> MuxConfig:
    _require_p(args)
    return MuxConfig.build(args.p, args.m or 1, args.n,
                           kind=args.kind or HARTLEY,
                           zeta=args.zeta, symbol_period=args.T)


def _emit(args, text: str) -> None:
    if args.outfile:
        Path(args.outfile).write_text(text + '\n')
    else:
        print(text)


# -- subcommands ---------------------------------------------------------------

def cmd_design(args) -> int:
    cfg = _build_config(args)
    ctx = cfg.ctx
    spec, n = ctx.spec, ctx.n
    fpart = fourier_cosets(n, spec.p)
    hpart = hartley_cosets(n, spec.p)
    est = coset_estimates(n, spec.m)
    v = cfg.partition.count
    metrics = link_metrics(spec.p, n, v, args.T, args.B1)
    gamma = metrics.compactness
    lines = [
        f"scheme: GDM over {spec!r}, kind={cfg.kind}",
        f"field: p={spec.p} m={spec.m} poly={spec.poly_encoding()} "
        f"elements={spec.order}",
        f"zeta={ctx.zeta.enc} (order {n})",
        f"users={n}",
        f"v_F={fpart.count}",
        f"v_H={hpart.count}",
        f"scheme_partition: kind={cfg.partition.kind} "
        f"sign={cfg.partition.sign:+d} v={v}",
        f"leaders={','.join(map(str, cfg.partition.leaders))}",
        f"estimates: vF_est={est.vf_est} vH_est={est.vh_est} "
        f"block_length_exact={'yes' if est.block_length_exact else 'no'}",
        f"gamma_cc={_fmt(gamma)} ({float(gamma):.6g})",
        f"processing_gain={metrics.processing_gain}",
        f"channels_gained={metrics.channels_gained}",
        f"gain_percent={float(metrics.gain_percent):.6g}% "
        f"(exact {_fmt(metrics.gain_percent)}%)",
        f"rate_bps={_fmt(metrics.rate_bps)} (T={_fmt(args.T)})",
        f"bandwidth_tdm_hz={_fmt(metrics.bandwidth_tdm_hz)} "
        f"bandwidth_gdm_hz={_fmt(metrics.bandwidth_gdm_hz)} "
        f"(B1={_fmt(args.B1)})",
        f"eta_tdm={_fmt(metrics.eta_tdm)} eta_gdm={_fmt(metrics.eta_gdm)} "
        f"bits/s/Hz",
    ]
    lines += _shannon_lines(spec.p, gamma, args.snr)
    if args.figures:
        lines += _design_figures(args, cfg, fpart, hpart, metrics)
    _emit(args, '\n'.join(lines))
    return 0


def _shannon_lines(p, gamma, snr):
    min_snr = shannon_min_snr(p, gamma)
    lines = [f"shannon_min_snr={_fmt(min_snr)} (for gamma_cc={_fmt(gamma)})"]
    if snr is not None:
        bound = shannon_max_compactness(p, snr)
        verdict = 'yes' if shannon_feasible(p, snr, gamma) else 'no'
        lines.append(f"shannon_max_gamma={_fmt(bound)} at snr={_fmt(snr)} "
                     f"-> feasible={verdict}")
    return lines


def _design_figures(args, cfg, fpart, hpart, metrics):
    from . import figures
    outdir = Path(args.figures)
    outdir.mkdir(parents=True, exist_ok=True)
    made = [
        figures.save_carrier_heatmap(carrier_matrix(cfg.ctx),
                                     outdir / 'design_carriers.png'),
        figures.save_coset_chart({'fourier': fpart, 'hartley': hpart},
                                 outdir / 'design_cosets.png'),
        figures.save_efficiency_chart(metrics,
                                      outdir / 'design_efficiency.png'),
        figures.save_shannon_chart(metrics.p, metrics.compactness,
                                   outdir / 'design_shannon.png',
                                   snr_linear=args.snr),
    ]
    return [f"figure: {p}" for p in made]


def cmd_table(args) -> int:
    cfg = _build_config(args)
    matrix = carrier_matrix(cfg.ctx)
    if args.embed_j:
        matrix = embed_j(matrix)
    text = fileio.carrier_table_text(matrix)
    if args.figures:
        from . import figures
        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        made = figures.save_carrier_heatmap(matrix,
                                            outdir / 'table_carriers.png')
        text += f"\nfigure: {made}"
    _emit(args, text)
    return 0


def cmd_cosets(args) -> int:
    _require_p(args)
    cfg = _build_config(args)
    n, p = cfg.ctx.n, cfg.ctx.spec.p
    lines = []
    for label, part in (('fourier', fourier_cosets(n, p)),
                        ('hartley', hartley_cosets(n, p))):
        lines.append(f"{label} cosets (N={n}, p={p}): v={part.count}")
        for c in part.cosets:
            lines.append(f"C{c[0]}=({','.join(map(str, c))})")
    _emit(args, '\n'.join(lines))
    return 0


def _require_in(args):
    if not args.infile:
        raise ValueError("--in is required for this command")


def _config_for_file(ctx, kind, args) -> MuxConfig:
    # the file header is authoritative; explicit flags must agree with it
    checks = (('p', args.p, ctx.spec.p), ('m', args.m, ctx.spec.m),
              ('n', args.n, ctx.n), ('kind', args.kind, kind),
              ('zeta', args.zeta, ctx.zeta.enc))
    for flag, given, actual in checks:
        if given is not None and given != actual:
            raise ValueError(f"--{flag}={given} does not match the file "
                             f"header ({actual})")
    return MuxConfig(ctx, kind, symbol_period=args.T)


def cmd_mux(args) -> int:
    _require_in(args)
    ctx, kind, frame = fileio.read_user_frame(args.infile)
    cfg = _config_for_file(ctx, kind, args)
    spectrum = mux(cfg, frame)
    if args.outfile:
        fileio.write_spectrum(args.outfile, spectrum)
    else:
        print(fileio.header_line(ctx, kind))
        for z in spectrum.values:
            print(fileio.format_gaussian(z))
    return 0


def cmd_demux(args) -> int:
    _require_in(args)
    spectrum = fileio.read_spectrum(args.infile)
    cfg = _config_for_file(spectrum.ctx, spectrum.kind, args)
    frame = demux(cfg, spectrum)
    if args.outfile:
        fileio.write_user_frame(args.outfile, cfg.ctx, cfg.kind, frame)
    else:
        print(fileio.header_line(cfg.ctx, cfg.kind))
        for s in frame.symbols:
            print(s)
    return 0


def cmd_compress(args) -> int:
    _require_in(args)
    spectrum = fileio.read_spectrum(args.infile)
    cfg = _config_for_file(spectrum.ctx, spectrum.kind, args)
    line = compress_spectrum(spectrum, cfg.partition)
    if args.outfile:
        fileio.write_line_frame(args.outfile, line)
    else:
        print(fileio.header_line(line.ctx, line.kind))
        print(f"compressed=1 "
              f"leaders={','.join(map(str, line.partition.leaders))}")
        for z in line.values:
            print(fileio.format_gaussian(z))
    return 0


def cmd_expand(args) -> int:
    _require_in(args)
    line = fileio.read_line_frame(args.infile)
    spectrum = expand_spectrum(line)
    if args.outfile:
        fileio.write_spectrum(args.outfile, spectrum)
    else:
        print(fileio.header_line(spectrum.ctx, spectrum.kind))
        for z in spectrum.values:
            print(fileio.format_gaussian(z))
    return 0


def cmd_verify(args) -> int:
    cfg = _build_config(args)
    results = run_property_suite(cfg, seed=args.seed, trials=args.trials)
    lines = []
    for r in results:
        status = 'ok  ' if r.passed else 'FAIL'
        suffix = f" -- {r.detail}" if r.detail else ''
        lines.append(f"{status} {r.name}{suffix}")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} properties passed")
    _emit(args, '\n'.join(lines))
    return 2 if failed else 0


def cmd_metrics(args) -> int:
    cfg = _build_config(args)
    v = cfg.partition.count
    metrics = link_metrics(cfg.ctx.spec.p, cfg.ctx.n, v, args.T, args.B1)
    lines = [
        f"p={metrics.p} N={metrics.n} v={metrics.v}",
        f"gamma_cc={_fmt(metrics.compactness)} "
        f"({float(metrics.compactness):.6g})",
        f"processing_gain={metrics.processing_gain}",
        f"channels_gained={metrics.channels_gained}",
        f"gain_percent={float(metrics.gain_percent):.6g}%",
        f"rate_user_bps={_fmt(metrics.rate_user_bps)}",
        f"rate_bps={_fmt(metrics.rate_bps)}",
        f"bandwidth_tdm_hz={_fmt(metrics.bandwidth_tdm_hz)}",
        f"bandwidth_gdm_hz={_fmt(metrics.bandwidth_gdm_hz)}",
        f"eta_tdm={_fmt(metrics.eta_tdm)}",
        f"eta_gdm={_fmt(metrics.eta_gdm)}",
    ]
    lines += _shannon_lines(metrics.p, metrics.compactness, args.snr)
    if args.figures:
        from . import figures
        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        made = [
            figures.save_efficiency_chart(metrics,
                                          outdir / 'metrics_efficiency.png'),
            figures.save_shannon_chart(metrics.p, metrics.compactness,
                                       outdir / 'metrics_shannon.png',
                                       snr_linear=args.snr),
        ]
        lines += [f"figure: {p}" for p in made]
    _emit(args, '\n'.join(lines))
    return 0


_COMMANDS = {
    'design': cmd_design,
    'table': cmd_table,
    'cosets': cmd_cosets,
    'mux': cmd_mux,
    'demux': cmd_demux,
    'compress': cmd_compress,
    'expand': cmd_expand,
    'verify': cmd_verify,
    'metrics': cmd_metrics,
}


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='gdmux',
        description='Galois-division multiplexing toolkit')
    subs = parser.add_subparsers(dest='command', required=True)
    helps = {
        'design': 'report a full scheme design for (p, m, N)',
        'table': 'print the cas carrier table',
        'cosets': 'print Fourier and Hartley coset tables',
        'mux': 'spread a user-frame file onto a spectrum file',
        'demux': 'recover a user frame from a spectrum file',
        'compress': 'keep only coset-leader components',
        'expand': 'refill a compressed line frame',
        'verify': 'run the property suite for a configuration',
        'metrics': 'print rate/bandwidth/efficiency comparisons',
    }
    for name, fn in _COMMANDS.items():
        sub = subs.add_parser(name, help=helps[name])
        _add_common(sub)
        sub.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (GdmError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
