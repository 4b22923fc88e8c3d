"""Plain-text file formats.

Every file starts with the self-describing header

    #gdm v1 p=<p> m=<m> poly=<enc> n=<N> zeta=<enc> kind=<fourier|hartley>

followed by one value per line.  A field element prints as its integer
encoding; a Gaussian element as `A` (purely real) or `A+jB` / `A-jB`.
Line frames insert `compressed=1 leaders=<i1,i2,...>` after the header.
Everything is deterministic, so outputs are byte-comparable.
"""

from __future__ import annotations

import re as _re
from pathlib import Path

from .cosets import LineFrame, scheme_partition
from .fields import FieldSpec, GaussianElement
from .mux import UserFrame
from .transforms import KINDS, Spectrum
from .trig import CarrierMatrix, TrigContext

HEADER_MAGIC = '#gdm v1'

_GAUSSIAN_RE = _re.compile(r'(\d+)(?:([+-])j(\d+))?\Z')


def format_gaussian(z: GaussianElement) -> str:
    return str(z)


def parse_gaussian(text: str, spec: FieldSpec) -> GaussianElement:
    m = _GAUSSIAN_RE.match(text.strip())
    if m is None:
        raise ValueError(f"cannot parse element {text!r}")
    re_enc = int(m.group(1))
    if re_enc >= spec.order:
        raise ValueError(f"encoding {re_enc} out of range for {spec!r}")
    re_el = spec.element(re_enc)
    if m.group(3) is None:
        return GaussianElement(re_el, spec.zero)
    im_enc = int(m.group(3))
    if im_enc >= spec.order:
        raise ValueError(f"encoding {im_enc} out of range for {spec!r}")
    im_el = spec.element(im_enc)
    if m.group(2) == '-':
        im_el = -im_el
    return GaussianElement(re_el, im_el)


def header_line(ctx: TrigContext, kind: str) -> str:
    spec = ctx.spec
    return (f"{HEADER_MAGIC} p={spec.p} m={spec.m} "
            f"poly={spec.poly_encoding()} n={ctx.n} zeta={ctx.zeta.enc} "
            f"kind={kind}")


def parse_header(line: str):
    """Return (ctx, kind) rebuilt from a header line.  Contexts from
    files always use the formal-j (abstract) mode."""
    if not line.startswith(HEADER_MAGIC):
        raise ValueError(f"missing {HEADER_MAGIC!r} header")
    fields = {}
    for tok in line[len(HEADER_MAGIC):].split():
        key, _, val = tok.partition('=')
        fields[key] = val
    try:
        p = int(fields['p'])
        m = int(fields['m'])
        poly = int(fields['poly'])
        n = int(fields['n'])
        zeta = int(fields['zeta'])
        kind = fields['kind']
    except (KeyError, ValueError) as exc:
        raise ValueError(f"malformed header {line!r}") from exc
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    coeffs = []
    for _ in range(m + 1):
        coeffs.append(poly % p)
        poly //= p
    spec = FieldSpec(p, m, coeffs)
    ctx = TrigContext(spec, spec.element(zeta), n)
    return ctx, kind


def _read_lines(path):
    text = Path(path).read_text()
    return [ln for ln in (s.strip() for s in text.splitlines()) if ln]


def _write_text(path, lines):
    Path(path).write_text('\n'.join(lines) + '\n')


# -- user frames -------------------------------------------------------------

def write_user_frame(path, ctx: TrigContext, kind: str,
                     frame: UserFrame) -> None:
    lines = [header_line(ctx, kind)]
    lines += [str(s) for s in frame.symbols]
    _write_text(path, lines)


def read_user_frame(path):
    """Return (ctx, kind, UserFrame)."""
    lines = _read_lines(path)
    ctx, kind = parse_header(lines[0])
    symbols = []
    for ln in lines[1:]:
        s = int(ln)
        if not 0 <= s < ctx.spec.p:
            raise ValueError(f"symbol {s} outside GF({ctx.spec.p})")
        symbols.append(s)
    return ctx, kind, UserFrame(p=ctx.spec.p, symbols=tuple(symbols))


# -- spectra ------------------------------------------------------------------

def write_spectrum(path, spectrum: Spectrum) -> None:
    lines = [header_line(spectrum.ctx, spectrum.kind)]
    lines += [format_gaussian(z) for z in spectrum.values]
    _write_text(path, lines)


def read_spectrum(path) -> Spectrum:
    lines = _read_lines(path)
    ctx, kind = parse_header(lines[0])
    values = [parse_gaussian(ln, ctx.spec) for ln in lines[1:]]
    return Spectrum(ctx, kind, values)


# -- line frames --------------------------------------------------------------

def write_line_frame(path, frame: LineFrame) -> None:
    leaders = ','.join(map(str, frame.partition.leaders))
    lines = [header_line(frame.ctx, frame.kind),
             f"compressed=1 leaders={leaders}"]
    lines += [format_gaussian(z) for z in frame.values]
    _write_text(path, lines)


def read_line_frame(path) -> LineFrame:
    lines = _read_lines(path)
    ctx, kind = parse_header(lines[0])
    m = _re.match(r'compressed=1 leaders=([0-9,]*)\Z', lines[1])
    if m is None:
        raise ValueError(f"missing compressed-leaders line in {path}")
    leaders = tuple(int(t) for t in m.group(1).split(',') if t)
    part = scheme_partition(ctx.n, ctx.spec.p, kind, ctx.j_mode)
    if leaders != part.leaders:
        raise ValueError(
            f"leaders {leaders} do not match the canonical partition "
            f"{part.leaders}")
    values = [parse_gaussian(ln, ctx.spec) for ln in lines[2:]]
    return LineFrame(ctx=ctx, kind=kind, partition=part,
                     values=tuple(values))


# -- carrier tables ------------------------------------------------------------

def carrier_table_text(matrix: CarrierMatrix) -> str:
    """The cas table, one row per line, entries space-separated;
    byte-stable for golden-file comparison."""
    return '\n'.join(
        ' '.join(format_gaussian(z) for z in matrix.row(i))
        for i in range(matrix.n))
