import random

import pytest

import gdmux as g
from gdmux import fileio

from conftest import random_frame

GF5_TABLE = """\
1 1 1 1
1 0+j3 4 0+j2
1 4 1 4
1 0+j2 4 0+j3"""

GF5_HEADER = '#gdm v1 p=5 m=1 poly=5 n=4 zeta=2 kind=hartley'


class TestElementSyntax:
    def test_format(self, gf5):
        assert fileio.format_gaussian(gf5.gaussian(3)) == '3'
        assert fileio.format_gaussian(gf5.gaussian(0, 3)) == '0+j3'
        assert fileio.format_gaussian(gf5.gaussian(2, 4)) == '2+j4'

    def test_parse(self, gf5):
        assert fileio.parse_gaussian('3', gf5) == gf5.gaussian(3)
        assert fileio.parse_gaussian('0+j3', gf5) == gf5.gaussian(0, 3)
        assert fileio.parse_gaussian('2-j3', gf5) == gf5.gaussian(2, 2)

    def test_round_trip_all_of_gi27(self, gf27):
        for re in range(0, 27, 5):
            for im in range(0, 27, 4):
                z = gf27.gaussian(re, im)
                assert fileio.parse_gaussian(
                    fileio.format_gaussian(z), gf27) == z

    def test_rejects_garbage(self, gf5):
        for bad in ('', 'j3', '1+j', '1 + j2', '1+k2', '7', '1+j9', 'x'):
            with pytest.raises(ValueError):
                fileio.parse_gaussian(bad, gf5)


class TestHeader:
    def test_exact_text(self, ctx5):
        assert fileio.header_line(ctx5, g.HARTLEY) == GF5_HEADER

    def test_round_trip(self, ctx27):
        line = fileio.header_line(ctx27, g.FOURIER)
        ctx, kind = fileio.parse_header(line)
        assert kind == g.FOURIER
        assert ctx == ctx27
        assert ctx.spec.irreducible == (1, 2, 0, 1)

    def test_rejects_bad_headers(self):
        for bad in ('', 'p=5 m=1', '#gdm v1 p=5 m=1 poly=5 n=4 zeta=2',
                    '#gdm v1 p=5 m=1 poly=5 n=4 zeta=2 kind=walsh',
                    '#gdm v1 p=x m=1 poly=5 n=4 zeta=2 kind=hartley'):
            with pytest.raises(ValueError):
                fileio.parse_header(bad)


class TestFiles:
    def test_user_frame_round_trip(self, tmp_path, cfg27):
        rng = random.Random(83)
        frame = random_frame(cfg27.ctx, rng)
        path = tmp_path / 'frame.txt'
        fileio.write_user_frame(path, cfg27.ctx, cfg27.kind, frame)
        ctx, kind, back = fileio.read_user_frame(path)
        assert ctx == cfg27.ctx and kind == g.HARTLEY and back == frame

    def test_spectrum_round_trip(self, tmp_path, cfg27):
        rng = random.Random(89)
        V = g.mux(cfg27, random_frame(cfg27.ctx, rng))
        path = tmp_path / 'spec.txt'
        fileio.write_spectrum(path, V)
        assert fileio.read_spectrum(path) == V

    def test_spectrum_write_is_stable(self, tmp_path, cfg27):
        rng = random.Random(97)
        V = g.mux(cfg27, random_frame(cfg27.ctx, rng))
        p1, p2 = tmp_path / 'a.txt', tmp_path / 'b.txt'
        fileio.write_spectrum(p1, V)
        fileio.write_spectrum(p2, V)
        assert p1.read_bytes() == p2.read_bytes()

    def test_line_frame_round_trip(self, tmp_path, cfg27):
        rng = random.Random(101)
        V = g.mux(cfg27, random_frame(cfg27.ctx, rng))
        line = g.compress_spectrum(V, cfg27.partition)
        path = tmp_path / 'line.txt'
        fileio.write_line_frame(path, line)
        back = fileio.read_line_frame(path)
        assert back.partition.leaders == (0, 1, 2, 4, 5, 13)
        assert back.values == line.values
        assert g.expand_spectrum(back) == V

    def test_line_frame_leader_validation(self, tmp_path, cfg27):
        rng = random.Random(103)
        V = g.mux(cfg27, random_frame(cfg27.ctx, rng))
        line = g.compress_spectrum(V, cfg27.partition)
        path = tmp_path / 'line.txt'
        fileio.write_line_frame(path, line)
        text = path.read_text().replace('leaders=0,1,2,4,5,13',
                                        'leaders=0,1,2,4,5,14')
        path.write_text(text)
        with pytest.raises(ValueError):
            fileio.read_line_frame(path)

    def test_frame_symbol_validation(self, tmp_path, ctx5):
        path = tmp_path / 'frame.txt'
        path.write_text(GF5_HEADER + '\n4\n0\n1\n7\n')
        with pytest.raises(ValueError):
            fileio.read_user_frame(path)


class TestCarrierTable:
    def test_gf5_golden(self, ctx5):
        assert fileio.carrier_table_text(g.carrier_matrix(ctx5)) == GF5_TABLE

    def test_single_entry(self, gf5):
        ctx = g.TrigContext(gf5, 1)
        assert fileio.carrier_table_text(g.carrier_matrix(ctx)) == '1'
