import math
import random

import pytest

import gdmux as g
from gdmux.errors import (
    FormulaInapplicableError,
    InternalInconsistencyError,
    KindMismatchError,
    LeaderCountMismatchError,
    NotBaseFieldError,
    NotCoprimeError,
)

from conftest import random_frame

# coset tables for x^26 - 1 over GF(3), members sorted
FOURIER_26_3 = (
    (0,), (1, 3, 9), (2, 6, 18), (4, 10, 12), (5, 15, 19),
    (7, 11, 21), (8, 20, 24), (13,), (14, 16, 22), (17, 23, 25))
HARTLEY_26_3 = (
    (0,), (1, 3, 9, 17, 23, 25), (2, 6, 8, 18, 20, 24),
    (4, 10, 12, 14, 16, 22), (5, 7, 11, 15, 19, 21), (13,))


def factor(n):
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class TestMobius:
    def test_examples(self):
        assert g.mobius(1) == 1
        assert g.mobius(4) == 0
        assert g.mobius(6) == 1

    def test_against_factorisation_oracle(self):
        for n in range(1, 200):
            f = factor(n)
            if any(e > 1 for e in f.values()):
                expected = 0
            else:
                expected = -1 if len(f) % 2 else 1
            assert g.mobius(n) == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            g.mobius(0)
        with pytest.raises(ValueError):
            g.mobius(-3)


def count_irreducibles_brute(q, k):
    """Oracle: monic degree-k polynomials over GF(q) minus all products
    of two lower-degree monic factors (q prime here)."""
    import itertools

    def polys(deg):
        for lower in itertools.product(range(q), repeat=deg):
            yield list(lower) + [1]

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
        return out

    reducible = set()
    for d in range(1, k // 2 + 1):
        for a in polys(d):
            for b in polys(k - d):
                reducible.add(tuple(mul(a, b)))
    return q ** k - len(reducible)


class TestIrreducibleCount:
    def test_known_values(self):
        assert g.irreducible_count(3, 1) == 3
        assert g.irreducible_count(3, 2) == 3
        assert g.irreducible_count(3, 3) == 8
        assert g.irreducible_count(3, 4) == 18
        assert g.irreducible_count(2, 2) == 1

    @pytest.mark.parametrize('q,k', [(2, 1), (2, 2), (2, 3), (2, 4),
                                     (3, 1), (3, 2), (3, 3), (3, 4),
                                     (5, 1), (5, 2), (5, 3)])
    def test_against_enumeration_oracle(self, q, k):
        assert g.irreducible_count(q, k) == count_irreducibles_brute(q, k)

    def test_validation(self):
        with pytest.raises(ValueError):
            g.irreducible_count(1, 2)
        with pytest.raises(ValueError):
            g.irreducible_count(3, 0)


class TestPartitions:
    def test_fourier_26_3(self):
        part = g.fourier_cosets(26, 3)
        assert part.cosets == FOURIER_26_3
        assert part.count == 10
        assert part.leaders == (0, 1, 2, 4, 5, 7, 8, 13, 14, 17)

    def test_hartley_26_3(self):
        part = g.hartley_cosets(26, 3)
        assert part.cosets == HARTLEY_26_3
        assert part.count == 6
        assert part.leaders == (0, 1, 2, 4, 5, 13)
        assert part.sign == -1

    def test_fourier_4_5_singletons(self):
        part = g.fourier_cosets(4, 5)
        assert part.cosets == ((0,), (1,), (2,), (3,))

    def test_hartley_4_5(self):
        part = g.hartley_cosets(4, 5)
        assert part.cosets == ((0,), (1, 3), (2,))
        assert part.sign == 1

    def test_n1(self):
        assert g.fourier_cosets(1, 7).cosets == ((0,),)
        assert g.hartley_cosets(1, 7).cosets == ((0,),)

    def test_not_coprime(self):
        with pytest.raises(NotCoprimeError):
            g.fourier_cosets(26, 13)
        with pytest.raises(NotCoprimeError):
            g.hartley_cosets(9, 3)

    def test_hartley_5_2_self_reciprocal(self):
        # C1 = {1,2,4,3} is its own reciprocal: merging changes nothing
        part = g.hartley_cosets(5, 2)
        assert part.cosets == ((0,), (1, 2, 3, 4))

    @pytest.mark.parametrize('p', [3, 5, 7, 11, 13])
    @pytest.mark.parametrize('n', [1, 2, 4, 8, 12, 26, 63, 80, 121, 255,
                                   1024, 4096])
    def test_partition_validity(self, n, p):
        if math.gcd(n, p) != 1:
            return
        fpart = g.fourier_cosets(n, p)
        hpart = g.hartley_cosets(n, p)
        for part in (fpart, hpart):
            members = [k for c in part.cosets for k in c]
            assert sorted(members) == list(range(n))  # disjoint cover
            assert part.leaders == tuple(min(c) for c in part.cosets)
        # every Fourier coset sits inside exactly one Hartley coset
        for c in fpart.cosets:
            homes = [hc for hc in hpart.cosets if set(c) <= set(hc)]
            assert len(homes) == 1
        # closure checks
        for c in fpart.cosets:
            assert all((k * p) % n in c for k in c)
        for c in hpart.cosets:
            assert all((k * p) % n in c and (n - k) % n in c for k in c)

    @pytest.mark.parametrize('p,m', [(3, 3), (3, 4), (5, 2), (7, 2)])
    def test_counts_match_minimal_polynomial_bookkeeping(self, p, m):
        n = p ** m - 1
        part = g.fourier_cosets(n, p)
        # nonzero elements group by minimal polynomial: one coset per
        # irreducible of degree d | m, except x itself
        expected = sum(g.irreducible_count(p, d)
                       for d in range(1, m + 1) if m % d == 0) - 1
        assert part.count == expected
        assert sum(len(c) for c in part.cosets) == n
        assert all(m % len(c) == 0 for c in part.cosets)

    def test_vf_80_3(self):
        assert g.fourier_cosets(80, 3).count == 23
        assert g.hartley_cosets(80, 3).count == 14


class TestClosedForm:
    def test_26_user_case(self):
        assert g.hartley_count_closed_form(10, 26) == 6

    def test_trivial(self):
        assert g.hartley_count_closed_form(1, 1) == 1

    def test_inapplicable_n5_p2(self):
        # v_F = 2 for (N=5, p=2) and the lone nonzero coset is
        # self-reciprocal; the formula breaks but enumeration is right
        assert g.fourier_cosets(5, 2).count == 2
        with pytest.raises(FormulaInapplicableError):
            g.hartley_count_closed_form(2, 5)
        assert g.hartley_cosets(5, 2).count == 2

    def test_inapplicable_n80(self):
        with pytest.raises(FormulaInapplicableError):
            g.hartley_count_closed_form(23, 80)

    @pytest.mark.parametrize('n,p', [(26, 3), (4, 5), (6, 7), (10, 11),
                                     (12, 7)])
    def test_agrees_with_enumeration_on_lone_self_reciprocal_cases(
            self, n, p):
        vf = g.fourier_cosets(n, p).count
        try:
            closed = g.hartley_count_closed_form(vf, n)
        except FormulaInapplicableError:
            return
        assert closed == g.hartley_cosets(n, p).count

    def test_can_be_applicable_yet_wrong(self):
        # (N=24, p=5) has five self-reciprocal cosets, so the closed form
        # divides cleanly but undercounts; enumeration stays authoritative
        vf = g.fourier_cosets(24, 5).count
        assert vf == 14
        assert g.hartley_count_closed_form(vf, 24) == 8
        assert g.hartley_cosets(24, 5).count == 9


class TestEstimates:
    def test_26_user_case(self):
        est = g.coset_estimates(26, 3)
        assert (est.vf_est, est.vh_est) == (9, 6)
        assert est.block_length_exact  # 27 = 3^3
        # exact counts for comparison
        assert g.fourier_cosets(26, 3).count == 10
        assert g.hartley_cosets(26, 3).count == 6

    def test_small(self):
        assert g.coset_estimates(4, 1).vf_est == 4
        assert g.coset_estimates(1, 1).vf_est == 1

    def test_block_length_flag(self):
        assert g.coset_estimates(80, 4).block_length_exact  # 81 = 3^4
        assert not g.coset_estimates(10, 4).block_length_exact
        assert not g.coset_estimates(63, 3).block_length_exact  # 64 = 2^6


class TestSchemePartition:
    def test_hartley_formal_j(self):
        part = g.scheme_partition(26, 3, g.HARTLEY)
        assert part.kind == g.HARTLEY and part.count == 6

    def test_hartley_p_one_mod_four_falls_back(self):
        # p = 4k+1: the scheme transmits all N coefficients
        part = g.scheme_partition(4, 5, g.HARTLEY)
        assert part.kind == g.FOURIER and part.count == 4

    def test_fourier(self):
        part = g.scheme_partition(26, 3, g.FOURIER)
        assert part.kind == g.FOURIER and part.count == 10


class TestCompressExpand:
    def test_leaders_and_round_trip_hartley_26(self, cfg27):
        rng = random.Random(43)
        part = cfg27.partition
        for _ in range(50):
            frame = random_frame(cfg27.ctx, rng)
            V = g.mux(cfg27, frame)
            line = g.compress_spectrum(V, part)
            assert len(line.values) == 6
            assert part.leaders == (0, 1, 2, 4, 5, 13)
            assert g.expand_spectrum(line, part) == V

    def test_round_trip_fourier_26(self, ctx27):
        rng = random.Random(47)
        part = g.fourier_cosets(26, 3)
        for _ in range(50):
            v = g.SignalVector.from_ints(
                ctx27, [rng.randrange(3) for _ in range(26)])
            F = g.ffft_forward(v)
            line = g.compress_spectrum(F, part)
            assert len(line.values) == 10
            assert g.expand_spectrum(line, part) == F

    def test_gf5_no_compression(self, cfg5):
        V = g.mux(cfg5, g.UserFrame(p=5, symbols=(4, 0, 1, 2)))
        line = g.compress_spectrum(V, cfg5.partition)
        assert len(line.values) == 4
        assert g.expand_spectrum(line, cfg5.partition) == V

    def test_gf5_merged_partition_also_sound(self, ctx5):
        # with formal j the reciprocal-merged cosets are usable even for
        # p = 4k+1; the scheme just does not choose them by default
        part = g.hartley_cosets(4, 5)
        rng = random.Random(53)
        for _ in range(25):
            v = g.SignalVector.from_ints(
                ctx5, [rng.randrange(5) for _ in range(4)])
            V = g.ffht_forward(v)
            line = g.compress_spectrum(V, part)
            assert len(line.values) == 3
            assert g.expand_spectrum(line, part) == V

    def test_zero_spectrum(self, cfg27):
        zero = cfg27.ctx.spec.gaussian(0)
        V = g.Spectrum(cfg27.ctx, g.HARTLEY, [zero] * 26)
        line = g.compress_spectrum(V, cfg27.partition)
        assert all(z.is_zero() for z in line.values)
        assert g.expand_spectrum(line, cfg27.partition) == V

    def test_compress_refuses_corrupted_spectrum(self, cfg27):
        rng = random.Random(59)
        V = g.mux(cfg27, random_frame(cfg27.ctx, rng))
        values = list(V.values)
        values[3] = values[3] + 1
        bad = g.Spectrum(cfg27.ctx, g.HARTLEY, values)
        with pytest.raises(NotBaseFieldError):
            g.compress_spectrum(bad, cfg27.partition)

    def test_partition_mismatch_rejected(self, cfg27, ctx27):
        V = g.mux(cfg27, g.UserFrame(p=3, symbols=(0,) * 26))
        with pytest.raises(KindMismatchError):
            g.compress_spectrum(V, g.fourier_cosets(26, 3))  # sign -1 needed
        F = g.ffft_forward(g.SignalVector.from_ints(ctx27, [0] * 26))
        with pytest.raises(KindMismatchError):
            g.compress_spectrum(F, g.hartley_cosets(26, 3))
        with pytest.raises(ValueError):
            g.compress_spectrum(V, g.hartley_cosets(13, 3))

    def test_merged_partition_rejected_for_embedded_spectra(self):
        cfg = g.MuxConfig.build(5, j_mode=g.EMBEDDED)
        V = g.mux(cfg, g.UserFrame(p=5, symbols=(4, 0, 1, 2)))
        with pytest.raises(KindMismatchError):
            g.compress_spectrum(V, g.hartley_cosets(4, 5))

    def test_leader_count_mismatch(self, cfg27):
        rng = random.Random(61)
        V = g.mux(cfg27, random_frame(cfg27.ctx, rng))
        line = g.compress_spectrum(V, cfg27.partition)
        with pytest.raises(LeaderCountMismatchError):
            g.LineFrame(ctx=line.ctx, kind=line.kind,
                        partition=cfg27.partition, values=line.values[:-1])

    def test_wrong_sign_partition_detected_on_expand(self, cfg27):
        # a partition whose sign contradicts the spectrum's conjugacy
        # cannot expand consistently; V_1 = cas(1) has nonzero imaginary
        # part, so the frobenius walk around coset 1 must clash
        frame = g.UserFrame(p=3, symbols=(0, 1) + (0,) * 24)
        V = g.mux(cfg27, frame)
        good = cfg27.partition
        flipped = g.CosetPartition(n=26, p=3, kind=g.HARTLEY, sign=1,
                                   cosets=good.cosets)
        line = g.LineFrame(ctx=V.ctx, kind=V.kind, partition=flipped,
                           values=tuple(V.values[l] for l in good.leaders))
        with pytest.raises(InternalInconsistencyError):
            g.expand_spectrum(line, flipped)
