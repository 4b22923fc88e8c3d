import pytest

import gdmux as g
from gdmux.errors import JNotEmbeddableError


# cas table over GF(5) with zeta = 2: rows i, slots k, entries (re, im)
GF5_CAS_ROWS = [
    [(1, 0), (1, 0), (1, 0), (1, 0)],
    [(1, 0), (0, 3), (4, 0), (0, 2)],
    [(1, 0), (4, 0), (1, 0), (4, 0)],
    [(1, 0), (0, 2), (4, 0), (0, 3)],
]


def as_pairs(row):
    return [(z.re.enc, z.im.enc) for z in row]


class TestTrigContext:
    def test_infers_order(self, gf5):
        ctx = g.TrigContext(gf5, 2)
        assert ctx.n == 4

    def test_rejects_wrong_order(self, gf5):
        with pytest.raises(ValueError):
            g.TrigContext(gf5, 2, n=2)
        with pytest.raises(ValueError):
            g.TrigContext(gf5, 4, n=4)  # 4 has order 2

    def test_for_length(self, gf27):
        ctx = g.TrigContext.for_length(gf27, 13)
        assert g.element_order(ctx.zeta) == 13

    def test_embedded_requires_4k_plus_1(self, gf5, gf27):
        ectx = g.TrigContext(gf5, 2, j_mode=g.EMBEDDED)
        assert ectx.embed_root == 2
        with pytest.raises(JNotEmbeddableError):
            g.TrigContext.for_length(gf27, 26, j_mode=g.EMBEDDED)


class TestTrigFunctions:
    def test_cos_values(self, ctx5):
        assert g.ff_cos(ctx5, 0) == 1
        assert g.ff_cos(ctx5, 1) == 0   # (2 + 3) / 2
        assert g.ff_cos(ctx5, 2) == 4   # (4 + 4) * 3

    def test_sin_values(self, ctx5):
        assert g.ff_sin(ctx5, 0) == 0
        assert g.ff_sin(ctx5, 1) == ctx5.spec.gaussian(0, 3)
        assert g.ff_sin(ctx5, 2) == 0

    def test_cas_values(self, ctx5):
        assert g.ff_cas(ctx5, 0) == 1
        assert g.ff_cas(ctx5, 1) == ctx5.spec.gaussian(0, 3)
        assert g.ff_cas(ctx5, 2) == 4
        assert g.ff_cas(ctx5, 3) == ctx5.spec.gaussian(0, 2)

    def test_arguments_reduce_mod_n(self, ctx5):
        for x in range(-8, 9):
            assert g.ff_cas(ctx5, x) == g.ff_cas(ctx5, x % 4)

    @pytest.mark.parametrize('ctx_name', ['ctx5', 'ctx7', 'ctx11', 'ctx27'])
    def test_unit_circle(self, ctx_name, request):
        ctx = request.getfixturevalue(ctx_name)
        for x in range(ctx.n):
            c, s = g.ff_cos(ctx, x), g.ff_sin(ctx, x)
            assert c * c + s * s == 1
            assert c.is_real()
            assert s.re.enc == 0

    @pytest.mark.parametrize('ctx_name', ['ctx5', 'ctx7', 'ctx27'])
    def test_parity(self, ctx_name, request):
        ctx = request.getfixturevalue(ctx_name)
        for x in range(ctx.n):
            assert g.ff_cos(ctx, -x) == g.ff_cos(ctx, x)
            assert g.ff_sin(ctx, -x) == -g.ff_sin(ctx, x)
            assert g.ff_cas(ctx, x) + g.ff_cas(ctx, -x) == 2 * g.ff_cos(ctx, x)

    @pytest.mark.parametrize('ctx_name', ['ctx5', 'ctx7', 'ctx27'])
    def test_kernel_frobenius(self, ctx_name, request):
        ctx = request.getfixturevalue(ctx_name)
        p = ctx.spec.p
        s = g.hartley_sign(ctx)
        for x in range(ctx.n):
            assert g.ff_cas(ctx, x) ** p == g.ff_cas(ctx, s * p * x)


class TestCarrierMatrix:
    def test_gf5_rows(self, ctx5):
        matrix = g.carrier_matrix(ctx5)
        for i, expected in enumerate(GF5_CAS_ROWS):
            assert as_pairs(matrix.row(i)) == expected

    def test_row0_col0_ones(self, ctx27):
        matrix = g.carrier_matrix(ctx27)
        one = ctx27.spec.gaussian(1)
        assert all(z == one for z in matrix.row(0))
        assert all(matrix.row(i)[0] == one for i in range(26))

    @pytest.mark.parametrize('ctx_name', ['ctx5', 'ctx7', 'ctx27'])
    def test_symmetry(self, ctx_name, request):
        ctx = request.getfixturevalue(ctx_name)
        matrix = g.carrier_matrix(ctx)
        rows = matrix.rows
        for i in range(ctx.n):
            for k in range(ctx.n):
                assert rows[i][k] == rows[k][i]

    def test_rows_equal_cas_samples(self, ctx7):
        matrix = g.carrier_matrix(ctx7)
        for i in range(7 - 1):
            assert matrix.row(i) == tuple(
                g.ff_cas(ctx7, i * k) for k in range(ctx7.n))


class TestEmbedJ:
    def test_walsh_degeneration(self, ctx5):
        embedded = g.embed_j(g.carrier_matrix(ctx5))
        rows = [[z.re.enc for z in embedded.row(i)] for i in range(4)]
        assert rows == [[1, 1, 1, 1], [1, 1, 4, 4],
                        [1, 4, 1, 4], [1, 4, 4, 1]]
        assert all(z.is_real() for row in embedded.rows for z in row)

    def test_entrywise_map(self, ctx5):
        matrix = g.carrier_matrix(ctx5)
        embedded = g.embed_j(matrix)
        r = 2  # canonical root of -1 mod 5
        for i in range(4):
            for z, w in zip(matrix.row(i), embedded.row(i)):
                assert w.re == z.re + r * z.im

    def test_rejects_4k_plus_3(self, ctx27):
        with pytest.raises(JNotEmbeddableError):
            g.embed_j(g.carrier_matrix(ctx27))

    def test_idempotent(self, ctx5):
        embedded = g.embed_j(g.carrier_matrix(ctx5))
        assert g.embed_j(embedded) is embedded

    def test_embedded_matrix_is_embedded_context_matrix(self, ctx5):
        assert g.embed_j(g.carrier_matrix(ctx5)) == \
            g.carrier_matrix(ctx5.embedded())


class TestOrthogonality:
    def brute_force_check(self, matrix):
        """Oracle: all pair inner products by plain GI multiplication."""
        ctx = matrix.ctx
        n = ctx.n
        energy = ctx.spec.gaussian(n % ctx.spec.p)
        zero = ctx.spec.gaussian(0)
        rows = matrix.rows
        for i in range(n):
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + rows[i][k] * rows[j][k]
                assert acc == (energy if i == j else zero), (i, j)

    def test_gf5(self, ctx5):
        matrix = g.carrier_matrix(ctx5)
        report = g.verify_orthogonality(matrix)
        assert report.passed
        assert report.energy.enc == 4
        assert report.failures == ()
        self.brute_force_check(matrix)

    def test_gi27(self, ctx27):
        report = g.verify_orthogonality(g.carrier_matrix(ctx27))
        assert report.passed
        assert report.energy.enc == 2  # 26 mod 3

    def test_n1(self, gf5):
        ctx = g.TrigContext(gf5, 1)
        report = g.verify_orthogonality(g.carrier_matrix(ctx))
        assert report.passed and report.energy.enc == 1

    def test_conjugated_variant_differs_on_gf5(self, ctx5):
        # with conjugation the GF(5) matrix is NOT orthogonal; the report
        # carries that as a secondary field
        report = g.verify_orthogonality(g.carrier_matrix(ctx5))
        assert not report.conjugated_passed
        assert report.conjugated_failures

    def test_tampered_matrix_fails(self, ctx5):
        rows = [list(r) for r in g.carrier_matrix(ctx5).rows]
        rows[1][2] = ctx5.spec.gaussian(2, 2)
        report = g.verify_orthogonality(g.CarrierMatrix(ctx5, rows))
        assert not report.passed
        assert any(f[0] == 'row' for f in report.failures)
        assert any(f[0] == 'col' for f in report.failures)

    @pytest.mark.parametrize('ctx_name', ['ctx7', 'ctx11', 'ctx81'])
    def test_more_configs(self, ctx_name, request):
        ctx = request.getfixturevalue(ctx_name)
        report = g.verify_orthogonality(g.carrier_matrix(ctx))
        assert report.passed
        assert report.energy.enc == ctx.n % ctx.spec.p

    def test_embedded_still_orthogonal(self, ctx5):
        report = g.verify_orthogonality(g.embed_j(g.carrier_matrix(ctx5)))
        assert report.passed
