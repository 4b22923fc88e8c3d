import random

import pytest

import gdmux as g


@pytest.fixture(scope='session')
def gf5():
    return g.make_field(5)


@pytest.fixture(scope='session')
def gf7():
    return g.make_field(7)


@pytest.fixture(scope='session')
def gf11():
    return g.make_field(11)


@pytest.fixture(scope='session')
def gf27():
    return g.make_field(3, 3)


@pytest.fixture(scope='session')
def gf81():
    return g.make_field(3, 4)


@pytest.fixture(scope='session')
def ctx5(gf5):
    # the worked 4-user example: GF(5), zeta = 2 of order 4
    return g.TrigContext(gf5, 2)


@pytest.fixture(scope='session')
def ctx7(gf7):
    return g.TrigContext.for_length(gf7, 6)


@pytest.fixture(scope='session')
def ctx11(gf11):
    return g.TrigContext.for_length(gf11, 10)


@pytest.fixture(scope='session')
def ctx27(gf27):
    return g.TrigContext.for_length(gf27, 26)


@pytest.fixture(scope='session')
def ctx81(gf81):
    return g.TrigContext.for_length(gf81, 80)


@pytest.fixture(scope='session')
def cfg5(ctx5):
    return g.MuxConfig(ctx5)


@pytest.fixture(scope='session')
def cfg27(ctx27):
    return g.MuxConfig(ctx27)


@pytest.fixture(scope='session')
def cfg81(ctx81):
    return g.MuxConfig(ctx81)


def random_frame(ctx, rng: random.Random) -> g.UserFrame:
    p = ctx.spec.p
    return g.UserFrame(p=p, symbols=tuple(rng.randrange(p)
                                          for _ in range(ctx.n)))


def random_gi_vector(ctx, rng: random.Random) -> g.SignalVector:
    q = ctx.spec.order
    return g.SignalVector(ctx, [ctx.spec.gaussian(rng.randrange(q),
                                                  rng.randrange(q))
                                for _ in range(ctx.n)])
