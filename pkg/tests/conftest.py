import random

import pytest

from lemidx.optbwtrl import build_optbwtrl
from lemidx.textcore import build_rlbwt, build_suffix_structures, validate_text

FIG1 = b"missisismississippi$"


def build_all(raw: bytes, d: int = 2, validate: bool = True):
    """Text, suffix structures, RLBWT, and index for a raw byte string."""
    text = validate_text(raw)
    s = build_suffix_structures(text)
    rl = build_rlbwt(s)
    return text, s, rl, build_optbwtrl(s, rl, d=d, validate=validate)


def random_text(rng: random.Random, max_n: int, letters: bytes = b"acgt") -> bytes:
    """Random raw text, half uniform, half repetitive-with-mutations."""
    n0 = rng.randint(1, max_n)
    if rng.random() < 0.5:
        return bytes(rng.choice(letters) for _ in range(n0))
    base = bytes(rng.choice(letters) for _ in range(max(2, n0 // 8)))
    rep = (base * (n0 // len(base) + 1))[:n0]
    return bytes(b if rng.random() > 0.04 else rng.choice(letters) for b in rep)


def random_pattern(rng: random.Random, text, max_m: int, letters: bytes = b"acgt") -> bytes:
    """Random pattern: uniform, or a mutated slice of the text (to
    guarantee matches), occasionally with a symbol absent from the text."""
    m = rng.randint(1, max_m)
    if rng.random() < 0.5 and text.n > 2:
        start = rng.randint(1, text.n - 1)
        pat = text.render(start, min(m, text.n - start))
        return bytes(b if rng.random() > 0.08 else rng.choice(letters) for b in pat)
    pool = letters + (b"z" if rng.random() < 0.3 else b"")
    return bytes(rng.choice(pool) for _ in range(m))


@pytest.fixture(scope="session")
def fig1():
    """(text, structures, rlbwt, index) for the worked example text."""
    return build_all(FIG1)


@pytest.fixture(scope="session")
def fig1_text(fig1):
    return fig1[0]


@pytest.fixture(scope="session")
def fig1_structs(fig1):
    return fig1[1]


@pytest.fixture(scope="session")
def fig1_rlbwt(fig1):
    return fig1[2]


@pytest.fixture(scope="session")
def fig1_index(fig1):
    return fig1[3]
