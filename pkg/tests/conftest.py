import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

import cosmetic
from cosmetic import analyze, curve_profile, load_complex
from cosmetic.pipeline import synthesize_box_complex

FIXTURES = Path(cosmetic.__file__).parent / "fixtures"


def fixture(name):
    return load_complex(FIXTURES / f"{name}.cfk")


def profile_of(c):
    _r, dec, inv = analyze(c)
    return curve_profile(dec, inv)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def random_census(rng: random.Random, max_height=3, dspan=3, density=0.3, max_count=2):
    """Symmetric (s, d, count) list; may be empty."""
    boxes = []
    for s in range(0, max_height + 1):
        for d in range(-dspan, dspan + 1):
            if rng.random() < density:
                c = rng.randint(1, max_count)
                boxes += [(0, d, c)] if s == 0 else [(s, d, c), (-s, d, c)]
    return boxes


def balanced_census(rng: random.Random, max_height=2, dspan=3):
    """Census built to satisfy the slope-1 balance; sometimes perturbed afterwards."""
    from collections import Counter
    e = Counter()
    for s in range(1, max_height + 1):
        for d in range(-dspan, dspan + 1):
            if rng.random() < 0.3:
                c = rng.randint(1, 2)
                e[(s, d)] += c
                e[(-s, d)] += c
    for (s, d), c in list(e.items()):
        if s > 0:
            for D in range(d - s * s + 1, d + s * s):
                e[(0, D)] += 2 * c
    return [(s, d, c) for (s, d), c in sorted(e.items())]


@st.composite
def censuses(draw, max_height=3, dspan=2, max_count=2):
    boxes = []
    for s in range(0, max_height + 1):
        for d in range(-dspan, dspan + 1):
            c = draw(st.integers(0, max_count))
            if c:
                boxes += [(0, d, c)] if s == 0 else [(s, d, c), (-s, d, c)]
    return boxes


def box_complex(boxes, trivial=True, name="synthetic"):
    return synthesize_box_complex(trivial, boxes, name=name)
