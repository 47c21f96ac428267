import random
import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hmknf import kernels, parse_kb  # noqa: E402
from hmknf.generators import random_dependable_partition, random_kb  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS_SEED = 20240501
CORPUS_SIZE = 500


def load(name):
    return parse_kb((FIXTURES / f"{name}.kb").read_text()).kb


@lru_cache(maxsize=None)
def corpus():
    """The shared random corpus: (kb, dependable partition) pairs.

    KBs whose ontology admits no dependable partition at all are redrawn.
    """
    rng = random.Random(CORPUS_SEED)
    out = []
    while len(out) < CORPUS_SIZE:
        kb = random_kb(rng)
        p = random_dependable_partition(rng, kb)
        if kb.oracle.dependable(p.tmask, p.fmask):
            out.append((kb, p))
    return tuple(out)


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


@pytest.fixture
def ex():
    return load
