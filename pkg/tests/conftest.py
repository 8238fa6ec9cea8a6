import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("ringatlas", deadline=None, max_examples=25,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ringatlas")


def ring(recipe: str):
    from ringatlas.recipes import parse_recipe, realize
    return realize(parse_recipe(recipe))


@pytest.fixture(scope="session")
def small_rings():
    """Every unital ring of order <= 8 up to isomorphism, plus a few constructions."""
    from ringatlas.enumeration import enumerate_unital_rings
    out = [R for n in range(1, 9) for R in enumerate_unital_rings(n)]
    out += [ring(r) for r in ("tri(Zn:2,2)", "cdiag(Zn:2,3)")]
    return out


@pytest.fixture(scope="session")
def default_corpus():
    from ringatlas.atlas import build_corpus, parse_corpus_spec
    return build_corpus(parse_corpus_spec("default"), skew=True)


def random_relabel(R, seed: int):
    """Random permutation fixing nothing in particular, applied to both tables."""
    from ringatlas.ring import relabel
    perm = np.random.default_rng(seed).permutation(R.order)
    return relabel(R, perm), perm
