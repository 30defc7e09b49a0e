import pytest
from hypothesis import settings

from affsemi import build

from corpus import CORPUS, PLANAR

settings.register_profile("exact", deadline=None, derandomize=True)
settings.load_profile("exact")


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_semigroup(request):
    return build(CORPUS[request.param])


@pytest.fixture(params=sorted(PLANAR), ids=sorted(PLANAR))
def planar_semigroup(request):
    return build(PLANAR[request.param])
