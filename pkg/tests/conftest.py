import pytest

from logictop.corpus import (
    corpus_logics,
    corpus_spaces,
    degenerate_quartet,
    l3,
    l22,
    lv3,
    sierpinski,
    v_frame,
)


@pytest.fixture(scope="session")
def chain3_logic():
    return l3()


@pytest.fixture(scope="session")
def boolean4_logic():
    return l22()


@pytest.fixture(scope="session")
def vframe_logic():
    return lv3()


@pytest.fixture(scope="session")
def chain_space():
    return sierpinski()


@pytest.fixture(scope="session")
def vframe():
    return v_frame()


@pytest.fixture(scope="session")
def small_logics():
    """Corpus logics of up to three frame points plus the degenerate quartet."""
    return corpus_logics(3)


@pytest.fixture(scope="session")
def small_spaces():
    return corpus_spaces(3)


@pytest.fixture(scope="session")
def quartet():
    return degenerate_quartet()
