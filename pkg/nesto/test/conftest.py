import pytest

from nesto.config import NestoConfig, set_config


@pytest.fixture(autouse=True)
def default_config():
    """Each test starts from the built-in defaults, whatever the environment says."""
    set_config(NestoConfig())
    yield
    set_config(NestoConfig())


@pytest.fixture
def small_samples():
    config = NestoConfig(random_samples=3, shelling_samples=2)
    set_config(config)
    return config
