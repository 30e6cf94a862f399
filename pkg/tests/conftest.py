from pathlib import Path

import pytest

from m2c.builtin.instances import FiniteAbelianGroup, build_scalar_instance, build_strict_instance, product_cochain
from m2c.core.settings import Settings

INSTANCES = Path(__file__).resolve().parent.parent / "assets" / "instances"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    monkeypatch.delenv("M2C_THREADS", raising=False)
    monkeypatch.delenv("M2C_CONFIG", raising=False)
    Settings.reset()
    yield
    Settings.reset()


@pytest.fixture
def instances_dir() -> Path:
    return INSTANCES


@pytest.fixture(scope="session")
def strict2():
    return build_strict_instance(2)


@pytest.fixture
def z2():
    return FiniteAbelianGroup.parse("Z2")


@pytest.fixture
def abcd(z2):
    """Scalar instance over Z/2 with ω(A,B,C,D) = ABCD."""
    return build_scalar_instance(z2, z2, product_cochain(z2, z2), name="abcd")
