# tests/conftest.py
import pytest

from app.core.matrix import Matrix
from app.core.scalar import parse_scalar
from app.core.vector import Vector
from app.utils.config import get_settings


def mat(text: str) -> Matrix:
    """Inline literal, rows separated by `;`."""
    return Matrix([[parse_scalar(tok) for tok in row.split()] for row in text.split(";")])


def vec(text: str) -> Vector:
    return Vector(parse_scalar(tok) for tok in text.split())


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for name in ("SEED", "NU_LOW", "NU_HIGH", "GHOST_DENSITY", "ZERO_DENSITY", "LOG_LEVEL"):
        monkeypatch.delenv(f"SUPERTROP_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def example():
    """The running 2x2 example [[0,1],[2,0]]: |A| = 3, adj(A) = A."""
    return mat("0 1; 2 0")
