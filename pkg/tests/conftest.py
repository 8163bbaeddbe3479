import numpy as np
import pytest

from src.model import DRule, ModelParams


@pytest.fixture
def resonant():
    """
    Resonant Parameters omega_c = omega_b = 1 for a Coupling and a D-Rule
    """
    def make(g: float, rule: DRule = DRule.trk()) -> ModelParams:
        return rule.params(1.0, 1.0, g)
    return make


@pytest.fixture
def fine_grid() -> np.ndarray:
    return np.linspace(0.0, 3.0, 3001)


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """
    Run the Command Line in a temporary Directory
    """
    monkeypatch.chdir(tmp_path)
    return tmp_path
