import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent
sys.path.insert(0, str(ROOT / "client"))
sys.path.insert(0, str(ROOT / "server"))

from fixtures import psl27_three_generator, psl27_two_generator  # noqa: E402
from fpgroup import parse_presentation, triangle_presentation, von_dyck_presentation  # noqa: E402
from toolkit import SurfaceToolkit  # noqa: E402


@pytest.fixture
def t237():
    return triangle_presentation(2, 3, 7)


@pytest.fixture
def t237_two_generator():
    return von_dyck_presentation(2, 3, 7)


@pytest.fixture
def hurwitz():
    return parse_presentation("<x,y | x^2, y^3, (x*y)^7, (x^-1*y^-1*x*y)^4>")


@pytest.fixture
def psl27_pair():
    return psl27_two_generator()


@pytest.fixture
def psl27_triple():
    return psl27_three_generator()


@pytest.fixture
def toolkit():
    return SurfaceToolkit({'sweep_bound': 10, 'max_cosets': 100_000, 'max_quotient_order': 100_000})


@pytest.fixture
def surfaces_dir():
    return ROOT / "surfaces"
