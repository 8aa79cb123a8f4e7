import json
from pathlib import Path

import pytest

from siterank.fuzzy import DEFAULT_SCALE
from siterank.registry import default_registry

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture(scope="session")
def scale():
    return DEFAULT_SCALE


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def survey_doc():
    return json.loads((FIXTURES / "surveys_5experts.json").read_text())
