import json
from pathlib import Path

import pytest

from sncspectrum.snc import parse_spec

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def corpus_doc(name: str) -> dict:
    return json.loads((CORPUS / f"{name}.json").read_text())


@pytest.fixture
def three_lines():
    return parse_spec(corpus_doc("p2-three-lines"))


@pytest.fixture
def hesse():
    return parse_spec(corpus_doc("p2-hesse"))


@pytest.fixture
def p1_mirror():
    return parse_spec(corpus_doc("p1-mirror"))


@pytest.fixture
def a1_linear():
    return parse_spec(corpus_doc("a1-linear"))
