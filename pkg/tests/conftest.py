from pathlib import Path

import pytest

from helpers import DATA_DIR, MockProvider

from sasseval import lexicon


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def mini_corpus_path(data_dir) -> Path:
    return data_dir / "mini_corpus.jsonl"


@pytest.fixture(scope="session")
def mini_outputs_path(data_dir) -> Path:
    return data_dir / "mini_outputs.jsonl"


@pytest.fixture(scope="session")
def resources() -> lexicon.Resources:
    return lexicon.Resources.bundled()


@pytest.fixture()
def mock_provider() -> MockProvider:
    return MockProvider()
