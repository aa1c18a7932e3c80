"""Shared test utilities: the mock embedding provider and fixture gating."""

import hashlib
import os
from pathlib import Path

import numpy as np
import pytest

from sasseval import lexicon
from sasseval.errors import DegenerateDocument
from sasseval.semantic import EmbeddedText

DATA_DIR = Path(__file__).parent / "data"

# Environment hooks for the released-fixture reproductions; absent by default.
SASS_CORPUS_ENV = "SASSEVAL_SASS_CORPUS"
MODEL_OUTPUTS_ENV = "SASSEVAL_MODEL_OUTPUTS"
EMBED_ENDPOINT_ENV = "SASSEVAL_EMBED_ENDPOINT"
VOA_ENV = "SASSEVAL_VOA"
FREQ_TABLE_ENV = "SASSEVAL_FREQ_TABLE"


class MockProvider:
    """Deterministic in-memory embedding provider.

    Each word maps to a fixed pseudo-random unit-norm vector derived from a
    sha256-seeded generator, so identical texts embed identically across
    calls and across interpreter runs.
    """

    def __init__(self, provider_id="mock-encoder", layer=18, dim=8):
        self.provider_id = provider_id
        self.layer = layer
        self.dim = dim

    def _vector(self, token: str) -> np.ndarray:
        seed = int.from_bytes(hashlib.sha256(token.encode()).digest()[:4], "big")
        rng = np.random.default_rng(seed)
        v = rng.normal(size=self.dim)
        return v / np.linalg.norm(v)

    def embed(self, text: str) -> EmbeddedText:
        tokens = tuple(text.lower().split())
        if not tokens:
            raise DegenerateDocument("empty text")
        vectors = np.stack([self._vector(t) for t in tokens])
        return EmbeddedText(tokens=tokens, vectors=vectors,
                            layer=self.layer, provider_id=self.provider_id)


def require_env_path(name: str) -> Path:
    value = os.environ.get(name)
    if not value:
        pytest.skip(f"released fixture not available: set {name} to run this criterion")
    p = Path(value)
    if not p.exists():
        pytest.skip(f"{name} points to a missing path: {p}")
    return p


def reproduction_resources() -> lexicon.Resources:
    """Bundled resources, overridable for reproduction runs.

    The bundled frequency table is an approximate offline stand-in; matching
    the published word-accessibility column requires a real Wikipedia-derived
    table (see scripts/build_freq_table.py) supplied via SASSEVAL_FREQ_TABLE.
    """
    voa_path = os.environ.get(VOA_ENV)
    freq_path = os.environ.get(FREQ_TABLE_ENV)
    return lexicon.Resources(
        voa=lexicon.load_voa(voa_path) if voa_path else lexicon.bundled_voa(),
        freq_table=(lexicon.load_frequency_table(freq_path) if freq_path
                    else lexicon.bundled_frequency_table()),
    )
