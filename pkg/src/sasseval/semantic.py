"""Semantic-retention scoring: greedy-match BERTScore over token embeddings.

The scoring core is provider-agnostic: any object satisfying the
:class:`EmbeddingProvider` protocol (deterministic ``embed(text)`` returning
an :class:`EmbeddedText`) can back it. The shipped provider is an HTTP
client for the sidecar embedding service; tests use in-memory mocks.

Precision is the mean over candidate tokens of the maximum cosine
similarity to any reference token; recall is symmetric; F1 is their
harmonic mean. No importance weighting and no baseline rescaling are
applied. Cosine similarity of bitwise-identical vectors is exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable

import numpy as np
import requests

from .errors import DegenerateDocument, ProviderMismatch, ProviderUnavailable, TextTooLong

DEFAULT_LAYER = 18


@dataclass(frozen=True)
class EmbeddedText:
    """Token strings paired with one fixed-dimension vector each."""

    tokens: tuple[str, ...]
    vectors: np.ndarray  # shape (n_tokens, dim), float64
    layer: int
    provider_id: str

    def __post_init__(self):
        vectors = np.asarray(self.vectors, dtype=np.float64)
        object.__setattr__(self, "vectors", vectors)
        if vectors.ndim != 2:
            raise ValueError("vectors must be a 2-D array (tokens x dim)")
        if len(self.tokens) != vectors.shape[0]:
            raise ValueError(f"{len(self.tokens)} tokens but {vectors.shape[0]} vectors")
        if len(self.tokens) < 1:
            raise ValueError("embedded text needs at least one token")
        if not np.all(np.isfinite(vectors)):
            raise ValueError("vectors contain NaN or Inf")
        norms = np.linalg.norm(vectors, axis=1)
        if np.any(norms == 0.0):
            raise ValueError("all-zero vectors are not allowed")


@dataclass(frozen=True)
class SemanticScore:
    precision: float
    recall: float
    f1: float


@runtime_checkable
class EmbeddingProvider(Protocol):
    def embed(self, text: str) -> EmbeddedText: ...


def _similarity_matrix(cand: np.ndarray, ref: np.ndarray) -> np.ndarray:
    cand_n = cand / np.linalg.norm(cand, axis=1, keepdims=True)
    ref_n = ref / np.linalg.norm(ref, axis=1, keepdims=True)
    sim = np.clip(cand_n @ ref_n.T, -1.0, 1.0)
    # Bitwise-identical vectors have cosine exactly 1; repair float noise so
    # self-matches are exact.
    ref_index: dict[bytes, list[int]] = {}
    for j in range(ref.shape[0]):
        ref_index.setdefault(ref[j].tobytes(), []).append(j)
    for i in range(cand.shape[0]):
        for j in ref_index.get(cand[i].tobytes(), ()):
            sim[i, j] = 1.0
    return sim


def bertscore(candidate: EmbeddedText, reference: EmbeddedText) -> SemanticScore:
    """Greedy-match F1 between candidate and reference embeddings."""
    if candidate.provider_id != reference.provider_id or candidate.layer != reference.layer:
        raise ProviderMismatch(
            f"candidate from ({candidate.provider_id}, layer {candidate.layer}) but "
            f"reference from ({reference.provider_id}, layer {reference.layer})")
    sim = _similarity_matrix(candidate.vectors, reference.vectors)
    precision = float(np.mean(np.max(sim, axis=1)))
    recall = float(np.mean(np.max(sim, axis=0)))
    f1 = 0.0 if precision + recall == 0.0 else \
        2.0 * precision * recall / (precision + recall)
    return SemanticScore(precision=precision, recall=recall, f1=f1)


@dataclass
class HttpEmbeddingProvider:
    """Client for the sidecar embedding service's POST /embed wire protocol.

    Request body: ``{"texts": [...], "layer": <int>}``. Response body:
    ``{"model_id": ..., "layer": ..., "results": [{"tokens": [...],
    "special": [...], "vectors": [[...], ...]}]}``. Special tokens are
    dropped before scoring. Texts longer than the provider's context window
    are reported as :class:`TextTooLong`, never truncated.

    Stateless per call (no shared session), so instances are safe to share
    across the pipeline's worker threads.
    """

    endpoint: str
    layer: int = DEFAULT_LAYER
    timeout: float = 60.0

    def embed(self, text: str) -> EmbeddedText:
        if not text.strip():
            raise DegenerateDocument("cannot embed empty text")
        url = self.endpoint.rstrip("/") + "/embed"
        try:
            resp = requests.post(url, json={"texts": [text], "layer": self.layer},
                                 timeout=self.timeout)
        except requests.RequestException as exc:
            raise ProviderUnavailable(f"embedding service unreachable: {exc}") from exc
        if resp.status_code == 413:
            detail = _safe_json(resp)
            raise TextTooLong(f"text exceeds the provider context window: {detail}")
        if resp.status_code != 200:
            raise ProviderUnavailable(
                f"embedding service returned HTTP {resp.status_code}: {resp.text[:200]}")
        body = _safe_json(resp)
        if body is None or "results" not in body:
            raise ProviderUnavailable("embedding service returned a malformed body")
        result = body["results"][0]
        tokens, vectors = [], []
        for token, special, vector in zip(result["tokens"], result["special"],
                                          result["vectors"]):
            if special:
                continue
            tokens.append(token)
            vectors.append(vector)
        if not tokens:
            raise ProviderUnavailable("provider returned only special tokens")
        return EmbeddedText(tokens=tuple(tokens),
                            vectors=np.asarray(vectors, dtype=np.float64),
                            layer=int(body["layer"]),
                            provider_id=str(body["model_id"]))


def _safe_json(resp: requests.Response):
    try:
        return resp.json()
    except ValueError:
        return None
