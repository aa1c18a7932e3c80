"""Encoder wrapper: tokenization, length checks, and per-layer hidden states.

Loads a pretrained bidirectional transformer once, runs it in inference mode
(dropout off, no gradients), and serves per-token vectors from any layer of
its stack. Texts longer than the model's position budget are rejected with
the offending index, never truncated. Inference is serialized with a lock so
concurrent requests cannot interleave tensors.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import torch
from transformers import AutoModel, AutoTokenizer


class EncoderError(Exception):
    pass


class InvalidLayer(EncoderError):
    def __init__(self, layer: int, n_layers: int):
        self.layer = layer
        self.n_layers = n_layers
        super().__init__(f"layer {layer} outside 0..{n_layers}")


class TextTooLong(EncoderError):
    def __init__(self, index: int, n_tokens: int, limit: int):
        self.index = index
        self.n_tokens = n_tokens
        self.limit = limit
        super().__init__(f"text {index}: {n_tokens} tokens exceeds context window {limit}")


@dataclass
class TextEmbedding:
    tokens: list[str]
    special: list[bool]
    vectors: list[list[float]]


class Encoder:
    def __init__(self, model_id: str, device: str = "cpu"):
        self.model_id = model_id
        self.device = torch.device(device)
        self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        self.model = AutoModel.from_pretrained(model_id).to(self.device).eval()
        self._lock = threading.Lock()

    @property
    def n_layers(self) -> int:
        return int(self.model.config.num_hidden_layers)

    @property
    def hidden_size(self) -> int:
        return int(self.model.config.hidden_size)

    @property
    def context_window(self) -> int:
        return int(self.model.config.max_position_embeddings)

    def embed_batch(self, texts: list[str], layer: int) -> list[TextEmbedding]:
        """Per-token vectors from ``hidden_states[layer]`` for each text.

        Layer 0 is the embedding output; layers 1..n_layers are transformer
        block outputs. Batch order is preserved; each text is encoded on its
        own so token counts and vectors never depend on what else is in the
        batch.
        """
        if not 0 <= layer <= self.n_layers:
            raise InvalidLayer(layer, self.n_layers)
        encodings = []
        for index, text in enumerate(texts):
            ids = self.tokenizer(text, truncation=False)["input_ids"]
            if len(ids) > self.context_window:
                raise TextTooLong(index, len(ids), self.context_window)
            encodings.append(ids)

        results = []
        with self._lock, torch.no_grad():
            for ids in encodings:
                output = self.model(torch.tensor([ids], device=self.device),
                                    output_hidden_states=True)
                vectors = output.hidden_states[layer][0].cpu()
                if not torch.isfinite(vectors).all():
                    raise EncoderError("encoder produced non-finite values")
                tokens = self.tokenizer.convert_ids_to_tokens(ids)
                special_ids = set(self.tokenizer.all_special_ids)
                results.append(TextEmbedding(
                    tokens=tokens,
                    special=[i in special_ids for i in ids],
                    vectors=[[float(x) for x in row] for row in vectors],
                ))
        return results
