import pathlib

import pytest
import torch
from fastapi.testclient import TestClient
from tokenizers import Tokenizer, models, normalizers, pre_tokenizers
from tokenizers.processors import TemplateProcessing
from transformers import BertConfig, BertModel, PreTrainedTokenizerFast

from embed_service.app import create_app

# The reference encoder (a 24-layer uncased large bidirectional model) is not
# fetchable in offline CI, so tests run against a locally built encoder with
# the same stack shape: 24 layers, 1024 hidden width, WordPiece tokenizer.
# Point EMBED_SERVICE_TEST_MODEL at a real checkout to test the genuine model.

WORDS = (
    list("abcdefghijklmnopqrstuvwxyz")
    + ["##" + c for c in "abcdefghijklmnopqrstuvwxyz"]
    + ["the", "cat", "sat", "on", "mat", "hello", "world", "deep", "model",
       "protein", "cells", "grow", "fast", "study", "shows", "results",
       "abstract", "plain", "english", "summary", "##s", "##ing", "##ed"]
)


def build_toy_encoder(target: pathlib.Path) -> pathlib.Path:
    vocab = {w: i for i, w in enumerate(
        ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"] + WORDS)}
    tok = Tokenizer(models.WordPiece(vocab=vocab, unk_token="[UNK]"))
    tok.normalizer = normalizers.BertNormalizer(lowercase=True)
    tok.pre_tokenizer = pre_tokenizers.BertPreTokenizer()
    tok.post_processor = TemplateProcessing(
        single="[CLS] $A [SEP]", pair="[CLS] $A [SEP] $B [SEP]",
        special_tokens=[("[CLS]", vocab["[CLS]"]), ("[SEP]", vocab["[SEP]"])])
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tok, unk_token="[UNK]", pad_token="[PAD]",
        cls_token="[CLS]", sep_token="[SEP]", mask_token="[MASK]")

    torch.manual_seed(0)
    config = BertConfig(vocab_size=len(vocab), hidden_size=1024,
                        num_hidden_layers=24, num_attention_heads=16,
                        intermediate_size=64, max_position_embeddings=48)
    model = BertModel(config)
    model.eval()
    model.save_pretrained(target)
    fast.save_pretrained(target)
    return target


@pytest.fixture(scope="session")
def toy_model_dir(tmp_path_factory) -> pathlib.Path:
    import os
    override = os.environ.get("EMBED_SERVICE_TEST_MODEL")
    if override:
        return pathlib.Path(override)
    return build_toy_encoder(tmp_path_factory.mktemp("encoder") / "toy-24x1024")


@pytest.fixture(scope="session")
def client(toy_model_dir) -> TestClient:
    app = create_app(model_id=str(toy_model_dir), default_layer=18)
    with TestClient(app) as test_client:
        yield test_client
