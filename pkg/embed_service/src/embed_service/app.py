"""HTTP surface: POST /embed and GET /health.

Configuration comes from the environment:

* ``EMBED_SERVICE_MODEL``  - model identifier or local path
  (default: bert-large-uncased, the 24-layer uncased large encoder)
* ``EMBED_SERVICE_DEVICE`` - torch device (default: cpu)
* ``EMBED_SERVICE_PORT``   - port for the bundled server entry point
* ``EMBED_SERVICE_LAYER``  - default layer when a request omits it (default: 18)

Wire format:

    POST /embed {"texts": ["..."], "layer": 18}
    200 -> {"model_id": ..., "layer": 18,
            "results": [{"tokens": [...], "special": [...], "vectors": [[...]]}]}
    413 -> {"error": "text_too_long", "index": i, "n_tokens": n, "limit": w}
    422 -> {"error": "invalid_layer", ...} (also pydantic validation errors)
    503 -> {"error": "model_not_loaded"}
"""

from __future__ import annotations

import os
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .encoder import Encoder, InvalidLayer, TextTooLong

DEFAULT_MODEL = "bert-large-uncased"
DEFAULT_LAYER = 18


class EmbedRequest(BaseModel):
    texts: list[str] = Field(min_length=1)
    layer: int | None = None


def create_app(model_id: str | None = None, device: str | None = None,
               default_layer: int | None = None) -> FastAPI:
    model_id = model_id or os.environ.get("EMBED_SERVICE_MODEL", DEFAULT_MODEL)
    device = device or os.environ.get("EMBED_SERVICE_DEVICE", "cpu")
    default_layer = default_layer if default_layer is not None else \
        int(os.environ.get("EMBED_SERVICE_LAYER", DEFAULT_LAYER))

    state: dict = {"encoder": None}

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        state["encoder"] = Encoder(model_id, device=device)
        yield
        state["encoder"] = None

    app = FastAPI(title="embed-service", lifespan=lifespan)

    @app.get("/health")
    def health():
        encoder = state["encoder"]
        if encoder is None:
            return {"status": "loading", "model_id": model_id}
        return {
            "status": "ready",
            "model_id": encoder.model_id,
            "n_layers": encoder.n_layers,
            "hidden_size": encoder.hidden_size,
            "context_window": encoder.context_window,
            "default_layer": default_layer,
        }

    @app.post("/embed")
    def embed(request: EmbedRequest):
        encoder = state["encoder"]
        if encoder is None:
            return JSONResponse(status_code=503, content={"error": "model_not_loaded"})
        layer = request.layer if request.layer is not None else default_layer
        try:
            results = encoder.embed_batch(request.texts, layer)
        except InvalidLayer as exc:
            return JSONResponse(status_code=422, content={
                "error": "invalid_layer", "layer": exc.layer, "n_layers": exc.n_layers})
        except TextTooLong as exc:
            return JSONResponse(status_code=413, content={
                "error": "text_too_long", "index": exc.index,
                "n_tokens": exc.n_tokens, "limit": exc.limit})
        return {
            "model_id": encoder.model_id,
            "layer": layer,
            "results": [
                {"tokens": r.tokens, "special": r.special, "vectors": r.vectors}
                for r in results
            ],
        }

    return app


def serve() -> None:
    import uvicorn
    port = int(os.environ.get("EMBED_SERVICE_PORT", "8018"))
    uvicorn.run(create_app(), host="0.0.0.0", port=port)
