"""Sidecar embedding service: per-token transformer hidden states over HTTP."""

from .app import create_app
from .encoder import Encoder

__all__ = ["Encoder", "create_app"]
__version__ = "0.1.0"
