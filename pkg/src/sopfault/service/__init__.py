"""HTTP service: pydantic wire models, handlers, and the FastAPI app."""

from .app import create_app

__all__ = ["create_app"]
