"""HTTP service wrapping the toolkit: pydantic schemas, pure handlers, app factory."""

from .app import create_app

__all__ = ["create_app"]
