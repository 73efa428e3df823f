"""Exception types shared across modules."""

from __future__ import annotations

__all__ = ["UnsupportedError"]


class UnsupportedError(Exception):
    """The input lies outside what the engine can decide or compute."""
