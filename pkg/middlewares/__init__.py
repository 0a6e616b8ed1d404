"""Middlewares package initialization."""

from .errors import ErrorMiddleware

__all__ = ['ErrorMiddleware']
