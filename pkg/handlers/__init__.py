"""Handlers package initialization."""

from .generate import cmd_generate
from .transform import cmd_transform
from .verify import cmd_verify

__all__ = ['cmd_generate', 'cmd_transform', 'cmd_verify']
