"""Artifacts package initialization."""

from .models import Scenario
from .store import ArtifactStore, close_store, dump_json, get_store, init_store, read_json

__all__ = [
    'Scenario',
    'ArtifactStore',
    'close_store',
    'dump_json',
    'get_store',
    'init_store',
    'read_json',
]
