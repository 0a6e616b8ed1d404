"""
Artifact directory management.

Provides an async JSON/text writer over one output directory using aiofiles.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Optional, Union

import aiofiles
import aiofiles.os

logger = logging.getLogger(__name__)

# Global artifact store
_store: Optional["ArtifactStore"] = None


def dump_json(data: Any) -> str:
    """Canonical JSON text: fixed key order from the payload, two-space indent."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


class ArtifactStore:
    """Reads and writes the artifacts of one run."""

    def __init__(self, root: Path):
        self.root = root

    def path(self, name: str) -> Path:
        return self.root / name

    async def write_json(self, name: str, data: Any) -> Path:
        """
        Write one JSON artifact.

        Args:
            name: File name inside the output directory
            data: JSON-ready payload

        Returns:
            Path of the written file
        """
        target = self.path(name)
        async with aiofiles.open(target, "w", encoding="utf-8") as f:
            await f.write(dump_json(data))
        logger.info(f"Wrote {target}")
        return target

    async def write_text(self, name: str, text: str) -> Path:
        target = self.path(name)
        async with aiofiles.open(target, "w", encoding="utf-8") as f:
            await f.write(text)
        logger.info(f"Wrote {target}")
        return target


async def read_json(path: Union[str, Path]) -> Any:
    """
    Read a JSON document.

    Raises:
        OSError: If the file cannot be read
        json.JSONDecodeError: If it is not valid JSON
    """
    async with aiofiles.open(path, "r", encoding="utf-8") as f:
        text = await f.read()
    return json.loads(text)


async def init_store(directory: Union[str, Path]) -> ArtifactStore:
    """
    Create the output directory and make it the current store.

    Args:
        directory: Output directory, created if missing

    Returns:
        ArtifactStore: The store
    """
    global _store

    root = Path(directory)
    if not await aiofiles.os.path.isdir(root):
        await aiofiles.os.makedirs(root, exist_ok=True)
        logger.info(f"Created output directory {os.fspath(root)}")
    _store = ArtifactStore(root)
    return _store


def get_store() -> ArtifactStore:
    """
    Get the current artifact store.

    Raises:
        RuntimeError: If the store is not initialized
    """
    if _store is None:
        raise RuntimeError("Artifact store not initialized. Call init_store() first.")
    return _store


async def close_store() -> None:
    """Forget the current store."""
    global _store

    if _store:
        logger.debug(f"Closing artifact store {_store.root}")
        _store = None
