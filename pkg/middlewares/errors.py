"""
Error-to-exit-code middleware.

Runs a command and turns any library failure into an exit code and one
JSON line on stderr.
"""

import json
import logging
import sys
from typing import Any, Awaitable, Callable, Dict

from algebra.errors import DOPSError

logger = logging.getLogger(__name__)


class ErrorMiddleware:
    """Middleware wrapped around every command."""

    async def __call__(
        self,
        handler: Callable[..., Awaitable[Any]],
        *args: Any,
        **kwargs: Any
    ) -> int:
        """
        Run the command.

        Args:
            handler: Command coroutine function
            *args: Positional arguments for the command
            **kwargs: Keyword arguments for the command

        Returns:
            Process exit code; 0 on success
        """
        try:
            await handler(*args, **kwargs)
        except DOPSError as e:
            logger.error(f"{type(e).__name__}: {e}")
            self._report(e.details())
            return e.exit_code
        except json.JSONDecodeError as e:
            logger.error(f"Malformed JSON input: {e}")
            self._report({"error": "BadShape", "message": f"malformed JSON: {e}"})
            return 1
        except OSError as e:
            logger.error(f"Cannot access file: {e}")
            self._report({"error": "BadShape", "message": str(e)})
            return 1
        return 0

    @staticmethod
    def _report(details: Dict[str, Any]) -> None:
        sys.stderr.write(json.dumps(details, sort_keys=True) + "\n")
        sys.stderr.flush()
