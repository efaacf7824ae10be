"""
Console backed by the ``logging`` module.

Log lines go to stderr; reports are written to stdout by the CLI.
"""

import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

from ..domain.interfaces import ConsoleInterface

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class LoggingAdapter(ConsoleInterface):
    """ConsoleInterface over a named logger with one stream handler.

    Creating a second adapter for the same logger reuses the handler, so
    switching to verbose mode never duplicates output.
    """

    def __init__(
        self,
        logger_name: str = "ce_calabi",
        verbose: bool = False,
        stream: Optional[TextIO] = None,
    ):
        self.logger = logging.getLogger(logger_name)
        self.handler = self._find_handler()
        if self.handler is None:
            self.handler = logging.StreamHandler(stream or sys.stderr)
            self.handler.setFormatter(logging.Formatter(LOG_FORMAT))
            self.handler.set_name(logger_name)
            self.logger.addHandler(self.handler)
        elif stream is not None:
            self.handler.setStream(stream)
        self.set_verbose(verbose)

    def _find_handler(self) -> Optional[logging.StreamHandler]:
        for handler in self.logger.handlers:
            if isinstance(handler, logging.StreamHandler):
                if handler.get_name() == self.logger.name:
                    return handler
        return None

    @property
    def verbose(self) -> bool:
        return self.logger.level == logging.DEBUG

    def set_verbose(self, verbose: bool) -> None:
        """Switch between INFO and DEBUG."""
        self.logger.setLevel(logging.DEBUG if verbose else logging.INFO)

    @contextmanager
    def timed(self, label: str) -> Iterator[None]:
        """Log the wall time of the enclosed block at DEBUG."""
        start = time.perf_counter()
        try:
            yield
        finally:
            self.logger.debug(f"{label}: {time.perf_counter() - start:.3f} s")

    def info(self, message: str) -> None:
        self.logger.info(message)

    def error(self, message: str) -> None:
        self.logger.error(message)

    def warning(self, message: str) -> None:
        self.logger.warning(message)

    def debug(self, message: str) -> None:
        self.logger.debug(message)
