"""Console logging for the command line front end."""

import logging

from rich.console import Console
from rich.logging import RichHandler

LOG_FORMAT = "%(message)s"


def configure_logging(level: str | int = "WARNING") -> logging.Logger:
    """Route package log records to stderr through rich.

    Parameters
    ----------
    level : str or int, default "WARNING"
        Threshold for the ``spancomplete`` logger.

    Returns
    -------
    logging.Logger
        The configured package logger.

    """
    logger = logging.getLogger("spancomplete")
    logger.handlers.clear()
    handler = RichHandler(
        console=Console(stderr=True), show_path=False, markup=False
    )
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
