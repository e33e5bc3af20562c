"""

The `log` module provides colour-coded logging for the `susa` package. It defines a `ColorLevelFormatter`, which extends the standard `logging.Formatter` to pick an ANSI colour per log level, and it keeps a `WeakValueDictionary` of named loggers so each name is configured only once.

## Class: ColorLevelFormatter
Formats records with the logger name, timestamp, level, line number and function name. Warnings, errors and critical records get their own colour.

## Function: create_logger
Returns the logger registered under a name, creating and configuring it on first use. All loggers share a single stream handler.

## Function: set_level
Adjusts the level of every logger created through `create_logger`. The command line uses it for its `-v` flag; the default level is `WARNING` so that library use stays quiet.
"""
import logging
import typing
from weakref import WeakValueDictionary

DEFAULT_LEVEL = logging.WARNING


class ColorLevelFormatter(logging.Formatter):
    """
    A logging formatter that colours the level name of each record.

    Attributes:
        formatters (ClassVar[dict[int, logging.Formatter]]):
             Per-level formatters consulted before falling back to the instance itself.

    Args:
        level_color_code (int, optional):
             The ANSI colour code for the level name. Defaults to 97 (bright white).

    """

    formatters: typing.ClassVar[dict[int, logging.Formatter]] = {}

    def __init__(
        self,
        level_color_code: int = 97,
    ):
        super().__init__(
            f"\033[35m [%(name)s]\033[34m [%(asctime)s]\033[{level_color_code}m [%(levelname)s]\033[34m line %(lineno)s, in %(funcName)s\033[97m %(message)s\033[00m",
            datefmt="%Y-%m-%d %H:%M:%S",
        )

    def format(self, record, formatter=logging.Formatter):
        """
        Formats a record with the formatter registered for its level, or with this instance.

        Args:
            record (logging.LogRecord):
                 The record to format.
            formatter (type[logging.Formatter]):
                 The formatter class whose `format` is applied.

        Returns:
            str:
                 The formatted record.

        """
        return formatter.format(
            ColorLevelFormatter.formatters.get(record.levelno, self), record
        )


ColorLevelFormatter.formatters = {
    logging.WARNING: ColorLevelFormatter(33),
    logging.ERROR: ColorLevelFormatter(31),
    logging.CRITICAL: ColorLevelFormatter(91),
}

LOGGERS: "WeakValueDictionary[str, logging.Logger]" = WeakValueDictionary()

stream_handler = logging.StreamHandler()
stream_handler.setFormatter(ColorLevelFormatter())


def create_logger(name: str) -> logging.Logger:
    """
    Creates a logger with the specified name or returns it if it already exists.
    New loggers are namespaced under `susa`, set to the current package level and share the package stream handler.

    Args:
        name (str):
             The short name of the logger, e.g. `TabletInterpreter`.

    Returns:
        logging.Logger:
             The logger registered under that name.

    """
    if name in LOGGERS:
        return LOGGERS[name]
    logger = LOGGERS[name] = logging.getLogger(f"susa.{name}")
    logger.setLevel(_level)
    logger.addHandler(stream_handler)
    logger.propagate = False
    return logger


_level = DEFAULT_LEVEL


def set_level(level: int) -> None:
    """
    Sets the level of all package loggers, including ones created later.

    Args:
        level (int):
             A `logging` level such as `logging.DEBUG`.

    """
    global _level
    _level = level
    for logger in list(LOGGERS.values()):
        logger.setLevel(level)
