##
# File: LogUtil.py
# Date: 10-Oct-2026
#
# Updates:
#  13-Oct-2026 jdw add configureLogging() for the command line front end
#  18-Oct-2026 jdw derive the reserved record attributes from LogRecord; ISO time strings
##
"""
Plain or JSON-lines logging for the ladder percolation tools.

Records logged with ``extra={...}`` (seeds, table levels, residuals) keep those fields as
top level keys of the JSON object, so a run log can be filtered with standard JSON tools.
"""

import json
import logging
import sys
from datetime import datetime, timezone

from rcsb.utils.fpp.IoUtil import JsonTypeEncoder

PLAIN_FORMAT = "%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s"

# attributes every LogRecord carries; anything else arrived through extra=
RESERVED_ATTRIBUTES = frozenset(logging.LogRecord("", logging.INFO, "", 0, "", (), None).__dict__) | {"message", "asctime", "taskName"}

SOURCE_ATTRIBUTES = ("name", "module", "funcName", "lineno", "pathname", "process", "processName", "thread", "threadName")


class StructFormatter(logging.Formatter):
    """One JSON object per record: level, time, message and the extra fields.

    Example::

        handler = logging.StreamHandler()
        handler.setFormatter(StructFormatter())
        logging.getLogger("rcsb.utils.fpp").addHandler(handler)
        logger.info("rate check", extra={"n": 2000, "seed": 11})
    """

    def recordDict(self, record):
        rD = {ky: val for ky, val in record.__dict__.items() if ky not in RESERVED_ATTRIBUTES}
        rD["message"] = record.getMessage()
        rD["level"] = record.levelname
        rD.setdefault("time", datetime.fromtimestamp(record.created, timezone.utc).isoformat())
        if record.exc_info:
            rD["exc_info"] = self.formatException(record.exc_info)
        if record.stack_info:
            rD["stack_info"] = self.formatStack(record.stack_info)
        return rD

    def format(self, record):
        return self.serialize(self.recordDict(record))

    def serialize(self, rD):
        try:
            return json.dumps(rD, cls=JsonTypeEncoder)
        except (TypeError, ValueError):
            # values the encoder does not know are logged by their str() form
            return json.dumps({ky: val if isinstance(val, (str, int, float, bool, type(None))) else str(val) for ky, val in rD.items()})


class DetailedStructFormatter(StructFormatter):
    """StructFormatter plus the source location and the process and thread of the record."""

    def recordDict(self, record):
        rD = super(DetailedStructFormatter, self).recordDict(record)
        for ky in SOURCE_ATTRIBUTES:
            rD[ky] = getattr(record, ky, None)
        return rD


def configureLogging(level=logging.INFO, logJson=False, detailed=False, stream=None):
    """Replace the root handlers with a single stream handler.

    Args:
        level (int, optional): root logging level. Defaults to logging.INFO.
        logJson (bool, optional): one JSON object per record. Defaults to False.
        detailed (bool, optional): use DetailedStructFormatter when logJson is set. Defaults to False.
        stream (file, optional): target stream. Defaults to sys.stderr.

    Returns:
        logging.Handler: the installed handler
    """
    handler = logging.StreamHandler(stream or sys.stderr)
    if logJson:
        handler.setFormatter(DetailedStructFormatter() if detailed else StructFormatter())
    else:
        handler.setFormatter(logging.Formatter(PLAIN_FORMAT))
    rootLogger = logging.getLogger()
    for hd in list(rootLogger.handlers):
        rootLogger.removeHandler(hd)
    rootLogger.addHandler(handler)
    rootLogger.setLevel(level)
    return handler
