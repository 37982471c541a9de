"""File-backed logger with {} placeholders and a fixed verbosity threshold.

Lines look like ``2025-06-01 10:00:00,000 INFO [main] orchard.basket - msg``.
Timestamps advance a deterministic counter so repeated runs produce
byte-identical log files. The threshold comes from LOGKIT_LEVEL (default
"info"); calls below it are suppressed.
"""

import os
from datetime import datetime, timedelta

LEVELS = {"trace": 0, "debug": 1, "info": 2, "warn": 3, "error": 4, "fatal": 5}

THRESHOLD = os.environ.get("LOGKIT_LEVEL", "info")
LOG_PATH = os.environ.get("LOGKIT_PATH", os.path.join("build", "test.log"))

_EPOCH = datetime(2025, 6, 1, 10, 0, 0)
_counter = 0


class Logger:
    def __init__(self, name):
        self.name = name

    def _emit(self, level, message, args):
        global _counter
        if LEVELS[level] < LEVELS[THRESHOLD]:
            return
        text = message
        for arg in args:
            if "{}" in text:
                text = text.replace("{}", str(arg), 1)
            else:
                text = text + " " + str(arg)
        stamp = (_EPOCH + timedelta(seconds=_counter)).strftime("%Y-%m-%d %H:%M:%S,000")
        _counter = _counter + 1
        parent = os.path.dirname(LOG_PATH)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(LOG_PATH, "a", encoding="utf-8") as fh:
            fh.write(stamp + " " + level.upper() + " [main] " + self.name + " - " + text + "\n")

    def trace(self, message, *args):
        self._emit("trace", message, args)

    def debug(self, message, *args):
        self._emit("debug", message, args)

    def info(self, message, *args):
        self._emit("info", message, args)

    def warn(self, message, *args):
        self._emit("warn", message, args)

    def error(self, message, *args):
        self._emit("error", message, args)

    def fatal(self, message, *args):
        self._emit("fatal", message, args)
