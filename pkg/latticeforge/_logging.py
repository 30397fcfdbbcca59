"""
Opt-in logging for the optimization engines.

Engines are silent unless the caller passes a logger or `log=True`:

    from latticeforge._logging import resolve_logger

    def run_engine(..., trial: int = 0, logger=None, log: bool = False):
        log = resolve_logger(logger=logger, enabled=log, name=__name__, trial=trial)
        log.info(f"step {step}: best {best:.4f}")  # -> "[trial 3] step 7: best 98.4100"

Library code never prints; the CLI is the only place handlers get configured.
"""

from __future__ import annotations

import logging
from typing import Any, MutableMapping, Optional, Tuple, Union


class NoopLogger:
    def debug(self, *args, **kwargs):  # type: ignore[no-untyped-def]
        pass

    info = warning = error = exception = critical = debug


class TrialLogger(logging.LoggerAdapter):
    """Prefixes every message with the trial it belongs to."""

    def __init__(self, logger: Any, trial: int) -> None:
        super().__init__(logger, {"trial": trial})
        self.trial = trial

    def process(self, msg: Any, kwargs: MutableMapping[str, Any]) -> Tuple[Any, MutableMapping[str, Any]]:
        return f"[trial {self.trial}] {msg}", kwargs


LoggerLike = Union[logging.Logger, logging.LoggerAdapter, NoopLogger]


def resolve_logger(
    logger: Optional[logging.Logger] = None,
    *,
    enabled: bool = False,
    name: Optional[str] = None,
    level: int = logging.INFO,
    trial: Optional[int] = None,
) -> LoggerLike:
    """
    Pick the logger an engine writes to.

    - A passed `logger` wins.
    - Else `enabled=True` gives the named module logger, lowered to `level` if needed.
    - Else a NoopLogger.

    With `trial` set, real loggers come back wrapped in a TrialLogger.
    """
    if logger is not None:
        lg: Any = logger
    elif enabled:
        lg = logging.getLogger(name or "latticeforge")
        if lg.level == logging.NOTSET or lg.level > level:
            lg.setLevel(level)
        # caplog and the CLI handler both sit on the root
        lg.propagate = True
    else:
        return NoopLogger()
    if trial is not None and isinstance(lg, (logging.Logger, logging.LoggerAdapter)):
        return TrialLogger(lg, trial)
    return lg
