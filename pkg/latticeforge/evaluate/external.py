# latticeforge/evaluate/external.py
"""
Adapter for an external lattice code speaking line-oriented JSON:

    stdin : {"enr":[...11 numbers...],"gad":[...4 numbers...]}\\n   then EOF
    stdout: {"kinf":x,"ppf":y}\\n
    exit status 0 on success
"""

from __future__ import annotations

import json
import logging
import os
import signal
import subprocess
import threading
from typing import Optional, Sequence, Tuple

from ..errors import EvaluatorReportedError, EvaluatorTimeout, ProtocolError, SpawnFailed
from ..models.solution import SolutionVector

log = logging.getLogger(__name__)


def encode_request(sol: SolutionVector) -> str:
    return json.dumps(sol.to_wire(), separators=(",", ":")) + "\n"


def decode_response(stdout: str) -> Tuple[float, float]:
    line = next((ln for ln in stdout.splitlines() if ln.strip()), None)
    if line is None:
        raise ProtocolError("evaluator produced no output")
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise ProtocolError(f"evaluator output is not JSON: {line[:200]!r}") from e
    if not isinstance(data, dict):
        raise ProtocolError(f"evaluator output is not a JSON object: {line[:200]!r}")
    values = []
    for key in ("kinf", "ppf"):
        v = data.get(key)
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ProtocolError(f"evaluator output lacks numeric '{key}': {line[:200]!r}")
        values.append(float(v))
    return values[0], values[1]


class ExternalEvaluator:
    """
    Runs one subprocess per evaluation, at most `max_concurrency` at a time.

    Pass `limiter` to share one slot pool between evaluators, so trials
    running in parallel still respect a single concurrency cap.
    """

    pure = False

    def __init__(
        self,
        command: Sequence[str],
        timeout: float = 60.0,
        max_concurrency: int = 1,
        *,
        limiter: Optional[threading.BoundedSemaphore] = None,
    ):
        if not command:
            raise ValueError("external evaluator command is empty")
        if max_concurrency < 1:
            raise ValueError("max_concurrency must be at least 1")
        self.command = list(command)
        self.timeout = timeout
        self._slots = limiter if limiter is not None else threading.BoundedSemaphore(max_concurrency)

    def evaluate(self, sol: SolutionVector) -> Tuple[float, float]:
        request = encode_request(sol).encode("utf-8")
        with self._slots:
            returncode, stdout, stderr = self._run(request)

        if returncode != 0:
            log.warning("evaluator exited with status %d: %s", returncode, stderr.strip()[:200])
            raise EvaluatorReportedError(f"evaluator exited with status {returncode}", returncode, stderr)
        return decode_response(stdout)

    def _run(self, request: bytes) -> Tuple[int, str, str]:
        try:
            # own session, so a timeout can take down every process the command forked
            proc = subprocess.Popen(
                self.command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                stderr=subprocess.PIPE,
                start_new_session=True,
            )
        except OSError as e:
            raise SpawnFailed(f"cannot start evaluator {self.command[0]!r}: {e}") from e
        try:
            out, err = proc.communicate(request, timeout=self.timeout)
        except subprocess.TimeoutExpired as e:
            _kill_group(proc)
            proc.communicate()
            log.warning("evaluator exceeded %ss and was killed: %s", self.timeout, self.command[0])
            raise EvaluatorTimeout(
                f"evaluator exceeded {self.timeout}s and was killed: {self.command[0]}"
            ) from e
        except BaseException:
            _kill_group(proc)
            proc.wait()
            raise
        return proc.returncode, out.decode("utf-8", errors="replace"), err.decode("utf-8", errors="replace")


def _kill_group(proc: subprocess.Popen) -> None:
    try:
        os.killpg(proc.pid, signal.SIGKILL)
    except ProcessLookupError:
        pass


def external_evaluate(
    sol: SolutionVector, command: Sequence[str], timeout: float = 60.0
) -> Tuple[float, float]:
    return ExternalEvaluator(command, timeout).evaluate(sol)
