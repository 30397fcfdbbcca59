# latticeforge/generate/records.py
from __future__ import annotations

import json
import os
import threading
from dataclasses import asdict, dataclass
from typing import IO, Any, Dict, List, Optional, Union


@dataclass(frozen=True)
class GenerationRecord:
    """One prompt/response exchange; the response is stored unmodified."""

    step: int
    prompt: str
    response: str
    latency: float = 0.0
    prompt_tokens: Optional[int] = None
    completion_tokens: Optional[int] = None
    trial: Optional[int] = None
    backend: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> GenerationRecord:
        return cls(
            step=int(data["step"]),
            prompt=str(data.get("prompt", "")),
            response=str(data["response"]),
            latency=float(data.get("latency", 0.0)),
            prompt_tokens=data.get("prompt_tokens"),
            completion_tokens=data.get("completion_tokens"),
            trial=data.get("trial"),
            backend=data.get("backend"),
        )


def log_record(record: GenerationRecord, sink: IO[str]) -> None:
    """Append one JSON line and flush."""
    sink.write(json.dumps(record.to_dict(), ensure_ascii=False) + "\n")
    sink.flush()


def read_records(path: Union[str, os.PathLike]) -> List[GenerationRecord]:
    records = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.strip():
                records.append(GenerationRecord.from_dict(json.loads(line)))
    return records


class RunLog:
    """Append-only JSONL sink shared by the trials of one run."""

    def __init__(self, path: Union[str, os.PathLike], *, truncate: bool = True):
        self.path = os.fspath(path)
        self._lock = threading.Lock()
        self._fh: IO[str] = open(self.path, "w" if truncate else "a", encoding="utf-8")

    def write(self, record: GenerationRecord) -> None:
        with self._lock:
            log_record(record, self._fh)

    def close(self) -> None:
        with self._lock:
            if not self._fh.closed:
                self._fh.close()

    def __enter__(self) -> RunLog:
        return self

    def __exit__(self, *exc: object) -> None:
        self.close()
