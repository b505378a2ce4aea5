"""Output files, run manifests and the advisory result cache."""

from __future__ import annotations

import csv
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

from . import __version__

__all__ = [
    "fraction_str",
    "decimal_str",
    "write_csv",
    "write_json",
    "RunManifest",
    "Cache",
    "file_digest",
]


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction, places: int = 15) -> str:
    """``x`` rounded half-even to ``places`` digits after the point, computed exactly."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = places + len(str(abs(x.numerator) // x.denominator)) + 10
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([str(v) for v in row])
    return path


def write_json(path, payload: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")
    return path


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class RunManifest:
    """Provenance for one CLI invocation; written next to the files it produced."""

    command: str
    argv: List[str]
    version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))
    caps: Dict[str, Any] = field(default_factory=dict)
    database_digest: Optional[str] = None
    runtime_seconds: float = 0.0
    outputs: List[str] = field(default_factory=list)
    _start: float = field(default_factory=time.perf_counter, repr=False)

    @property
    def filename(self) -> str:
        return f"{self.command.replace(' ', '-')}.manifest.json"

    def add_output(self, path) -> None:
        self.outputs.append(Path(path).name)

    def write(self, out_dir) -> Path:
        self.runtime_seconds = round(time.perf_counter() - self._start, 3)
        data = asdict(self)
        data.pop("_start")
        data["outputs"] = {name: file_digest(Path(out_dir) / name) for name in self.outputs}
        return write_json(Path(out_dir) / self.filename, data)


class Cache:
    """Re-derivable results keyed by (module, n, parameters, version).

    Entries are plain JSON; unreadable entries are ignored and recomputed.
    """

    def __init__(self, root=None, enabled: bool = True):
        root = root or os.environ.get("HOOKLAB_CACHE_DIR") or Path.home() / ".cache" / "hooklab"
        self.root = Path(root)
        self.enabled = enabled

    def _path(self, module: str, n: int, params: Dict[str, Any]) -> Path:
        tag = hashlib.sha1(json.dumps(params, sort_keys=True).encode()).hexdigest()[:12]
        return self.root / f"{module}-n{n}-{tag}-v{__version__}.json"

    def get(self, module: str, n: int, **params):
        if not self.enabled:
            return None
        try:
            with open(self._path(module, n, params), encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, ValueError):
            return None

    def put(self, module: str, n: int, value, **params) -> None:
        if not self.enabled:
            return
        path = self._path(module, n, params)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(value, fh)
            os.replace(tmp, path)
        except OSError as exc:
            print(f"warning: cache write failed: {exc}", file=sys.stderr)
