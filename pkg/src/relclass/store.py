"""Newline-delimited JSON result records with integers kept as decimal strings."""

import json
import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

SCHEMA_VERSION = 1
KINDS = ("unit", "class", "form_count", "campaign_item")
_INT = re.compile(r"-?\d+\Z")
INT_KEYS = frozenset({
    "m", "x", "y", "c", "norm", "d", "d0", "f", "p", "n", "H", "h", "h_plus", "psi", "phi",
    "h_rel", "h_plus_rel", "H_rel", "norm_eps_d0", "norm_eps_d0f2", "unit_exponent",
    "y_mod_m", "y_mod_p", "y_mod_f", "p_mod_4", "H_forms", "via_prime", "h_prime",
})


class RecordFormatError(ValueError):
    pass


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _encode(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, float):
        raise TypeError(f"refusing to store float {v!r}")
    return str(v)


@dataclass(frozen=True)
class ResultRecord:
    kind: str
    payload: dict
    timestamp: str = field(default_factory=_now)
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def make(cls, kind: str, values: dict, **kw) -> "ResultRecord":
        if kind not in KINDS:
            raise ValueError(f"unknown record kind {kind!r}")
        return cls(kind, {str(k): _encode(v) for k, v in values.items()}, **kw)

    def render(self) -> str:
        return json.dumps({"schema_version": self.schema_version, "kind": self.kind,
                           "payload": self.payload, "timestamp": self.timestamp},
                          sort_keys=True)

    @classmethod
    def parse(cls, line: str) -> "ResultRecord":
        obj = json.loads(line)
        if obj.get("schema_version") != SCHEMA_VERSION:
            raise RecordFormatError(f"schema version {obj.get('schema_version')!r}, expected {SCHEMA_VERSION}")
        if obj.get("kind") not in KINDS:
            raise RecordFormatError(f"unknown kind {obj.get('kind')!r}")
        payload = obj.get("payload")
        if not isinstance(payload, dict) or not all(
                isinstance(k, str) and isinstance(v, str) for k, v in payload.items()):
            raise RecordFormatError("payload must map strings to strings")
        for k, v in payload.items():
            if k in INT_KEYS and v and not _INT.match(v):
                raise RecordFormatError(f"field {k!r} is not a decimal integer: {v!r}")
        return cls(obj["kind"], payload, obj.get("timestamp", ""), obj["schema_version"])


def persist(records, path) -> None:
    """Append records to path, one JSON object per line."""
    with open(path, "a", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.render() + "\n")


def load(path) -> list[ResultRecord]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                out.append(ResultRecord.parse(line))
            except (ValueError, KeyError) as exc:
                raise RecordFormatError(f"{path}:{lineno}: {exc}") from exc
    return out


def render_tsv(records) -> str:
    keys = sorted({k for r in records for k in r.payload})
    lines = ["\t".join(["kind", "timestamp", *keys])]
    for r in records:
        lines.append("\t".join([r.kind, r.timestamp, *(r.payload.get(k, "") for k in keys)]))
    return "\n".join(lines) + "\n"


def write(records, path, fmt: str = "jsonl") -> None:
    if fmt == "jsonl":
        persist(records, path)
    elif fmt == "tsv":
        Path(path).write_text(render_tsv(records), encoding="utf-8")
    else:
        raise ValueError(f"unknown format {fmt!r}")
