"""Timestamped annotations attached to recordings and locator rows."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Event:
    """A single annotation: onset and duration in seconds, plus a label."""

    onset: float
    duration: float
    label: str

    def __post_init__(self) -> None:
        if self.onset < 0:
            raise ValueError(f"event onset must be >= 0, got {self.onset}")
        if self.duration < 0:
            raise ValueError(f"event duration must be >= 0, got {self.duration}")


def events_to_json(events) -> str:
    """Serialize events as a compact JSON array of objects."""
    payload = [
        {"onset": e.onset, "duration": e.duration, "label": e.label}
        for e in events
    ]
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


def events_from_json(text: str) -> tuple[Event, ...]:
    """Parse the JSON produced by :func:`events_to_json`.

    Raises ValueError on anything that is not a list of event objects.
    """
    payload = json.loads(text)
    if not isinstance(payload, list):
        raise ValueError("events cell must be a JSON array")
    out = []
    for item in payload:
        out.append(Event(float(item["onset"]), float(item["duration"]), str(item["label"])))
    return tuple(out)
