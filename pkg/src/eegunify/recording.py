"""In-memory signal model shared by all parsers and transforms."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .events import Event

#: Recognized per-channel amplitude units.
UNITS = ("V", "mV", "uV", "unknown")


@dataclass(frozen=True, eq=False)
class Recording:
    """A channels x samples signal block with uniform sampling rate.

    ``data`` is always a 2-D float64 array in channel-major order. The
    constructor validates the type invariants, so no partially valid
    recording can escape a parser.
    """

    data: np.ndarray
    sampling_rate: float
    channel_names: tuple[str, ...]
    units: tuple[str, ...] = ()
    events: tuple[Event, ...] = ()
    source_path: str = ""

    def __post_init__(self) -> None:
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 2:
            raise ValueError(f"data must be 2-D (channels x samples), got ndim={data.ndim}")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "channel_names", tuple(self.channel_names))
        object.__setattr__(self, "events", tuple(self.events))
        n_ch = data.shape[0]
        if n_ch < 1 or data.shape[1] < 1:
            raise ValueError(f"recording needs >=1 channel and >=1 sample, got {data.shape}")
        if not self.sampling_rate > 0:
            raise ValueError(f"sampling_rate must be positive, got {self.sampling_rate}")
        if len(self.channel_names) != n_ch:
            raise ValueError(
                f"{len(self.channel_names)} channel names for {n_ch} channels"
            )
        units = tuple(self.units) if self.units else ("unknown",) * n_ch
        if len(units) != n_ch:
            raise ValueError(f"{len(units)} units for {n_ch} channels")
        for u in units:
            if u not in UNITS:
                raise ValueError(f"unknown unit label {u!r}")
        object.__setattr__(self, "units", units)

    @property
    def n_channels(self) -> int:
        return self.data.shape[0]

    @property
    def n_samples(self) -> int:
        return self.data.shape[1]

    @property
    def duration(self) -> float:
        """Length in seconds (n_samples / sampling_rate)."""
        return self.data.shape[1] / self.sampling_rate

    def replace(self, **changes) -> "Recording":
        """Return a copy with the given fields swapped out."""
        return replace(self, **changes)
