"""Piecewise-linear drive waveforms and hardware checks for them.

Breakpoint times are in microseconds, values in rad/us. Evaluation between
breakpoints is linear interpolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ConstraintViolation, InvalidInput
from .geometry import HardwareConstraints, ValidationReport, Violation

Waveform = tuple[tuple[float, float], ...]

# Reference annealing ramp over 4 us at peak 7.27 rad/us: the detuning sweeps
# from fully negative to fully positive with a flat zero crossing, while the
# drive ramps on early and off only at the very end. The two interior drive
# breakpoints at constant value are kept verbatim; interpolation is unaffected.
_OMEGA_REF: Waveform = ((0.0, 0.0), (0.25, 1.0), (1.25, 1.0), (1.35, 1.0), (3.75, 1.0), (4.0, 0.0))
_DELTA_REF: Waveform = ((0.0, -1.0), (0.25, -1.0), (1.25, 0.0), (1.35, 0.0), (3.75, 1.0), (4.0, 1.0))
_REF_DURATION = 4.0
_REF_PEAK = 7.27  # rad/us


@dataclass(frozen=True)
class Schedule:
    """Drive amplitude and detuning as piecewise-linear breakpoint lists.

    Both waveforms must start at t = 0 and end exactly at ``duration`` with
    strictly increasing times; drive values must be nonnegative.
    """

    omega: Waveform
    delta: Waveform
    duration: float

    def __post_init__(self):
        duration = float(self.duration)
        if not (math.isfinite(duration) and duration > 0):
            raise InvalidInput(f"duration must be positive and finite, got {self.duration!r}")
        object.__setattr__(self, "duration", duration)
        for name in ("omega", "delta"):
            wf = tuple((float(t), float(v)) for t, v in getattr(self, name))
            object.__setattr__(self, name, wf)
            if len(wf) < 2:
                raise InvalidInput(f"{name}: need at least two breakpoints")
            if any(not (math.isfinite(t) and math.isfinite(v)) for t, v in wf):
                raise InvalidInput(f"{name}: non-finite breakpoint")
            times = [t for t, _ in wf]
            if times[0] != 0.0:
                raise InvalidInput(f"{name}: first breakpoint must be at t=0, got {times[0]}")
            if times[-1] != duration:
                raise InvalidInput(f"{name}: last breakpoint must be at t=duration={duration}, got {times[-1]}")
            if any(a >= b for a, b in zip(times, times[1:])):
                raise InvalidInput(f"{name}: breakpoint times must be strictly increasing")
        if any(v < 0 for _, v in self.omega):
            raise InvalidInput("omega values must be nonnegative")

    @cached_property
    def _omega_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        ts, vs = zip(*self.omega)
        return np.asarray(ts), np.asarray(vs)

    @cached_property
    def _delta_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        ts, vs = zip(*self.delta)
        return np.asarray(ts), np.asarray(vs)

    def omega_at(self, t):
        """Drive amplitude at time ``t`` (scalar or array)."""
        ts, vs = self._omega_arrays
        out = np.interp(t, ts, vs)
        return float(out) if np.isscalar(t) else out

    def delta_at(self, t):
        """Detuning at time ``t`` (scalar or array)."""
        ts, vs = self._delta_arrays
        out = np.interp(t, ts, vs)
        return float(out) if np.isscalar(t) else out

    @cached_property
    def breakpoint_times(self) -> tuple[float, ...]:
        """Union of both waveforms' breakpoint times, sorted."""
        return tuple(sorted({t for t, _ in self.omega} | {t for t, _ in self.delta}))


def default_schedule(
    duration: float = _REF_DURATION,
    omega_max: float = _REF_PEAK,
    delta_max: float = _REF_PEAK,
    hw: HardwareConstraints | None = None,
) -> Schedule:
    """The reference annealing ramp, scaled to the requested extent.

    Times scale with ``duration``; drive values with ``omega_max``; detuning
    values with ``delta_max``. Raises ConstraintViolation when ``duration``
    exceeds the hardware evolution-time limit.
    """
    hw = hw or HardwareConstraints()
    if not (omega_max > 0 and delta_max > 0):
        raise InvalidInput("omega_max and delta_max must be positive")
    if not (math.isfinite(duration) and duration > 0):
        raise InvalidInput(f"duration must be positive and finite, got {duration!r}")
    if duration > hw.max_evolution_time:
        raise ConstraintViolation(
            f"duration {duration} us exceeds the {hw.max_evolution_time} us hardware limit"
        )
    s = duration / _REF_DURATION
    omega = tuple((t * s, v * omega_max) for t, v in _OMEGA_REF)
    delta = tuple((t * s, v * delta_max) for t, v in _DELTA_REF)
    return Schedule(omega, delta, duration)


def validate_schedule(schedule: Schedule, hw: HardwareConstraints | None = None) -> ValidationReport:
    """Report waveform extents that break the hardware limits.

    Piecewise-linear extrema occur at breakpoints, so checking those covers
    the whole waveform.
    """
    hw = hw or HardwareConstraints()
    violations = []
    if schedule.duration > hw.max_evolution_time:
        violations.append(Violation("duration", ("schedule",), schedule.duration, hw.max_evolution_time))
    peak_omega = max(v for _, v in schedule.omega)
    if peak_omega > hw.max_rabi:
        violations.append(Violation("rabi_amplitude", ("omega",), peak_omega, hw.max_rabi))
    peak_delta = max(abs(v) for _, v in schedule.delta)
    if peak_delta > hw.max_detuning_abs:
        violations.append(Violation("detuning_amplitude", ("delta",), peak_delta, hw.max_detuning_abs))
    return ValidationReport(tuple(violations))
