"""Size caps and cooperative timeouts for the exponential kernels.

Both the cut-set enumeration and the cycle search are exact and therefore
exponential.  Callers hit a hard size cap before a run can silently take
hours; the cap can be raised per call or globally through the
``TOUGH_CLOSURE_MAX_N`` environment variable.
"""

from __future__ import annotations

import os
import time

ENV_MAX_N = "TOUGH_CLOSURE_MAX_N"

DEFAULT_TOUGHNESS_MAX_N = 24
DEFAULT_SOLVER_MAX_N = 32


class InstanceTooLarge(ValueError):
    """Instance exceeds the active size cap for an exact kernel."""


class InstanceTimeout(RuntimeError):
    """A cooperative deadline expired inside an exact kernel."""


def effective_cap(explicit: int | None, default: int) -> int:
    """Resolve a size cap: explicit argument, else env override, else default."""
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_MAX_N)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{ENV_MAX_N} must be an integer, got {env!r}") from exc
    return default


def check_cap(n: int, explicit: int | None, default: int, what: str) -> None:
    cap = effective_cap(explicit, default)
    if n > cap:
        raise InstanceTooLarge(
            f"{what} on {n} vertices exceeds the size cap {cap} "
            f"(pass max_n or set {ENV_MAX_N} to override)"
        )


def expired(deadline: float | None) -> bool:
    """True once a monotonic-clock deadline has passed."""
    return deadline is not None and time.monotonic() > deadline
