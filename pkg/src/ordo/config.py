"""Size caps for the exhaustive engines.

Every cap can be overridden per call; ``ORDO_ORACLE_CAP`` replaces the
default permutation cap for the whole process.
"""

from __future__ import annotations

import os

from .errors import OrdoError

DEFAULT_ORDER_CAP = 8
DEFAULT_ARC_CAP = 22
DEFAULT_MIXED_CAP = 20
DEFAULT_DDIST_K_CAP = 2
DEFAULT_DIPATH_K_CAP = 2
DEFAULT_SEARCH_CAP = 40


def order_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get("ORDO_ORACLE_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise OrdoError(f"ORDO_ORACLE_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise OrdoError("ORDO_ORACLE_CAP must be non-negative")
    return cap


def arc_cap(override: int | None = None) -> int:
    return DEFAULT_ARC_CAP if override is None else override
