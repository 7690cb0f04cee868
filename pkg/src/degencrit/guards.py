"""Size guards for the exponential routines.

``DEGENCRIT_MAX_N`` raises (or lowers) every default guard, never past
``CANON_CAP``.
"""
import os

CANON_CAP = 12


class GuardError(ValueError):
    """Input exceeds the size guard of a brute-force or exhaustive routine."""


def limit(default: int) -> int:
    raw = os.environ.get("DEGENCRIT_MAX_N")
    if not raw:
        return default
    return min(int(raw), CANON_CAP)


def check(name: str, value: int, default: int) -> None:
    cap = limit(default)
    if value > cap:
        raise GuardError(f"{name}: n={value} exceeds the size guard {cap} (set DEGENCRIT_MAX_N to override)")
