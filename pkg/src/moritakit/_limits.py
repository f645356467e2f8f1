import os

DEFAULT_MAX_ENUM = 10**6


def max_enum():
    """Cap on candidates any single enumeration may visit (MORITAKIT_MAX_ENUM)."""
    raw = os.environ.get("MORITAKIT_MAX_ENUM")
    if not raw:
        return DEFAULT_MAX_ENUM
    return int(float(raw))


class Budget:
    """Counts visited candidates and raises LimitExceeded past the cap."""

    __slots__ = ("left", "what")

    def __init__(self, what, cap=None):
        self.what = what
        self.left = max_enum() if cap is None else cap

    def spend(self, n=1):
        self.left -= n
        if self.left < 0:
            from .errors import LimitExceeded

            raise LimitExceeded(f"{self.what}: enumeration cap exceeded")
