"""Caps for exhaustive loops.

Ground sets are machine words (≤ 64 elements), but loops over all 2^E subsets
are only allowed up to a cap.  The default is 20; the MATROID_CAP environment
variable or an explicit argument overrides it.
"""

import os

from .errors import CapExceeded

DEFAULT_EXHAUSTIVE_CAP = 20
MAX_GROUND_SET = 64


def exhaustive_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("MATROID_CAP")
    if env:
        return int(env)
    return DEFAULT_EXHAUSTIVE_CAP


def check_cap(n: int, cap: int | None = None, what: str = "subset sweep") -> None:
    """Raise CapExceeded if a 2^n loop over n elements is over the cap."""
    limit = exhaustive_cap(cap)
    if n > limit:
        raise CapExceeded(f"{what} needs 2^{n} steps; cap is {limit} elements")
