"""Toggles on step sequences and the four linear-extension operators.

The toggle t_i swaps the letters at positions i and i+1 when the result is
still a valid path.  In every toggle product the rightmost factor acts
first; this convention is pinned by the worked promotion of the (2,3)-path
1257 to 1346.
"""

from __future__ import annotations

from .matchings import dpm, pm
from .paths import RationalDyckPath, star_path


def toggle(i: int, p: RationalDyckPath) -> RationalDyckPath:
    total = p.slope.total_steps
    if not 1 <= i <= total - 1:
        raise ValueError(f"toggle index {i} outside [1,{total - 1}]")
    here = set(p.steps)
    if (i in here) == (i + 1 in here):
        return p
    swapped = here.symmetric_difference({i, i + 1})
    try:
        return RationalDyckPath(p.slope, tuple(sorted(swapped)))
    except ValueError:
        return p


def promotion(p: RationalDyckPath) -> RationalDyckPath:
    for i in range(1, p.slope.total_steps):
        p = toggle(i, p)
    return p


def dual_promotion(p: RationalDyckPath) -> RationalDyckPath:
    for i in range(p.slope.total_steps - 1, 0, -1):
        p = toggle(i, p)
    return p


def promotion_power(p: RationalDyckPath, power: int) -> RationalDyckPath:
    step = promotion if power >= 0 else dual_promotion
    for _ in range(abs(power)):
        p = step(p)
    return p


def evacuation(p: RationalDyckPath) -> RationalDyckPath:
    """Evacuation as the triangular toggle product (truncated promotions)."""
    for top in range(p.slope.total_steps - 1, 0, -1):
        for i in range(1, top + 1):
            p = toggle(i, p)
    return p


def dual_evacuation(p: RationalDyckPath) -> RationalDyckPath:
    for low in range(1, p.slope.total_steps):
        for i in range(p.slope.total_steps - 1, low - 1, -1):
            p = toggle(i, p)
    return p


def evacuation_fast(p: RationalDyckPath) -> RationalDyckPath:
    """Evacuation read off the matching: steps are N+1-max(block)."""
    total = p.slope.total_steps
    steps = sorted(total + 1 - block[-1] for block in pm(p).blocks)
    return RationalDyckPath(p.slope, tuple(steps))


def dual_evacuation_fast(p: RationalDyckPath) -> RationalDyckPath:
    """Dual evacuation via the dual matching: remove the barred block minima."""
    total = p.slope.total_steps
    removed = {total + 1 - block[0] for block in dpm(p).blocks}
    steps = tuple(i for i in range(1, total + 1) if i not in removed)
    return RationalDyckPath(p.slope, steps)


def dual_evacuation_by_star(p: RationalDyckPath) -> RationalDyckPath:
    """ev* as star-conjugated ev; used as a cross-check."""
    return star_path(evacuation(star_path(p)))
