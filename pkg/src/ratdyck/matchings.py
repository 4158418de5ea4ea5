"""Non-crossing perfect matchings of rational Dyck paths.

The matching of a path is produced block by block, from the top up step
down: the block of the m-th up step consists of the up-step position
together with the still-unused right-step positions up to the first return
of the line of slope a/b drawn from the base of that up step.  Intersections
with the path are computed with exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .paths import RationalDyckPath, Slope, star_path


@dataclass(frozen=True)
class PerfectMatching:
    """Partition of [1, ground_size] into non-crossing blocks."""

    ground_size: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        elems = sorted(x for block in self.blocks for x in block)
        if elems != list(range(1, self.ground_size + 1)):
            raise ValueError("blocks must partition the ground set")
        if any(tuple(sorted(b)) != b for b in self.blocks):
            raise ValueError("block elements must be sorted ascending")
        if any(x[0] >= y[0] for x, y in zip(self.blocks, self.blocks[1:])):
            raise ValueError("blocks must be ordered by minimum")
        if not _is_noncrossing(self.blocks, self.ground_size):
            raise ValueError(f"blocks are crossing: {self.blocks}")

    def block_of(self, x: int) -> tuple[int, ...]:
        for block in self.blocks:
            if x in block:
                return block
        raise KeyError(x)

    def __str__(self) -> str:
        return ",".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks)

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def _is_noncrossing(blocks: tuple[tuple[int, ...], ...], ground: int) -> bool:
    # Scan with a stack of open blocks; each element must continue the block
    # on top of the stack or open a new one.
    owner = {}
    for idx, block in enumerate(blocks):
        for x in block:
            owner[x] = idx
    stack: list[int] = []
    seen: dict[int, int] = {}
    for x in range(1, ground + 1):
        idx = owner[x]
        if idx not in seen:
            stack.append(idx)
        elif not stack or stack[-1] != idx:
            return False
        seen[idx] = seen.get(idx, 0) + 1
        if seen[idx] == len(blocks[idx]):
            stack.pop()
    return not stack


def canonical_matching(ground: int, blocks) -> PerfectMatching:
    canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
    return PerfectMatching(ground, canon)


def parse_matching(text: str, ground: int) -> PerfectMatching:
    text = text.replace(" ", "")
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad matching literal: {text!r}")
    blocks = [
        tuple(int(x) for x in part.split(",") if x)
        for part in text[1:-1].split("},{")
    ]
    return canonical_matching(ground, blocks)


def pm(p: RationalDyckPath) -> PerfectMatching:
    """The slope-line matching of a path."""
    s = p.slope
    a, b = s.a, s.b
    total = s.total_steps
    verts = p.vertices()
    up = set(p.steps)
    unused = [i for i in range(1, total + 1) if i not in up]
    unused_set = set(unused)

    blocks = []
    for m in range(s.up_count, 0, -1):
        u_m = p.steps[m - 1]
        x_m = u_m - m
        bound = _first_return_position(verts, up, u_m, x_m, m - 1, a, b)
        lo = x_m + m + 1
        members = [j for j in sorted(unused_set) if lo <= j and Fraction(j) <= bound]
        block = tuple(sorted([u_m] + members))
        unused_set.difference_update(members)
        blocks.append(block)
    return canonical_matching(total, blocks)


def _first_return_position(verts, up, start_step, x0, y0, a, b) -> Fraction:
    """Step-position bound floor(s)+t of the first path point on the line
    of slope a/b through (x0, y0), scanning after step ``start_step``."""
    total = len(verts) - 1
    for k in range(start_step + 1, total + 1):
        (x1, y1), (x2, y2) = verts[k - 1], verts[k]
        if y1 == y2:
            # horizontal step; line reaches height y1 at x*
            xs = Fraction(x0 * a + (y1 - y0) * b, a)
            if x1 <= xs <= x2:
                return Fraction(math.floor(xs) + y1)
        else:
            ys = Fraction(y0 * b + (x1 - x0) * a, b)
            if y1 <= ys <= y2:
                return Fraction(x1) + ys
    raise AssertionError("slope line never returned to the path")


def pm_inverse(m: PerfectMatching, slope: Slope) -> RationalDyckPath:
    """Path whose up steps sit at the block minima; validates the round trip."""
    steps = tuple(sorted(block[0] for block in m.blocks))
    path = RationalDyckPath(slope, steps)
    if pm(path) != m:
        raise ValueError(f"matching {m} is not the matching of any {slope} path")
    return path


def bar(m: PerfectMatching) -> PerfectMatching:
    """Relabel i -> ground+1-i; an involution preserving non-crossingness."""
    g = m.ground_size
    return canonical_matching(g, [[g + 1 - x for x in block] for block in m.blocks])


def rotate(m: PerfectMatching) -> PerfectMatching:
    """Shift every element down by one cyclically (1 -> ground)."""
    g = m.ground_size
    return canonical_matching(g, [[(x - 2) % g + 1 for x in block] for block in m.blocks])


def dpm(p: RationalDyckPath) -> PerfectMatching:
    """The dual matching: bar of the matching of the transposed path."""
    return bar(pm(star_path(p)))
