"""The box poset between a path and the top path; rowmotion and rowvacuation.

Cells are addressed (row, col), row 1 at the top, col 1 at the left; row i
holds floor((an-i)*b/a) cells.  An order filter is the left-justified box
collection above a path, i.e. exactly its Young rows.  The cell rank is
rank(i, j) = R_max - (i-1) - (j-1) with R_max = floor((an-1)*b/a) - 1, which
matches both the classical staircase ranks and the k-Dyck rank tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import (
    RationalDyckPath,
    Slope,
    path_from_young_rows,
    region_rows,
    young_rows,
)


@dataclass(frozen=True)
class BoxRegion:
    slope: Slope

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return region_rows(self.slope)

    @property
    def max_rank(self) -> int:
        s = self.slope
        return (s.up_count - 1) * s.b // s.a - 1

    @property
    def min_rank(self) -> int:
        # for a > b some cells sit below rank 0 (the region is not graded
        # with all minima at rank zero); sweeps must still cover them
        rows = self.row_lengths
        depths = [i + rows[i - 1] - 2 for i in range(1, len(rows) + 1) if rows[i - 1]]
        return self.max_rank - max(depths) if depths else self.max_rank

    def rank(self, i: int, j: int) -> int:
        return self.max_rank - (i - 1) - (j - 1)

    def cells_at_rank(self, r: int) -> list[tuple[int, int]]:
        rows = self.row_lengths
        cells = []
        for i in range(1, len(rows) + 1):
            j = self.max_rank - r - (i - 1) + 1
            if 1 <= j <= rows[i - 1]:
                cells.append((i, j))
        return cells


@dataclass(frozen=True)
class OrderFilter:
    """A filter of the box region, stored as weakly decreasing row prefixes."""

    region: BoxRegion
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        caps = self.region.row_lengths
        if len(self.rows) != len(caps):
            raise ValueError("wrong number of rows")
        if any(r < 0 or r > cap for r, cap in zip(self.rows, caps)):
            raise ValueError(f"rows {self.rows} outside the region {caps}")
        if any(x < y for x, y in zip(self.rows, self.rows[1:])):
            raise ValueError(f"not up-left closed: {self.rows}")


def filter_of_path(p: RationalDyckPath) -> OrderFilter:
    return OrderFilter(BoxRegion(p.slope), young_rows(p))


def path_of_filter(f: OrderFilter) -> RationalDyckPath:
    return path_from_young_rows(f.region.slope, f.rows)


def _toggle_rank(region: BoxRegion, rows: list[int], r: int) -> None:
    # Cell toggles of equal rank commute; apply them in column order.
    an = len(rows)
    for i, j in region.cells_at_rank(r):
        caps = region.row_lengths
        if j == rows[i - 1] + 1:
            # addable iff the cells above and to the left are present
            if (i == 1 or rows[i - 2] >= j) and j <= caps[i - 1]:
                rows[i - 1] = j
        elif j == rows[i - 1]:
            # removable iff the cells below and to the right are absent
            if i == an or rows[i] <= j - 1:
                rows[i - 1] = j - 1


def rank_toggle(r: int, p: RationalDyckPath) -> RationalDyckPath:
    region = BoxRegion(p.slope)
    if region.max_rank >= 0 and not region.min_rank <= r <= region.max_rank:
        raise ValueError(f"rank {r} outside [{region.min_rank},{region.max_rank}]")
    rows = list(young_rows(p))
    if region.max_rank >= 0:
        _toggle_rank(region, rows, r)
    return path_from_young_rows(p.slope, rows)


def rowmotion(p: RationalDyckPath) -> RationalDyckPath:
    """Rank toggles from the top rank down to rank 0."""
    region = BoxRegion(p.slope)
    rows = list(young_rows(p))
    for r in range(region.max_rank, region.min_rank - 1, -1):
        _toggle_rank(region, rows, r)
    return path_from_young_rows(p.slope, rows)


def rowmotion_inverse(p: RationalDyckPath) -> RationalDyckPath:
    region = BoxRegion(p.slope)
    rows = list(young_rows(p))
    for r in range(region.min_rank, region.max_rank + 1):
        _toggle_rank(region, rows, r)
    return path_from_young_rows(p.slope, rows)


def rowmotion_power(p: RationalDyckPath, power: int) -> RationalDyckPath:
    step = rowmotion if power >= 0 else rowmotion_inverse
    for _ in range(abs(power)):
        p = step(p)
    return p


def rowmotion_structural(p: RationalDyckPath) -> RationalDyckPath:
    """Independent oracle: complement of the down-set of the filter minima."""
    region = BoxRegion(p.slope)
    caps = region.row_lengths
    rows = young_rows(p)
    an = len(rows)
    cells = {(i, j) for i in range(1, an + 1) for j in range(1, rows[i - 1] + 1)}
    minima = [
        (i, j)
        for (i, j) in cells
        if (i + 1, j) not in cells and (i, j + 1) not in cells
    ]
    new_rows = []
    for i in range(1, an + 1):
        # cells (i, j) dominated by some minimum (i0, j0) with i >= i0, j >= j0
        dominated = [j0 for (i0, j0) in minima if i >= i0]
        cut = min(dominated) if dominated else caps[i - 1] + 1
        new_rows.append(min(cut - 1, caps[i - 1]))
    return path_from_young_rows(p.slope, tuple(new_rows))


def rowvacuation(p: RationalDyckPath) -> RationalDyckPath:
    """Triangular sweeps: full sweep first, then sweeps stopping ever higher."""
    region = BoxRegion(p.slope)
    rows = list(young_rows(p))
    for m in range(region.min_rank, region.max_rank + 1):
        for r in range(region.max_rank, m - 1, -1):
            _toggle_rank(region, rows, r)
    return path_from_young_rows(p.slope, rows)


def dual_rowvacuation(p: RationalDyckPath) -> RationalDyckPath:
    region = BoxRegion(p.slope)
    rows = list(young_rows(p))
    for top in range(region.max_rank, region.min_rank - 1, -1):
        for r in range(region.min_rank, top + 1):
            _toggle_rank(region, rows, r)
    return path_from_young_rows(p.slope, rows)


def partial_rowvacuation(p: RationalDyckPath) -> RationalDyckPath:
    """Rowvacuation without its initial full sweep (so rvac = this o rowmotion)."""
    region = BoxRegion(p.slope)
    rows = list(young_rows(p))
    for m in range(region.min_rank + 1, region.max_rank + 1):
        for r in range(region.max_rank, m - 1, -1):
            _toggle_rank(region, rows, r)
    return path_from_young_rows(p.slope, rows)
