"""Embedded reference tables for the twelve (1,2)-paths of size three.

Each table stores orbits as cycles, involutions as pairings, and the chain
correspondence, and ``golden_suite`` replays them byte-for-byte against the
library maps.
"""

from __future__ import annotations

import time

from . import noncrossing as nc
from .matching_map import mat
from .paths import RationalDyckPath, Slope, path_from_steps
from .promotion import evacuation_fast, promotion
from .registry import VerificationReport
from .rowmotion import dual_rowvacuation, rowmotion, rowvacuation
from .tilings import rsk_hat_inverse

SLOPE = Slope(1, 2, 3)

CHAIN_TABLE = {
    "147": "1/2/3;1/2/3",
    "146": "1/2.3;1/2/3",
    "145": "1/2.3;1/2.3",
    "137": "1.2/3;1/2/3",
    "136": "1.2.3;1/2/3",
    "135": "1.2.3;1/2.3",
    "134": "1.3/2;1/2/3",
    "127": "1.2/3;1.2/3",
    "126": "1.2.3;1.2/3",
    "125": "1.2.3;1.2.3",
    "124": "1.3/2;1.3/2",
    "123": "1.2.3;1.3/2",
}

PROMOTION_ORBITS = [
    ["147", "136", "125"],
    ["146", "135", "124", "137", "126", "145", "134", "123", "127"],
]

EVACUATION_PAIRS = {
    "147": "147", "146": "127", "145": "137", "136": "125",
    "135": "123", "134": "124", "126": "126",
}

KRE_PARTITION_ORBITS = [
    ["1/2/3", "1.2.3"],
    ["1.2/3", "1/2.3", "1.3/2"],
]

KRE_PATH_ORBITS = [
    ["147", "125"],
    ["136"],
    ["146", "123", "137", "135", "134", "126"],
    ["145", "124", "127"],
]

SU_PARTITION_PAIRS = {"1/2/3": "1.2.3", "1.2/3": "1.2/3", "1/2.3": "1.3/2"}

SU_PATH_PAIRS = {
    "147": "125", "146": "123", "145": "124", "137": "126",
    "136": "136", "134": "135", "127": "127",
}

LK_PARTITION_PAIRS = {"1/2/3": "1.2.3", "1.2/3": "1.3/2", "1/2.3": "1/2.3"}

LK_PATH_PAIRS = {
    "147": "125", "146": "135", "145": "145", "137": "123",
    "136": "136", "134": "126", "127": "124",
}

ROWMOTION_ORBITS = [
    ["145", "137", "126"],
    ["147", "136", "125", "134", "127", "146", "135", "124", "123"],
]

ROWVACUATION_PAIRS = {
    "147": "134", "146": "124", "145": "137", "136": "125",
    "135": "135", "127": "123", "126": "126",
}

DUAL_ROWVACUATION_PAIRS = {
    "147": "123", "146": "134", "145": "145", "137": "126",
    "136": "124", "135": "125", "127": "127",
}

MAT_ORBITS = [
    ["147", "146", "126", "125", "123", "135", "137"],
    ["145", "136", "127"],
    ["134"],
    ["124"],
]

RSK_INVERSE_ORBITS = [
    ["147", "126", "134", "136", "137", "127", "123"],
    ["146", "124"],
    ["145", "125"],
    ["135"],
]


def _p(code: str) -> RationalDyckPath:
    return path_from_steps(SLOPE, [int(c) for c in code])


def _code(p: RationalDyckPath) -> str:
    return "".join(str(u) for u in p.steps)


def _check_orbits(fn, orbits) -> list[str]:
    bad = []
    for orbit in orbits:
        for src, dst in zip(orbit, orbit[1:] + orbit[:1]):
            got = _code(fn(_p(src)))
            if got != dst:
                bad.append(f"{src}->{got} (expected {dst})")
    return bad


def _check_pairs(fn, pairs) -> list[str]:
    bad = []
    for src, dst in pairs.items():
        got = _code(fn(_p(src)))
        if got != dst:
            bad.append(f"{src}->{got} (expected {dst})")
        back = _code(fn(_p(dst)))
        if back != src:
            bad.append(f"{dst}->{back} (expected {src})")
    return bad


def _report(name: str, size: int, bad: list[str], start: float) -> VerificationReport:
    return VerificationReport(
        identity=name,
        a=SLOPE.a,
        b=SLOPE.b,
        n=SLOPE.n,
        domain_size=size,
        status="pass" if not bad else "fail",
        counterexamples=bad[:10],
        seconds=time.perf_counter() - start,
    )


def golden_suite() -> list[VerificationReport]:
    reports = []

    start = time.perf_counter()
    bad = []
    for code, literal in CHAIN_TABLE.items():
        chain = nc.parse_chain(literal)
        if nc.ncp_to_dyck(chain) != _p(code):
            bad.append(f"chain {literal} != path {code}")
        if str(nc.dyck_to_ncp(_p(code))) != literal:
            bad.append(f"path {code} != chain {literal}")
    reports.append(_report("golden-chain-table", len(CHAIN_TABLE), bad, start))

    def chain_map(f):
        return lambda p: nc.ncp_to_dyck(f(nc.dyck_to_ncp(p)))

    start = time.perf_counter()
    bad = _check_orbits(promotion, PROMOTION_ORBITS)
    reports.append(_report("golden-promotion", 12, bad, start))

    start = time.perf_counter()
    bad = _check_pairs(evacuation_fast, EVACUATION_PAIRS)
    reports.append(_report("golden-evacuation", 12, bad, start))

    start = time.perf_counter()
    bad = []
    for orbit in KRE_PARTITION_ORBITS:
        for src, dst in zip(orbit, orbit[1:] + orbit[:1]):
            got = str(nc.kre_partition(nc.parse_ncp(src, 3)))
            if got != dst:
                bad.append(f"{src}->{got} (expected {dst})")
    reports.append(_report("golden-kre-partitions", 5, bad, start))

    start = time.perf_counter()
    bad = _check_orbits(chain_map(nc.kre), KRE_PATH_ORBITS)
    reports.append(_report("golden-kre", 12, bad, start))

    start = time.perf_counter()
    bad = []
    for src, dst in SU_PARTITION_PAIRS.items():
        got = str(nc.su_partition(nc.parse_ncp(src, 3)))
        if got != dst:
            bad.append(f"{src}->{got} (expected {dst})")
    bad += _check_pairs(chain_map(nc.su), SU_PATH_PAIRS)
    reports.append(_report("golden-su", 12, bad, start))

    start = time.perf_counter()
    bad = []
    for src, dst in LK_PARTITION_PAIRS.items():
        got = str(nc.lk_partition(nc.parse_ncp(src, 3)))
        if got != dst:
            bad.append(f"{src}->{got} (expected {dst})")
    bad += _check_pairs(chain_map(nc.lk), LK_PATH_PAIRS)
    reports.append(_report("golden-lk", 12, bad, start))

    start = time.perf_counter()
    bad = _check_orbits(rowmotion, ROWMOTION_ORBITS)
    reports.append(_report("golden-rowmotion", 12, bad, start))

    start = time.perf_counter()
    bad = _check_pairs(rowvacuation, ROWVACUATION_PAIRS)
    reports.append(_report("golden-rowvacuation", 12, bad, start))

    start = time.perf_counter()
    bad = _check_pairs(dual_rowvacuation, DUAL_ROWVACUATION_PAIRS)
    reports.append(_report("golden-dual-rowvacuation", 12, bad, start))

    start = time.perf_counter()
    bad = _check_orbits(mat, MAT_ORBITS)
    reports.append(_report("golden-mat", 12, bad, start))

    start = time.perf_counter()
    bad = _check_orbits(rsk_hat_inverse, RSK_INVERSE_ORBITS)
    reports.append(_report("golden-rsk-inverse", 12, bad, start))

    return reports
