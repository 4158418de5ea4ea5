"""Non-crossing partitions, refinement chains, and their bijections.

A chain stores its layers coarsest first; the weight of a pair is the
number of layers whose partition joins it.  The path of a chain is built
recursively: the path of a block glues the paths of its next-layer
sub-blocks (splicing each at the slot boundary given by the number of
smaller elements already present) and then shifts every up step after the
first one position earlier, which raises all its weights by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .paths import RationalDyckPath, Slope


@dataclass(frozen=True)
class NonCrossingPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        elems = sorted(x for b in self.blocks for x in b)
        if elems != list(range(1, self.n + 1)):
            raise ValueError(f"blocks must partition [1,{self.n}]")
        if any(tuple(sorted(b)) != b for b in self.blocks):
            raise ValueError("block elements must be sorted")
        if any(x[0] >= y[0] for x, y in zip(self.blocks, self.blocks[1:])):
            raise ValueError("blocks must be ordered by minimum")
        if not _noncrossing(self.blocks):
            raise ValueError(f"partition crosses: {self.blocks}")

    def block_index(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def refines(self, other: "NonCrossingPartition") -> bool:
        coarse = other.block_index()
        return all(len({coarse[x] for x in b}) == 1 for b in self.blocks)

    def __str__(self) -> str:
        return "/".join(".".join(str(x) for x in b) for b in self.blocks)


def _noncrossing(blocks) -> bool:
    for (b1, b2) in combinations(blocks, 2):
        for i, k in combinations(b1, 2):
            if any(i < j < k for j in b2) and any(l < i or l > k for l in b2):
                return False
    return True


def ncp(n: int, blocks) -> NonCrossingPartition:
    canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
    return NonCrossingPartition(n, canon)


def parse_ncp(text: str, n: int | None = None) -> NonCrossingPartition:
    blocks = [tuple(int(x) for x in part.split(".")) for part in text.strip().split("/")]
    size = n if n is not None else max(x for b in blocks for x in b)
    return ncp(size, blocks)


@dataclass(frozen=True)
class NonCrossingChain:
    k: int
    layers: tuple[NonCrossingPartition, ...]

    def __post_init__(self) -> None:
        if len(self.layers) != self.k:
            raise ValueError(f"expected {self.k} layers")
        if len({layer.n for layer in self.layers}) != 1:
            raise ValueError("layers must share the ground set")
        for finer, coarser in zip(self.layers[1:], self.layers):
            if not finer.refines(coarser):
                raise ValueError(f"layer {finer} does not refine {coarser}")

    @property
    def n(self) -> int:
        return self.layers[0].n

    def weight(self, i: int, j: int) -> int:
        return sum(
            1 for layer in self.layers if layer.block_index()[i] == layer.block_index()[j]
        )

    def __str__(self) -> str:
        return ";".join(str(layer) for layer in self.layers)


def parse_chain(text: str, n: int | None = None) -> NonCrossingChain:
    layers = tuple(parse_ncp(part, n) for part in text.strip().split(";"))
    size = max(layer.n for layer in layers)
    layers = tuple(parse_ncp(str(layer), size) for layer in layers)
    return NonCrossingChain(len(layers), layers)


@lru_cache(maxsize=None)
def enumerate_ncps(n: int) -> tuple[NonCrossingPartition, ...]:
    out: list[NonCrossingPartition] = []

    def rec(partial: list[list[int]], x: int) -> None:
        if x > n:
            try:
                out.append(ncp(n, [tuple(b) for b in partial]))
            except ValueError:
                pass
            return
        for b in partial:
            b.append(x)
            rec(partial, x + 1)
            b.pop()
        partial.append([x])
        rec(partial, x + 1)
        partial.pop()

    rec([], 1)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_chains(n: int, k: int) -> tuple[NonCrossingChain, ...]:
    parts = enumerate_ncps(n)
    finer = {p: [q for q in parts if q.refines(p)] for p in parts}
    out: list[NonCrossingChain] = []

    def rec(acc: list[NonCrossingPartition]) -> None:
        if len(acc) == k:
            out.append(NonCrossingChain(k, tuple(acc)))
            return
        for q in finer[acc[-1]]:
            acc.append(q)
            rec(acc)
            acc.pop()

    for p in parts:
        rec([p])
    return tuple(out)


# ---------------------------------------------------------------------------
# Chain <-> path bijection


def _increment(u: tuple[int, ...]) -> tuple[int, ...]:
    if len(u) == 1:
        return u
    if u[0] != 1 or u[1] <= 2:
        raise AssertionError(f"cannot shift up steps of {u}")
    return (1,) + tuple(x - 1 for x in u[1:])


def _glue(children: list[tuple[list[int], tuple[int, ...]]], k: int):
    """Splice child paths at slot boundaries; children sorted by minimum."""
    elems: list[int] = []
    u: tuple[int, ...] = ()
    for ce, cu in children:
        if not elems:
            elems, u = list(ce), cu
            continue
        i = sum(1 for e in elems if e < ce[0])
        pos = (k + 1) * i
        width = (k + 1) * len(ce)
        u = (
            tuple(x for x in u if x <= pos)
            + tuple(x + pos for x in cu)
            + tuple(x + width for x in u if x > pos)
        )
        elems = sorted(elems + ce)
    return elems, u


def _build_block(block: tuple[int, ...], chain: NonCrossingChain, t: int):
    k = chain.k
    if t == k:
        children = [[x] for x in block]
    else:
        layer = chain.layers[t]  # the (t+1)-th layer
        children = [list(b) for b in layer.blocks if set(b) <= set(block)]
    parts = []
    for child in sorted(children, key=lambda c: c[0]):
        if t == k:
            parts.append((child, (1,)))
        else:
            parts.append((child, _build_block(tuple(child), chain, t + 1)[1]))
    elems, u = _glue(parts, k)
    return elems, _increment(u)


def ncp_to_dyck(chain: NonCrossingChain) -> RationalDyckPath:
    k, n = chain.k, chain.n
    parts = [
        (list(b), _build_block(b, chain, 1)[1]) for b in chain.layers[0].blocks
    ]
    _, u = _glue(parts, k)
    return RationalDyckPath(Slope(1, k, n), u)


@lru_cache(maxsize=None)
def _chain_table(n: int, k: int) -> dict[RationalDyckPath, NonCrossingChain]:
    table: dict[RationalDyckPath, NonCrossingChain] = {}
    for chain in enumerate_chains(n, k):
        path = ncp_to_dyck(chain)
        if path in table:
            raise AssertionError(f"chain map is not injective at {path}")
        table[path] = chain
    return table


def dyck_to_ncp(p: RationalDyckPath) -> NonCrossingChain:
    if p.slope.a != 1:
        raise ValueError(f"chains correspond to (1,k) paths, got {p.slope}")
    table = _chain_table(p.slope.n, p.slope.b)
    try:
        return table[p]
    except KeyError:
        raise AssertionError(f"chain map is not surjective at {p}") from None


# ---------------------------------------------------------------------------
# The five maps


def rot_partition(p: NonCrossingPartition) -> NonCrossingPartition:
    return ncp(p.n, [[(x - 2) % p.n + 1 for x in b] for b in p.blocks])


def ref_partition(p: NonCrossingPartition) -> NonCrossingPartition:
    return ncp(p.n, [[p.n + 1 - x for x in b] for b in p.blocks])


def kre_partition(p: NonCrossingPartition) -> NonCrossingPartition:
    """Complement by cycle composition: blocks of sigma^-1 followed by the
    long cycle, each block read as an increasing cycle."""
    n = p.n
    nxt = {}
    for b in p.blocks:
        for i, x in enumerate(b):
            nxt[x] = b[(i + 1) % len(b)]
    prev = {v: u for u, v in nxt.items()}
    tau = {i: prev[i % n + 1] for i in range(1, n + 1)}
    blocks = []
    seen: set[int] = set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = tau[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = tau[x]
        blocks.append(cyc)
    return ncp(n, blocks)


def su_partition(p: NonCrossingPartition) -> NonCrossingPartition:
    return ref_partition(kre_partition(p))


def lk_partition(p: NonCrossingPartition) -> NonCrossingPartition:
    """Conjugate of the two-row involution through the chain and RSK maps."""
    from .perms import dyck2, e_p, e_p_inverse, rsk_hat
    from .tilings import dt_map

    chain = NonCrossingChain(1, (p,))
    path = ncp_to_dyck(chain)
    path = e_p(dt_map(path))
    path = dyck2(path)
    path = rsk_hat(e_p_inverse(path))
    return dyck_to_ncp(path).layers[0]


def rank(p: NonCrossingPartition) -> int:
    return p.n - len(p.blocks)


def _layerwise(chain: NonCrossingChain, f, reverse: bool) -> NonCrossingChain:
    layers = tuple(f(layer) for layer in chain.layers)
    if reverse:
        layers = layers[::-1]
    return NonCrossingChain(chain.k, layers)


def rot(chain: NonCrossingChain) -> NonCrossingChain:
    return _layerwise(chain, rot_partition, reverse=False)


def ref(chain: NonCrossingChain) -> NonCrossingChain:
    return _layerwise(chain, ref_partition, reverse=False)


def kre(chain: NonCrossingChain) -> NonCrossingChain:
    return _layerwise(chain, kre_partition, reverse=True)


def su(chain: NonCrossingChain) -> NonCrossingChain:
    return _layerwise(chain, su_partition, reverse=True)


def lk(chain: NonCrossingChain) -> NonCrossingChain:
    return _layerwise(chain, lk_partition, reverse=True)


def kre_inverse(chain: NonCrossingChain) -> NonCrossingChain:
    out = chain
    for _ in range(chain.n * 2 - 1):
        out = kre(out)
    return out


# ---------------------------------------------------------------------------
# Lift


def _pair_weights(chain: NonCrossingChain) -> dict[tuple[int, int], int]:
    n = chain.n
    weights: dict[tuple[int, int], int] = {}
    for layer in chain.layers:
        for b in layer.blocks:
            for pair in combinations(b, 2):
                weights[pair] = weights.get(pair, 0) + 1
    return weights


def _chain_from_weights(n: int, k: int, weights: dict[tuple[int, int], int]) -> NonCrossingChain:
    layers = []
    for t in range(1, k + 1):
        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (i, j), w in weights.items():
            if w >= t:
                parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for x in range(1, n + 1):
            groups.setdefault(find(x), []).append(x)
        layers.append(ncp(n, list(groups.values())))
    chain = NonCrossingChain(k, tuple(layers))
    if _pair_weights(chain) != {p: w for p, w in weights.items() if w > 0}:
        raise ValueError("weights are not closure-consistent")
    return chain


def lift(chain: NonCrossingChain) -> NonCrossingChain:
    """Raise every pair weight by one (absent chords enter at weight one)
    and resolve the overweight edges by the local triangle rules, then drop
    edges incompatible with the rest."""
    k = chain.k
    n = chain.n
    old = _pair_weights(chain)
    weights = {
        pair: old.get(pair, 0) + 1 for pair in combinations(range(1, n + 1), 2)
    }
    overweight = {pair for pair, w in weights.items() if w == k + 1}

    # triangle rules: around each overweight edge, every third point with two
    # ordinary edges forces one side deletion, by the relative position
    deletions: set[tuple[int, int]] = set()
    for (x, y) in overweight:
        for z in range(1, n + 1):
            if z in (x, y):
                continue
            e1 = (min(x, z), max(x, z))
            e2 = (min(y, z), max(y, z))
            if e1 in overweight or e2 in overweight:
                continue
            a, b, c = sorted((x, y, z))
            if (x, y) == (a, b):
                deletions.add((a, c))
            elif {x, y} == {b, c}:
                deletions.add((a, b))
            else:
                deletions.add((b, c))

    def crosses(e1, e2) -> bool:
        i, k1 = e1
        j, l = e2
        return i < j < k1 < l or j < i < l < k1

    for pair in list(weights):
        if pair in deletions or pair in overweight:
            weights.pop(pair)
        elif any(crosses(pair, e) for e in overweight):
            weights.pop(pair)

    # The remaining edges must be closure-consistent; a failure here is a
    # finding about the resolution rules, not something to patch silently.
    try:
        return _chain_from_weights(n, k, weights)
    except ValueError as exc:
        raise ArithmeticError(f"lift cleanup failed for {chain}: {exc}") from exc
