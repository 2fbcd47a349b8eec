"""
Scalar statistics of (ordered) set partitions.

Everything is phrased through the block-index word w of the partition
(w_i = index of the block containing i) together with the opener set O
(block minima) and closer set F (block maxima).  For an element i and a
reference j, "left"/"right" refer to the position of j's block relative
to i's block (w_j < w_i resp. w_j > w_i) and "smaller"/"bigger" to the
element comparison j < i resp. j > i.  The eight per-element coordinate
counts are then

    ros_i = #{j in O : j < i, w_j > w_i}    rob_i = #{j in O : j > i, w_j > w_i}
    rcs_i = #{j in F : j < i, w_j > w_i}    rcb_i = #{j in F : j > i, w_j > w_i}
    los_i = #{j in O : j < i, w_j < w_i}    lob_i = #{j in O : j > i, w_j < w_i}
    lcs_i = #{j in F : j < i, w_j < w_i}    lcb_i = #{j in F : j > i, w_j < w_i}

and a statistic of the same name is the sum over i.  The derived family:

    mak   = ros + lcs             makp  = lob + rcb
    lmakp = n(k-1) - (lcb + rob)  lmak  = n(k-1) - (los + rcs)

On canonically ordered blocks lob vanishes, mak = lmakp and makp = lmak
pointwise, and the generating function of each over the partitions of
[n] into k blocks is the q-Stirling number S_q(n, k).

Element-level inversion counts, for b in block j:

    rinv(b)  = #{a in later blocks  : a < b}
    nrinv(b) = #{a in later blocks  : a > b}
    linv(b)  = #{a in earlier blocks: a > b}

mak_l adjusts mak by the closer of the l-th block:
mak_l = mak - nrinv(max(B_l)) + k - l, so mak_k = mak.

For a partition with k+1 blocks, stat_i = k - rinv(F) - nrinv(max(B_i))
may be negative.

Ordered partitions additionally carry the dominance order B > B' (every
element of B exceeds every element of B', i.e. min(B) > max(B')), giving

    bmaj = sum of indices i with B_i > B_{i+1}
    binv = #{(i, j) : i < j, B_i > B_j}.
"""

from __future__ import annotations

import enum
from typing import Callable

from .core import (
    ElementClassification,
    OrderedSetPartition,
    Partition,
    PartitionError,
    SetPartition,
    classify,
)


class CoordKind(enum.Enum):
    """The eight coordinate statistics, as (side, reference, comparison)."""

    ROS = ("right", "opener", "smaller")
    ROB = ("right", "opener", "bigger")
    RCS = ("right", "closer", "smaller")
    RCB = ("right", "closer", "bigger")
    LOS = ("left", "opener", "smaller")
    LOB = ("left", "opener", "bigger")
    LCS = ("left", "closer", "smaller")
    LCB = ("left", "closer", "bigger")

    @property
    def side(self) -> str:
        return self.value[0]

    @property
    def reference(self) -> str:
        return self.value[1]

    @property
    def comparison(self) -> str:
        return self.value[2]


def _references(p: Partition, kind: CoordKind, cls: ElementClassification | None = None):
    if cls is None:
        cls = classify(p)
    return cls.openers if kind.reference == "opener" else cls.closers


def coord_stat(p: Partition, kind: CoordKind, i: int) -> int:
    """The per-element coordinate count for element i."""
    if not 1 <= i <= p.n:
        raise PartitionError(f"element {i} outside 1..{p.n}")
    w = p.word
    wi = w[i - 1]
    total = 0
    for j in _references(p, kind):
        if (j < i) != (kind.comparison == "smaller"):
            continue
        if j == i:
            continue
        wj = w[j - 1]
        if kind.side == "right":
            total += wj > wi
        else:
            total += wj < wi
    return total


def coord_sum(p: Partition, kind: CoordKind) -> int:
    return sum(coord_stat(p, kind, i) for i in range(1, p.n + 1))


def coord_sums_all(p: Partition) -> dict[CoordKind, int]:
    """All eight coordinate sums in one sweep over (element, reference) pairs."""
    w = p.word
    cls = classify(p)
    totals = dict.fromkeys(CoordKind, 0)
    pairs = (
        (cls.openers, CoordKind.ROS, CoordKind.ROB, CoordKind.LOS, CoordKind.LOB),
        (cls.closers, CoordKind.RCS, CoordKind.RCB, CoordKind.LCS, CoordKind.LCB),
    )
    for i in range(1, p.n + 1):
        wi = w[i - 1]
        for refs, rs, rb, ls, lb in pairs:
            for j in refs:
                if j == i:
                    continue
                wj = w[j - 1]
                if wj > wi:
                    totals[rs if j < i else rb] += 1
                elif wj < wi:
                    totals[ls if j < i else lb] += 1
    return totals


def _normalization(p: Partition) -> int:
    return p.n * (p.k - 1) if p.k else 0


def mak(p: Partition) -> int:
    t = coord_sums_all(p)
    return t[CoordKind.ROS] + t[CoordKind.LCS]


def makp(p: Partition) -> int:
    t = coord_sums_all(p)
    return t[CoordKind.LOB] + t[CoordKind.RCB]


def lmakp(p: Partition) -> int:
    t = coord_sums_all(p)
    return _normalization(p) - (t[CoordKind.LCB] + t[CoordKind.ROB])


def lmak(p: Partition) -> int:
    t = coord_sums_all(p)
    return _normalization(p) - (t[CoordKind.LOS] + t[CoordKind.RCS])


def rinv(b: int, p: Partition) -> int:
    """Elements of later blocks that are smaller than b."""
    if not 1 <= b <= p.n:
        raise PartitionError(f"element {b} outside 1..{p.n}")
    w = p.word
    wb = w[b - 1]
    return sum(1 for a in range(1, b) if w[a - 1] > wb)


def nrinv(b: int, p: Partition) -> int:
    """Elements of later blocks that are bigger than b."""
    if not 1 <= b <= p.n:
        raise PartitionError(f"element {b} outside 1..{p.n}")
    w = p.word
    wb = w[b - 1]
    return sum(1 for a in range(b + 1, p.n + 1) if w[a - 1] > wb)


def linv(b: int, p: Partition) -> int:
    """Elements of earlier blocks that are bigger than b."""
    if not 1 <= b <= p.n:
        raise PartitionError(f"element {b} outside 1..{p.n}")
    w = p.word
    wb = w[b - 1]
    return sum(1 for a in range(b + 1, p.n + 1) if w[a - 1] < wb)


def linv_openers(p: Partition) -> int:
    return sum(linv(b, p) for b in classify(p).openers)


def rinv_closers(p: Partition) -> int:
    return sum(rinv(b, p) for b in classify(p).closers)


def linv_closers(p: Partition) -> int:
    return sum(linv(b, p) for b in classify(p).closers)


def _require_canonical(p: Partition, name: str) -> SetPartition:
    if isinstance(p, SetPartition):
        return p
    raise PartitionError(f"{name} is defined on canonically ordered partitions only")


def mak_l(p: SetPartition, l: int) -> int:
    """mak adjusted at the l-th block: mak - nrinv(max(B_l)) + k - l."""
    p = _require_canonical(p, "mak_l")
    if not 1 <= l <= p.k:
        raise PartitionError(f"block index {l} outside 1..{p.k}")
    closer = p.blocks[l - 1][-1]
    return mak(p) - nrinv(closer, p) + p.k - l


def stat_i(p: SetPartition, i: int) -> int:
    """k - rinv(F) - nrinv(max(B_i)) on a partition with k+1 blocks."""
    p = _require_canonical(p, "stat_i")
    if not 1 <= i <= p.k:
        raise PartitionError(f"block index {i} outside 1..{p.k}")
    k = p.k - 1
    closer = p.blocks[i - 1][-1]
    return k - rinv_closers(p) - nrinv(closer, p)


def _dominates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return a[0] > b[-1]


def bmaj(p: Partition) -> int:
    """Sum of positions i whose block dominates its successor."""
    blocks = p.blocks
    return sum(
        i
        for i in range(1, len(blocks))
        if _dominates(blocks[i - 1], blocks[i])
    )


def binv(p: Partition) -> int:
    """Number of dominating pairs of blocks B_i > B_j with i < j."""
    blocks = p.blocks
    return sum(
        1
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
        if _dominates(blocks[i], blocks[j])
    )


def _coord_sum_fn(kind: CoordKind) -> Callable[[Partition], int]:
    return lambda p: coord_sum(p, kind)


STATISTICS: dict[str, Callable[[Partition], int]] = {
    "ros": _coord_sum_fn(CoordKind.ROS),
    "rob": _coord_sum_fn(CoordKind.ROB),
    "rcs": _coord_sum_fn(CoordKind.RCS),
    "rcb": _coord_sum_fn(CoordKind.RCB),
    "los": _coord_sum_fn(CoordKind.LOS),
    "lob": _coord_sum_fn(CoordKind.LOB),
    "lcs": _coord_sum_fn(CoordKind.LCS),
    "lcb": _coord_sum_fn(CoordKind.LCB),
    "mak": mak,
    "makp": makp,
    "lmak": lmak,
    "lmakp": lmakp,
    "bmaj": bmaj,
    "binv": binv,
    "linv_openers": linv_openers,
    "rinv_closers": rinv_closers,
    "linv_closers": linv_closers,
}

ELEMENT_STATISTICS: dict[str, Callable[[int, Partition], int]] = {
    "rinv": rinv,
    "nrinv": nrinv,
    "linv": linv,
}


def resolve_statistic(
    name: str, l: int | None = None, b: int | None = None
) -> Callable[[Partition], int]:
    """Look up a statistic by CLI name.

    Supports sums like ``mak+bmaj``, the block-indexed ``mak_l`` (needs
    ``l``), and the element-level rinv/nrinv/linv (need ``b``).
    """
    name = name.strip()
    if "+" in name:
        parts = [resolve_statistic(part, l=l, b=b) for part in name.split("+")]
        return lambda p: sum(fn(p) for fn in parts)
    if name == "mak_l":
        if l is None:
            raise PartitionError("statistic mak_l needs a block index l")
        return lambda p: mak_l(p, l)
    if name == "stat_i":
        if l is None:
            raise PartitionError("statistic stat_i needs a block index l")
        return lambda p: stat_i(p, l)
    if name in ELEMENT_STATISTICS:
        if b is None:
            raise PartitionError(f"statistic {name} needs an element b")
        fn = ELEMENT_STATISTICS[name]
        return lambda p: fn(b, p)
    try:
        return STATISTICS[name]
    except KeyError:
        raise PartitionError(f"unknown statistic {name!r}") from None
