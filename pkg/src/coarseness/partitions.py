"""Convex partitions: validation, enumeration, exact coarseness and the
constructive partitions built from 1- and 2-separable islands."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .discrepancy import disc
from .errors import BudgetExceeded, InvalidIslandError
from .geometry import convex_hull, hulls_disjoint
from .islands import (
    DEFAULT_BUDGET,
    Halfplane,
    Island,
    halfplane_family,
    hull_certificate,
    hull_closure,
    members_mask,
    one_separable_certificate,
    separability_number,
    whole_halfplane,
)
from .pointset import ColoredPointSet, indices_of

DEFAULT_LIMIT = 10
HARD_LIMIT = 12


@dataclass(frozen=True)
class ConvexPartition:
    """Blocks sorted by their member tuples."""

    blocks: tuple[Island, ...]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(b.mask for b in self.blocks)

    def index_lists(self) -> list[list[int]]:
        return [list(b.members) for b in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class PartitionViolation:
    """Why a proposed list of blocks is not a convex partition.

    ``kind`` is one of ``not-a-partition``, ``not-an-island`` or
    ``hulls-intersect``; ``blocks`` holds the offending blocks.
    """

    kind: str
    blocks: tuple[tuple[int, ...], ...]
    message: str


@dataclass(frozen=True)
class CoarsenessResult:
    value: int
    witness: ConvexPartition
    partitions_examined: int


def make_partition(ps: ColoredPointSet, blocks, certificates=None) -> ConvexPartition:
    """Build a partition from trusted blocks (index collections or masks)."""
    masks = [members_mask(b) for b in blocks]
    certs = certificates or [None] * len(masks)
    islands = []
    for m, cert in zip(masks, certs):
        if cert is None:
            cert = whole_certificate(ps) if m == ps.full_mask else hull_certificate(ps, m)
        islands.append(Island(indices_of(m), tuple(cert)))
    islands.sort(key=lambda b: b.members)
    return ConvexPartition(tuple(islands))


def whole_certificate(ps: ColoredPointSet) -> tuple[Halfplane, ...]:
    return (whole_halfplane(ps),)


def validate_partition(ps: ColoredPointSet, blocks: Sequence) -> ConvexPartition | PartitionViolation:
    """Check blocks for coverage, the island property and disjoint hulls, in that order."""
    tuples = [tuple(sorted(set(b))) for b in blocks]
    seen: dict[int, int] = {}
    for bi, (raw, blk) in enumerate(zip(blocks, tuples)):
        if not blk:
            return PartitionViolation("not-a-partition", (blk,), f"block {bi} is empty")
        if len(blk) != len(list(raw)):
            return PartitionViolation("not-a-partition", (blk,), f"block {bi} repeats an index")
        for i in blk:
            if not isinstance(i, int) or not 0 <= i < ps.n:
                return PartitionViolation("not-a-partition", (blk,), f"index {i} out of range")
            if i in seen:
                other = tuples[seen[i]]
                return PartitionViolation("not-a-partition", (other, blk),
                                          f"index {i} appears in two blocks")
            seen[i] = bi
    if len(seen) != ps.n:
        missing = sorted(set(range(ps.n)) - set(seen))
        return PartitionViolation("not-a-partition", (), f"indices {missing} are not covered")
    for blk in tuples:
        hull = convex_hull(ps.points[i] for i in blk)
        inside = [i for i in range(ps.n) if i not in blk and hull.contains(ps.points[i])]
        if inside:
            return PartitionViolation("not-an-island", (blk,),
                                      f"hull of {list(blk)} contains points {inside}")
    hulls = [convex_hull(ps.points[i] for i in blk) for blk in tuples]
    for a in range(len(tuples)):
        for b in range(a + 1, len(tuples)):
            if not hulls_disjoint(hulls[a], hulls[b]):
                return PartitionViolation("hulls-intersect", (tuples[a], tuples[b]),
                                          f"hulls of {list(tuples[a])} and {list(tuples[b])} meet")
    return make_partition(ps, tuples)


def partition_disc(ps: ColoredPointSet, pi: ConvexPartition) -> int:
    return min(disc(ps, b.mask) for b in pi.blocks)


def _check_size(ps: ColoredPointSet, limit: int):
    cap = min(limit, HARD_LIMIT)
    if ps.n > cap:
        raise BudgetExceeded(
            f"partition enumeration refused for n={ps.n} (limit {cap})",
            estimate=ps.n, budget=cap)


def partition_masks(ps: ColoredPointSet, limit: int = DEFAULT_LIMIT) -> Iterator[tuple[int, ...]]:
    """Convex partitions as tuples of block masks, in restricted-growth order.

    Point ``i`` joins an existing block or opens a new one.  A branch is cut
    as soon as a block's hull swallows an already placed point or two
    blocks can no longer be split by a line.
    """
    _check_size(ps, limit)
    n = ps.n
    family = [m for m, _ in halfplane_family(ps)]
    split: dict[tuple[int, int], bool] = {}

    def separated(a: int, b: int) -> bool:
        key = (a, b) if a < b else (b, a)
        r = split.get(key)
        if r is None:
            # disjoint compact hulls admit a strictly separating halfplane
            r = any(m & a == a and not m & b for m in family)
            split[key] = r
        return r

    blocks: list[int] = []

    def rec(i: int):
        if i == n:
            yield tuple(blocks)
            return
        bit = 1 << i
        placed = (bit << 1) - 1
        for j in range(len(blocks)):
            old = blocks[j]
            nb = old | bit
            if hull_closure(ps, nb) & placed != nb:
                continue
            if all(separated(nb, c) for k, c in enumerate(blocks) if k != j):
                blocks[j] = nb
                yield from rec(i + 1)
                blocks[j] = old
        if all(separated(bit, c) for c in blocks):
            blocks.append(bit)
            yield from rec(i + 1)
            blocks.pop()

    if n:
        yield from rec(0)


def enumerate_convex_partitions(ps: ColoredPointSet, limit: int = DEFAULT_LIMIT) -> Iterator[ConvexPartition]:
    """Every convex partition exactly once."""
    for masks in partition_masks(ps, limit):
        yield make_partition(ps, masks)


def _order_key(masks: Sequence[int]):
    return len(masks), sorted(indices_of(m) for m in masks)


def exact_coarseness(ps: ColoredPointSet, limit: int = DEFAULT_LIMIT) -> CoarsenessResult:
    """Maximum partition discrepancy; ties go to fewest blocks, then lexicographic."""
    weights = ps.colors
    dcache: dict[int, int] = {}

    def bdisc(m: int) -> int:
        d = dcache.get(m)
        if d is None:
            d = dcache[m] = abs(sum(weights[i] for i in indices_of(m)))
        return d

    best = -1
    best_masks: tuple[int, ...] = ()
    count = 0
    for masks in partition_masks(ps, limit):
        count += 1
        v = min(bdisc(m) for m in masks)
        if v > best or (v == best and _order_key(masks) < _order_key(best_masks)):
            best, best_masks = v, masks
    if count == 0:
        return CoarsenessResult(0, ConvexPartition(()), 0)
    return CoarsenessResult(best, make_partition(ps, best_masks), count)


def one_sep_bound(t: int, imbalance: int) -> Fraction:
    return max(Fraction(t, 2), Fraction(t - imbalance))


def two_sep_bound(t: int, imbalance: int) -> Fraction:
    return max(Fraction(t, 8), Fraction(t, 4) - imbalance)


def _best(ps: ColoredPointSet, candidates) -> ConvexPartition:
    """Highest partition discrepancy, then fewest blocks, then lexicographic."""
    def key(pi):
        return -partition_disc(ps, pi), len(pi.blocks), [b.members for b in pi.blocks]
    return min(candidates, key=key)


def _mask_of_halfplanes(ps: ColoredPointSet, hs) -> int:
    m = 0
    for i, p in enumerate(ps.points):
        if all(h.contains(p) for h in hs):
            m |= 1 << i
    return m


def _split_candidates(ps: ColoredPointSet, hp: Halfplane) -> list[ConvexPartition]:
    full = ps.full_mask
    whole = make_partition(ps, [full], [whole_certificate(ps)])
    inner = _mask_of_halfplanes(ps, [hp])
    rest = full & ~inner
    if not inner or not rest:
        return [whole]
    split = make_partition(ps, [inner, rest], [(hp,), (hp.complement(),)])
    return [whole, split]


def _one_halfplane(ps: ColoredPointSet, island) -> Halfplane:
    if isinstance(island, Island) and len(island.certificate) == 1:
        return island.certificate[0]
    hp = one_separable_certificate(ps, members_mask(island))
    if hp is None:
        raise InvalidIslandError(f"{indices_of(members_mask(island))} is not halfplane-separable")
    return hp


def partition_from_1sep(ps: ColoredPointSet, island) -> tuple[ConvexPartition, Fraction]:
    """Split ``S`` along the island's halfplane, or keep ``S`` whole if that is better.

    The bound ``max(t/2, t - |r-b|)`` with ``t = disc(island)`` holds for
    the returned partition.
    """
    hp = _one_halfplane(ps, island)
    t = disc(ps, _mask_of_halfplanes(ps, [hp]))
    return _best(ps, _split_candidates(ps, hp)), one_sep_bound(t, abs(ps.r - ps.b))


def partition_from_2sep(ps: ColoredPointSet, island: Island) -> tuple[ConvexPartition, Fraction]:
    """Partition guaranteeing ``max(t/8, t/4 - |r-b|)`` for an island cut by two halfplanes.

    With ``I = H1 & H2`` the rest of ``S`` falls into ``I1 = ~H1 & H2``,
    ``I2 = H1 & ~H2`` and ``I3 = ~H1 & ~H2``.  If ``I1`` or ``I2`` is light
    the union with ``I`` is a heavy halfplane set; otherwise either all four
    quadrants are heavy enough or ``I1 + I3`` is.
    """
    mask = members_mask(island)
    imbalance = abs(ps.r - ps.b)
    t = disc(ps, mask)
    bound = two_sep_bound(t, imbalance)
    cert = island.certificate if isinstance(island, Island) else ()
    if len(cert) <= 1 or one_separable_certificate(ps, mask) is not None:
        pi, _ = partition_from_1sep(ps, island)
        return pi, bound
    if len(cert) != 2:
        raise InvalidIslandError("partition_from_2sep needs a two-halfplane certificate")
    h1, h2 = cert
    n1, n2 = h1.complement(), h2.complement()
    q1 = _mask_of_halfplanes(ps, [n1, h2])
    q2 = _mask_of_halfplanes(ps, [h1, n2])
    q3 = _mask_of_halfplanes(ps, [n1, n2])
    full = ps.full_mask
    candidates = [make_partition(ps, [full], [whole_certificate(ps)])]
    if 2 * disc(ps, q1) <= t:
        candidates += _split_candidates(ps, h2)
    elif 2 * disc(ps, q2) <= t:
        candidates += _split_candidates(ps, h1)
    elif 4 * disc(ps, q3) >= t:
        parts = [(m, c) for m, c in ((mask, (h1, h2)), (q1, (n1, h2)), (q2, (h1, n2)), (q3, (n1, n2))) if m]
        candidates.append(make_partition(ps, [m for m, _ in parts], [c for _, c in parts]))
    else:
        candidates += _split_candidates(ps, n1)
    return _best(ps, candidates), bound


def find_5sep_block(ps: ColoredPointSet, pi: ConvexPartition, k_max: int = 5,
                    budget: int = DEFAULT_BUDGET):
    """First block (in partition order) separable by at most ``k_max`` halfplanes.

    Returns ``(index, t)``, or None when no block qualifies.
    """
    for idx, block in enumerate(pi.blocks):
        t = separability_number(ps, block.mask, k_max, budget)
        if t is not None:
            return idx, t
    return None
