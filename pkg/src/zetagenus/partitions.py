"""Integer partitions, set partitions, and the refinement lattice.

Set partitions of {1, ..., r} are stored canonically as restricted
growth strings: a tuple (a_1, ..., a_r) with a_1 = 0 and
a_{i+1} <= max(a_1..a_i) + 1, where a_i is the index of the block
containing element i and blocks are numbered by first appearance.
Enumeration is in lexicographic order of these strings, so for r = 3:

    (0,0,0) (0,0,1) (0,1,0) (0,1,1) (0,1,2)

The partial order is refinement: pi <= rho when every block of pi sits
inside a single block of rho.  The witness for comparability is itself a
set partition, of the block index set of pi, and the Mobius function of
an interval is read off that witness.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence, Union

__all__ = [
    "IntegerPartition",
    "integer_partitions",
    "SetPartition",
    "iter_set_partitions",
    "enumerate_set_partitions",
    "coarsenings",
    "refinement_witness",
    "mobius",
    "stirling2",
    "bell_number",
    "alternating_length_sum",
]

MAX_GROUND_SIZE = 12  # Bell(12) = 4,213,597 partitions; enumeration beyond that is refused

PartitionLike = Union["IntegerPartition", Sequence[int]]


class IntegerPartition:
    """A weakly decreasing tuple of positive parts (possibly empty)."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        tup = tuple(sorted((int(p) for p in parts), reverse=True))
        if tup and tup[-1] < 1:
            raise ValueError(f"parts must be positive, got {tup}")
        self._parts = tup

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self._parts:
            out[p] = out.get(p, 0) + 1
        return out

    def symmetry_factor(self) -> int:
        """Product of factorials of the part multiplicities."""
        acc = 1
        for m in self.multiplicities().values():
            acc *= factorial(m)
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntegerPartition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "IntegerPartition") -> bool:
        return self._parts < other._parts

    def __str__(self) -> str:
        return "+".join(str(p) for p in self._parts)

    def __repr__(self) -> str:
        return f"IntegerPartition({list(self._parts)})"


def as_integer_partition(parts: PartitionLike) -> IntegerPartition:
    if isinstance(parts, IntegerPartition):
        return parts
    return IntegerPartition(parts)


def integer_partitions(k: int, max_part: Optional[int] = None) -> list[IntegerPartition]:
    """All partitions of k in descending lexicographic order.

    integer_partitions(4) lists (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if k < 0:
        raise ValueError("weight must be nonnegative")
    if k == 0:
        return [IntegerPartition()]
    cap = k if max_part is None else min(max_part, k)
    out: list[IntegerPartition] = []
    prefix: list[int] = []

    def rec(remaining: int, largest: int) -> None:
        if remaining == 0:
            out.append(IntegerPartition(tuple(prefix)))
            return
        for p in range(min(largest, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p)
            prefix.pop()

    rec(k, cap)
    return out


class SetPartition:
    """A set partition of {1, ..., r} in restricted growth form."""

    __slots__ = ("_rgs", "_blocks")

    def __init__(self, rgs: Iterable[int]):
        tup = tuple(int(a) for a in rgs)
        if not tup:
            raise ValueError("ground set must be nonempty")
        mx = -1
        for a in tup:
            if a < 0 or a > mx + 1:
                raise ValueError(f"not a restricted growth string: {tup}")
            if a == mx + 1:
                mx = a
        self._rgs = tup
        self._blocks: Optional[tuple[tuple[int, ...], ...]] = None

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        blocks = [sorted(int(x) for x in b) for b in blocks]
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        elements = sorted(x for b in blocks for x in b)
        r = len(elements)
        if elements != list(range(1, r + 1)):
            raise ValueError(f"blocks must partition 1..r exactly, got {elements}")
        blocks.sort(key=lambda b: b[0])
        index = {}
        for i, b in enumerate(blocks):
            for x in b:
                index[x] = i
        return cls(tuple(index[x] for x in range(1, r + 1)))

    @property
    def rgs(self) -> tuple[int, ...]:
        return self._rgs

    @property
    def ground_size(self) -> int:
        return len(self._rgs)

    @property
    def length(self) -> int:
        return max(self._rgs) + 1

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks ordered by smallest element, each internally ascending."""
        if self._blocks is None:
            groups: list[list[int]] = [[] for _ in range(self.length)]
            for elem, b in enumerate(self._rgs, start=1):
                groups[b].append(elem)
            self._blocks = tuple(tuple(g) for g in groups)
        return self._blocks

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SetPartition):
            return self._rgs == other._rgs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rgs)

    def __repr__(self) -> str:
        inner = "|".join(",".join(str(x) for x in b) for b in self.blocks)
        return f"SetPartition[{inner}]"


def iter_set_partitions(r: int) -> Iterator[SetPartition]:
    """Yield all set partitions of {1..r} in lexicographic RGS order."""
    if not 1 <= r <= MAX_GROUND_SIZE:
        raise ValueError(
            f"ground size {r} out of supported range 1..{MAX_GROUND_SIZE} "
            f"(Bell({MAX_GROUND_SIZE}) = {bell_number(MAX_GROUND_SIZE):,} is the enumeration cap)"
        )
    rgs = [0] * r

    def rec(i: int, mx: int) -> Iterator[SetPartition]:
        if i == r:
            yield SetPartition(tuple(rgs))
            return
        for v in range(mx + 2):
            rgs[i] = v
            yield from rec(i + 1, mx if v <= mx else v)

    yield from rec(1, 0)


def enumerate_set_partitions(r: int) -> list[SetPartition]:
    return list(iter_set_partitions(r))


def merge_blocks(pi: SetPartition, grouping: SetPartition) -> SetPartition:
    """Coarsen pi by uniting its blocks according to a partition of the block indices."""
    if grouping.ground_size != pi.length:
        raise ValueError("grouping must partition the block index set of pi")
    blocks = pi.blocks
    merged = [
        sorted(x for j in group for x in blocks[j - 1]) for group in grouping.blocks
    ]
    return SetPartition.from_blocks(merged)


def coarsenings(pi: SetPartition) -> Iterator[tuple[SetPartition, SetPartition]]:
    """Yield (rho, grouping) for every rho >= pi, where rho = merge_blocks(pi, grouping)."""
    for grouping in iter_set_partitions(pi.length):
        yield merge_blocks(pi, grouping), grouping


def refinement_witness(pi: SetPartition, rho: SetPartition) -> Optional[SetPartition]:
    """The witness that pi refines rho, or None when it does not.

    When pi <= rho there is a unique partition P of {1..length(pi)} with
    rho_i equal to the union of the pi-blocks indexed by the i-th block
    of P; that P is returned.  Ground sets must agree.
    """
    if pi.ground_size != rho.ground_size:
        raise ValueError(
            f"ground sets differ: {pi.ground_size} vs {rho.ground_size}"
        )
    rho_index = rho.rgs
    groups: list[list[int]] = [[] for _ in range(rho.length)]
    for j, block in enumerate(pi.blocks, start=1):
        targets = {rho_index[x - 1] for x in block}
        if len(targets) != 1:
            return None
        groups[targets.pop()].append(j)
    # every rho-block is a union of pi-blocks, so no group can be empty
    return SetPartition.from_blocks(groups)


def mobius(pi: SetPartition, rho: SetPartition) -> int:
    """Mobius function of the interval [pi, rho] in the refinement order.

    Equals (-1)^(length(pi) - length(rho)) * prod_i (b_i - 1)! where b_i
    counts the pi-blocks merged into the i-th block of rho.  Raises when
    the two partitions are not comparable.
    """
    witness = refinement_witness(pi, rho)
    if witness is None:
        raise ValueError(f"{pi!r} does not refine {rho!r}")
    sign = -1 if (pi.length - rho.length) % 2 else 1
    acc = sign
    for group in witness.blocks:
        acc *= factorial(len(group) - 1)
    return acc


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via the standard recurrence."""
    if n < 1 or k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if k == n or k == 1:
        return 1
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell_number(n: int) -> int:
    if n < 0:
        raise ValueError("Bell numbers need n >= 0")
    if n == 0:
        return 1
    return sum(stirling2(n, k) for k in range(1, n + 1))


def alternating_length_sum(n: int) -> int:
    """sum_{k=1}^{n} (-1)^k S(n, k) k!, which collapses to (-1)^n.

    Kept deliberately small (n <= 9) because its role is cross-checking
    the signed enumeration of the partition lattice, not bulk computation.
    """
    if not 1 <= n <= 9:
        raise ValueError("supported range is 1 <= n <= 9")
    return sum((-1) ** k * stirling2(n, k) * factorial(k) for k in range(1, n + 1))
