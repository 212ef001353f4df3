"""Flag presentations: the data (D, block shape m, degree tuple g).

A presentation describes the graded flag F(D,m,g) whose i-th space is the span
of the first n_i shifted copies of D, and therefore the graded algebra of flag
endomorphisms that every decision procedure here operates on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .division import GradedDivisionAlgebra, _as_index, shift_conjugate
from .errors import InvalidInput
from .groups import Group, left_coset

__all__ = [
    "BlockShape",
    "FlagPresentation",
    "make_presentation",
    "shift_presentation",
    "coset_signature",
]


@dataclass(frozen=True)
class BlockShape:
    """Block sizes (m_1, ..., m_s); rows/cols 0..n-1 are grouped accordingly."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise InvalidInput(f"block sizes must be positive, got {self.blocks}", code="bad-blocks")

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def s(self) -> int:
        return len(self.blocks)

    def block_of(self, i: int) -> int:
        """Block index of row/column i (0-based)."""
        acc = 0
        for b, m in enumerate(self.blocks):
            acc += m
            if i < acc:
                return b
        raise InvalidInput(f"position {i} outside shape {self.blocks}", code="bad-blocks")

    def block_positions(self) -> list[range]:
        out, start = [], 0
        for m in self.blocks:
            out.append(range(start, start + m))
            start += m
        return out


@dataclass(frozen=True)
class FlagPresentation:
    """The input datum of every decision: division part, shape, degree tuple."""

    division: GradedDivisionAlgebra
    shape: BlockShape
    degrees: tuple[int, ...]  # element indices g_1..g_n, by position

    @property
    def group(self) -> Group:
        return self.division.group

    def degree_names(self) -> tuple[str, ...]:
        return tuple(self.group.name_of(d) for d in self.degrees)


def make_presentation(
    division: GradedDivisionAlgebra, blocks: Sequence[int] | BlockShape, degrees: Sequence
) -> FlagPresentation:
    shape = blocks if isinstance(blocks, BlockShape) else BlockShape(tuple(blocks))
    grp = division.group
    entries = tuple(_as_index(grp, d) for d in degrees)
    if len(entries) != shape.n:
        raise InvalidInput(
            f"length mismatch: tuple has {len(entries)} entries, blocks sum to {shape.n}",
            code="length-mismatch",
        )
    return FlagPresentation(division, shape, entries)


def shift_presentation(p: FlagPresentation, g) -> FlagPresentation:
    """Shift the flag by g: entries right-multiplied, division part conjugated."""
    grp = p.group
    gi = _as_index(grp, g)
    return FlagPresentation(
        shift_conjugate(p.division, gi),
        p.shape,
        tuple(grp.mul(d, gi) for d in p.degrees),
    )


def coset_signature(p: FlagPresentation) -> tuple[tuple[int, ...], ...]:
    """Per block, the sorted multiset of canonical left-coset representatives.

    The canonical representative of g*H is its minimal element index; two
    presentations over the same division part have equal signatures exactly
    when their blockwise coset multisets agree.
    """
    sub = p.division.support
    reps = [left_coset(d, sub)[0] for d in p.degrees]
    return tuple(
        tuple(sorted(reps[i] for i in block)) for block in p.shape.block_positions()
    )
