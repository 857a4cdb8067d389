"""Point-mass measures on diagram cells and support bookkeeping.

A partition of n turns into a probability measure with one atom of mass
1/n on each diagram cell, placed on the corner of the unit cell closest to
the origin (the cell tuple itself).  `decompose` splits the cells of a
partition against those of its permuted image into shared and moved parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import apply_permutation, to_cells


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finitely many distinct atoms with exact positive weights summing to 1."""

    dimension: int
    atoms: tuple  # ((point, Fraction), ...)

    def __post_init__(self):
        points = [pt for pt, _ in self.atoms]
        if len(set(points)) != len(points):
            raise ValueError("atom points must be pairwise distinct")
        if any(len(pt) != self.dimension for pt in points):
            raise ValueError(f"atom points must have {self.dimension} coordinates")
        if any(w <= 0 for _, w in self.atoms):
            raise ValueError("atom weights must be positive")
        total = sum((w for _, w in self.atoms), Fraction(0))
        if total != 1:
            raise ValueError(f"atom weights must sum to 1, got {total}")

    @property
    def support(self):
        return frozenset(pt for pt, _ in self.atoms)

    def points(self):
        return tuple(pt for pt, _ in self.atoms)


@dataclass(frozen=True)
class SupportDecomposition:
    """Split of source and target cells into shared and exclusive parts."""

    common: frozenset
    source_only: frozenset
    target_only: frozenset

    def __post_init__(self):
        assert not (self.common & self.source_only)
        assert not (self.common & self.target_only)
        assert len(self.source_only) == len(self.target_only)


def measure_of(p):
    """Uniform measure with one atom of mass 1/n per diagram cell of p.

    Atoms are listed in sorted point order, which fixes the row and column
    indexing used by cost matrices and plans downstream.
    """
    cells = sorted(to_cells(p).cells)
    w = Fraction(1, p.n)
    return DiscreteMeasure(dimension=p.m + 1, atoms=tuple((c, w) for c in cells))


def decompose(p, sigma):
    """Split cells of p against cells of its sigma-permuted image.

    `common` is the intersection, `source_only` the cells only p has,
    `target_only` the cells only the image has.  The two exclusive parts
    always have equal cardinality.
    """
    src = to_cells(p)
    dst = apply_permutation(src, sigma)
    common = src.cells & dst.cells
    return SupportDecomposition(
        common=frozenset(common),
        source_only=frozenset(src.cells - common),
        target_only=frozenset(dst.cells - common),
    )


def measure_to_json(mu):
    """Debug output form with exact weights."""
    return {
        "dimension": mu.dimension,
        "atoms": [
            {"point": list(pt), "num": w.numerator, "den": w.denominator}
            for pt, w in mu.atoms
        ],
    }
