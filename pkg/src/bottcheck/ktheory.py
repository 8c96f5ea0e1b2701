"""K-theory decompositions read off the diagonal of the endomorphism algebra.

The nilpotent off-diagonal ideal does not affect K-theory, so K_* of the
variety is the direct sum of K_* of the diagonal Tits algebras.  Higher
K-groups are reported symbolically (as factor labels); the split K_0 rank
counts simple components, with the even Clifford algebra contributing two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .csa import CsaLabel, split_components
from .tilting import TiltingCollection, diagonal_blocks


@dataclass(frozen=True)
class KDecomposition:
    factors: tuple[CsaLabel, ...]
    k0_rank_split: int

    def display(self) -> str:
        return " + ".join(f"K({f.display()})" for f in self.factors)


def k0_decomposition(c: TiltingCollection) -> KDecomposition:
    """Labeled direct-sum decomposition of K_*; one factor per diagonal block."""
    factors = tuple(c.summands[b[0]].tits for b in diagonal_blocks(c))
    rank = sum(split_components(f) for f in factors)
    return KDecomposition(factors=factors, k0_rank_split=rank)
