"""Block-triangular shape of the endomorphism algebra of a verified collection.

Hom spaces are recorded by dimension only; the structure is a triangular
integer matrix with semisimple diagonal blocks labeled by Tits algebras, which
is all the global-dimension bound and the K-theory decomposition consume.
"""

from __future__ import annotations

from dataclasses import dataclass

from .csa import CsaLabel, tits_dimension
from .tilting import ExtReport, TiltingCollection, diagonal_blocks, pairwise_ext, verify


@dataclass(frozen=True)
class EndoStructure:
    """Diagonal block labels, per-summand Hom dimension matrix, and the realized
    triangular direction ("lower": hom_dims[i][j] = 0 for i < j)."""

    blocks: tuple[CsaLabel, ...]
    block_spans: tuple[tuple[int, ...], ...]
    hom_dims: tuple[tuple[int, ...], ...]
    triangular_direction: str


def endo_structure(c: TiltingCollection, report: ExtReport | None = None) -> EndoStructure:
    """Assemble the endomorphism-algebra shape; requires a tilting verdict."""
    if report is None:
        report = verify(c)
    if not report.is_tilting:
        raise ValueError(
            f"collection is not tilting (witness {report.witness}); no endomorphism structure"
        )
    spans = diagonal_blocks(c)
    labels = tuple(c.summands[b[0]].tits for b in spans)
    structure = EndoStructure(
        blocks=labels,
        block_spans=tuple(tuple(b) for b in spans),
        hom_dims=report.hom,
        triangular_direction=report.triangular_direction,
    )
    for label, span in zip(labels, spans):
        total = sum(structure.hom_dims[i][j] for i in span for j in span)
        assert total == tits_dimension(label), (label, span, total)
    return structure


def gldim_bound(s: EndoStructure) -> int:
    """Upper bound for the global dimension of the triangular algebra.

    Peeling one semisimple diagonal block at a time raises the bound by at
    most one, so a matrix with k diagonal entries has global dimension at most
    k - 1.  The unmerged summand count is used, which only weakens the bound.
    """
    return len(s.hom_dims) - 1


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    k = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)] for i in range(k)]


def offdiagonal_nilpotent(s: EndoStructure) -> bool:
    """Whether the strictly-off-diagonal Hom part vanishes as a matrix power,
    i.e. the ideal of non-identity components is nilpotent of index <= #blocks."""
    k = len(s.hom_dims)
    n = [[s.hom_dims[i][j] if i != j else 0 for j in range(k)] for i in range(k)]
    power = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for _ in range(k):
        power = _matmul(power, n)
    return all(all(x == 0 for x in row) for row in power)


def euler_matrix(c: TiltingCollection, report: ExtReport | None = None) -> tuple[tuple[int, ...], ...]:
    """Euler form matrix: alternating sum of Ext dimensions per summand pair."""
    ext = report.ext if report is not None else pairwise_ext(c)[0]
    return tuple(
        tuple(sum((-1) ** d * dim for d, dim in cell.items()) for cell in row)
        for row in ext
    )
