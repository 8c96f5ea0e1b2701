"""Split-form tilting collections and their verification.

Three builders produce the candidate tilting bundles as ordered summand lists:

* ``build_sb(n)``    - O, I, I^2, ..., I^(n-1) on the Severi-Brauer variety of a
  degree-n algebra (projective space in split form);
* ``build_gsb(n,r)`` - Schur functors of the tautological sheaf indexed by Young
  diagrams in an r x (n-r) box, on the twisted Grassmannian;
* ``build_inv(n)``   - the interleaved line-bundle tower plus the two half-spin
  summands of the Clifford sheaf, on the involution variety (even quadric) of
  a degree-2n algebra with orthogonal involution.

``verify`` computes Ext between all ordered summand pairs with the
Borel-Weil-Bott classifier and checks every finitely checkable tilting
condition: vanishing of all higher Ext, strict one-sided triangularity of the
Hom matrix, and diagonal Hom blocks of exactly the Tits-algebra dimensions.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from .bott import CohomologyResult
from .bundles import (
    EquivariantBundle,
    GradedDims,
    dual_glweight,
    ext_dims,
    glweight_to_weight,
    make_bundle,
)
from .csa import CsaLabel, EVEN_CLIFFORD, base_field, even_clifford, tensor_power, tits_dimension
from .rootdata import Parabolic, RootDatum, Weight, root_datum


@dataclass(frozen=True)
class Summand:
    """One direct summand: its split bundle, Tits label, and position in the order."""

    label: str
    bundle: EquivariantBundle
    tits: CsaLabel
    order_index: int


@dataclass(frozen=True)
class TiltingCollection:
    family: str  # "sb" | "gsb" | "inv"
    n: int
    r: int | None
    datum: RootDatum
    parabolic: Parabolic
    summands: tuple[Summand, ...]

    def params(self) -> dict:
        out = {"n": self.n}
        if self.r is not None:
            out["r"] = self.r
        return out


@dataclass(frozen=True)
class ExtReport:
    """Full pairwise Ext table and the verdict.

    ``ext[i][j]`` holds the graded dimensions of Ext^*(summand_i, summand_j);
    ``hom[i][j]`` is its degree-0 part.  ``triangular_direction`` records on
    which side of the diagonal the nonzero Homs landed ("lower" means
    Hom(T_i, T_j) = 0 whenever i < j).
    """

    collection: TiltingCollection
    ext: tuple[tuple[GradedDims, ...], ...]
    verdict: str  # "tilting" | "failure"
    witness: tuple[int, int, int] | None
    triangular_direction: str  # "lower" | "upper" | "none"
    weight_counts: dict[str, int]

    @property
    def hom(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(d.get(0, 0) for d in row) for row in self.ext)

    @property
    def is_tilting(self) -> bool:
        return self.verdict == "tilting"


def _sb_piece(n: int, j: int) -> Weight:
    if n == 1:
        return ()
    return (-j,) + (0,) * (n - 2)


def build_sb(n: int) -> TiltingCollection:
    """O + I + ... + I^(n-1) for the Severi-Brauer variety of a degree-n algebra."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    datum = root_datum("A", n - 1)
    P: Parabolic = frozenset({1}) if n >= 2 else frozenset()
    summands = []
    for i in range(n):
        bundle = make_bundle(datum, P, {_sb_piece(n, i): 1}, scalar_mult=n**i)
        label = "O" if i == 0 else ("I" if i == 1 else f"I^{i}")
        summands.append(
            Summand(label=label, bundle=bundle, tits=tensor_power(n, i), order_index=i)
        )
    return TiltingCollection(
        family="sb", n=n, r=None, datum=datum, parabolic=P, summands=tuple(summands)
    )


def box_diagrams(n: int, r: int) -> list[tuple[int, ...]]:
    """Young diagrams with at most r rows and at most n-r columns, as length-r tuples,
    ordered by total size with lexicographically larger diagrams first among ties."""
    diagrams = [
        a
        for a in product(range(n - r, -1, -1), repeat=r)
        if all(a[i] >= a[i + 1] for i in range(r - 1))
    ]
    return sorted(diagrams, key=lambda a: (sum(a), tuple(-x for x in a)))


def build_gsb(n: int, r: int) -> TiltingCollection:
    """Schur functors of the tautological sheaf on the generalized Severi-Brauer
    variety of reduced-dimension-r ideals of a degree-n algebra."""
    if not 0 < r < n:
        raise ValueError(f"need 0 < r < n, got r = {r}, n = {n}")
    datum = root_datum("A", n - 1)
    P: Parabolic = frozenset({r})
    summands = []
    for idx, a in enumerate(box_diagrams(n, r)):
        d = sum(a)
        # The tautological subbundle is the dual standard representation of the
        # GL_r Levi block, so Sigma^a of it carries the dual highest weight.
        core = glweight_to_weight(dual_glweight(a), n)
        bundle = make_bundle(datum, P, {core: 1}, scalar_mult=n**d)
        shape = ",".join(str(x) for x in a)
        summands.append(
            Summand(
                label=f"S^({shape})I",
                bundle=bundle,
                tits=tensor_power(n, d),
                order_index=idx,
            )
        )
    return TiltingCollection(
        family="gsb", n=n, r=r, datum=datum, parabolic=P, summands=tuple(summands)
    )


def _inv_line(n: int, j: int) -> Weight:
    return (-j,) + (0,) * (n - 1)


def _inv_spin(n: int, node: int, twist: int) -> Weight:
    w = [0] * n
    w[0] = -twist
    w[node - 1] = -1
    return tuple(w)


def build_inv(n: int) -> TiltingCollection:
    """Line-bundle tower plus half-spin summands on the involution variety of a
    degree-2n algebra with orthogonal involution (split form: the even quadric
    of dimension 2n-2, homogeneous under a split group of type D_n)."""
    if n < 3:
        raise ValueError("involution varieties need n >= 3 (type D_n must be simple)")
    datum = root_datum("D", n)
    P: Parabolic = frozenset({1})
    deg = 2 * n
    summands = []
    for i in range(n - 1):
        line = make_bundle(datum, P, {_inv_line(n, 2 * i): 1})
        label = "O" if i == 0 else f"O({-2 * i})"
        summands.append(
            Summand(label=label, bundle=line, tits=base_field(deg), order_index=2 * i)
        )
        taut = make_bundle(datum, P, {_inv_line(n, 2 * i + 1): 1}, scalar_mult=deg)
        label = "I" if i == 0 else f"I({-2 * i})"
        summands.append(
            Summand(label=label, bundle=taut, tits=tensor_power(deg, 1), order_index=2 * i + 1)
        )
    for offset, (sign, node) in enumerate((("+", n - 1), ("-", n))):
        spin = make_bundle(
            datum, P, {_inv_spin(n, node, 2 * n - 2): 1}, scalar_mult=2 ** (n - 1)
        )
        summands.append(
            Summand(
                label=f"J{sign}",
                bundle=spin,
                tits=even_clifford(deg),
                order_index=2 * n - 2 + offset,
            )
        )
    return TiltingCollection(
        family="inv", n=n, r=None, datum=datum, parabolic=P, summands=tuple(summands)
    )


def diagonal_blocks(c: TiltingCollection) -> list[list[int]]:
    """Summand indices grouped into diagonal blocks: consecutive summands sharing
    an even-Clifford label form one block, every other summand is its own."""
    blocks: list[list[int]] = []
    for i, s in enumerate(c.summands):
        if (
            blocks
            and s.tits.kind == EVEN_CLIFFORD
            and c.summands[blocks[-1][-1]].tits == s.tits
        ):
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return blocks


def _classify(w: Weight, res: CohomologyResult) -> str:
    if res.singular:
        return "singular"
    return "dominant" if res.degree == 0 else "higher"


def pairwise_ext(
    c: TiltingCollection, jobs: int = 1
) -> tuple[tuple[tuple[GradedDims, ...], ...], dict[str, int]]:
    """Ext tables for all ordered summand pairs, plus classification counts of
    every weight fed to the Borel-Weil-Bott classifier along the way."""
    k = len(c.summands)
    pairs = [(i, j) for i in range(k) for j in range(k)]

    def compute(pair: tuple[int, int]):
        i, j = pair
        log: list = []
        dims = ext_dims(c.summands[i].bundle, c.summands[j].bundle, weight_log=log)
        return i, j, dims, log

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(compute, pairs))
    else:
        results = [compute(p) for p in pairs]

    table: list[list[GradedDims]] = [[{} for _ in range(k)] for _ in range(k)]
    counts = {"singular": 0, "dominant": 0, "higher": 0}
    for i, j, dims, log in sorted(results, key=lambda t: (t[0], t[1])):
        table[i][j] = dims
        for w, res in log:
            counts[_classify(w, res)] += 1
    return tuple(tuple(row) for row in table), counts


def verify(c: TiltingCollection, jobs: int = 1) -> ExtReport:
    """Check every computable tilting condition for the collection.

    The verdict is "tilting" iff all Ext^{>0} vanish, the Hom matrix is
    strictly triangular on one side of the summand order, and each diagonal
    block has exactly the dimension of its Tits algebra.
    """
    ext, counts = pairwise_ext(c, jobs=jobs)
    k = len(c.summands)

    def report(verdict: str, witness, direction: str) -> ExtReport:
        return ExtReport(
            collection=c,
            ext=ext,
            verdict=verdict,
            witness=witness,
            triangular_direction=direction,
            weight_counts=counts,
        )

    for i in range(k):
        for j in range(k):
            higher = [d for d in ext[i][j] if d > 0]
            if higher:
                return report("failure", (i, j, min(higher)), "none")

    hom = [[ext[i][j].get(0, 0) for j in range(k)] for i in range(k)]
    upper = [(i, j) for i in range(k) for j in range(i + 1, k) if hom[i][j] != 0]
    lower = [(j, i) for i in range(k) for j in range(i + 1, k) if hom[j][i] != 0]
    if upper and lower:
        i, j = upper[0]
        return report("failure", (i, j, 0), "none")
    direction = "upper" if upper else "lower"

    for block in diagonal_blocks(c):
        expected = tits_dimension(c.summands[block[0]].tits)
        got = sum(hom[i][j] for i in block for j in block)
        if got != expected:
            return report("failure", (block[0], block[0], 0), direction)

    return report("tilting", None, direction)
