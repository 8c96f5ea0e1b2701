"""Equivariant bundles on G/P as formal sums of Levi-irreducible pieces.

A bundle is a multiset of weights (each standing for the irreducible P-sheaf
with that extreme weight) together with a trivial vector-space factor
``scalar_mult``.  Tensor products and duals are computed combinatorially:

* type A with one marked node r: pieces are Schur functors of the rank-r
  tautological bundle, multiplied by the Littlewood-Richardson rule;
* type D with node 1 marked (the even quadric): pieces are powers of the
  hyperplane class and the two spinor-type weights, and only the tensor
  combinations that stay in that family are supported (line x anything,
  spin x line, spin x dual spin).  Anything else raises
  ``UnsupportedDecompositionError`` rather than guessing a plethysm.

Ext groups are then read off by running the Borel-Weil-Bott classifier on
every piece of E^dual tensor F and accumulating dimensions per degree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .bott import CohomologyResult, bott_classify, epsilon_to_fundamental
from .rootdata import (
    Parabolic,
    RootDatum,
    Weight,
    add,
    is_dominant_for,
    levi_rank,
    negate,
)

GLWeight = tuple[int, ...]
GradedDims = dict[int, int]


class UnsupportedDecompositionError(ValueError):
    """A tensor decomposition outside the supported weight families was requested."""


def _check_glweight(a: GLWeight) -> None:
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"{a} is not weakly decreasing")


def dual_glweight(a: GLWeight) -> GLWeight:
    """Highest weight of the dual representation: reverse and negate."""
    _check_glweight(a)
    return tuple(-x for x in reversed(a))


def schur_dim(a: GLWeight) -> int:
    """Dimension of the rational GL_r representation with highest weight a."""
    _check_glweight(a)
    r = len(a)
    num = prod(a[i] - a[j] + j - i for i in range(r) for j in range(i + 1, r))
    den = prod(j - i for i in range(r) for j in range(i + 1, r))
    assert num % den == 0
    return num // den


def _lr_partition_product(lam: tuple[int, ...], mu: tuple[int, ...], rows: int) -> Counter:
    """Multiplicities of s_lam * s_mu over partitions with at most ``rows`` rows.

    Enumerates Littlewood-Richardson fillings level by level: the entries equal
    to k form a horizontal strip, recorded as box counts per row.  Column
    strictness bounds each strip by the row above of the previous shape, and
    the lattice-word condition bounds level-k counts by the level-(k-1) counts
    accumulated strictly above.
    """
    out: Counter = Counter()
    shape = list(lam) + [0] * (rows - len(lam))

    def place_level(level: int, prev_counts: list[int]) -> None:
        if level == len(mu):
            out[tuple(shape)] += 1
            return
        old_shape = shape[:]
        counts = [0] * rows

        def fill_row(i: int, remaining: int, prev_cum: int, cur_cum: int) -> None:
            if i == rows:
                if remaining == 0:
                    place_level(level + 1, counts)
                return
            cap = remaining
            if i > 0:
                cap = min(cap, old_shape[i - 1] - old_shape[i])
            if level > 0:
                cap = min(cap, prev_cum - cur_cum)
            for m in range(cap + 1):
                counts[i] = m
                shape[i] = old_shape[i] + m
                fill_row(
                    i + 1,
                    remaining - m,
                    prev_cum + (prev_counts[i] if level > 0 else 0),
                    cur_cum + m,
                )
            counts[i] = 0
            shape[i] = old_shape[i]

        fill_row(0, mu[level], 0, 0)

    place_level(0, [0] * rows)
    return out


@lru_cache(maxsize=None)
def _lr_tensor_cached(a: GLWeight, b: GLWeight) -> tuple[tuple[GLWeight, int], ...]:
    r = len(a)
    if r == 0:
        return (((), 1),)
    shift = a[-1] + b[-1]
    lam = tuple(x - a[-1] for x in a)
    mu = tuple(x - b[-1] for x in b)
    mu = mu[: next((i for i, x in enumerate(mu) if x == 0), len(mu))]
    table = _lr_partition_product(lam, mu, r)
    return tuple(
        (tuple(x + shift for x in nu), mult) for nu, mult in sorted(table.items())
    )


def lr_tensor(a: GLWeight, b: GLWeight) -> dict[GLWeight, int]:
    """Littlewood-Richardson decomposition of the GL_r tensor product a (x) b.

    Both weights may have negative entries; the computation shifts to
    partitions and shifts back, so the result is shift-equivariant.
    """
    _check_glweight(a)
    _check_glweight(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {a} vs {b}")
    return dict(_lr_tensor_cached(tuple(a), tuple(b)))


def glweight_to_weight(c: GLWeight, n: int) -> Weight:
    """Embed a GL_r weight as the A_{n-1} weight of the Schur piece on Gr(r, n)."""
    _check_glweight(c)
    r = len(c)
    if r >= n:
        raise ValueError(f"need r < n, got r = {r}, n = {n}")
    return epsilon_to_fundamental(tuple(c) + (0,) * (n - r))


def weight_to_glweight(w: Weight, r: int) -> GLWeight:
    """Inverse of glweight_to_weight for pieces supported on the rank-r block."""
    n = len(w) + 1
    eps = [0] * n
    for i in range(n - 2, -1, -1):
        eps[i] = eps[i + 1] + w[i]
    if any(eps[i] != 0 for i in range(r, n)):
        raise UnsupportedDecompositionError(
            f"weight {w} is not a Schur piece of the rank-{r} tautological bundle"
        )
    return tuple(eps[:r])


# Spin-node coefficient patterns a type-D (node 1 marked) piece may carry.
_D_LINE = (0, 0)
_D_SPIN = ((1, 0), (-1, 0), (0, 1), (0, -1))
_D_MIXED = ((1, -1), (-1, 1))


def _d_spin_part(w: Weight) -> tuple[int, int]:
    return (w[-2], w[-1])


def _d_piece_supported(w: Weight) -> bool:
    if any(c != 0 for c in w[1:-2]):
        return False
    return _d_spin_part(w) in (_D_LINE,) + _D_SPIN + _D_MIXED


@dataclass(frozen=True)
class EquivariantBundle:
    """Formal sum of irreducible equivariant sheaves on G/P, with multiplicities.

    ``pieces`` maps each weight to its multiplicity; ``scalar_mult`` is a global
    trivial tensor factor (the V^* multiplicities of the tautological sheaves).
    """

    datum: RootDatum
    parabolic: Parabolic
    pieces: tuple[tuple[Weight, int], ...]
    scalar_mult: int = 1

    @property
    def rank(self) -> int:
        return self.scalar_mult * sum(
            mult * levi_rank(self.datum, self.parabolic, w) for w, mult in self.pieces
        )

    def piece_dict(self) -> dict[Weight, int]:
        return dict(self.pieces)


def _family(datum: RootDatum, P: Parabolic) -> str:
    if datum.family == "A" and (len(P) == 1 or datum.rank == 0):
        return "A-grassmannian"
    if datum.family == "D" and P == frozenset({1}):
        return "D-quadric"
    return "generic"


def make_bundle(
    datum: RootDatum,
    P: Parabolic,
    pieces: dict[Weight, int] | list[tuple[Weight, int]],
    scalar_mult: int = 1,
) -> EquivariantBundle:
    """Validated bundle constructor; pieces are merged and canonically ordered."""
    if scalar_mult <= 0:
        raise ValueError("scalar_mult must be positive")
    merged: Counter = Counter()
    items = pieces.items() if isinstance(pieces, dict) else pieces
    for w, mult in items:
        if mult <= 0:
            raise ValueError(f"multiplicity of {w} must be positive")
        datum._check_weight(w)
        merged[tuple(w)] += mult
    family = _family(datum, P)
    for w in merged:
        if family == "D-quadric":
            if not _d_piece_supported(w):
                raise UnsupportedDecompositionError(
                    f"weight {w} is outside the supported quadric piece families"
                )
        elif not is_dominant_for(datum, P, w):
            raise ValueError(f"piece {w} is not dominant for parabolic {set(P)}")
    return EquivariantBundle(
        datum=datum,
        parabolic=P,
        pieces=tuple(sorted(merged.items())),
        scalar_mult=scalar_mult,
    )


def dual_piece_weight(datum: RootDatum, P: Parabolic, w: Weight) -> Weight:
    """Weight of the dual of the irreducible piece with weight w."""
    family = _family(datum, P)
    if family == "A-grassmannian":
        if datum.rank == 0:
            return ()
        r = max(P)
        c = weight_to_glweight(w, r)
        return glweight_to_weight(dual_glweight(c), datum.rank + 1)
    if family == "D-quadric":
        return negate(w)
    raise UnsupportedDecompositionError(
        f"duals are not supported for parabolic {set(P)} in type {datum.family}"
    )


def tensor_piece_weights(
    datum: RootDatum, P: Parabolic, w1: Weight, w2: Weight
) -> dict[Weight, int]:
    """Decompose the tensor product of two irreducible pieces into piece weights."""
    family = _family(datum, P)
    if family == "A-grassmannian":
        if datum.rank == 0:
            return {(): 1}
        r = max(P)
        c1 = weight_to_glweight(w1, r)
        c2 = weight_to_glweight(w2, r)
        n = datum.rank + 1
        return {
            glweight_to_weight(nu, n): mult for nu, mult in lr_tensor(c1, c2).items()
        }
    if family == "D-quadric":
        s1, s2 = _d_spin_part(w1), _d_spin_part(w2)
        if s1 != _D_LINE and s2 != _D_LINE:
            if s1 in _D_MIXED or s2 in _D_MIXED:
                raise UnsupportedDecompositionError(
                    f"tensor of {w1} and {w2} needs spin plethysm, which is not modeled"
                )
            total = (s1[0] + s2[0], s1[1] + s2[1])
            if total not in (_D_LINE,) + _D_MIXED:
                raise UnsupportedDecompositionError(
                    f"tensor of spin pieces {w1} and {w2} needs plethysm, which is not modeled"
                )
        return {add(w1, w2): 1}
    raise UnsupportedDecompositionError(
        f"tensor products are not supported for parabolic {set(P)} in type {datum.family}"
    )


def _check_compatible(E: EquivariantBundle, F: EquivariantBundle) -> None:
    if E.datum != F.datum or E.parabolic != F.parabolic:
        raise ValueError("bundles live on different homogeneous spaces")


def dual(E: EquivariantBundle) -> EquivariantBundle:
    pieces: Counter = Counter()
    for w, mult in E.pieces:
        pieces[dual_piece_weight(E.datum, E.parabolic, w)] += mult
    return make_bundle(E.datum, E.parabolic, dict(pieces), E.scalar_mult)


def tensor(E: EquivariantBundle, F: EquivariantBundle) -> EquivariantBundle:
    """Tensor product bundle; rank is multiplicative on the fully decomposed families."""
    _check_compatible(E, F)
    pieces: Counter = Counter()
    spin_free = True
    for w1, m1 in E.pieces:
        for w2, m2 in F.pieces:
            if E.datum.family == "D" and (
                _d_spin_part(w1) != _D_LINE or _d_spin_part(w2) != _D_LINE
            ):
                spin_free = False
            for nu, c in tensor_piece_weights(E.datum, E.parabolic, w1, w2).items():
                pieces[nu] += c * m1 * m2
    result = make_bundle(E.datum, E.parabolic, dict(pieces), E.scalar_mult * F.scalar_mult)
    if spin_free:
        # Spin products keep only the extreme constituent, so ranks are
        # multiplicative exactly when no spin piece is involved.
        assert result.rank == E.rank * F.rank, (E, F)
    return result


def ext_dims(
    E: EquivariantBundle,
    F: EquivariantBundle,
    weight_log: list[tuple[Weight, CohomologyResult]] | None = None,
) -> GradedDims:
    """Graded dimensions of Ext^*(E, F) = H^*(G/P, E^dual (x) F) via Bott's algorithm.

    Every piece weight of E^dual (x) F is classified; nonsingular weights
    contribute dim V(w.lambda) times all multiplicities in their single degree.
    When given, ``weight_log`` collects (weight, classification) pairs.
    """
    _check_compatible(E, F)
    datum, P = E.datum, E.parabolic
    factor = E.scalar_mult * F.scalar_mult
    out: Counter = Counter()
    for w1, m1 in E.pieces:
        w1_dual = dual_piece_weight(datum, P, w1)
        for w2, m2 in F.pieces:
            for nu, c in tensor_piece_weights(datum, P, w1_dual, w2).items():
                res = bott_classify(datum, nu)
                if weight_log is not None:
                    weight_log.append((nu, res))
                if not res.singular:
                    out[res.degree] += res.dim * c * m1 * m2 * factor
    return dict(sorted(out.items()))
