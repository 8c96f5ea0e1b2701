"""The Borel-Weil-Bott theorem as an executable classifier.

``bott_classify`` walks a weight through the affine Weyl (dot) action: either
it hits a wall (the weight is singular and the associated sheaf has no
cohomology) or it reaches the dominant chamber, in which case the cohomology
of O_{G/P}(lambda) is concentrated in the single degree l(w) with value the
irreducible representation V(w.lambda).

``bott_typeA_epsilon`` is an independent oracle for type A: Bott's classical
bookkeeping in epsilon coordinates (add the staircase, look for repeats, count
inversions, sort).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .rootdata import (
    RootDatum,
    Weight,
    add,
    coroot_pairing,
    root_datum,
    simple_dot_reflection,
    weyl_dim,
)


@dataclass(frozen=True)
class CohomologyResult:
    """Outcome of the classifier: singular, or one nonzero cohomology group.

    ``degree`` is the length l(w) of the sorting Weyl element, ``dominant`` the
    dominant representative w.lambda, and ``dim`` the dimension of V(w.lambda).
    All three are None exactly in the singular case.
    """

    degree: int | None = None
    dominant: Weight | None = None
    dim: int | None = None

    @property
    def singular(self) -> bool:
        return self.degree is None


SINGULAR = CohomologyResult()


def bott_classify(
    datum: RootDatum,
    lam: Weight,
    pivot: Callable[[list[int]], int] | None = None,
) -> CohomologyResult:
    """Classify the cohomology of the sheaf attached to an arbitrary integral weight.

    Repeatedly: if some simple pairing <mu + rho, alpha_i^vee> vanishes the
    weight is singular; if all are positive, mu is the dominant representative
    and the step count is the cohomological degree; otherwise dot-reflect at a
    negative wall.  ``pivot`` selects among the negative walls (1-based simple
    indices); the result is pivot-independent, only the walk differs.
    """
    datum._check_weight(lam)
    mu = lam
    steps = 0
    while True:
        shifted = add(mu, datum.rho)
        if any(c == 0 for c in shifted):
            return SINGULAR
        negatives = [i + 1 for i, c in enumerate(shifted) if c < 0]
        if not negatives:
            # Cross-check: the degree equals the number of positive coroots
            # made negative by lam + rho.
            assert steps == _negativity_count(datum, lam), (lam, steps)
            return CohomologyResult(degree=steps, dominant=mu, dim=weyl_dim(datum, mu))
        i = negatives[0] if pivot is None else pivot(negatives)
        mu = simple_dot_reflection(datum, i, mu)
        steps += 1


def _negativity_count(datum: RootDatum, lam: Weight) -> int:
    shifted = add(lam, datum.rho)
    return sum(1 for a in datum.positive_roots if coroot_pairing(datum, shifted, a) < 0)


def is_singular(datum: RootDatum, lam: Weight) -> bool:
    """True iff lam is fixed by a nontrivial element under the dot action."""
    return bott_classify(datum, lam).singular


def epsilon_to_fundamental(eps: tuple[int, ...]) -> Weight:
    """Convert a GL_n epsilon-weight to SL_n fundamental coordinates.

    Consecutive differences; constant shifts (the determinant character) die.
    """
    if len(eps) < 2:
        raise ValueError("epsilon weight needs length >= 2")
    return tuple(eps[i] - eps[i + 1] for i in range(len(eps) - 1))


def bott_typeA_epsilon(n: int, eps: tuple[int, ...]) -> CohomologyResult:
    """Bott's classical algorithm for SL_n in epsilon coordinates (test oracle).

    Add the staircase (n-1, ..., 0); a repeated entry means singular, otherwise
    the degree is the inversion count and the dominant weight is the sorted
    vector with the staircase removed.
    """
    if len(eps) != n or n < 2:
        raise ValueError(f"expected an epsilon vector of length n = {n} >= 2")
    x = [e + (n - 1 - i) for i, e in enumerate(eps)]
    if len(set(x)) < n:
        return SINGULAR
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if x[i] < x[j])
    x.sort(reverse=True)
    dominant_eps = tuple(v - (n - 1 - i) for i, v in enumerate(x))
    dominant = epsilon_to_fundamental(dominant_eps)
    dim = weyl_dim(root_datum("A", n - 1), dominant)
    return CohomologyResult(degree=inversions, dominant=dominant, dim=dim)
