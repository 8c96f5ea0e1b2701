"""Exact root-system combinatorics for the simply laced families A and D.

Weights are integer tuples in the basis of fundamental weights, so the
pairing with a simple coroot is just a coordinate, and every computation
stays in arbitrary-precision integers.  Simple roots are materialized as
columns of the Cartan matrix, positive roots as integer vectors in the
simple-root basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

Weight = tuple[int, ...]
RootVector = tuple[int, ...]
Parabolic = frozenset[int]


@dataclass(frozen=True)
class RootDatum:
    """Root system of type A_r or D_r with its Cartan matrix and positive roots.

    Rank 0 is allowed in type A (the point variety, SL_1); type D requires
    rank >= 3 since D_2 is not simple.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[RootVector, ...]

    @property
    def rho(self) -> Weight:
        """Half-sum of positive roots: all fundamental coordinates 1."""
        return (1,) * self.rank

    def simple_root(self, i: int) -> Weight:
        """Simple root alpha_i in fundamental coordinates (column i of the Cartan matrix)."""
        self._check_index(i)
        return tuple(row[i - 1] for row in self.cartan)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple-root index {i} out of range 1..{self.rank}")

    def _check_weight(self, w: Weight) -> None:
        if len(w) != self.rank:
            raise ValueError(f"weight {w} has length {len(w)}, expected rank {self.rank}")


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    rows = []
    for i in range(rank):
        row = [0] * rank
        row[i] = 2
        rows.append(row)

    def join(i: int, j: int) -> None:
        rows[i][j] = rows[j][i] = -1

    if family == "A":
        for i in range(rank - 1):
            join(i, i + 1)
    else:  # D, Bourbaki: chain 1..r-1 with the fork alpha_r attached to alpha_{r-2}
        for i in range(rank - 2):
            join(i, i + 1)
        join(rank - 3, rank - 1)
    return tuple(tuple(r) for r in rows)


def _generate_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[RootVector, ...]:
    """All roots as the closure of the simple roots under simple reflections."""
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen: set[RootVector] = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(rank):
            pairing = sum(cartan[i][j] * beta[j] for j in range(rank))
            image = list(beta)
            image[i] -= pairing
            image_t = tuple(image)
            if image_t not in seen:
                seen.add(image_t)
                frontier.append(image_t)
    positive = sorted(v for v in seen if all(c >= 0 for c in v))
    return tuple(positive)


@lru_cache(maxsize=None)
def root_datum(family: str, rank: int) -> RootDatum:
    """Construct (and cache) the root datum of type ``family`` and given rank."""
    if family not in ("A", "D"):
        raise ValueError(f"unsupported family {family!r}: only A and D")
    if family == "A" and rank < 0:
        raise ValueError("type A requires rank >= 0")
    if family == "D" and rank < 3:
        raise ValueError("type D requires rank >= 3 (D_2 is not simple)")
    cartan = _cartan_matrix(family, rank)
    positive = _generate_positive_roots(cartan)
    expected = rank * (rank + 1) // 2 if family == "A" else rank * (rank - 1)
    assert len(positive) == expected, (family, rank, len(positive))
    return RootDatum(family=family, rank=rank, cartan=cartan, positive_roots=positive)


def parabolic(datum: RootDatum, marked: frozenset[int] | set[int]) -> Parabolic:
    """Validated parabolic subset: empty set encodes G, the full set encodes B."""
    marked = frozenset(marked)
    for i in marked:
        datum._check_index(i)
    return marked


def coroot_pairing(datum: RootDatum, w: Weight, alpha: RootVector) -> int:
    """Pairing <w, alpha^vee>.

    In the simply laced case alpha^vee has the same simple-root coordinates
    as alpha, and <lambda_i, alpha_j^vee> = delta_ij, so the pairing is the
    dot product of fundamental coordinates with simple-root coordinates.
    """
    datum._check_weight(w)
    if len(alpha) != datum.rank:
        raise ValueError(f"root {alpha} has length {len(alpha)}, expected rank {datum.rank}")
    return sum(a * n for a, n in zip(alpha, w))


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def negate(w: Weight) -> Weight:
    return tuple(-a for a in w)


def simple_reflection(datum: RootDatum, i: int, w: Weight) -> Weight:
    """Linear action s_i(w) = w - <w, alpha_i^vee> alpha_i."""
    datum._check_index(i)
    datum._check_weight(w)
    c = w[i - 1]
    if c == 0:
        return w
    alpha = datum.simple_root(i)
    return tuple(n - c * a for n, a in zip(w, alpha))


def simple_dot_reflection(datum: RootDatum, i: int, w: Weight) -> Weight:
    """Affine (dot) action s_i.w = s_i(w + rho) - rho."""
    shifted = simple_reflection(datum, i, add(w, datum.rho))
    return tuple(n - 1 for n in shifted)


def is_dominant_for(datum: RootDatum, P: Parabolic, w: Weight) -> bool:
    """True iff every fundamental coordinate outside the marked set is >= 0."""
    datum._check_weight(w)
    return all(w[j - 1] >= 0 for j in range(1, datum.rank + 1) if j not in P)


def is_dominant(datum: RootDatum, w: Weight) -> bool:
    return is_dominant_for(datum, frozenset(), w)


def _dim_from_roots(datum: RootDatum, w: Weight, roots: tuple[RootVector, ...]) -> int:
    rho = datum.rho
    wr = add(w, rho)
    num = prod(coroot_pairing(datum, wr, a) for a in roots)
    den = prod(coroot_pairing(datum, rho, a) for a in roots)
    assert num % den == 0, (w, num, den)
    return num // den


def weyl_dim(datum: RootDatum, w: Weight) -> int:
    """Dimension of the irreducible representation with dominant highest weight w.

    Weyl dimension formula: product over positive roots alpha of
    <w + rho, alpha^vee> / <rho, alpha^vee>, evaluated exactly.
    """
    datum._check_weight(w)
    if not is_dominant(datum, w):
        raise ValueError(f"weight {w} is not dominant")
    return _dim_from_roots(datum, w, datum.positive_roots)


def levi_positive_roots(datum: RootDatum, P: Parabolic) -> tuple[RootVector, ...]:
    """Positive roots of the Levi factor of P: those supported off the marked set."""
    return tuple(
        a for a in datum.positive_roots if all(a[i - 1] == 0 for i in P)
    )


def homogeneous_space_dim(datum: RootDatum, P: Parabolic) -> int:
    """dim G/P = number of positive roots not in the Levi of P."""
    return len(datum.positive_roots) - len(levi_positive_roots(datum, P))


def levi_dominant(datum: RootDatum, P: Parabolic, w: Weight) -> Weight:
    """Representative of w under the Levi Weyl group with coordinates off P non-negative."""
    datum._check_weight(w)
    unmarked = [j for j in range(1, datum.rank + 1) if j not in P]
    current = w
    while True:
        j = next((j for j in unmarked if current[j - 1] < 0), None)
        if j is None:
            return current
        current = simple_reflection(datum, j, current)


def levi_rank(datum: RootDatum, P: Parabolic, lam: Weight) -> int:
    """Rank of the sheaf attached to lam on G/P: the dimension of the Levi irreducible
    representation containing lam as an extreme weight.

    The restriction of lam to the Levi is brought to its dominant chamber first, so
    extreme-weight representatives (such as the negated spin weights used on quadrics)
    are accepted alongside P-dominant weights.
    """
    dominant = levi_dominant(datum, P, lam)
    return _dim_from_roots(datum, dominant, levi_positive_roots(datum, P))
