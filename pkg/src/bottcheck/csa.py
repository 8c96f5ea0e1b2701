"""Symbolic central simple algebras: Tits-algebra labels and dimension counts.

Nothing here touches structure constants; a label records which algebra sits
on a diagonal block (the base field, a tensor power of A, or the even Clifford
algebra of an algebra with orthogonal involution) and everything downstream
only consumes dimensions and split component counts.
"""

from __future__ import annotations

from dataclasses import dataclass

BASE_FIELD = "base_field"
TENSOR_POWER = "tensor_power"
EVEN_CLIFFORD = "even_clifford"


@dataclass(frozen=True)
class CsaLabel:
    """Diagonal-block label: F, A^{(x) i}, or C_0(A, sigma), for deg A = base_degree."""

    kind: str
    base_degree: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.kind not in (BASE_FIELD, TENSOR_POWER, EVEN_CLIFFORD):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.base_degree < 1:
            raise ValueError("base_degree must be positive")
        if self.kind == TENSOR_POWER and self.exponent == 0:
            # A^{(x)0} is the base field.
            object.__setattr__(self, "kind", BASE_FIELD)
        if self.kind != TENSOR_POWER and self.exponent != 0:
            raise ValueError("exponent only applies to tensor powers")
        if self.kind == EVEN_CLIFFORD and self.base_degree % 2 != 0:
            raise ValueError("even Clifford labels need even degree")

    def display(self) -> str:
        if self.kind == BASE_FIELD:
            return "F"
        if self.kind == TENSOR_POWER:
            return "A" if self.exponent == 1 else f"A^{{(x){self.exponent}}}"
        return "C0(A,sigma)"


def base_field(n: int) -> CsaLabel:
    return CsaLabel(kind=BASE_FIELD, base_degree=n)


def tensor_power(n: int, i: int) -> CsaLabel:
    if i < 0:
        raise ValueError("tensor exponent must be non-negative")
    return CsaLabel(kind=TENSOR_POWER, base_degree=n, exponent=i)


def even_clifford(two_n: int) -> CsaLabel:
    return CsaLabel(kind=EVEN_CLIFFORD, base_degree=two_n)


def tits_dimension(label: CsaLabel) -> int:
    """F-dimension of the labeled algebra: 1, n^{2i}, or 2^{2n-1}."""
    if label.kind == BASE_FIELD:
        return 1
    if label.kind == TENSOR_POWER:
        return label.base_degree ** (2 * label.exponent)
    return 2 ** (label.base_degree - 1)


def split_components(label: CsaLabel) -> int:
    """Number of simple components after splitting: 2 for C_0, else 1."""
    return 2 if label.kind == EVEN_CLIFFORD else 1


def rdim(dim_f: int, n: int) -> int:
    """Reduced dimension of an A-module: its F-dimension divided by deg A."""
    if dim_f < 0 or n < 1:
        raise ValueError("need dim_f >= 0 and n >= 1")
    if dim_f % n != 0:
        raise ValueError(f"dimension {dim_f} is not divisible by the degree {n}")
    return dim_f // n


def involution_dims(two_n: int) -> tuple[int, int]:
    """(dim Sym, dim Skew) of an orthogonal involution on a degree-2n algebra."""
    if two_n < 2 or two_n % 2 != 0:
        raise ValueError("degree must be even and >= 2")
    return two_n * (two_n + 1) // 2, two_n * (two_n - 1) // 2
