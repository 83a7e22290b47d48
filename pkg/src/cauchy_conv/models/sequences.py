from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, Tuple

from .common import Composition, Rational


@dataclass(frozen=True)
class EgfSequence:
    """A sequence (u_0, ..., u_N) truncated at order N.

    It stands for the exponential generating function sum u_n z**n / n!;
    terms are stored raw, not divided by n!, and nothing is claimed beyond
    index N."""

    terms: Tuple[Rational, ...]

    def __post_init__(self) -> None:
        terms = tuple(Fraction(t) for t in self.terms)
        if not terms:
            raise ValueError("a truncated sequence needs at least the term u_0")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, values: Iterable[Any]) -> "EgfSequence":
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, n: int) -> Rational:
        if not 0 <= n <= self.order:
            raise IndexError(f"index {n} outside truncation order {self.order}")
        return self.terms[n]

    def __iter__(self) -> Iterator[Rational]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def truncate(self, order: int) -> "EgfSequence":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return EgfSequence(self.terms[: order + 1])

    def is_unit(self) -> bool:
        """Member of the convolution group: u_0 != 0."""
        return self.terms[0] != 0

    def is_nowhere_zero(self) -> bool:
        """Every term is nonzero, so each shift of the sequence is a unit too."""
        return all(t != 0 for t in self.terms)

    def __str__(self) -> str:
        return "(" + ", ".join(str(t) for t in self.terms) + ")"


@dataclass(frozen=True)
class CompositionList:
    """All m-tuples of nonnegative integers summing to n, in lexicographic
    order."""

    n: int
    m: int
    items: Tuple[Composition, ...]

    def __iter__(self) -> Iterator[Composition]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)
