from dataclasses import dataclass
import math
from typing import Iterator, Tuple

from .common import Rational
from .polynomial import Polynomial


@dataclass(frozen=True)
class PiecewisePoly:
    """A function on [0, m] that is a polynomial on each [j, j + 1].

    Pieces are stored in the global monomial basis (powers of theta, not of
    theta - j)."""

    m: int
    pieces: Tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"{self.m} < 1")
        if len(self.pieces) != self.m:
            raise ValueError(f"{len(self.pieces)} pieces for support [0, {self.m}]")

    @property
    def support(self) -> Tuple[int, int]:
        return 0, self.m

    def contains(self, theta: Rational) -> bool:
        return 0 <= theta <= self.m

    def piece_index(self, theta: Rational) -> int:
        """Index of the piece used at theta; interior knots use the left
        piece."""
        return max(math.ceil(theta) - 1, 0)

    def intervals(self) -> Iterator[Tuple[int, int, Polynomial]]:
        for j, piece in enumerate(self.pieces):
            yield j, j + 1, piece
