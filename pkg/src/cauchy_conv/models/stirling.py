from dataclasses import dataclass, replace
from typing import Tuple

from ..exceptions import BoundError, ExactArithmeticError

# Row n holds entries for k = 0..n.
Triangle = Tuple[Tuple[int, ...], ...]

FIRST_KIND = "first"
SECOND_KIND = "second"
KINDS = (FIRST_KIND, SECOND_KIND)


@dataclass(frozen=True)
class StirlingTable:
    """Signed Stirling numbers of the first kind s(n, k) and Stirling numbers
    of the second kind S(n, k) for 0 <= k <= n <= bound.

    Immutable once built; asking for a row beyond the bound is an error, never
    a silent regrowth."""

    bound: int
    first_kind: Triangle
    second_kind: Triangle

    def __check_row(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"{n} < 0")
        if n > self.bound:
            raise BoundError(f"row {n} exceeds Stirling table bound {self.bound}")

    def first(self, n: int, k: int) -> int:
        """s(n, k); zero for k outside [0, n]."""
        self.__check_row(n)
        return self.first_kind[n][k] if 0 <= k <= n else 0

    def second(self, n: int, k: int) -> int:
        """S(n, k); zero for k outside [0, n]."""
        self.__check_row(n)
        return self.second_kind[n][k] if 0 <= k <= n else 0

    def row(self, kind: str, n: int) -> Tuple[int, ...]:
        self.__check_row(n)
        if kind == FIRST_KIND:
            return self.first_kind[n]
        elif kind == SECOND_KIND:
            return self.second_kind[n]
        else:
            raise ValueError(f"unknown Stirling kind: {kind}")

    def with_entry(self, kind: str, n: int, k: int, value: int) -> "StirlingTable":
        """Return a copy with one entry replaced. No invariant is rechecked."""
        row = list(self.row(kind, n))
        row[k] = value
        if kind == FIRST_KIND:
            triangle = self.first_kind[:n] + (tuple(row),) + self.first_kind[n + 1 :]
            return replace(self, first_kind=triangle)
        triangle = self.second_kind[:n] + (tuple(row),) + self.second_kind[n + 1 :]
        return replace(self, second_kind=triangle)

    def validate(self) -> None:
        """Check boundary values, signs and orthogonality of the triangles."""
        for n in range(self.bound + 1):
            if self.first(n, n) != 1 or self.second(n, n) != 1:
                raise ExactArithmeticError(f"diagonal entry ({n}, {n}) is not 1")
            if n >= 1 and (self.first(n, 0) != 0 or self.second(n, 0) != 0):
                raise ExactArithmeticError(f"entry ({n}, 0) is not 0")
            for k in range(n + 1):
                s = self.first(n, k)
                if s != 0 and (s > 0) != ((n - k) % 2 == 0):
                    raise ExactArithmeticError(f"s({n}, {k}) = {s} has the wrong sign")
                if self.second(n, k) < 0:
                    raise ExactArithmeticError(f"S({n}, {k}) < 0")

        for n in range(self.bound + 1):
            for k in range(n + 1):
                total = sum(
                    self.first(n, j) * self.second(j, k) for j in range(k, n + 1)
                )
                if total != (1 if n == k else 0):
                    raise ExactArithmeticError(
                        f"orthogonality fails at ({n}, {k}): {total}"
                    )
