class Error(Exception):
    pass


# Errors related to exact arithmetic.


class ExactArithmeticError(Error):
    pass


class DivisionByZeroError(ExactArithmeticError):
    pass


class CompositionError(ExactArithmeticError):
    pass


# Errors about bounds and domains.


class BoundError(Error):
    pass


class NotInGroupError(Error):
    pass


class SupportError(Error):
    pass


# Errors raised while verifying identities.


class IdentityViolation(Error):
    pass


class SweepCellError(Error):
    def __init__(self, m: int, mu: int, n: int, reason: str):
        super().__init__(m, mu, n, reason)
        self.m = m
        self.mu = mu
        self.n = n
        self.reason = reason

    def __str__(self) -> str:
        return f"cell (m={self.m}, mu={self.mu}, n={self.n}): {self.reason}"


# Errors on the command-line surface.


class UsageError(Error):
    pass


class ReportFormatError(Error):
    pass
