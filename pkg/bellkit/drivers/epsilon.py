"""Module with the Dirichlet identity driver."""
from fractions import Fraction

from bellkit.driver import BaseDriver


class Driver(BaseDriver):
    """Dirichlet identity: 1 at n = 1, 0 elsewhere. Transform is exp(-x)."""

    display_name = "Dirichlet identity"

    def _evaluate(self, n):
        return Fraction(1 if n == 1 else 0)
