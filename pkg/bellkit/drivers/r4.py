"""Module with the sum-of-four-squares driver."""
from bellkit.arithfn import r4
from bellkit.driver import BaseDriver


class Driver(BaseDriver):
    """Representations as sum of four squares, r4(n) = 8 sigma(n) - 32 sigma(n/4)."""

    display_name = "Sum of four squares r4"

    def _evaluate(self, n):
        return r4(n)
