"""Module with Euler's totient driver."""
from bellkit.arithfn import euler_phi
from bellkit.driver import BaseDriver


class Driver(BaseDriver):
    """Euler's totient function."""

    display_name = "Euler totient"

    def _evaluate(self, n):
        return euler_phi(n)
