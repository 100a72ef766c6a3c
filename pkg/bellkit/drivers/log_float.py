"""Module with the natural logarithm driver (float valued)."""
import math

from bellkit.driver import BaseDriver


class Driver(BaseDriver):
    """Natural logarithm g(n) = log n. Bell exponents are Lambda(n)/n.

    log n is irrational, so this is the only driver evaluated in floats.
    """

    display_name = "Natural logarithm (float)"
    exact = False

    def _evaluate(self, n):
        return math.log(n)
