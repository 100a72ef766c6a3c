"""Module with the quadratic character modulo 4 driver."""
from fractions import Fraction

from bellkit.arithfn import chi4
from bellkit.driver import BaseDriver


class Driver(BaseDriver):
    """Character modulo 4. Transform is exp(-arctan x)."""

    display_name = "Character modulo 4"

    def _evaluate(self, n):
        return Fraction(chi4(n))
