"""Module with the constant driver."""
from bellkit.driver import BaseDriver


class Driver(BaseDriver):
    """Constant g(n) = c. Transform is (1 - x)^c."""

    display_name = "Constant c"
    param_names = ("c",)

    def _evaluate(self, n):
        return self.params[0]
