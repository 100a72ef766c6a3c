"""Module with the power-function driver."""
from fractions import Fraction

from bellkit.driver import BaseDriver, integral_param


class Driver(BaseDriver):
    """Power function g(n) = n^k; Bell exponents are J_k(n)/n."""

    display_name = "Power function n^k"
    param_names = ("k",)

    def _convert_params(self, params):
        (k,) = super()._convert_params(params)
        return (integral_param(k, "k", 0),)

    def _evaluate(self, n):
        return Fraction(n ** self.params[0])
