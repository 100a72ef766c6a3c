"""Module with the Ramanujan sum driver."""
from bellkit.arithfn import ramanujan_sum
from bellkit.driver import BaseDriver, integral_param


class Driver(BaseDriver):
    """Ramanujan sum g(n) = c_q(n). Transform is the cyclotomic polynomial."""

    display_name = "Ramanujan sum c_q"
    param_names = ("q",)

    def _convert_params(self, params):
        (q,) = super()._convert_params(params)
        return (integral_param(q, "q", 1),)

    def _evaluate(self, n):
        return ramanujan_sum(self.params[0], n)
