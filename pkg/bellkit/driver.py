import importlib
import logging
import pkgutil
from abc import ABC, abstractmethod
from fractions import Fraction

from bellkit.arithfn import ArithmeticFunction
from bellkit.data.utils import parse_rational
from bellkit.errors import DriverError

logger = logging.getLogger(__name__)


class BaseDriver(ABC):
    """Base class of arithmetic drivers.
    Each driver must be subclass of this BaseDriver class.
    Drivers must be placed as separate modules in bellkit.drivers, each module
    defining class ``Driver``; the module name is the registry name.
    Implementation of (_evaluate(...)) is required. Drivers taking parameters
    list their names in ``param_names`` and may override ``_convert_params``.

    Attributes:
        display_name (str): human readable name (must be overwritten)
        param_names (tuple[str]): names of parameters in positional order
        exact (bool): False for float-valued drivers
    """

    display_name: str
    param_names = ()
    exact = True

    def __init__(self, name, params=()):
        """Initialize driver and validate parameter arity.

        Args:
            name (str): registry name of the driver
            params (Sequence): parameters, one per entry of ``param_names``
        """
        params = tuple(params)
        if len(params) != len(self.param_names):
            expected = ", ".join(self.param_names) or "none"
            raise DriverError(
                f"driver {name!r} takes {len(self.param_names)} parameter(s) "
                f"({expected}), got {len(params)}"
            )
        self.name = name
        try:
            self.params = self._convert_params(params)
        except ValueError as e:
            raise DriverError(f"driver {name!r}: {e}") from None

    def _convert_params(self, params):
        """Convert raw parameters to exact rationals (may be overridden)."""
        return tuple(parse_rational(p) for p in params)

    @abstractmethod
    def _evaluate(self, n):
        """Evaluate driver at positive integer n (abstract method)."""

    def as_function(self):
        """Get driver as immutable ArithmeticFunction."""
        return ArithmeticFunction(
            evaluator=self._evaluate,
            name=self.name,
            params=self.params,
            exact=self.exact,
        )


class DriverManager:
    """Class loading all drivers from drivers folder and creating evaluators."""

    _default = None

    def __init__(self):
        """Initialize DriverManager holding all driver modules."""
        self.driver_modules = DriverManager.load_drivers()

    @classmethod
    def default(cls):
        """Get shared manager (modules are loaded once)."""
        if cls._default is None:
            cls._default = cls()
        return cls._default

    def create(self, name, params=()):
        """Create ArithmeticFunction for named driver.

        Args:
            name (str): driver name
            params (Sequence): driver parameters

        Returns:
            ArithmeticFunction: driver evaluator
        """
        if name not in self.driver_modules:
            known = ", ".join(sorted(self.driver_modules))
            raise DriverError(f"unknown driver {name!r} (known: {known})")
        driver = self.driver_modules[name].Driver(name, params)
        logger.debug("Created driver %s with params %s", name, driver.params)
        return driver.as_function()

    def describe(self):
        """Get list of driver names, display names and parameter names."""
        return [
            {
                "name": k,
                "display_name": m.Driver.display_name,
                "params": list(m.Driver.param_names),
            }
            for k, m in sorted(self.driver_modules.items())
        ]

    @staticmethod
    def _iter_namespace(ns_pkg):
        """Iterate modules in specified sub-package."""
        return pkgutil.iter_modules(ns_pkg.__path__, ns_pkg.__name__ + ".")

    @staticmethod
    def load_drivers():
        """Load driver modules from bellkit.drivers sub-package.

        Returns:
            dict[str, module]: dictionary containing module name and module.
        """
        import bellkit.drivers

        return {
            name.split(".")[-1]: importlib.import_module(name)
            for finder, name, ispkg in DriverManager._iter_namespace(bellkit.drivers)
        }


def integral_param(value, name, minimum):
    """Check rational parameter is an integer >= minimum."""
    value = Fraction(value)
    if value.denominator != 1 or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value}")
    return int(value)
