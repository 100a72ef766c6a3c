"""Module with the driver read from a sequence file."""
from bellkit.data.file_parser import load_sequence_file
from bellkit.driver import BaseDriver
from bellkit.errors import DomainError


class Driver(BaseDriver):
    """Driver with values g(1..N) listed in a JSON sequence file.

    Evaluation beyond the listed values is a domain error.
    """

    display_name = "Values from file"
    param_names = ("file",)

    def _convert_params(self, params):
        (path,) = params
        return (str(path),)

    def __init__(self, name, params=()):
        super().__init__(name, params)
        self.file_name, self._values = load_sequence_file(self.params[0])

    def _evaluate(self, n):
        if n > len(self._values):
            raise DomainError(
                f"driver file {self.params[0]} lists {len(self._values)} values, "
                f"g({n}) requested"
            )
        return self._values[n - 1]
