"""Module loading sequence files (custom drivers and coefficient lists)."""
import json
import logging
from pathlib import Path

from pydantic import ValidationError

from bellkit.data.records import SequenceFile
from bellkit.data.utils import parse_rational
from bellkit.errors import DriverFileError

logger = logging.getLogger(__name__)


def _line_of(text, pos):
    return text.count("\n", 0, pos) + 1


def _entry_line(text, index):
    """Find line of index-th entry of the "values" array (None if not found)."""
    decoder = json.JSONDecoder()
    key = text.find('"values"')
    start = text.find("[", key) if key >= 0 else -1
    if start < 0:
        return None
    pos = start + 1
    try:
        for i in range(index + 1):
            while text[pos] in " \t\r\n,":
                pos += 1
            if i == index:
                return _line_of(text, pos)
            _, pos = decoder.raw_decode(text, pos)
    except (IndexError, ValueError):
        return None
    return None


def load_sequence_file(path):
    """Load sequence file ``{"name": ..., "values": ["p/q", ...]}``.

    Args:
        path (str|Path): file path

    Returns:
        tuple[str, list[Fraction]]: sequence name and values in file order

    Raises:
        DriverFileError: on I/O failure, malformed JSON, wrong structure or
            non-canonical rational entries
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DriverFileError(path, f"cannot read file: {e.strerror}") from None
    except UnicodeDecodeError as e:
        raise DriverFileError(path, f"not valid UTF-8: {e.reason}") from None

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DriverFileError(path, e.msg, line=e.lineno) from None

    try:
        document = SequenceFile.model_validate(raw)
    except ValidationError as e:
        error = e.errors()[0]
        loc = error["loc"]
        line = None
        if len(loc) == 2 and loc[0] == "values" and isinstance(loc[1], int):
            line = _entry_line(text, loc[1])
        where = ".".join(str(part) for part in loc) or "document"
        raise DriverFileError(path, f"{where}: {error['msg']}", line=line) from None

    values = []
    for i, entry in enumerate(document.values):
        try:
            values.append(parse_rational(entry))
        except ValueError as e:
            raise DriverFileError(
                path, f"values[{i}]: {e}", line=_entry_line(text, i)
            ) from None

    logger.debug("Loaded %d values of %r from %s", len(values), document.name, path)
    return document.name, values
