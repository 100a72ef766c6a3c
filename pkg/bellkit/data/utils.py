"""Utils for parsing and rendering exact values."""
import math
import re
from fractions import Fraction

from bellkit.environment import FLOAT_DIGITS

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text):
    """Convert "p/q" or integer string to Fraction.

    Fractions must be written in lowest terms with a positive denominator.

    Args:
        text (str|int|Fraction): value to convert

    Returns:
        Fraction: parsed value

    Raises:
        ValueError: if text is not a canonical rational
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected rational string, got {type(text).__name__}")

    match = _RATIONAL_RE.match(text.strip())
    if not match:
        raise ValueError(f"not a rational: {text!r}")
    num = int(match.group(1))
    if match.group(2) is None:
        return Fraction(num)
    den = int(match.group(2))
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    if den == 1 or math.gcd(num, den) != 1:
        raise ValueError(f"not in lowest terms: {text!r}")
    return Fraction(num, den)


def parse_integer(text, minimum=None):
    """Convert rational-like value to int, checking it is integral."""
    value = parse_rational(text)
    if value.denominator != 1:
        raise ValueError(f"expected integer, got {text}")
    if minimum is not None and value < minimum:
        raise ValueError(f"expected integer >= {minimum}, got {text}")
    return int(value)


def format_rational(value):
    """Render rational as "-5/24", integers without "/1"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value):
    """Render float with FLOAT_DIGITS significant digits (no negative zero)."""
    if value == 0:
        value = 0.0
    return format(value, f".{FLOAT_DIGITS}g")


def format_value(value):
    """Render exact or float scalar."""
    if isinstance(value, float):
        return format_float(value)
    return format_rational(value)
