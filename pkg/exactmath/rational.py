# exactmath/rational.py
import re
from fractions import Fraction

Rat = Fraction

_RAT_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_rat(value):
    """Coerces ints, Fractions and "p/q" strings to Rat. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rational numbers.")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"Cannot convert {type(value).__name__} to an exact rational.")


def parse_rat(text):
    match = _RAT_PATTERN.match(text or "")
    if not match:
        raise ValueError(f"Malformed rational {text!r}; expected 'p' or 'p/q'.")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is None:
        return Fraction(int(numerator))
    if int(denominator) == 0:
        raise ValueError(f"Zero denominator in {text!r}.")
    return Fraction(int(numerator), int(denominator))


def format_rat(value):
    value = to_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
