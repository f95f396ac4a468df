from enum import Enum
from fractions import Fraction

BLANK_VALUE = ""
SECONDS_PRECISION = 6


def _format_fraction(value):
    return "{}/{}".format(value.numerator, value.denominator)


def _format_seconds(value, use_raw_value=False):
    if use_raw_value:
        return repr(value)
    return "{:.{precision}f}".format(value, precision=SECONDS_PRECISION)


def display_value(value, use_raw_value=False):
    """
    Converts a report value into the text shown in tables and CSV files.

    Counts are written as plain decimals regardless of size, densities as ``num/den`` and durations in seconds.

    :param value:
        The raw report value.
    :param use_raw_value:
        Do not round durations. Used for CSV output so spreadsheets get the full precision.
    """
    if value is None:
        return BLANK_VALUE
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Fraction):
        return _format_fraction(value)
    if isinstance(value, float):
        return _format_seconds(value, use_raw_value=use_raw_value)
    if isinstance(value, (list, tuple)):
        return " ".join(display_value(item, use_raw_value=use_raw_value) for item in value)
    return str(value)


def json_value(value):
    """
    This function will return only values safe for JSON. Integers become decimal strings so consumers with
    fixed-width integers do not overflow.
    """
    if value is None:
        return None
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, (list, tuple)):
        return [json_value(item) for item in value]
    if isinstance(value, dict):
        return {key: json_value(item) for key, item in value.items()}
    return str(value)
