# -*- coding: utf-8 -*-
"""Value Converters.

Converters used for command-line overrides and file modes.

"""

# Standard Library Imports
import re
from typing import Any
from typing import List

__all__ = [
    "to_boolean",
    "to_float",
    "to_float_list",
    "to_integer",
    "to_text_file_mode",
    "to_text_list",
]


# Constants
FALSY_VALUES = ("false", "no", "n", "0", "off")
TRUTHY_VALUES = ("true", "yes", "y", "1", "on")


def to_boolean(__value: Any, /) -> bool:
    """Convert value to ``bool``.

    Args:
        __value: Boolean, integer or one of ``yes``/``no``/``true``/``false``.

    Returns:
        Boolean.

    Raises:
        TypeError: when `__value` cannot be converted.
        ValueError: when a string is not a recognised truth value.

    """
    if isinstance(__value, bool):
        return __value

    if isinstance(__value, int):
        return bool(__value)

    if not isinstance(__value, str):
        raise TypeError(f"{type(__value)} cannot be converted to bool")

    normalized = __value.strip().lower()
    if normalized in TRUTHY_VALUES:
        return True

    if normalized in FALSY_VALUES:
        return False

    raise ValueError(f"'{__value}' cannot be converted to bool")


def to_float(__value: Any, /) -> float:
    """Convert a number or numeric string to ``float``.

    Raises:
        TypeError: when `__value` is a boolean or not numeric.
        ValueError: when a string does not parse as a number.

    """
    if isinstance(__value, bool):
        raise TypeError(f"{type(__value)} cannot be converted to float")

    if isinstance(__value, (int, float)):
        return float(__value)

    if not isinstance(__value, str):
        raise TypeError(f"{type(__value)} cannot be converted to float")

    try:
        result = float(__value.strip())
    except ValueError as error:
        message = f"'{__value}' cannot be converted to float"
        raise ValueError(message) from error

    return result


def to_integer(__value: Any, /) -> int:
    """Convert an integral number or numeric string to ``int``.

    Raises:
        TypeError: when `__value` is a boolean or not numeric.
        ValueError: when `__value` is not integral.

    """
    value = to_float(__value)
    if not value.is_integer():
        raise ValueError(f"'{__value}' is not an integer")

    return int(value)


def to_float_list(__value: Any, /) -> List[float]:
    """Convert a sequence or comma-separated string to floats."""
    items = __value.split(",") if isinstance(__value, str) else __value
    if not isinstance(items, (list, tuple)):
        raise TypeError(f"{type(__value)} cannot be converted to a list")

    result = [to_float(item) for item in items if item != ""]
    return result


def to_text_list(__value: Any, /) -> List[str]:
    """Convert a sequence or comma-separated string to stripped strings."""
    items = __value.split(",") if isinstance(__value, str) else __value
    if not isinstance(items, (list, tuple)):
        raise TypeError(f"{type(__value)} cannot be converted to a list")

    result = [str(item).strip() for item in items if str(item).strip()]
    return result


def to_text_file_mode(mode: str) -> str:
    """Convert to text file mode."""
    result = re.sub(r"[bt]?([arwx])[bt]?", r"\g<1>t", mode)
    return result
