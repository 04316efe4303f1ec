"""Java number literals: parsing, digit counting and context-directed rewriting."""
from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal

_INT_RE = re.compile(
    r"""^(?P<sign>[-+]?)
    (?:
        0[xX](?P<hex>[0-9a-fA-F](?:[0-9a-fA-F_]*[0-9a-fA-F])?)
      | 0[bB](?P<bin>[01](?:[01_]*[01])?)
      | 0(?P<oct>_*[0-7](?:[0-7_]*[0-7])?)
      | (?P<dec>0|[1-9](?:[0-9_]*[0-9])?)
    )(?P<suffix>[lL]?)$""",
    re.VERBOSE,
)
_FLOAT_RE = re.compile(
    r"""^(?P<sign>[-+]?)
    (?P<mant>[0-9](?:[0-9_]*[0-9])?\.?(?:[0-9](?:[0-9_]*[0-9])?)?|\.[0-9](?:[0-9_]*[0-9])?)
    (?:[eE](?P<exp>[+-]?[0-9](?:[0-9_]*[0-9])?))?
    (?P<suffix>[fFdD]?)$""",
    re.VERBOSE,
)

BASE_FORMATS = ("BINARY", "HEXADECIMAL", "OCTAL")
OTHER_FORMATS = ("LONGNUMBER", "FIXEDLENGTH", "SCIENTIFIC")


class LiteralError(ValueError):
    """Not a syntactically valid number literal, or not rewritable as asked."""


@dataclass(frozen=True)
class NumberLiteral:
    text: str
    sign: str
    kind: str  # DEC, HEX, BIN, OCT or FLOAT
    digits: str  # significand digits without prefix, sign, underscores or suffix
    suffix: str
    value: int | Decimal

    @property
    def is_integer(self) -> bool:
        return self.kind != "FLOAT"


def parse_literal(text: str) -> NumberLiteral:
    text = text.strip()
    m = _INT_RE.match(text)
    if m:
        sign = m["sign"] if m["sign"] == "-" else ""
        for kind, base in (("hex", 16), ("bin", 2), ("oct", 8), ("dec", 10)):
            raw = m[kind]
            if raw is not None:
                digits = raw.replace("_", "")
                value = int(digits, base)
                break
        return NumberLiteral(text, sign, kind.upper(), digits, m["suffix"], -value if sign else value)
    m = _FLOAT_RE.match(text)
    if m and (("." in m["mant"]) or m["exp"] is not None or m["suffix"]):
        sign = m["sign"] if m["sign"] == "-" else ""
        mant = m["mant"].replace("_", "")
        exp = (m["exp"] or "0").replace("_", "")
        value = Decimal(f"{sign}{mant if not mant.startswith('.') else '0' + mant}e{exp}")
        digits = mant.replace(".", "")
        return NumberLiteral(text, sign, "FLOAT", digits, m["suffix"], value)
    raise LiteralError(f"malformed number literal: {text!r}")


def digit_length(text: str) -> int:
    """Significand digit count: sign, prefix, underscores, point, exponent and suffix excluded."""
    lit = parse_literal(text)
    if lit.kind == "DEC" or lit.kind == "FLOAT":
        digits = lit.digits
    elif lit.kind == "OCT":
        digits = "0" + lit.digits
    else:
        digits = lit.digits
    return len(digits)


def literal_value(text: str) -> int | Decimal:
    return parse_literal(text).value


def group_digits(digits: str, width: int) -> str:
    """Insert underscores every ``width`` digits counting from the right."""
    head = len(digits) % width or width
    parts = [digits[:head]] + [digits[i:i + width] for i in range(head, len(digits), width)]
    return "_".join(p for p in parts if p)


def _scientific(value: Decimal) -> str:
    if value == 0:
        return "0e0"
    sign, digits, exp = value.normalize().as_tuple()
    s = "".join(map(str, digits))
    exponent = exp + len(s) - 1
    mant = s[0] + ("." + s[1:] if len(s) > 1 else "")
    return f"{'-' if sign else ''}{mant}e{exponent}"


def rewrite_number_literal(text: str, context: str, *, fixed_width: int = 4, min_width: int = 0) -> str:
    """Rewrite a literal into the format of a NUMBER context, preserving its value.

    ``context`` is a context name. ``min_width`` zero-pads binary digits, which
    keeps operands of one expression at equal width. Negative values keep their
    sign in front of the rewritten magnitude.
    """
    lit = parse_literal(text)
    if context in BASE_FORMATS:
        if not lit.is_integer:
            raise LiteralError(f"{context} needs an integer literal, got {text!r}")
        mag = abs(int(lit.value))
        if context == "BINARY":
            body = "0b" + format(mag, "b").rjust(min_width, "0")
        elif context == "HEXADECIMAL":
            body = "0x" + format(mag, "x")
        else:
            body = "0" + format(mag, "o")
        return f"{lit.sign}{body}{lit.suffix}"
    if context in ("LONGNUMBER", "FIXEDLENGTH"):
        width = 3 if context == "LONGNUMBER" else fixed_width
        if lit.kind == "FLOAT":
            value = lit.value
            if value == value.to_integral_value() and "e" not in text.lower():
                body = group_digits(str(abs(int(value))), width)
            else:
                plain = format(abs(value), "f")
                int_part, _, frac = plain.partition(".")
                body = group_digits(int_part, width) + ("." + frac if frac else "")
            if "." not in body and not lit.suffix:
                body += ".0"
            return f"{lit.sign}{body}{lit.suffix}"
        return f"{lit.sign}{group_digits(str(abs(int(lit.value))), width)}{lit.suffix}"
    if context == "SCIENTIFIC":
        value = Decimal(lit.value) if lit.is_integer else lit.value
        suffix = lit.suffix if lit.suffix.lower() in ("f", "d") else ""
        return _scientific(value) + suffix
    raise LiteralError(f"{context} is not a NUMBER context")
