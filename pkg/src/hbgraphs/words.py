"""Digit words over {0,1,2}: values, canonical expansions, classifications.

A word is represented as a plain ``str`` of the characters ``0``, ``1``,
``2``, most significant digit first.  The empty string is the (unique)
expansion of 0.  A word is a *hyperbinary expansion* when it is empty or
its leading digit is nonzero.
"""

from __future__ import annotations

import enum

_ALPHABET = frozenset("012")

#: Human-readable rendering of the empty word.
EMPTY_WORD_DISPLAY = "ε"  # ε


class LengthClass(enum.Enum):
    EMPTY = "empty"
    SHORT = "short"
    LONG = "long"


def validate_word(w: str) -> str:
    """Check that ``w`` uses only digits 0, 1, 2 and return it unchanged."""
    if not _ALPHABET.issuperset(w):
        raise ValueError(f"not a word over {{0,1,2}}: {w!r}")
    return w


def is_hyperbinary(w: str) -> bool:
    """True iff ``w`` is empty or starts with a nonzero digit."""
    validate_word(w)
    return w == "" or w[0] != "0"


def validate_expansion(w: str) -> str:
    """Check that ``w`` is a hyperbinary expansion and return it unchanged."""
    if not is_hyperbinary(w):
        raise ValueError(f"not a hyperbinary expansion (leading zero): {w!r}")
    return w


def value(w: str) -> int:
    """Base-2 positional value of a digit word; the empty word gives 0."""
    validate_word(w)
    n = 0
    for ch in w:
        n = 2 * n + (ord(ch) - 48)
    return n


def binary_expansion(n: int) -> str:
    """Ordinary binary expansion of n; n = 0 gives the empty word."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return format(n, "b") if n else ""


def minimal_expansion(n: int) -> str:
    """The unique expansion of n with no 0 digits (shortlex minimum of H(n)).

    Built least significant digit first: an even n > 0 must end with 2,
    an odd n with 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    digits = []
    while n:
        d = 2 if n % 2 == 0 else 1
        digits.append(d)
        n = (n - d) // 2
    return "".join(str(d) for d in reversed(digits))


def weight(w: str) -> int:
    """Digit sum of the word (drops by exactly 1 along every reduction arc)."""
    validate_word(w)
    return sum(ord(ch) - 48 for ch in w)


def shortlex_key(w: str) -> tuple[int, str]:
    """Sort key for the shortlex (length, then lexicographic) order."""
    return (len(w), w)


def shortlex_cmp(a: str, b: str) -> int:
    """-1, 0 or 1 according to the shortlex order on digit words."""
    ka, kb = shortlex_key(validate_word(a)), shortlex_key(validate_word(b))
    return (ka > kb) - (ka < kb)


def length_class(w: str) -> LengthClass:
    """Classify an expansion as EMPTY, SHORT or LONG.

    LONG means the digit count equals that of the binary expansion of the
    value; SHORT means one less.  No other digit counts occur for valid
    expansions, so anything else signals corrupted input.
    """
    validate_expansion(w)
    if w == "":
        return LengthClass.EMPTY
    bin_len = value(w).bit_length()
    if len(w) == bin_len:
        return LengthClass.LONG
    if len(w) == bin_len - 1:
        return LengthClass.SHORT
    raise ValueError(f"impossible expansion length for {w!r}")


def render(w: str) -> str:
    """Human rendering of a word: the digit string, or ε for the empty word."""
    return w if w else EMPTY_WORD_DISPLAY
