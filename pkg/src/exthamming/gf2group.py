"""Additive group of GF(2^n) as n-bit vectors, and the alphabet bijection phi.

Only the additive structure is modelled: addition is XOR and the field
identity "1" is the bit pattern ...001.  No multiplication is provided since
connection sets only need nonzero elements and the element 1.

phi maps the alphabet {0, ..., 2^n - 1} onto the group so that taking the
complement symbol x -> 2^n - 1 - x corresponds to adding 1::

    phi(x) = 2x                   if x < 2^(n-1)
    phi(x) = 2(2^n - 1 - x) + 1   otherwise
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_WIDTH = 63


def _check_width(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_WIDTH:
        raise ValueError(f"group width must be an integer in [1, {MAX_WIDTH}], got {n!r}")


@dataclass(frozen=True, order=True)
class GroupElem:
    """Element of F_2^width stored as an unsigned bit pattern."""

    bits: int
    width: int

    def __post_init__(self) -> None:
        _check_width(self.width)
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bits {self.bits} do not fit in width {self.width}")

    def __add__(self, other: GroupElem) -> GroupElem:
        return group_add(self, other)

    @classmethod
    def zero(cls, width: int) -> GroupElem:
        return cls(0, width)

    @classmethod
    def one(cls, width: int) -> GroupElem:
        return cls(1, width)


def group_add(a: GroupElem, b: GroupElem) -> GroupElem:
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} vs {b.width}")
    return GroupElem(a.bits ^ b.bits, a.width)


def complement_symbol(x: int, n: int) -> int:
    """Return 2^n - 1 - x, the complement of an alphabet symbol."""
    _check_symbol(x, n)
    return (1 << n) - 1 - x


def _check_symbol(x: int, n: int) -> None:
    _check_width(n)
    if not 0 <= x < (1 << n):
        raise ValueError(f"symbol {x} outside alphabet [0, {(1 << n) - 1}]")


def phi(x: int, n: int) -> GroupElem:
    """Map alphabet symbol ``x`` to the group, pairing complements via +1."""
    _check_symbol(x, n)
    half = 1 << (n - 1)
    if x < half:
        return GroupElem(2 * x, n)
    return GroupElem(2 * ((1 << n) - 1 - x) + 1, n)


def phi_inv(g: GroupElem, n: int) -> int:
    _check_width(n)
    if g.width != n:
        raise ValueError(f"element width {g.width} does not match n={n}")
    half_index, low = divmod(g.bits, 2)
    if low == 0:
        return half_index
    return (1 << n) - 1 - half_index


def phi_table(n: int) -> list[int]:
    """Bit patterns ``[phi(0).bits, ..., phi(2^n - 1).bits]``."""
    return [phi(x, n).bits for x in range(1 << n)]
