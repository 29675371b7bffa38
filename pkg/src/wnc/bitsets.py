"""Helpers for int-backed bitsets over dense element ids.

A set of elements {0..n-1} is stored as a Python int with bit i set for
member i; intersections and unions are single bitwise operations.
"""


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(ids) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m
