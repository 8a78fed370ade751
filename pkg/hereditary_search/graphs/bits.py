# -*- coding: utf-8 -*-

"""Operações sobre linhas de bits (inteiros Python usados como bitsets)."""

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Itera os índices dos bits ligados em ordem crescente."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Índice do menor bit ligado (-1 se a máscara é zero)."""
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1
