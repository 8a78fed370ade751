# -*- coding: utf-8 -*-

"""
Gerador pseudoaleatório fixo dos geradores de grafos.

XorShift64* (shifts 12, 25, 27; multiplicador 0x2545F4914F6CDD1D), com o
estado inicial derivado da semente por um passo de SplitMix64, de modo que
a semente 0 é válida. Toda a aritmética é feita módulo 2^64; os corpora
gerados são idênticos entre plataformas e implementações.
"""

from typing import List, MutableSequence, TypeVar

MASK64 = (1 << 64) - 1
XORSHIFT_MULTIPLIER = 0x2545F4914F6CDD1D

T = TypeVar('T')


def splitmix64(seed: int) -> int:
    """
    Um passo do SplitMix64 a partir de `seed`.

    Examples:
        >>> hex(splitmix64(0))
        '0xe220a8397b1dcdaf'
    """
    z = (seed + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """
    Fonte de aleatoriedade reprodutível.

    Args:
        seed: inteiro de 64 bits (valores maiores são reduzidos módulo 2^64)
    """

    def __init__(self, seed: int):
        state = splitmix64(seed & MASK64)
        # estado zero é ponto fixo do xorshift
        self.state = state or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_MULTIPLIER) & MASK64

    def random(self) -> float:
        """Uniforme em [0, 1) com 53 bits de precisão."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def below(self, bound: int) -> int:
        """
        Inteiro uniforme em [0, bound), por rejeição (sem viés de módulo).

        Examples:
            >>> rng = XorShift64Star(7)
            >>> 0 <= rng.below(10) < 10
            True
        """
        if bound <= 0:
            raise ValueError(f"bound deve ser positivo (recebido {bound})")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def bernoulli(self, p: float) -> bool:
        return self.random() < p

    def shuffle(self, items: MutableSequence[T]) -> None:
        """Fisher-Yates in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_bits(self, count: int, bits: int) -> List[int]:
        """`count` inteiros uniformes de `bits` bits (bits <= 64)."""
        return [self.next_u64() >> (64 - bits) for _ in range(count)]
