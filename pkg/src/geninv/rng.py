"""Seeded pseudo-random number generation.

A fixed 64-bit linear congruential generator is used everywhere a seed
appears, so that fixtures can be reproduced bit-for-bit by any
reimplementation.  The recurrence is

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

and each draw returns the top 31 bits of the new state.
"""

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """Deterministic generator; all randomness in the package flows through it."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_raw(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state >> 33

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        return self.next_raw() % n
