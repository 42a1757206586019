"""Arithmetic in Z/PZ for an odd prime P.

Field elements are plain Python ints kept canonical in [0, P).  A
:class:`PrimeField` carries the modulus and supplies every ring operation
the transforms need, including the halving used by inverse butterflies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import isprime

# 15 * 2**27 + 1
DEFAULT_MODULUS = 2013265921


class RootOfUnityError(ValueError):
    """Raised when a field has no element of the requested order."""


@dataclass(frozen=True)
class PrimeField:
    modulus: int = DEFAULT_MODULUS
    two_inv: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        P = self.modulus
        if P <= 2 or not isprime(P):
            raise ValueError(f"modulus must be an odd prime, got {P}")
        object.__setattr__(self, "two_inv", (P + 1) // 2)

    def __call__(self, value: int) -> int:
        """Reduce an arbitrary integer to its canonical residue."""
        return value % self.modulus

    @property
    def max_two_adicity(self) -> int:
        """Largest p such that 2**p divides P - 1."""
        q = self.modulus - 1
        return (q & -q).bit_length() - 1

    def add(self, a: int, b: int) -> int:
        s = a + b
        return s - self.modulus if s >= self.modulus else s

    def sub(self, a: int, b: int) -> int:
        d = a - b
        return d + self.modulus if d < 0 else d

    def neg(self, a: int) -> int:
        return self.modulus - a if a else 0

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return pow(a, e, self.modulus)

    def inv(self, a: int) -> int:
        if a % self.modulus == 0:
            raise ZeroDivisionError("0 has no inverse modulo a prime")
        return self.pow(a, self.modulus - 2)

    def half(self, a: int) -> int:
        # a/2 without a multiplication: odd residues become even after adding P
        return (a >> 1) if a & 1 == 0 else (a + self.modulus) >> 1

    def find_primitive_root(self, n: int) -> int:
        """Return the smallest residue of exact multiplicative order ``n``.

        ``n`` must be a power of two dividing P - 1.  Candidates c = 2, 3, ...
        are raised to (P - 1)/n until one lands on an element w with
        w^(n/2) = -1; the primitive n-th roots are then exactly the odd powers
        of w, and the least of them is returned so the choice does not depend
        on which candidate succeeded first.
        """
        if n < 1 or n & (n - 1):
            raise ValueError(f"n must be a power of two, got {n}")
        P = self.modulus
        if (P - 1) % n:
            raise RootOfUnityError(f"no element of order {n} modulo {P}")
        if n == 1:
            return 1
        minus_one = P - 1
        cofactor = (P - 1) // n
        for c in range(2, P):
            w = self.pow(c, cofactor)
            if self.pow(w, n // 2) == minus_one:
                break
        else:  # pragma: no cover - unreachable for prime P with n | P - 1
            raise RootOfUnityError(f"no element of order {n} modulo {P}")
        best = w
        w2 = w * w % P
        x = w
        for _ in range(n // 2 - 1):
            x = x * w2 % P
            if x < best:
                best = x
        return best
