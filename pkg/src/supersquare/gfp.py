"""Exact arithmetic in the prime field GF(p) for odd primes p.

Characteristic 3 is the featured case: several constructions downstream
(the dimension-3 and dimension-6 composition superalgebras and the
superalgebra attached to a symplectic triple system) exist only there
and refuse any other modulus.  Everything here is plain modular integer
arithmetic; numpy arrays of canonical residues are the bulk
representation used by the linear algebra layer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field GF(p), p an odd prime.

    Scalars are canonical residues in [0, p).  All operations return
    canonical residues; there is no lazy reduction.
    """

    __slots__ = ("p", "half")

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported (2 must be invertible)")
        self.p = p
        self.half = self.inv(2)  # the scalar 1/2, used throughout

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    # scalar operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # array helpers ------------------------------------------------------

    def asarray(self, data) -> np.ndarray:
        """Canonical-residue int64 array."""
        return np.asarray(data, dtype=np.int64) % self.p

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def scalar(self, value: int) -> "Scalar":
        return Scalar(value % self.p, self.p)


@dataclass(frozen=True)
class Scalar:
    """A canonical residue in GF(p) with operator overloads.

    Serializes as its decimal residue.  Mixing moduli raises.
    """

    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "Scalar"):
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: GF({self.p}) vs GF({other.p})")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar((self.value - other.value) % self.p, self.p)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar((self.value * other.value) % self.p, self.p)

    def __neg__(self) -> "Scalar":
        return Scalar((-self.value) % self.p, self.p)

    def inv(self) -> "Scalar":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Scalar(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return self * other.inv()

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def require_characteristic_3(field: PrimeField, what: str):
    """Gate for constructions that exist only in characteristic 3."""
    if field.p != 3:
        raise ValueError(
            f"{what} exists only in characteristic 3 (got p={field.p})"
        )


GF3 = PrimeField(3)
