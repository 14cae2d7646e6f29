"""Exact arithmetic over the residue ring Z/p^s Z and Lee weights.

Everything here is pure integer / Fraction arithmetic; floating point is
deliberately never used, so that downstream bound computations are bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Modulus",
    "RingVector",
    "lee_weight_elem",
    "lee_weight_vec",
    "hamming_weight_vec",
    "lee_distance",
    "ideal_elements",
    "ideal_total_weight",
    "ambient_average_weight",
    "gray_map",
]

MAX_Q = 2**31


def is_prime(n: int) -> bool:
    """Trial-division primality test; inputs here are always small."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class Modulus:
    """The pair (p, s) defining the ring Z/p^s Z."""

    p: int
    s: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.s < 1:
            raise ValueError(f"s = {self.s} must be a positive integer")
        if self.p**self.s > MAX_Q:
            raise ValueError(f"p^s = {self.p**self.s} exceeds the supported cap {MAX_Q}")

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def M(self) -> int:
        """Maximal Lee weight of a single element, floor(q/2)."""
        return self.q // 2

    def val(self, a: int) -> int:
        """p-adic valuation of a mod q, with val(0) = s."""
        a %= self.q
        if a == 0:
            return self.s
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def unit_inverse(self, u: int) -> int:
        u %= self.q
        if u % self.p == 0:
            raise ValueError(f"{u} is not a unit mod {self.q}")
        return pow(u, -1, self.q)

    def signed_rep(self, a: int) -> int:
        """Representative of a in [-M, M] (a view; storage stays in [0, q-1])."""
        a %= self.q
        return a if a <= self.M else a - self.q

    def __str__(self):
        return f"Z/{self.p}^{self.s}" if self.s > 1 else f"Z/{self.p}"


@dataclass(frozen=True)
class RingVector:
    """A vector with entries in [0, q-1] over a fixed modulus."""

    modulus: Modulus
    entries: tuple[int, ...]

    def __post_init__(self):
        q = self.modulus.q
        if any(not (0 <= e < q) for e in self.entries):
            raise ValueError("vector entries must be reduced into [0, q-1]")

    @classmethod
    def reduce(cls, modulus: Modulus, entries) -> "RingVector":
        q = modulus.q
        return cls(modulus, tuple(int(e) % q for e in entries))

    def __len__(self):
        return len(self.entries)

    def __sub__(self, other: "RingVector") -> "RingVector":
        if self.modulus != other.modulus or len(self) != len(other):
            raise ValueError("mismatched vectors")
        q = self.modulus.q
        return RingVector(self.modulus, tuple((a - b) % q for a, b in zip(self.entries, other.entries)))


def lee_weight_elem(m: Modulus, a: int) -> int:
    """Lee weight of a single element: min(a, q - a) for a in [0, q-1]."""
    if not (0 <= a < m.q):
        raise ValueError(f"element {a} out of range [0, {m.q - 1}]")
    return min(a, m.q - a)


def lee_weight_vec(v: RingVector) -> int:
    q = v.modulus.q
    return sum(min(e, q - e) for e in v.entries)


def hamming_weight_vec(v: RingVector) -> int:
    return sum(1 for e in v.entries if e != 0)


def lee_distance(u: RingVector, v: RingVector) -> int:
    return lee_weight_vec(u - v)


def ideal_elements(m: Modulus, i: int) -> list[int]:
    """The elements of the ideal generated by p^i, as integers in [0, q-1]."""
    if not (0 <= i <= m.s):
        raise ValueError(f"ideal level {i} out of range [0, {m.s}]")
    return list(range(0, m.q, m.p**i))


def ideal_total_weight(m: Modulus, i: int) -> int:
    """Total Lee weight of the ideal generated by p^i, in closed form.

    Equals (p^(2s-i) - p^i)/4 for odd p and 2^(2s-i-2) for p = 2; agrees with
    the brute-force sum over the p^(s-i) ideal elements.
    """
    if not (0 <= i <= m.s - 1):
        raise ValueError(f"ideal level {i} out of range [0, {m.s - 1}]")
    p, s = m.p, m.s
    if p == 2:
        return 2 ** (2 * s - i - 2)
    num = p ** (2 * s - i) - p**i
    assert num % 4 == 0
    return num // 4


def ambient_average_weight(m: Modulus) -> Fraction:
    """Average Lee weight of the full ring, as an exact rational.

    (p^(2s) - 1)/(4 p^s) for odd p; 2^(s-2) for p = 2 (a Fraction so that
    s = 1 stays exact).
    """
    p, s = m.p, m.s
    if p == 2:
        return Fraction(2**s, 4)
    return Fraction(p ** (2 * s) - 1, 4 * p**s)


# The componentwise Gray map on Z/4.  Any table satisfying
# w_H(gray(v)) = w_L(v) works; this is the standard one.
_GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}


def gray_map(v: RingVector) -> tuple[int, ...]:
    """Isometry (Z/4, Lee) -> (F_2^{2n}, Hamming), applied componentwise."""
    m = v.modulus
    if (m.p, m.s) != (2, 2):
        raise ValueError("the Gray map is defined only over Z/4")
    out: list[int] = []
    for e in v.entries:
        out.extend(_GRAY[e])
    return tuple(out)
