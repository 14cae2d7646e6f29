"""Linear codes over Z/p^s Z: construction, structural parameters, duality.

A code is stored through a row-reduced generator matrix obtained by Gaussian
elimination with minimal-valuation pivoting.  Pivot t sits in column col_t
with entry p^(v_t) (unit normalised), rows are listed in pivot order, pivot
valuations are non-decreasing, and every row is zero at the pivot columns of
earlier rows.  Reordering the columns pivots-first yields the familiar
block-triangular systematic shape with diagonal blocks p^(i-1)*Id_{k_i}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .ring import Modulus, RingVector

ENUMERATION_BUDGET = 2**24


class BudgetError(RuntimeError):
    """Raised when an enumeration would exceed its configured budget."""


class TrivialCodeError(ValueError):
    """Raised when a distance is requested for the zero code."""


@dataclass(frozen=True)
class CodeMatrix:
    """An exact integer matrix with entries reduced mod p^s."""

    modulus: Modulus
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        q = self.modulus.q
        ncols = {len(r) for r in self.rows}
        if len(ncols) > 1:
            raise ValueError("ragged matrix")
        for r in self.rows:
            if any(not (0 <= e < q) for e in r):
                raise ValueError("matrix entries must be reduced into [0, q-1]")

    @classmethod
    def reduce(cls, modulus: Modulus, rows) -> "CodeMatrix":
        q = modulus.q
        return cls(modulus, tuple(tuple(int(e) % q for e in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)


def _row_reduce(m: Modulus, rows: list[list[int]]):
    """Reduce generator rows; returns (pivot rows, pivots) with pivots[t] = (col, val).

    Pivot selection: smallest p-adic valuation over the active submatrix,
    leftmost column achieving it, first row within that column.  All other
    active rows are cleared at the pivot column (their entries there have
    valuation >= the pivot's, so the quotient is exact).
    """
    q, p, s = m.q, m.p, m.s
    work = [[e % q for e in row] for row in rows]
    ncols = len(work[0]) if work else 0
    active = list(range(len(work)))
    used_cols: set[int] = set()
    pivot_rows: list[list[int]] = []
    pivots: list[tuple[int, int]] = []
    while active:
        best = None  # (val, col, row)
        for c in range(ncols):
            if c in used_cols:
                continue
            for r in active:
                e = work[r][c]
                if e == 0:
                    continue
                v = m.val(e)
                if best is None or v < best[0]:
                    best = (v, c, r)
            if best is not None and best[1] == c and best[0] == 0:
                break  # cannot beat a unit in the leftmost eligible column
        if best is None:
            break
        v, c, r = best
        pv = p**v
        inv = m.unit_inverse(work[r][c] // pv)
        row = [(e * inv) % q for e in work[r]]
        for r2 in active:
            if r2 == r:
                continue
            e = work[r2][c]
            if e:
                f = e // pv
                work[r2] = [(a - f * b) % q for a, b in zip(work[r2], row)]
        work[r] = row
        pivot_rows.append(row)
        pivots.append((c, v))
        used_cols.add(c)
        active.remove(r)
    return pivot_rows, pivots


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear code with cached structural parameters.

    Immutable after construction; expensive codeword-derived facts are cached
    lazily and at most once.
    """

    modulus: Modulus
    n: int
    rows: tuple[tuple[int, ...], ...]        # reduced generator rows, pivot order
    pivots: tuple[tuple[int, int], ...]      # (column, valuation) per row
    given_rows: tuple[tuple[int, ...], ...]  # generator as supplied (mod q)
    budget: int = field(default=ENUMERATION_BUDGET, repr=False)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_generator(cls, modulus: Modulus, rows, n: int | None = None,
                       budget: int = ENUMERATION_BUDGET) -> "LinearCode":
        """Build the row span of `rows`; redundant or zero rows are allowed."""
        given = tuple(tuple(int(e) % modulus.q for e in row) for row in rows)
        if n is None:
            if not given:
                raise ValueError("cannot infer length from an empty generator")
            n = len(given[0])
        if any(len(r) != n for r in given):
            raise ValueError("generator rows disagree with the code length")
        reduced, pivots = _row_reduce(modulus, [list(r) for r in given])
        return cls(modulus, n, tuple(tuple(r) for r in reduced), tuple(pivots), given, budget)

    @classmethod
    def from_matrix(cls, mat: CodeMatrix, budget: int = ENUMERATION_BUDGET) -> "LinearCode":
        return cls.from_generator(mat.modulus, mat.rows, n=mat.ncols, budget=budget)

    @classmethod
    def zero(cls, modulus: Modulus, n: int) -> "LinearCode":
        return cls.from_generator(modulus, [[0] * n])

    # -- parameters --------------------------------------------------------

    @property
    def subtype(self) -> tuple[int, ...]:
        counts = [0] * self.modulus.s
        for _, v in self.pivots:
            counts[v] += 1
        return tuple(counts)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def free_rank(self) -> int:
        return self.subtype[0]

    @property
    def type_k(self) -> Fraction:
        s = self.modulus.s
        return sum((Fraction(s - i, s) * k for i, k in enumerate(self.subtype)), Fraction(0))

    @property
    def cardinality(self) -> int:
        p, s = self.modulus.p, self.modulus.s
        return p ** sum((s - v) for _, v in self.pivots)

    @property
    def row_orders(self) -> tuple[int, ...]:
        p, s = self.modulus.p, self.modulus.s
        return tuple(p ** (s - v) for _, v in self.pivots)

    def generator_matrix(self) -> CodeMatrix:
        return CodeMatrix(self.modulus, self.rows if self.rows else ((0,) * self.n,))

    # -- systematic form ---------------------------------------------------

    def systematic_form(self) -> tuple[CodeMatrix, tuple[int, ...]]:
        """Column-permuted generator in block-triangular shape.

        Returns (matrix, perm) where perm[j] is the original index of column j
        of the returned matrix: pivot columns first in block order, then the
        remaining columns in ascending order.
        """
        pivot_cols = [c for c, _ in self.pivots]
        rest = [c for c in range(self.n) if c not in set(pivot_cols)]
        perm = tuple(pivot_cols + rest)
        rows = tuple(tuple(row[j] for j in perm) for row in self.rows)
        if not rows:
            rows = ((0,) * self.n,)
        return CodeMatrix(self.modulus, rows), perm

    # -- membership and equality -------------------------------------------

    def contains(self, vec) -> bool:
        q, p = self.modulus.q, self.modulus.p
        v = [int(e) % q for e in (vec.entries if isinstance(vec, RingVector) else vec)]
        if len(v) != self.n:
            raise ValueError("length mismatch")
        for row, (c, val) in zip(self.rows, self.pivots):
            pv = p**val
            if v[c] % pv:
                return False
            f = v[c] // pv
            if f:
                v = [(a - f * b) % q for a, b in zip(v, row)]
        return not any(v)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return (self.modulus == other.modulus and self.n == other.n
                and all(other.contains(r) for r in self.rows))

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.modulus == other.modulus and self.n == other.n
                and self.cardinality == other.cardinality
                and self.is_subcode_of(other))

    def __hash__(self):
        return hash((self.modulus, self.n, self.cardinality, self.subtype))

    # -- codeword enumeration ----------------------------------------------

    def _check_budget(self, budget: int | None = None):
        limit = self.budget if budget is None else budget
        if self.cardinality > limit:
            raise BudgetError(
                f"code has {self.cardinality} codewords, over the enumeration "
                f"budget of {limit}")

    def codewords(self, budget: int | None = None):
        """Yield every codeword once, as RingVector, in mixed-radix row order."""
        self._check_budget(budget)
        q = self.modulus.q
        if not self.rows:
            yield RingVector(self.modulus, (0,) * self.n)
            return
        for coeffs in itertools.product(*[range(o) for o in self.row_orders]):
            word = [0] * self.n
            for a, row in zip(coeffs, self.rows):
                if a:
                    word = [(w + a * e) % q for w, e in zip(word, row)]
            yield RingVector(self.modulus, tuple(word))

    def codeword_array(self, budget: int | None = None) -> np.ndarray:
        """All codewords as a (|C|, n) integer array, same order as codewords()."""
        self._check_budget(budget)
        q = self.modulus.q
        if not self.rows:
            return np.zeros((1, self.n), dtype=np.int64)
        grids = np.meshgrid(*[np.arange(o) for o in self.row_orders], indexing="ij")
        coeffs = np.stack([g.reshape(-1) for g in grids], axis=1)
        gen = np.array(self.rows, dtype=np.int64)
        return (coeffs @ gen) % q

    @cached_property
    def _lee_weights(self) -> np.ndarray:
        words = self.codeword_array()
        q = self.modulus.q
        return np.minimum(words, q - words).sum(axis=1)

    def min_lee_distance(self) -> int:
        if self.cardinality < 2:
            raise TrivialCodeError("the zero code has no minimum distance")
        w = self._lee_weights
        return int(w[w > 0].min())

    def min_hamming_distance(self) -> int:
        if self.cardinality < 2:
            raise TrivialCodeError("the zero code has no minimum distance")
        words = self.codeword_array()
        wh = (words != 0).sum(axis=1)
        return int(wh[wh > 0].min())

    def lee_weight_enumerator(self) -> tuple[int, ...]:
        """Sorted Lee weights of all codewords (an equivalence invariant)."""
        return tuple(sorted(int(x) for x in self._lee_weights))

    # -- support and averages -----------------------------------------------

    def support_subtype(self) -> tuple[int, ...]:
        """Counts (n_0, ..., n_s) of coordinates by their projection ideal.

        The ideal of coordinate j is generated by p^v with v the minimal
        valuation of column j over the generator rows.
        """
        s = self.modulus.s
        counts = [0] * (s + 1)
        for j in range(self.n):
            v = min((self.modulus.val(row[j]) for row in self.rows), default=s)
            counts[v] += 1
        return tuple(counts)

    def average_lee_weight(self) -> Fraction:
        """Mean Lee weight over the code, from the support subtype closed form."""
        p, s, q = self.modulus.p, self.modulus.s, self.modulus.q
        ns = self.support_subtype()
        supp = self.n - ns[s]
        if p == 2:
            return Fraction(2**s * supp, 4)
        total = q * q * supp - sum(p ** (2 * i) * ns[i] for i in range(s))
        return Fraction(total, 4 * q)

    # -- derived codes -------------------------------------------------------

    def socle(self) -> "LinearCode":
        """The subcode of order-p codewords plus zero, spanned by scaled rows."""
        p, s, q = self.modulus.p, self.modulus.s, self.modulus.q
        gens = []
        for row, (_, v) in zip(self.rows, self.pivots):
            f = p ** (s - 1 - v)
            gens.append([(f * e) % q for e in row])
        if not gens:
            gens = [[0] * self.n]
        return LinearCode.from_generator(self.modulus, gens, n=self.n, budget=self.budget)

    def socle_field_matrix(self) -> np.ndarray:
        """Socle generators divided by p^(s-1), as a matrix over F_p."""
        p, s = self.modulus.p, self.modulus.s
        soc = self.socle()
        return np.array([[e // p ** (s - 1) for e in row] for row in soc.rows],
                        dtype=np.int64).reshape(len(soc.rows), self.n)

    def parity_check(self) -> CodeMatrix:
        """A generator matrix of the dual code (so G . H^T = 0)."""
        return self.dual().generator_matrix()

    def dual(self) -> "LinearCode":
        """The dual code, solved by back-substitution over the pivot structure."""
        m = self.modulus
        q, p, s = m.q, m.p, m.s
        pivot_cols = [c for c, _ in self.pivots]
        pivot_set = set(pivot_cols)
        free_cols = [c for c in range(self.n) if c not in pivot_set]

        def solve(x: list[int], bump: int | None = None) -> list[int]:
            # fill pivot coordinates from the deepest pivot upwards
            for t in range(len(self.pivots) - 1, -1, -1):
                c, v = self.pivots[t]
                row = self.rows[t]
                acc = sum(row[j] // p**v * x[j] for j in range(self.n) if j != c)
                mod = p ** (s - v)
                x[c] = (-acc) % mod
                if bump == t:
                    x[c] = (x[c] + p ** (s - v)) % q
            return x

        gens: list[list[int]] = []
        for c in free_cols:
            x = [0] * self.n
            x[c] = 1
            gens.append(solve(x))
        for t, (_, v) in enumerate(self.pivots):
            if v >= 1:
                gens.append(solve([0] * self.n, bump=t))
        if not gens:
            gens = [[0] * self.n]
        return LinearCode.from_generator(m, gens, n=self.n, budget=self.budget)

    # -- equidistance and replication ----------------------------------------

    def is_lee_equidistant(self) -> bool:
        if self.cardinality < 2:
            raise TrivialCodeError("equidistance is undefined for the zero code")
        nz = self._lee_weights[self._lee_weights > 0]
        return bool(nz.min() == nz.max())

    def equidistant_weight(self) -> int:
        if not self.is_lee_equidistant():
            raise ValueError("code is not Lee-equidistant")
        return self.min_lee_distance()

    def replicate(self, ell: int) -> "LinearCode":
        """Concatenate ell copies of the generator columns (length ell * n)."""
        if ell < 1:
            raise ValueError("replication count must be >= 1")
        rows = [tuple(row) * ell for row in self.given_rows]
        return LinearCode.from_generator(self.modulus, rows, n=self.n * ell, budget=self.budget)

    def __repr__(self):
        return (f"LinearCode({self.modulus}, n={self.n}, subtype={self.subtype}, "
                f"|C|={self.cardinality})")


# -- text code format ---------------------------------------------------------
#
# First line: "p s n"; each following non-comment line is one generator row of
# space-separated integers; '#' starts a comment line.


def parse_code_text(text: str, budget: int = ENUMERATION_BUDGET) -> LinearCode:
    numbered = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    numbered = [(i, ln) for i, ln in numbered if ln and not ln.startswith("#")]
    if not numbered:
        raise ValueError("empty code file")
    lineno, head_line = numbered[0]
    head = head_line.split()
    if len(head) != 3:
        raise ValueError(f"header must be 'p s n', got {head_line!r} (line {lineno})")
    try:
        p, s, n = (int(x) for x in head)
    except ValueError as exc:
        raise ValueError(f"bad header {head_line!r} (line {lineno})") from exc
    m = Modulus(p, s)
    rows = []
    for lineno, ln in numbered[1:]:
        try:
            row = [int(x) for x in ln.split()]
        except ValueError as exc:
            raise ValueError(f"bad generator row on line {lineno}: {ln!r}") from exc
        if len(row) != n:
            raise ValueError(f"row on line {lineno} has {len(row)} entries, expected {n}")
        rows.append(row)
    if not rows:
        rows = [[0] * n]
    return LinearCode.from_generator(m, rows, n=n, budget=budget)


def format_code_text(code: LinearCode, comments: list[str] | None = None) -> str:
    m = code.modulus
    out = [f"{m.p} {m.s} {code.n}"]
    rows = code.given_rows if code.given_rows else ((0,) * code.n,)
    out.extend(" ".join(str(e) for e in row) for row in rows)
    out.extend(f"# {c}" for c in (comments or []))
    return "\n".join(out) + "\n"
