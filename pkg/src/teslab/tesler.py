"""Tesler matrices for arbitrary integer hook sums.

A Tesler matrix is upper triangular with no zero row and each row entirely
non-negative or entirely non-positive.  The hook sum of row i is the row sum
from the diagonal rightward minus the column sum above the diagonal.  The
weight of a matrix multiplies q,t-integers of its nonzero entries with a sign
and a power of M = (1-q)(1-t); the Tesler function tes(alpha) sums weights
over the finite set of matrices with hook-sum vector alpha.

Finiteness and enumeration: the total s_i of row i is forced to
alpha_i + (column sum above the diagonal), the row's sign is sign(s_i), and
each entry is bounded by |s_i|; sign-homogeneous nonzero rows cannot sum to
zero, so s_i = 0 prunes the branch.
"""

from __future__ import annotations

from functools import lru_cache

from .qt_algebra import M, ONE, LaurentPolyQT, qt_int


class TeslerMatrix:
    """Validated upper-triangular, essential, signed integer matrix."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix not square")
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for i, row in enumerate(rows):
            if any(row[j] for j in range(i)):
                raise ValueError("not upper triangular")
            if not any(row[i:]):
                raise ValueError("zero row")
            if any(v > 0 for v in row) and any(v < 0 for v in row):
                raise ValueError("row not sign-homogeneous")
        self.n = n
        self.rows = rows

    @classmethod
    def _unchecked(cls, n: int, rows: tuple) -> "TeslerMatrix":
        out = object.__new__(cls)
        out.n = n
        out.rows = rows
        return out

    def __eq__(self, other):
        return isinstance(other, TeslerMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"TeslerMatrix({list(map(list, self.rows))})"

    def hooks(self) -> tuple:
        """Row sum from the diagonal rightward minus the column sum above it."""
        n = self.n
        return tuple(
            sum(self.rows[i][i:]) - sum(self.rows[k][i] for k in range(i))
            for i in range(n)
        )

    def is_permutational(self) -> bool:
        return all(sum(1 for v in row if v) == 1 for row in self.rows)

    def entries_plus(self) -> int:
        return sum(1 for row in self.rows for v in row if v > 0)

    def rows_plus(self) -> int:
        return sum(1 for row in self.rows if any(v > 0 for v in row))

    def nonzero(self) -> int:
        return sum(1 for row in self.rows for v in row if v)

    def weight(self) -> LaurentPolyQT:
        """(-1)^(entries+ - rows+) * M^(nonzero - n) * prod qt_int(entry)."""
        sign = -1 if (self.entries_plus() - self.rows_plus()) % 2 else 1
        out = _m_power(self.nonzero() - self.n) * sign
        for row in self.rows:
            for v in row:
                if v:
                    out = out * qt_int(v)
        return out

    def negated(self) -> "TeslerMatrix":
        return TeslerMatrix._unchecked(
            self.n, tuple(tuple(-v for v in row) for row in self.rows))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "TeslerMatrix":
        rows = obj["rows"]
        if len(rows) != obj.get("n", len(rows)):
            raise ValueError("n does not match rows")
        return cls(rows)


@lru_cache(maxsize=None)
def _m_power(k: int) -> LaurentPolyQT:
    if k < 0:
        raise ValueError("essential matrices cannot give a negative M power")
    return ONE if k == 0 else _m_power(k - 1) * M


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple:
    """Nonnegative compositions of total into parts, colexicographic order."""
    if parts == 0:
        return ((),) if total == 0 else ()
    if parts == 1:
        return ((total,),)
    out = []
    for last in range(total + 1):
        for rest in compositions(total - last, parts - 1):
            out.append(rest + (last,))
    return tuple(out)


def parse_hooks(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse hook vector {text!r}") from exc


def enumerate_tesler(alpha):
    """Yield every Tesler matrix with hook sums alpha, in a fixed order.

    Rows are filled top to bottom; each row's compositions come out in
    colexicographic order, so the stream is reproducible.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    if n == 0:
        return
    colsum = [0] * n

    def rec(i: int, rows: tuple):
        s = alpha[i] + colsum[i]
        if s == 0:
            return
        sign = 1 if s > 0 else -1
        width = n - i
        for comp in compositions(abs(s), width):
            row = (0,) * i + tuple(sign * v for v in comp)
            if i == n - 1:
                yield TeslerMatrix._unchecked(n, rows + (row,))
                continue
            for j in range(i + 1, n):
                colsum[j] += row[j]
            yield from rec(i + 1, rows + (row,))
            for j in range(i + 1, n):
                colsum[j] -= row[j]

    yield from rec(0, ())


def enumerate_permutational(alpha):
    """Yield the permutational Tesler matrices (one nonzero entry per row)."""
    alpha = tuple(alpha)
    n = len(alpha)
    if n == 0:
        return
    colsum = [0] * n

    def rec(i: int, rows: tuple):
        s = alpha[i] + colsum[i]
        if s == 0:
            return
        for j in range(i, n):
            row = tuple(s if k == j else 0 for k in range(n))
            if i == n - 1:
                yield TeslerMatrix._unchecked(n, rows + (row,))
                continue
            if j > i:
                colsum[j] += s
            yield from rec(i + 1, rows + (row,))
            if j > i:
                colsum[j] -= s

    yield from rec(0, ())


@lru_cache(maxsize=None)
def _row_options(s: int, width: int) -> tuple:
    """Per-row enumeration data, one triple per composition of |s|:
    (signed row tail, nonzero count, qt_int product of the entries)."""
    sign = 1 if s > 0 else -1
    out = []
    for comp in compositions(abs(s), width):
        tail = tuple(sign * v for v in comp)
        factor = ONE
        nz = 0
        for v in tail:
            if v:
                nz += 1
                factor = factor * qt_int(v)
        out.append((tail, nz, factor))
    return tuple(out)


def _weight_fold(alpha, i0, colsum, prod0, ep0, rp0, nz0) -> LaurentPolyQT:
    """Sum of weights over all completions of rows i0..n-1.

    colsum[j] holds the column-j contribution of the fixed rows above; prod0,
    ep0, rp0, nz0 carry their qt_int product and sign/size counters.
    """
    n = len(alpha)
    acc: dict = {}

    def rec(i, prod, ep, rp, nz):
        s = alpha[i] + colsum[i]
        if s == 0:
            return
        for tail, tnz, factor in _row_options(s, n - i):
            new_prod = prod * factor
            nep = ep + (tnz if s > 0 else 0)
            nrp = rp + (1 if s > 0 else 0)
            nnz = nz + tnz
            if i == n - 1:
                sign = -1 if (nep - nrp) % 2 else 1
                for mono, c in (new_prod * _m_power(nnz - n)).terms.items():
                    v = acc.get(mono, 0) + sign * c
                    if v:
                        acc[mono] = v
                    elif mono in acc:
                        del acc[mono]
                continue
            for j in range(i + 1, n):
                colsum[j] += tail[j - i]
            rec(i + 1, new_prod, nep, nrp, nnz)
            for j in range(i + 1, n):
                colsum[j] -= tail[j - i]

    rec(i0, prod0, ep0, rp0, nz0)
    return LaurentPolyQT(acc)


def tes(alpha) -> LaurentPolyQT:
    """The Tesler function: the weight sum over all matrices with hooks alpha.

    Weights are folded along the enumeration tree so shared row prefixes are
    multiplied once; the fold is plain polynomial addition.  Results are
    memoized (they are immutable), since the verification sweeps revisit
    many hook vectors.
    """
    return _tes_cached(tuple(alpha))


@lru_cache(maxsize=None)
def _tes_cached(alpha: tuple) -> LaurentPolyQT:
    if not alpha:
        return LaurentPolyQT()
    return _weight_fold(alpha, 0, [0] * len(alpha), ONE, 0, 0, 0)


def tes_first_row_chunks(alpha, chunks: int) -> list:
    """Partial sums of tes(alpha) split over first-row choices.

    Adding the returned polynomials in any order reproduces tes(alpha); this
    is the associative fold a parallel driver may distribute.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    chunks = max(1, chunks)
    if n == 0 or alpha[0] == 0:
        return [LaurentPolyQT() for _ in range(chunks)]
    s = alpha[0]
    parts = []
    for c in range(chunks):
        total = LaurentPolyQT()
        for tail, nz, factor in _row_options(s, n)[c::chunks]:
            ep = nz if s > 0 else 0
            rp = 1 if s > 0 else 0
            if n == 1:
                sign = -1 if (ep - rp) % 2 else 1
                total = total + factor * _m_power(nz - 1) * sign
                continue
            colsum = [0] + [tail[j] for j in range(1, n)]
            total = total + _weight_fold(alpha, 1, colsum, factor, ep, rp, nz)
        parts.append(total)
    return parts
