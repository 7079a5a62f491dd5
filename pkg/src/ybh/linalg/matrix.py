"""Sparse matrices over k with the tensor-basis conventions used throughout.

Basis vectors of V^{(x)n} are indexed lexicographically: the flat index of
``e_{i_1} (x) ... (x) e_{i_n}`` is ``sum (i_t - 1) * 2**(n - t)``, so the first
tensor factor varies slowest.  :func:`kron` follows the same convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from ..laurent import ONE, ZERO, LaurentPoly, add, mul

Column = Dict[int, LaurentPoly]


@dataclass(frozen=True)
class TensorIndex:
    """A basis vector ``e_{i_1} (x) ... (x) e_{i_n}`` of V^{(x)n}, digits in {1, 2}."""

    digits: Tuple[int, ...]

    def __post_init__(self):
        if any(d not in (1, 2) for d in self.digits):
            raise ValueError(f"tensor digits must be 1 or 2, got {self.digits}")

    @property
    def n(self) -> int:
        return len(self.digits)

    @property
    def flat(self) -> int:
        idx = 0
        for d in self.digits:
            idx = 2 * idx + (d - 1)
        return idx

    @classmethod
    def from_flat(cls, flat: int, n: int) -> "TensorIndex":
        if not 0 <= flat < 2**n:
            raise ValueError(f"flat index {flat} out of range for degree {n}")
        return cls(tuple(((flat >> (n - 1 - t)) & 1) + 1 for t in range(n)))

    def __str__(self) -> str:
        return "(x)".join(f"e{d}" for d in self.digits) if self.digits else "1"


def tensor_index(*digits: int) -> int:
    """Flat index of ``e_{d_1} (x) ... (x) e_{d_n}``."""
    return TensorIndex(tuple(digits)).flat


class RingMatrix:
    """Immutable sparse matrix over Q[y, y^-1], stored column by column."""

    __slots__ = ("rows", "cols", "_cols")

    def __init__(self, rows: int, cols: int, columns: Mapping[int, Mapping[int, LaurentPoly]] | None = None):
        self.rows = rows
        self.cols = cols
        data: Dict[int, Column] = {}
        for j, col in (columns or {}).items():
            if not 0 <= j < cols:
                raise IndexError(f"column {j} out of range for {rows}x{cols}")
            clean = {}
            for i, v in col.items():
                if not 0 <= i < rows:
                    raise IndexError(f"row {i} out of range for {rows}x{cols}")
                v = LaurentPoly.coerce(v)
                if v:
                    clean[i] = v
            if clean:
                data[j] = clean
        self._cols = data

    @classmethod
    def _wrap(cls, rows: int, cols: int, data: Dict[int, Column]) -> "RingMatrix":
        # caller guarantees nonzero, in-range entries
        m = object.__new__(cls)
        m.rows, m.cols, m._cols = rows, cols, data
        return m

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RingMatrix":
        return cls._wrap(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "RingMatrix":
        return cls._wrap(n, n, {j: {j: ONE} for j in range(n)})

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Mapping[Tuple[int, int], object]) -> "RingMatrix":
        columns: Dict[int, Dict[int, object]] = {}
        for (i, j), v in entries.items():
            columns.setdefault(j, {})[i] = v
        return cls(rows, cols, columns)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[object]]) -> "RingMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged dense matrix")
            for j, v in enumerate(row):
                entries[(i, j)] = v
        return cls.from_entries(nr, nc, entries)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, object]]) -> "RingMatrix":
        return cls(rows, len(columns), dict(enumerate(columns)))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> LaurentPoly:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols}")
        return self._cols.get(j, {}).get(i, ZERO)

    def column(self, j: int) -> Column:
        return dict(self._cols.get(j, {}))

    def row(self, i: int) -> Column:
        return {j: col[i] for j, col in self._cols.items() if i in col}

    def entries(self) -> Iterator[Tuple[int, int, LaurentPoly]]:
        """Nonzero entries in (row, col) order."""
        for i, j, v in sorted((i, j, v) for j, col in self._cols.items() for i, v in col.items()):
            yield i, j, v

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    def is_zero(self) -> bool:
        return not self._cols

    def to_dense(self) -> List[List[LaurentPoly]]:
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for j, col in self._cols.items():
            for i, v in col.items():
                out[i][j] = v
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and self._cols == other._cols

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, frozenset((j, frozenset(c.items())) for j, c in self._cols.items())))

    def __repr__(self) -> str:
        return f"RingMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def __str__(self) -> str:
        from ..laurent import pretty

        dense = [[pretty(v) for v in row] for row in self.to_dense()]
        if not dense or not self.cols:
            return f"[{self.rows}x{self.cols} empty]"
        width = max(len(s) for row in dense for s in row)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in row) + " ]" for row in dense)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        data = {j: dict(c) for j, c in self._cols.items()}
        for j, col in other._cols.items():
            tgt = data.setdefault(j, {})
            for i, v in col.items():
                s = add(tgt[i], v) if i in tgt else v
                if s:
                    tgt[i] = s
                else:
                    del tgt[i]
            if not tgt:
                del data[j]
        return RingMatrix._wrap(self.rows, self.cols, data)

    def __neg__(self) -> "RingMatrix":
        return RingMatrix._wrap(self.rows, self.cols, {j: {i: -v for i, v in c.items()} for j, c in self._cols.items()})

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + (-other)

    def scale(self, c) -> "RingMatrix":
        c = LaurentPoly.coerce(c)
        if not c:
            return RingMatrix.zeros(self.rows, self.cols)
        return RingMatrix._wrap(self.rows, self.cols, {j: {i: mul(c, v) for i, v in col.items()} for j, col in self._cols.items()})

    def __mul__(self, other):
        if isinstance(other, RingMatrix):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        return compose(self, other)

    def transpose(self) -> "RingMatrix":
        data: Dict[int, Column] = {}
        for j, col in self._cols.items():
            for i, v in col.items():
                data.setdefault(i, {})[j] = v
        return RingMatrix._wrap(self.cols, self.rows, data)

    @property
    def T(self) -> "RingMatrix":
        return self.transpose()

    def apply(self, vector: Mapping[int, LaurentPoly]) -> Column:
        """Image of a sparse vector ``{basis index: coefficient}``."""
        out: Column = {}
        for j, c in vector.items():
            if not c:
                continue
            for i, v in self._cols.get(j, {}).items():
                t = mul(c, v)
                s = add(out[i], t) if i in out else t
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RingMatrix":
        rpos = {r: k for k, r in enumerate(rows)}
        data = {}
        for k, j in enumerate(cols):
            col = {rpos[i]: v for i, v in self._cols.get(j, {}).items() if i in rpos}
            if col:
                data[k] = col
        return RingMatrix._wrap(len(rows), len(cols), data)


def compose(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """The product ``a @ b`` (apply ``b`` first)."""
    if a.cols != b.rows:
        raise ValueError(f"cannot compose {a.rows}x{a.cols} with {b.rows}x{b.cols}")
    data = {}
    for j, col in b._cols.items():
        out = a.apply(col)
        if out:
            data[j] = out
    return RingMatrix._wrap(a.rows, b.cols, data)


def kron(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """Kronecker product; entry ``(i*rb + k, j*cb + l)`` is ``a[i,j] * b[k,l]``."""
    rb, cb = b.rows, b.cols
    data: Dict[int, Column] = {}
    for j, acol in a._cols.items():
        for l, bcol in b._cols.items():
            col = {}
            for i, av in acol.items():
                base = i * rb
                for k, bv in bcol.items():
                    col[base + k] = mul(av, bv)
            data[j * cb + l] = col
    return RingMatrix._wrap(a.rows * rb, a.cols * cb, data)


def kron_all(mats: Iterable[RingMatrix]) -> RingMatrix:
    out = RingMatrix.identity(1)
    for m in mats:
        out = kron(out, m)
    return out


def compose_all(mats: Sequence[RingMatrix]) -> RingMatrix:
    """``mats[0] @ mats[1] @ ...`` (the last one is applied first)."""
    out = mats[-1]
    for m in reversed(mats[:-1]):
        out = compose(m, out)
    return out


def identity_tensor(n: int) -> RingMatrix:
    """Identity on V^{(x)n}."""
    return RingMatrix.identity(2**n)


def mat_equal_upto_column_order(a: RingMatrix, b: RingMatrix) -> bool:
    """Entrywise equality of two same-shape matrices (raises on shape mismatch)."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return a == b


def column_sums(a: RingMatrix) -> List[LaurentPoly]:
    sums = [ZERO] * a.cols
    for j, col in a._cols.items():
        s = ZERO
        for v in col.values():
            s = add(s, v)
        sums[j] = s
    return sums
