"""Smith normal form and ranks over the Euclidean domain k = Q[y, y^-1]."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from ..laurent import ONE, ZERO, LaurentPoly, add, canonicalize, euclid_div, gcd, mul
from .matrix import RingMatrix

PIVOT_STRATEGIES = ("min_norm", "first")


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors of a matrix ``A`` with ``u @ A @ v == D``.

    ``diag`` holds the nonzero diagonal of ``D`` in canonical form, units
    (rendered as 1) first, each entry dividing the next.  ``u``/``v`` are
    ``None`` when transforms were not requested.
    """

    shape: Tuple[int, int]
    diag: Tuple[LaurentPoly, ...]
    u: Optional[RingMatrix] = None
    v: Optional[RingMatrix] = None

    @property
    def rank(self) -> int:
        return len(self.diag)

    @property
    def torsion(self) -> Tuple[LaurentPoly, ...]:
        """Non-unit invariant factors."""
        return tuple(d for d in self.diag if not d.is_unit())

    @property
    def unit_count(self) -> int:
        return sum(1 for d in self.diag if d.is_unit())

    def diagonal_matrix(self) -> RingMatrix:
        rows, cols = self.shape
        return RingMatrix.from_entries(rows, cols, {(k, k): d for k, d in enumerate(self.diag)})


class _Work:
    """Mutable sparse working copy with optional transform tracking."""

    def __init__(self, a: RingMatrix, track: bool):
        self.rows: Dict[int, Dict[int, LaurentPoly]] = {}
        self.colidx: Dict[int, Set[int]] = {}
        for i, j, v in a.entries():
            self.rows.setdefault(i, {})[j] = v
            self.colidx.setdefault(j, set()).add(i)
        self.track = track
        if track:
            # u stored by rows, v stored by columns
            self.u = {i: {i: ONE} for i in range(a.rows)}
            self.v = {j: {j: ONE} for j in range(a.cols)}

    def _set(self, i: int, j: int, val: LaurentPoly) -> None:
        row = self.rows.setdefault(i, {})
        if val:
            row[j] = val
            self.colidx.setdefault(j, set()).add(i)
        else:
            row.pop(j, None)
            s = self.colidx.get(j)
            if s is not None:
                s.discard(i)
                if not s:
                    del self.colidx[j]
            if not row:
                del self.rows[i]

    @staticmethod
    def _axpy(target: Dict[int, LaurentPoly], q: LaurentPoly, src: Dict[int, LaurentPoly]) -> None:
        for k, v in src.items():
            t = mul(q, v)
            s = add(target[k], t) if k in target else t
            if s:
                target[k] = s
            else:
                target.pop(k, None)

    def row_addmul(self, i: int, p: int, q: LaurentPoly) -> None:
        """row_i += q * row_p"""
        src = self.rows.get(p, {})
        for j, v in list(src.items()):
            cur = self.rows.get(i, {}).get(j, ZERO)
            self._set(i, j, add(cur, mul(q, v)))
        if self.track:
            self._axpy(self.u[i], q, self.u[p])

    def col_addmul(self, j: int, p: int, q: LaurentPoly) -> None:
        """col_j += q * col_p"""
        for i in list(self.colidx.get(p, ())):
            cur = self.rows.get(i, {}).get(j, ZERO)
            self._set(i, j, add(cur, mul(q, self.rows[i][p])))
        if self.track:
            self._axpy(self.v[j], q, self.v[p])

    def row_scale(self, i: int, c: LaurentPoly) -> None:
        for j, v in list(self.rows.get(i, {}).items()):
            self.rows[i][j] = mul(c, v)
        if self.track:
            self.u[i] = {k: mul(c, v) for k, v in self.u[i].items()}

    def remove(self, i: int, j: int) -> None:
        self._set(i, j, ZERO)


def _pick(work: _Work, strategy: str) -> Tuple[int, int]:
    best = None
    for i, row in work.rows.items():
        for j, v in row.items():
            key = (len(v.coeffs), i, j) if strategy == "min_norm" else (i, j)
            if best is None or key < best:
                best = key
    return best[-2], best[-1]


def snf(a: RingMatrix, transforms: bool = True, strategy: str = "min_norm") -> SnfResult:
    """Smith normal form by Euclidean elimination.

    ``strategy`` selects the pivot: ``"min_norm"`` takes the entry of least
    exponent span (ties by (row, col)); ``"first"`` takes the first nonzero
    entry in row-major order.  Both give the same invariant factors.
    """
    if strategy not in PIVOT_STRATEGIES:
        raise ValueError(f"unknown pivot strategy {strategy!r}")
    w = _Work(a, transforms)
    pivots: List[Tuple[int, int, LaurentPoly]] = []

    while w.rows:
        r, c = _pick(w, strategy)
        while True:
            p = w.rows[r][c]
            dirty = False
            for i in sorted(w.colidx.get(c, ()) - {r}):
                q, rem = euclid_div(w.rows[i][c], p)
                if q:
                    w.row_addmul(i, r, -q)
                dirty = dirty or bool(rem)
            for j in sorted(set(w.rows.get(r, {})) - {c}):
                q, rem = euclid_div(w.rows[r][j], p)
                if q:
                    w.col_addmul(j, c, -q)
                dirty = dirty or bool(rem)
            if dirty:
                # a remainder of smaller norm now sits in row r or column c
                cands = [(len(w.rows[r][j].coeffs), r, j) for j in w.rows.get(r, {})]
                cands += [(len(w.rows[i][c].coeffs), i, c) for i in w.colidx.get(c, ())]
                _, r, c = min(cands)
                continue
            if not p.is_unit():
                bad = None
                for i, row in w.rows.items():
                    if i == r:
                        continue
                    for v in row.values():
                        if euclid_div(v, p)[1]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is not None:
                    w.row_addmul(r, bad, ONE)
                    continue
            break
        p = w.rows[r][c]
        canon = ONE if p.is_unit() else canonicalize(p)
        unit = euclid_div(p, canon)[0]
        if unit != ONE:
            w.row_scale(r, unit ** -1)
        w.remove(r, c)
        pivots.append((r, c, canon))

    if not transforms:
        return SnfResult(a.shape, tuple(d for _, _, d in pivots))

    used_r = [r for r, _, _ in pivots]
    used_c = [c for _, c, _ in pivots]
    rset, cset = set(used_r), set(used_c)
    row_order = used_r + [i for i in range(a.rows) if i not in rset]
    col_order = used_c + [j for j in range(a.cols) if j not in cset]
    u = RingMatrix.from_entries(
        a.rows, a.rows, {(k, j): v for k, i in enumerate(row_order) for j, v in w.u[i].items()}
    )
    v = RingMatrix.from_entries(
        a.cols, a.cols, {(i, k): val for k, j in enumerate(col_order) for i, val in w.v[j].items()}
    )
    return SnfResult(a.shape, tuple(d for _, _, d in pivots), u, v)


def invariant_factors(a: RingMatrix, strategy: str = "min_norm") -> Tuple[LaurentPoly, ...]:
    return snf(a, transforms=False, strategy=strategy).diag


def rank(a: RingMatrix) -> int:
    """Rank over the fraction field Q(y), by fraction-free elimination."""
    rows: Dict[int, Dict[int, LaurentPoly]] = {}
    for i, j, v in a.entries():
        rows.setdefault(i, {})[j] = v
    r = 0
    while rows:
        # cheapest pivot: least span, then fewest row entries
        best = None
        for i, row in rows.items():
            for j, v in row.items():
                key = (len(v.coeffs), len(row), i, j)
                if best is None or key < best:
                    best = key
        _, _, pi, pj = best
        prow = rows.pop(pi)
        p = prow[pj]
        r += 1
        for i in [i for i, row in rows.items() if pj in row]:
            row = rows[i]
            a_i = row[pj]
            if p.is_unit():
                f_row, f_piv = ONE, euclid_div(a_i, p)[0]
            else:
                g = gcd(p, a_i)
                f_row, f_piv = euclid_div(p, g)[0], euclid_div(a_i, g)[0]
            new = {}
            for j in set(row) | set(prow):
                val = add(mul(f_row, row.get(j, ZERO)), -mul(f_piv, prow.get(j, ZERO)))
                if val:
                    new[j] = val
            new.pop(pj, None)
            if new:
                rows[i] = new
            else:
                del rows[i]
    return r


def kernel_rank(a: RingMatrix) -> int:
    return a.cols - rank(a)


def determinant(a: RingMatrix) -> LaurentPoly:
    """Exact determinant by cofactor-free Bareiss elimination (small matrices)."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    m = a.to_dense()
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = add(mul(m[i][j], m[k][k]), -mul(m[i][k], m[k][j]))
                m[i][j] = euclid_div(num, prev)[0]
        prev = m[k][k]
    d = m[n - 1][n - 1] if n else ONE
    return -d if sign < 0 else d
