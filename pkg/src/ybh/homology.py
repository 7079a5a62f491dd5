"""Homology and cohomology of the Yang-Baxter complex C_n = V^{(x)n}.

Convention: H_n = ker d_n / im d_{n+1}.  Degree 0 is never reported.

Besides the groups themselves this module checks the Fibonacci-type
prediction for H_n and studies the two constant cycles
e_{j,0} = e_j (x) ... (x) e_j together with their neighbours e_{j,i}.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .differentials import differential
from .laurent import ONE, ZERO, Y, LaurentPoly, canonicalize, gcd_many, parse, pretty, serialize
from .linalg import RingMatrix, compose, rank, snf
from .linalg.snf import SnfResult

Y2 = Y * Y
Y2_MINUS_1 = Y2 - ONE
Y4_MINUS_1 = Y2 * Y2 - ONE


class ChainConditionError(RuntimeError):
    """d_n o d_{n+1} is not zero."""


class CohomologyMismatch(RuntimeError):
    """The transpose-complex and universal-coefficient answers disagree."""


def _y2(e: int) -> LaurentPoly:
    """y^(2e)."""
    return LaurentPoly.monomial(1, 2 * e)


# -- groups ---------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyGroup:
    """k^free_rank (+) k/(t_1) (+) ... with t_1 | t_2 | ... canonical non-units."""

    degree: int
    free_rank: int
    torsion: Tuple[LaurentPoly, ...] = ()

    def __post_init__(self):
        if self.degree < 0 or self.free_rank < 0:
            raise ValueError("degree and free rank must be non-negative")
        tors = tuple(canonicalize(LaurentPoly.coerce(t)) for t in self.torsion)
        for t in tors:
            if not t or t.is_unit():
                raise ValueError(f"torsion factor {pretty(t)} is zero or a unit")
        for a, b in zip(tors, tors[1:]):
            if not a.divides(b):
                raise ValueError(f"torsion factors break the divisibility chain at {pretty(a)} | {pretty(b)}")
        object.__setattr__(self, "torsion", tors)

    def torsion_counts(self) -> Counter:
        return Counter(self.torsion)

    def same_structure(self, other: "HomologyGroup") -> bool:
        """Equal free rank and equal multiset of torsion factors."""
        return self.free_rank == other.free_rank and self.torsion_counts() == other.torsion_counts()

    def to_dict(self, conjecture_agrees: Optional[bool] = None) -> dict:
        out = {"n": self.degree, "free_rank": self.free_rank, "torsion": [serialize(t) for t in self.torsion]}
        if conjecture_agrees is not None:
            out["conjecture_agrees"] = conjecture_agrees
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "HomologyGroup":
        return cls(int(data["n"]), int(data["free_rank"]), tuple(parse(t) for t in data["torsion"]))

    def to_json(self, conjecture_agrees: Optional[bool] = None) -> str:
        return json.dumps(self.to_dict(conjecture_agrees))

    @classmethod
    def from_json(cls, text: str) -> "HomologyGroup":
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> list:
        return [self.degree, self.free_rank, ";".join(serialize(t) for t in self.torsion)]

    @classmethod
    def from_csv_row(cls, row: Sequence[str]) -> "HomologyGroup":
        n, free, tors = row
        return cls(int(n), int(free), tuple(parse(t) for t in tors.split(";") if t.strip()))

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("k" if self.free_rank == 1 else f"k^{self.free_rank}")
        for t, m in sorted(self.torsion_counts().items(), key=lambda kv: (kv[0].high, kv[0].coeffs)):
            q = f"k/({pretty(t)})"
            parts.append(q if m == 1 else f"({q})^{m}")
        return " + ".join(parts) if parts else "0"


CSV_HEADER = ("n", "free_rank", "torsion")


def groups_to_csv(groups: Iterable[HomologyGroup]) -> str:
    buf = io.StringIO()
    # strings quoted, counts bare
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
    buf.write(",".join(CSV_HEADER) + "\n")
    for g in groups:
        writer.writerow(g.csv_row())
    return buf.getvalue()


def groups_from_csv(text: str) -> List[HomologyGroup]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [HomologyGroup.from_csv_row(row) for row in reader if row]


# -- memoized linear algebra per degree ------------------------------------------

@lru_cache(maxsize=None)
def _rank(n: int, method: str) -> int:
    return rank(differential(n, method))


@lru_cache(maxsize=None)
def _snf(n: int, method: str, strategy: str = "min_norm") -> SnfResult:
    return snf(differential(n, method), transforms=False, strategy=strategy)


@lru_cache(maxsize=None)
def check_chain_condition(n: int, method: str = "skein") -> bool:
    """d_n o d_{n+1} == 0."""
    if n < 1:
        raise ValueError("chain condition starts at n = 1")
    return compose(differential(n, method), differential(n + 1, method)).is_zero()


def homology(n: int, method: str = "skein", strategy: str = "min_norm") -> HomologyGroup:
    if n < 1:
        raise ValueError("homology is reported for n >= 1 only")
    if not check_chain_condition(n, method):
        raise ChainConditionError(f"d_{n} o d_{n + 1} != 0")
    boundaries = _snf(n + 1, method, strategy)
    free = 2**n - _rank(n, method) - boundaries.rank
    return HomologyGroup(n, free, boundaries.torsion)


def homology_range(max_n: int, method: str = "skein") -> List[HomologyGroup]:
    return [homology(n, method) for n in range(1, max_n + 1)]


def _cohomology_direct(n: int, method: str) -> HomologyGroup:
    # delta^m = d_m^T : C^{m-1} -> C^m
    delta_next = differential(n + 1, method).transpose()
    delta_here = differential(n, method).transpose()
    free = (2**n - rank(delta_next)) - rank(delta_here)
    return HomologyGroup(n, free, snf(delta_here, transforms=False).torsion)


def _cohomology_uct(n: int, method: str) -> HomologyGroup:
    # 0 -> Ext(H_{n-1}, k) -> H^n -> Hom(H_n, k) -> 0
    free = homology(n, method).free_rank
    # H_0 = coker d_1 is handled directly since degree 0 is never reported
    prev = homology(n - 1, method).torsion if n > 1 else _snf(1, method).torsion
    return HomologyGroup(n, free, prev)


def cohomology(n: int, method: str = "skein") -> HomologyGroup:
    if n < 1:
        raise ValueError("cohomology is reported for n >= 1 only")
    direct = _cohomology_direct(n, method)
    uct = _cohomology_uct(n, method)
    if direct != uct:
        raise CohomologyMismatch(f"H^{n}: transpose complex gives {direct}, UCT gives {uct}")
    return direct


def check_alpha_cocycle() -> bool:
    """The cup alpha: V (x) V -> k is a cocycle that does not vanish on e1 (x) e2."""
    from .ybcore import skein_maps

    alpha = skein_maps().alpha
    closed = compose(alpha, differential(3)).is_zero()
    return closed and bool(alpha[0, 1])


# -- the Fibonacci-type prediction ---------------------------------------------------

@lru_cache(maxsize=None)
def fib_partial_sum(m: int) -> int:
    """s_m = f_1 + ... + f_{m+1}; s_0 = 1 and s_{-1} = 0."""
    if m < -1:
        raise ValueError("s_m is defined for m >= -1")
    a, b, total = 1, 1, 0
    for _ in range(m + 1):
        total += a
        a, b = b, a + b
    return total


@lru_cache(maxsize=None)
def predicted_a(n: int) -> int:
    """Multiplicity of y^2 - 1 solved from 2^n = 2 + a_{n-1} + s_{n-3} + a_n + s_{n-2}."""
    if n < 1:
        raise ValueError("a_n is defined for n >= 1")
    if n == 1:
        return 0
    return 2**n - 2 - predicted_a(n - 1) - fib_partial_sum(n - 3) - fib_partial_sum(n - 2)


@dataclass(frozen=True)
class ConjecturePrediction:
    degree: int
    a: int
    s: int
    predicted: HomologyGroup = field(repr=False)

    def dimension_identity(self) -> bool:
        n = self.degree
        if n < 2:
            return True
        lhs = 2 + predicted_a(n - 1) + fib_partial_sum(n - 3) + self.a + self.s
        return lhs == 2**n


def conjecture_prediction(n: int) -> ConjecturePrediction:
    if n < 1:
        raise ValueError("prediction is made for n >= 1")
    a = predicted_a(n)
    s = fib_partial_sum(n - 2) if n >= 2 else 0
    torsion = (Y2_MINUS_1,) * a + (Y4_MINUS_1,) * s
    return ConjecturePrediction(n, a, s, HomologyGroup(n, 2, torsion))


@dataclass(frozen=True)
class ConjectureRow:
    degree: int
    prediction: ConjecturePrediction
    computed: HomologyGroup

    @property
    def agree(self) -> bool:
        return self.prediction.predicted.same_structure(self.computed)

    @property
    def dimension_ok(self) -> bool:
        return self.prediction.dimension_identity()


def conjecture_report(max_n: int, min_n: int = 2, method: str = "skein") -> List[ConjectureRow]:
    if max_n < 2:
        raise ValueError("the report needs max_n >= 2")
    return [ConjectureRow(n, conjecture_prediction(n), homology(n, method)) for n in range(min_n, max_n + 1)]


# -- the vectors e_{j,i} ------------------------------------------------------------------

@dataclass(frozen=True)
class SpecialVector:
    """e^n_{j,i}: all factors e_j except the other basis vector at position i (i = 0: none)."""

    n: int
    j: int
    i: int

    def __post_init__(self):
        if self.j not in (1, 2):
            raise ValueError("j must be 1 or 2")
        if not 0 <= self.i <= self.n:
            raise ValueError(f"position {self.i} out of range 0..{self.n}")

    @property
    def digits(self) -> Tuple[int, ...]:
        d = [self.j] * self.n
        if self.i:
            d[self.i - 1] = 3 - self.j
        return tuple(d)

    @property
    def flat(self) -> int:
        idx = 0
        for d in self.digits:
            idx = 2 * idx + d - 1
        return idx


def constant_index(n: int, j: int) -> int:
    """Flat index of e_j (x) ... (x) e_j in degree n."""
    return SpecialVector(n, j, 0).flat


def special_image(n: int, j: int, i: int, method: str = "skein") -> Dict[int, LaurentPoly]:
    """The full column d_n(e^n_{j,i}) as ``{flat index: coefficient}``."""
    v = SpecialVector(n, j, i)
    return differential(n, method).column(v.flat)


def constant_coefficient(n: int, j: int, i: int, method: str = "skein") -> LaurentPoly:
    """Coefficient of e^{n-1}_{j,0} in d_n(e^n_{j,i})."""
    return special_image(n, j, i, method).get(constant_index(n - 1, j), ZERO)


def printed_coefficient(n: int, j: int, i: int) -> LaurentPoly:
    """The closed-form table as printed, applied literally; special rows first."""
    SpecialVector(n, j, i)
    if i == 0:
        return ZERO
    odd = n % 2 == 1
    if odd and j == 1:
        if i == 1:
            return Y2
        if i == n:
            return ONE - _y2(n - 1)
        if i % 2:
            return ONE - _y2(2 * ((i + 1) // 2) - 2)
        return _y2(2 * (i // 2) - 1) - Y2
    if odd and j == 2:
        if i == 1:
            return _y2(n - 1) - ONE
        if i % 2:
            return Y2 - _y2(n - 2 * ((i - 1) // 2) - 1)
        return _y2(n - 2 * (i // 2)) - ONE
    if j == 1:
        if i % 2:
            return _y2(2 * ((i + 1) // 2) - 1) - Y2
        return ONE - _y2(2 * (i // 2 - 1))
    if i % 2:
        return Y2 - _y2(n - 2 * ((i + 1) // 2) + 3)
    return _y2(n - 2 * (i // 2) + 2) - ONE


def closed_form_coefficient(n: int, j: int, i: int) -> LaurentPoly:
    """Coefficient of e_{j,0} in d_n(e_{j,i}) for n >= 4, matching the computed columns.

    For j = 1 the value depends only on i; for j = 2 it depends on the parity of n.
    """
    SpecialVector(n, j, i)
    if i == 0:
        return ZERO
    if j == 1:
        if i % 2:
            return ONE - _y2(2 * ((i + 1) // 2) - 2)
        return _y2(2 * (i // 2) - 1) - Y2
    if n % 2:
        if i % 2:
            return _y2(n - 2 * ((i - 1) // 2) - 1) - ONE
        return Y2 - _y2(n - 2 * (i // 2))
    if i % 2:
        return _y2(n - 2 * ((i + 1) // 2) + 1) - Y2
    return ONE - _y2(n - 2 * (i // 2))


@dataclass(frozen=True)
class CoefficientCheck:
    n: int
    j: int
    i: int
    computed: LaurentPoly
    printed: LaurentPoly
    closed_form: LaurentPoly

    @property
    def printed_ok(self) -> bool:
        return self.computed == self.printed

    @property
    def closed_form_ok(self) -> bool:
        return self.computed == self.closed_form


def coefficient_table(n: int, method: str = "skein") -> List[CoefficientCheck]:
    """Every e_{j,0}-coefficient of d_n(e_{j,i}), computed vs the two closed forms."""
    if n < 4:
        raise ValueError("the closed forms are stated for n >= 4")
    return [
        CoefficientCheck(n, j, i, constant_coefficient(n, j, i, method), printed_coefficient(n, j, i), closed_form_coefficient(n, j, i))
        for j in (1, 2)
        for i in range(n + 1)
    ]


def cross_family_zero(n: int, method: str = "skein") -> bool:
    """d_n(e_{j,i}) has no e_{3-j,0} component (checked only where n - 1 >= 2)."""
    return all(
        constant_coefficient_other(n, j, i, method) == ZERO for j in (1, 2) for i in range(n + 1)
    )


def constant_coefficient_other(n: int, j: int, i: int, method: str = "skein") -> LaurentPoly:
    return special_image(n, j, i, method).get(constant_index(n - 1, 3 - j), ZERO)


def constant_cycles_vanish(n: int, method: str = "skein") -> bool:
    """d_n(e_{j,0}) == 0 for j = 1, 2."""
    return all(not special_image(n, j, 0, method) for j in (1, 2))


# -- images of the constant cycles ------------------------------------------------------

def _row_gcd(n: int, j: int, method: str) -> LaurentPoly:
    """Generator of the ideal of e_{j,0}-coordinates over all columns of d_{n+1}."""
    row = differential(n + 1, method).row(constant_index(n, j))
    return gcd_many(row.values()) if any(row.values()) else ZERO


def _rationally_bounding(n: int, j: int, method: str) -> bool:
    """Is some nonzero multiple of e_{j,0} a boundary (rank test over Q(y))?"""
    d = differential(n + 1, method)
    cols = [d.column(c) for c in range(d.cols)] + [{constant_index(n, j): ONE}]
    return rank(RingMatrix.from_columns(d.rows, cols)) == _rank(n + 1, method)


def _family_gcd(values: Iterable[LaurentPoly]) -> LaurentPoly:
    vals = [v for v in values if v]
    return gcd_many(vals) if vals else ZERO


@dataclass(frozen=True)
class AnnihilatorReport:
    """What d_{n+1} does to the constant cycles e_{1,0}, e_{2,0} in degree n.

    ``gcd`` entries generate the ideal of e_{j,0}-coordinates of boundaries;
    ``printed_gcd`` entries are the same ideal computed from the printed table.
    ``in_rational_image`` tells whether any nonzero multiple of e_{j,0} bounds.
    """

    n: int
    gcd: Dict[int, LaurentPoly]
    printed_gcd: Dict[int, LaurentPoly]
    boundary_unit: bool
    printed_boundary_unit: bool
    in_rational_image: Dict[int, bool]

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def annihilator(self) -> LaurentPoly:
        """The odd-degree common value, or the e_{2,0} value in even degree."""
        if self.odd:
            a, b = self.gcd[1], self.gcd[2]
            return a if a == b else gcd_many([a, b])
        return self.gcd[2]

    def summary(self):
        if self.odd:
            return self.annihilator
        return self.boundary_unit, self.annihilator


def annihilator_report(n: int, method: str = "skein") -> AnnihilatorReport:
    if n < 4:
        raise ValueError("annihilator report needs n >= 4")
    m = n + 1
    computed = {j: _row_gcd(n, j, method) for j in (1, 2)}
    printed = {j: _family_gcd(printed_coefficient(m, j, i) for i in range(1, m + 1)) for j in (1, 2)}
    row1 = differential(m, method).row(constant_index(n, 1))
    unit = any(v.is_unit() for v in row1.values())
    printed_unit = any(printed_coefficient(m, 1, i).is_unit() for i in range(1, m + 1))
    bounding = {j: _rationally_bounding(n, j, method) for j in (1, 2)}
    return AnnihilatorReport(n, computed, printed, unit, printed_unit, bounding)
