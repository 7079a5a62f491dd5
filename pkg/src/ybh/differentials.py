"""The Yang-Baxter differential d_n : V^{(x)n} -> V^{(x)(n-1)}, three ways.

* :func:`d_curtain` composes R-crossings and a wall action directly.
* :func:`d_skein` sums horizontal words in the cup/cap generators g, g', h, h'.
* :func:`d_psi` assembles the curtains from the Psi operators, themselves
  expanded over the Gamma/Lambda diagram sets (no R involved).

The walls are M = k with trivial action, so C_n is identified with V^{(x)n}.
Left words put the primed generator first; right words are their mirror images.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterator, List, Literal, Sequence, Tuple

from .laurent import ZERO, Y, LaurentPoly
from .linalg import RingMatrix, compose, identity_tensor, kron, kron_all
from .ybcore import skein_maps

Side = Literal["left", "right"]
Kind = Literal["g", "g'", "h", "h'"]
METHODS = ("skein", "curtain", "psi")


def _sum(mats: Sequence[RingMatrix], rows: int, cols: int) -> RingMatrix:
    out = RingMatrix.zeros(rows, cols)
    for m in mats:
        out = out + m
    return out


def _layer(m: RingMatrix, before: int, after: int) -> RingMatrix:
    """1^{before} (x) m (x) 1^{after}."""
    return kron(kron(identity_tensor(before), m), identity_tensor(after))


# -- curtains ------------------------------------------------------------------

@lru_cache(maxsize=None)
def curtain_left(i: int, n: int) -> RingMatrix:
    """Strand i crosses leftwards through strands 1..i-1 and merges into the left wall."""
    if not 1 <= i <= n:
        raise ValueError(f"strand {i} out of range for n = {n}")
    s = skein_maps()
    m = identity_tensor(n)
    for p in range(i - 1, 0, -1):
        m = compose(_layer(s.R, p - 1, n - p - 1), m)
    return compose(_layer(s.mu_l, 0, n - 1), m)


@lru_cache(maxsize=None)
def curtain_right(i: int, n: int) -> RingMatrix:
    """Strand n-i+1 (the i-th from the right) crosses rightwards and merges into the right wall."""
    if not 1 <= i <= n:
        raise ValueError(f"strand {i} out of range for n = {n}")
    s = skein_maps()
    m = identity_tensor(n)
    for p in range(n - i + 1, n):
        m = compose(_layer(s.R, p - 1, n - p - 1), m)
    return compose(_layer(s.mu_r, n - 1, 0), m)


@lru_cache(maxsize=None)
def d_curtain(n: int) -> RingMatrix:
    """d_n = sum_i (-1)^i [left curtain of strand i - right curtain of strand i].

    Both curtains of a summand move the same strand (the i-th from the left);
    in right-indexed terms that is ``curtain_right(n + 1 - i, n)``.
    """
    if n < 1:
        raise ValueError("differentials start at n = 1")
    terms = []
    for i in range(1, n + 1):
        t = curtain_left(i, n) - curtain_right(n + 1 - i, n)
        terms.append(t if i % 2 == 0 else -t)
    return _sum(terms, 2 ** (n - 1), 2**n)


def d_left(n: int) -> RingMatrix:
    """Signed left part sum_i (-1)^i d^l_{i,n}."""
    return _sum([curtain_left(i, n).scale((-1) ** i) for i in range(1, n + 1)], 2 ** (n - 1), 2**n)


def d_right(n: int) -> RingMatrix:
    """Signed right part sum_i (-1)^i d^r_{i,n}, i counted from the right wall."""
    return _sum([curtain_right(i, n).scale((-1) ** i) for i in range(1, n + 1)], 2 ** (n - 1), 2**n)


# -- closed-form generators ---------------------------------------------------------

def _alpha(i: int, j: int) -> LaurentPoly:
    if i == j:
        return ZERO
    return Y ** (j - i) * (-1) ** i


def theta(indices: Sequence[int]) -> LaurentPoly:
    """Coefficient of the left generators g_k, g'_k on e_{i_1} (x) ... (x) e_{i_k}."""
    k = len(indices)
    if k < 2:
        raise ValueError("theta needs at least two indices")
    a = _alpha(indices[-2], indices[-1])
    if not a:
        return ZERO
    return a * Y ** (4 * (k - 2) - 2 * sum(indices[:-2]) + 1)


def tau(indices: Sequence[int]) -> LaurentPoly:
    """Coefficient of the right generators h_l, h'_l on e_{i_1} (x) ... (x) e_{i_l}.

    The cup closes strands 1 and 2; each remaining strand picks up zeta(e_i) = y^{2i-2}.
    """
    l = len(indices)
    if l < 2:
        raise ValueError("tau needs at least two indices")
    a = _alpha(indices[0], indices[1])
    if not a:
        return ZERO
    return a * Y ** (2 * sum(indices[2:]) - 2 * (l - 2) + 1)


@dataclass(frozen=True)
class GeneratorMap:
    kind: str
    arity: int
    matrix: RingMatrix


def _digits(flat: int, k: int) -> Tuple[int, ...]:
    return tuple(((flat >> (k - 1 - t)) & 1) + 1 for t in range(k))


def _flat(digits: Sequence[int]) -> int:
    idx = 0
    for d in digits:
        idx = 2 * idx + (d - 1)
    return idx


@lru_cache(maxsize=None)
def generator(kind: str, arity: int) -> GeneratorMap:
    """g_k, g'_k, h_k or h'_k as a matrix built column by column from theta/tau."""
    if kind not in ("g", "g'", "h", "h'"):
        raise ValueError(f"unknown generator kind {kind!r}")
    if arity < 1:
        raise ValueError("arity must be positive")
    s = skein_maps()
    primed = kind.endswith("'")
    if arity == 1:
        return GeneratorMap(kind, 1, s.mu if primed else RingMatrix.identity(2))
    k = arity
    out_dim = k - 1 if primed else k
    cols = []
    for flat in range(2**k):
        idx = _digits(flat, k)
        col = {}
        if kind in ("g", "g'"):
            c = theta(idx)
            rest = idx[:-2]
            pieces = [((2,), 1), ((1,), -1)] if primed else [((1, 2), 1), ((2, 1), -1)]
            if c:
                for head, sgn in pieces:
                    col[_flat(head + rest)] = c * sgn
        else:
            c = tau(idx)
            rest = idx[2:]
            pieces = [((1,), 1), ((2,), -1)] if primed else [((1, 2), 1), ((2, 1), -1)]
            if c:
                for tail, sgn in pieces:
                    col[_flat(rest + tail)] = c * sgn
        cols.append(col)
    return GeneratorMap(kind, k, RingMatrix.from_columns(2**out_dim, cols))


def generator_from_pieces(kind: str, arity: int) -> RingMatrix:
    """The same generators composed from cup, cap, zig-zags and the curtain vectors."""
    s = skein_maps()
    primed = kind.endswith("'")
    if arity == 1:
        return s.mu if primed else RingMatrix.identity(2)
    k = arity
    if kind in ("g", "g'"):
        head = kron(s.mu, RingMatrix.identity(2)) if primed else None
        cap = s.beta if head is None else compose(head, s.beta)
        return compose(kron(cap, kron_all([s.xi] * (k - 2))), _layer(s.alpha, k - 2, 0))
    tail = kron(RingMatrix.identity(2), s.mu) if primed else None
    cap = s.beta if tail is None else compose(tail, s.beta)
    return compose(kron(kron_all([s.zeta] * (k - 2)), cap), _layer(s.alpha, 0, k - 2))


# -- words ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorWord:
    """g'_{i0} g_{i1}^{k(1)} ... g_{ih}^{k(h)} g_1^{2k}, or its right-hand mirror."""

    side: str
    primed_arity: int
    body: Tuple[Tuple[int, int], ...]
    trailing_identity: int

    def __post_init__(self):
        if self.trailing_identity % 2:
            raise ValueError("trailing identity run must have even length")
        if self.body and self.body[-1][0] == 1:
            raise ValueError("the last body arity must not be 1")

    @property
    def arity(self) -> int:
        return self.primed_arity + sum(a * m for a, m in self.body) + self.trailing_identity

    def arities(self) -> Tuple[int, ...]:
        """Unprimed arities after the primed generator, read away from the wall."""
        flat = [a for a, m in self.body for _ in range(m)]
        return tuple(flat + [1] * self.trailing_identity)

    def factors(self) -> List[GeneratorMap]:
        """Generator maps in tensor (left-to-right) order."""
        if self.side == "left":
            return [generator("g'", self.primed_arity)] + [generator("g", a) for a in self.arities()]
        return [generator("h", a) for a in reversed(self.arities())] + [generator("h'", self.primed_arity)]

    def matrix(self) -> RingMatrix:
        return kron_all([f.matrix for f in self.factors()])

    def __str__(self) -> str:
        letter = "g" if self.side == "left" else "h"
        parts = [f"{letter}{self.primed_arity}'"]
        for a, m in self.body:
            parts.append(f"{letter}{a}" + (f"^{m}" if m > 1 else ""))
        if self.trailing_identity:
            parts.append(f"{letter}1^{self.trailing_identity}")
        if self.side == "right":
            parts = parts[1:][::-1] + parts[:1]
        return " ".join(parts)


def _compositions(m: int) -> Iterator[Tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in _compositions(m - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_sn(n: int, side: str = "left") -> Tuple[GeneratorWord, ...]:
    """All words of total arity n whose trailing run of identities has even length."""
    if n < 1:
        raise ValueError("n must be positive")
    words = []
    for i0 in range(1, n + 1):
        for comp in _compositions(n - i0):
            t = len(comp)
            while t and comp[t - 1] == 1:
                t -= 1
            trailing = len(comp) - t
            if trailing % 2:
                continue
            body = tuple((a, len(list(g))) for a, g in groupby(comp[:t]))
            words.append(GeneratorWord(side, i0, body, trailing))
    return tuple(words)


@lru_cache(maxsize=None)
def d_skein(n: int) -> RingMatrix:
    """d_n = (-1)^n sum(left words) + sum(right words)."""
    if n < 1:
        raise ValueError("differentials start at n = 1")
    rows, cols = 2 ** (n - 1), 2**n
    left = _sum([w.matrix() for w in enumerate_sn(n, "left")], rows, cols)
    right = _sum([w.matrix() for w in enumerate_sn(n, "right")], rows, cols)
    return (left if n % 2 == 0 else -left) + right


# -- Psi / Gamma / Lambda ---------------------------------------------------------------

@lru_cache(maxsize=None)
def psi(n: int, side: str = "left") -> RingMatrix:
    """Psi_n : V^{(x)n} -> V^{(x)(n+1)} from its crossing definition.

    Left: cap on the right end, its left strand crosses to the left wall.
    Right (Psi'_n): cap on the left end, its right strand crosses to the right wall.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    s = skein_maps()
    if side == "left":
        return compose(kron(curtain_left(n + 1, n + 1), identity_tensor(1)), _layer(s.beta, n, 0))
    return compose(kron(identity_tensor(1), curtain_right(n + 1, n + 1)), _layer(s.beta, 0, n))


Block = Tuple  # ("1",), ("xi",), ("zeta",), ("beta",), ("cupcap", m), ("capcup", m)


@lru_cache(maxsize=None)
def _block_matrix(block: Block) -> RingMatrix:
    s = skein_maps()
    name = block[0]
    if name == "1":
        return RingMatrix.identity(2)
    if name == "xi":
        return s.xi
    if name == "zeta":
        return s.zeta
    if name == "beta":
        return s.beta
    m = block[1]
    if name == "cupcap":  # alpha . 1^{m-2} . beta
        return kron_all([s.alpha, identity_tensor(m - 2), s.beta])
    if name == "capcup":  # beta . 1^{m-2} . alpha
        return kron_all([s.beta, identity_tensor(m - 2), s.alpha])
    raise ValueError(f"unknown block {block!r}")


def _gamma_upper(n: int, bounds: str) -> int:
    return n if bounds == "derived" else n - 2


def _lambda_upper(n: int, bounds: str) -> int:
    return n - 1 if bounds == "derived" else n - 2


@lru_cache(maxsize=None)
def gamma_words(n: int, side: str = "left", bounds: str = "derived") -> Tuple[Tuple[Block, ...], ...]:
    """Gamma^{(n, n+2)} as block sequences (left to right).

    ``bounds="printed"`` truncates the middle union at m = n-2 instead of m = n.
    """
    if n < 0:
        return ()
    zig = ("xi",) if side == "left" else ("zeta",)
    if n == 0:
        return ((("beta",),),)
    out: List[Tuple[Block, ...]] = []
    for g in gamma_words(n - 1, side, bounds):
        out.append(g + (zig,) if side == "left" else (zig,) + g)
    for m in range(2, _gamma_upper(n, bounds) + 1):
        for g in gamma_words(n - m, side, bounds):
            out.append(g + (("cupcap", m),) if side == "left" else (("capcup", m),) + g)
    ones = (("1",),) * n
    out.append(ones + (("beta",),) if side == "left" else (("beta",),) + ones)
    return tuple(out)


@lru_cache(maxsize=None)
def lambda_words(n: int, side: str = "left", bounds: str = "derived") -> Tuple[Tuple[Block, ...], ...]:
    """Lambda^{(n, n)} as block sequences; Lambda^{(0,0)} is the empty word."""
    if n == 0:
        return ((),)
    zig = ("xi",) if side == "left" else ("zeta",)
    if n == 1:
        return ((zig,),)
    out: List[Tuple[Block, ...]] = []
    for w in lambda_words(n - 1, side, bounds):
        out.append(w + (zig,) if side == "left" else (zig,) + w)
    for m in range(2, _lambda_upper(n, bounds) + 1):
        for w in lambda_words(n - m, side, bounds):
            out.append(w + (("cupcap", m),) if side == "left" else (("capcup", m),) + w)
    out.append((("cupcap", n),) if side == "left" else (("capcup", n),))
    return tuple(out)


def _word_matrix(word: Tuple[Block, ...]) -> RingMatrix:
    return kron_all([_block_matrix(b) for b in word])


def gamma_lambda_sets(n: int, side: str = "left", bounds: str = "derived") -> Tuple[List[RingMatrix], List[RingMatrix]]:
    """Matrices of Gamma^{(n,n+2)} and Lambda^{(n,n)}."""
    return (
        [_word_matrix(w) for w in gamma_words(n, side, bounds)],
        [_word_matrix(w) for w in lambda_words(n, side, bounds)],
    )


@lru_cache(maxsize=None)
def psi_from_sets(n: int, side: str = "left", bounds: str = "derived") -> RingMatrix:
    """sum_{Gamma^{(n-1,n+1)}} mu.psi + sum_{Lambda^{(n,n)}} lambda.phi (mirrored on the right)."""
    s = skein_maps()
    if n == 0:
        return s.lambda_l if side == "left" else s.lambda_r
    mu = s.mu_l if side == "left" else s.mu_r
    lam = s.lambda_l if side == "left" else s.lambda_r
    terms = []
    for w in gamma_words(n - 1, side, bounds):
        m = _word_matrix(w)
        terms.append(kron(mu, m) if side == "left" else kron(m, mu))
    for w in lambda_words(n, side, bounds):
        m = _word_matrix(w)
        terms.append(kron(lam, m) if side == "left" else kron(m, lam))
    return _sum(terms, 2 ** (n + 1), 2**n)


def curtain_from_psi(n: int, side: str = "left") -> RingMatrix:
    """d^l_{n,n} = sum_{m=2}^{n} Psi_{n-m}.alpha.1^{m-2} + mu.1^{n-1} (mirrored on the right)."""
    s = skein_maps()
    terms = []
    for m in range(2, n + 1):
        p = psi_from_sets(n - m, side)
        if side == "left":
            terms.append(kron_all([p, s.alpha, identity_tensor(m - 2)]))
        else:
            terms.append(kron_all([identity_tensor(m - 2), s.alpha, p]))
    terms.append(_layer(s.mu_l, 0, n - 1) if side == "left" else _layer(s.mu_r, n - 1, 0))
    return _sum(terms, 2 ** (n - 1), 2**n)


def _psi_part(n: int, side: str) -> RingMatrix:
    s = skein_maps()
    terms = []

    def piece(p: RingMatrix, pad: int) -> RingMatrix:
        if side == "left":
            return kron_all([p, s.alpha, identity_tensor(pad)])
        return kron_all([identity_tensor(pad), s.alpha, p])

    if n % 2 == 0:
        for i in range(1, n // 2 + 1):
            terms.append(piece(psi_from_sets(2 * i - 2, side), n - 2 * i))
    else:
        wall = _layer(s.mu_l, 0, n - 1) if side == "left" else _layer(s.mu_r, n - 1, 0)
        terms.append(-wall)
        for j in range(1, (n - 1) // 2 + 1):
            terms.append(-piece(psi_from_sets(2 * j - 1, side), n - 2 * j - 1))
    return _sum(terms, 2 ** (n - 1), 2**n)


@lru_cache(maxsize=None)
def d_psi(n: int) -> RingMatrix:
    """d_n from the Psi decomposition of both signed curtain sums."""
    if n < 1:
        raise ValueError("differentials start at n = 1")
    left, right = _psi_part(n, "left"), _psi_part(n, "right")
    return left + (right if n % 2 == 0 else -right)


def differential(n: int, method: str = "skein") -> RingMatrix:
    if method == "skein":
        return d_skein(n)
    if method == "curtain":
        return d_curtain(n)
    if method == "psi":
        return d_psi(n)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
