"""The normalized Jones R-matrix, its cup/cap skein pieces, and identity checks.

V is free of rank 2 with basis e1, e2; V (x) V is ordered e1e1, e1e2, e2e1, e2e2.
The walls are M = k with trivial actions, so every action is the row (1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .laurent import ONE, Y
from .linalg import RingMatrix, column_sums, compose, compose_all, identity_tensor, kron, kron_all

y = Y
y2 = Y * Y


@dataclass(frozen=True)
class SkeinMaps:
    R: RingMatrix
    J: RingMatrix
    alpha: RingMatrix
    beta: RingMatrix
    xi: RingMatrix
    zeta: RingMatrix
    lambda_l: RingMatrix
    lambda_r: RingMatrix
    mu: RingMatrix

    @property
    def mu_l(self) -> RingMatrix:
        return self.mu

    @property
    def mu_r(self) -> RingMatrix:
        return self.mu


def r_matrix() -> RingMatrix:
    return RingMatrix.from_dense(
        [
            [1, 0, 0, 0],
            [0, 1 - y2, 1, 0],
            [0, y2, 0, 0],
            [0, 0, 0, 1],
        ]
    )


@lru_cache(maxsize=None)
def skein_maps() -> SkeinMaps:
    alpha = RingMatrix.from_dense([[0, -y, y ** -1, 0]])
    beta = RingMatrix.from_dense([[0], [y], [-y], [0]])
    lam = RingMatrix.from_dense([[-y], [y]])
    return SkeinMaps(
        R=r_matrix(),
        J=RingMatrix.from_dense([[0, 0, 0, 0], [0, -y2, 1, 0], [0, y2, -1, 0], [0, 0, 0, 0]]),
        alpha=alpha,
        beta=beta,
        xi=RingMatrix.from_dense([[y2, 0], [0, 1]]),
        zeta=RingMatrix.from_dense([[1, 0], [0, y2]]),
        lambda_l=lam,
        lambda_r=-lam,
        mu=RingMatrix.from_dense([[1, 1]]),
    )


I1 = RingMatrix.identity(2)


def swap_matrix() -> RingMatrix:
    """The flip e_a (x) e_b -> e_b (x) e_a."""
    return RingMatrix.from_entries(4, 4, {(0, 0): 1, (2, 1): 1, (1, 2): 1, (3, 3): 1})


# -- predicates ----------------------------------------------------------------

def check_skein(m: RingMatrix | None = None) -> bool:
    """R == I + beta alpha."""
    s = skein_maps()
    m = s.R if m is None else m
    return m == RingMatrix.identity(4) + compose(s.beta, s.alpha)


def check_ybe(m: RingMatrix) -> bool:
    a = kron(m, I1)
    b = kron(I1, m)
    return compose_all([a, b, a]) == compose_all([b, a, b])


def check_column_unital(m: RingMatrix) -> bool:
    return all(c == ONE for c in column_sums(m))


def check_wall_condition(m: RingMatrix) -> bool:
    """Left and right wall conditions for the trivial actions on M = k."""
    mu = skein_maps().mu
    left = compose(mu, kron(mu, I1))
    right = compose(mu, kron(I1, mu))
    return compose(left, m) == left and compose(right, m) == right


def loop_identities() -> Dict[str, bool]:
    s = skein_maps()
    return {
        "alpha beta = -(y^2+1)": compose(s.alpha, s.beta) == RingMatrix.from_dense([[-(y2 + 1)]]),
        "(alpha.1)(1.beta) = xi": compose(kron(s.alpha, I1), kron(I1, s.beta)) == s.xi,
        "(1.alpha)(beta.1) = zeta": compose(kron(I1, s.alpha), kron(s.beta, I1)) == s.zeta,
        "xi zeta = y^2": compose(s.xi, s.zeta) == I1.scale(y2),
        "zeta xi = y^2": compose(s.zeta, s.xi) == I1.scale(y2),
        "alpha (lambda_l.1) = mu zeta": compose(s.alpha, kron(s.lambda_l, I1)) == compose(s.mu, s.zeta),
    }


def check_loop_identities() -> bool:
    return all(loop_identities().values())


def check_lambda_relation() -> bool:
    """lambda_r = -lambda_l, with both obtained by absorbing one end of the cap."""
    s = skein_maps()
    lam_l = compose(kron(s.mu, I1), s.beta)
    lam_r = compose(kron(I1, s.mu), s.beta)
    return lam_l == s.lambda_l and lam_r == s.lambda_r and s.lambda_l + s.lambda_r == RingMatrix.zeros(2, 1)


# -- skew Temperley-Lieb ------------------------------------------------------------

@lru_cache(maxsize=None)
def stl_generator(i: int, n: int) -> RingMatrix:
    """h_i = 1^{i-1} (x) (beta alpha) (x) 1^{n-i-1} on V^{(x)n}."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n = {n}")
    return kron_all([identity_tensor(i - 1), skein_maps().J, identity_tensor(n - i - 1)])


def stl_relations(n: int) -> List[Tuple[str, bool]]:
    """Each relation instance of the skew Temperley-Lieb algebra on n strands.

    The braid-like relation is h_i h_{i+-1} h_i = y^2 h_i.
    """
    if n < 2:
        raise ValueError("need at least two strands")
    h = {i: stl_generator(i, n) for i in range(1, n)}
    out = []
    for i in range(1, n):
        out.append((f"h{i}h{i} = -(y^2+1)h{i}", compose(h[i], h[i]) == h[i].scale(-(y2 + 1))))
    for i in range(1, n - 1):
        out.append((f"h{i}h{i+1}h{i} = y^2 h{i}", compose_all([h[i], h[i + 1], h[i]]) == h[i].scale(y2)))
    for i in range(2, n):
        out.append((f"h{i}h{i-1}h{i} = y^2 h{i}", compose_all([h[i], h[i - 1], h[i]]) == h[i].scale(y2)))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"h{i}h{j} = h{j}h{i}", compose(h[i], h[j]) == compose(h[j], h[i])))
    return out


def check_stl_relations(n: int) -> bool:
    return all(ok for _, ok in stl_relations(n))


def braid_generator(i: int, n: int) -> RingMatrix:
    """sigma_i = 1^{i-1} (x) R (x) 1^{n-i-1}."""
    return kron_all([identity_tensor(i - 1), skein_maps().R, identity_tensor(n - i - 1)])


def all_checks(r: RingMatrix | None = None, stl_max: int = 6) -> List[Tuple[str, bool]]:
    """Every structural predicate, optionally against a replacement R."""
    s = skein_maps()
    m = s.R if r is None else r
    results = [
        ("skein R = I + beta alpha", check_skein(m)),
        ("Yang-Baxter equation", check_ybe(m)),
        ("column unital", check_column_unital(m)),
        ("wall condition", check_wall_condition(m)),
        ("lambda_r = -lambda_l", check_lambda_relation()),
    ]
    results += [(f"loop: {k}", v) for k, v in loop_identities().items()]
    for n in range(2, stl_max + 1):
        results.append((f"skew TL relations n={n}", check_stl_relations(n)))
    return results
