import pytest

from golden_tables import d3_reference, d4_reference
from ybh import differentials as D
from ybh.laurent import ONE, ZERO, Y
from ybh.linalg import RingMatrix, compose, kron, kron_all, mat_equal_upto_column_order, tensor_index
from ybh.ybcore import I1, skein_maps

y = Y
S = skein_maps()


# -- closed-form coefficients ---------------------------------------------------------------

def test_theta_examples():
    assert D.theta((1, 2)) == -(y**2)
    assert D.theta((1, 1)) == ZERO
    assert D.theta((2, 1)) == ONE
    with pytest.raises(ValueError):
        D.theta((1,))


def test_tau_examples():
    assert D.tau((1, 2)) == -(y**2)
    assert D.tau((2, 2)) == ZERO
    # exponent 2*1 - 2*(3-2) + 1 on top of alpha(e2 e1) = 1/y
    assert D.tau((2, 1, 1)) == ONE
    with pytest.raises(ValueError):
        D.tau((2,))


def printed_tau(indices):
    """Variant with +2(l-2) in the exponent instead of -2(l-2)."""
    l = len(indices)
    a = D._alpha(indices[0], indices[1])
    return a * y ** (2 * sum(indices[2:]) + 2 * (l - 2) + 1) if a else ZERO


def h_prime_from(tau_fn, k):
    cols = []
    for flat in range(2**k):
        idx = D._digits(flat, k)
        c = tau_fn(idx)
        rest = idx[2:]
        cols.append({D._flat(rest + (1,)): c, D._flat(rest + (2,)): -c} if c else {})
    return RingMatrix.from_columns(2 ** (k - 1), cols)


def test_printed_tau_exponent_is_inconsistent():
    assert printed_tau((2, 1, 1)) == y**4
    assert h_prime_from(D.tau, 3) == D.generator("h'", 3).matrix
    assert h_prime_from(printed_tau, 3) != D.generator_from_pieces("h'", 3)
    # swapping it into d_3 breaks agreement with the curtain construction
    d3 = D.d_skein(3) - D.generator("h'", 3).matrix + h_prime_from(printed_tau, 3)
    assert d3 != D.d_curtain(3)


# -- generators -------------------------------------------------------------------------------

def test_generator_small_cases():
    assert D.generator("g", 2).matrix == S.J
    assert D.generator("h", 2).matrix == S.J
    assert D.generator("g'", 1).matrix == S.mu
    assert D.generator("h'", 1).matrix == S.mu
    assert D.generator("g", 1).matrix == I1
    col = D.generator("g'", 2).matrix.column(tensor_index(1, 2))
    assert col == {tensor_index(2): -(y**2), tensor_index(1): y**2}
    with pytest.raises(ValueError):
        D.generator("f", 2)
    with pytest.raises(ValueError):
        D.generator("g", 0)


@pytest.mark.parametrize("kind", ["g", "g'", "h", "h'"])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_generator_matches_cup_cap_composition(kind, k):
    assert D.generator(kind, k).matrix == D.generator_from_pieces(kind, k)


def test_generator_shapes():
    for k in range(2, 5):
        assert D.generator("g", k).matrix.shape == (2**k, 2**k)
        assert D.generator("g'", k).matrix.shape == (2 ** (k - 1), 2**k)


# -- words ----------------------------------------------------------------------------------------

def test_enumerate_degree_three():
    assert sorted(str(w) for w in D.enumerate_sn(3, "left")) == ["g1' g1^2", "g1' g2", "g3'"]
    assert sorted(str(w) for w in D.enumerate_sn(3, "right")) == ["h1^2 h1'", "h2 h1'", "h3'"]


def test_enumerate_degree_two_excludes_odd_identity_run():
    assert [str(w) for w in D.enumerate_sn(2, "left")] == ["g2'"]


def test_enumerate_degree_four():
    got = sorted(str(w) for w in D.enumerate_sn(4, "left"))
    assert got == sorted(["g1' g1 g2", "g1' g3", "g2' g1^2", "g2' g2", "g4'"])
    assert all(w.arity == 4 for w in D.enumerate_sn(4, "left"))
    right = sorted(str(w) for w in D.enumerate_sn(4, "right"))
    assert right == sorted(["h2 h1 h1'", "h3 h1'", "h1^2 h2'", "h2 h2'", "h4'"])


def test_enumeration_has_no_duplicates():
    for n in range(1, 9):
        words = D.enumerate_sn(n)
        assert len({(w.primed_arity, w.arities()) for w in words}) == len(words)


def test_word_invariants_enforced():
    with pytest.raises(ValueError):
        D.GeneratorWord("left", 1, (), 1)
    with pytest.raises(ValueError):
        D.GeneratorWord("left", 1, ((2, 1), (1, 1)), 0)


# -- the three constructions ------------------------------------------------------------------------

def test_low_degree_differentials_vanish():
    assert D.d_curtain(1) == RingMatrix.zeros(1, 2)
    assert D.d_skein(1).is_zero()
    assert D.d_skein(2) == RingMatrix.zeros(2, 4)
    assert D.d_curtain(2).is_zero()
    assert D.d_psi(2).is_zero()


def test_d3_matches_reference_columns():
    assert D.d_skein(3) == d3_reference()
    nonzero = {j for _, j, _ in D.d_skein(3).entries()}
    assert nonzero == {tensor_index(1, 1, 2), tensor_index(1, 2, 2)}


def test_d4_matches_reference_table():
    assert mat_equal_upto_column_order(D.d_skein(4), d4_reference())
    row = D.d_skein(4).column(tensor_index(1, 1, 1, 2))
    assert row == {
        tensor_index(1, 1, 1): y**6 - y**2,
        tensor_index(1, 2, 1): y**2 - y**4,
        tensor_index(2, 1, 1): y**4 - y**6,
    }


@pytest.mark.parametrize("n", range(1, 9))
def test_three_constructions_agree(n):
    assert D.d_skein(n) == D.d_curtain(n) == D.d_psi(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_chain_condition(n):
    assert compose(D.d_skein(n), D.d_skein(n + 1)).is_zero()


def test_differential_dispatch():
    assert D.differential(3, "curtain") == D.d_curtain(3)
    with pytest.raises(ValueError):
        D.differential(3, "magic")
    with pytest.raises(ValueError):
        D.d_skein(0)


def test_split_into_signed_curtain_sums():
    for n in range(1, 7):
        right_mirror = D._sum(
            [D.curtain_right(n + 1 - i, n).scale((-1) ** i) for i in range(1, n + 1)], 2 ** (n - 1), 2**n
        )
        assert D.d_curtain(n) == D.d_left(n) - right_mirror
        assert D.d_curtain(n) == D.d_left(n) + D.d_right(n).scale((-1) ** n)


def test_same_index_curtain_reading_is_not_a_differential():
    """Pairing left and right curtains by the same wall distance gives d_2 != 0."""
    def literal(n):
        terms = [(D.curtain_left(i, n) - D.curtain_right(i, n)).scale((-1) ** i) for i in range(1, n + 1)]
        return D._sum(terms, 2 ** (n - 1), 2**n)

    assert not literal(2).is_zero()


# -- Psi, Gamma, Lambda ------------------------------------------------------------------------------

def test_psi_low_degrees():
    mu, lam, beta, xi, alpha = S.mu, S.lambda_l, S.beta, S.xi, S.alpha
    assert D.psi(0) == lam
    assert D.psi(1) == kron(mu, beta) + kron(lam, xi)
    expected = kron_all([mu, I1, beta]) + kron_all([mu, beta, xi]) + kron_all([lam, alpha, beta]) + kron_all([lam, xi, xi])
    assert D.psi(2) == expected


def test_gamma_lambda_small_sets():
    assert set(D.gamma_words(1)) == {(("1",), ("beta",)), (("beta",), ("xi",))}
    assert D.lambda_words(1) == ((("xi",),),)
    gammas, lambdas = D.gamma_lambda_sets(2)
    assert set(m for m in lambdas) == {S.J, kron(S.xi, S.xi)}


@pytest.mark.parametrize("n", range(1, 7))
def test_gamma_lambda_elements_distinct(n):
    for side in ("left", "right"):
        gammas, lambdas = D.gamma_lambda_sets(n, side)
        assert len(set(gammas)) == len(gammas)
        assert len(set(lambdas)) == len(lambdas)


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("side", ["left", "right"])
def test_psi_from_sets_matches_crossing_definition(n, side):
    assert D.psi_from_sets(n, side) == D.psi(n, side)


def test_printed_union_bounds_lose_terms():
    assert D.psi_from_sets(2, bounds="printed") == D.psi(2)
    for n in (3, 4):
        assert D.psi_from_sets(n, bounds="printed") != D.psi(n)


@pytest.mark.parametrize("n", range(2, 8))
def test_outermost_curtain_from_psi(n):
    assert D.curtain_from_psi(n, "left") == D.curtain_left(n, n)
    assert D.curtain_from_psi(n, "right") == D.curtain_right(n, n)


def test_odd_assembly_padding_arity():
    # Psi_{2j-1} (x) alpha (x) 1^pad must take n strands as input
    for n in (3, 5, 7):
        for j in range(1, (n - 1) // 2 + 1):
            assert (2 * j - 1) + 2 + (n - 2 * j - 1) == n
            assert (2 * j - 1) + 2 + (n - 2 * j + 1) != n
