import json

import pytest
from hypothesis import given, strategies as st

from ybh import homology as H
from ybh.differentials import d_skein
from ybh.laurent import ONE, ZERO, Y, gcd_many
from ybh.linalg import RingMatrix, rank, snf, tensor_index
from ybh.ybcore import skein_maps

y = Y
Q2, Q4 = y**2 - 1, y**4 - 1


# -- groups -------------------------------------------------------------------------------------

@pytest.mark.parametrize(
    "n, free, torsion",
    [
        (1, 2, ()),
        (2, 2, (Q2, Q4)),
        (3, 2, (Q2, Q2, Q4, Q4)),
    ],
)
def test_low_degree_homology(n, free, torsion):
    assert H.homology(n) == H.HomologyGroup(n, free, torsion)


def test_degree_zero_is_not_reported():
    with pytest.raises(ValueError):
        H.homology(0)
    with pytest.raises(ValueError):
        H.cohomology(0)


@pytest.mark.parametrize("n", range(1, 6))
def test_torsion_independent_of_pivot_order(n):
    a = H.homology(n, strategy="min_norm")
    b = H.homology(n, strategy="first")
    assert a.torsion_counts() == b.torsion_counts()


@pytest.mark.parametrize("n", range(1, 7))
def test_rank_bookkeeping(n):
    g = H.homology(n)
    rn, rn1 = rank(d_skein(n)), rank(d_skein(n + 1))
    assert g.free_rank + rn + rn1 == 2**n
    assert len(g.torsion) + snf(d_skein(n + 1), transforms=False).unit_count == rn1


def test_bookkeeping_with_torsion_counted_twice_fails():
    g = H.homology(2)
    assert g.free_rank + len(g.torsion) + rank(d_skein(2)) + rank(d_skein(3)) != 4


def test_group_validation():
    g = H.HomologyGroup(2, 2, (1 - y**2, 1 - y**4))
    assert g.torsion == (Q2, Q4)
    with pytest.raises(ValueError):
        H.HomologyGroup(2, 2, (Q4, Q2))
    with pytest.raises(ValueError):
        H.HomologyGroup(2, 2, (y**3,))
    with pytest.raises(ValueError):
        H.HomologyGroup(2, -1)


def test_group_text_form():
    assert str(H.homology(3)) == "k^2 + (k/(y^2 - 1))^2 + (k/(y^4 - 1))^2"
    assert str(H.HomologyGroup(1, 0)) == "0"


def test_json_record_shape():
    rec = json.loads(H.homology(3).to_json(conjecture_agrees=True))
    assert rec == {
        "n": 3,
        "free_rank": 2,
        "torsion": ["-1 + 1*y^2", "-1 + 1*y^2", "-1 + 1*y^4", "-1 + 1*y^4"],
        "conjecture_agrees": True,
    }


def test_csv_record_shape():
    text = H.groups_to_csv([H.homology(2)])
    assert text == 'n,free_rank,torsion\n2,2,"-1 + 1*y^2;-1 + 1*y^4"\n'
    assert H.groups_from_csv(text) == [H.homology(2)]
    with pytest.raises(ValueError):
        H.groups_from_csv("a,b,c\n")


chains = st.lists(st.sampled_from([1, 2, 4]), max_size=6).map(
    # y^(2^k) - 1 for increasing k forms a divisibility chain
    lambda ks: tuple(y ** (2 * k) - 1 for k in sorted(ks))
)


@given(st.integers(1, 20), st.integers(0, 5), chains)
def test_serialization_roundtrip(n, free, torsion):
    g = H.HomologyGroup(n, free, torsion)
    assert H.HomologyGroup.from_json(g.to_json()) == g
    assert H.groups_from_csv(H.groups_to_csv([g])) == [g]


# -- cohomology ------------------------------------------------------------------------------------

def test_cohomology_examples():
    assert H.cohomology(1) == H.HomologyGroup(1, 2)
    assert H.cohomology(2) == H.HomologyGroup(2, 2)
    assert H.cohomology(3) == H.HomologyGroup(3, 2, (Q2, Q4))


@pytest.mark.parametrize("n", range(1, 6))
def test_direct_and_uct_agree(n):
    assert H._cohomology_direct(n, "skein") == H._cohomology_uct(n, "skein")


def test_ext_of_same_degree_does_not_match():
    # taking torsion from H_n instead of H_{n-1} contradicts the transpose complex at n = 2
    direct = H._cohomology_direct(2, "skein")
    assert direct.torsion != H.homology(2).torsion


def test_alpha_is_a_nontrivial_cocycle():
    assert H.check_alpha_cocycle()
    alpha = skein_maps().alpha
    assert alpha[0, tensor_index(1, 2)] == -y
    col = d_skein(3).column(tensor_index(1, 1, 2))
    terms = [alpha[0, i] * col.get(i, ZERO) for i in range(4)]
    assert terms[1] == (y**2 - 1) * (-y)
    assert terms[2] == y**2 * (y**2 - 1) * y**-1
    assert sum(terms, ZERO) == ZERO


# -- the prediction --------------------------------------------------------------------------------

def test_partial_fibonacci_sums():
    assert [H.fib_partial_sum(m) for m in range(-1, 6)] == [0, 1, 2, 4, 7, 12, 20]
    with pytest.raises(ValueError):
        H.fib_partial_sum(-2)


@pytest.mark.parametrize("n, a, s", [(2, 1, 1), (3, 2, 2), (4, 6, 4)])
def test_prediction_examples(n, a, s):
    p = H.conjecture_prediction(n)
    assert (p.a, p.s) == (a, s)
    assert p.predicted.free_rank == 2
    assert p.predicted.torsion_counts() == {Q2: a, Q4: s}


@given(st.integers(2, 18))
def test_prediction_dimension_identity(n):
    p = H.conjecture_prediction(n)
    assert p.dimension_identity()
    assert p.a >= 0


def test_report_agrees_in_proved_degrees():
    rows = H.conjecture_report(3)
    assert [r.degree for r in rows] == [2, 3]
    assert all(r.agree and r.dimension_ok for r in rows)
    with pytest.raises(ValueError):
        H.conjecture_report(1)


# -- constant cycles and their neighbours --------------------------------------------------------------

def test_special_vector_indexing():
    assert H.SpecialVector(4, 1, 0).digits == (1, 1, 1, 1)
    assert H.SpecialVector(4, 1, 3).digits == (1, 1, 2, 1)
    assert H.SpecialVector(4, 2, 1).digits == (1, 2, 2, 2)
    assert H.SpecialVector(4, 2, 1).flat == tensor_index(1, 2, 2, 2)
    with pytest.raises(ValueError):
        H.SpecialVector(4, 1, 5)
    with pytest.raises(ValueError):
        H.SpecialVector(4, 3, 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_constant_vectors_are_cycles(n):
    assert H.constant_cycles_vanish(n)


def test_special_image_is_the_column():
    assert H.special_image(4, 1, 2) == d_skein(4).column(tensor_index(1, 2, 1, 1))


def test_printed_table_values():
    assert H.printed_coefficient(5, 1, 1) == y**2
    assert H.printed_coefficient(6, 1, 2) == ZERO
    assert H.printed_coefficient(6, 1, 4) == 1 - y**4


def test_printed_table_disagrees_with_columns():
    assert H.constant_coefficient(5, 1, 1) == ZERO
    assert H.constant_coefficient(6, 1, 4) == y**6 - y**2
    # d_4 table row e1e1e2e1 has 1 - y^4 on e1e1e1
    assert H.constant_coefficient(4, 1, 3) == 1 - y**4
    assert H.printed_coefficient(4, 1, 3) != 1 - y**4


@pytest.mark.parametrize("n", range(4, 9))
def test_closed_form_matches_columns(n):
    table = H.coefficient_table(n)
    assert len(table) == 2 * (n + 1)
    assert all(c.closed_form_ok for c in table)


def test_even_degree_values_agree_with_direct_term_count():
    # the two contributing words give -y^{4i-4} + 1 on e_{1,2i-1} and y^{4i-2} - y^2 on e_{1,2i}
    for n in (4, 6, 8):
        for i in range(1, n // 2 + 1):
            assert H.constant_coefficient(n, 1, 2 * i - 1) == 1 - y ** (4 * i - 4)
            assert H.constant_coefficient(n, 1, 2 * i) == y ** (4 * i - 2) - y**2


@pytest.mark.parametrize("n", range(4, 8))
def test_no_cross_family_terms(n):
    assert H.cross_family_zero(n)


def test_coefficient_table_needs_degree_four():
    with pytest.raises(ValueError):
        H.coefficient_table(3)


# -- annihilators ---------------------------------------------------------------------------------------

@pytest.mark.parametrize("n", [5, 7])
def test_odd_degree_annihilator(n):
    rep = H.annihilator_report(n)
    assert rep.gcd == {1: Q4, 2: Q4}
    assert rep.summary() == Q4
    expected = gcd_many([y ** (4 * (i - 1)) - 1 for i in range(2, (n + 1) // 2 + 1)])
    assert expected == Q4


@pytest.mark.parametrize("n", [4, 6])
def test_even_degree_report(n):
    rep = H.annihilator_report(n)
    # the printed table would give a unit coefficient and y^2 - 1
    assert rep.printed_boundary_unit
    assert rep.printed_gcd == {1: ONE, 2: Q2}
    # the actual columns give neither
    assert not rep.boundary_unit
    assert rep.summary() == (False, Q4)


@pytest.mark.parametrize("n", range(2, 7))
def test_constant_cycles_never_bound(n):
    # no nonzero multiple of e_{j,0} lies in the span of the columns of d_{n+1}
    d = d_skein(n + 1)
    r = rank(d)
    for j in (1, 2):
        cols = [d.column(c) for c in range(d.cols)] + [{H.constant_index(n, j): ONE}]
        assert rank(RingMatrix.from_columns(d.rows, cols)) == r + 1


def test_annihilator_needs_degree_four():
    with pytest.raises(ValueError):
        H.annihilator_report(3)


def test_chain_condition_helper():
    assert H.check_chain_condition(5)
    with pytest.raises(ValueError):
        H.check_chain_condition(0)
