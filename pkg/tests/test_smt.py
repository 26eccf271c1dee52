"""Tableaux, standardness, invariant section counts, the three extension
families, and the Grassmannian chain certificates.

Frozen integers come from an independent computation: the rank of the
monomial evaluation matrix at random points of the open cell
(oracles.invariant_dim_geometric), which shares no code with the greedy
chain machinery being tested.
"""

from itertools import permutations, product

from hypothesis import given, settings, strategies as st
import pytest

from oracles import invariant_dim_geometric, is_standard_exhaustive
from torusq import smt


V7 = (5, 1, 2, 3, 6, 7, 4)  # the running SL(7) seed element
W7 = (5, 2, 3, 6, 7, 4, 1)


def test_tableau_shape_and_validation():
    t = smt.Tableau(7, (5,), (5,))
    assert t.m == 1
    assert t.long_row(5) == (1, 2, 3, 4, 6, 7)
    assert t.rows() == [("short", 5), ("long", 5)]
    with pytest.raises(ValueError):
        smt.Tableau(7, (5, 4), (5,))
    with pytest.raises(ValueError):
        smt.Tableau(7, (8,), (1,))


def test_invariance_is_multiset_equality():
    assert smt.Tableau(7, (5,), (5,)).is_invariant()
    assert not smt.Tableau(7, (1,), (7,)).is_invariant()
    assert smt.Tableau(7, (2, 3), (3, 2)).is_invariant()
    # the multiset test must agree with equal-content-counts
    for shorts in product(range(1, 5), repeat=2):
        for missings in product(range(1, 5), repeat=2):
            t = smt.Tableau(4, shorts, missings)
            counts = t.content_counts()
            assert t.is_invariant() == (len(set(counts)) == 1)


def test_canonical_invariant_tableau():
    t = smt.canonical_invariant_tableau(7, (3, 5, 3))
    assert t.shorts == (5, 3, 3)
    assert t.missings == (3, 3, 5)
    assert t.is_invariant()


def test_young_on_the_seed():
    assert smt.is_young_on(smt.Tableau(7, (5,), (5,)), V7)
    # a single box holding 6 exceeds pi_1(v) = (5)
    assert not smt.is_young_on(smt.Tableau(7, (6,), (6,)), V7)
    w0 = (7, 6, 5, 4, 3, 2, 1)
    for val in range(1, 8):
        assert smt.is_young_on(smt.Tableau(7, (val,), (val,)), w0)


def test_standard_examples():
    t4 = smt.Tableau(7, (4,), (4,))
    assert smt.is_standard_on(t4, W7)
    assert not smt.is_standard_on(t4, (5, 2, 1, 3, 6, 7, 4))
    assert smt.is_standard_on(smt.Tableau(7, (), ()), V7)  # empty shape


def test_max_coset_member_below():
    got = smt.max_coset_member_below((5, 2, 3, 6, 7, 4, 1), last=4)
    assert got == (5, 2, 3, 6, 7, 1, 4)
    assert smt.max_coset_member_below((2, 1, 3, 4), first=4) is None
    assert smt.max_coset_member_below((4, 3, 2, 1), first=2, last=3) == (2, 4, 1, 3)
    # pinning one value into both end slots leaves an empty coset
    assert smt.max_coset_member_below((3, 2, 1), first=2, last=2) is None


def test_max_coset_member_is_the_unique_maximum():
    # brute force: the greedy result dominates every coset member below
    # the bound, for every bound and pin in S_4
    from oracles import bruhat_leq_bruteforce

    for bound in permutations(range(1, 5)):
        for val in range(1, 5):
            for pin in ("first", "last"):
                kw = {pin: val}
                got = smt.max_coset_member_below(bound, **kw)
                pos = 0 if pin == "first" else 3
                others = [
                    c
                    for c in permutations(range(1, 5))
                    if c[pos] == val and bruhat_leq_bruteforce(c, bound)
                ]
                if got is None:
                    assert not others
                else:
                    assert got in others
                    assert all(bruhat_leq_bruteforce(c, got) for c in others)


def test_greedy_standardness_matches_exhaustive_search():
    for n, m in [(3, 1), (3, 2), (4, 1), (4, 2)]:
        for w in permutations(range(1, n + 1)):
            for shorts in product(range(1, n + 1), repeat=m):
                for missings in product(range(1, n + 1), repeat=m):
                    t = smt.Tableau(n, shorts, missings)
                    assert smt.is_standard_on(t, w) == is_standard_exhaustive(
                        t, w
                    ), (w, shorts, missings)


@settings(max_examples=60, deadline=None)
@given(
    st.permutations(list(range(1, 7))),
    st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=2),
    st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=2),
)
def test_greedy_standardness_spot_n6(w, shorts, missings):
    if len(shorts) != len(missings):
        return
    t = smt.Tableau(6, tuple(shorts), tuple(missings))
    assert smt.is_standard_on(t, tuple(w)) == is_standard_exhaustive(t, tuple(w))


@settings(max_examples=80, deadline=None)
@given(st.permutations(list(range(1, 6))), st.permutations(list(range(1, 6))))
def test_standardness_lifts_along_bruhat(u, w):
    from torusq.weyl import bruhat_leq

    u, w = tuple(u), tuple(w)
    if not bruhat_leq(u, w):
        return
    for values in product(range(1, 6), repeat=1):
        t = smt.canonical_invariant_tableau(5, values)
        if smt.is_standard_on(t, u):
            assert smt.is_standard_on(t, w)


def test_invariant_dimension_landmarks():
    assert smt.invariant_dimension(V7, 1) == 1
    assert smt.invariant_dimension(W7, 1) == 4
    assert smt.invariant_dimension((7, 6, 5, 4, 3, 2, 1), 1) == 6
    assert smt.invariant_dimension((1, 2, 3, 4, 5, 6, 7), 1) == 0
    assert smt.invariant_dimension(tuple(range(1, 8)), 2) == 0


def test_dimension_matches_geometric_rank_s4():
    for w in permutations(range(1, 5)):
        for m in (1, 2, 3):
            assert smt.invariant_dimension(w, m) == invariant_dim_geometric(w, m)


def test_dimension_matches_geometric_rank_golden_rows():
    for k, j, _pred, tag in smt.family_rows("a", 7, 3):
        if tag == "copy":
            continue
        w = smt.family_element("a", 7, 3, k, j)
        assert smt.invariant_dimension(w, 1) == invariant_dim_geometric(w, 1)


def test_dimension_depends_only_on_the_two_ends():
    # the B-orbit of the base point projects to a pair of coordinate
    # flags, so the ends of the one-line form decide every count
    for w in permutations(range(1, 5)):
        lift = next(
            l for l in smt.parabolic_lifts(4) if l[0] == w[0] and l[-1] == w[-1]
        )
        for m in (1, 2):
            assert smt.invariant_dimension(w, m) == smt.invariant_dimension(lift, m)


def test_minimal_borel_closed_form():
    from torusq.weyl import bruhat_leq

    assert smt.minimal_borel_semistable(7)[3] == V7
    got = smt.minimal_borel_semistable(4)
    assert got == [(2, 3, 4, 1), (3, 1, 4, 2), (4, 1, 2, 3)]
    # brute force over S_4: minimal elements carrying a degree-1 invariant
    hits = [
        w
        for w in permutations(range(1, 5))
        if smt.invariant_dimension(w, 1) > 0
    ]
    minimal = {
        w for w in hits if not any(u != w and bruhat_leq(u, w) for u in hits)
    }
    assert minimal == set(got)


def test_family_seeds():
    assert smt.family_minimal("a", 7, 3) == V7
    assert smt.family_minimal("a2", 5) == (5, 1, 2, 3, 4)
    assert smt.family_minimal("b", 5, 2) == (3, 1, 4, 5, 2)
    with pytest.raises(ValueError):
        smt.family_minimal("a", 5, 3)  # i must stay below n-2
    with pytest.raises(ValueError):
        smt.family_minimal("c", 5, 1)


def test_family_elements_along_the_golden_chain():
    assert smt.family_element("a", 7, 3, 1, 2) == (5, 2, 1, 3, 6, 7, 4)
    assert smt.family_element("a", 7, 3, 1, 6) == W7
    assert smt.family_element("a", 7, 3, 3, 4) == (5, 6, 7, 4, 3, 2, 1)
    assert smt.family_element("a", 7, 3, 6, 1) == (7, 6, 5, 4, 3, 2, 1)
    with pytest.raises(ValueError):
        smt.family_element("a", 7, 3, 2, 7)  # j beyond n-k
    with pytest.raises(ValueError):
        smt.family_element("a", 7, 3, 9, 1)


def test_family_row_counts():
    rows = smt.family_rows("a", 7, 3)
    assert sum(1 for r in rows if r[3] != "copy") == 16
    assert rows[0] == (0, None, 1, "seed")
    # the B family ends at w0 like the others
    last_k, last_j = 6, 1
    assert smt.family_element("b", 7, 2, last_k, last_j) == (7, 6, 5, 4, 3, 2, 1)


def test_dimension_tables_match():
    for case, n, i in [("a", 6, 2), ("a2", 5, None), ("b", 5, 4)]:
        table = smt.dimension_table(case, n, i)
        assert table["all_match"], table


def test_parabolic_lifts():
    lifts = smt.parabolic_lifts(4)
    assert len(lifts) == 12
    assert (1, 4, 3, 2) in lifts
    assert all(len(set(l)) == 4 for l in lifts)


def test_projective_normality_reports():
    report = smt.projective_normality_check((7, 6, 5, 4, 3, 2, 1), (2,))
    assert report["t"] == 6
    assert report["degrees"][0]["expected"] == 21
    assert report["all_match"]
    report = smt.projective_normality_check((4, 3, 2, 1), (2, 3))
    assert report["t"] == 3
    assert [r["expected"] for r in report["degrees"]] == [6, 10]
    assert report["all_match"]
    # t = 1 keeps dimension 1 in every degree
    report = smt.projective_normality_check(V7, (2, 3))
    assert report["t"] == 1
    assert all(r["computed"] == 1 for r in report["degrees"])


def test_alpha0_semistable_probe():
    hit = smt.alpha0_semistable_nonempty((4, 1, 2, 3))
    assert hit["found"] and hit["degree"] == 1
    miss = smt.alpha0_semistable_nonempty((1, 2, 3, 4))
    assert not miss["found"] and miss["bound"] == 2


# ---------------------------------------------------------------------------
# Grassmannian chain certificates


def test_chain_on_gr25():
    chain = smt.invariant_chain_gr((3, 5), 2, 5, 5)
    assert chain is not None
    assert len(chain) == 5
    counts = [0] * 5
    for entry in chain:
        assert all(a <= b for a, b in zip(entry, (3, 5)))
        for v in entry:
            counts[v - 1] += 1
    assert counts == [2] * 5
    for hi, lo in zip(chain, chain[1:]):
        assert all(b <= a for a, b in zip(hi, lo))
    assert smt.invariant_chain_gr((2, 5), 2, 5, 5) is None
    assert smt.invariant_chain_gr((3, 5), 2, 5, 4) is None  # degree not divisible


def test_chain_on_gr24():
    assert smt.invariant_chain_gr((2, 4), 2, 4, 2) == ((2, 4), (1, 3))
    assert smt.invariant_chain_gr((1, 4), 2, 4, 2) is None


def test_semistable_probe_reports_bound():
    report = smt.semistable_nonempty_gr((3, 5), 2, 5)
    assert report == {
        "found": True,
        "degree": 5,
        "bound": 10,
        "witness": ((3, 5), (3, 5), (2, 4), (1, 4), (1, 2)),
    }
    report = smt.semistable_nonempty_gr((2, 5), 2, 5)
    assert report["found"] is False and report["bound"] == 10


def test_minimal_sweep_gr24():
    assert smt.minimal_semistable_oracle_gr(2, 4) == [(2, 4)]
