import itertools

import pytest

from hocofin.groups import (
    BudgetExceeded,
    FinGroup,
    FreeProduct,
    GroupHom,
    GroupPresentation,
    abelianization,
    catalog,
    cyclic_group,
    dihedral_group_4,
    enumerate_group_tables,
    fingerprint,
    fingerprint_of_table_group,
    hom_count,
    product_group,
    quaternion_group,
    symmetric_group_3,
    tietze_simplify,
    trivial_group,
)
from hocofin.homalg import FGAb


def test_cyclic_group_axioms():
    G = cyclic_group(6)
    assert G.order() == 6
    assert G.element_orders() == [1, 2, 3, 3, 6, 6]


def test_s3_element_orders():
    assert symmetric_group_3().element_orders() == [1, 2, 2, 2, 3, 3]


def test_catalog_has_14_pairwise_distinct_groups():
    cat = catalog()
    assert len(cat) == 14
    assert sorted(G.order() for G in cat) == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]
    profiles = [(G.order(), G.is_abelian(), tuple(G.element_orders())) for G in cat]
    assert len(set(profiles)) == 14  # order profiles separate all 14 classes


def test_catalog_complete_for_small_orders():
    # brute-force enumeration of all group tables up to isomorphism
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2}
    for n, count in expected.items():
        assert len(enumerate_group_tables(n)) == count


def test_d4_q8_not_abelian():
    assert not dihedral_group_4().is_abelian()
    assert not quaternion_group().is_abelian()
    assert dihedral_group_4().element_orders() != quaternion_group().element_orders()


def test_free_product_reduction():
    z2 = cyclic_group(2)
    z3 = cyclic_group(3)
    fp = FreeProduct([("A", z2), ("B", z3)])
    t = fp.letter("A", "1")
    r = fp.letter("B", "1")
    assert fp.multiply(t, t) == ()
    w = fp.multiply(fp.multiply(t, r), fp.multiply(r, r))  # t r r r = t
    assert w == t
    assert fp.invert(fp.multiply(t, r)) == fp.multiply(fp.invert(r), t)


def test_word_reduction_confluent():
    # reducing any bracketing of a product yields the same normal form
    z2 = cyclic_group(2)
    z3 = cyclic_group(3)
    fp = FreeProduct([("A", z2), ("B", z3)])
    letters = [("A", "1"), ("B", "1"), ("B", "2"), ("A", "1"), ("A", "1"), ("B", "1")]
    full = fp.reduce(letters)
    for cut in range(len(letters) + 1):
        left = fp.reduce(letters[:cut])
        right = fp.reduce(letters[cut:])
        assert fp.multiply(left, right) == full


def test_group_hom_identity_and_compose():
    z4 = cyclic_group(4)
    fp = FreeProduct([("A", z4)])
    ident = GroupHom.identity(fp)
    w = fp.letter("A", "3")
    assert ident.apply(w) == w
    # squaring map a -> a^2 is a homomorphism on Z4
    sq = GroupHom(fp, fp, {"A": {e: fp.letter("A", z4.table[(e, e)]) for e in z4.elements}})
    assert sq.apply(fp.letter("A", "1")) == fp.letter("A", "2")
    assert sq.compose(sq).apply(fp.letter("A", "1")) == ()


def test_group_hom_rejects_non_multiplicative():
    z4 = cyclic_group(4)
    fp = FreeProduct([("A", z4)])
    bad = {"A": {"0": (), "1": fp.letter("A", "1"), "2": fp.letter("A", "1"), "3": ()}}
    with pytest.raises(Exception):
        GroupHom(fp, fp, bad)


def test_hom_count_examples():
    x2 = GroupPresentation(["x"], [["x", "x"]])
    assert hom_count(x2, cyclic_group(2)) == 2
    assert hom_count(GroupPresentation(["x"], []), cyclic_group(3)) == 3
    # 36-case brute force oracle: pairs (a, b) in S3 x S3 with a^2 = b^3 = e
    s3 = symmetric_group_3()

    def power(g, k):
        acc = s3.unit
        for _ in range(k):
            acc = s3.table[(acc, g)]
        return acc

    oracle = sum(
        1
        for a, b in itertools.product(s3.elements, repeat=2)
        if power(a, 2) == s3.unit and power(b, 3) == s3.unit
    )
    assert oracle == 12
    P = GroupPresentation(["x", "y"], [["x", "x"], ["y", "y", "y"]])
    assert hom_count(P, s3) == oracle


def test_hom_count_budget():
    P = GroupPresentation(list("abcdefgh"), [])
    with pytest.raises(BudgetExceeded):
        hom_count(P, cyclic_group(8), budget=10 ** 6)


def test_fingerprint_examples():
    triv = GroupPresentation([], [])
    assert fingerprint(triv) == tuple(1 for _ in range(14))
    x2 = GroupPresentation(["x"], [["x", "x"]])
    # counts elements of order dividing 2 in each catalog group
    expected = tuple(
        sum(1 for e in G.elements if G.table[(e, e)] == G.unit) for G in catalog()
    )
    assert fingerprint(x2) == expected
    free1 = GroupPresentation(["x"], [])
    assert fingerprint(free1) == tuple(G.order() for G in catalog())


def test_fingerprint_multiplicative_on_products():
    # V4 = Z2 x Z2 sits in the catalog; hom counts multiply over factors
    P = GroupPresentation(["x", "y"], [["x", "x"], ["y", "y", "y"]])
    z2 = cyclic_group(2)
    v4 = product_group(z2, z2)
    assert hom_count(P, v4) == hom_count(P, z2) ** 2


def test_abelianization_examples():
    P = GroupPresentation(["x", "y"], [["x", "x"], ["y", "y", "y"]])
    assert abelianization(P) == FGAb.cyclic(6)
    assert abelianization(GroupPresentation(["x", "y"], [])) == FGAb.free(2)
    assert abelianization(GroupPresentation(["x"], [["x"]])) == FGAb.trivial()


def test_tietze_eliminates_generator():
    P = GroupPresentation(["x", "y"], [["y", "x!"], ["y", "y"]])
    Q = tietze_simplify(P)
    assert len(Q.generators) == 1
    assert fingerprint(Q) == fingerprint(GroupPresentation(["x"], [["x", "x"]]))


def test_tietze_keeps_fingerprint_and_abelianization():
    examples = [
        GroupPresentation(["x"], []),
        GroupPresentation(["x"], [["x", "x", "x", "x"]]),
        GroupPresentation(["x", "y"], [["x", "x"], ["y", "y", "y"]]),
        GroupPresentation(["x", "y", "z"], [["z", "x!", "y!"], ["x", "y", "x!", "y!"]]),
    ]
    for P in examples:
        Q = tietze_simplify(P)
        assert fingerprint(Q) == fingerprint(P)
        assert abelianization(Q) == abelianization(P)


def test_tietze_identities():
    P = GroupPresentation(["x"], [["x", "x!"]])
    Q = tietze_simplify(P)
    assert Q.generators == ["x"]
    assert Q.relators == []


def test_presentation_of_table_group_fingerprint():
    # the table presentation of G is fingerprint-equal to G itself:
    # hom counts from the presentation match direct counts of homs G -> T
    for G in (cyclic_group(2), cyclic_group(3), product_group(cyclic_group(2), cyclic_group(2))):
        fp = fingerprint_of_table_group(G)
        for T, got in zip(catalog(), fp):
            direct = 0
            nonunit = [e for e in G.elements if e != G.unit]
            for assign in itertools.product(T.elements, repeat=len(nonunit)):
                m = dict(zip(nonunit, assign))
                m[G.unit] = T.unit
                if all(
                    T.table[(m[a], m[b])] == m[G.table[(a, b)]]
                    for a in G.elements
                    for b in G.elements
                ):
                    direct += 1
            assert got == direct


def test_free_product_as_table_group():
    z3 = cyclic_group(3)
    fp = FreeProduct([("A", trivial_group()), ("B", z3)])
    G = fp.as_table_group()
    assert G.order() == 3
    infinite = FreeProduct([("A", cyclic_group(2)), ("B", z3)])
    assert infinite.element_count() is None
    with pytest.raises(BudgetExceeded):
        infinite.as_table_group()
