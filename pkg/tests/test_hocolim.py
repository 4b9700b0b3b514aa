import pytest

from hocofin.diagrams import GroupDiagram, colim0, constant_group_diagram
from hocofin.fincat import Functor, from_monoid, identity_functor, validate_category
from hocofin.groups import (
    FreeProduct,
    GroupHom,
    cyclic_group,
    fingerprint,
    tietze_simplify,
    trivial_group,
)
from hocofin.homalg import FGAb
from hocofin.hocolim import (
    CapExceeded,
    PointedDiagram,
    bg_diagram,
    classifying_space,
    cofinal_hocolim_compare,
    hocolim_cardinalities,
    hocolim_pointed,
    hocolim_unpointed,
    pointed_quotient_check,
)
from hocofin.presheaf import (
    SSetMap,
    edge_path_group,
    homology_ss,
    nerve,
    standard_simplex,
)


def walking_arrow():
    return validate_category(["a", "b"], [("u", "a", "b")], [], name="2")


def span():
    return validate_category(["l", "c", "r"], [("p", "c", "l"), ("q", "c", "r")], [], name="span")


def one():
    return validate_category(["*"], [], [], name="1")


def span_z2_z3():
    P = span()
    z2 = FreeProduct.from_group("L", cyclic_group(2))
    onegrp = FreeProduct.from_group("C", trivial_group())
    z3 = FreeProduct.from_group("R", cyclic_group(3))
    actions = {
        "p": GroupHom(onegrp, z2, {"C": {"0": ()}}),
        "q": GroupHom(onegrp, z3, {"C": {"0": ()}}),
    }
    return GroupDiagram(P, {"l": z2, "c": onegrp, "r": z3}, actions, name="Z2<-1->Z3")


def point_diagram(C, N):
    pt = standard_simplex(0, N, basepoint=0)
    return PointedDiagram(
        C, N, {o: pt for o in C.objects}, {f: SSetMap.identity(pt) for f in C.morphisms}
    )


def test_classifying_space_counts():
    B = classifying_space(cyclic_group(2), 3)
    assert [len(s) for s in B.simplices] == [1, 2, 4, 8]
    Bt = classifying_space(trivial_group(), 3)
    assert [len(s) for s in Bt.simplices] == [1, 1, 1, 1]


def test_classifying_space_free_product_cap():
    fp = FreeProduct([("A", cyclic_group(2)), ("B", cyclic_group(3))])
    with pytest.raises(CapExceeded):
        classifying_space(fp, 2)


def test_hocolim_of_constant_point_is_nerve_carrier():
    for C in (walking_arrow(), span()):
        PD = point_diagram(C, 3)
        H = hocolim_pointed(PD, 3)
        # everything collapses to the basepoint chain classes: one class
        # plus nothing else per degree
        assert [len(s) for s in H.simplices] == [1, 1, 1, 1]
        U = hocolim_unpointed(PD, 3)
        X = nerve(C, 3)
        assert [len(s) for s in U.simplices] == [len(s) for s in X.simplices]


def test_hocolim_over_point_is_the_value():
    C = one()
    X = standard_simplex(1, 2, basepoint=0)
    PD = PointedDiagram(C, 2, {"*": X}, {})
    H = hocolim_pointed(PD, 2)
    assert [len(s) for s in H.simplices] == [len(s) for s in X.simplices]
    assert homology_ss(H, 1) == homology_ss(X, 1)


def test_hocolim_cardinality_formula():
    G = span_z2_z3()
    PD = bg_diagram(G, 3)
    H = hocolim_pointed(PD, 3)
    assert [len(s) for s in H.simplices] == hocolim_cardinalities(PD, 3)
    # degree 3 count worked out by hand: 1 + (8-1) + (27-1)
    assert len(H.simplices[3]) == 34


def test_main2_n0_span_fixture():
    G = span_z2_z3()
    PD = bg_diagram(G, 3)
    H = hocolim_pointed(PD, 3)
    pi1 = fingerprint(tietze_simplify(edge_path_group(H)))
    c0 = fingerprint(colim0(G.base, G))
    assert pi1 == c0
    # the free product Z2 * Z3 admits 12 homomorphisms into S3
    from hocofin.groups import catalog

    idx = [i for i, T in enumerate(catalog()) if T.name == "S3"]
    assert pi1[idx[0]] == 12


def test_main2_n0_constant_diagram():
    two = walking_arrow()
    z2 = FreeProduct.from_group("A", cyclic_group(2))
    G = constant_group_diagram(two, z2)
    PD = bg_diagram(G, 3)
    H = hocolim_pointed(PD, 3)
    assert fingerprint(tietze_simplify(edge_path_group(H))) == fingerprint(
        colim0(two, G)
    )


def test_main2_n0_group_action_base():
    C = from_monoid(["e", "t"], "e", {
        ("e", "e"): "e", ("e", "t"): "t", ("t", "e"): "t", ("t", "t"): "e",
    }, name="Z2")
    z3 = FreeProduct.from_group("A", cyclic_group(3))
    G = constant_group_diagram(C, z3)
    PD = bg_diagram(G, 3)
    H = hocolim_pointed(PD, 3)
    assert fingerprint(tietze_simplify(edge_path_group(H))) == fingerprint(
        colim0(C, G)
    )


def test_lcodecar_on_fixtures():
    fixtures = [
        point_diagram(span(), 3),
        bg_diagram(span_z2_z3(), 3),
        bg_diagram(constant_group_diagram(walking_arrow(), FreeProduct.from_group("A", cyclic_group(2))), 3),
    ]
    C = walking_arrow()
    interval = standard_simplex(1, 3, basepoint=0)
    pt = standard_simplex(0, 3, basepoint=0)
    collapse = SSetMap(
        interval,
        pt,
        [{x: pt.simplices[n][0] for x in interval.simplices[n]} for n in range(4)],
        pointed=True,
    )
    fixtures.append(PointedDiagram(C, 3, {"a": interval, "b": pt}, {"u": collapse}))
    for PD in fixtures:
        report = pointed_quotient_check(PD, 3)
        assert report["pass"], report


def test_hocolim_simplicial_identities_validated():
    # construction runs the TruncSSet validator; also spot-check a face
    G = span_z2_z3()
    H = hocolim_pointed(bg_diagram(G, 3), 3)
    e = [c for c in H.simplices[1] if c != "*"]
    assert e, "expected nondegenerate edges"
    for cell in e:
        assert H.face(1, 0, cell) == "*"
        assert H.face(1, 1, cell) == "*"


def test_cofinal_compare_final_object_inclusion():
    two = walking_arrow()
    pt = one()
    S = Functor(pt, two, {"*": "b"}, {})
    z2 = FreeProduct.from_group("A", cyclic_group(2))
    PD = bg_diagram(constant_group_diagram(two, z2), 3)
    report = cofinal_hocolim_compare(S, PD, 3, 2)
    assert report["label"] == "certified"
    assert report["verdict"] == "agree"
    assert report["homology"]["lhs"] == ["Z", "Z/2", "0"]


def test_cofinal_compare_identity():
    P = span()
    PD = bg_diagram(span_z2_z3(), 3)
    report = cofinal_hocolim_compare(identity_functor(P), PD, 3, 2)
    assert report["verdict"] == "agree"
    assert report["label"] == "certified"


def test_certified_fixtures_agree_end_to_end():
    # every functor the certifier passes must also agree at the level of
    # pointed homotopy colimits of classifying-space diagrams
    from hocofin import fixtures

    for name in ("final-in-two", "id-span", "span-to-one", "iso2-a",
                 "cod-one", "cod-two", "cod-span", "cod-z2cat"):
        fx = fixtures.load_fixture("homoliso", name)
        S = fx["functor"]
        PD = bg_diagram(fx["group_diagram"], 2)
        report = cofinal_hocolim_compare(S, PD, 2, 1)
        assert report["label"] == "certified", name
        assert report["verdict"] == "agree", (name, report)


def test_cofinal_compare_negative_control():
    # the inclusion of the initial object of the walking arrow is not
    # cofinal, and a diagram concentrated at b detects it
    two = walking_arrow()
    pt = one()
    S = Functor(pt, two, {"*": "a"}, {})
    z2 = FreeProduct.from_group("A", cyclic_group(2))
    triv = FreeProduct.from_group("T", trivial_group())
    G = GroupDiagram(
        two,
        {"a": triv, "b": z2},
        {"u": GroupHom(triv, z2, {"T": {"0": ()}})},
    )
    PD = bg_diagram(G, 3)
    report = cofinal_hocolim_compare(S, PD, 3, 2)
    assert report["label"] == "unconditional comparison"
    assert report["verdict"] == "disagree"
    assert report["homology"]["lhs"] != report["homology"]["rhs"]
