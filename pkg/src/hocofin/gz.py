"""Homology of presheaves with diagram coefficients, and the natural-system
homology of small categories via factorization categories.

Each homology here is a derived colimit over a derived index category:
the category of elements (opposite) for presheaf homology, the
factorization category (opposite) for natural systems.  Wherever a second
computational route exists, the two are run and compared exactly; a
mismatch is an implementation bug and is surfaced loudly.
"""

from __future__ import annotations

from .cofinal import certify_contractible, weakest
from .diagrams import (
    AbDiagram,
    GroupDiagram,
    ab_colim_derived,
    abelianize_diagram,
    colim0,
    kan_extend_vdc,
)
from .fincat import (
    Functor,
    chain_face,
    chain_is_degenerate,
    composable_chains,
    factor_functor,
    factor_slice,
    factorization,
    opposite,
    opposite_functor,
)
from .groups import FreeProduct, GroupHom, fingerprint
from .homalg import AbMap, ChainComplex, FGAb, IntMatrix
from .presheaf import elements_with_parts, inverse_fibre


class GZError(Exception):
    pass


class RouteMismatch(GZError):
    """The two computational routes disagreed: an implementation bug."""


def _is_ab(system):
    return isinstance(system, AbDiagram)


def _hom_over(cat, proj, o1, o2, base_mor):
    """The unique morphism o1 -> o2 of a derived category lying over a
    given base morphism."""
    hits = [m for m in cat.hom(o1, o2) if proj.on_mor(m) == base_mor]
    if len(hits) != 1:
        raise GZError("expected exactly one morphism over %s, found %d" % (base_mor, len(hits)))
    return hits[0]


# -- presheaf homology ---------------------------------------------------------


def lan_route_diagram(X, system, data=None):
    """The presheaf of groups a |-> free product over X(a) of the system
    values, with transport along morphisms; a diagram over the opposite
    of the base category."""
    D = X.base
    Dop = opposite(D)
    E, Q, parts = data if data is not None else elements_with_parts(X)
    oid = {(d, x): o for o, (d, x) in parts.items()}
    if _is_ab(system):
        values = {}
        offsets = {}
        for a in D.objects:
            blocks = [system.value[oid[(a, x)]] for x in X.sets[a]]
            off = []
            total = 0
            for b in blocks:
                off.append(total)
                total += b.gens
            offsets[a] = dict(zip(X.sets[a], off))
            values[a] = FGAb.trivial().direct_sum(*blocks) if blocks else FGAb.trivial()
        actions = {}
        for alpha in D.morphisms:
            if D.is_identity(alpha):
                continue
            b, a = D.dom[alpha], D.cod[alpha]
            rows, cols = values[b].gens, values[a].gens
            M = [[0] * cols for _ in range(rows)]
            for x in X.sets[a]:
                x2 = X.apply(alpha, x)
                o1, o2 = oid[(b, x2)], oid[(a, x)]
                m = _hom_over(E, Q, o1, o2, alpha)
                mat = system.action[m].matrix
                r0 = offsets[b][x2]
                c0 = offsets[a][x]
                for r in range(mat.rows):
                    for c in range(mat.cols):
                        M[r0 + r][c0 + c] += mat.entries[r][c]
            actions[alpha] = AbMap(values[a], values[b], IntMatrix(M, (rows, cols)), check=False)
        return AbDiagram(Dop, values, actions, name="C(%s)" % (X.name or "?"))
    values = {}
    for a in D.objects:
        factors = []
        for x in X.sets[a]:
            for lbl, grp in system.value[oid[(a, x)]].factors:
                factors.append(("%s::%s" % (x, lbl), grp))
        values[a] = FreeProduct(factors)
    actions = {}
    for alpha in D.morphisms:
        if D.is_identity(alpha):
            continue
        b, a = D.dom[alpha], D.cod[alpha]
        per = {}
        for x in X.sets[a]:
            x2 = X.apply(alpha, x)
            o1, o2 = oid[(b, x2)], oid[(a, x)]
            m = _hom_over(E, Q, o1, o2, alpha)
            hom = system.action[m]
            for lbl, grp in system.value[o2].factors:
                table = {}
                for el in grp.elements:
                    word = hom.per_factor[lbl][el]
                    table[el] = tuple(("%s::%s" % (x2, l2), e2) for l2, e2 in word)
                per["%s::%s" % (x, lbl)] = table
        actions[alpha] = GroupHom(values[a], values[b], per, _validate=False)
    return GroupDiagram(Dop, values, actions, name="C(%s)" % (X.name or "?"))


def gz_homology(X, system, n_max):
    """Homology of a presheaf with coefficients in a contravariant system
    over its category of elements.

    Primary route: derived colimits over the opposite elements category.
    Second route: the same homology through the groupwise free-product
    presheaf over the base; the two abelian answers must agree exactly.
    """
    data = elements_with_parts(X)
    E, Q, parts = data
    Eop = opposite(E)
    Dop = opposite(X.base)
    lan = lan_route_diagram(X, system, data=data)
    if _is_ab(system):
        primary = ab_colim_derived(Eop, system, n_max)
        secondary = ab_colim_derived(Dop, lan, n_max)
        if primary != secondary:
            raise RouteMismatch("abelian homology differs between routes")
        return {"abelian": primary, "routes_agree": True}
    pres = colim0(Eop, system)
    pres2 = colim0(Dop, lan)
    fp1 = fingerprint(pres)
    fp2 = fingerprint(pres2)
    ab1 = ab_colim_derived(Eop, abelianize_diagram(system), n_max)
    ab2 = ab_colim_derived(Dop, abelianize_diagram(lan), n_max)
    if fp1 != fp2 or ab1 != ab2:
        raise RouteMismatch("presheaf homology differs between routes")
    return {
        "n0": {"presentation": pres, "fingerprint": list(fp1)},
        "abelian": ab1,
        "routes_agree": True,
    }


def elements_functor(f, data_x=None, data_y=None):
    """The functor between categories of elements induced by a presheaf
    morphism: (d, x) |-> (d, f_d(x))."""
    EX, QX, partsX = data_x if data_x is not None else elements_with_parts(f.source)
    EY, QY, partsY = data_y if data_y is not None else elements_with_parts(f.target)
    oidY = {(d, y): o for o, (d, y) in partsY.items()}
    obj_map = {o: oidY[(d, f.at(d, x))] for o, (d, x) in partsX.items()}
    mor_map = {}
    for m in EX.morphisms:
        o1, o2 = EX.dom[m], EX.cod[m]
        alpha = QX.on_mor(m)
        t1, t2 = obj_map[o1], obj_map[o2]
        if EX.is_identity(m):
            mor_map[m] = EY.identity[t1]
        else:
            mor_map[m] = _hom_over(EY, QY, t1, t2, alpha)
    return Functor(EX, EY, obj_map, mor_map, name="el(f)")


def direct_image(f, system, n_max):
    """Kan extension of a contravariant system along a presheaf morphism,
    with the homology-preservation check.

    The opposite of the induced elements functor is always a virtual
    discrete cofibration, so a NotVDC failure here is an internal error.
    """
    S = elements_functor(f)
    Sop = opposite_functor(S)
    pushed = kan_extend_vdc(Sop, system)
    lhs = gz_homology(f.source, system, n_max)
    rhs = gz_homology(f.target, pushed, n_max)
    if _is_ab(system):
        agree = lhs["abelian"] == rhs["abelian"]
    else:
        agree = (
            lhs["n0"]["fingerprint"] == rhs["n0"]["fingerprint"]
            and lhs["abelian"] == rhs["abelian"]
        )
    return {
        "system": pushed,
        "lhs": lhs,
        "rhs": rhs,
        "verdict": "agree" if agree else "disagree",
    }


def inverse_image(f, system):
    """Pullback of a contravariant system on the target along a presheaf
    morphism: composition with the opposite elements functor."""
    S = elements_functor(f)
    Sop = opposite_functor(S)
    return system.restrict(Sop)


def dhiso_check(f, system, n_max, effort=1):
    """Certify contractibility of the elements categories of every inverse
    fibre, then compare the homology of the pullback with the original.

    The comparison is labeled by the weakest per-fibre certificate; with a
    NONCONTRACTIBLE fibre the theorem makes no claim and the report says
    so instead of asserting anything."""
    X, Y = f.source, f.target
    D = X.base
    verdicts = {}
    for d in D.objects:
        for y in Y.sets[d]:
            fib = inverse_fibre(f, d, y)
            Efib, _, _ = elements_with_parts(fib)
            verdicts[(d, y)] = certify_contractible(Efib, effort=effort, n_max=n_max)
    agg = weakest(verdicts.values()).kind if verdicts else "CONTRACTIBLE"
    report = {
        "fibres": {"%s@%s" % (y, d): v.kind for (d, y), v in verdicts.items()},
        "hypothesis": agg,
    }
    pulled = inverse_image(f, system)
    lhs = gz_homology(X, pulled, n_max)
    rhs = gz_homology(Y, system, n_max)
    if _is_ab(system):
        agree = lhs["abelian"] == rhs["abelian"]
    else:
        agree = (
            lhs["n0"]["fingerprint"] == rhs["n0"]["fingerprint"]
            and lhs["abelian"] == rhs["abelian"]
        )
    report["lhs"] = lhs
    report["rhs"] = rhs
    if agg == "NONCONTRACTIBLE":
        report["verdict"] = "hypothesis fails"
    else:
        report["verdict"] = "agree" if agree else "disagree"
    return report


# -- natural-system homology ---------------------------------------------------


def _delta_of_chain(C, chain):
    """Composite of a nerve chain (the identity for a vertex)."""
    if isinstance(chain, str):
        return C.identity[chain]
    acc = chain[0]
    for alpha in chain[1:]:
        acc = C.comp[(alpha, acc)]
    return acc


def _fact_hom(fdata, f, g, pair):
    """Morphism id f -> g in the factorization category with a given
    (alpha, beta) pair."""
    cat = fdata.category
    hits = [m for m in cat.hom(f, g) if fdata.pair[m] == pair]
    if len(hits) != 1:
        raise GZError("expected exactly one factorization morphism for %r" % (pair,))
    return hits[0]


def nerve_route_complex(C, M, n_max, fdata=None):
    """Nerve-route complex for natural-system homology with abelian
    coefficients: degree-n term the sum of M(composite of sigma) over
    nondegenerate chains sigma, faces acting through the factorization
    category (transport on the outer faces, identity inside)."""
    fdata = fdata or factorization(C)
    chains = {n: composable_chains(C, n, nondegenerate=True) for n in range(n_max + 2)}
    index = {n: {ch: k for k, ch in enumerate(chains[n])} for n in chains}
    deltas = {n: [_delta_of_chain(C, ch) for ch in chains[n]] for n in chains}
    groups = {-1: FGAb.trivial()}
    offsets = {}
    for n in range(n_max + 2):
        blocks = [M.value[d] for d in deltas[n]]
        off = []
        total = 0
        for b in blocks:
            off.append(total)
            total += b.gens
        offsets[n] = off
        groups[n] = FGAb.trivial().direct_sum(*blocks) if blocks else FGAb.trivial()
    boundaries = {0: AbMap.zero(groups[0], groups[-1])}
    for n in range(1, n_max + 2):
        rows, cols = groups[n - 1].gens, groups[n].gens
        Mx = [[0] * cols for _ in range(rows)]
        for j, ch in enumerate(chains[n]):
            dsig = deltas[n][j]
            c0 = offsets[n][j]
            for i in range(n + 1):
                tgt = chain_face(C, ch, i)
                if chain_is_degenerate(C, tgt):
                    continue
                k = index[n - 1].get(tgt)
                if k is None:
                    continue
                sign = -1 if i % 2 else 1
                r0 = offsets[n - 1][k]
                dtgt = deltas[n - 1][k]
                if i == 0:
                    pair = (ch[0], C.identity[C.cod[dsig]])
                    m = _fact_hom(fdata, dtgt, dsig, pair)
                    mat = M.action[m].matrix
                elif i == n:
                    pair = (C.identity[C.dom[dsig]], ch[-1])
                    m = _fact_hom(fdata, dtgt, dsig, pair)
                    mat = M.action[m].matrix
                else:
                    mat = None
                if mat is None:
                    for r in range(groups_block_size(M, dsig)):
                        Mx[r0 + r][c0 + r] += sign
                else:
                    for r in range(mat.rows):
                        for c in range(mat.cols):
                            Mx[r0 + r][c0 + c] += sign * mat.entries[r][c]
        boundaries[n] = AbMap(groups[n], groups[n - 1], IntMatrix(Mx, (rows, cols)), check=False)
    return ChainComplex(groups, boundaries)


def groups_block_size(M, obj):
    return M.value[obj].gens


def bw_homology(C, system, n_max, fdata=None):
    """Natural-system homology of a finite category.

    Primary route: derived colimits over the opposite factorization
    category.  Second route (abelian): the nerve complex with coefficients
    transported through the factorization category.  The two must agree
    exactly; for group systems the abelianization is cross-checked."""
    fdata = fdata or factorization(C)
    base = fdata.category_op
    if _is_ab(system):
        primary = ab_colim_derived(base, system, n_max)
        secondary = [nerve_route_complex(C, system, n_max, fdata=fdata).homology(n) for n in range(n_max + 1)]
        if primary != secondary:
            raise RouteMismatch("natural-system homology differs between routes")
        return {"abelian": primary, "routes_agree": True}
    pres = colim0(base, system)
    abd = abelianize_diagram(system)
    primary = ab_colim_derived(base, abd, n_max)
    secondary = [nerve_route_complex(C, abd, n_max, fdata=fdata).homology(n) for n in range(n_max + 1)]
    if primary != secondary:
        raise RouteMismatch("natural-system homology differs between routes")
    return {
        "n0": {"presentation": pres, "fingerprint": list(fingerprint(pres))},
        "abelian": primary,
        "routes_agree": True,
    }


def bw_invariance_check(S, system, n_max, effort=1):
    """Hypothesis certification plus natural-system homology comparison
    for a functor between finite categories.

    The slice S<alpha> is certified for every morphism alpha of the
    TARGET category (the only reading under which the slice is defined);
    the report flags this interpretation."""
    C, D = S.source, S.target
    fc = factorization(C)
    fd = factorization(D)
    FS = factor_functor(S, fc, fd)
    FSop = opposite_functor(FS, fc.category_op, fd.category_op)
    verdicts = {}
    for alpha in D.morphisms:
        sl = factor_slice(S, alpha)
        verdicts[alpha] = certify_contractible(sl, effort=effort, n_max=n_max)
    agg = weakest(verdicts.values()).kind
    report = {
        "hypothesis_over": "target-category morphisms",
        "slices": {alpha: v.kind for alpha, v in verdicts.items()},
        "hypothesis": agg,
    }
    if agg == "NONCONTRACTIBLE":
        bad = [a for a, v in verdicts.items() if v.kind == "NONCONTRACTIBLE"]
        report["verdict"] = "hypothesis fails"
        report["witness"] = "hypothesis fails at alpha=%s" % bad[0]
        return report
    pulled = system.restrict(FSop)
    lhs = bw_homology(C, pulled, n_max, fdata=fc)
    rhs = bw_homology(D, system, n_max, fdata=fd)
    if _is_ab(system):
        agree = lhs["abelian"] == rhs["abelian"]
    else:
        agree = (
            lhs["n0"]["fingerprint"] == rhs["n0"]["fingerprint"]
            and lhs["abelian"] == rhs["abelian"]
        )
    report["lhs"] = lhs
    report["rhs"] = rhs
    report["verdict"] = "agree" if agree else "disagree"
    return report


# -- homology with plain diagram coefficients -----------------------------------


def andre_homology(X, diagram, n_max):
    """Homology of a presheaf with coefficients pulled back from a plain
    diagram on the base category, via the category of elements."""
    E, Q, _ = elements_with_parts(X)
    pulled = diagram.restrict(Q)
    if _is_ab(diagram):
        return {"abelian": ab_colim_derived(E, pulled, n_max)}
    pres = colim0(E, pulled)
    return {
        "n0": {"presentation": pres, "fingerprint": list(fingerprint(pres))},
        "abelian": ab_colim_derived(E, abelianize_diagram(pulled), n_max),
    }
