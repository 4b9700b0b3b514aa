"""Group and abelian diagrams over finite categories.

The simplicial replacement of a diagram has degree-n part the free
product (direct sum, in the abelian case) of the values at chain origins
over all length-n composable chains.  Degree 0 of its homotopy is the
ordinary colimit, delivered as a presentation; the abelian homology in
every degree is computed from the normalized (nondegenerate-chain)
complex, which is finite per degree even for categories with
endomorphism loops.
"""

from __future__ import annotations

from . import fincat
from .fincat import (
    chain_face,
    chain_is_degenerate,
    chain_origin,
    composable_chains,
    comma_left_fibre_parts,
    connected_components,
    final_objects,
    full_subcategory,
)
from .groups import FreeProduct, GroupHom, GroupPresentation, tietze_simplify
from .homalg import AbMap, ChainComplex, FGAb, IntMatrix


class DiagramError(Exception):
    pass


class IndexOutOfRange(DiagramError):
    pass


class TruncationUnsound(DiagramError):
    """Per-degree chain count went over the configured cap; a resource
    limit, not a mathematical failure."""


class NotVDC(DiagramError):
    pass


DEFAULT_CHAIN_CAP = 200000


class GroupDiagram:
    """Functor from a finite category to free products of finite groups."""

    __slots__ = ("base", "value", "action", "name")

    def __init__(self, base, value, action, name="", _validate=True):
        self.base = base
        self.value = dict(value)
        self.action = dict(action)
        self.name = name
        for o in base.objects:
            if o not in self.value:
                raise DiagramError("diagram misses a value at %s" % o)
        for o in base.objects:
            self.action.setdefault(base.identity[o], GroupHom.identity(self.value[o]))
        if _validate:
            self._check()

    def _check(self):
        B = self.base
        for f in B.morphisms:
            h = self.action.get(f)
            if h is None:
                raise DiagramError("diagram misses the action of %s" % f)
            if h.source is not self.value[B.dom[f]] and h.source.factors != self.value[B.dom[f]].factors:
                raise DiagramError("action of %s has the wrong source" % f)
            if h.target is not self.value[B.cod[f]] and h.target.factors != self.value[B.cod[f]].factors:
                raise DiagramError("action of %s has the wrong target" % f)
        for o in B.objects:
            ident = self.action[B.identity[o]]
            if not ident.equals(GroupHom.identity(self.value[o])):
                raise DiagramError("identity of %s does not act as the identity" % o)
        for g, f in B.composable_pairs():
            lhs = self.action[B.comp[(g, f)]]
            rhs = self.action[g].compose(self.action[f])
            if not lhs.equals(rhs):
                raise DiagramError("functoriality fails at (%s, %s)" % (g, f))

    def restrict(self, S):
        """Composition with a functor into the base."""
        return GroupDiagram(
            S.source,
            {c: self.value[S.on_obj(c)] for c in S.source.objects},
            {f: self.action[S.on_mor(f)] for f in S.source.morphisms},
            name=self.name and self.name + "|",
            _validate=False,
        )

    def __repr__(self):
        return "GroupDiagram(%s over %s)" % (self.name or "?", self.base.name or "?")


class AbDiagram:
    """Functor from a finite category to finitely presented abelian groups,
    with actions as AbMaps checked modulo the target relation lattices."""

    __slots__ = ("base", "value", "action", "name")

    def __init__(self, base, value, action, name="", _validate=True):
        self.base = base
        self.value = dict(value)
        self.action = dict(action)
        self.name = name
        for o in base.objects:
            if o not in self.value:
                raise DiagramError("diagram misses a value at %s" % o)
        for o in base.objects:
            self.action.setdefault(base.identity[o], AbMap.identity(self.value[o]))
        if _validate:
            self._check()

    def _check(self):
        B = self.base
        for f in B.morphisms:
            m = self.action.get(f)
            if m is None:
                raise DiagramError("diagram misses the action of %s" % f)
            if m.matrix.cols != self.value[B.dom[f]].gens or m.matrix.rows != self.value[B.cod[f]].gens:
                raise DiagramError("action of %s has the wrong shape" % f)
            if not m._well_defined():
                raise DiagramError("action of %s does not respect relations" % f)
        for o in B.objects:
            ident = self.action[B.identity[o]]
            if not ident.equals_mod_relations(AbMap.identity(self.value[o])):
                raise DiagramError("identity of %s does not act as the identity" % o)
        for g, f in B.composable_pairs():
            lhs = self.action[B.comp[(g, f)]]
            rhs = self.action[g].compose(self.action[f])
            if not lhs.equals_mod_relations(rhs):
                raise DiagramError("functoriality fails at (%s, %s)" % (g, f))

    def restrict(self, S):
        return AbDiagram(
            S.source,
            {c: self.value[S.on_obj(c)] for c in S.source.objects},
            {f: self.action[S.on_mor(f)] for f in S.source.morphisms},
            name=self.name and self.name + "|",
            _validate=False,
        )

    def __repr__(self):
        return "AbDiagram(%s over %s)" % (self.name or "?", self.base.name or "?")


def constant_ab_diagram(C, group, name="const"):
    return AbDiagram(
        C,
        {o: group for o in C.objects},
        {f: AbMap.identity(group) for f in C.morphisms},
        name=name,
        _validate=False,
    )


def constant_group_diagram(C, fp, name="const"):
    return GroupDiagram(
        C,
        {o: fp for o in C.objects},
        {f: GroupHom.identity(fp) for f in C.morphisms},
        name=name,
        _validate=False,
    )


# -- simplicial replacement --------------------------------------------------


def _srep_level(C, G, n):
    """Degree-n part of the simplicial replacement: the free product of
    G(origin) over all length-n chains, factor labels (chain, inner)."""
    factors = []
    for chain in composable_chains(C, n):
        origin = chain_origin(C, chain)
        for lbl, grp in G.value[origin].factors:
            factors.append((_chain_label(chain, lbl), grp))
    return FreeProduct(factors)


def _chain_label(chain, inner):
    if isinstance(chain, str):
        return "%s::%s" % (chain, inner)
    return "%s::%s" % ("~".join(chain), inner)


def srep_face(C, G, n, i):
    """Face d_i of the simplicial replacement, as a homomorphism from the
    degree-n to the degree-(n-1) free product.

    On a generator (chain, x): d_0 transports x along the first arrow and
    drops it; inner faces compose adjacent arrows; d_n drops the last.
    """
    if n < 1 or i < 0 or i > n:
        raise IndexOutOfRange("face d_%d undefined in degree %d" % (i, n))
    src = _srep_level(C, G, n)
    dst = _srep_level(C, G, n - 1)
    per = {}
    for chain in composable_chains(C, n):
        origin = chain_origin(C, chain)
        target_chain = chain_face(C, chain, i)
        for lbl, grp in G.value[origin].factors:
            table = {}
            if i == 0:
                hom = G.action[chain[0]]
                for el in grp.elements:
                    word = hom.apply(((lbl, el),) if el != grp.unit else ())
                    table[el] = tuple((_chain_label(target_chain, l2), e2) for l2, e2 in word)
            else:
                for el in grp.elements:
                    table[el] = () if el == grp.unit else ((_chain_label(target_chain, lbl), el),)
            per[_chain_label(chain, lbl)] = table
    return GroupHom(src, dst, per, _validate=False)


def srep_degeneracy(C, G, n, i):
    """Degeneracy s_i: insert an identity arrow at position i."""
    if i < 0 or i > n:
        raise IndexOutOfRange("degeneracy s_%d undefined in degree %d" % (i, n))
    src = _srep_level(C, G, n)
    dst = _srep_level(C, G, n + 1)
    per = {}
    for chain in composable_chains(C, n):
        origin = chain_origin(C, chain)
        target_chain = fincat.chain_degeneracy(C, chain, i)
        for lbl, grp in G.value[origin].factors:
            per[_chain_label(chain, lbl)] = {
                el: (() if el == grp.unit else ((_chain_label(target_chain, lbl), el),))
                for el in grp.elements
            }
    return GroupHom(src, dst, per, _validate=False)


# -- colimits ----------------------------------------------------------------


def _gen_name(obj, lbl, el):
    return "%s|%s|%s" % (obj, lbl, el)


def colim0(C, G, simplify=True):
    """Presentation of the colimit of a group diagram.

    Generators: every non-unit element of every factor of every value.
    Relations: the factor multiplication tables, plus x = G(alpha)(x) for
    every morphism alpha and factor element x.  Tietze-simplified before
    return unless told otherwise.
    """
    gens = []
    for obj in C.objects:
        for lbl, grp in G.value[obj].factors:
            for el in grp.elements:
                if el != grp.unit:
                    gens.append(_gen_name(obj, lbl, el))
    relators = []
    for obj in C.objects:
        for lbl, grp in G.value[obj].factors:
            for a in grp.elements:
                for b in grp.elements:
                    if a == grp.unit or b == grp.unit:
                        continue
                    c = grp.table[(a, b)]
                    rel = [(_gen_name(obj, lbl, a), 1), (_gen_name(obj, lbl, b), 1)]
                    if c != grp.unit:
                        rel.append((_gen_name(obj, lbl, c), -1))
                    relators.append(tuple(rel))
    for alpha in C.morphisms:
        if C.is_identity(alpha):
            continue
        src_obj, dst_obj = C.dom[alpha], C.cod[alpha]
        hom = G.action[alpha]
        for lbl, grp in G.value[src_obj].factors:
            for el in grp.elements:
                if el == grp.unit:
                    continue
                image = hom.per_factor[lbl][el]
                rel = [(_gen_name(src_obj, lbl, el), 1)] + [
                    (_gen_name(dst_obj, l2, e2), -1) for l2, e2 in reversed(image)
                ]
                relators.append(tuple(rel))
    P = GroupPresentation(gens, relators)
    return tietze_simplify(P) if simplify else P


def ab_colim_derived(C, M, n_max, chain_cap=DEFAULT_CHAIN_CAP):
    """Derived colimits of an abelian diagram for n = 0..n_max.

    Homology of the normalized simplicial-replacement complex: degree-n
    term is the direct sum of M(origin) over nondegenerate chains, with
    boundary the alternating face sum, faces hitting degenerate chains
    contributing zero; computed through degree n_max + 1.
    """
    complex_ = srep_ab_complex(C, M, n_max, chain_cap=chain_cap)
    return [complex_.homology(n) for n in range(n_max + 1)]


def srep_ab_complex(C, M, n_max, chain_cap=DEFAULT_CHAIN_CAP):
    chains = {}
    for n in range(n_max + 2):
        chains[n] = composable_chains(C, n, nondegenerate=True)
        if len(chains[n]) > chain_cap:
            raise TruncationUnsound(
                "degree %d has %d chains (cap %d)" % (n, len(chains[n]), chain_cap)
            )
    groups = {-1: FGAb.trivial()}
    offsets = {}
    for n in range(n_max + 2):
        blocks = [M.value[chain_origin(C, ch)] for ch in chains[n]]
        off = []
        total = 0
        for b in blocks:
            off.append(total)
            total += b.gens
        offsets[n] = off
        groups[n] = FGAb.trivial().direct_sum(*blocks) if blocks else FGAb.trivial()
    index = {n: {ch: k for k, ch in enumerate(chains[n])} for n in chains}
    boundaries = {0: AbMap.zero(groups[0], groups[-1])}
    for n in range(1, n_max + 2):
        rows = groups[n - 1].gens
        cols = groups[n].gens
        Mx = [[0] * cols for _ in range(rows)]
        for j, ch in enumerate(chains[n]):
            src = M.value[chain_origin(C, ch)]
            col0 = offsets[n][j]
            for i in range(n + 1):
                tgt_chain = chain_face(C, ch, i)
                if chain_is_degenerate(C, tgt_chain):
                    continue
                k = index[n - 1].get(tgt_chain)
                if k is None:
                    continue
                sign = -1 if i % 2 else 1
                row0 = offsets[n - 1][k]
                if i == 0:
                    mat = M.action[ch[0]].matrix
                    for r in range(mat.rows):
                        for c in range(mat.cols):
                            Mx[row0 + r][col0 + c] += sign * mat.entries[r][c]
                else:
                    for r in range(src.gens):
                        Mx[row0 + r][col0 + r] += sign
        boundaries[n] = AbMap(groups[n], groups[n - 1], IntMatrix(Mx, (rows, cols)), check=False)
    return ChainComplex(groups, boundaries)


def ab_colim0_by_coequalizer(C, M):
    """Independent degree-0 oracle: cokernel of the difference map from
    the sum over non-identity morphisms of M(dom) into the sum over
    objects of M(c)."""
    obj_off = {}
    total = 0
    for o in C.objects:
        obj_off[o] = total
        total += M.value[o].gens
    cols = []
    for o in C.objects:
        for col in M.value[o].rels.columns():
            v = [0] * total
            for r, x in enumerate(col):
                v[obj_off[o] + r] = x
            cols.append(v)
    for alpha in C.morphisms:
        if C.is_identity(alpha):
            continue
        src, dst = C.dom[alpha], C.cod[alpha]
        mat = M.action[alpha].matrix
        for c in range(M.value[src].gens):
            v = [0] * total
            v[obj_off[src] + c] += 1
            for r in range(mat.rows):
                v[obj_off[dst] + r] -= mat.entries[r][c]
            cols.append(v)
    return FGAb(total, IntMatrix.from_columns(cols, total))


# -- abelianization ----------------------------------------------------------


def abelianize_free_product(fp):
    """Direct sum of the factor abelianizations, with one generator per
    non-unit element; returns (FGAb, generator index list)."""
    gens = []
    for lbl, grp in fp.factors:
        for el in grp.elements:
            if el != grp.unit:
                gens.append((lbl, el))
    gidx = {g: i for i, g in enumerate(gens)}
    cols = []
    for lbl, grp in fp.factors:
        for a in grp.elements:
            for b in grp.elements:
                if a == grp.unit or b == grp.unit:
                    continue
                col = [0] * len(gens)
                col[gidx[(lbl, a)]] += 1
                col[gidx[(lbl, b)]] += 1
                c = grp.table[(a, b)]
                if c != grp.unit:
                    col[gidx[(lbl, c)]] -= 1
                cols.append(col)
    return FGAb(len(gens), IntMatrix.from_columns(cols, len(gens))), gens


def abelianize_diagram(G):
    """Objectwise abelianization of a group diagram."""
    values = {}
    gen_lists = {}
    for o in G.base.objects:
        values[o], gen_lists[o] = abelianize_free_product(G.value[o])
    actions = {}
    for alpha in G.base.morphisms:
        src_o, dst_o = G.base.dom[alpha], G.base.cod[alpha]
        hom = G.action[alpha]
        src_gens = gen_lists[src_o]
        dst_idx = {g: i for i, g in enumerate(gen_lists[dst_o])}
        cols = []
        for lbl, el in src_gens:
            col = [0] * len(dst_idx)
            for l2, e2 in hom.per_factor[lbl][el]:
                col[dst_idx[(l2, e2)]] += 1
            cols.append(col)
        actions[alpha] = AbMap(
            values[src_o],
            values[dst_o],
            IntMatrix.from_columns(cols, len(dst_idx)),
            check=False,
        )
    return AbDiagram(G.base, values, actions, name=G.name and "ab(%s)" % G.name)


# -- Kan extension along virtual discrete cofibrations ------------------------


class _FibreAnalysis:
    __slots__ = ("cat", "proj", "parts", "components", "subcats", "finals", "chosen", "comp_of")

    def __init__(self, cat, proj, parts):
        self.cat = cat
        self.proj = proj
        self.parts = parts
        self.components = connected_components(cat)
        self.subcats = [full_subcategory(cat, comp) for comp in self.components]
        self.finals = []
        self.chosen = []
        self.comp_of = {}
        for k, (comp, sub) in enumerate(zip(self.components, self.subcats)):
            fin = final_objects(sub)
            self.finals.append(fin)
            self.chosen.append(min(fin, key=cat.objects.index) if fin else None)
            for obj in comp:
                self.comp_of[obj] = k

    def ok(self):
        return all(c is not None for c in self.chosen)

    def final_morphism(self, obj):
        """The unique morphism from obj to the chosen final object of its
        component, inside the component's full subcategory."""
        k = self.comp_of[obj]
        tgt = self.chosen[k]
        arrows = self.subcats[k].hom(obj, tgt)
        if len(arrows) != 1:
            raise DiagramError("final object not unique enough at %s" % obj)
        return arrows[0], tgt


def analyze_fibres(S):
    """Left-fibre analysis of a functor at every target object."""
    return {d: _FibreAnalysis(*comma_left_fibre_parts(S, d)) for d in S.target.objects}


def kan_extend_vdc(S, diagram, fibres=None):
    """Left Kan extension along a virtual discrete cofibration.

    The value at d is the free product (direct sum) of the diagram values
    at the chosen final objects of the components of S↓d; a morphism
    beta: d -> d' sends the factor at gamma to the factor at the final
    object of the component of beta∘gamma, transporting coefficients
    along the unique arrow into it.

    Raises NotVDC when some fibre component has no final object.
    """
    fibres = fibres or analyze_fibres(S)
    for d, fa in fibres.items():
        if not fa.ok():
            raise NotVDC("fibre over %s has a component without a final object" % d)
    if isinstance(diagram, AbDiagram):
        return _kan_extend_ab(S, diagram, fibres)
    return _kan_extend_grp(S, diagram, fibres)


def _fin_objects(fa):
    return list(fa.chosen)


def _postcomposed_id(D, fa, beta, gamma):
    """Object id of (c, beta∘u) in the fibre over cod(beta)."""
    c, u = fa.parts[gamma]
    return fincat._comma_obj_id(c, D.comp[(beta, u)])


def _kan_extend_grp(S, G, fibres):
    D = S.target
    values = {}
    for d in D.objects:
        fa = fibres[d]
        factors = []
        for gamma in _fin_objects(fa):
            c = fa.parts[gamma][0]
            for lbl, grp in G.value[c].factors:
                factors.append(("%s::%s" % (gamma, lbl), grp))
        values[d] = FreeProduct(factors)
    actions = {}
    for beta in D.morphisms:
        d, d2 = D.dom[beta], D.cod[beta]
        fa, fa2 = fibres[d], fibres[d2]
        per = {}
        for gamma in _fin_objects(fa):
            c = fa.parts[gamma][0]
            gamma2 = _postcomposed_id(D, fa, beta, gamma)
            arrow, phi = fa2.final_morphism(gamma2)
            alpha = fa2.proj.on_mor(arrow)
            hom = G.action[alpha]
            for lbl, grp in G.value[c].factors:
                table = {}
                for el in grp.elements:
                    word = hom.per_factor[lbl][el]
                    table[el] = tuple(("%s::%s" % (phi, l2), e2) for l2, e2 in word)
                per["%s::%s" % (gamma, lbl)] = table
        actions[beta] = GroupHom(values[d], values[d2], per, _validate=False)
    return GroupDiagram(D, values, actions, name="Lan(%s)" % (G.name or "?"))


def _kan_extend_ab(S, M, fibres):
    D = S.target
    values = {}
    block_offsets = {}
    for d in D.objects:
        fa = fibres[d]
        blocks = []
        offsets = {}
        total = 0
        for gamma in _fin_objects(fa):
            c = fa.parts[gamma][0]
            offsets[gamma] = total
            total += M.value[c].gens
            blocks.append(M.value[c])
        values[d] = FGAb.trivial().direct_sum(*blocks) if blocks else FGAb.trivial()
        block_offsets[d] = offsets
    actions = {}
    for beta in D.morphisms:
        d, d2 = D.dom[beta], D.cod[beta]
        fa, fa2 = fibres[d], fibres[d2]
        rows = values[d2].gens
        cols = values[d].gens
        Mx = [[0] * cols for _ in range(rows)]
        for gamma in _fin_objects(fa):
            gamma2 = _postcomposed_id(D, fa, beta, gamma)
            arrow, phi = fa2.final_morphism(gamma2)
            alpha = fa2.proj.on_mor(arrow)
            mat = M.action[alpha].matrix
            r0 = block_offsets[d2][phi]
            c0 = block_offsets[d][gamma]
            for r in range(mat.rows):
                for cc in range(mat.cols):
                    Mx[r0 + r][c0 + cc] += mat.entries[r][cc]
        actions[beta] = AbMap(values[d], values[d2], IntMatrix(Mx, (rows, cols)), check=False)
    return AbDiagram(D, values, actions, name="Lan(%s)" % (M.name or "?"))
