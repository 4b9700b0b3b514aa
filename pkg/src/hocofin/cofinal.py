"""Decision procedures for contractibility and homotopy cofinality.

Contractibility of a nerve is undecidable in general, so the certifier is
honest about what it knows: CONTRACTIBLE comes with a replayable
certificate (a cone object, possibly after a sequence of one-object
collapses), NONCONTRACTIBLE comes with a conclusive witness (emptiness,
disconnectedness, a nonzero reduced homology class, or a nontrivial
fundamental-group fingerprint entry), EVIDENCE means every computed
invariant was trivial up to the requested degree, and INCONCLUSIVE means
a resource cap was hit first.
"""

from __future__ import annotations

from .fincat import (
    comma_coslice,
    comma_left_fibre,
    connected_components,
    final_objects,
    full_subcategory,
    initial_objects,
    opposite,
)
from .groups import BudgetExceeded, fingerprint, tietze_simplify
from .presheaf import edge_path_group, homology_ss, nerve


CONTRACTIBLE = "CONTRACTIBLE"
EVIDENCE = "EVIDENCE"
NONCONTRACTIBLE = "NONCONTRACTIBLE"
INCONCLUSIVE = "INCONCLUSIVE"

_RANK = {NONCONTRACTIBLE: 0, INCONCLUSIVE: 1, EVIDENCE: 2, CONTRACTIBLE: 3}


class ContractibilityVerdict:
    """Outcome of a contractibility check; ordered by strength."""

    __slots__ = ("kind", "certificate", "witness", "checks")

    def __init__(self, kind, certificate=None, witness=None, checks=None):
        self.kind = kind
        self.certificate = certificate
        self.witness = witness
        self.checks = checks

    def rank(self):
        return _RANK[self.kind]

    def to_json(self):
        out = {"verdict": self.kind}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.witness is not None:
            out["witness"] = self.witness
        if self.checks is not None:
            out["checks"] = self.checks
        return out

    def __repr__(self):
        return "Verdict(%s)" % self.kind


def weakest(verdicts):
    verdicts = list(verdicts)
    if not verdicts:
        return ContractibilityVerdict(CONTRACTIBLE, certificate={"kind": "vacuous"})
    return min(verdicts, key=lambda v: v.rank())


# -- finally discrete categories ---------------------------------------------


def is_finally_discrete(B):
    """Whether every connected component has a final object (final within
    the component's full subcategory); returns per-component witnesses."""
    details = []
    ok = True
    for comp in connected_components(B):
        sub = full_subcategory(B, comp)
        fins = final_objects(sub)
        details.append({"component": comp, "final_objects": fins})
        if not fins:
            ok = False
    return ok, details


def is_vdc(S):
    """Whether every left fibre S↓d is finally discrete."""
    witnesses = {}
    ok = True
    for d in S.target.objects:
        cat, _ = comma_left_fibre(S, d)
        good, details = is_finally_discrete(cat)
        witnesses[d] = {"finally_discrete": good, "components": details}
        if not good:
            ok = False
    return ok, witnesses


# -- contractibility ----------------------------------------------------------


def _reflection(sub, x, rest):
    """Universal arrow from x into the full subcategory on rest: an object
    r and u: x -> r through which every x -> y (y in rest) factors
    uniquely."""
    for r in rest:
        for u in sub.hom(x, r):
            good = True
            for y in rest:
                for f in sub.hom(x, y):
                    count = sum(1 for g in sub.hom(r, y) if sub.comp[(g, u)] == f)
                    if count != 1:
                        good = False
                        break
                if not good:
                    break
            if good:
                return r, u
    return None


def _coreflection(sub, x, rest):
    for r in rest:
        for u in sub.hom(r, x):
            good = True
            for y in rest:
                for f in sub.hom(y, x):
                    count = sum(1 for g in sub.hom(y, r) if sub.comp[(u, g)] == f)
                    if count != 1:
                        good = False
                        break
                if not good:
                    break
            if good:
                return r, u
    return None


def _collapse_search(B, effort, max_states=20000):
    """Search for a collapse of B onto a cone, removing one object at a
    time (two at higher effort); depth-first with memoized dead ends."""
    memo = {}
    visited = [0]

    def dfs(state):
        if state in memo:
            return memo[state]
        visited[0] += 1
        if visited[0] > max_states:
            return None
        objs = [o for o in B.objects if o in state]
        sub = full_subcategory(B, objs)
        fins = final_objects(sub)
        if fins:
            result = {"kind": "collapse", "steps": [], "cone": fins[0], "side": "final"}
            memo[state] = result
            return result
        inits = initial_objects(sub)
        if inits:
            result = {"kind": "collapse", "steps": [], "cone": inits[0], "side": "initial"}
            memo[state] = result
            return result
        if len(objs) <= 1:
            memo[state] = None
            return None
        candidates = []
        for x in objs:
            rest = [o for o in objs if o != x]
            hit = _reflection(sub, x, rest)
            if hit:
                candidates.append(((x,), hit[0], "reflection"))
                continue
            hit = _coreflection(sub, x, rest)
            if hit:
                candidates.append(((x,), hit[0], "coreflection"))
        if effort >= 2:
            for i, x in enumerate(objs):
                for y in objs[i + 1 :]:
                    rest = [o for o in objs if o not in (x, y)]
                    if not rest:
                        continue
                    sub2 = sub
                    rx = _reflection(sub2, x, rest)
                    ry = _reflection(sub2, y, rest)
                    if rx and ry:
                        candidates.append(((x, y), (rx[0], ry[0]), "reflection"))
                        continue
                    cx = _coreflection(sub2, x, rest)
                    cy = _coreflection(sub2, y, rest)
                    if cx and cy:
                        candidates.append(((x, y), (cx[0], cy[0]), "coreflection"))
        for removed, via, direction in candidates:
            nxt = frozenset(o for o in state if o not in removed)
            result = dfs(nxt)
            if result is not None:
                step = {"removed": list(removed), "via": via, "direction": direction}
                result = {
                    "kind": "collapse",
                    "steps": [step] + result["steps"],
                    "cone": result["cone"],
                    "side": result["side"],
                }
                memo[state] = result
                return result
        memo[state] = None
        return None

    return dfs(frozenset(B.objects))


def _nerve_sizes(B, n):
    """Chain counts of the nerve per degree up to n, by dynamic programming
    over path endpoints."""
    counts = [len(B.objects)]
    ending = {o: 1 for o in B.objects}
    for _ in range(n):
        nxt = {o: 0 for o in B.objects}
        for f in B.morphisms:
            nxt[B.cod[f]] += ending[B.dom[f]]
        ending = nxt
        counts.append(sum(ending.values()))
    return counts


# dense exact SNF is cubic, so a few hundred simplices per degree is the
# practical ceiling for the homology fallback
DEFAULT_NERVE_CAP = 600


def certify_contractible(B, effort=1, n_max=2, nerve_cap=DEFAULT_NERVE_CAP):
    """Certify (non)contractibility of the nerve of B.

    Pipeline: emptiness, disconnectedness, cone object, iterated collapse,
    then truncated homology and the fundamental-group fingerprint as
    sound NONCONTRACTIBLE witnesses or as EVIDENCE; resource caps give
    INCONCLUSIVE rather than a wrong answer.
    """
    if not B.objects:
        return ContractibilityVerdict(NONCONTRACTIBLE, witness={"empty": True})
    comps = connected_components(B)
    if len(comps) > 1:
        return ContractibilityVerdict(
            NONCONTRACTIBLE, witness={"components": len(comps)}
        )
    fins = final_objects(B)
    if fins:
        return ContractibilityVerdict(
            CONTRACTIBLE, certificate={"kind": "cone", "object": fins[0], "side": "final"}
        )
    inits = initial_objects(B)
    if inits:
        return ContractibilityVerdict(
            CONTRACTIBLE, certificate={"kind": "cone", "object": inits[0], "side": "initial"}
        )
    cert = _collapse_search(B, effort, max_states=20000 * max(1, effort))
    if cert is not None:
        return ContractibilityVerdict(CONTRACTIBLE, certificate=cert)
    # invariants of the nerve of B itself, so witnesses do not depend on
    # the collapse machinery above
    n_eff = n_max + max(0, effort - 1)
    checks = {"n_max": n_eff}
    level = max(2, n_eff + 1)
    sizes = _nerve_sizes(B, level)
    if max(sizes) > nerve_cap:
        return ContractibilityVerdict(
            INCONCLUSIVE, checks={"reason": "nerve size %d over cap %d" % (max(sizes), nerve_cap)}
        )
    try:
        X = nerve(B, level, basepoint=B.objects[0])
        hs = homology_ss(X, n_eff)
        checks["homology"] = [str(h) for h in hs]
        for n in range(1, n_eff + 1):
            if not hs[n].is_trivial():
                return ContractibilityVerdict(
                    NONCONTRACTIBLE,
                    witness={"degree": n, "homology": str(hs[n])},
                    checks=checks,
                )
        pi1 = fingerprint(tietze_simplify(edge_path_group(X)))
        checks["pi1_fingerprint"] = list(pi1)
        if any(c != 1 for c in pi1):
            return ContractibilityVerdict(
                NONCONTRACTIBLE,
                witness={"pi1_fingerprint": list(pi1)},
                checks=checks,
            )
    except BudgetExceeded as exc:
        return ContractibilityVerdict(INCONCLUSIVE, checks={"reason": str(exc)})
    return ContractibilityVerdict(EVIDENCE, checks=checks)


def replay_certificate(B, cert):
    """Re-verify a contractibility certificate independently."""
    if cert["kind"] == "vacuous":
        return True
    if cert["kind"] == "cone":
        pool = final_objects(B) if cert["side"] == "final" else initial_objects(B)
        return cert["object"] in pool
    if cert["kind"] != "collapse":
        return False
    objs = list(B.objects)
    for step in cert["steps"]:
        sub = full_subcategory(B, objs)
        rest = [o for o in objs if o not in set(step["removed"])]
        for x in step["removed"]:
            inner = [o for o in rest]
            check = _reflection if step["direction"] == "reflection" else _coreflection
            if check(sub, x, inner) is None:
                return False
        objs = rest
    sub = full_subcategory(B, objs)
    pool = final_objects(sub) if cert["side"] == "final" else initial_objects(sub)
    return cert["cone"] in pool


def certify_homotopy_cofinal(S, effort=1, n_max=2, coinitial=False):
    """Certify contractibility of every coslice d↓S (or its opposite for
    the coinitial variant); the aggregate is the weakest verdict."""
    per_object = {}
    for d in S.target.objects:
        if coinitial:
            cat, _ = comma_left_fibre(S, d)
            cat = opposite(cat)
        else:
            cat = comma_coslice(S, d)
        per_object[d] = certify_contractible(cat, effort=effort, n_max=n_max)
    agg = weakest(per_object.values())
    return {"per_object": per_object, "aggregate": agg.kind}
