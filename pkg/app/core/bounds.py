"""Every bound, equality and vanishing statement as a checkable predicate on one graph.

Each check evaluates its hypothesis, computes the bound with exact arithmetic,
compares it with the computed invariant and records a verdict. A verdict is
``violated`` only when the hypothesis holds and the inequality fails.
"""
from __future__ import annotations

import logging
import math
import operator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Union

from app.core.certificates import FId, h_value, replay_certificate, search_me_certificate
from app.core.config import DEFAULT_DEPTH_CAP, DEFAULT_PROPM_BUDGET
from app.core.domination import ISOLATED_REASON, epsilon_extended, gamma, idom
from app.core.errors import FaceCountOverflowError, InfeasibleSizeError
from app.core.graph import (
    Graph,
    alpha_max_edge,
    delete_star,
    delete_vertex,
    distance,
    isolated_vertices,
    k1m_order,
    max_degree,
    vertex_set,
)
from app.core.homology import check_prime
from app.core.services import InvariantService

logger = logging.getLogger(__name__)

# int, exact rational, math.inf, or None when the quantity does not apply
Extended = Union[int, Fraction, float, None]


class RuleId(str, Enum):
    PD_EDGEDOM = "PD_EDGEDOM"
    PD_TAU = "PD_TAU"
    PD_LOWER_I = "PD_LOWER_I"
    PD_LOWER_GAMMA0 = "PD_LOWER_GAMMA0"
    PD_BIG_HEIGHT = "PD_BIG_HEIGHT"
    AMALGAM = "AMALGAM"
    PD_CHORDAL_EQ = "PD_CHORDAL_EQ"
    PD_LARGEGAMMA = "PD_LARGEGAMMA"
    PD_MAXDEGREE = "PD_MAXDEGREE"
    PD_MCONDITION = "PD_MCONDITION"
    PD_CHROMATIC = "PD_CHROMATIC"
    PD_ZELL = "PD_ZELL"
    REG_CHROMATIC = "REG_CHROMATIC"
    LEMMA_PDINDUCT = "LEMMA_PDINDUCT"
    LEMMA_PROPM = "LEMMA_PROPM"
    ME_EPSILON = "ME_EPSILON"
    HOM_PD = "HOM_PD"
    HOM_EPSILON = "HOM_EPSILON"
    HOM_GAMMA0_HALF = "HOM_GAMMA0_HALF"
    HOM_TAU = "HOM_TAU"
    HOM_K1M = "HOM_K1M"
    HOM_DIST3 = "HOM_DIST3"
    HOM_LATTICE = "HOM_LATTICE"
    HOM_CHORDAL_I = "HOM_CHORDAL_I"
    HOM_MCONDITION = "HOM_MCONDITION"
    DOM_GAMMA_IND = "DOM_GAMMA_IND"
    DOM_TAU_GAMMA = "DOM_TAU_GAMMA"
    DOM_EPS_GAMMA0 = "DOM_EPS_GAMMA0"
    DOM_ALH = "DOM_ALH"
    DOM_LONG = "DOM_LONG"
    DOM_CLAW_FREE = "DOM_CLAW_FREE"
    DOM_DELETE = "DOM_DELETE"
    CHAR_AGREEMENT = "CHAR_AGREEMENT"
    GOLDEN_VALUE = "GOLDEN_VALUE"


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"


def encode_extended(x: Extended) -> Union[int, str, None]:
    """JSON-safe form: ints stay ints, rationals become 'a/b', infinity 'inf'."""
    if x is None:
        return None
    if isinstance(x, float):
        return "inf" if x > 0 else "-inf"
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return int(x)


@dataclass(frozen=True)
class BoundCheck:
    rule_id: RuleId
    hypothesis_met: bool
    reason: str
    bound_value: Extended
    actual_value: Extended
    verdict: Verdict
    p: Optional[int] = None

    @property
    def violated(self) -> bool:
        return self.verdict is Verdict.VIOLATED

    def as_dict(self) -> dict:
        return {
            "rule": self.rule_id.value,
            "p": self.p,
            "hypothesis_met": self.hypothesis_met,
            "reason": self.reason,
            "bound": encode_extended(self.bound_value),
            "actual": encode_extended(self.actual_value),
            "verdict": self.verdict.value,
        }


def _skip(rule: RuleId, reason: str, p: Optional[int] = None) -> BoundCheck:
    return BoundCheck(rule, False, reason, None, None, Verdict.INAPPLICABLE, p)


def _judge(rule: RuleId, ok: bool, bound: Extended, actual: Extended, reason: str, p: Optional[int]) -> BoundCheck:
    verdict = Verdict.HOLDS if ok else Verdict.VIOLATED
    if not ok:
        logger.warning("%s violated: actual %s against bound %s (%s)", rule.value, actual, bound, reason)
    return BoundCheck(rule, True, reason, bound, actual, verdict, p)


def _at_most(rule: RuleId, actual: Extended, bound: Extended, reason: str = "", p: Optional[int] = None) -> BoundCheck:
    return _judge(rule, actual <= bound, bound, actual, reason, p)


def _at_least(rule: RuleId, actual: Extended, bound: Extended, reason: str = "", p: Optional[int] = None) -> BoundCheck:
    return _judge(rule, actual >= bound, bound, actual, reason, p)


_RELATIONS = {"le": operator.le, "ge": operator.ge, "eq": operator.eq}


def compare(rule: RuleId, relation: str, actual: Extended, bound: Extended, reason: str = "", p: Optional[int] = None) -> BoundCheck:
    """Generic check: ``actual <relation> bound`` with relation one of le, ge, eq."""
    return _judge(rule, _RELATIONS[relation](actual, bound), bound, actual, reason, p)


def _floor_fraction_of_n(n: int, h: Fraction) -> int:
    """floor(n (1 - 1/h)); an integer pd satisfies pd <= n(1 - 1/h) iff it is at most this."""
    return math.floor(n * (1 - 1 / Fraction(h)))


PD_RULES = (
    RuleId.PD_EDGEDOM, RuleId.PD_TAU, RuleId.PD_LOWER_I, RuleId.PD_LOWER_GAMMA0,
    RuleId.PD_BIG_HEIGHT, RuleId.AMALGAM, RuleId.PD_CHORDAL_EQ, RuleId.PD_LARGEGAMMA,
    RuleId.PD_MAXDEGREE, RuleId.PD_MCONDITION, RuleId.PD_CHROMATIC, RuleId.PD_ZELL,
    RuleId.REG_CHROMATIC, RuleId.LEMMA_PDINDUCT, RuleId.LEMMA_PROPM, RuleId.ME_EPSILON,
)
HOM_RULES = (
    RuleId.HOM_PD, RuleId.HOM_EPSILON, RuleId.HOM_GAMMA0_HALF, RuleId.HOM_TAU, RuleId.HOM_K1M,
    RuleId.HOM_DIST3, RuleId.HOM_LATTICE, RuleId.HOM_CHORDAL_I, RuleId.HOM_MCONDITION,
)


def check_propm(g: Graph, m: int, budget: int = DEFAULT_PROPM_BUDGET) -> BoundCheck:
    """If every m-subset spans an edge, some vertex has degree >= n/(m-1) - 1."""
    rule = RuleId.LEMMA_PROPM
    if m < 2:
        return _skip(rule, f"m = {m} is below 2")
    if comb(g.n, m) > budget:
        return _skip(rule, f"{comb(g.n, m)} subsets of size {m} exceed the scan budget {budget}")
    for combo in combinations(range(g.n), m):
        w = vertex_set(combo)
        if all(g.adj[v] & w == 0 for v in combo):
            return _skip(rule, f"independent {m}-set {list(combo)}")
    bound = Fraction(g.n, m - 1) - 1
    return _at_least(rule, max_degree(g), bound, f"m = {m}")


def _pdinduct(g: Graph, svc: InvariantService, pd: int, p: int) -> BoundCheck:
    rule = RuleId.LEMMA_PDINDUCT
    if g.n == 0:
        return _skip(rule, "graph has no vertices", p)
    best, best_x = None, -1
    for x in range(g.n):
        rhs = max(svc.pd_of(delete_star(g, x), p) + g.degree(x), svc.pd_of(delete_vertex(g, x), p) + 1)
        if best is None or rhs < best:
            best, best_x = rhs, x
    return _at_most(rule, pd, best, f"tightest at x = {best_x}", p)


def _me_epsilon(g: Graph, pd: int, p: int, depth_cap: int) -> BoundCheck:
    rule = RuleId.ME_EPSILON
    if g.edge_count == 0:
        return _skip(rule, "graph has no edges", p)
    cert = search_me_certificate(g, FId.EPSILON, depth_cap)
    if cert is None:
        return _judge(rule, False, None, pd, "no certificate found", p)
    ok = replay_certificate(g, cert) and pd <= cert.pd_bound
    return _judge(rule, ok, cert.pd_bound, pd, f"sequence {list(cert.sequence)}", p)


def check_all(
    g: Graph,
    p: int = 2,
    service: Optional[InvariantService] = None,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    propm_budget: int = DEFAULT_PROPM_BUDGET,
) -> list[BoundCheck]:
    """Every projective-dimension and regularity rule at characteristic p."""
    check_prime(p)
    svc = service or InvariantService(g)
    try:
        hr = svc.get_hochster(p)
    except (FaceCountOverflowError, InfeasibleSizeError) as exc:
        return [_skip(rule, str(exc), p) for rule in PD_RULES]

    n, pd = g.n, hr.pd
    lonely = isolated_vertices(g) != 0
    has_edge = g.edge_count > 0
    chordal = svc.get_flags()["chordal"]
    val = {name: svc.get_solver(name).value for name in ("gamma", "i", "gamma0", "tau", "epsilon")}
    out: list[BoundCheck] = []

    if lonely:
        eps_ext = epsilon_extended(g)
        out.append(_at_most(RuleId.PD_EDGEDOM, pd, n - eps_ext, f"extended epsilon = {eps_ext}", p))
        for rule in (RuleId.PD_TAU, RuleId.PD_LOWER_GAMMA0, RuleId.AMALGAM):
            out.append(_skip(rule, ISOLATED_REASON, p))
    else:
        out.append(_at_most(RuleId.PD_EDGEDOM, pd, n - val["epsilon"], f"epsilon = {val['epsilon']}", p))
        out.append(_at_most(RuleId.PD_TAU, pd, n - val["tau"], f"tau = {val['tau']}", p))
        out.append(_at_least(RuleId.PD_LOWER_GAMMA0, pd, val["gamma0"], "", p))
        lower, upper = n - val["i"], n - max(val["epsilon"], val["tau"])
        out.append(_judge(RuleId.AMALGAM, lower <= pd <= upper, upper, pd, f"lower bound n - i = {lower}", p))
    out.append(_at_least(RuleId.PD_LOWER_I, pd, n - val["i"], f"i = {val['i']}", p))
    out.append(_at_least(RuleId.PD_BIG_HEIGHT, pd, hr.bh, "", p))

    if chordal:
        ok = pd == n - val["i"] == hr.bh
        out.append(_judge(RuleId.PD_CHORDAL_EQ, ok, n - val["i"], pd, f"bh = {hr.bh}", p))
        out.append(_at_most(RuleId.PD_LARGEGAMMA, pd, n - val["gamma"], f"gamma = {val['gamma']}", p))
        d = max_degree(g)
        out.append(_at_most(RuleId.PD_MAXDEGREE, pd, _floor_fraction_of_n(n, Fraction(d + 1)), f"max degree {d}", p))
    else:
        for rule in (RuleId.PD_CHORDAL_EQ, RuleId.PD_LARGEGAMMA, RuleId.PD_MAXDEGREE):
            out.append(_skip(rule, "not chordal", p))

    if has_edge:
        m = k1m_order(g)
        h = h_value(g)
        out.append(_at_most(RuleId.PD_MCONDITION, pd, _floor_fraction_of_n(n, h), f"K_1,{m + 1}-free, h = {h}", p))
        chi = svc.get_chromatic_complement()
        alpha = Fraction(chi - 1, chi)
        edge = alpha_max_edge(g, alpha)
        h_chi = edge.d + alpha * edge.e + 1
        reason = f"chi(G^c) = {chi}, edge ({edge.x}, {edge.y}), h = {h_chi}"
        out.append(_at_most(RuleId.PD_CHROMATIC, pd, _floor_fraction_of_n(n, h_chi), reason, p))
    else:
        out.append(_skip(RuleId.PD_MCONDITION, "graph has no edges", p))
        out.append(_skip(RuleId.PD_CHROMATIC, "graph has no edges", p))

    if g.coords is None or n == 0:
        out.append(_skip(RuleId.PD_ZELL, "no lattice coordinates", p))
    else:
        ell = len(g.coords[0])
        out.append(_at_most(RuleId.PD_ZELL, pd, _floor_fraction_of_n(n, Fraction(2 * ell + 1)), f"l = {ell}", p))

    chi = svc.get_chromatic_complement()
    out.append(_at_most(RuleId.REG_CHROMATIC, hr.reg, chi, "", p))
    out.append(_pdinduct(g, svc, pd, p))
    propm = check_propm(g, svc.get_independence_number() + 1, propm_budget)
    out.append(BoundCheck(propm.rule_id, propm.hypothesis_met, propm.reason, propm.bound_value,
                          propm.actual_value, propm.verdict, p))
    out.append(_me_epsilon(g, pd, p, depth_cap))
    return out


def distance3_set(g: Graph) -> list[int]:
    """Greedy ascending set whose members are pairwise at distance >= 3."""
    chosen: list[int] = []
    for v in range(g.n):
        if all(distance(g, u, v) >= 3 for u in chosen):
            chosen.append(v)
    return chosen


def check_homology_vanishing(g: Graph, p: int = 2, service: Optional[InvariantService] = None) -> list[BoundCheck]:
    """Each rule gives T with H~_k(ind G) = 0 for every integer k < T.

    The recorded actual value is the smallest k with nonzero homology
    (infinity when all of it vanishes), so a rule holds iff actual >= T.
    """
    check_prime(p)
    svc = service or InvariantService(g)
    pd_reason = ""
    try:
        profile = svc.get_homology(p)
        pd: Optional[int] = svc.get_pd(p)
    except FaceCountOverflowError as exc:
        return [_skip(rule, str(exc), p) for rule in HOM_RULES]
    except InfeasibleSizeError as exc:
        pd, pd_reason = None, str(exc)

    first = profile.first_nonzero()
    actual: Extended = math.inf if first is None else first
    n = g.n
    lonely = isolated_vertices(g) != 0
    flags = svc.get_flags()
    out: list[BoundCheck] = []

    def vanish(rule: RuleId, threshold: Extended, reason: str = "") -> None:
        out.append(_at_least(rule, actual, threshold, reason, p))

    if pd is None:
        out.append(_skip(RuleId.HOM_PD, pd_reason, p))
    else:
        vanish(RuleId.HOM_PD, n - pd - 1, f"pd = {pd}")

    if lonely:
        for rule in (RuleId.HOM_EPSILON, RuleId.HOM_GAMMA0_HALF, RuleId.HOM_TAU, RuleId.HOM_K1M):
            out.append(_skip(rule, ISOLATED_REASON, p))
    elif n == 0:
        for rule in (RuleId.HOM_EPSILON, RuleId.HOM_GAMMA0_HALF, RuleId.HOM_TAU, RuleId.HOM_K1M):
            out.append(_skip(rule, "graph has no vertices", p))
    else:
        eps = svc.get_solver("epsilon").value
        g0 = svc.get_solver("gamma0").value
        t = svc.get_solver("tau").value
        vanish(RuleId.HOM_EPSILON, eps - 1, f"epsilon = {eps}")
        vanish(RuleId.HOM_GAMMA0_HALF, Fraction(g0, 2) - 1, f"gamma0 = {g0}")
        vanish(RuleId.HOM_TAU, t - 1, f"tau = {t}")
        m = k1m_order(g) + 1
        dim = svc.get_ind_dimension()
        vanish(RuleId.HOM_K1M, math.ceil(Fraction(dim - 2 * m + 3, m - 1)) + 1, f"K_1,{m}-free, dim = {dim}")

    if flags["connected"] and g.edge_count > 0:
        a = distance3_set(g)
        vanish(RuleId.HOM_DIST3, len(a) - 1, f"A = {a}")
    else:
        out.append(_skip(RuleId.HOM_DIST3, "graph is not connected with an edge", p))

    if g.coords is None or n == 0:
        out.append(_skip(RuleId.HOM_LATTICE, "no lattice coordinates", p))
    else:
        ell = len(g.coords[0])
        vanish(RuleId.HOM_LATTICE, Fraction(n, 2 * ell + 1) - 1, f"l = {ell}")

    if flags["chordal"]:
        i_value = svc.get_solver("i").value
        vanish(RuleId.HOM_CHORDAL_I, i_value - 1, f"i = {i_value}")
    else:
        out.append(_skip(RuleId.HOM_CHORDAL_I, "not chordal", p))

    if g.edge_count > 0:
        h = h_value(g)
        vanish(RuleId.HOM_MCONDITION, n / h - 1, f"h = {h}")
    else:
        out.append(_skip(RuleId.HOM_MCONDITION, "graph has no edges", p))
    return out


def _delete_pairs(g: Graph) -> list[tuple[int, int]]:
    """Edges (v, w), both orientations, with N(v) - w inside N(w)."""
    pairs = []
    for v, w in g.edges():
        for a, b in ((v, w), (w, v)):
            if g.adj[a] & ~(1 << b) & ~g.adj[b] == 0:
                pairs.append((a, b))
    return sorted(pairs)


def check_domination(g: Graph, service: Optional[InvariantService] = None) -> list[BoundCheck]:
    """Relations among the domination parameters; independent of the field."""
    svc = service or InvariantService(g)
    val = {name: svc.get_solver(name).value for name in ("gamma", "i", "gamma0", "tau", "epsilon")}
    lonely = isolated_vertices(g) != 0
    flags = svc.get_flags()
    out: list[BoundCheck] = []

    out.append(_at_most(RuleId.DOM_GAMMA_IND, val["gamma"], val["i"], "gamma <= i"))
    if lonely:
        for rule in (RuleId.DOM_TAU_GAMMA, RuleId.DOM_EPS_GAMMA0, RuleId.DOM_ALH):
            out.append(_skip(rule, ISOLATED_REASON))
    else:
        out.append(_at_most(RuleId.DOM_TAU_GAMMA, val["tau"], val["gamma"], "tau <= gamma"))
        out.append(_at_least(RuleId.DOM_EPS_GAMMA0, 2 * val["epsilon"], val["gamma0"], "2 epsilon >= gamma0"))
        out.append(_at_most(RuleId.DOM_ALH, val["i"] + val["gamma0"], g.n, "i + gamma0 <= n"))

    for rule, flag in ((RuleId.DOM_LONG, "long"), (RuleId.DOM_CLAW_FREE, "claw_free")):
        if flags[flag]:
            out.append(_judge(rule, val["i"] == val["gamma"], val["gamma"], val["i"], "i = gamma", None))
        else:
            out.append(_skip(rule, f"not {flag.replace('_', '-')}"))

    pairs = _delete_pairs(g)
    if not pairs:
        out.append(_skip(RuleId.DOM_DELETE, "no edge (v, w) with N(v) - w inside N(w)"))
        return out
    removed = sorted({w for _, w in pairs})
    for name, solver in (("gamma", gamma), ("i", idom)):
        after = {w: solver(delete_vertex(g, w)).value for w in removed}
        w_min = min(removed, key=lambda w: (after[w], w))
        out.append(_at_most(RuleId.DOM_DELETE, val[name], after[w_min], f"{name}: tightest w = {w_min}"))
    return out


def check_characteristics(g: Graph, chars: Sequence[int], service: Optional[InvariantService] = None) -> BoundCheck:
    """Chordal graphs have the same pd at every characteristic."""
    rule = RuleId.CHAR_AGREEMENT
    svc = service or InvariantService(g)
    if len(set(chars)) < 2:
        return _skip(rule, "fewer than two characteristics")
    if not svc.get_flags()["chordal"]:
        return _skip(rule, "not chordal")
    try:
        pds = {p: svc.get_pd(p) for p in sorted(set(chars))}
    except (FaceCountOverflowError, InfeasibleSizeError) as exc:
        return _skip(rule, str(exc))
    values = sorted(set(pds.values()))
    return _judge(rule, len(values) == 1, values[0], values[-1], f"pd by characteristic {pds}", None)


def verify_graph(
    g: Graph,
    chars: Sequence[int] = (2,),
    service: Optional[InvariantService] = None,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    propm_budget: int = DEFAULT_PROPM_BUDGET,
) -> list[BoundCheck]:
    """All checks for one graph in canonical order."""
    svc = service or InvariantService(g)
    out: list[BoundCheck] = []
    for p in chars:
        out.extend(check_all(g, p, svc, depth_cap, propm_budget))
        out.extend(check_homology_vanishing(g, p, svc))
    out.extend(check_domination(g, svc))
    out.append(check_characteristics(g, chars, svc))
    return out


def violations(checks: Sequence[BoundCheck]) -> list[BoundCheck]:
    return [c for c in checks if c.violated]
