"""Automorphism constraint engine for the (p, p+2, r) candidate family.

Character-sum integrality for the local strongly regular graph, congruence
enumeration of the distance distribution of a prime-order automorphism,
the case analysis of proper SRG subgraphs, imprimitivity-block and
centralizer filters, and the derived prime-spectrum bounds for stabilizers
of a vertex-transitive group.

Conventions used throughout:

* the "local graph" is the SRG ((p+2)(p^2+4p+2), p(p+3), p-2, p);
* s = (p+2)^2 - 2 = p^2 + 4p + 2 is the largest admissible prime
  automorphism order of the local graph;
* the "cover" is the diameter-4 candidate itself, the "second
  subconstituent" the distance-2 graph of one of its vertices;
* alpha_j counts vertices displaced to distance j by an automorphism.

Operations whose derivation needs p to be a prime power larger than 2
return an ``inapplicable`` report (or None for plain-set results) when that
hypothesis fails, so parameter scans can proceed without silently applying
a constraint outside its range of validity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .at4 import At4Params, intersection_array
from .exactnum import (
    divisors,
    exact_sqrt,
    is_prime,
    mult_order,
    prime_power_base,
    prime_set,
    primes_upto,
)
from .srg import Verdict, family_multiplicities

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class AutProfile:
    """Distance distribution (alpha_0, alpha_1, alpha_2) of an automorphism
    of a diameter-2 graph, together with the element's order."""

    order: int
    alpha0: int
    alpha1: int
    alpha2: int

    def counts(self) -> tuple[int, int, int]:
        return (self.alpha0, self.alpha1, self.alpha2)


@dataclass(frozen=True)
class Condition:
    """One named check inside a case report."""

    code: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"code": self.code, "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class CaseReport:
    """Outcome of one case analysis: a verdict plus every condition that was
    checked, so a failing report doubles as an exclusion certificate."""

    label: str
    params: tuple
    verdict: str
    conditions: tuple[Condition, ...] = ()
    data: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def failed_codes(self) -> tuple[str, ...]:
        return tuple(c.code for c in self.conditions if not c.ok)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "params": list(self.params),
            "verdict": self.verdict,
            "conditions": [c.to_dict() for c in self.conditions],
            "data": self.data,
            "notes": list(self.notes),
        }


def _inapplicable(label: str, params: tuple, why: str) -> CaseReport:
    return CaseReport(label, params, INAPPLICABLE, notes=(why,))


def _is_prime_power_gt2(p: int) -> bool:
    return p > 2 and prime_power_base(p) is not None


def local_vertex_count(p: int) -> int:
    """Order v = (p+2)((p+2)^2 - 2) of the local graph."""
    return (p + 2) * ((p + 2) ** 2 - 2)


# ---------------------------------------------------------------------------
# character sums on the local graph
# ---------------------------------------------------------------------------


def chi_values(p: int, profile: AutProfile) -> tuple[Fraction, Fraction]:
    """Characters of the permutation action projected to the two
    non-principal eigenspaces of the local graph, as exact rationals.

    chi_1 = ((p+3)a0/2 + a1/2 - a2/(2(p+1))) / (p+2)
    chi_2 = (p(p+3)a0/2 - (p+2)a1/2 + p*a2/(2(p+1))) / ((p+2)^2 - 2)
    """
    if p < 2:
        raise ValueError(f"chi_values requires p >= 2, got {p}")
    a0, a1, a2 = profile.counts()
    if a0 < 0 or a1 < 0 or a2 < 0 or a0 + a1 + a2 != local_vertex_count(p):
        raise ValueError(f"profile {profile.counts()} does not sum to v = {local_vertex_count(p)}")
    half = Fraction(1, 2)
    frac = Fraction(1, 2 * (p + 1))
    chi1 = ((p + 3) * a0 * half + a1 * half - a2 * frac) / (p + 2)
    chi2 = (p * (p + 3) * a0 * half - (p + 2) * a1 * half + p * a2 * frac) / ((p + 2) ** 2 - 2)
    return (chi1, chi2)


def chi_filter(p: int, profile: AutProfile) -> Verdict:
    """Integrality and order-divisibility filter on a prime-order profile.

    Passes iff chi_1 and chi_2 are integers and the element order divides
    both chi_1 - n1 and chi_2 - n2, where n1, n2 are the eigenspace
    dimensions.
    """
    ell = profile.order
    if not is_prime(ell):
        raise ValueError(f"chi_filter requires a prime order, got {ell}")
    chi1, chi2 = chi_values(p, profile)
    n1, n2 = family_multiplicities(p)
    reasons = []
    if chi1.denominator != 1:
        reasons.append("chi1-non-integral")
    if chi2.denominator != 1:
        reasons.append("chi2-non-integral")
    if not reasons:
        if (int(chi1) - n1) % ell != 0:
            reasons.append("chi1-congruence")
        if (int(chi2) - n2) % ell != 0:
            reasons.append("chi2-congruence")
    return Verdict(not reasons, tuple(reasons))


# ---------------------------------------------------------------------------
# alpha_1 enumeration for prime-order automorphisms of the local graph
# ---------------------------------------------------------------------------


def alpha1_residues(p: int, ell: int, fix: int) -> tuple[int, int, int]:
    """Residues (r1, r2) mod 2(p+1)*ell required of alpha_1 by the two
    character congruences, for an element of prime order ell fixing exactly
    ``fix`` vertices.  Returns (r1, r2, modulus)."""
    n1, n2 = family_multiplicities(p)
    m = 2 * (p + 1) * ell
    r1 = (2 * (p + 1) * n1 - (p + 2) * fix + ((p + 2) ** 2 - 2)) % m
    r2 = (p * fix - 2 * (p + 1) * n2 + p * (p + 2)) % m
    return (r1, r2, m)


def alpha1_candidates(p: int, ell: int, fix: int) -> frozenset[int]:
    """All alpha_1 values in [0, v - fix] compatible with both character
    congruences for a prime order ell and fixed-point count ``fix``.

    The two congruences share the modulus 2(p+1)*ell; their intersection is
    a single residue class when they agree and empty otherwise, so the
    enumeration is complete by construction.  A positive ``fix`` must not
    exceed the fixed-subgraph bound (p+2)^2 - 2.
    """
    if p <= 2:
        raise ValueError(f"alpha1_candidates requires p > 2, got {p}")
    if not is_prime(ell):
        raise ValueError(f"alpha1_candidates requires a prime order, got {ell}")
    bound = (p + 2) ** 2 - 2
    if fix < 0 or (fix > 0 and fix > bound):
        raise ValueError(f"fixed-point count {fix} outside [0, {bound}]")
    r1, r2, m = alpha1_residues(p, ell, fix)
    if r1 != r2:
        return frozenset()
    top = local_vertex_count(p) - fix
    return frozenset(range(r1, top + 1, m))


def alpha1_expressions_consistent(p: int, ell: int, fix_limit: int | None = None) -> bool:
    """Check, for every fixed-point count up to the bound, that the two
    alpha_1 congruences agree exactly when ell divides the number of
    displaced vertices v - fix.  Runs in O(fix_limit) integer operations."""
    if p <= 2:
        raise ValueError(f"requires p > 2, got {p}")
    if not is_prime(ell):
        raise ValueError(f"requires a prime order, got {ell}")
    bound = (p + 2) ** 2 - 2
    limit = bound if fix_limit is None else fix_limit
    v = local_vertex_count(p)
    r1, r2, m = alpha1_residues(p, ell, 0)
    step1 = (p + 2) % m
    step2 = p % m
    vres = v % ell
    for _ in range(limit + 1):
        if (r1 == r2) != (vres == 0):
            return False
        r1 -= step1
        if r1 < 0:
            r1 += m
        r2 += step2
        if r2 >= m:
            r2 -= m
        vres -= 1
        if vres < 0:
            vres += ell
    return True


# ---------------------------------------------------------------------------
# fixed-point structure in the local graph
# ---------------------------------------------------------------------------


def local_fixed_structure(p: int, ell: int) -> CaseReport:
    """Structural constraints on the fixed subgraph of an order-ell
    automorphism of the local graph, classified by how ell compares to p.

    * ell < p: no structural constraint beyond the character filter.
    * ell = p: the fixed-point count is 4 mod p, alpha_1 = p(fix + p + 2)
      mod 2p(p+1), and every non-trivial fixed component is amply regular
      with valency p*l for even l <= p+2 and order at least 4(p+1).
    * ell > p: a non-empty fixed set is impossible; the order can occur at
      all only fixed-point-freely, which needs ell | (p+2)^2 - 2 or
      ell | p+2.
    """
    if not is_prime(ell):
        raise ValueError(f"order must be prime, got {ell}")
    label = "local-fixed-structure"
    if not _is_prime_power_gt2(p):
        return _inapplicable(label, (p, ell), "requires p a prime power with p > 2")
    s = (p + 2) ** 2 - 2
    fpf_ok = (ell % 2 == 1 and (s % ell == 0 or (p + 2) % ell == 0)) or (
        ell == 2 and p % 2 == 0
    )
    if ell < p:
        return CaseReport(
            label,
            (p, ell),
            PASS,
            data={
                "case": "small-order",
                "fix_bound": s,
                "fixed_points_possible": True,
                "fixed_point_free_possible": fpf_ok,
            },
        )
    if ell == p:
        return CaseReport(
            label,
            (p, ell),
            PASS,
            data={
                "case": "order-p",
                "fix_bound": s,
                "fix_residue_mod_p": 4 % p,
                "alpha1_step": 2 * p * (p + 1),
                "alpha1_base": "p*(fix + p + 2)",
                "component_valencies": [p * l for l in range(2, p + 3, 2)],
                "min_component_order": 4 * (p + 1),
                "fixed_points_possible": True,
                "fixed_point_free_possible": False,
            },
            notes=("every fixed component is a single vertex or amply regular of diameter >= 3",),
        )
    cond = Condition(
        "fixed-point-free-order-admissible",
        fpf_ok,
        f"order {ell} > p must divide {s} or {p + 2} to act without fixed points",
    )
    return CaseReport(
        label,
        (p, ell),
        PASS if fpf_ok else FAIL,
        conditions=(cond,),
        data={
            "case": "large-order",
            "fixed_points_possible": False,
            "fixed_point_free_possible": fpf_ok,
            "divides_s": s % ell == 0,
            "divides_q": (p + 2) % ell == 0,
        },
    )


def subgraph_cases(p: int) -> list[CaseReport]:
    """Case analysis of proper SRG subgraphs with parameters (v', k', p-2, p)
    inside the local graph, for prime-power p > 2.

    Emits one report per case with the divisibility preconditions, the
    fixed-subgraph order bound (p+2)^2 - 2, and, when the bound survives,
    whether any prime order > p is compatible with the valency congruence
    k' = p(p+3) mod ell.  Cases three and four exist only for even p.
    """
    if p < 3:
        raise ValueError(f"subgraph_cases requires p >= 3, got {p}")
    if prime_power_base(p) is None:
        return [_inapplicable("srg-subgraph-cases", (p,), "requires p a prime power")]
    bound = (p + 2) ** 2 - 2
    cases: list[tuple[str, int, int, tuple[str, ...]]] = [
        ("subgraph-case-1", p * p + p - 1, p * p * (p + 2), ()),
        ("subgraph-case-2", p * (p - 1), p * ((p - 1) ** 2 + 1), ()),
    ]
    if p % 2 == 0:
        cases.append(
            (
                "subgraph-case-3",
                p * p // 4,
                (p * p // 8 - p // 4 + 1) * (p // 2 + 1),
                (
                    "a degenerate companion branch with s' = -3 occurs only at p = 2 "
                    "(where it agrees with s' = -3p/2) and is outside this range",
                ),
            )
        )
        cases.append(
            ("subgraph-case-4", p * (p // 2 + 4) // 2, (3 + p // 2) * (p * p // 8 + 5 * p // 4 + 1), ())
        )
    out = []
    for label, kk, vv, notes in cases:
        root = exact_sqrt(kk - p + 1)
        tpos = -1 + root if root is not None else None
        sneg = -(tpos + 2) if tpos is not None else None
        conds = [
            Condition("eigenvalue-square", root is not None, f"k'-p+1 = {kk - p + 1}"),
        ]
        if tpos is not None:
            conds.append(
                Condition(
                    "p-divides-(k'-t')(k'-s')",
                    (kk - tpos) * (kk - sneg) % p == 0,
                    f"(k'-t')(k'-s') = {(kk - tpos) * (kk - sneg)}",
                )
            )
            conds.append(
                Condition(
                    "2p-divides-k'(k'-s')",
                    kk * (kk - sneg) % (2 * p) == 0,
                    f"k'(k'-s') = {kk * (kk - sneg)}",
                )
            )
        conds.append(Condition("within-fix-bound", vv <= bound, f"v' = {vv}, bound = {bound}"))
        if vv <= bound:
            target = abs(kk - p * (p + 3))
            admissible = (
                sorted(q for q in prime_set(target) if q > p) if target else ["any"]
            )
            conds.append(
                Condition(
                    "valency-congruence-order-exists",
                    bool(admissible),
                    f"prime orders > {p} dividing |k' - p(p+3)| = {target}: {admissible}",
                )
            )
        ok = all(c.ok for c in conds)
        out.append(
            CaseReport(
                label,
                (vv, kk, p - 2, p),
                PASS if ok else FAIL,
                conditions=tuple(conds),
                data={"t_pos": tpos, "s_neg": sneg, "fix_bound": bound},
                notes=notes,
            )
        )
    return out


# ---------------------------------------------------------------------------
# congruences and order classification on the cover
# ---------------------------------------------------------------------------


def cover_congruences(p: int, r: int, ell: int) -> tuple[int, int, int, int]:
    """Residues mod ell of the fixed-set layer counts x_1..x_4 of a
    prime-order automorphism of the cover, measured from a fixed vertex."""
    At4Params(p, r)
    if not is_prime(ell):
        raise ValueError(f"order must be prime, got {ell}")
    s = p * p + 4 * p + 2
    x1 = (p + 2) * s
    x2 = s * (p + 3) * (p + 1) * r // 2
    x3 = (p + 2) * s * (r - 1)
    x4 = r - 1
    return (x1 % ell, x2 % ell, x3 % ell, x4 % ell)


def subconstituent_congruences(p: int, r: int, ell: int) -> tuple[int, int, int, int]:
    """Residues mod ell of the layer counts y_1..y_4 of the fixed set inside
    the second subconstituent, measured from a fixed vertex of it."""
    At4Params(p, r)
    if not is_prime(ell):
        raise ValueError(f"order must be prime, got {ell}")
    y1 = p * (p + 2) ** 2
    y2 = (p + 2) ** 2 * (p + 1) ** 2 * r // 2
    y3 = p * (p + 2) ** 2 * (r - 1)
    y4 = r - 1
    return (y1 % ell, y2 % ell, y3 % ell, y4 % ell)


@dataclass(frozen=True)
class CoverProfile:
    """Layer counts (x_0..x_4) of the fixed set of a cover automorphism,
    measured from a fixed base vertex, with the element's order."""

    order: int
    counts: tuple[int, int, int, int, int]


def cover_profile_filter(p: int, r: int, profile: CoverProfile) -> Verdict:
    """Screen a candidate fixed-set layer profile of a prime-order cover
    automorphism: the base vertex is fixed, every count fits its layer,
    each x_i matches the layer size k_i mod the order, and the number of
    displaced vertices is divisible by the order."""
    ell = profile.order
    if not is_prime(ell):
        raise ValueError(f"cover_profile_filter requires a prime order, got {ell}")
    sizes = intersection_array(At4Params(p, r)).layer_sizes
    x = profile.counts
    reasons = []
    if x[0] != 1:
        reasons.append("base-vertex-not-fixed")
    for i in range(5):
        if not 0 <= x[i] <= sizes[i]:
            reasons.append(f"x{i}-exceeds-layer")
    for i in range(1, 5):
        if (x[i] - sizes[i]) % ell != 0:
            reasons.append(f"x{i}-congruence")
    if (sum(sizes) - sum(x)) % ell != 0:
        reasons.append("displaced-count-divisibility")
    return Verdict(not reasons, tuple(reasons))


def cover_order_classification(p: int, r: int) -> CaseReport:
    """Admissible prime orders of a cover automorphism, split by whether it
    can have fixed points, for prime-power p > 2.

    With fixed points: primes <= p, plus p+2 when prime, plus prime
    divisors of s = (p+2)^2 - 2 exceeding p (the latter conservatively,
    including proper divisors of s in that range).  Without fixed points:
    prime divisors of (p+1)(p+4).
    """
    At4Params(p, r)
    label = "cover-order-classification"
    if not _is_prime_power_gt2(p):
        return _inapplicable(label, (p, r), "requires p a prime power with p > 2")
    s = (p + 2) ** 2 - 2
    fixed = set(primes_upto(p))
    if is_prime(p + 2):
        fixed.add(p + 2)
    fixed |= {q for q in prime_set(s) if q > p}
    free = prime_set((p + 1) * (p + 4))
    return CaseReport(
        label,
        (p, r),
        PASS,
        data={
            "fixed_point_orders": sorted(fixed),
            "fixed_point_free_orders": sorted(free),
            "s": s,
        },
        notes=(
            f"order {s}: the fixed set is a single antipodal class of {r} vertices",
            f"order {p + 2}: the fixed set is a {2 * r}-coclique, the union of two antipodal classes",
        ),
    )


def cover_fix_bound(p: int, r: int) -> int:
    """Bound r(p+1)(p+2)(p+4) on the fixed set of a non-trivial cover
    automorphism."""
    At4Params(p, r)
    return r * (p + 1) * (p + 2) * (p + 4)


# ---------------------------------------------------------------------------
# block, centralizer and solvability filters on the local graph
# ---------------------------------------------------------------------------


def block_size_filter(p: int) -> tuple[int, ...]:
    """Admissible sizes of the common fixed set of a point stabilizer under
    a vertex-transitive group: divisors of (p+2)((p+2)^2-2) not exceeding
    (p+2)^2 - 2."""
    if p < 2:
        raise ValueError(f"block_size_filter requires p >= 2, got {p}")
    s = (p + 2) ** 2 - 2
    return tuple(d for d in divisors((p + 2) * s) if d <= s)


def centralizer_filter(p: int) -> CaseReport:
    """Constraints on prime orders commuting with an element of the maximal
    order s = (p+2)^2 - 2, applicable when s is prime and p is a prime
    power above 2.

    Outside the cyclic group generated by the long element, such an order
    must divide p+1 and be below p; its fixed subgraph is regular on s
    vertices, it displaces (p+1)s vertices to distance 1, and each of its
    non-trivial orbits is a clique.  Feeding that displacement count back
    through the character congruences refines the order list further (the
    order must in fact divide (p+1)/2), reported separately as
    ``alpha1_admissible_orders``.
    """
    label = "long-element-centralizer"
    if not _is_prime_power_gt2(p):
        return _inapplicable(label, (p,), "requires p a prime power with p > 2")
    s = (p + 2) ** 2 - 2
    if not is_prime(s):
        return _inapplicable(label, (p,), f"requires (p+2)^2 - 2 = {s} prime")
    admissible = sorted(t for t in prime_set(p + 1) if t < p)
    alpha1 = (p + 1) * s
    refined = [t for t in admissible if alpha1 in alpha1_candidates(p, t, s)]
    notes = [
        "the fixed subgraph is regular on s vertices",
        "every non-singleton orbit of the commuting element is a clique",
    ]
    if refined != admissible:
        dropped = sorted(set(admissible) - set(refined))
        notes.append(
            f"orders {dropped} cannot realize alpha1 = {alpha1} with {s} fixed "
            "points: the displacement congruence eliminates them"
        )
    return CaseReport(
        label,
        (p,),
        PASS,
        data={
            "s": s,
            "admissible_orders": admissible,
            "alpha1_admissible_orders": refined,
            "fixed_set_size": s,
            "alpha1": alpha1,
        },
        notes=tuple(notes),
    )


def solvable_cases(p: int) -> CaseReport:
    """The two arithmetic branches available to a solvable vertex-transitive
    group containing an element of prime order s = (p+2)^2 - 2.

    Branch one needs p+2 to be a power of 3 with s = 1 mod 3 and bounds the
    stabilizer spectrum by the prime divisors of (p+1)(s-1).  Branch two
    needs a minimal normal subgroup of order t^e with t | p+2, e >= 2,
    t^e = 1 mod s, s dividing the invertible-matrix group order, and p+2
    composite.  A report in which both branches fail certifies that no
    solvable group of this kind exists.
    """
    label = "solvable-transitive-cases"
    if not _is_prime_power_gt2(p):
        return _inapplicable(label, (p,), "requires p a prime power with p > 2")
    s = (p + 2) ** 2 - 2
    if not is_prime(s):
        return _inapplicable(label, (p,), f"requires (p+2)^2 - 2 = {s} prime")
    base = prime_power_base(p + 2) if p + 2 >= 2 else None
    power_of_3 = base is not None and base[0] == 3
    case_i_ok = power_of_3 and s % 3 == 1
    case_i = {
        "q_power_of_3": power_of_3,
        "s_mod_3": s % 3,
        "applicable": case_i_ok,
        "stabilizer_prime_bound": sorted(prime_set((p + 1) * (s - 1))) if case_i_ok else None,
    }
    case_ii = []
    any_ii = False
    q_composite = not is_prime(p + 2)
    for t in sorted(prime_set(p + 2)):
        e = mult_order(t, s)
        # s divides the invertible-matrix group order iff s divides some
        # t^e - t^i; the i = 0 factor is t^e - 1, zero mod s by choice of e.
        entry = {
            "t": t,
            "e": e,
            "e_at_least_2": e >= 2,
            "s_divides_gl_order": pow(t, e, s) == 1,
            "q_composite": q_composite,
        }
        entry["survives"] = entry["e_at_least_2"] and entry["s_divides_gl_order"] and q_composite
        any_ii = any_ii or entry["survives"]
        case_ii.append(entry)
    conds = (
        Condition("normal-s-subgroup-branch", case_i_ok, "p+2 a power of 3 and s = 1 mod 3"),
        Condition(
            "elementary-abelian-branch",
            any_ii,
            "t^e = 1 mod s with e >= 2 and p+2 composite for some t | p+2",
        ),
    )
    return CaseReport(
        label,
        (p,),
        PASS if (case_i_ok or any_ii) else FAIL,
        conditions=conds,
        data={"s": s, "case_i": case_i, "case_ii": case_ii},
    )


# ---------------------------------------------------------------------------
# prime-spectrum bounds
# ---------------------------------------------------------------------------


def edge_stabilizer_primes(p: int) -> frozenset[int] | None:
    """Upper bound on the prime spectrum of an edge stabilizer: every prime
    up to p.  None when p is not a prime power above 2."""
    if not _is_prime_power_gt2(p):
        return None
    return frozenset(primes_upto(p))


def spectrum_bounds(p: int) -> tuple[frozenset[int], frozenset[int]] | None:
    """Sandwich on the prime spectrum of an arc-transitive automorphism
    group of a cover: lower = prime divisors of (p+2)(p^2+4p+2)(p+1)(p+4),
    upper = primes up to p+2 joined with the divisors of (p^2+4p+2)(p+4).
    None when p is not a prime power above 2."""
    if not _is_prime_power_gt2(p):
        return None
    s = p * p + 4 * p + 2
    lower = prime_set((p + 2) * s * (p + 1) * (p + 4))
    upper = frozenset(primes_upto(p + 2)) | prime_set(s * (p + 4))
    assert lower <= upper
    return (lower, upper)


def exclusion_arithmetic(p: int) -> CaseReport:
    """Arithmetic skeleton of the arc-transitivity exclusion at p.

    Reports primality of q = p+2 and s = p^2+4p+2, the order s(s^2-1)/2 of
    the simple group PSL(2, s) that survives the spectrum sandwich, the gcd
    of s^2-1 with q (always a divisor of 3, which blocks q from the outer
    automorphism order), and the centralizer and solvable-case filters.
    The verdict is PASS exactly when both primality gates hold.
    """
    if p < 2:
        raise ValueError(f"exclusion_arithmetic requires p >= 2, got {p}")
    q = p + 2
    s = p * p + 4 * p + 2
    q_prime = is_prime(q)
    s_prime = is_prime(s)
    g = math.gcd(s * s - 1, q)
    conds = (
        Condition("q-prime", q_prime, f"q = {q}"),
        Condition("s-prime", s_prime, f"s = {s}"),
    )
    return CaseReport(
        "arc-transitive-exclusion",
        (p,),
        PASS if (q_prime and s_prime) else FAIL,
        conditions=conds,
        data={
            "q": q,
            "s": s,
            "q_prime": q_prime,
            "s_prime": s_prime,
            "psl2_s_order": s * (s * s - 1) // 2 if s_prime else None,
            "gcd_s2_minus_1_q": g,
            "gcd_divides_3": 3 % g == 0,
            "prime_power_p": prime_power_base(p) is not None if p >= 2 else False,
            "centralizer": centralizer_filter(p).to_dict() if p > 2 else None,
            "solvable": solvable_cases(p).to_dict() if p > 2 else None,
        },
    )
