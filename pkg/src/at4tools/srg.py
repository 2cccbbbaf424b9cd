"""Strongly regular graph parameter arithmetic.

Centers on the one-parameter family

    ((p+2)(p^2+4p+2), p(p+3), p-2, p),   p >= 2,

which arises as the local graph of an antipodal tight diameter-4 graph with
local eigenvalue parameters (p, p+2).  Provides exact spectra, the second
eigenmatrix of the associated 3-class scheme, and the fixed-point order
bound mu*v/(k - theta) used by the automorphism constraint engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import exact_sqrt


class SpectrumError(ValueError):
    """Raised when SRG parameters admit no integral (or conference) spectrum."""


@dataclass(frozen=True)
class SrgParams:
    """Parameter tuple (v, k, lam, mu) of a strongly regular graph."""

    v: int
    k: int
    lam: int
    mu: int

    def identity_holds(self) -> bool:
        """The basic counting identity k(k - lam - 1) = (v - k - 1) mu."""
        return self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of an SRG: k once, theta_pos and theta_neg with multiplicities.

    ``conference=True`` marks the half-case where the non-principal
    eigenvalues are irrational; both multiplicities are then (v-1)/2 and the
    theta fields are None.
    """

    k: int
    theta_pos: int | None
    m_pos: int
    theta_neg: int | None
    m_neg: int
    conference: bool = False


@dataclass(frozen=True)
class Verdict:
    """Pass/fail outcome with machine-readable reasons for every failure."""

    ok: bool
    reasons: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"ok": self.ok, "reasons": list(self.reasons)}


def local_family_params(p: int) -> SrgParams:
    """Local-graph family member for parameter p >= 2."""
    if p < 2:
        raise ValueError(f"family requires p >= 2, got {p}")
    params = SrgParams((p + 2) * (p * p + 4 * p + 2), p * (p + 3), p - 2, p)
    assert params.identity_holds()
    return params


def srg_spectrum(params: SrgParams) -> Spectrum:
    """Exact spectrum of an SRG parameter tuple.

    Raises SpectrumError when the discriminant is not a square and the
    parameters are not of conference type, or when a multiplicity fails to
    be a non-negative integer.
    """
    v, k, lam, mu = params.as_tuple()
    if not params.identity_holds():
        raise SpectrumError(f"violated counting identity: {params.as_tuple()}")
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = exact_sqrt(disc)
    if root is None:
        # conference type: 2k + (v-1)(lam-mu) = 0 forces equal multiplicities
        if 2 * k + (v - 1) * (lam - mu) == 0 and (v - 1) % 2 == 0:
            half = (v - 1) // 2
            return Spectrum(k, None, half, None, half, conference=True)
        raise SpectrumError(f"irrational spectrum with unequal multiplicities: {params.as_tuple()}")
    if root == 0:
        raise SpectrumError(f"repeated non-principal eigenvalue: {params.as_tuple()}")
    theta_pos = (lam - mu + root) // 2
    theta_neg = (lam - mu - root) // 2
    num = 2 * k + (v - 1) * (lam - mu)
    if num % root != 0 or (v - 1 - num // root) % 2 != 0:
        raise SpectrumError(f"non-integral multiplicities: {params.as_tuple()}")
    m_pos = (v - 1 - num // root) // 2
    m_neg = (v - 1) - m_pos
    if m_pos < 0 or m_neg < 0:
        raise SpectrumError(f"negative multiplicity: {params.as_tuple()}")
    return Spectrum(k, theta_pos, m_pos, theta_neg, m_neg)


def family_multiplicities(p: int) -> tuple[int, int]:
    """Multiplicities (n1, n2) of the two non-principal eigenspaces at p."""
    s = (p + 2) ** 2 - 2
    return ((p + 3) * s // 2, (p + 1) * s // 2 - 1)


@dataclass(frozen=True)
class EigenmatrixQ:
    """Second eigenmatrix of the 3-class scheme of a family member.

    Rows are indexed by eigenspace (principal, positive, negative), columns
    by distance (0, 1, 2); every entry is an exact Fraction.
    """

    rows: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]


def second_eigenmatrix(p: int) -> EigenmatrixQ:
    """Second eigenmatrix of the scheme on a family member, p >= 2."""
    if p < 2:
        raise ValueError(f"second_eigenmatrix requires p >= 2, got {p}")
    s = (p + 2) ** 2 - 2
    one = Fraction(1)
    rows = (
        (one, one, one),
        (
            Fraction((p + 3) * s, 2),
            Fraction((p + 2) ** 2, 2) - 1,
            Fraction(-s, 2 * (p + 1)),
        ),
        (
            Fraction((p + 1) * s, 2) - 1,
            Fraction(-((p + 2) ** 2), 2),
            Fraction(p * (p + 2), 2 * (p + 1)),
        ),
    )
    return EigenmatrixQ(rows)


def clique_bound(p: int) -> int:
    """Upper bound (p+2)^2 on clique size in a family member."""
    if p < 2:
        raise ValueError(f"clique_bound requires p >= 2, got {p}")
    return (p + 2) ** 2


def fixed_point_order_bound(params: SrgParams) -> int:
    """Bound floor(mu*v/(k - theta_pos)) on the fixed subgraph of a non-trivial automorphism.

    Only defined for integral spectra.  For the local family this evaluates
    to (p+2)^2 - 2; for the antipodal quotient of the covering graph it
    evaluates to (p+1)(p+2)(p+4).
    """
    spec = srg_spectrum(params)
    if spec.conference:
        raise SpectrumError(f"bound needs an integral spectrum: {params.as_tuple()}")
    return params.mu * params.v // (params.k - spec.theta_pos)


def feasibility_basic(params: SrgParams) -> Verdict:
    """Screen (v, k, lam, mu) for the basic SRG feasibility conditions."""
    reasons = []
    v, k, lam, mu = params.as_tuple()
    if min(v, k, lam, mu) < 0:
        reasons.append("negative-parameter")
    if v <= k:
        reasons.append("valency-not-below-order")
    if not params.identity_holds():
        reasons.append("counting-identity")
    else:
        try:
            srg_spectrum(params)
        except SpectrumError:
            reasons.append("non-integral-multiplicities")
    return Verdict(not reasons, tuple(reasons))
