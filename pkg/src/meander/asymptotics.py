"""Equilibria on the circle at infinity and spider-net existence.

In the inverted radius rho = 1/r with time rescaled by rho^(n-2), the field
extends to rho = 0 (the equator of the compactified plane):

    rho' = -rho*(eps1*rho^(n-2) + sum a1_k rho^(n-2-2k) + b*cos(n*phi)),
    phi' =       eps2*rho^(n-2) + sum a2_k rho^(n-2-2k) - b*sin(n*phi).

For odd n only the resonant term survives at rho = 0, giving 2n node
directions of alternating stability.  For even n the k = s terms survive
too, and isolated nodes exist exactly when b^2 > a1_s^2 + a2_s^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import ModelParams, NotNormalizedError, TWO_PI

from .equilibria import KIND_STABLE_NODE, KIND_UNSTABLE_NODE

DEGENERACY_TOL = 1e-12


class DegenerateEquatorError(ValueError):
    """The equator analysis sits on a bifurcation boundary."""


@dataclass(frozen=True)
class EquatorNode:
    """One node direction at infinity."""

    phi: float
    kind: str                     # stable-node | unstable-node
    existence_condition: float    # margin b^2 - (a1_s^2 + a2_s^2)

    @property
    def stable(self) -> bool:
        return self.kind == KIND_STABLE_NODE


def existence_margin(p: ModelParams) -> float:
    """b^2 - (a1_s^2 + a2_s^2); only decisive for even n."""
    return p.b ** 2 - (p.a1[-1] ** 2 + p.a2[-1] ** 2)


def equator_equilibria(p: ModelParams) -> list[EquatorNode]:
    """Node directions at infinity, ordered by angle.

    Odd n: 2n nodes at phi = pi*j/n, stability alternating with the sign of
    b*cos(n*phi).  Even n: when b^2 > a1_s^2 + a2_s^2, the 2n solutions of
    a2_s = b*sin(n*phi), alternating; otherwise none.  A vanishing margin
    (or b = 0 for odd n) raises DegenerateEquatorError.
    """
    if not p.is_normalized:
        raise NotNormalizedError("equator_equilibria needs normalized params")
    b = p.b1
    n = p.n
    margin = existence_margin(p)
    if n % 2 == 1:
        if b <= DEGENERACY_TOL:
            raise DegenerateEquatorError(
                "b = 0 for odd n leaves the whole equator degenerate"
            )
        nodes = []
        for j in range(2 * n):
            phi = math.pi * j / n
            growth = b * math.cos(n * phi)  # = +-b; eigenvalues (-growth, -n*growth)
            kind = KIND_STABLE_NODE if growth > 0 else KIND_UNSTABLE_NODE
            nodes.append(EquatorNode(phi=phi % TWO_PI, kind=kind, existence_condition=margin))
        return nodes
    # even n
    if abs(margin) <= DEGENERACY_TOL * max(1.0, b * b):
        raise DegenerateEquatorError(
            f"b^2 = a1_s^2 + a2_s^2 (margin {margin:.3e}): equator nodes degenerate"
        )
    if margin < 0:
        return []
    alpha = math.asin(max(-1.0, min(1.0, p.a2[-1] / b)))
    nodes = []
    for j in range(2 * n):
        phi = ((-1) ** j * alpha + math.pi * j) / n
        # radial eigenvalue -(a1_s + b*cos(n*phi)), angular -n*b*cos(n*phi);
        # margin > 0 guarantees both share the sign of b*cos(n*phi)
        growth = p.a1[-1] + b * math.cos(n * phi)
        kind = KIND_STABLE_NODE if growth > 0 else KIND_UNSTABLE_NODE
        nodes.append(EquatorNode(phi=phi % TWO_PI, kind=kind, existence_condition=margin))
    return sorted(nodes, key=lambda nd: nd.phi)


def spider_net_possible(p: ModelParams) -> bool:
    """True iff node directions exist at infinity (escaping separatrix fans)."""
    try:
        return bool(equator_equilibria(p))
    except DegenerateEquatorError:
        return False
