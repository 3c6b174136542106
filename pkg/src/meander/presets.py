"""Named parameter presets for the documented portrait gallery.

Coefficients are transcribed verbatim from the gallery captions; signed b
values are kept as given and flow through rotation normalization (negative
b equals positive b with the plane turned by pi/n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import ModelParams


@dataclass(frozen=True)
class Preset:
    name: str
    params: ModelParams
    window: float
    note: str


def _p(n, eps1=0.0, eps2=0.0, a1=None, a2=None, b1=0.0, b2=0.0) -> ModelParams:
    s = n // 2 - 1
    a1 = tuple(a1) if a1 is not None else (0.0,) * s
    a2 = tuple(a2) if a2 is not None else (0.0,) * s
    return ModelParams(n=n, eps1=eps1, eps2=eps2, a1=a1, a2=a2, b1=b1, b2=b2)


_PRESETS: list[Preset] = [
    Preset("fig1_1", _p(5, eps2=-4.0, a2=[7.0], b1=3.0), 3.0,
           "five-fold ring portrait: flower ring between two separatrix cycles plus spider-nets"),
    Preset("fig2_1a", _p(5, eps1=0.0001, eps2=0.1, a2=[-0.1]), 2.0,
           "quasi-equilibrium circle, resonant term off"),
    Preset("fig2_1b", _p(5, eps1=0.0001, eps2=0.1, a2=[-0.1], b1=0.01), 2.0,
           "peripheral equilibria born from the quasi-equilibrium circle"),
    Preset("fig2_1c", _p(5, eps1=0.0001, eps2=0.1, a1=[-0.01], a2=[-0.1], b1=0.01), 2.0,
           "limit cycle plus peripheral equilibria"),
    Preset("ex1_domain1", _p(5, eps2=-4.0, a2=[7.0], b1=3.0), 3.0,
           "n=5 ring side of the cubic boundary; ring radii 2/3, 1, 2"),
    Preset("ex1_domain2", _p(5, eps2=-4.0, a2=[-1.0], b1=3.0), 3.0,
           "n=5 no-ring side of the cubic boundary"),
    Preset("ex2_domain1", _p(4, eps2=1.0, a2=[1.0], b1=0.7), 2.0,
           "n=4 single centroid, no peripheral equilibria"),
    Preset("ex2_domain2", _p(4, eps2=1.0, a2=[1.0], b1=1.2), 4.0,
           "n=4 centroid plus spider-net"),
    Preset("ex2_domain3", _p(4, eps2=1.0, a2=[-1.0], b1=0.7), 3.0,
           "n=4 flower ring"),
    Preset("a2_1_no1", _p(4, eps2=1.0, a2=[1.0], b1=0.7), 2.0,
           "n=4 gallery: center"),
    Preset("a2_1_no2a", _p(4, eps2=1.0, a2=[1.0], b1=1.2), 4.0,
           "n=4 gallery: center + spider-net"),
    Preset("a2_1_no2b", _p(4, eps2=1.0, a2=[-1.0], b1=1.2), 4.0,
           "n=4 gallery: center + spider-net, negative series coefficient"),
    Preset("a2_1_no3", _p(4, eps2=1.0, a2=[-1.0], b2=0.7), 3.0,
           "n=4 gallery: flower ring"),
    Preset("a2_2_no1", _p(5, eps2=1.0, a2=[1.0], b1=2.0), 2.5,
           "n=5 gallery: center + spider-net"),
    Preset("a2_2_no2a", _p(5, eps2=1.0, a2=[-1.0], b1=0.3), 3.0,
           "n=5 gallery: flower ring + star + spider-net"),
    Preset("a2_2_no2b", _p(5, eps2=1.0, a2=[-1.0], b1=0.2), 3.0,
           "n=5 gallery: flower ring + star + spider-net (smaller resonant term)"),
    Preset("a2_3_no1a", _p(6, eps2=1.0, a2=[1.0, 0.0], b2=-0.5), 3.0,
           "n=6 gallery: spider-net"),
    Preset("a2_3_no1b", _p(6, eps1=0.0, eps2=0.0, a2=[1.0, 0.0], b1=0.5), 3.0,
           "n=6 gallery: spider-net, zero linear part"),
    Preset("a2_3_no2", _p(6, eps2=1.0, a2=[-1.0, 0.1], b1=0.04), 6.5,
           "n=6 gallery: centers + flower band"),
    Preset("a2_3_no3", _p(6, eps2=1.0, a2=[-1.0, 0.1], b1=0.06), 6.5,
           "n=6 gallery: center + star + two flower rings"),
    Preset("a2_4_no1", _p(7, eps2=-0.56, a2=[3.0, -3.5], b1=-1.6), 2.0,
           "n=7 gallery, strong resonant term"),
    Preset("a2_4_no2", _p(7, eps2=-0.56, a2=[3.0, -3.5], b1=-1.0), 2.0,
           "n=7 gallery, weaker resonant term"),
    Preset("a2_5_a", _p(9, eps2=8.0, a2=[-33.0, 23.765, -3.5]), 3.2,
           "n=9 gallery: resonant term off (nested rotation-reversal circles)"),
    Preset("a2_5_b", _p(9, eps2=8.0, a2=[-33.0, 23.765, -3.5], b1=0.1), 3.2,
           "n=9 gallery: specific flower rings"),
    Preset("a2_5_c", _p(9, eps2=8.0, a2=[-33.0, 23.765, -3.5], b1=0.45), 7.0,
           "n=9 gallery: wide window variant"),
    # the third series coefficient is -14.4: the ring polynomial then factors
    # exactly as (u - 0.4)(u - 1)(u - 4)(u - 9) in u = r^2, matching the
    # documented two visible rings (the +14.4 print leaves no equilibria)
    Preset("a2_6_a", _p(11, eps2=14.4, a2=[-55.6, 54.6, -14.4, 1.0], b1=0.05), 3.0,
           "n=11 gallery: two wide flower rings plus two hairline-split ring pairs"),
    Preset("a2_6_b", _p(11, eps2=14.4, a2=[-55.6, 54.6, -14.4, 1.0], b1=-0.01), 3.0,
           "n=11 gallery: same rings, sign-flipped resonant term"),
    Preset("a2_7_a", _p(5, eps1=0.005, eps2=1.0, a1=[-0.01], a2=[-1.0], b1=0.1), 2.0,
           "n=5 dissipative: flower ring outside the limit cycle"),
    Preset("a2_7_b", _p(5, eps1=0.005, eps2=-0.1, a1=[0.045], a2=[1.0], b1=1.0), 1.5,
           "n=5 dissipative: flower ring inside the limit cycle"),
    Preset("a2_7_c", _p(5, eps1=0.005, eps2=-0.1, a1=[-0.045], a2=[1.0], b1=1.0), 1.5,
           "n=5 dissipative: no limit cycle"),
    Preset("a2_8_a", _p(6, eps1=-0.001, eps2=-0.1, a1=[1.3, 0.0], a2=[0.1, -0.1], b1=0.05), 2.0,
           "n=6 dissipative: peripheral equilibria outside the unstable limit cycle"),
    Preset("a2_8_b", _p(6, eps1=-0.001, eps2=0.1, a1=[1.0, 0.0], a2=[-0.1, -0.1], b1=0.05), 2.0,
           "n=6 dissipative: peripheral equilibria inside the unstable limit cycle"),
]

CATALOG: dict[str, Preset] = {pr.name: pr for pr in _PRESETS}


def get(name: str) -> Preset:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; available: {', '.join(sorted(CATALOG))}") from None


def names() -> list[str]:
    return [pr.name for pr in _PRESETS]
