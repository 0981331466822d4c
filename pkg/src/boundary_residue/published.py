"""Published per-case values, the published total and the published
geometric form, held as data for the audit.

All vectors are coefficients of pi^3.  Values printed as multiples of
pi*Omega_3 are doubled (Omega_3 = 2 pi^2).  ``X2`` stands for |X|^2 in the
full metric and is kept as printed; ``normalize_x2`` rewrites it.
"""
from __future__ import annotations

from fractions import Fraction as F

from .coefficients import GaussianRational as G


def _v(**kw) -> dict[str, G]:
    return {k: G.coerce(v) for k, v in kw.items()}


PRINTED_CASES: dict[int, dict[str, G]] = {
    1: {},
    2: _v(H1SQ=F(29, 32), H2=F(-3, 4)),
    3: _v(SB=F(-1, 4)),
    4: _v(H1SQ=F(-5, 8)),
    5: {},
    6: _v(H1SQ=F(29, 32), H2=F(-3, 4)),
    7: _v(H1SQ=F(39, 16), AN_H1=F(-5, 4)),
    8: _v(SB=G(F(3, 8), F(-5, 16)), DIVX=F(-9, 8)),
    9: _v(H1SQ=F(-367, 64), H2=F(103, 32), AN_H1=F(15, 32), DAN=F(-3, 4)),
    10: _v(H1SQ=F(-367, 64), H2=F(103, 32), AN_H1=F(15, 32), DAN=F(-3, 4)),
    11: {},
    12: _v(H1SQ=F(39, 16), AN_H1=F(-5, 4)),
    13: _v(H1SQ=F(-821, 128), AN_H1=F(15, 8), XP2_H1=F(35, 32), AN2=-2, X2=1),
    14: _v(H1SQ=F(239, 32), H2=F(-27, 8), SB=F(-11, 96), AN_H1=F(-5, 4), DAN=F(3, 2), DIVX=F(3, 2)),
    15: _v(H1SQ=F(239, 32), H2=F(-27, 8), SB=F(-11, 96), AN_H1=F(-5, 4), DAN=F(3, 2), DIVX=F(3, 2)),
}

# printed one-form parts of the cases that also have a pure-Dirac part
PRINTED_ONE_FORM_PARTS: dict[int, dict[str, G]] = {
    7: _v(AN_H1=F(-5, 4)),
    8: _v(DIVX=F(-9, 8)),
    9: _v(AN_H1=F(15, 32), DAN=F(-3, 4)),
    13: _v(AN_H1=F(15, 8), XP2_H1=F(35, 32), AN2=-2, X2=1),
    14: _v(AN_H1=F(-5, 4), DAN=F(3, 2), DIVX=F(3, 2)),
}

PRINTED_TOTAL: dict[str, G] = _v(
    H1SQ=F(399, 128), H2=F(-29, 16), SB=G(F(-17, 48), F(-5, 16)),
    AN_H1=F(25, 16), DAN=F(-3, 2), XP2_H1=F(35, 32), AN2=-2, DIVX=F(15, 8), X2=-1,
)

# geometric tags: K2, SM, SB, AN_K, XP2, XP2_K, AN2, DAN, DIVX
GEOMETRIC_ORDER = ("K2", "SM", "SB", "AN_K", "XP2", "XP2_K", "AN2", "DAN", "DIVX")

PRINTED_GEOMETRIC: dict[str, G] = _v(
    K2=F(225, 512), SM=F(29, 64), SB=G(F(-155, 192), F(-5, 16)), AN_K=F(-25, 32),
    XP2=-1, XP2_K=F(-35, 64), AN2=-3, DAN=F(-3, 2), DIVX=F(15, 8),
)


def normalize_x2(v: dict[str, G]) -> dict[str, G]:
    """|X|^2 = |X'|^2 + a_n^2."""
    out = {k: c for k, c in v.items() if k != "X2"}
    c = v.get("X2")
    if c:
        for tag in ("XP2", "AN2"):
            out[tag] = out.get(tag, G()) + c
    return {k: c for k, c in out.items() if c}
