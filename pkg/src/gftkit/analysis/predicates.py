"""Exact parameter-set predicates: Royster's criterion and the sets A(.)."""

from __future__ import annotations

import cmath
import math

from ..errors import DomainError

COLLINEAR_TOL = 1e-12
SET_IDS = ("A_K", "A_K_lambda", "A_J_spiral_alpha_lambda", "A_J_S_lambda")


def royster_univalent(mu) -> bool:
    """(1-z)**mu is univalent in the disk iff mu != 0 lies in |mu+1| <= 1 or |mu-1| <= 1."""
    mu = complex(mu)
    if mu == 0:
        raise DomainError("Royster's criterion excludes mu = 0")
    return abs(mu + 1) <= 1 or abs(mu - 1) <= 1


def royster_segment_univalent(lam, beta) -> bool:
    """Univalence of ((1-z)**(-(beta-2 lam+1)) - 1)/(beta-2 lam+1), i.e. of C_beta of the
    order-lam Koebe function; equivalent to ``2 lam - 3 <= beta <= 2 lam + 1``.

    At ``beta = 2 lam - 1`` the map degenerates to ``-log(1-z)``, which is univalent.
    """
    lam, beta = float(lam), float(beta)
    if not lam < 1:
        raise DomainError(f"lam must be < 1, got {lam}")
    mu = 2 * lam - 1 - beta
    if mu == 0:
        return True
    return royster_univalent(mu)


def on_segment(gamma, z1, z2, tol=COLLINEAR_TOL) -> bool:
    """Closed segment test: distance to the line within ``tol`` and parameter in [0, 1]."""
    gamma, z1, z2 = complex(gamma), complex(z1), complex(z2)
    d = z2 - z1
    if d == 0:
        return abs(gamma - z1) <= tol
    rel = (gamma - z1) * d.conjugate()
    if abs(rel.imag) / abs(d) > tol:
        return False
    t = rel.real / abs(d) ** 2
    return 0.0 <= t <= 1.0


def _check(lam, alpha):
    if not lam < 1:
        raise DomainError(f"lam must be < 1, got {lam}")
    if not -math.pi / 2 < alpha < math.pi / 2:
        raise DomainError(f"alpha must lie in (-pi/2, pi/2), got {alpha}")


def set_membership(set_id, gamma, alpha=0.0, lam=0.0) -> bool:
    """Is ``gamma`` in the named set?

    * ``A_K``: {|g| <= 1/2} U [1/2, 3/2]
    * ``A_K_lambda``: {|g| <= 1/(2(1-lam))} U [1/(2(1-lam)), 3/(2(1-lam))]
    * ``A_J_spiral_alpha_lambda``: {|g| <= R} U [e^{i alpha} R, 3 e^{i alpha} R],
      R = 1/(2(1-lam) cos alpha)
    * ``A_J_S_lambda``: {|g| <= 1/(2(1-lam))}
    """
    gamma = complex(gamma)
    alpha, lam = float(alpha), float(lam)
    _check(lam, alpha)
    if set_id == "A_K":
        return abs(gamma) <= 0.5 or on_segment(gamma, 0.5, 1.5)
    if set_id == "A_K_lambda":
        r = 1.0 / (2.0 * (1.0 - lam))
        return abs(gamma) <= r or on_segment(gamma, r, 3.0 * r)
    if set_id == "A_J_spiral_alpha_lambda":
        r = 1.0 / (2.0 * (1.0 - lam) * math.cos(alpha))
        rot = cmath.exp(1j * alpha)
        return abs(gamma) <= r or on_segment(gamma, rot * r, 3.0 * rot * r)
    if set_id == "A_J_S_lambda":
        return abs(gamma) <= 1.0 / (2.0 * (1.0 - lam))
    raise DomainError(f"unknown set id {set_id!r}; known: {', '.join(SET_IDS)}")


def alexander_spiral_univalent(alpha, lam) -> bool:
    """J maps every alpha-spirallike function of order lam into univalent maps
    iff 1 lies in A(J(S*_alpha(lam)))."""
    return set_membership("A_J_spiral_alpha_lambda", 1.0, alpha=alpha, lam=lam)


def alexander_spiral_readings(alpha, lam):
    """The two typographic readings of the cosine condition next to the derived predicate."""
    c = math.cos(alpha)
    return {
        "derived": alexander_spiral_univalent(alpha, lam),
        "cos <= 1/(2(1-lam))": c <= 1.0 / (2.0 * (1.0 - lam)),
        "cos <= (1/2)(1-lam)": c <= 0.5 * (1.0 - lam),
    }
