"""Instance generators shared by the test modules."""

from __future__ import annotations

import random

from crossedcat.abgroup import AbGroup
from crossedcat.cohomology import cohomology_group, mu, random_coboundary
from crossedcat.pointed import PointedCat, default_coeff_order
from crossedcat.quadforms import bicharacter_orbit_representatives, symmetric_bicharacters
from crossedcat.tycat import make_ty


def pointed_instances(A: AbGroup, perturbations: int = 0, seed: int = 0) -> list[PointedCat]:
    """One cocycle per class of H^3(A, mu_L), each followed by random cohomologous copies."""
    L = default_coeff_order(A)
    M = mu(L)
    rng = random.Random(seed)
    out = []
    for rep in cohomology_group(A, M, 3).representatives():
        out.append(PointedCat(A, rep))
        for _ in range(perturbations):
            out.append(PointedCat(A, rep + random_coboundary(3, A, M, rng)))
    return out


def ty_instances(A: AbGroup, all_chis: bool = False):
    """TY(A, chi, +-) for every nondegenerate symmetric chi, or one chi per Aut(A)-orbit."""
    chis = symmetric_bicharacters(A)
    if not all_chis:
        chis = bicharacter_orbit_representatives(A, chis)
    return [make_ty(A, chi, s) for chi in chis for s in (1, -1)]

