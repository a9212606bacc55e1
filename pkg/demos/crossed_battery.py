"""Closed-form crossed braidings against the exhaustive search on every TY(A, chi, tau), |A| <= 8."""

import argparse
import time

from crossedcat.abgroup import AbGroup
from crossedcat.quadforms import symmetric_bicharacters
from crossedcat.tycat import (
    brute_force_crossed_braidings,
    crossed_braidings,
    make_ty,
    solution_keys,
    z2_actions,
)

GROUPS = ["2", "3", "4", "2,2", "5", "6", "7", "8", "2,4", "2,2,2"]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("groups", nargs="*", default=GROUPS)
    args = parser.parse_args()
    for text in args.groups:
        A = AbGroup.parse(text)
        for chi in symmetric_bicharacters(A):
            for sign in (1, -1):
                start = time.perf_counter()
                ty = make_ty(A, chi, sign)
                strict, other = z2_actions(ty)
                formula = {cb.key() for cb in crossed_braidings(ty)}
                search = solution_keys(ty, brute_force_crossed_braidings(ty, strict))
                nonstrict = len(brute_force_crossed_braidings(ty, other))
                status = "agree" if search == formula and not nonstrict else "DISAGREE"
                print(f"{ty.label()}: {len(formula)} crossed braidings, {status}, "
                      f"non-strict {nonstrict}, {time.perf_counter() - start:.2f} s")


if __name__ == "__main__":
    main()
