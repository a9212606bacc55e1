"""For each class of 3-cocycles on a small group, compare the obstruction with a braiding search."""

import argparse

from crossedcat.abgroup import AbGroup
from crossedcat.cohomology import cohomology_group, mu
from crossedcat.pointed import (
    PointedCat,
    braidings_pointed,
    default_coeff_order,
    mu_is_character,
    obstruction,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("group", nargs="?", default="2,2", help="group literal, e.g. 4 or 2,2")
    args = parser.parse_args()
    A = AbGroup.parse(args.group)
    L = default_coeff_order(A)
    H = cohomology_group(A, mu(L), 3)
    print(f"H^3({A}, mu_{L}) has divisors {H.divisors}")
    for k, omega in enumerate(H.representatives()):
        cat = PointedCat(A, omega)
        res = obstruction(cat)
        found = len(braidings_pointed(cat))
        print(f"class {k:2d}: eta {'found' if res.eta is not None else 'none'}, "
              f"obstruction {'vanishes' if res.vanishes else 'nonzero'}, "
              f"mu a character: {mu_is_character(cat)}, braidings by search: {found}")


if __name__ == "__main__":
    main()
