"""Print the two Ising categories with their braidings, twists and the alpha check."""

import argparse
import json

from crossedcat.tycat import ising_report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="dump the full report")
    args = parser.parse_args()
    rep = ising_report()
    if args.json:
        print(json.dumps(rep, indent=2, sort_keys=True))
        return
    for cat in rep["categories"]:
        print(f"{cat['label']}: {len(cat['braidings'])} braidings, "
              f"{cat['equivalence_classes']} equivalence classes")
        for b in cat["braidings"]:
            q = " ".join(f"{v['value']['exp']}/{v['value']['order']}" for v in b["q"])
            print(f"  q = ({q})  alpha = z{b['alpha']['order']}^{b['alpha']['exp']}  "
                  f"twists = {len(b['twists'])}")
    print("totals:", rep["totals"])
    for d in rep["alpha_discrepancy"]:
        verdict = "ok" if d["displayed_alpha_squares_correctly"] else "mismatch"
        print(f"tau sign {d['tau_sign']:+d}, q(psi) = z{d['q_psi']['order']}^{d['q_psi']['exp']}: "
              f"displayed alpha z{d['displayed_alpha']['order']}^{d['displayed_alpha']['exp']} ({verdict})")


if __name__ == "__main__":
    main()
