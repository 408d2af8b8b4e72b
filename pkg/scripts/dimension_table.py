"""Print the Hitchin base and moduli dimensions side by side."""

import argparse

from nilcone.cert import dim_match, full_flag
from nilcone.liealg import AlgebraKind, isotropic_flags


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--genera", type=int, nargs="+", default=[2, 3, 4])
    args = ap.parse_args()

    flags = [full_flag(AlgebraKind("sl", m)) for m in range(2, 6)]
    flags += [f for n in (1, 2, 3) for f in isotropic_flags(AlgebraKind("sp", 2 * n))]
    print(f"{'flag':>12} {'Lambda':>10} {'g':>2} {'poles':>12} {'base':>5} {'bun':>5}")
    for f in flags:
        for g in args.genera:
            d = dim_match(g, f)
            mark = "" if d.match else "  MISMATCH"
            print(f"{d.flag:>12} {d.richardson:>10} {g:>2} {str(d.poles):>12} {d.total:>5} {d.bun_dim:>5}{mark}")


if __name__ == "__main__":
    main()
