"""Presentations of both sextic complements and their abelianizations."""

from hurwitzmon import datasets
from hurwitzmon.zvk import PRESENTATIONS, abelianization


def main():
    for name in ("paper-sqrt2", "paper-neg-sqrt2"):
        M = datasets.to_factorization(datasets.dataset(name))
        for variant, build in PRESENTATIONS.items():
            P = build(M)
            print(f"{name:16} {variant:10} generators {P.rank:2d}  relators {len(P.relators):2d}  "
                  f"abelianization {abelianization(P)}")


if __name__ == "__main__":
    main()
