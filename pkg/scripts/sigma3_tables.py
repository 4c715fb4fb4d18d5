"""Hurwitz-action representations of the six Sigma_3 triples."""

from dataclasses import dataclass

from hurwitzmon import datasets
from hurwitzmon.representations import hurwitz_rep


@dataclass
class TableConfig:
    names: tuple = tuple(f"sigma3-{k}" for k in range(1, 7))
    quotient: bool = False


def rows(cfg: TableConfig):
    for name in cfg.names:
        doc = datasets.dataset(name)
        res = hurwitz_rep(datasets.to_tuple(doc).elements, quotient=cfg.quotient)
        yield name, doc["elements"], res.orbit_size, res.group_order


def main():
    for quotient in (False, True):
        print("up to conjugation" if quotient else "plain tuples")
        print(f"{'dataset':10} {'tuple':28} {'orbit':>6} {'group order':>12}")
        for name, elts, n, order in rows(TableConfig(quotient=quotient)):
            print(f"{name:10} {' '.join(elts):28} {n:6d} {order:12d}")
        print()


if __name__ == "__main__":
    main()
