"""The realization of [1]x[1]: cells, the shared diagonal, and an OFF file."""

import argparse

from cyclicreal.poset import product, standard_poset
from cyclicreal.realization import cell_complex, poset_to_off, shared_faces


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--off", help="write the OFF mesh here")
    args = ap.parse_args()

    P = product(standard_poset(1), standard_poset(1))
    cx = cell_complex(P)
    print("f-vector:", cx.f_vector, "euler:", cx.euler_characteristic)
    for k, cells in enumerate(cx.cells_by_dim):
        print(f"  dim {k}:", ", ".join("<".join(str(P.label(v)) for v in c.elements) for c in cells))
    a, b = cx.top_cells()
    common = shared_faces(cx, a, b)
    print("top cells share:", [[P.label(v) for v in c.elements] for c in common])
    if args.off:
        with open(args.off, "w") as fh:
            fh.write(poset_to_off(P))
        print("wrote", args.off)


if __name__ == "__main__":
    main()
