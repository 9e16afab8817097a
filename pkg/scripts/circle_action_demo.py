"""Walk a point of ||[[n]]|| around the circle and watch its coordinates.

The barycentric part stays fixed while the phase moves; the distance to the
starting point is the measure of the set where the orbits disagree.
"""

import argparse
from fractions import Fraction

from cyclicreal.cyclic_realization import cyclic_metric, homeo_from_product, homeo_to_product, phase, rotate
from cyclicreal.realization import BaryPoint


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--coords", default="1/6,1/3,1/2", help="barycentric coordinates, comma separated")
    ap.add_argument("--steps", type=int, default=8)
    args = ap.parse_args()

    b = BaryPoint(tuple(Fraction(c) for c in args.coords.split(",")))
    n = len(b.coords) - 1
    p = homeo_from_product(b, phase(0), n)
    print(p.describe())
    print(f"{'theta':>6} {'phase':>6} {'distance':>9}  barycentric fixed")
    for i in range(args.steps + 1):
        theta = Fraction(i, args.steps)
        q = rotate(p, theta)
        b2, s = homeo_to_product(q)
        print(f"{str(theta):>6} {str(s.s):>6} {str(cyclic_metric(p, q)):>9}  {b2 == b}")


if __name__ == "__main__":
    main()
