"""Separating the classical planes from the other egg-like ones.

The Miquel closure characterizes the classical coordinate planes; the
bundle closure holds for every plane built from an oval.  Over GF(8) the
monomials x^4 and x^6 define ovals that are not conics, so their planes
satisfy the bundle closure while producing explicit eight-point Miquel
counterexamples.

Run:  python demos/demo_closure_separation.py
"""

from laguerre_lab import (
    CheckMode,
    NotALaguerrePlane,
    check_bundle,
    check_miquel,
    miquelian_plane,
    oval_plane,
    oval_table_power,
)

print("Which monomial value tables x -> x^e define a plane?")
for q in (5, 7, 8, 9):
    good = []
    for e in range(2, q):
        try:
            oval_plane(q, oval_table_power(q, e))
            good.append(e)
        except NotALaguerrePlane:
            pass
    print(f"  q={q}: exponents {good}")
print("  (odd orders only admit the squares; GF(8) has two more ovals)")

mode = CheckMode.sample(100000, 42)
print(f"\nSampling {mode.count} constructive configurations, seed {mode.seed}:")
for label, plane in [("classical q=5", miquelian_plane(5)),
                     ("oval q=8, x^4", oval_plane(8, oval_table_power(8, 4))),
                     ("oval q=8, x^6", oval_plane(8, oval_table_power(8, 6)))]:
    rm = check_miquel(plane, mode)
    rb = check_bundle(plane, mode)
    print(f"  {label:15s}  Miquel: {rm.verdict:14s} ({rm.violation_count} violations)   "
          f"Bundle: {rb.verdict} ({rb.violation_count})")

P = oval_plane(8, oval_table_power(8, 4))
v = check_miquel(P, mode).violations[0]
print("\nOne explicit eight-point Miquel counterexample on the x^4 plane:")
names = "abcdefgh"
print("  " + "  ".join(f"{n}={P.point_label(p)}" for n, p in zip(names, v.points)))
print("  five hypothesis quadruples lie on circles, the closing one does not.")
