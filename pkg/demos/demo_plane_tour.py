"""Walk through the order-5 coordinate plane: points, circles, pencils,
tangency, and the derived affine plane.

Run:  python demos/demo_plane_tour.py
"""

from laguerre_lab import miquelian_plane

P = miquelian_plane(5)
q = 5
pt = lambda x, y: x * q + y

print(P)
print(f"points {P.n_points} = q^2+q, circles {P.n_circles} = q^3, "
      f"generators {P.n_gens} = q+1, points per circle {P.members.shape[1]} = q+1")

print("\nThe circle through (0,0), (1,1), (2,4) is the parabola y = x^2:")
K = P.circle_through(pt(0, 0), pt(1, 1), pt(2, 4))
print(f"  coefficients {K.coef}, members {[P.point_label(p) for p in K.members]}")

print("\nEvery generator meets it exactly once; the point parallel to (2,3) is:")
print(f"  {P.point_label(P.parallel_point(pt(2, 3), K))}")

print("\nTangency classification against a few partners:")
for coef in [(4, 0, 2), (1, 0, 1), (4, 0, 1)]:
    t = P.tangency(K, P.circle_from_coef(coef))
    print(f"  vs {coef}: {t.kind:8s} {[P.point_label(p) for p in t.points]}")

print("\nThe tangent pencil at (0,0) consists of the parabolas y = a x^2:")
pen = P.tangent_pencil(pt(0, 0), K)
print(f"  size {len(pen)}: {sorted(P.circle_coef(c) for c in pen)}")

print("\nThe unique pencil member through (1,2):")
print(f"  {P.tangent_circle(pt(0, 0), K, pt(1, 2)).coef}")

print("\nDeriving the affine plane at (0,0): circles through the point become"
      "\nlines, generators avoiding it stay lines:")
A = P.derived_affine_plane(pt(0, 0))
rep = A.validate()
print(f"  {len(A.points)} points, {len(A.lines)} lines, affine axioms: {rep.verdict}")
