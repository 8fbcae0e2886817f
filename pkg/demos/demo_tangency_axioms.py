"""The two tangency axioms, and how characteristic 2 breaks one of them.

The unique-tangent axiom C asks that for circles K, L and a point p on K
but not L, exactly one circle tangent to K at p meets L in exactly one
point.  The chain axiom S closes every tangency 4-chain with a circle.
Both hold on the classical odd-order planes and fail in characteristic 2.

Run:  python demos/demo_tangency_axioms.py
"""

from laguerre_lab import CheckMode, check_C, check_S, check_prop_1_1, miquelian_plane

EX = CheckMode.exhaustive()

for q in (3, 5):
    P = miquelian_plane(q)
    rc, rs = check_C(P, EX), check_S(P, EX)
    print(f"q={q}:  C -> {rc.verdict} ({rc.hypothesis_hits} configurations), "
          f"S -> {rs.verdict} ({rs.hypothesis_hits} chains)")

print("\nq=4 (characteristic 2): the unique-tangent count goes wrong.")
P4 = miquelian_plane(4)
rc = check_C(P4, EX)
print(f"  C -> {rc.verdict} with {rc.violation_count} violating configurations")
v = rc.violations[0]
K, L = v.circles
p = v.points[0]
count = dict(v.data)["count"]
print(f"  witness: K={P4.circle_coef(K)}, L={P4.circle_coef(L)}, "
      f"p={P4.point_label(p)}: {count} tangent pencil members meet L once")

print("\nWhat characteristic 2 gives instead: two circles through a common"
      "\npoint that both touch a third circle are tangent to each other.")
rp = check_prop_1_1(P4, EX)
print(f"  tangency transfer -> {rp.verdict} over {rp.hypothesis_hits} configurations")
