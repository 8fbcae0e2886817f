"""A quick tour of the table-backed Galois fields underneath the planes.

Run:  python demos/demo_field_tables.py
"""

from laguerre_lab import make_field, square_roots

print("GF(5): plain modular arithmetic")
F5 = make_field(5)
print(f"  2 + 4 = {F5.add[2, 4]},  3 * 4 = {F5.mul[3, 4]}")
print(f"  square roots of 4: {square_roots(F5, 4)}  (2^2 = 3^2 = 4)")
print(f"  square roots of 3: {square_roots(F5, 3)}  (3 is not a square mod 5)")

print("\nGF(4) = GF(2)[t] / (t^2 + t + 1), elements indexed 0,1,t,t+1 -> 0,1,2,3")
F4 = make_field(2, 2)
print(f"  t * t = index {F4.mul[2, 2]}  (t^2 reduces to t + 1)")
print("  full multiplication table:")
for row in F4.mul:
    print("   ", " ".join(str(v) for v in row))

print("\nGF(9) = GF(3)[t] / (t^2 + 1): -1 becomes a square")
F9 = make_field(3, 2)
print(f"  -1 has index 2; its square roots: {square_roots(F9, 2)}")
print("  (index 3 is t itself: t^2 = -1 by the reduction polynomial)")

print("\nIn characteristic 2 squaring is a bijection, so every element has"
      "\nexactly one square root:")
F8 = make_field(2, 3)
print(" ", {e: square_roots(F8, e) for e in range(8)})
