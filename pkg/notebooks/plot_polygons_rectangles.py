"""
Polygons inscribed in a rectangle
=================================

For a very ample polygon P, the toric surface X_P admits an additive
action exactly when P is inscribed in a rectangle, and then X_P is
Euler-symmetric. This script checks the two pictured polygons, prints a
fundamental form, and tallies the criterion over random polygons.
"""

import random

from eulertoric import data_path, load_polytope
from eulertoric.euler import euler_action, fundamental_form
from eulertoric.fan import admits_additive_action
from eulertoric.polytope import LatticePolytope, is_inscribed_in_rectangle, normal_fan

left = load_polytope(data_path("fig2_left.json"))
right = load_polytope(data_path("fig2_right.json"))
for name, P in [("left", left), ("right", right)]:
    w = is_inscribed_in_rectangle(P)
    print(name, "inscribed:", w is not None, "| additive action:", admits_additive_action(normal_fan(P))[0])

# lattice points of the left polygon, seen from the witness vertex
w = is_inscribed_in_rectangle(left)
form = fundamental_form(left, w)
for k, exps in form.grading.items():
    print(f"F^{k}:", sorted(exps))
print("lambda =", euler_action(left, w).lam)

# random polygons in [0, 6]^2: how often is the criterion met?
rng = random.Random(0)
hits = total = 0
while total < 300:
    pts = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(rng.randint(3, 8))]
    try:
        P = LatticePolytope.from_points(pts)
    except ValueError:
        continue
    total += 1
    hits += is_inscribed_in_rectangle(P) is not None
print(f"{hits} of {total} random polygons are inscribed in a rectangle")
