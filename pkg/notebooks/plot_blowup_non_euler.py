"""
A smooth orbit that is not Euler
================================

The blow-up of P1 x P1 at a point is Euler-symmetric, yet the orbit of
the cone generated by rho4 = (-1,-1) is smooth and contains no Euler
point. Its monoid Gamma(sigma_4) matches none of the monoids of the fixed
points.
"""

from eulertoric import class_group, classify_euler_orbits, data_path, gamma_monoid, load_fan
from eulertoric.euler import is_euler_symmetric
from eulertoric.fan import all_cones

f = load_fan(data_path("blowup_p1p1.json"))
cg = class_group(f)

# coordinates in the basis [D3], [D4], [D5]
basis = [cg.divisor_classes[i] for i in (2, 3, 4)]
coords = [cg.express(x, basis) for x in cg.divisor_classes]
print("[D1] =", coords[0], " [D2] =", coords[1])


def show(tau):
    return sorted(coords[i] for i in gamma_monoid(f, tau, cg).rays)


print("Gamma(sigma_4):", show((3,)))
for tau in all_cones(f):
    if len(tau) == 2:
        print(f"Gamma{tuple(i + 1 for i in tau)}:", show(tau))

report = classify_euler_orbits(f)
print("O(sigma_4) smooth:", report[(3,)].smooth, " Euler:", report[(3,)].euler)
print("open orbit Euler:", report[()].euler)
print("Euler-symmetric:", is_euler_symmetric(f))
