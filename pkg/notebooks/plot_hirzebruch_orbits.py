"""
Euler orbits of a Hirzebruch surface
====================================

Every torus orbit of a Hirzebruch surface consists of Euler points.
This script walks through the class group, the monoids Gamma(tau), and
the orbit classification that shows it.
"""

from eulertoric import class_group, classify_euler_orbits, data_path, load_fan, upsilon
from eulertoric.fan import admits_additive_action, all_cones

# the fan with rays (1,0), (0,1), (-1,s), (0,-1) for s = 2
f = load_fan(data_path("hirzebruch_s2.json"))
print("rays:", f.rays)
print("cones:", all_cones(f))

# a complete collection of Demazure roots gives an additive action
ok, coll = admits_additive_action(f)
print("additive action:", ok, "basis rays", coll.basis_rays)

# Cl(X) is free of rank 2; write every [D_i] in the basis [D3], [D2]
cg = class_group(f)
basis = [cg.divisor_classes[2], cg.divisor_classes[1]]
for i, x in enumerate(cg.divisor_classes):
    print(f"[D{i + 1}] =", cg.express(x, basis))

# Gamma(tau) takes only two values over the nine cones
ups = upsilon(f, cg)
for k in range(len(ups.representatives)):
    print("class", k, "->", ups.cones_of(k))

# each orbit is equivalent to a smooth fixed point, hence Euler
for rec in classify_euler_orbits(f).records:
    print(rec.cone, "euler" if rec.euler else "not euler", "via", rec.target)
