# Products with a circle: constant scalar curvature conformal factors on
# M^{n-1} x S^1(r) reduce to a planar Hamiltonian system. Closed orbits
# around the positive equilibrium give 2 pi r - periodic solutions; their
# number grows with the circle radius, and the Yamabe quotient of the
# near-separatrix solution climbs toward the sphere invariant Y_n.

import math

import numpy as np

from gnyamabe import (circle_quotient, constant_solution,
                      count_periodic_solutions, integrate_orbit,
                      minimal_period, orbit_for_period, orbit_period,
                      yamabe_sphere)

n = 4
uc = constant_solution(n)
t_min = minimal_period(n)
print(f"dimension n = {n}")
print(f"constant solution u_c = {uc:.7f}")
print(f"minimal orbit period  = {t_min:.7f} (harmonic limit 2 pi / sqrt(n-2))")

print("\nperiod grows with amplitude:")
for u_max in (0.75, 0.85, 0.95, 0.99, 0.999):
    print(f"  u_max = {u_max:5.3f}: T = {orbit_period(n, u_max):.6f}")

print("\nsolution count vs circle radius:")
for r in (0.5, 0.708, 0.72, 1.5, 3.0, 10.0):
    print(f"  r = {r:6.3f}: {count_periodic_solutions(n, r)} nonconstant "
          "solutions")

r = 2.0
k = count_periodic_solutions(n, r)
print(f"\nat r = {r} every harmonic k <= {k} carries an orbit:")
for j in range(1, k + 1):
    orb = orbit_for_period(n, 2 * math.pi * r / j)
    print(f"  k = {j}: u_max = {orb.u_max:.6f}, period = {orb.period:.6f}")

print("\nYamabe quotient of one periodic solution, climbing toward "
      f"Y_{n} = {yamabe_sphere(n):.5f}:")
for u_max in (0.9, 0.99, 0.999, 0.9999):
    q = circle_quotient(n, u_max)
    r_eff = orbit_period(n, u_max) / (2 * math.pi)
    print(f"  u_max = {u_max:6.4f} (r = {r_eff:.4f}): Q = {q:.5f}")

# energy conservation along a stored orbit, for the record
from gnyamabe import hamiltonian, potential

u_max = 0.9
ts, us, dus = integrate_orbit(n, u_max, orbit_period(n, u_max))
drift = np.max(np.abs(hamiltonian(us, dus, n) - potential(u_max, n)))
print(f"\nenergy drift over one period at u_max = {u_max}: {drift:.2e}")
