# Locate the ground state for (m, n) = (2, 2), evaluate the
# Gagliardo-Nirenberg functional on it, and convert the result into the
# limiting Yamabe constant of S^2 x S^2 as the second factor blows up.

from gnyamabe import (Dims, find_ground_state, gn_value,
                      unit_volume_sphere_scalar, y_infinity, yamabe_sphere)

d = Dims(2, 2)
gs = find_ground_state(d)
print(f"alpha0(2,2)   = {gs.alpha0:.10f}")
print(f"final bracket = [{gs.bracket[0]:.12f}, {gs.bracket[1]:.12f}]")
print(f"profile nodes = {gs.profile.ts.size}, cut at t = {gs.profile.ts[-1]:.3f}")

res = gn_value(gs.profile, d)
print(f"|grad f|_2^2  = {res.grad_sq:.8f}")
print(f"|f|_2^2       = {res.l2_sq:.8f}")
print(f"|f|_4         = {res.lp_norm:.8f}")
print(f"sigma_inv     = {res.sigma_inv:.7f}   (inverse best constant)")

# first factor: round 2-sphere scaled to unit volume
s_g = unit_volume_sphere_scalar(2)
y_inf = y_infinity(d, s_g, res.sigma_inv)
print(f"\ns_g (unit-volume S^2) = {s_g:.7f}")
print(f"limiting Yamabe const = {y_inf:.5f}")
print(f"sphere benchmark Y_4  = {yamabe_sphere(4):.5f}")
print(f"strictly below the sphere: {y_inf < yamabe_sphere(4)}")

# the closed-form check for a flat 1-d second factor: the ground state is
# an explicit sech power, so (m, 1) pairs have known answers
import math

gs31 = find_ground_state(Dims(3, 1))
print(f"\nalpha0(3,1) = {gs31.alpha0:.12f}  vs sqrt(2) = {math.sqrt(2):.12f}")
