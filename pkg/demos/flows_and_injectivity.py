"""Frame flows and the injectivity-radius profile along a ray.

Shows the geodesic and horocycle flows acting on unit tangent frames, their
renormalization relation, and the injectivity profile: half the smallest
displacement of the ray point under the group, tracked along the forward
geodesic. A cusp ray thins out exponentially; a closed geodesic does not.
"""

import math

import numpy as np

import horoflow as hf


def section(title):
    print(f"\n=== {title} ===")


section("Flows on the base frame")
u = hf.BASE_TANGENT
print(f"start:              base {u.base_point()}, forward endpoint {u.forward_endpoint()}")
g1 = hf.geodesic_flow(u, 1.0)
print(f"geodesic flow t=1:  base {g1.base_point()}   (expect e * i)")
h1 = hf.horocycle_flow(u, 1.0)
print(f"horocycle flow s=1: base {h1.base_point()}   (expect 1 + i)")
print(f"both keep the forward endpoint: {g1.forward_endpoint()}, {h1.forward_endpoint()}")

section("Renormalization")
t, s = 0.8, 1.7
lhs = hf.geodesic_flow(hf.horocycle_flow(hf.geodesic_flow(u, -t), s), t)
rhs = hf.horocycle_flow(u, s * math.exp(-t))
print(f"g_t h_s g_-t and h_(s e^-t) frames agree: "
      f"{max(abs(lhs.frame.a - rhs.frame.a), abs(lhs.frame.b - rhs.frame.b)):.3e}")

section("Orbit samples")
ts = np.linspace(0.0, 2.0, 5)
print("geodesic orbit: ", np.round(hf.orbit_points(u, 'geodesic', ts), 6))
print("horocycle orbit:", np.round(hf.orbit_points(u, 'horocycle', ts), 6))

section("Injectivity profile into a cusp")
par = hf.cyclic_parabolic()
prof = hf.injectivity_profile(par)
expect = np.arcsinh(np.exp(-prof.times) / 2.0)
print(f"rows: {len(prof.times)}, grid [{prof.times[0]}, {prof.times[-1]}]")
print(f"max deviation from asinh(e^-t / 2): {np.max(np.abs(prof.inj_estimates - expect)):.3e}")
print(f"liminf estimate: {prof.liminf_estimate:.3e}  (thins toward the cusp)")

section("Injectivity profile along a closed geodesic")
hyp = hf.cyclic_hyperbolic()
prof = hf.injectivity_profile(hyp)
print(f"constant at half the translation length ln(4)/2 = {0.5 * math.log(4.0):.6f}:")
print(f"  min {prof.inj_estimates.min():.15f}  max {prof.inj_estimates.max():.15f}")
print(f"liminf estimate: {prof.liminf_estimate:.15f}")
