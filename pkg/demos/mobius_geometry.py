"""Tour of the half-plane primitives.

Walks through the Moebius action on interior and boundary points, hyperbolic
distance, Busemann cocycles and horocycles, and the cross-ratio machinery
(invariance, harmonic conjugates, crossing angles). Every printed value has
a closed form stated alongside it, so the output doubles as a sanity sheet.
"""

import math

import horoflow as hf


def section(title):
    print(f"\n=== {title} ===")


section("Moebius action")
g = hf.Mobius(2.0, 1.0, 1.0, 1.0)
print(f"g = {g}")
print(f"g(i)      = {hf.apply(g, hf.POINT_I)}   (expect (2i+1)/(i+1) = 1.5 + 0.5i)")
print(f"g(inf)    = {hf.apply_boundary(g, hf.INFINITY)}   (expect a/c = 2)")
print(f"g(-1)     = {hf.apply_boundary(g, hf.bp(-1.0))}   (pole of g: lands at infinity)")
print(f"g . g^-1  = {g @ g.inverse()}  (identity)")

fp = hf.fixed_points(g)
phi = (1.0 + math.sqrt(5.0)) / 2.0
print(f"fixed points of g = {fp}   (golden ratio {phi:.15f} and its conjugate)")

section("Distance")
print(f"dist(i, 4i) = {hf.dist(hf.POINT_I, hf.PointH(0, 4)):.15f}   (expect ln 4 = {math.log(4):.15f})")
z, w = hf.PointH(-2.0, 0.7), hf.PointH(3.0, 1.4)
print(f"dist(z, w)       = {hf.dist(z, w):.15f}")
print(f"dist(g z, g w)   = {hf.dist(hf.apply(g, z), hf.apply(g, w)):.15f}   (isometry)")

section("Busemann cocycle and horocycles")
print(f"B_inf(i, 2i) = {hf.busemann(hf.INFINITY, hf.POINT_I, hf.PointH(0, 2)):.15f}   (expect ln 2)")
print(f"B_inf(g(i), i) = {hf.busemann(hf.INFINITY, hf.apply(g, hf.POINT_I), hf.POINT_I):.15f}"
      f"   (expect ln(c^2 + d^2) = {math.log(g.c ** 2 + g.d ** 2):.15f})")
par = hf.Mobius(1.0, 0.0, 2.0, 1.0)  # parabolic fixing 0
print("a parabolic fixing 0 slides points along horocycles based at 0:")
print(f"  B_0(z, par z) = {hf.busemann(hf.bp(0), z, hf.apply(par, z)):.3e}   (expect 0)")
cyc = hf.Horocycle.through(hf.bp(0), hf.POINT_I)
print(f"  horocycle through i based at 0: level {cyc.level}, "
      f"contains par(i): {cyc.contains(hf.apply(par, hf.POINT_I))}")

section("Cross-ratio")
print(f"[0; 1; 2; inf] = {hf.cross_ratio(hf.bp(0), hf.bp(1), hf.bp(2), hf.INFINITY)}   (expect 2)")
print(f"[-1; 0; inf; 1] = {hf.cross_ratio(hf.bp(-1), hf.bp(0), hf.INFINITY, hf.bp(1))}   (expect 1/2)")
pts = [hf.bp(-0.5), hf.bp(0.0), hf.bp(1.0), hf.bp(3.0)]
m = hf.Mobius(3.0, 1.0, 2.0, 1.0)
images = [hf.apply_boundary(m, p) for p in pts]
print(f"m maps -0.5 to {images[0]} exactly; cross-ratio is preserved anyway:")
print(f"  before {hf.cross_ratio(*pts):.15f}  after {hf.cross_ratio(*images):.15f}")

section("Harmonic conjugates and right angles")
w0 = hf.harmonic_conjugate(hf.bp(0), hf.bp(4), hf.bp(1))
print(f"conjugate of 1 with respect to (0, 4) = {w0}   (expect -2)")
beta = hf.angle_between(hf.Geodesic(hf.bp(0), hf.bp(4)), hf.Geodesic(w0, hf.bp(1)))
print(f"the geodesics (0,4) and ({w0.value:g},1) cross at {beta:.15f}"
      f"   (expect pi/2 = {math.pi / 2:.15f})")
print(f"[y; x; z; w] at a harmonic quadruple = "
      f"{hf.cross_ratio(hf.bp(0), hf.bp(4), hf.bp(1), w0):.15f}   (expect -1)")
try:
    hf.angle_between(hf.Geodesic(hf.bp(0), hf.bp(1)), hf.Geodesic(hf.bp(2), hf.bp(3)))
except hf.NoIntersection as exc:
    print(f"disjoint geodesics refuse an angle: {exc}")
