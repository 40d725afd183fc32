"""Reading PD codes and taking a diagram apart crossing by crossing.

A diagram is a rotation system: four counterclockwise ports per
crossing, edges matching ports in pairs, plus a counter of crossing-free
circles.  Splicing removes a crossing by one of its two smoothings.
"""

from kauffpoly import parse_pd

kink = parse_pd("X(1,2,2,1)")
hopf = parse_pd("X(1,4,2,3) X(3,2,4,1)")
trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")

for name, d in [("kink", kink), ("hopf", hopf), ("trefoil", trefoil)]:
    print(f"{name}: c={d.c} r={d.r} faces={len(d.faces())} planar={d.is_planar()}")

print()
print("Splicing the kink both ways:")
for kind in "AB":
    s = kink.splice(0, kind)
    print(f"  {kind}-splice -> {s.to_pd() or '(loops only)'}  (r={s.r})")

print()
print("Splices change the component count by a sign that depends on")
print("whether the two strands at the crossing share a component:")
for name, d in [("kink", kink), ("hopf", hopf)]:
    for p in range(d.c):
        shifts = {k: d.delta_shift(p, k) for k in "AB"}
        print(
            f"  {name} crossing {p}: strands on "
            f"{'different components' if d.delta_p(p) else 'one component'},"
            f" shifts {shifts}"
        )

print()
print("Writhe under a chosen orientation, and mirroring:")
print(f"  kink writhe: {kink.writhe((1,))}; its mirror: {kink.mirror().writhe((1,))}")
for o in ((1, 1), (1, -1)):
    print(f"  hopf writhe with orientation {o}: {hopf.writhe(o)}")
print(f"  trefoil writhe: {trefoil.writhe((1,))} (direction-independent for knots)")
