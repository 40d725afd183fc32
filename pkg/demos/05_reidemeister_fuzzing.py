"""Stress-testing invariance with seeded random Reidemeister walks.

Each walk applies a random mix of R1/R2/R3 moves, recording a replayable
trace.  Along any walk, L changes exactly by y to the net signed count
of R1 moves, and the normalized polynomial F does not change at all.
"""

from collections import Counter

from kauffpoly import (
    kauffman_F,
    kauffman_L,
    parse_pd,
    random_move_walk,
    replay,
)

start = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")  # trefoil
cache = {}
L_start = kauffman_L(start, cache=cache)
F_start = kauffman_F(start, (1,), cache=cache)

print(f"start: trefoil, L = {L_start}")
print()
census = Counter()
for seed in range(8):
    end, trace = random_move_walk(start, steps=14, seed=seed, max_c=10)
    census.update(step.kind for step in trace.steps)
    assert replay(start, trace.steps) == end  # traces replay bit-exactly
    L_end = kauffman_L(end, cache=cache)
    F_end = kauffman_F(end, (1,), cache=cache)
    print(
        f"seed {seed}: {len(trace.steps):2d} moves, end c={end.c}, "
        f"net R1 = {trace.net_r1:+d}, "
        f"L scaled correctly = {L_end == L_start.shift_y(trace.net_r1)}, "
        f"F unchanged = {F_end == F_start}"
    )

print()
print("move mix over all walks:", dict(sorted(census.items())))
