"""
Recognising distance-hereditary graphs by pruning
=================================================

A connected graph is distance-hereditary (DH) when it can be reduced to a
single vertex by repeatedly deleting pendant vertices and twins.  This
script builds a few graphs, prunes them layer by layer from a root and
prints the resulting sequence.
"""

# %%
# A small example: the clique-pair family with three pairs.
from dhecc.builders import build_named, fig5_family, random_dh
from dhecc.pruning import build_pruning_sequence, find_central_vertex, is_distance_hereditary, replay

g = fig5_family(3)
root = find_central_vertex(g)
seq = build_pruning_sequence(g, root)
print(f"n={g.n} m={g.m} root={root}")
print("step vertex kind partner layer phase")
print(seq.dump())

# %%
# The markers split the sequence into the three backward phases used by
# the eccentricity algorithm: steps before y, the trailing run of layer-2
# pendants [y, z), and the layer-1 steps from z on.
print("marker y =", seq.marker_y, " marker z =", seq.marker_z)

# %%
# Replaying the steps backwards rebuilds the graph exactly.
assert replay(seq) == g

# %%
# Non-DH graphs stall: every forbidden induced subgraph is rejected.
for name in ("house", "gem", "domino", "cycle(5)", "cycle(8)"):
    print(f"{name:10s} DH? {is_distance_hereditary(build_named(name))}")

# %%
# Random DH graphs from the seeded generator always pass.
sizes = [10, 100, 1000]
for n in sizes:
    h, _ = random_dh(n, seed=n)
    print(f"random_dh({n}): m={h.m}, DH? {is_distance_hereditary(h)}")
