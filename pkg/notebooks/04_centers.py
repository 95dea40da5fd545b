"""
What the center of a DH graph looks like
========================================

The center of a DH graph induces either a cograph, or a connected graph of
diameter 3 whose own center is a connected cograph of radius 2.  Both
shapes can be embedded as the center of a larger DH graph.
"""
from dhecc.builders import embed_as_center, random_cograph, random_dh, random_diam3_center_input
from dhecc.centers import classify_center, find_unimodality_break
from dhecc.graph import all_pairs_ecc_oracle

# %%
# Random DH graphs: the center is usually a cograph.
kinds = {}
for seed in range(200):
    g, _ = random_dh(5 + seed % 80, seed)
    kind = classify_center(g).classification
    kinds[kind] = kinds.get(kind, 0) + 1
print(kinds)

# %%
# The second shape only shows up when we build it on purpose.
h = random_diam3_center_input(10, seed=3)
g = embed_as_center(h, "diam3")
rep = classify_center(g)
print(rep.classification, "diam(H) =", rep.h_diam, "rad(C(H)) =", rep.h_center_rad)

h = random_cograph(8, seed=2)
print(classify_center(embed_as_center(h, "cograph")).classification)

# %%
# Eccentricity is almost unimodal: a non-central vertex without a neighbour
# of smaller eccentricity has e = rad + 1, sits at distance 2 from the
# center, and the graph has diam = 2 rad.
seed, n, g, rep = find_unimodality_break(range(500))
t = all_pairs_ecc_oracle(g)
print(f"seed {seed}, n {n}: rad {t.rad}, diam {t.diam}, breaks (v, e, d(v,C)) = {rep.breaks[:3]}")
