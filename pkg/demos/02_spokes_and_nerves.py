"""
Nerves and spoke levels on the 3x3 grid fixture.

The centre vertex touches four triangles (its nerve).  Spreading outwards
through shared vertices reaches the four corner triangles at level two.
"""

from deltashape import max_nerve_cluster, object_space, spoke_chain, spoke_decomposition
from deltashape.nerve import max_nerve_clusters
from deltashape.synthetic import grid_nerve_complex

K = grid_nerve_complex()
best, ties = max_nerve_clusters(K)
print(f"largest nerve has {best} triangles; attained at vertices {ties}")

p, nv = max_nerve_cluster(K)
print(f"nucleus (lowest id among ties): {p}")
print("nerve:", sorted(c.vertices for c in nv))

dec = spoke_decomposition(K, p)
for k, level in enumerate(dec.levels):
    print(f"level {k}: {sorted(c.vertices for c in level)}")

print("chain to the outer level:", [c.vertices for c in spoke_chain(dec, dec.depth)])
print("object space covers every triangle:", object_space(K, p).cells == K.X2)

# a boundary vertex sees a different picture
dec = spoke_decomposition(K, 1)
print("around corner vertex 1:", [len(level) for level in dec.levels])
