"""Unit-disk layouts and the blockade radius.

Two six-atom layouts, both with 6 um nearest-neighbor spacing:

* a hexagon-flavored strip ("graph A"): a four-atom chain with two atoms
  perched above it, disk radius 8 um;
* a house-shaped strip ("graph B"): the same chain with two atoms hanging
  below, disk radius 7 um.

The script builds both, shows the derived adjacency, and checks them
against the hardware spacing floor and the disk-boundary ambiguity margin.
"""

import math

from rydnash import (
    ambiguity_warnings,
    blockade_radius,
    build_unit_disk_graph,
    validate_embedding,
)

ROOT3 = math.sqrt(3.0)

graph_a = build_unit_disk_graph(
    [(0, 0), (6, 0), (12, 0), (18, 0), (9, 3 * ROOT3), (15, 3 * ROOT3)], radius=8.0
)
graph_b = build_unit_disk_graph(
    [(0, 0), (6, 0), (12, 0), (18, 0), (6, -6), (12, -6)], radius=7.0
)

for name, g in (("A", graph_a), ("B", graph_b)):
    print(f"graph {name}: {g.n} atoms, radius {g.radius} um")
    print(f"  edges: {g.edges}")
    report = validate_embedding(g)
    print(f"  spacing floor ok: {report.ok}")
    for w in ambiguity_warnings(g, margin=0.15):
        print(f"  boundary warning: {w.kind} pair {w.pair} at {w.distance:.2f} um")

# The blockade radius is where the pair interaction equals the drive scale.
# At the coupling used for graph A below, it lands between the 6 um edges
# and the 10.39 um closest non-edge, which is exactly what the unit-disk
# rule needs.
for c6 in (6.0e5, 2.2e6, 5.42e6):
    rb = blockade_radius(c6, omega=7.27, delta=7.27)
    print(f"c6 = {c6:9.3g} rad/us um^6  ->  blockade radius {rb:.2f} um")
