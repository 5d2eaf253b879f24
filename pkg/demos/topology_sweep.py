"""Isolated-node counts against transmission range, both deployment modes."""

from wsngen import build_graph, deploy_grid, deploy_nongrid, isolated_by_range, isolated_count

seed = 0
ranges = [5.0, 7.5, 10.0, 12.5, 15.0, 20.0, 25.0]

for mode, fn in (("non-grid", deploy_nongrid), ("grid", deploy_grid)):
    dep = fn(100, 100.0, seed)
    counts = isolated_by_range(dep, ranges)
    print(f"{mode}, seed {seed}:")
    for tr in ranges:
        bar = "#" * counts[tr]
        print(f"  tr={tr:5.1f}  isolated={counts[tr]:3d}  {bar}")

# epsilon inflates the sensing radius: epsilon on tr equals a plain build
# at tr + epsilon
dep = deploy_nongrid(100, 100.0, seed)
g1 = build_graph(dep, 10.0, epsilon=2.5)
g2 = build_graph(dep, 12.5)
assert g1.edges == g2.edges
print("epsilon relaxation check:", isolated_count(g1), "isolated at tr=10+2.5")
