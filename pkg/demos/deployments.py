"""Generate both deployment modes for one seed and write CSV + SVG."""

from wsngen import deploy_grid, deploy_nongrid, deployment_to_csv, deployment_to_svg

seed = 43
nodes = 100
area = 100.0

for mode, fn in (("non-grid", deploy_nongrid), ("grid", deploy_grid)):
    dep = fn(nodes, area, seed)
    print(f"{mode}: seed={seed} a={dep.params.a:.6f} c={dep.params.c:.6f}")
    for i, (x, y) in enumerate(dep.points[:4], start=1):
        print(f"  node {i}: ({x:.6f}, {y:.6f})")
    stem = f"deployment_{mode.replace('-', '_')}"
    deployment_to_csv(dep, stem + ".csv")
    deployment_to_svg(dep, stem + ".svg")
    print(f"  wrote {stem}.csv and {stem}.svg")

# same seed, same files, every run
dep_again = deploy_grid(nodes, area, seed)
assert dep_again.points == deploy_grid(nodes, area, seed).points
print("regeneration is exact")
