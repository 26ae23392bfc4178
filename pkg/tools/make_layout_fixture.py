"""Generate the committed 3-cluster layout fixture.

60 points in 10-D: three clusters of 20, centroids mutually 50 apart,
within-cluster noise sigma 0.5. Written as JSON so the fixture is diffable.
"""

import json
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "clusters_60x10.json"


def main() -> None:
    rng = np.random.default_rng(20240612)
    dim = 10
    per_cluster = 20
    # three centroids forming an equilateral triangle with side 50
    base = np.zeros((3, dim))
    base[1, 0] = 50.0
    base[2, 0] = 25.0
    base[2, 1] = 25.0 * np.sqrt(3.0)
    points = []
    labels = []
    for label, centroid in enumerate(base):
        cluster = centroid + rng.normal(0.0, 0.5, size=(per_cluster, dim))
        points.extend(cluster.tolist())
        labels.extend([label] * per_cluster)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"points": points, "labels": labels}, indent=1) + "\n")
    print(f"wrote {OUT} ({len(points)} points)")
    d01 = np.linalg.norm(base[0] - base[1])
    d02 = np.linalg.norm(base[0] - base[2])
    d12 = np.linalg.norm(base[1] - base[2])
    print(f"centroid distances: {d01:.1f} {d02:.1f} {d12:.1f}")


if __name__ == "__main__":
    main()
