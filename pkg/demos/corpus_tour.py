"""Small matroids up to isomorphism, and a written corpus on disk."""

import tempfile
from pathlib import Path

from matroid_k0 import canonical_form, tutte
from matroid_k0.corpus import connected_graphs, exhaustive_matroids, write_corpus

for n in range(6):
    print(f"{n} elements: {len(exhaustive_matroids(n, n))} classes")

print("connected multigraphs by edge count:",
      [sum(1 for _, e in connected_graphs(4) if len(e) == k) for k in range(5)])

for m in exhaustive_matroids(3, 3):
    print(canonical_form(m).hex(), tutte(m))

with tempfile.TemporaryDirectory() as tmp:
    lines = write_corpus(Path(tmp), 3, ("exhaustive", "graphical"), seed=1)
    print(f"{len(lines)} files; first manifest lines:")
    for line in lines[:3]:
        print("  " + line)
