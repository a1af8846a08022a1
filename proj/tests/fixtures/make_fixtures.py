#!/usr/bin/env python3
"""Regenerates the graph corpus fixtures from the networkx graph atlas.

The atlas enumerates all non-isomorphic graphs on up to 7 vertices; networkx
also serves as the independent graph6 reference codec for the decoded
samples.  Run from this directory:

    python3 make_fixtures.py
"""

import hashlib
import json

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def g6(graph: nx.Graph) -> str:
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def main() -> None:
    atlas = graph_atlas_g()

    small = [g6(g) for g in atlas if 1 <= g.number_of_nodes() <= 6]
    assert len(small) == 208, len(small)
    with open("graphs_n1_n6.g6", "w") as fh:
        fh.write("\n".join(small) + "\n")

    seven = [g6(g) for g in atlas if g.number_of_nodes() == 7]
    assert len(seven) == 1044, len(seven)
    with open("graphs_n7.g6", "w") as fh:
        fh.write("\n".join(seven) + "\n")

    # Reference decodings, frozen for parser cross-checks.
    picked = ["@", "A_", "A?", "Bw", "D?{", "DQo", "E?~o"] + small[25::40] + seven[100::300]
    samples = []
    for text in picked:
        graph = nx.from_graph6_bytes(text.encode())
        samples.append({
            "graph6": text,
            "n": graph.number_of_nodes(),
            "edges": sorted([min(u, v), max(u, v)] for u, v in graph.edges()),
        })
    with open("decoded_samples.json", "w") as fh:
        json.dump(samples, fh, indent=1, sort_keys=True)
        fh.write("\n")

    with open("CHECKSUMS.sha256", "w") as fh:
        for name in ("graphs_n1_n6.g6", "graphs_n7.g6"):
            digest = hashlib.sha256(open(name, "rb").read()).hexdigest()
            fh.write(f"{digest}  {name}\n")


if __name__ == "__main__":
    main()
