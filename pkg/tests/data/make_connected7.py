"""Regenerate connected7.g6: every connected 7-vertex graph, one per line.

Uses the networkx graph atlas (all graphs up to 7 vertices, one per
isomorphism class).  Run from this directory: ``python3 make_connected7.py``.
"""

from pathlib import Path

import networkx as nx


def main() -> None:
    lines = [
        nx.to_graph6_bytes(g, header=False).decode().strip()
        for g in nx.graph_atlas_g()
        if g.number_of_nodes() == 7 and nx.is_connected(g)
    ]
    Path(__file__).with_name("connected7.g6").write_text("\n".join(lines) + "\n")
    print(len(lines))


if __name__ == "__main__":
    main()
