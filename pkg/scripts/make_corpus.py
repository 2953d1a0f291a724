"""Regenerate the graph6 corpora shipped in src/skewspec/data.

connected_n{1..7}.g6  : all connected graphs up to isomorphism (networkx atlas)
all_n{1..6}.g6        : all graphs, connected or not
regular_n8_deg3.g6    : connected regular graphs on 8 vertices with degree <= 3

Needs networkx, which the library itself does not import.
"""

from pathlib import Path

import networkx as nx

DATA = Path(__file__).resolve().parents[1] / "src" / "skewspec" / "data"


def relabelled_graph6(G):
    G = nx.convert_node_labels_to_integers(G)
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def cubic_graphs(n, expected):
    """Connected cubic graphs on n vertices up to isomorphism, by seeded sampling.

    Stops once ``expected`` classes (the known count) have been seen.
    """
    found = []
    seed = 0
    while len(found) < expected:
        G = nx.random_regular_graph(3, n, seed=seed)
        seed += 1
        if nx.is_connected(G) and not any(nx.is_isomorphic(G, H) for H in found):
            found.append(G)
    return found


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    by_n = {n: [] for n in range(1, 8)}
    all_n = {n: [] for n in range(1, 7)}
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n in all_n:
            all_n[n].append(relabelled_graph6(G))
        if 1 <= n <= 7 and nx.is_connected(G):
            by_n[n].append(relabelled_graph6(G))
    for n, lines in by_n.items():
        (DATA / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")
        print("connected", n, len(lines))
    for n, lines in all_n.items():
        (DATA / f"all_n{n}.g6").write_text("\n".join(lines) + "\n")
        print("all", n, len(lines))

    regular = [nx.cycle_graph(8)] + cubic_graphs(8, expected=5)
    (DATA / "regular_n8_deg3.g6").write_text("\n".join(relabelled_graph6(G) for G in regular) + "\n")
    print("regular n=8:", len(regular))


if __name__ == "__main__":
    main()
