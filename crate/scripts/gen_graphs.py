#!/usr/bin/env python3
"""Enumerate all simple graphs on n vertices (up to isomorphism) as graph6.

Graphs on n vertices are grown from graphs on n-1 vertices by adding a vertex
joined to every possible neighbourhood; duplicates are removed with nauty's
canonical labelling (pynauty). Each graph is emitted in canonical form and the
output is sorted, so reruns are byte-identical.

usage: gen_graphs.py MAX_N OUTDIR
"""
import sys
from itertools import combinations
from pathlib import Path

import pynauty


def to_graph6(n, edges):
    bits = []
    adj = set(edges)
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def canonical(n, edges):
    adjd = {v: [] for v in range(n)}
    for i, j in edges:
        adjd[i].append(j)
    g = pynauty.Graph(n, adjacency_dict=adjd)
    lab = pynauty.canon_label(g)
    pos = {old: new for new, old in enumerate(lab)}
    return tuple(sorted(tuple(sorted((pos[i], pos[j]))) for i, j in edges))


def main():
    max_n = int(sys.argv[1])
    outdir = Path(sys.argv[2])
    outdir.mkdir(parents=True, exist_ok=True)
    level = {()}
    for n in range(1, max_n + 1):
        if n > 1:
            nxt = set()
            for edges in level:
                for k in range(n):
                    for nbrs in combinations(range(n - 1), k):
                        new = list(edges) + [(u, n - 1) for u in nbrs]
                        nxt.add(canonical(n, new))
            level = nxt
        lines = sorted(to_graph6(n, e) for e in level)
        (outdir / f"graphs{n}.g6").write_text("".join(l + "\n" for l in lines))
        print(n, len(lines))


if __name__ == "__main__":
    main()
