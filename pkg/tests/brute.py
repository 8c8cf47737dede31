"""Brute-force helpers for tests; deliberately share no code with the package."""
from __future__ import annotations


def semigroup_set(gens, bound):
    """Elements of <gens> up to ``bound`` by closing {0} under addition."""
    reach = [False] * (bound + 1)
    reach[0] = True
    for n in range(1, bound + 1):
        reach[n] = any(n >= g and reach[n - g] for g in gens)
    return {n for n in range(bound + 1) if reach[n]}


def ideal_set(sgens, igens, bound):
    S = semigroup_set(sgens, bound)
    return {a + s for a in igens for s in S if a + s <= bound}


def fiber_components(Mset, Nset, d, ring_gens):
    """Components of the fiber graph by explicit BFS over (x, y) nodes."""
    nodes = {(x, d - x) for x in Mset if (d - x) in Nset}
    adj = {v: set() for v in nodes}
    for x, y in nodes:
        for g in ring_gens:
            w = (x - g, y + g)
            if w in nodes:
                adj[(x, y)].add(w)
                adj[w].add((x, y))
    seen, comps = set(), 0
    for v in sorted(nodes):
        if v in seen:
            continue
        comps += 1
        stack = [v]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(adj[u] - seen)
    return comps, sorted(nodes)
