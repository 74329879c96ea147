"""Slow, obviously-correct reference computations used as test oracles.

Nothing here imports the package's graph or ideal code; the only input is a
ring's raw Cayley tables.
"""
import itertools
from math import gcd


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def tables(ring):
    return ring.add_table.tolist(), ring.mul_table.tolist()


def units(ring):
    _, mul = tables(ring)
    one = ring.one_index
    n = ring.order
    return {x for x in range(n) if any(mul[x][y] == one and mul[y][x] == one for y in range(n))}


def left_ann(mul, x):
    return {r for r in range(len(mul)) if mul[r][x] == 0}


def right_ann(mul, x):
    return {r for r in range(len(mul)) if mul[x][r] == 0}


def annihilator(ring, x, side):
    _, mul = tables(ring)
    if side == "left":
        return left_ann(mul, x)
    if side == "right":
        return right_ann(mul, x)
    return left_ann(mul, x) & right_ann(mul, x)


def za_edges(ring, side):
    """Edge set of ZA straight from the definition, as element index pairs."""
    u = units(ring)
    vertices = [x for x in range(1, ring.order) if x not in u]
    ann = {x: annihilator(ring, x, side) for x in vertices}
    return vertices, {(x, y) for x, y in itertools.combinations(vertices, 2) if ann[x] & ann[y] == {0}}


def span(ring, gens):
    """Two-sided ideal generated by ``gens`` by naive closure."""
    add, mul = tables(ring)
    n = ring.order
    members = {0} | set(gens)
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for r in range(n):
                for v in (mul[r][a], mul[a][r]):
                    if v not in members:
                        members.add(v)
                        changed = True
            for b in list(members):
                v = add[a][b]
                if v not in members:
                    members.add(v)
                    changed = True
    return frozenset(members)


def all_ideals(ring):
    """Every ideal: grow from {0} by adjoining one element at a time."""
    found = {frozenset({0})}
    frontier = list(found)
    while frontier:
        fresh = []
        for ideal in frontier:
            for x in range(ring.order):
                if x not in ideal:
                    j = span(ring, ideal | {x})
                    if j not in found:
                        found.add(j)
                        fresh.append(j)
        frontier = fresh
    return found


def max_clique_size(adj):
    v = len(adj)
    for k in range(v, 0, -1):
        for combo in itertools.combinations(range(v), k):
            if all(adj[a][b] for a, b in itertools.combinations(combo, 2)):
                return k
    return 0


def chromatic_number(adj):
    v = len(adj)
    if v == 0:
        return 0
    for k in range(1, v + 1):
        colors = [-1] * v

        def place(i):
            if i == v:
                return True
            # colors are interchangeable, so a vertex may open at most one new color
            for c in range(min(k, max(colors[:i], default=-1) + 2)):
                if all(not adj[i][j] or colors[j] != c for j in range(i)):
                    colors[i] = c
                    if place(i + 1):
                        return True
            colors[i] = -1
            return False

        if place(0):
            return k
    return v


def diameter(adj):
    v = len(adj)
    if v == 0:
        return 0
    best = 0
    for s in range(v):
        dist = {s: 0}
        queue = [s]
        for u in queue:
            for w in range(v):
                if adj[u][w] and w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < v:
            return float("inf")
        best = max(best, max(dist.values()))
    return best


def girth(adj):
    """Shortest cycle: for each edge uv, shortest u-v path avoiding that edge, plus one."""
    v = len(adj)
    best = float("inf")
    for u, w in itertools.combinations(range(v), 2):
        if not adj[u][w]:
            continue
        dist = {u: 0}
        queue = [u]
        for a in queue:
            for b in range(v):
                if adj[a][b] and b not in dist and (a, b) != (u, w):
                    dist[b] = dist[a] + 1
                    queue.append(b)
        if w in dist:
            best = min(best, dist[w] + 1)
    return best
