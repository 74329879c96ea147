"""Hot inner loops.

Every kernel here is plain loop code over numpy arrays, compiled with numba
when the accelerated backend is active (see ``_accel``).  The two kernels
whose work is naturally vectorizable (annihilator-intersection adjacency and
the ring axiom audit) also have a numpy formulation; the dispatching
wrappers pick one according to the backend.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

# audit failure codes
AUDIT_OK = 0
AUDIT_RANGE = 1
AUDIT_ADD_ASSOC = 2
AUDIT_ADD_COMM = 3
AUDIT_ADD_IDENTITY = 4
AUDIT_ADD_INVERSE = 5
AUDIT_MUL_ASSOC = 6
AUDIT_LEFT_DISTRIB = 7
AUDIT_RIGHT_DISTRIB = 8
AUDIT_MUL_IDENTITY = 9

AUDIT_MESSAGES = {
    AUDIT_RANGE: "law value out of range",
    AUDIT_ADD_ASSOC: "addition not associative",
    AUDIT_ADD_COMM: "addition not commutative",
    AUDIT_ADD_IDENTITY: "zero is not an additive identity",
    AUDIT_ADD_INVERSE: "element without additive inverse",
    AUDIT_MUL_ASSOC: "multiplication not associative",
    AUDIT_LEFT_DISTRIB: "left distributivity fails",
    AUDIT_RIGHT_DISTRIB: "right distributivity fails",
    AUDIT_MUL_IDENTITY: "one is not a two-sided multiplicative identity",
}


# ---------------------------------------------------------------------------
# ring axiom audit

@njit
def _audit_loops(add, mul, zero, one):
    n = add.shape[0]
    for a in range(n):
        for b in range(n):
            if add[a, b] < 0 or add[a, b] >= n or mul[a, b] < 0 or mul[a, b] >= n:
                return AUDIT_RANGE, a, b, 0
    for a in range(n):
        if add[zero, a] != a or add[a, zero] != a:
            return AUDIT_ADD_IDENTITY, a, 0, 0
        if mul[one, a] != a or mul[a, one] != a:
            return AUDIT_MUL_IDENTITY, a, 0, 0
        has_inverse = False
        for b in range(n):
            if add[a, b] == zero:
                has_inverse = True
                break
        if not has_inverse:
            return AUDIT_ADD_INVERSE, a, 0, 0
        for b in range(n):
            if add[a, b] != add[b, a]:
                return AUDIT_ADD_COMM, a, b, 0
    for a in range(n):
        for b in range(n):
            ab_add = add[a, b]
            ab_mul = mul[a, b]
            for c in range(n):
                if add[ab_add, c] != add[a, add[b, c]]:
                    return AUDIT_ADD_ASSOC, a, b, c
                if mul[ab_mul, c] != mul[a, mul[b, c]]:
                    return AUDIT_MUL_ASSOC, a, b, c
                if mul[a, add[b, c]] != add[ab_mul, mul[a, c]]:
                    return AUDIT_LEFT_DISTRIB, a, b, c
                if mul[ab_add, c] != add[mul[a, c], mul[b, c]]:
                    return AUDIT_RIGHT_DISTRIB, a, b, c
    return AUDIT_OK, 0, 0, 0


def _first(mask):
    return tuple(int(i) for i in np.argwhere(mask)[0])


def _audit_numpy(add, mul, zero, one):
    n = add.shape[0]
    bad = (add < 0) | (add >= n) | (mul < 0) | (mul >= n)
    if bad.any():
        a, b = _first(bad)
        return AUDIT_RANGE, a, b, 0
    idx = np.arange(n)
    bad = (add[zero] != idx) | (add[:, zero] != idx)
    if bad.any():
        return AUDIT_ADD_IDENTITY, _first(bad)[0], 0, 0
    bad = (mul[one] != idx) | (mul[:, one] != idx)
    if bad.any():
        return AUDIT_MUL_IDENTITY, _first(bad)[0], 0, 0
    bad = ~(add == zero).any(axis=1)
    if bad.any():
        return AUDIT_ADD_INVERSE, _first(bad)[0], 0, 0
    bad = add != add.T
    if bad.any():
        a, b = _first(bad)
        return AUDIT_ADD_COMM, a, b, 0
    # one slab per left operand keeps memory at O(n^2)
    for a in range(n):
        checks = (
            (AUDIT_ADD_ASSOC, add[add[a]][:, :] != add[a][add]),
            (AUDIT_MUL_ASSOC, mul[mul[a]] != mul[a][mul]),
            (AUDIT_LEFT_DISTRIB, mul[a][add] != add[mul[a][:, None], mul[a][None, :]]),
            (AUDIT_RIGHT_DISTRIB, mul[add[a]] != add[mul[a][None, :], mul]),
        )
        for code, mask in checks:
            if mask.any():
                b, c = _first(mask)
                return code, a, b, c
    return AUDIT_OK, 0, 0, 0


def audit_tables(add, mul, zero, one):
    """Return ``(code, a, b, c)``; code ``AUDIT_OK`` means all axioms hold."""
    add = np.ascontiguousarray(add, dtype=np.int64)
    mul = np.ascontiguousarray(mul, dtype=np.int64)
    if USE_NUMBA:
        out = _audit_loops(add, mul, zero, one)
    else:
        out = _audit_numpy(add, mul, zero, one)
    return tuple(int(v) for v in out)


# ---------------------------------------------------------------------------
# annihilator-intersection adjacency

def pack_rows(mask):
    """Pack a 2-D boolean array into rows of uint64 words."""
    mask = np.asarray(mask, dtype=bool)
    rows, cols = mask.shape
    words = max(1, (cols + 63) // 64)
    padded = np.zeros((rows, words * 64), dtype=bool)
    padded[:, :cols] = mask
    return np.ascontiguousarray(np.packbits(padded, axis=1)).view(np.uint64)


@njit
def _trivial_meet_loops(words):
    v, w = words.shape
    adj = np.zeros((v, v), dtype=np.bool_)
    for i in range(v):
        for j in range(i + 1, v):
            meet = False
            for k in range(w):
                if words[i, k] & words[j, k]:
                    meet = True
                    break
            if not meet:
                adj[i, j] = True
                adj[j, i] = True
    return adj


def _trivial_meet_numpy(sets):
    counts = sets.astype(np.int32) @ sets.T.astype(np.int32)
    adj = counts == 0
    np.fill_diagonal(adj, False)
    return adj


def trivial_meet_matrix(sets):
    """Pairwise "intersection is empty" matrix for the rows of ``sets``.

    ``sets`` is a boolean (V, n) array; callers drop the column of the ring
    zero so that "empty" here means "equal to {0}" in the ring.  The diagonal
    is always False.
    """
    sets = np.asarray(sets, dtype=bool)
    if sets.shape[0] == 0:
        return np.zeros((0, 0), dtype=bool)
    if USE_NUMBA:
        return _trivial_meet_loops(pack_rows(sets))
    return _trivial_meet_numpy(sets)


# ---------------------------------------------------------------------------
# breadth-first search

@njit
def bfs_distances(adj):
    """All-pairs hop distances; -1 marks unreachable pairs."""
    v = adj.shape[0]
    dist = np.full((v, v), -1, dtype=np.int64)
    queue = np.empty(v, dtype=np.int64)
    for s in range(v):
        dist[s, s] = 0
        head = 0
        tail = 0
        queue[tail] = s
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            for w in range(v):
                if adj[u, w] and dist[s, w] < 0:
                    dist[s, w] = dist[s, u] + 1
                    queue[tail] = w
                    tail += 1
    return dist


@njit
def shortest_cycle(adj):
    """Length of the shortest cycle, or 0 when the graph is acyclic."""
    v = adj.shape[0]
    best = 0
    dist = np.empty(v, dtype=np.int64)
    parent = np.empty(v, dtype=np.int64)
    queue = np.empty(v, dtype=np.int64)
    for s in range(v):
        for i in range(v):
            dist[i] = -1
            parent[i] = -1
        dist[s] = 0
        head = 0
        tail = 0
        queue[tail] = s
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            if best and 2 * dist[u] >= best:
                break
            for w in range(v):
                if not adj[u, w]:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best == 0 or length < best:
                        best = length
    return best


# ---------------------------------------------------------------------------
# exact maximum clique

@njit
def _color_bound(adj, cand, classes):
    """Greedy sequential coloring of the candidate set; returns class count."""
    v = adj.shape[0]
    ncls = 0
    for u in range(v):
        if not cand[u]:
            continue
        placed = False
        for c in range(ncls):
            ok = True
            for w in range(v):
                if classes[c, w] and adj[u, w]:
                    ok = False
                    break
            if ok:
                classes[c, u] = True
                placed = True
                break
        if not placed:
            for w in range(v):
                classes[ncls, w] = False
            classes[ncls, u] = True
            ncls += 1
    for c in range(ncls):
        for w in range(v):
            classes[c, w] = False
    return ncls


@njit
def max_clique_kernel(adj, step_limit):
    """Branch and bound with greedy-coloring bounds.

    Returns ``(size, members, steps)``; ``size`` is -1 when ``step_limit``
    was exhausted before optimality was proved.  Vertices are branched on in
    ascending index order, so the reported clique is deterministic.
    """
    v = adj.shape[0]
    best = 0
    best_members = np.full(v, -1, dtype=np.int64)
    if v == 0:
        return 0, best_members, 0
    cand = np.zeros((v + 1, v), dtype=np.bool_)
    current = np.full(v, -1, dtype=np.int64)
    classes = np.zeros((v, v), dtype=np.bool_)
    for u in range(v):
        cand[0, u] = True
    depth = 0
    steps = 0
    while depth >= 0:
        steps += 1
        if steps > step_limit:
            return -1, best_members, steps
        if depth > best:
            best = depth
            for i in range(v):
                best_members[i] = current[i] if i < depth else -1
        remaining = 0
        first = -1
        for u in range(v):
            if cand[depth, u]:
                remaining += 1
                if first < 0:
                    first = u
        if remaining == 0 or depth + remaining <= best:
            depth -= 1
            continue
        if depth + _color_bound(adj, cand[depth], classes) <= best:
            depth -= 1
            continue
        cand[depth, first] = False
        current[depth] = first
        for u in range(v):
            cand[depth + 1, u] = cand[depth, u] and adj[first, u]
        depth += 1
    return best, best_members, steps


# ---------------------------------------------------------------------------
# exact coloring

@njit
def greedy_coloring(adj, order):
    """Sequential greedy coloring along ``order``; returns a color array."""
    v = adj.shape[0]
    colors = np.full(v, -1, dtype=np.int64)
    used = np.zeros(v + 1, dtype=np.bool_)
    for idx in range(v):
        u = order[idx]
        for c in range(v + 1):
            used[c] = False
        for w in range(v):
            if adj[u, w] and colors[w] >= 0:
                used[colors[w]] = True
        c = 0
        while used[c]:
            c += 1
        colors[u] = c
    return colors


@njit
def k_colorable_kernel(adj, order, k, step_limit):
    """Backtracking test for a proper ``k``-coloring.

    Vertices are colored along ``order``; a new color is only opened as the
    next unused one, which removes color-permutation symmetry.  Returns
    ``(status, colors, steps)`` with status 1 (found), 0 (impossible) or
    -1 (step limit reached).
    """
    v = adj.shape[0]
    colors = np.full(v, -1, dtype=np.int64)
    if v == 0:
        return 1, colors, 0
    if k <= 0:
        return 0, colors, 0
    # highest color in use among order[0..i-1]
    top = np.full(v + 1, -1, dtype=np.int64)
    pos = 0
    steps = 0
    while True:
        steps += 1
        if steps > step_limit:
            return -1, colors, steps
        u = order[pos]
        start = colors[u] + 1
        limit = top[pos] + 1
        if limit > k - 1:
            limit = k - 1
        chosen = -1
        for c in range(start, limit + 1):
            ok = True
            for w in range(v):
                if adj[u, w] and colors[w] == c:
                    ok = False
                    break
            if ok:
                chosen = c
                break
        if chosen < 0:
            colors[u] = -1
            pos -= 1
            if pos < 0:
                return 0, colors, steps
            continue
        colors[u] = chosen
        top[pos + 1] = top[pos] if top[pos] > chosen else chosen
        pos += 1
        if pos == v:
            return 1, colors, steps
