"""Pure-Python kernel fallback.

Same contract as the compiled `_ckern` module.  All functions work on flat
int structures: a *step table* is a length `nv*deg` list where entry
`v*deg + d` is the vertex reached from `v` along directed letter `d`
(-1 if absent); adjacency is a flat neighbor list plus offsets; words are
lists of directed-letter codes (letter `i` -> `2*i`, its inverse -> `2*i+1`).
"""

from collections import deque

BACKEND = "python"


def prepare_ints(seq):
    """Bake an int sequence into the backend's preferred container."""
    return list(seq)


def prepare_bytes(n):
    """Zeroed byte buffer of length n."""
    return bytearray(n)


def free_reduce(word):
    """Freely reduce a word of directed letters (x and x^1 cancel)."""
    out = []
    for d in word:
        if out and out[-1] == d ^ 1:
            out.pop()
        else:
            out.append(d)
    return out


def lift_end(step, deg, start, word, i0, j):
    """Lift word[i0:j] from `start`; final vertex, or ~pos of the first stuck letter."""
    v = start
    for i in range(i0, j):
        v = step[v * deg + word[i]]
        if v < 0:
            return ~i
    return v


def lift_runs(step, deg, nv, word, i0):
    """For every start vertex, how many letters of word[i0:] lift before sticking."""
    total = len(word) - i0
    runs = [0] * nv
    for start in range(nv):
        v = start
        k = 0
        while k < total:
            v = step[v * deg + word[i0 + k]]
            if v < 0:
                break
            k += 1
        runs[start] = k
    return runs


def bfs_parents(nbr, off, n, src, blocked=None, skip_u=-1, skip_v=-1):
    """BFS parent array from src; -1 = root, -2 = unreached.

    `blocked` marks forbidden vertices; the single undirected edge
    (skip_u, skip_v) is not traversed in either direction.
    """
    parents = [-2] * n
    if blocked is not None and blocked[src]:
        return parents
    parents[src] = -1
    q = deque([src])
    while q:
        u = q.popleft()
        for i in range(off[u], off[u + 1]):
            w = nbr[i]
            if parents[w] != -2:
                continue
            if blocked is not None and blocked[w]:
                continue
            if (u == skip_u and w == skip_v) or (u == skip_v and w == skip_u):
                continue
            parents[w] = u
            q.append(w)
    return parents


def bfs_dists(nbr, off, n, src):
    """BFS distance array from src (-1 unreachable)."""
    dist = [-1] * n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        du = dist[u]
        for i in range(off[u], off[u + 1]):
            w = nbr[i]
            if dist[w] < 0:
                dist[w] = du + 1
                q.append(w)
    return dist


def product_reach(step_a, step_b, deg, nv_a, nv_b, starts, max_depth):
    """Deepest common non-backtracking extension depth over given start pairs.

    States are (u, v, last directed letter); a common step uses the same
    letter in both graphs and never immediately undoes the previous letter.
    Returns min(max reachable depth, max_depth).
    """
    if max_depth <= 0 or not starts:
        return 0
    span = deg + 1
    seen = bytearray(nv_a * nv_b * span)
    frontier = []
    for k in range(0, len(starts), 2):
        u = starts[k]
        v = starts[k + 1]
        s = (u * nv_b + v) * span + deg
        if not seen[s]:
            seen[s] = 1
            frontier.append((u, v, deg))
    depth = 0
    while frontier and depth < max_depth:
        nxt = []
        for (u, v, last) in frontier:
            forbid = last ^ 1 if last != deg else -1
            ua = u * deg
            va = v * deg
            for d in range(deg):
                if d == forbid:
                    continue
                u2 = step_a[ua + d]
                if u2 < 0:
                    continue
                v2 = step_b[va + d]
                if v2 < 0:
                    continue
                s = (u2 * nv_b + v2) * span + d
                if not seen[s]:
                    seen[s] = 1
                    nxt.append((u2, v2, d))
        if not nxt:
            return depth
        depth += 1
        frontier = nxt
    return depth


def perm_eval(images, n, word):
    """Evaluate a word of directed letters as a point permutation (right action)."""
    cur = list(range(n))
    for d in word:
        base = d * n
        cur = [images[base + x] for x in cur]
    return cur


def words_first_non_identity(images, n, words, offs):
    """Index of the first word that does NOT map to the identity, or -1."""
    for w in range(len(offs) - 1):
        for x in range(n):
            y = x
            for k in range(offs[w], offs[w + 1]):
                y = images[words[k] * n + y]
            if y != x:
                break
        else:
            continue
        return w
    return -1


def words_first_identity(images, n, words, offs):
    """Index of the first word that DOES map to the identity, or -1."""
    for w in range(len(offs) - 1):
        for x in range(n):
            y = x
            for k in range(offs[w], offs[w + 1]):
                y = images[words[k] * n + y]
            if y != x:
                break
        else:
            return w
    return -1
