"""Pure-Python kernels. Same contracts as the compiled ``_ckernels`` module."""

from collections import deque


def max_flow(offsets, head, rev, cap, source, sink):
    """Unit-augmenting BFS max flow on a residual network in CSR form.

    Arcs leaving node ``x`` are ``offsets[x]..offsets[x+1]-1``; ``head[a]`` is
    the arc's target, ``rev[a]`` its paired reverse arc. ``cap`` holds
    residual capacities and is updated in place. Returns the flow value.
    """
    off = list(offsets)
    hd = list(head)
    rv = list(rev)
    res = list(cap)
    nodes = len(off) - 1
    flow = 0
    while True:
        parent_arc = [-1] * nodes
        parent_arc[source] = -2
        queue = deque([source])
        found = False
        while queue and not found:
            x = queue.popleft()
            for a in range(off[x], off[x + 1]):
                if res[a] > 0:
                    y = hd[a]
                    if parent_arc[y] == -1:
                        parent_arc[y] = a
                        if y == sink:
                            found = True
                            break
                        queue.append(y)
        if not found:
            break
        y = sink
        while y != source:
            a = parent_arc[y]
            res[a] -= 1
            res[rv[a]] += 1
            y = hd[rv[a]]
        flow += 1
    for i, c in enumerate(res):
        cap[i] = c
    return flow


def farthest_first(r, k, first):
    """Farthest-first traversal on scalar values.

    Returns ``(centers, labels)``; ``labels[v]`` is the index into
    ``centers`` of the block holding ``v``. A center always owns itself;
    other ties go to the earlier center, farthest-vertex ties to lowest id.
    """
    vals = [float(x) for x in r]
    n = len(vals)
    c0 = vals[first]
    dist = [abs(x - c0) for x in vals]
    labels = [0] * n
    is_center = [False] * n
    is_center[first] = True
    dist[first] = 0.0
    centers = [first]
    while len(centers) < k:
        w = -1
        best = -1.0
        for v in range(n):
            if not is_center[v] and dist[v] > best:
                best = dist[v]
                w = v
        idx = len(centers)
        centers.append(w)
        is_center[w] = True
        labels[w] = idx
        dist[w] = 0.0
        cw = vals[w]
        for v in range(n):
            if not is_center[v]:
                d = abs(vals[v] - cw)
                if d < dist[v]:
                    dist[v] = d
                    labels[v] = idx
    return centers, labels


def greedy_block_count(sorted_r, diameter):
    """Blocks used by left-to-right greedy packing with range <= diameter."""
    vals = [float(x) for x in sorted_r]
    if not vals:
        return 0
    count = 1
    start = vals[0]
    for x in vals:
        if x - start > diameter:
            count += 1
            start = x
    return count
