"""Pure-Python search kernels; reference semantics for ``_kernels.pyx``.

Darts are integers ``0 .. n-1``. ``rev[d]`` is the opposite dart and the
rotation is stored as ``succ[d]``: the out-dart following ``d`` at its
tail. The face permutation is ``phi(d) = succ[rev[d]]``.
"""


def count_orbits(perm):
    """Number of cycles of a permutation given as a sequence."""
    n = len(perm)
    seen = bytearray(n)
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        d = s
        while not seen[d]:
            seen[d] = 1
            d = perm[d]
    return count


def face_count(succ, rev):
    """Faces of the rotation ``succ``: cycles of ``d -> succ[rev[d]]``."""
    n = len(succ)
    seen = bytearray(n)
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        d = s
        while not seen[d]:
            seen[d] = 1
            d = succ[rev[d]]
    return count


def bb_max_faces(
    order,
    opt_start,
    opt_count,
    opt_succ,
    out_offset,
    out_darts,
    rev,
    girth_bound,
    best_init,
    target,
    node_budget,
    best_succ,
):
    """Branch and bound for the rotation system with the most faces.

    Vertices are assigned in ``order``. The vertex at position ``i`` has
    ``opt_count[i]`` options stored from ``opt_succ[opt_start[i]]`` on, each
    a row giving the successor of every out-dart (in ``out_darts`` order).
    Faces close when the partial face permutation forms a cycle; a branch
    is cut once ``closed + min(open paths, open darts // L)`` cannot beat
    the incumbent. Returns ``(best, nodes, exhausted)``; an improvement is
    copied into ``best_succ``.
    """
    n = len(rev)
    other = list(range(n))  # partner endpoint of each open path end
    plen = [1] * n  # path length, valid at endpoints
    succ = [-1] * n
    depth_max = len(order)
    L = girth_bound
    best = best_init
    nodes = 0
    exhausted = False
    closed = 0
    closed_darts = 0
    assigned = 0

    def rec(i):
        nonlocal best, nodes, exhausted, closed, closed_darts, assigned
        if i == depth_max:
            if closed > best:
                best = closed
                best_succ[:] = succ
            return best >= target
        v = order[i]
        o0 = out_offset[v]
        deg = out_offset[v + 1] - o0
        row = opt_start[i]
        for _ in range(opt_count[i]):
            nodes += 1
            if nodes > node_budget:
                exhausted = True
                return True
            undo = []
            for j in range(deg):
                od = out_darts[o0 + j]
                s = opt_succ[row + j]
                succ[od] = s
                a = rev[od]
                if other[a] == s:
                    closed += 1
                    closed_darts += plen[a]
                    undo.append((-1, plen[a], 0, 0, 0, 0))
                else:
                    sa, eb = other[a], other[s]
                    undo.append((sa, other[sa], eb, other[eb], plen[sa], plen[eb]))
                    total = plen[a] + plen[s]
                    other[sa] = eb
                    other[eb] = sa
                    plen[sa] = total
                    plen[eb] = total
            assigned += deg
            future = (n - closed_darts) // L
            if n - assigned < future:
                future = n - assigned
            stop = closed + future > best and rec(i + 1)
            assigned -= deg
            for sa, x, eb, oeb, pl_s, pl_e in reversed(undo):
                if sa == -1:
                    closed -= 1
                    closed_darts -= x
                else:
                    other[eb] = oeb
                    other[sa] = x
                    plen[eb] = pl_e
                    plen[sa] = pl_s
            for j in range(deg):
                succ[out_darts[o0 + j]] = -1
            if stop:
                return True
            row += deg
        return False

    rec(0)
    return best, nodes, exhausted
