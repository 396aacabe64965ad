# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels. Semantics match ``_kernels_py``."""

from libc.stdlib cimport malloc, free


def count_orbits(perm):
    cdef Py_ssize_t n = len(perm), s, d
    cdef long[:] p = _as_long(perm)
    cdef unsigned char *seen = <unsigned char *> malloc(n + 1)
    cdef long count = 0
    for s in range(n):
        seen[s] = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        d = s
        while not seen[d]:
            seen[d] = 1
            d = p[d]
    free(seen)
    return count


def face_count(succ, rev):
    cdef long[:] sc = _as_long(succ)
    cdef long[:] rv = _as_long(rev)
    cdef Py_ssize_t n = sc.shape[0], s, d
    cdef unsigned char *seen = <unsigned char *> malloc(n + 1)
    cdef long count = 0
    for s in range(n):
        seen[s] = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        d = s
        while not seen[d]:
            seen[d] = 1
            d = sc[rv[d]]
    free(seen)
    return count


cdef long[:] _as_long(seq):
    import array
    return array.array("l", seq)


cdef struct State:
    long n
    long depth_max
    long L
    long best
    long target
    long nodes
    long node_budget
    long exhausted
    long closed
    long closed_darts
    long assigned
    long *other
    long *plen
    long *succ
    long *best_succ
    long *order
    long *opt_start
    long *opt_count
    long *opt_succ
    long *out_offset
    long *out_darts
    long *rev
    long *undo  # 6 slots per dart assignment, stacked by depth


cdef bint _rec(State *st, long i, long undo_top):
    cdef long v, o0, deg, row, k, j, od, s, a, sa, eb, total, future
    cdef long *u
    cdef bint stop
    if i == st.depth_max:
        if st.closed > st.best:
            st.best = st.closed
            for j in range(st.n):
                st.best_succ[j] = st.succ[j]
        return st.best >= st.target
    v = st.order[i]
    o0 = st.out_offset[v]
    deg = st.out_offset[v + 1] - o0
    row = st.opt_start[i]
    for k in range(st.opt_count[i]):
        st.nodes += 1
        if st.nodes > st.node_budget:
            st.exhausted = 1
            return True
        u = st.undo + 6 * undo_top
        for j in range(deg):
            od = st.out_darts[o0 + j]
            s = st.opt_succ[row + j]
            st.succ[od] = s
            a = st.rev[od]
            if st.other[a] == s:
                st.closed += 1
                st.closed_darts += st.plen[a]
                u[6 * j] = -1
                u[6 * j + 1] = st.plen[a]
            else:
                sa = st.other[a]
                eb = st.other[s]
                u[6 * j] = sa
                u[6 * j + 1] = st.other[sa]
                u[6 * j + 2] = eb
                u[6 * j + 3] = st.other[eb]
                u[6 * j + 4] = st.plen[sa]
                u[6 * j + 5] = st.plen[eb]
                total = st.plen[a] + st.plen[s]
                st.other[sa] = eb
                st.other[eb] = sa
                st.plen[sa] = total
                st.plen[eb] = total
        st.assigned += deg
        future = (st.n - st.closed_darts) // st.L
        if st.n - st.assigned < future:
            future = st.n - st.assigned
        stop = False
        if st.closed + future > st.best:
            stop = _rec(st, i + 1, undo_top + deg)
        st.assigned -= deg
        for j in range(deg - 1, -1, -1):
            if u[6 * j] == -1:
                st.closed -= 1
                st.closed_darts -= u[6 * j + 1]
            else:
                sa = u[6 * j]
                eb = u[6 * j + 2]
                st.other[eb] = u[6 * j + 3]
                st.other[sa] = u[6 * j + 1]
                st.plen[eb] = u[6 * j + 5]
                st.plen[sa] = u[6 * j + 4]
        for j in range(deg):
            st.succ[st.out_darts[o0 + j]] = -1
        if stop:
            return True
        row += deg
    return False


def bb_max_faces(
    order,
    opt_start,
    opt_count,
    opt_succ,
    out_offset,
    out_darts,
    rev,
    long girth_bound,
    long best_init,
    long target,
    long node_budget,
    best_succ,
):
    cdef long[:] m_order = _as_long(order)
    cdef long[:] m_start = _as_long(opt_start)
    cdef long[:] m_count = _as_long(opt_count)
    cdef long[:] m_opt = _as_long(opt_succ)
    cdef long[:] m_ooff = _as_long(out_offset)
    cdef long[:] m_odarts = _as_long(out_darts)
    cdef long[:] m_rev = _as_long(rev)
    cdef long n = m_rev.shape[0], j
    cdef State st
    st.n = n
    st.depth_max = m_order.shape[0]
    st.L = girth_bound
    st.best = best_init
    st.target = target
    st.nodes = 0
    st.node_budget = node_budget
    st.exhausted = 0
    st.closed = 0
    st.closed_darts = 0
    st.assigned = 0
    st.other = <long *> malloc((n + 1) * sizeof(long))
    st.plen = <long *> malloc((n + 1) * sizeof(long))
    st.succ = <long *> malloc((n + 1) * sizeof(long))
    st.best_succ = <long *> malloc((n + 1) * sizeof(long))
    st.undo = <long *> malloc((6 * n + 6) * sizeof(long))
    for j in range(n):
        st.other[j] = j
        st.plen[j] = 1
        st.succ[j] = -1
        st.best_succ[j] = -1
    st.order = &m_order[0] if m_order.shape[0] else NULL
    st.opt_start = &m_start[0] if m_start.shape[0] else NULL
    st.opt_count = &m_count[0] if m_count.shape[0] else NULL
    st.opt_succ = &m_opt[0] if m_opt.shape[0] else NULL
    st.out_offset = &m_ooff[0]
    st.out_darts = &m_odarts[0] if m_odarts.shape[0] else NULL
    st.rev = &m_rev[0] if n else NULL
    try:
        _rec(&st, 0, 0)
        if st.best > best_init:
            for j in range(n):
                best_succ[j] = st.best_succ[j]
        return st.best, st.nodes, bool(st.exhausted)
    finally:
        free(st.other)
        free(st.plen)
        free(st.succ)
        free(st.best_succ)
        free(st.undo)
