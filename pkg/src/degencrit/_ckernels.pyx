# cython: language_level=3
"""Compiled hot kernels: smallest-last degeneracy and canonical labelling.

Same contract and tie-breaking as ``_pykernels``.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

BACKEND = "cython"
CANON_MAXN = 16

DEF MAXN = 16


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


cdef class KernelGraph:
    """Colouring-number kernels over one fixed graph (CSR adjacency, any order)."""

    cdef int n
    cdef int *xadj
    cdef int *adjncy
    cdef int *deg
    cdef int *bins
    cdef int *pos
    cdef int *vert
    cdef char *alive

    def __cinit__(self, int n, adjacency):
        cdef int total = 0, i = 0, v
        for nbrs in adjacency:
            total += len(nbrs)
        self.n = n
        self.xadj = <int *> malloc((n + 1) * sizeof(int))
        self.adjncy = <int *> malloc((total + 1) * sizeof(int))
        self.deg = <int *> malloc((n + 1) * sizeof(int))
        self.bins = <int *> malloc((n + 2) * sizeof(int))
        self.pos = <int *> malloc((n + 1) * sizeof(int))
        self.vert = <int *> malloc((n + 1) * sizeof(int))
        self.alive = <char *> malloc((n + 1) * sizeof(char))
        if (self.xadj == NULL or self.adjncy == NULL or self.deg == NULL or self.bins == NULL
                or self.pos == NULL or self.vert == NULL or self.alive == NULL):
            raise MemoryError()
        for v in range(n):
            self.xadj[v] = i
            for w in adjacency[v]:
                self.adjncy[i] = w
                i += 1
        self.xadj[n] = i

    def __dealloc__(self):
        free(self.xadj)
        free(self.adjncy)
        free(self.deg)
        free(self.bins)
        free(self.pos)
        free(self.vert)
        free(self.alive)

    cdef int _degeneracy(self, int su, int sv) nogil:
        # Batagelj-Zaversnik bucket elimination over alive vertices, edge (su, sv) ignored.
        cdef int n = self.n
        cdef int *deg = self.deg
        cdef int *bins = self.bins
        cdef int *pos = self.pos
        cdef int *vert = self.vert
        cdef char *alive = self.alive
        cdef int v, u, j, d, md = 0, cnt = 0, start, num, best = -1
        cdef int du, pu, pw, w
        for v in range(n):
            if not alive[v]:
                continue
            cnt += 1
            d = 0
            for j in range(self.xadj[v], self.xadj[v + 1]):
                u = self.adjncy[j]
                if alive[u] and not ((v == su and u == sv) or (v == sv and u == su)):
                    d += 1
            deg[v] = d
            if d > md:
                md = d
        if cnt == 0:
            return -1
        for d in range(md + 1):
            bins[d] = 0
        for v in range(n):
            if alive[v]:
                bins[deg[v]] += 1
        start = 0
        for d in range(md + 1):
            num = bins[d]
            bins[d] = start
            start += num
        for v in range(n):
            if alive[v]:
                pos[v] = bins[deg[v]]
                vert[pos[v]] = v
                bins[deg[v]] += 1
        for d in range(md, 0, -1):
            bins[d] = bins[d - 1]
        bins[0] = 0
        for j in range(cnt):
            v = vert[j]
            if deg[v] > best:
                best = deg[v]
            alive[v] = 2
            for start in range(self.xadj[v], self.xadj[v + 1]):
                u = self.adjncy[start]
                if alive[u] != 1 or (v == su and u == sv) or (v == sv and u == su):
                    continue
                if deg[u] > deg[v]:
                    du = deg[u]
                    pu = pos[u]
                    pw = bins[du]
                    w = vert[pw]
                    if u != w:
                        pos[u] = pw
                        vert[pu] = w
                        pos[w] = pu
                        vert[pw] = u
                    bins[du] += 1
                    deg[u] -= 1
        for v in range(n):
            if alive[v] == 2:
                alive[v] = 1
        return best

    cdef void _all_alive(self):
        cdef int v
        for v in range(self.n):
            self.alive[v] = 1

    def colouring_number(self, removed=(), skip_edge=None):
        cdef int su = -1, sv = -1, r
        self._all_alive()
        for v in removed:
            self.alive[<int> v] = 0
        if skip_edge is not None:
            su, sv = skip_edge
        r = self._degeneracy(su, sv) + 1
        return r

    def vertex_deletion_cols(self):
        cdef int v
        out = []
        self._all_alive()
        for v in range(self.n):
            self.alive[v] = 0
            out.append(self._degeneracy(-1, -1) + 1)
            self.alive[v] = 1
        return out

    def edge_deletion_cols(self, edges):
        cdef int u, v
        out = []
        self._all_alive()
        for u, v in edges:
            out.append(self._degeneracy(u, v) + 1)
        return out

    def endpoint_deletion_cols(self, edges):
        cdef int u, v
        out = []
        self._all_alive()
        for u, v in edges:
            self.alive[u] = 0
            self.alive[v] = 0
            out.append(self._degeneracy(-1, -1) + 1)
            self.alive[u] = 1
            self.alive[v] = 1
        return out


cdef struct CanonState:
    int n
    uint64_t rows[MAXN]
    uint64_t best[MAXN]
    int bestlab[MAXN]
    int have


cdef int _refine(CanonState *st, int *lab, int *cstart, int ncells) nogil:
    # cstart has ncells + 1 entries; returns the new cell count.
    cdef int n = st.n
    cdef uint64_t cmask[MAXN]
    cdef int sig[MAXN][MAXN]
    cdef int newstart[MAXN + 1]
    cdef int k, i, j, a, b, v, x, newn, cmp, t
    while True:
        for k in range(ncells):
            cmask[k] = 0
            for i in range(cstart[k], cstart[k + 1]):
                cmask[k] |= (<uint64_t> 1) << lab[i]
        newn = 0
        for k in range(ncells):
            a = cstart[k]
            b = cstart[k + 1]
            newstart[newn] = a
            newn += 1
            if b - a == 1:
                continue
            for i in range(a, b):
                v = lab[i]
                for j in range(ncells):
                    sig[v][j] = popcount64(st.rows[v] & cmask[j])
            # insertion sort by (signature, vertex)
            for i in range(a + 1, b):
                x = lab[i]
                t = i - 1
                while t >= a:
                    cmp = 0
                    for j in range(ncells):
                        if sig[lab[t]][j] != sig[x][j]:
                            cmp = 1 if sig[lab[t]][j] > sig[x][j] else -1
                            break
                    if cmp == 0 and lab[t] > x:
                        cmp = 1
                    if cmp <= 0:
                        break
                    lab[t + 1] = lab[t]
                    t -= 1
                lab[t + 1] = x
            for i in range(a + 1, b):
                for j in range(ncells):
                    if sig[lab[i]][j] != sig[lab[i - 1]][j]:
                        newstart[newn] = i
                        newn += 1
                        break
        newstart[newn] = n
        if newn == ncells:
            return ncells
        for k in range(newn + 1):
            cstart[k] = newstart[k]
        ncells = newn


cdef void _search(CanonState *st, int *lab, int *cstart, int ncells) nogil:
    cdef int n = st.n
    cdef int t = -1, k, i, j, v, u, skip, better
    cdef int pos[MAXN]
    cdef uint64_t cert[MAXN]
    cdef uint64_t r, code
    cdef int lab2[MAXN]
    cdef int cstart2[MAXN + 1]
    cdef int tried[MAXN]
    cdef int ntried = 0, a, b, nc2
    for k in range(ncells):
        if cstart[k + 1] - cstart[k] > 1:
            t = k
            break
    if t < 0:
        for i in range(n):
            pos[lab[i]] = i
        better = 0
        for i in range(n):
            r = st.rows[lab[i]]
            code = 0
            while r:
                code |= (<uint64_t> 1) << pos[ctz64(r)]
                r &= r - 1
            cert[i] = code
        if not st.have:
            better = 1
        else:
            for i in range(n):
                if cert[i] != st.best[i]:
                    better = 1 if cert[i] > st.best[i] else 0
                    break
        if better:
            st.have = 1
            for i in range(n):
                st.best[i] = cert[i]
                st.bestlab[i] = lab[i]
        return
    a = cstart[t]
    b = cstart[t + 1]
    for i in range(a, b):
        v = lab[i]
        skip = 0
        for j in range(ntried):
            u = tried[j]
            if (st.rows[v] & ~((<uint64_t> 1) << u)) == (st.rows[u] & ~((<uint64_t> 1) << v)):
                skip = 1
                break
        if skip:
            continue
        tried[ntried] = v
        ntried += 1
        for j in range(a):
            lab2[j] = lab[j]
        lab2[a] = v
        k = a + 1
        for j in range(a, b):
            if lab[j] != v:
                lab2[k] = lab[j]
                k += 1
        for j in range(b, n):
            lab2[j] = lab[j]
        for j in range(t + 1):
            cstart2[j] = cstart[j]
        cstart2[t + 1] = a + 1
        for j in range(t + 1, ncells + 1):
            cstart2[j + 1] = cstart[j]
        nc2 = _refine(st, lab2, cstart2, ncells + 1)
        _search(st, lab2, cstart2, nc2)


def canonical_labelling(int n, rows, colours=None):
    """Return ``(certificate, order)``; see ``_pykernels.canonical_labelling``."""
    cdef CanonState st
    cdef int lab[MAXN]
    cdef int cstart[MAXN + 1]
    cdef int ncells, i, k
    if n > CANON_MAXN:
        raise ValueError(f"canonical labelling supports at most {CANON_MAXN} vertices, got {n}")
    if n == 0:
        return (), []
    st.n = n
    st.have = 0
    for i in range(n):
        st.rows[i] = rows[i]
    if colours is None:
        for i in range(n):
            lab[i] = i
        cstart[0] = 0
        cstart[1] = n
        ncells = 1
    else:
        k = 0
        ncells = 0
        for c in sorted(set(colours)):
            cstart[ncells] = k
            ncells += 1
            for i in range(n):
                if colours[i] == c:
                    lab[k] = i
                    k += 1
        cstart[ncells] = n
    with nogil:
        ncells = _refine(&st, lab, cstart, ncells)
        _search(&st, lab, cstart, ncells)
    return tuple([st.best[i] for i in range(n)]), [st.bestlab[i] for i in range(n)]
