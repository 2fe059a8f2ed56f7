# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels for graphs with at most 128 vertices.

Rows are two 64-bit words (low word first).  Every function mirrors the
corresponding one in ``_pure`` step for step, so the outputs are identical.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long x) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long x) nogil

cdef enum:
    W = 2
cdef int NORMAL = 1 << 30


cdef struct Set:
    uint64_t w0
    uint64_t w1


cdef inline Set s_make(uint64_t a, uint64_t b) noexcept nogil:
    cdef Set s
    s.w0 = a
    s.w1 = b
    return s


cdef inline Set s_bit(int v) noexcept nogil:
    if v < 64:
        return s_make((<uint64_t>1) << v, 0)
    return s_make(0, (<uint64_t>1) << (v - 64))


cdef inline Set s_full(int n) noexcept nogil:
    if n >= 128:
        return s_make(~(<uint64_t>0), ~(<uint64_t>0))
    if n >= 64:
        return s_make(~(<uint64_t>0), ((<uint64_t>1) << (n - 64)) - 1 if n > 64 else 0)
    return s_make(((<uint64_t>1) << n) - 1 if n > 0 else 0, 0)


cdef inline Set s_below(int v) noexcept nogil:
    # bits 0..v inclusive
    return s_full(v + 1)


cdef inline int s_has(Set s, int v) noexcept nogil:
    if v < 64:
        return <int>((s.w0 >> v) & 1)
    return <int>((s.w1 >> (v - 64)) & 1)


cdef inline Set s_and(Set a, Set b) noexcept nogil:
    return s_make(a.w0 & b.w0, a.w1 & b.w1)


cdef inline Set s_or(Set a, Set b) noexcept nogil:
    return s_make(a.w0 | b.w0, a.w1 | b.w1)


cdef inline Set s_xor(Set a, Set b) noexcept nogil:
    return s_make(a.w0 ^ b.w0, a.w1 ^ b.w1)


cdef inline Set s_andnot(Set a, Set b) noexcept nogil:
    return s_make(a.w0 & ~b.w0, a.w1 & ~b.w1)


cdef inline int s_any(Set a) noexcept nogil:
    return (a.w0 | a.w1) != 0


cdef inline int s_eq(Set a, Set b) noexcept nogil:
    return a.w0 == b.w0 and a.w1 == b.w1


cdef inline int s_count(Set a) noexcept nogil:
    return popcount64(a.w0) + popcount64(a.w1)


cdef inline int s_list(Set a, int *out) noexcept nogil:
    cdef int k = 0
    cdef uint64_t w = a.w0
    while w:
        out[k] = ctz64(w)
        k += 1
        w &= w - 1
    w = a.w1
    while w:
        out[k] = 64 + ctz64(w)
        k += 1
        w &= w - 1
    return k


cdef Set *load_rows(const unsigned long long[:] words, int n) except NULL:
    cdef Set *rows = <Set *>malloc((n + 1) * sizeof(Set))
    if rows == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        rows[i] = s_make(words[W * i], words[W * i + 1])
    return rows


def _check_n(int n):
    if n < 0 or n > 128:
        raise ValueError(f"native kernels handle at most 128 vertices, got {n}")


# ----------------------------------------------------------------------
# Godsil-McKay 4-sets
# ----------------------------------------------------------------------
def gm_block(const unsigned long long[:] words, int n, int c1):
    _check_n(n)
    cdef Set *rows = load_rows(words, n)
    cdef list out = []
    cdef int c2, c3, c4, a12, a13, a23, a14, a24, a34, d1, d2, d3, e, hi, lo
    cdef Set r1, r2, r3, r4, x12, o12, n12, x123, o123, n123, b1, b12, b123, outside, t
    try:
        r1 = rows[c1]
        b1 = s_bit(c1)
        for c2 in range(c1 + 1, n):
            r2 = rows[c2]
            a12 = s_has(r1, c2)
            x12 = s_xor(r1, r2)
            o12 = s_or(r1, r2)
            n12 = s_and(r1, r2)
            b12 = s_or(b1, s_bit(c2))
            for c3 in range(c2 + 1, n):
                r3 = rows[c3]
                a13 = s_has(r1, c3)
                a23 = s_has(r2, c3)
                d1 = a12 + a13
                d2 = a12 + a23
                d3 = a13 + a23
                hi = max(d1, max(d2, d3))
                lo = min(d1, min(d2, d3))
                if hi - lo > 1:
                    continue
                x123 = s_xor(x12, r3)
                o123 = s_or(o12, r3)
                n123 = s_and(n12, r3)
                b123 = s_or(b12, s_bit(c3))
                for c4 in range(c3 + 1, n):
                    r4 = rows[c4]
                    a14 = s_has(r1, c4)
                    a24 = s_has(r2, c4)
                    a34 = s_has(r3, c4)
                    e = d1 + a14
                    if d2 + a24 != e or d3 + a34 != e or a14 + a24 + a34 != e:
                        continue
                    outside = s_andnot(s_full(n), s_or(b123, s_bit(c4)))
                    if s_any(s_and(s_xor(x123, r4), outside)):
                        continue
                    t = s_andnot(s_or(o123, r4), s_and(n123, r4))
                    if not s_any(s_and(t, outside)):
                        continue
                    out.append((c1, c2, c3, c4))
    finally:
        free(rows)
    return out


# ----------------------------------------------------------------------
# Wang-Qiu-Hu pairs
# ----------------------------------------------------------------------
cdef class _Wqh:
    cdef Set *rows
    cdef int n, ell, x, nna, ncand, k1
    cdef Set full, nonn, amask, agree
    cdef int na[128]
    cdef int cand[128]
    cdef int ca[64]
    cdef int cb[64]
    cdef int deg_a[64]
    cdef int deg_b[64]
    cdef int cross_a[64]
    cdef int acnt[128]
    cdef int ma, mb
    cdef list out

    cdef void grow_a(self, int start):
        cdef int m = self.ma
        cdef int i, j, v, d_new, hi, lo
        cdef int adj[64]
        cdef Set rv
        if m == self.ell:
            hi = self.deg_a[0]
            lo = self.deg_a[0]
            for j in range(m):
                hi = max(hi, self.deg_a[j])
                lo = min(lo, self.deg_a[j])
            if hi == lo:
                self.search_b(self.deg_a[0])
            return
        for i in range(start, self.nna - (self.ell - m) + 1):
            v = self.na[i]
            rv = self.rows[v]
            d_new = 0
            for j in range(m):
                adj[j] = s_has(rv, self.ca[j])
                d_new += adj[j]
                self.deg_a[j] += adj[j]
            self.deg_a[m] = d_new
            hi = d_new
            lo = d_new
            for j in range(m):
                hi = max(hi, self.deg_a[j])
                lo = min(lo, self.deg_a[j])
            if hi - lo <= self.ell - (m + 1):
                self.ca[m] = v
                self.ma = m + 1
                self.grow_a(i + 1)
                self.ma = m
            for j in range(m):
                self.deg_a[j] -= adj[j]
        self.deg_a[m] = 0

    cdef void search_b(self, int k1):
        cdef Set a_or = s_make(0, 0)
        cdef Set a_and = self.full
        cdef Set amask = s_make(0, 0)
        cdef int j, z
        for j in range(self.ell):
            amask = s_or(amask, s_bit(self.ca[j]))
            a_or = s_or(a_or, self.rows[self.ca[j]])
            a_and = s_and(a_and, self.rows[self.ca[j]])
        self.amask = amask
        self.agree = s_andnot(s_and(s_or(a_and, s_andnot(self.full, a_or)), self.full), amask)
        for z in range(self.n):
            self.acnt[z] = s_count(s_and(self.rows[z], amask))
        self.ncand = s_list(self.nonn, self.cand)
        self.k1 = k1
        self.mb = 0
        for j in range(self.ell):
            self.deg_b[j] = 0
            self.cross_a[j] = 0
        self.grow_b(0)

    cdef void grow_b(self, int start):
        cdef int p = self.mb
        cdef int ell = self.ell
        cdef int k1 = self.k1
        cdef int m = ell + p + 1
        cdef int i, j, y, d_new, ok, hi, lo
        cdef int adj[64]
        cdef int cross[64]
        cdef int saved[64]
        cdef Set ry, first, dis, pmask
        if p == ell:
            self.finish()
            return
        for i in range(start, self.ncand - (ell - p) + 1):
            y = self.cand[i]
            ry = self.rows[y]
            if p and self.acnt[y] != self.acnt[self.cb[0]]:
                continue
            d_new = 0
            for j in range(p):
                adj[j] = s_has(ry, self.cb[j])
                d_new += adj[j]
            if d_new > k1:
                continue
            ok = 1
            for j in range(p):
                if self.deg_b[j] + adj[j] > k1:
                    ok = 0
                    break
            if not ok:
                continue
            hi = d_new
            lo = d_new
            for j in range(p):
                hi = max(hi, self.deg_b[j] + adj[j])
                lo = min(lo, self.deg_b[j] + adj[j])
            if hi - lo > 2 * ell - m:
                continue
            for j in range(ell):
                cross[j] = self.cross_a[j] + s_has(ry, self.ca[j])
            hi = cross[0]
            lo = cross[0]
            for j in range(ell):
                hi = max(hi, cross[j])
                lo = min(lo, cross[j])
            if hi - lo > 2 * ell - m:
                continue
            if p:
                first = self.rows[self.cb[0]]
                dis = s_make(0, 0)
                for j in range(p):
                    dis = s_or(dis, s_xor(self.rows[self.cb[j]], first))
                dis = s_or(dis, s_xor(ry, first))
                pmask = s_bit(y)
                for j in range(p):
                    pmask = s_or(pmask, s_bit(self.cb[j]))
                dis = s_andnot(s_and(dis, self.agree), pmask)
                if s_any(dis):
                    if (s_count(dis) > ell - p - 1 or s_any(s_andnot(dis, self.nonn))
                            or s_any(s_and(dis, s_below(y)))):
                        continue
            for j in range(p):
                self.deg_b[j] += adj[j]
            self.deg_b[p] = d_new
            for j in range(ell):
                saved[j] = self.cross_a[j]
                self.cross_a[j] = cross[j]
            self.cb[p] = y
            self.mb = p + 1
            self.grow_b(i + 1)
            self.mb = p
            for j in range(ell):
                self.cross_a[j] = saved[j]
            for j in range(p):
                self.deg_b[j] -= adj[j]
            self.deg_b[p] = 0

    cdef void finish(self):
        cdef int ell = self.ell
        cdef Set bmask = s_make(0, 0)
        cdef Set umask, rest, seen, rz
        cdef int j, d, z, k, smin
        cdef int buf[128]
        for j in range(ell):
            bmask = s_or(bmask, s_bit(self.cb[j]))
        d = self.acnt[self.cb[0]]
        for j in range(ell):
            if self.acnt[self.cb[j]] != d:
                return
        for j in range(ell):
            if s_count(s_and(self.rows[self.ca[j]], bmask)) != d:
                return
        for j in range(ell):
            if s_count(s_and(self.rows[self.cb[j]], bmask)) != self.k1:
                return
        umask = s_or(self.amask, bmask)
        rest = s_andnot(self.full, umask)
        k = s_list(rest, buf)
        smin = self.n
        for j in range(k):
            z = buf[j]
            rz = self.rows[z]
            seen = s_and(rz, umask)
            if s_eq(seen, self.amask) or s_eq(seen, bmask):
                if z < smin:
                    smin = z
                continue
            if self.acnt[z] != s_count(s_and(rz, bmask)):
                return
        if smin != self.x:
            return
        a = tuple([self.ca[j] for j in range(ell)])
        b = tuple([self.cb[j] for j in range(ell)])
        self.out.append((a, b) if a[0] < b[0] else (b, a))


def wqh_block(const unsigned long long[:] words, int n, int ell, int x):
    _check_n(n)
    if ell < 1 or ell > 64:
        raise ValueError("block size out of range")
    cdef _Wqh st = _Wqh()
    st.rows = load_rows(words, n)
    try:
        st.n = n
        st.ell = ell
        st.x = x
        st.out = []
        st.full = s_full(n)
        st.nna = s_list(st.rows[x], st.na)
        st.nonn = s_andnot(s_andnot(st.full, st.rows[x]), s_bit(x))
        st.ma = 0
        memset(st.deg_a, 0, sizeof(st.deg_a))
        st.grow_a(0)
        return st.out
    finally:
        free(st.rows)


# ----------------------------------------------------------------------
# canonical labelling
# ----------------------------------------------------------------------
cdef inline uint64_t mix64(uint64_t x) noexcept nogil:
    cdef uint64_t z = x + <uint64_t>0x9E3779B97F4A7C15
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline int row_cmp(Set a, Set b) noexcept nogil:
    if a.w1 != b.w1:
        return 1 if a.w1 > b.w1 else -1
    if a.w0 != b.w0:
        return 1 if a.w0 > b.w0 else -1
    return 0


cdef class _Canon:
    cdef Set *rows
    cdef int n
    # per-level partition state, level L lives at offset L*n
    cdef int *lab
    cdef int *cstart
    cdef int *csize
    cdef int *cellbuf
    cdef int *queue
    cdef char *inq
    cdef int *cnt
    cdef int *tmp
    cdef int *parent
    cdef int *path
    cdef int *first_path
    cdef int *best_path
    cdef int *first_lab
    cdef int *best_lab
    cdef Set *first_graph
    cdef Set *best_graph
    cdef Set *leafg
    cdef uint64_t *trace
    cdef uint64_t *first_trace
    cdef uint64_t *best_trace
    cdef int path_len, first_path_len, best_path_len, first_len, best_len
    cdef int have_first, best_version
    cdef list gens
    cdef list orbit_sizes

    def __cinit__(self, int n):
        self.n = n
        nn = (n + 2) * n
        self.lab = <int *>malloc(nn * sizeof(int))
        self.cstart = <int *>malloc(nn * sizeof(int))
        self.csize = <int *>malloc(nn * sizeof(int))
        self.cellbuf = <int *>malloc(nn * sizeof(int))
        self.queue = <int *>malloc((2 * n + 4) * sizeof(int))
        self.inq = <char *>malloc(n + 1)
        self.cnt = <int *>malloc((n + 1) * sizeof(int))
        self.tmp = <int *>malloc((n + 1) * sizeof(int))
        self.parent = <int *>malloc((n + 1) * sizeof(int))
        self.path = <int *>malloc((n + 1) * sizeof(int))
        self.first_path = <int *>malloc((n + 1) * sizeof(int))
        self.best_path = <int *>malloc((n + 1) * sizeof(int))
        self.first_lab = <int *>malloc((n + 1) * sizeof(int))
        self.best_lab = <int *>malloc((n + 1) * sizeof(int))
        self.first_graph = <Set *>malloc((n + 1) * sizeof(Set))
        self.best_graph = <Set *>malloc((n + 1) * sizeof(Set))
        self.leafg = <Set *>malloc((n + 1) * sizeof(Set))
        self.trace = <uint64_t *>malloc((n + 2) * sizeof(uint64_t))
        self.first_trace = <uint64_t *>malloc((n + 2) * sizeof(uint64_t))
        self.best_trace = <uint64_t *>malloc((n + 2) * sizeof(uint64_t))
        self.rows = NULL
        if (self.lab == NULL or self.cstart == NULL or self.csize == NULL or self.cellbuf == NULL
                or self.queue == NULL or self.inq == NULL or self.cnt == NULL or self.tmp == NULL
                or self.parent == NULL or self.path == NULL or self.first_path == NULL
                or self.best_path == NULL or self.first_lab == NULL or self.best_lab == NULL
                or self.first_graph == NULL or self.best_graph == NULL or self.leafg == NULL
                or self.trace == NULL or self.first_trace == NULL or self.best_trace == NULL):
            raise MemoryError()
        self.gens = []
        self.orbit_sizes = []

    def __dealloc__(self):
        free(self.lab); free(self.cstart); free(self.csize); free(self.cellbuf)
        free(self.queue); free(self.inq); free(self.cnt); free(self.tmp)
        free(self.parent); free(self.path); free(self.first_path); free(self.best_path)
        free(self.first_lab); free(self.best_lab)
        free(self.first_graph); free(self.best_graph); free(self.leafg)
        free(self.trace); free(self.first_trace); free(self.best_trace)
        free(self.rows)

    cdef int find(self, int v):
        cdef int r = v
        cdef int nxt
        while self.parent[r] != r:
            r = self.parent[r]
        while self.parent[v] != r:
            nxt = self.parent[v]
            self.parent[v] = r
            v = nxt
        return r

    cdef void add_gen(self, int *src, int *dst):
        cdef int n = self.n
        cdef int i, a, b
        cdef list gamma = [0] * n
        for i in range(n):
            gamma[src[i]] = dst[i]
        self.gens.append(gamma)
        for i in range(n):
            a = self.find(i)
            b = self.find(<int>gamma[i])
            if a != b:
                if a < b:
                    self.parent[b] = a
                else:
                    self.parent[a] = b

    cdef void leaf_graph(self, int *lab, Set *out):
        cdef int n = self.n
        cdef int i, k, j
        cdef int *pos = self.tmp
        cdef int buf[128]
        cdef Set r
        for i in range(n):
            pos[lab[i]] = i
        for i in range(n):
            r = s_make(0, 0)
            k = s_list(self.rows[lab[i]], buf)
            for j in range(k):
                r = s_or(r, s_bit(pos[buf[j]]))
            out[i] = r

    cdef uint64_t refine(self, int *lab, int *cstart, int *csize, int qlen, int *ncells_io, uint64_t h):
        cdef int n = self.n
        cdef int *queue = self.queue
        cdef char *inq = self.inq
        cdef int *cnt = self.cnt
        cdef int qi = 0
        cdef int ncells = ncells_io[0]
        cdef int w, p, s, sz, i, j, lo, hi, key, v, fs, fsz, nfr, big, bigsz, first_fs
        cdef Set wset
        cdef int fstarts[128]
        cdef int fsizes[128]
        memset(inq, 0, n)
        for i in range(qlen):
            inq[queue[i]] = 1
        while qi < qlen and ncells < n:
            w = queue[qi]
            qi += 1
            inq[w] = 0
            wset = s_make(0, 0)
            for p in range(w, w + csize[w]):
                wset = s_or(wset, s_bit(lab[p]))
            s = 0
            while s < n:
                sz = csize[s]
                if sz == 1:
                    s += 1
                    continue
                lo = n + 1
                hi = -1
                for i in range(sz):
                    cnt[i] = s_count(s_and(self.rows[lab[s + i]], wset))
                    lo = min(lo, cnt[i])
                    hi = max(hi, cnt[i])
                if lo == hi:
                    s += sz
                    continue
                # stable insertion sort of the cell by count
                for i in range(1, sz):
                    key = cnt[i]
                    v = lab[s + i]
                    j = i - 1
                    while j >= 0 and cnt[j] > key:
                        cnt[j + 1] = cnt[j]
                        lab[s + j + 1] = lab[s + j]
                        j -= 1
                    cnt[j + 1] = key
                    lab[s + j + 1] = v
                h = mix64(h + ((<uint64_t>s << 16) | <uint64_t>w))
                nfr = 0
                fs = s
                for i in range(1, sz + 1):
                    if i == sz or cnt[i] != cnt[i - 1]:
                        fsz = s + i - fs
                        fstarts[nfr] = fs
                        fsizes[nfr] = fsz
                        nfr += 1
                        h = mix64(h + ((<uint64_t>cnt[i - 1] << 16) | <uint64_t>fsz))
                        csize[fs] = fsz
                        for p in range(fs, fs + fsz):
                            cstart[p] = fs
                        fs = s + i
                ncells += nfr - 1
                if inq[s]:
                    for i in range(1, nfr):
                        queue[qlen] = fstarts[i]
                        qlen += 1
                        inq[fstarts[i]] = 1
                else:
                    big = 0
                    for i in range(1, nfr):
                        if fsizes[i] > fsizes[big]:
                            big = i
                    for i in range(nfr):
                        if i != big:
                            queue[qlen] = fstarts[i]
                            qlen += 1
                            inq[fstarts[i]] = 1
                s += sz
        h = mix64(h + <uint64_t>ncells)
        ncells_io[0] = ncells
        return h

    cdef void run(self):
        cdef int n = self.n
        cdef int i, s, u, v, k, t, j, ncells
        cdef uint64_t code, hv
        cdef Set c
        cdef int buf[128]
        cdef uint64_t *inv = <uint64_t *>malloc(n * sizeof(uint64_t))
        cdef int *lab = self.lab
        for i in range(n):
            inv[i] = 0
            self.parent[i] = i
        for u in range(n):
            for v in range(u + 1, n):
                c = s_and(self.rows[u], self.rows[v])
                t = 0
                k = s_list(c, buf)
                for j in range(k):
                    t += s_count(s_and(self.rows[buf[j]], c))
                code = ((<uint64_t>s_has(self.rows[u], v)) << 40) | ((<uint64_t>k) << 20) | <uint64_t>(t >> 1)
                hv = mix64(code)
                inv[u] += hv
                inv[v] += hv
        # insertion sort by (inv, v)
        for i in range(n):
            lab[i] = i
        for i in range(1, n):
            v = lab[i]
            j = i - 1
            while j >= 0 and inv[lab[j]] > inv[v]:
                lab[j + 1] = lab[j]
                j -= 1
            lab[j + 1] = v
        cdef int qlen = 0
        s = 0
        for i in range(1, n + 1):
            if i == n or inv[lab[i]] != inv[lab[i - 1]]:
                self.csize[s] = i - s
                for j in range(s, i):
                    self.cstart[j] = s
                self.queue[qlen] = s
                qlen += 1
                s = i
        free(inv)
        ncells = qlen
        cdef uint64_t h = self.refine(lab, self.cstart, self.csize, qlen, &ncells, mix64(<uint64_t>ncells))
        self.trace[0] = h
        self.first_trace[0] = h
        self.best_trace[0] = h
        self.first_len = 1
        self.best_len = 1
        self.path_len = 0
        self.have_first = 0
        self.best_version = 0
        self.search(0, ncells, 1, 0)

    cdef int search(self, int level, int ncells, int first_eq, int cmp):
        cdef int n = self.n
        if ncells == n:
            return self.leaf(level, first_eq, cmp)
        cdef int on_first = not self.have_first
        cdef int *lab = self.lab + level * n
        cdef int *cstart = self.cstart + level * n
        cdef int *csize = self.csize + level * n
        cdef int *cell = self.cellbuf + level * n
        cdef int *clab = self.lab + (level + 1) * n
        cdef int *ccs = self.cstart + (level + 1) * n
        cdef int *csz = self.csize + (level + 1) * n
        cdef int ts = -1
        cdef int tsz = n + 1
        cdef int s = 0
        cdef int sz, i, j, idx, v, p, q, cn, cfe, ccmp, version, ret, root, cntorb
        cdef uint64_t hc, bt
        while s < n:
            sz = csize[s]
            if 1 < sz < tsz:
                ts = s
                tsz = sz
            s += sz
        for i in range(tsz):
            cell[i] = lab[ts + i]
        for i in range(1, tsz):
            v = cell[i]
            j = i - 1
            while j >= 0 and cell[j] > v:
                cell[j + 1] = cell[j]
                j -= 1
            cell[j + 1] = v
        for idx in range(tsz):
            v = cell[idx]
            if on_first and idx and self.find(v) != v:
                continue
            memcpy(clab, lab, n * sizeof(int))
            memcpy(ccs, cstart, n * sizeof(int))
            memcpy(csz, csize, n * sizeof(int))
            p = ts
            while clab[p] != v:
                p += 1
            clab[p] = clab[ts]
            clab[ts] = v
            csz[ts] = 1
            csz[ts + 1] = tsz - 1
            for q in range(ts + 1, ts + tsz):
                ccs[q] = ts + 1
            cn = ncells + 1
            self.queue[0] = ts
            hc = self.refine(clab, ccs, csz, 1, &cn, mix64(<uint64_t>ts))
            self.trace[level + 1] = hc
            self.path[self.path_len] = v
            self.path_len += 1
            if not self.have_first:
                self.first_trace[self.first_len] = hc
                self.first_len += 1
                self.best_trace[self.best_len] = hc
                self.best_len += 1
                cfe = 1
                ccmp = 0
            else:
                cfe = first_eq and level + 1 < self.first_len and hc == self.first_trace[level + 1]
                if cmp:
                    ccmp = cmp
                elif level + 1 < self.best_len:
                    bt = self.best_trace[level + 1]
                    ccmp = (hc > bt) - (hc < bt)
                else:
                    ccmp = 1
                if not cfe and ccmp < 0:
                    self.path_len -= 1
                    continue
            version = self.best_version
            ret = self.search(level + 1, cn, cfe, ccmp)
            self.path_len -= 1
            if self.best_version != version:
                cmp = 0
            if ret < level:
                return ret
        if on_first:
            root = self.find(cell[0])
            cntorb = 0
            for i in range(n):
                if self.find(i) == root:
                    cntorb += 1
            self.orbit_sizes.append(cntorb)
        return NORMAL

    cdef int diverge(self, int *other, int olen):
        cdef int i
        cdef int m = min(self.path_len, olen)
        for i in range(m):
            if self.path[i] != other[i]:
                return i
        return m

    cdef int graph_cmp(self, Set *a, Set *b):
        cdef int i, c
        for i in range(self.n):
            c = row_cmp(a[i], b[i])
            if c:
                return c
        return 0

    cdef int leaf(self, int level, int first_eq, int cmp):
        cdef int n = self.n
        cdef int *lab = self.lab + level * n
        cdef int blev, c
        self.leaf_graph(lab, self.leafg)
        if not self.have_first:
            self.have_first = 1
            memcpy(self.first_lab, lab, n * sizeof(int))
            memcpy(self.best_lab, lab, n * sizeof(int))
            memcpy(self.first_graph, self.leafg, n * sizeof(Set))
            memcpy(self.best_graph, self.leafg, n * sizeof(Set))
            memcpy(self.first_path, self.path, self.path_len * sizeof(int))
            memcpy(self.best_path, self.path, self.path_len * sizeof(int))
            self.first_path_len = self.path_len
            self.best_path_len = self.path_len
            self.best_version += 1
            return NORMAL
        if first_eq and level == self.first_len - 1 and self.graph_cmp(self.leafg, self.first_graph) == 0:
            self.add_gen(self.first_lab, lab)
            return self.diverge(self.first_path, self.first_path_len)
        if cmp == 0:
            blev = self.best_len - 1
            cmp = (level > blev) - (level < blev)
            if cmp == 0:
                c = self.graph_cmp(self.leafg, self.best_graph)
                if c == 0:
                    self.add_gen(self.best_lab, lab)
                    return self.diverge(self.best_path, self.best_path_len)
                cmp = c
        if cmp > 0:
            memcpy(self.best_lab, lab, n * sizeof(int))
            memcpy(self.best_graph, self.leafg, n * sizeof(Set))
            memcpy(self.best_path, self.path, self.path_len * sizeof(int))
            self.best_path_len = self.path_len
            memcpy(self.best_trace, self.trace, (level + 1) * sizeof(uint64_t))
            self.best_len = level + 1
            self.best_version += 1
        return NORMAL


def canon_label(const unsigned long long[:] words, int n):
    _check_n(n)
    if n <= 1:
        return list(range(n)), [], []
    cdef _Canon st = _Canon(n)
    st.rows = load_rows(words, n)
    st.run()
    return [st.best_lab[i] for i in range(n)], st.orbit_sizes, st.gens
