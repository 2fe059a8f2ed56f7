"""Pure-Python kernels.

This is the reference implementation of every hot loop; the compiled
``_native`` module must return identical results (including canonical
labelings) for ``n <= 128``.  Rows are ``int`` bitsets of any width.
"""
from __future__ import annotations

M64 = (1 << 64) - 1
NORMAL = 1 << 30


def mix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
    return z ^ (z >> 31)


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# ----------------------------------------------------------------------
# Godsil-McKay 4-sets
# ----------------------------------------------------------------------
def gm_block(rows, n: int, c1: int) -> list[tuple[int, int, int, int]]:
    """All valid GM 4-sets whose smallest vertex is ``c1``, lexicographic."""
    out = []
    r1 = rows[c1]
    b1 = 1 << c1
    for c2 in range(c1 + 1, n):
        r2 = rows[c2]
        a12 = r1 >> c2 & 1
        x12 = r1 ^ r2
        o12 = r1 | r2
        n12 = r1 & r2
        b12 = b1 | 1 << c2
        for c3 in range(c2 + 1, n):
            r3 = rows[c3]
            a13 = r1 >> c3 & 1
            a23 = r2 >> c3 & 1
            d1 = a12 + a13
            d2 = a12 + a23
            d3 = a13 + a23
            # a fourth vertex adds at most one to each degree
            if max(d1, d2, d3) - min(d1, d2, d3) > 1:
                continue
            x123 = x12 ^ r3
            o123 = o12 | r3
            n123 = n12 & r3
            b123 = b12 | 1 << c3
            for c4 in range(c3 + 1, n):
                r4 = rows[c4]
                a14 = r1 >> c4 & 1
                a24 = r2 >> c4 & 1
                a34 = r3 >> c4 & 1
                e = d1 + a14
                if d2 + a24 != e or d3 + a34 != e or a14 + a24 + a34 != e:
                    continue
                outside = ~(b123 | 1 << c4)
                # every outside vertex sees an even number (0, 2, 4) of C
                if (x123 ^ r4) & outside:
                    continue
                if not ((o123 | r4) & ~(n123 & r4) & outside):
                    continue
                out.append((c1, c2, c3, c4))
    return out


# ----------------------------------------------------------------------
# Wang-Qiu-Hu pairs
# ----------------------------------------------------------------------
def wqh_block(rows, n: int, ell: int, x: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All valid WQH pairs whose smallest switched vertex is ``x``.

    ``x`` sees exactly one block ``Ca`` (a subset of its neighbourhood) and
    nothing of the other block ``Cb``.  Pairs are returned normalised with the
    globally smallest vertex in the first block.
    """
    full = (1 << n) - 1
    nx = rows[x]
    na = _bits(nx)
    nonn = full & ~nx & ~(1 << x)
    out = []
    ca: list[int] = []
    deg_a = [0] * ell

    def grow_a(start: int) -> None:
        m = len(ca)
        if m == ell:
            if max(deg_a) == min(deg_a):
                search_b(deg_a[0])
            return
        for i in range(start, len(na) - (ell - m) + 1):
            v = na[i]
            rv = rows[v]
            adj = [rv >> c & 1 for c in ca]
            d_new = sum(adj)
            for j in range(m):
                deg_a[j] += adj[j]
            deg_a[m] = d_new
            cur = deg_a[:m + 1]
            if max(cur) - min(cur) <= ell - (m + 1):
                ca.append(v)
                grow_a(i + 1)
                ca.pop()
            for j in range(m):
                deg_a[j] -= adj[j]
        deg_a[m] = 0

    def search_b(k1: int) -> None:
        amask = 0
        a_or = 0
        a_and = full
        for v in ca:
            amask |= 1 << v
            a_or |= rows[v]
            a_and &= rows[v]
        # vertices seeing none or all of Ca: the rows of Cb must agree there
        agree = (a_and | ~a_or) & full & ~amask
        acnt = [(rows[z] & amask).bit_count() for z in range(n)]
        cand = _bits(nonn)
        cb: list[int] = []
        deg_b = [0] * ell
        cross_a = [0] * ell

        def grow_b(start: int) -> None:
            p = len(cb)
            if p == ell:
                finish(amask, acnt, cb, k1)
                return
            m = ell + p + 1
            for i in range(start, len(cand) - (ell - p) + 1):
                y = cand[i]
                ry = rows[y]
                if p and acnt[y] != acnt[cb[0]]:
                    continue
                adj = [ry >> c & 1 for c in cb]
                d_new = sum(adj)
                if d_new > k1:
                    continue
                ok = True
                for j in range(p):
                    if deg_b[j] + adj[j] > k1:
                        ok = False
                        break
                if not ok:
                    continue
                degs = [deg_b[j] + adj[j] for j in range(p)] + [d_new]
                if max(degs) - min(degs) > 2 * ell - m:
                    continue
                cr = [ry >> c & 1 for c in ca]
                cross = [cross_a[j] + cr[j] for j in range(ell)]
                if max(cross) - min(cross) > 2 * ell - m:
                    continue
                if p:
                    first = rows[cb[0]]
                    dis = 0
                    for c in cb:
                        dis |= rows[c] ^ first
                    dis |= ry ^ first
                    pmask = 1 << y
                    for c in cb:
                        pmask |= 1 << c
                    dis &= agree & ~pmask
                    if dis:
                        # disagreements must be filled by later members of Cb
                        if dis.bit_count() > ell - p - 1 or dis & ~nonn or dis & ((2 << y) - 1):
                            continue
                for j in range(p):
                    deg_b[j] += adj[j]
                deg_b[p] = d_new
                saved = cross_a[:]
                cross_a[:] = cross
                cb.append(y)
                grow_b(i + 1)
                cb.pop()
                cross_a[:] = saved
                for j in range(p):
                    deg_b[j] -= adj[j]
                deg_b[p] = 0

        grow_b(0)

    def finish(amask: int, acnt, cb, k1: int) -> None:
        bmask = 0
        for v in cb:
            bmask |= 1 << v
        # cross regularity: every Cb vertex sees d of Ca, every Ca vertex d of Cb
        d = acnt[cb[0]]
        for c in cb:
            if acnt[c] != d:
                return
        for c in ca:
            if (rows[c] & bmask).bit_count() != d:
                return
        for c in cb:
            if (rows[c] & bmask).bit_count() != k1:
                return
        umask = amask | bmask
        rest = full & ~umask
        smin = n
        for z in _bits(rest):
            rz = rows[z]
            seen = rz & umask
            if seen == amask or seen == bmask:
                if z < smin:
                    smin = z
                continue
            if acnt[z] != (rz & bmask).bit_count():
                return
        if smin != x:
            return
        a = tuple(ca)
        b = tuple(cb)
        out.append((a, b) if a[0] < b[0] else (b, a))

    grow_a(0)
    return out


# ----------------------------------------------------------------------
# canonical labelling
# ----------------------------------------------------------------------
def vertex_invariant(rows, n: int) -> list[int]:
    """Sum over partners of a hash of (adjacent, |common|, edges inside common)."""
    inv = [0] * n
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            c = ru & rows[v]
            t = 0
            cc = c
            while cc:
                low = cc & -cc
                t += (rows[low.bit_length() - 1] & c).bit_count()
                cc ^= low
            code = (ru >> v & 1) << 40 | c.bit_count() << 20 | t >> 1
            hv = mix64(code)
            inv[u] = (inv[u] + hv) & M64
            inv[v] = (inv[v] + hv) & M64
    return inv


def _refine(rows, n, lab, cstart, csize, queue, ncells, h):
    inq = [False] * n
    for s in queue:
        inq[s] = True
    qi = 0
    while qi < len(queue) and ncells < n:
        w = queue[qi]
        qi += 1
        inq[w] = False
        wset = 0
        for p in range(w, w + csize[w]):
            wset |= 1 << lab[p]
        s = 0
        while s < n:
            sz = csize[s]
            if sz == 1:
                s += 1
                continue
            cells = lab[s:s + sz]
            cnt = [(rows[v] & wset).bit_count() for v in cells]
            lo = min(cnt)
            if lo == max(cnt):
                s += sz
                continue
            order = sorted(range(sz), key=cnt.__getitem__)
            lab[s:s + sz] = [cells[i] for i in order]
            scnt = [cnt[i] for i in order]
            h = mix64((h + (s << 16 | w)) & M64)
            frags = []
            fs = s
            for i in range(1, sz + 1):
                if i == sz or scnt[i] != scnt[i - 1]:
                    fsz = s + i - fs
                    frags.append((fs, fsz))
                    h = mix64((h + (scnt[i - 1] << 16 | fsz)) & M64)
                    csize[fs] = fsz
                    for p in range(fs, fs + fsz):
                        cstart[p] = fs
                    fs = s + i
            ncells += len(frags) - 1
            if inq[s]:
                for fs, _ in frags[1:]:
                    queue.append(fs)
                    inq[fs] = True
            else:
                big = 0
                for i in range(1, len(frags)):
                    if frags[i][1] > frags[big][1]:
                        big = i
                for i, (fs, _) in enumerate(frags):
                    if i != big:
                        queue.append(fs)
                        inq[fs] = True
            s += sz
    h = mix64((h + ncells) & M64)
    return h, ncells


class _Search:
    def __init__(self, rows, n):
        self.rows = rows
        self.n = n
        self.first_lab = None
        self.first_graph = None
        self.first_path = None
        self.first_trace = []
        self.best_lab = None
        self.best_graph = None
        self.best_path = None
        self.best_trace = []
        self.best_version = 0
        self.trace = []
        self.path = []
        self.parent = list(range(n))
        self.gens = []
        self.orbit_sizes = []

    # union-find with the minimum label as representative
    def find(self, v):
        parent = self.parent
        r = v
        while parent[r] != r:
            r = parent[r]
        while parent[v] != r:
            parent[v], v = r, parent[v]
        return r

    def add_gen(self, gamma):
        self.gens.append(gamma)
        for i in range(self.n):
            a = self.find(i)
            b = self.find(gamma[i])
            if a != b:
                if a < b:
                    self.parent[b] = a
                else:
                    self.parent[a] = b

    def leaf_graph(self, lab):
        n = self.n
        rows = self.rows
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        out = []
        for v in lab:
            r = 0
            rv = rows[v]
            while rv:
                low = rv & -rv
                r |= 1 << pos[low.bit_length() - 1]
                rv ^= low
            out.append(r)
        return tuple(out)

    def run(self):
        n = self.n
        inv = vertex_invariant(self.rows, n)
        lab = sorted(range(n), key=lambda v: (inv[v], v))
        cstart = [0] * n
        csize = [0] * n
        queue = []
        s = 0
        for i in range(1, n + 1):
            if i == n or inv[lab[i]] != inv[lab[i - 1]]:
                csize[s] = i - s
                for p in range(s, i):
                    cstart[p] = s
                queue.append(s)
                s = i
        ncells = len(queue)
        h, ncells = _refine(self.rows, n, lab, cstart, csize, queue, ncells, mix64(ncells))
        self.trace = [h]
        self.first_trace = [h]
        self.best_trace = [h]
        self.search(lab, cstart, csize, ncells, 0, True, 0)

    def search(self, lab, cstart, csize, ncells, level, first_eq, cmp):
        n = self.n
        if ncells == n:
            return self.leaf(lab, level, first_eq, cmp)
        on_first = self.first_lab is None
        # first smallest non-singleton cell
        ts, tsz = -1, n + 1
        s = 0
        while s < n:
            sz = csize[s]
            if 1 < sz < tsz:
                ts, tsz = s, sz
            s += sz
        cell = sorted(lab[ts:ts + tsz])
        for idx, v in enumerate(cell):
            if on_first and idx and self.find(v) != v:
                continue
            clab = lab[:]
            ccs = cstart[:]
            csz = csize[:]
            p = clab.index(v, ts, ts + tsz)
            clab[p], clab[ts] = clab[ts], clab[p]
            csz[ts] = 1
            csz[ts + 1] = tsz - 1
            for q in range(ts + 1, ts + tsz):
                ccs[q] = ts + 1
            hc, cn = _refine(self.rows, n, clab, ccs, csz, [ts], ncells + 1, mix64(ts))
            del self.trace[level + 1:]
            self.trace.append(hc)
            self.path.append(v)
            if self.first_lab is None:
                self.first_trace.append(hc)
                self.best_trace.append(hc)
                cfe, ccmp = True, 0
            else:
                cfe = first_eq and level + 1 < len(self.first_trace) and hc == self.first_trace[level + 1]
                if cmp:
                    ccmp = cmp
                elif level + 1 < len(self.best_trace):
                    bt = self.best_trace[level + 1]
                    ccmp = (hc > bt) - (hc < bt)
                else:
                    ccmp = 1
                if not cfe and ccmp < 0:
                    self.path.pop()
                    continue
            version = self.best_version
            ret = self.search(clab, ccs, csz, cn, level + 1, cfe, ccmp)
            self.path.pop()
            if self.best_version != version:
                cmp = 0
            if ret < level:
                return ret
        if on_first:
            root = self.find(cell[0])
            self.orbit_sizes.append(sum(1 for u in range(n) if self.find(u) == root))
        return NORMAL

    def leaf(self, lab, level, first_eq, cmp):
        g = self.leaf_graph(lab)
        if self.first_lab is None:
            self.first_lab = lab[:]
            self.first_graph = g
            self.first_path = self.path[:]
            self.best_lab = lab[:]
            self.best_graph = g
            self.best_path = self.path[:]
            self.best_version += 1
            return NORMAL
        if first_eq and level == len(self.first_trace) - 1 and g == self.first_graph:
            self.add_gen(_map(self.first_lab, lab, self.n))
            return _diverge(self.path, self.first_path)
        if cmp == 0:
            blev = len(self.best_trace) - 1
            cmp = (level > blev) - (level < blev)
            if cmp == 0:
                if g == self.best_graph:
                    self.add_gen(_map(self.best_lab, lab, self.n))
                    return _diverge(self.path, self.best_path)
                cmp = 1 if g > self.best_graph else -1
        if cmp > 0:
            self.best_lab = lab[:]
            self.best_graph = g
            self.best_path = self.path[:]
            self.best_trace = self.trace[:level + 1]
            self.best_version += 1
        return NORMAL


def _map(src, dst, n):
    gamma = [0] * n
    for a, b in zip(src, dst):
        gamma[a] = b
    return gamma


def _diverge(path, other):
    for i, (a, b) in enumerate(zip(path, other)):
        if a != b:
            return i
    return min(len(path), len(other))


def canon_label(rows, n: int):
    """Canonical labelling by individualisation-refinement.

    Returns ``(lab, orbit_sizes, generators)``: canonical vertex ``i`` is
    original vertex ``lab[i]``; the automorphism group order is the product of
    ``orbit_sizes``; ``generators`` are automorphisms as image lists.
    """
    if n <= 1:
        return list(range(n)), [], []
    s = _Search(list(rows), n)
    s.run()
    return s.best_lab, s.orbit_sizes, s.gens
