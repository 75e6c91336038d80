# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled integer kernels: coset BFS and graded Bott cells.

Exact mirror of flagcohom._kernels_py; the two backends must return
bit-identical results.  Matrix entries, pairings and Levi tests run on
int64; dimension products are accumulated as Python ints since they
overflow machine words quickly.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc, realloc
from cpython.bytes cimport PyBytes_FromStringAndSize

from array import array

from flagcohom.errors import CapExceeded


def coset_bfs(refl, int rank, levi, cap):
    """See _kernels_py.coset_bfs."""
    cdef int l = rank
    cdef int ll = l * l
    cdef Py_ssize_t nlevi = len(levi)
    cdef long long cap_ll = cap
    cdef int i, r, c, m, ok, depth
    cdef Py_ssize_t idx, t, count, capacity
    cdef int64_t acc
    cdef int64_t* S = NULL
    cdef int64_t* lv = NULL
    cdef int64_t* tmp = NULL
    cdef int64_t* buf = NULL
    cdef int64_t* base = NULL
    cdef int64_t* nbuf = NULL

    try:
        S = <int64_t*> malloc(<size_t> (l * ll) * sizeof(int64_t))
        lv = <int64_t*> malloc(<size_t> (nlevi if nlevi else 1) * sizeof(int64_t))
        tmp = <int64_t*> malloc(<size_t> ll * sizeof(int64_t))
        capacity = 1024
        buf = <int64_t*> malloc(<size_t> (capacity * ll) * sizeof(int64_t))
        if S == NULL or lv == NULL or tmp == NULL or buf == NULL:
            raise MemoryError()

        for i in range(l):
            row = refl[i]
            for r in range(ll):
                S[i * ll + r] = row[r]
        for t in range(nlevi):
            lv[t] = levi[t]

        for r in range(ll):
            buf[r] = 0
        for r in range(l):
            buf[r * l + r] = 1

        visited = set()
        visited.add(PyBytes_FromStringAndSize(<char*> buf, ll * 8))
        lengths = array("i", [0])
        parents = array("q", [-1])
        letters = array("i", [-1])
        level = [0]
        count = 1
        depth = 0
        while level:
            depth += 1
            staged = []
            staged_keys = set()
            for idx in level:
                base = buf + idx * ll
                for i in range(l):
                    for r in range(l):
                        for c in range(l):
                            acc = 0
                            for m in range(l):
                                acc += S[i * ll + r * l + m] * base[m * l + c]
                            tmp[r * l + c] = acc
                    bkey = PyBytes_FromStringAndSize(<char*> tmp, ll * 8)
                    if bkey in visited or bkey in staged_keys:
                        continue
                    ok = 1
                    for t in range(nlevi):
                        c = <int> lv[t]
                        for r in range(l):
                            if tmp[r * l + c] < 0:
                                ok = 0
                                break
                        if not ok:
                            break
                    if not ok:
                        continue
                    staged_keys.add(bkey)
                    staged.append(
                        (tuple([tmp[r] for r in range(ll)]), idx, i, bkey)
                    )
            staged.sort()
            level = []
            for tkey, pidx, letter, bkey in staged:
                count += 1
                if count > cap_ll:
                    raise CapExceeded(count, cap)
                if count > capacity:
                    capacity = capacity * 2
                    nbuf = <int64_t*> realloc(buf, <size_t> (capacity * ll) * sizeof(int64_t))
                    if nbuf == NULL:
                        raise MemoryError()
                    buf = nbuf
                base = buf + (count - 1) * ll
                for r in range(ll):
                    base[r] = tkey[r]
                visited.add(bkey)
                lengths.append(depth)
                parents.append(pidx)
                letters.append(letter)
                level.append(count - 1)
        vflat = array("q")
        vflat.frombytes(PyBytes_FromStringAndSize(<char*> buf, count * ll * 8))
        return lengths, parents, letters, vflat
    finally:
        free(S)
        free(lv)
        free(tmp)
        free(buf)


def grade_cohomology(vflat, Py_ssize_t start, Py_ssize_t stop, int rank, pos_flat,
                     int nroots, halfnorms, int jcol, chk, den, int nmax):
    """See _kernels_py.grade_cohomology.  Caller keeps |c*k| within int64."""
    cdef long long[::1] V = vflat
    cdef long long[::1] P = pos_flat
    cdef long long chk_c = chk
    cdef int l = rank
    cdef int64_t* u = NULL
    cdef int64_t* hn = NULL
    cdef Py_ssize_t t, base, rb
    cdef int m, r, ri, p
    cdef long long acc, val
    cdef bint singular

    h = [0] * (nmax + 1)
    try:
        u = <int64_t*> malloc(<size_t> l * sizeof(int64_t))
        hn = <int64_t*> malloc(<size_t> l * sizeof(int64_t))
        if u == NULL or hn == NULL:
            raise MemoryError()
        for m in range(l):
            hn[m] = halfnorms[m]
        for t in range(start, stop):
            base = t * l * l
            for m in range(l):
                acc = 0
                for r in range(l):
                    acc += hn[r] * V[base + r * l + m]
                u[m] = acc
            p = 0
            num = 1
            singular = False
            for ri in range(nroots):
                rb = ri * l
                val = chk_c * P[rb + jcol]
                for m in range(l):
                    val += u[m] * P[rb + m]
                if val == 0:
                    singular = True
                    break
                if val < 0:
                    p += 1
                    val = -val
                num = num * val
            if singular:
                continue
            if p > nmax:
                raise RuntimeError("regularity index exceeds the fiber dimension")
            dim, rem = divmod(num, den)
            if rem:
                raise RuntimeError("Weyl dimension is not an integer")
            h[p] = h[p] + dim
        return h
    finally:
        free(u)
        free(hn)
