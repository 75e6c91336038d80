"""Pure-Python integer kernels.

Everything here works on flat integer matrices in simple-root coordinates,
so the hot loops never touch rationals.  The compiled extension module
mirrors these two functions exactly; outputs must be bit-identical between
the two backends.
"""

from __future__ import annotations

from array import array

from .errors import CapExceeded


def _mul_flat(a, b, l):
    # row-major (S a)(x) = S (a x); entries stay small integers
    return tuple(
        sum(a[r * l + m] * b[m * l + c] for m in range(l))
        for r in range(l)
        for c in range(l)
    )


def _levi_nonneg(mat, l, levi) -> bool:
    for m in levi:
        for r in range(l):
            if mat[r * l + m] < 0:
                return False
    return True


def coset_bfs(refl, rank, levi, cap):
    """Enumerate minimal coset representatives by breadth-first search.

    State matrices are w^{-1} acting on simple-root coordinates; a
    candidate survives iff the columns indexed by `levi` stay nonnegative,
    i.e. w^{-1} maps every Levi simple root to a positive root.  Children
    are w s_i, realized as S_i @ V on the inverse side.  Each level is
    committed in sorted flat-tuple order, which makes output (including
    discovery words) deterministic and backend-independent.

    Returns (lengths, parents, letters, vflat) with elements in BFS order.
    """
    l = rank
    ident = tuple(1 if r == c else 0 for r in range(l) for c in range(l))
    lengths = array("i", [0])
    parents = array("q", [-1])
    letters = array("i", [-1])
    store = [ident]
    visited = {ident}
    level = [0]
    count = 1
    depth = 0
    while level:
        depth += 1
        found = {}
        for idx in level:
            vm = store[idx]
            for i in range(l):
                nm = _mul_flat(refl[i], vm, l)
                if nm in visited or nm in found:
                    continue
                if not _levi_nonneg(nm, l, levi):
                    continue
                found[nm] = (idx, i)
        level = []
        for nm, (pidx, letter) in sorted(found.items()):
            count += 1
            if count > cap:
                raise CapExceeded(count, cap)
            visited.add(nm)
            store.append(nm)
            lengths.append(depth)
            parents.append(pidx)
            letters.append(letter)
            level.append(len(store) - 1)
    vflat = array("q")
    for nm in store:
        vflat.extend(nm)
    return lengths, parents, letters, vflat


def grade_cohomology(vflat, start, stop, rank, pos_flat, nroots, halfnorms, jcol, chk, den, nmax):
    """Bott cells for one length grade: accumulate h[p] over elements.

    For element t the pairing with a positive root of coordinate row a is
        (w delta + k lambda_j, alpha) = (h^T V_t) . a + (c k) a[jcol],
    an integer.  A zero pairing kills the summand; otherwise p counts the
    negative pairings and the summand contributes the Weyl dimension
    prod |pairing| / den, which must divide exactly.
    """
    l = rank
    h = [0] * (nmax + 1)
    for t in range(start, stop):
        base = t * l * l
        u = [0] * l
        for m in range(l):
            acc = 0
            for r in range(l):
                acc += halfnorms[r] * vflat[base + r * l + m]
            u[m] = acc
        p = 0
        num = 1
        singular = False
        for ri in range(nroots):
            rb = ri * l
            val = chk * pos_flat[rb + jcol]
            for m in range(l):
                val += u[m] * pos_flat[rb + m]
            if val == 0:
                singular = True
                break
            if val < 0:
                p += 1
                val = -val
            num *= val
        if singular:
            continue
        if p > nmax:
            raise RuntimeError("regularity index exceeds the fiber dimension")
        dim, rem = divmod(num, den)
        if rem:
            raise RuntimeError("Weyl dimension is not an integer")
        h[p] += dim
    return h
