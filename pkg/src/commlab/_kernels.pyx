# cython: language_level=3
"""Compiled kernels: free-letter reduction, Artin substitution, permutation sets.

Byte-for-byte behavioural mirror of ``commlab._kernels_py``; see that module
for the data conventions. The dispatcher in ``commlab.kernels`` prefers this
module when it has been built.
"""

_IDENT256 = bytes(range(256))


# ---------------------------------------------------------------------------
# letter strings


def reduce_letters(letters):
    """Freely reduce a letter string, cancelling adjacent c, -c pairs."""
    cdef list out = []
    cdef long c
    for c in letters:
        if out and <long> out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def multiply_reduced(a, b):
    """Concatenate two reduced letter strings, cancelling at the seam."""
    cdef list out = list(a)
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t n = len(b)
    while out and i < n and <long> out[-1] == -(<long> b[i]):
        out.pop()
        i += 1
    out.extend(b[i:])
    return tuple(out)


def invert_reduced(a):
    """Inverse of a reduced letter string (reverse and flip signs)."""
    cdef Py_ssize_t n = len(a)
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = -(<long> a[n - 1 - i])
    return tuple(out)


# ---------------------------------------------------------------------------
# Artin action

cdef inline void _push(list stack, long c):
    if stack and <long> stack[-1] == -c:
        stack.pop()
    else:
        stack.append(c)


def artin_images(int strands, letters):
    """Images of the free generators x_1..x_n under a braid word.

    Same contract as the pure-Python version: letters +i / -i act left to
    right, images come back as freely reduced conjugates.
    """
    cdef list us = [[] for _ in range(strands)]
    cdef list ks = list(range(1, strands + 1))
    cdef list u, new
    cdef long lt, c, k
    cdef int i, ip, j
    for lt in letters:
        i = lt if lt > 0 else -lt
        ip = i + 1
        for j in range(strands):
            u = <list> us[j]
            new = []
            if lt > 0:
                # sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
                for c in u:
                    if c == i:
                        _push(new, i)
                        _push(new, ip)
                        _push(new, -i)
                    elif c == -i:
                        _push(new, i)
                        _push(new, -ip)
                        _push(new, -i)
                    elif c == ip:
                        _push(new, i)
                    elif c == -ip:
                        _push(new, -i)
                    else:
                        _push(new, c)
                k = <long> ks[j]
                if k == i:
                    _push(new, i)
                    ks[j] = ip
                elif k == ip:
                    ks[j] = i
            else:
                # sigma_i^{-1}: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
                for c in u:
                    if c == i:
                        _push(new, ip)
                    elif c == -i:
                        _push(new, -ip)
                    elif c == ip:
                        _push(new, -ip)
                        _push(new, i)
                        _push(new, ip)
                    elif c == -ip:
                        _push(new, -ip)
                        _push(new, -i)
                        _push(new, ip)
                    else:
                        _push(new, c)
                k = <long> ks[j]
                if k == i:
                    ks[j] = ip
                elif k == ip:
                    _push(new, -ip)
                    ks[j] = i
            us[j] = new
    cdef list out = []
    cdef list w
    cdef Py_ssize_t m
    for j in range(strands):
        u = <list> us[j]
        w = list(u)
        _push(w, <long> ks[j])
        m = len(u)
        while m > 0:
            m -= 1
            _push(w, -(<long> u[m]))
        out.append(tuple(w))
    return out


# ---------------------------------------------------------------------------
# permutation sets

def compose(p, q):
    """Apply p first, then q: result[i] = q[p[i]].

    Arguments stay untyped so ``bytes`` subclasses pass through, matching
    the pure-Python backend.
    """
    return p.translate(q + _IDENT256[len(q):])


def invert_perm(p):
    cdef Py_ssize_t n = len(p)
    cdef bytearray out = bytearray(n)
    cdef Py_ssize_t i
    for i in range(n):
        out[<Py_ssize_t> p[i]] = i
    return bytes(out)


def extend_subgroup(set elems, gens, new_gen, long cap):
    """Extend the subgroup ``<gens>`` (materialised in elems) by one generator.

    Dimino step: walks cosets of the base subgroup, filling each new coset in
    one pass. Returns the enlarged element set, or None when it would exceed
    ``cap`` elements.
    """
    if new_gen in elems:
        return elems
    cdef list base = list(elems)
    cdef set out = set(elems)
    cdef list tables = [g + _IDENT256[len(g):] for g in [*gens, new_gen]]
    cdef list queue = [new_gen]
    while queue:
        rep = queue.pop()
        if rep in out:
            continue
        rt = rep + _IDENT256[len(rep):]
        for b in base:
            out.add(b.translate(rt))
        if len(out) > cap:
            return None
        for t in tables:
            queue.append(rep.translate(t))
    return out


def closure_set(gens, int degree, long cap):
    """Element set of the subgroup generated by ``gens``, or None past cap."""
    elems = {_IDENT256[:degree]}
    cdef list done = []
    for g in gens:
        elems = extend_subgroup(elems, done, g, cap)
        if elems is None:
            return None
        done.append(g)
    return elems
