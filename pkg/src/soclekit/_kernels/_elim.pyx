# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fraction-free row echelon kernel.

Behavioural twin of ``elim_py.fraction_free_ref``.  Elimination runs in
pure C with 128-bit intermediates while every value fits in 64 bits;
Bareiss intermediates are minors of the input and can outgrow that, in
which case the state is handed to the arbitrary-precision object path
mid-stream and the result is identical.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cdef extern from *:
    ctypedef long long int128 "__int128_t"

cdef long long I64_MAX = 9223372036854775807
cdef long long I64_MIN = -9223372036854775807 - 1


cdef list _ref_object(
    list rows, Py_ssize_t ncols, Py_ssize_t r, Py_ssize_t start_c, object prev, list pivots
):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t c, i, j, piv_row
    cdef list row_r, row_i
    cdef object piv, x, v
    for c in range(start_c, ncols):
        if r == nrows:
            break
        piv_row = -1
        for i in range(r, nrows):
            if (<list>rows[i])[c] != 0:
                piv_row = i
                break
        if piv_row < 0:
            continue
        if piv_row != r:
            rows[r], rows[piv_row] = rows[piv_row], rows[r]
        row_r = <list>rows[r]
        piv = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list>rows[i]
            x = row_i[c]
            if x == 0:
                if piv != prev:
                    for j in range(c + 1, ncols):
                        v = row_i[j]
                        if v != 0:
                            row_i[j] = piv * v // prev
            else:
                for j in range(c + 1, ncols):
                    row_i[j] = (piv * row_i[j] - x * row_r[j]) // prev
                row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def fraction_free_ref(list rows, Py_ssize_t ncols):
    """In-place Bareiss elimination; returns pivot column indices."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return []
    cdef long long *m = <long long *> malloc(2 * nrows * ncols * sizeof(long long))
    if m == NULL:
        return _ref_object(rows, ncols, 0, 0, 1, [])
    cdef long long *snap = m + nrows * ncols
    cdef Py_ssize_t r = 0, c = 0, i, j, piv_row
    cdef long long piv, prev, x
    cdef int128 prod, q
    cdef bint overflow = False, fits = True
    cdef list pivots = []
    cdef object v, row
    try:
        for i in range(nrows):
            row = <list>rows[i]
            for j in range(ncols):
                v = row[j]
                try:
                    m[i * ncols + j] = <long long?>v
                except OverflowError:
                    fits = False
                    break
            if not fits:
                break
        if not fits:
            return _ref_object(rows, ncols, 0, 0, 1, [])
        prev = 1
        c = 0
        while c < ncols:
            if r == nrows:
                break
            piv_row = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    piv_row = i
                    break
            if piv_row < 0:
                c += 1
                continue
            # snapshot the pre-step state so an overflow can restart the
            # step cleanly in exact object arithmetic
            memcpy(snap, m, nrows * ncols * sizeof(long long))
            if piv_row != r:
                for j in range(ncols):
                    m[r * ncols + j], m[piv_row * ncols + j] = (
                        m[piv_row * ncols + j],
                        m[r * ncols + j],
                    )
            piv = m[r * ncols + c]
            overflow = False
            for i in range(r + 1, nrows):
                x = m[i * ncols + c]
                if x == 0:
                    if piv != prev:
                        for j in range(c + 1, ncols):
                            if m[i * ncols + j] != 0:
                                q = (<int128>piv * m[i * ncols + j]) / prev
                                if q > I64_MAX or q < I64_MIN:
                                    overflow = True
                                    break
                                m[i * ncols + j] = <long long>q
                else:
                    for j in range(c + 1, ncols):
                        prod = (
                            <int128>piv * m[i * ncols + j]
                            - <int128>x * m[r * ncols + j]
                        )
                        q = prod / prev
                        if q > I64_MAX or q < I64_MIN:
                            overflow = True
                            break
                        m[i * ncols + j] = <long long>q
                    if not overflow:
                        m[i * ncols + c] = 0
                if overflow:
                    break
            if overflow:
                memcpy(m, snap, nrows * ncols * sizeof(long long))
                for i in range(nrows):
                    row = <list>rows[i]
                    for j in range(ncols):
                        row[j] = m[i * ncols + j]
                return _ref_object(rows, ncols, r, c, prev, pivots)
            prev = piv
            pivots.append(c)
            r += 1
            c += 1
        for i in range(nrows):
            row = <list>rows[i]
            for j in range(ncols):
                row[j] = m[i * ncols + j]
        return pivots
    finally:
        free(m)


def fraction_free_rank(list rows, Py_ssize_t ncols):
    """Rank only; never mutates the input rows."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    cdef Py_ssize_t r = 0, c, i, j, piv_row
    cdef long long piv, prev, x
    cdef int128 prod, q
    cdef bint bail = False
    cdef object v, row
    if m == NULL:
        bail = True
    else:
        try:
            for i in range(nrows):
                row = <list>rows[i]
                for j in range(ncols):
                    v = row[j]
                    try:
                        m[i * ncols + j] = <long long?>v
                    except OverflowError:
                        bail = True
                        break
                if bail:
                    break
            if not bail:
                prev = 1
                for c in range(ncols):
                    if r == nrows or bail:
                        break
                    piv_row = -1
                    for i in range(r, nrows):
                        if m[i * ncols + c] != 0:
                            piv_row = i
                            break
                    if piv_row < 0:
                        continue
                    if piv_row != r:
                        for j in range(ncols):
                            m[r * ncols + j], m[piv_row * ncols + j] = (
                                m[piv_row * ncols + j],
                                m[r * ncols + j],
                            )
                    piv = m[r * ncols + c]
                    for i in range(r + 1, nrows):
                        x = m[i * ncols + c]
                        if x == 0:
                            if piv != prev:
                                for j in range(c + 1, ncols):
                                    if m[i * ncols + j] != 0:
                                        q = (<int128>piv * m[i * ncols + j]) / prev
                                        if q > I64_MAX or q < I64_MIN:
                                            bail = True
                                            break
                                        m[i * ncols + j] = <long long>q
                        else:
                            for j in range(c + 1, ncols):
                                prod = (
                                    <int128>piv * m[i * ncols + j]
                                    - <int128>x * m[r * ncols + j]
                                )
                                q = prod / prev
                                if q > I64_MAX or q < I64_MIN:
                                    bail = True
                                    break
                                m[i * ncols + j] = <long long>q
                            if not bail:
                                m[i * ncols + c] = 0
                        if bail:
                            break
                    if bail:
                        break
                    prev = piv
                    r += 1
                if not bail:
                    return r
        finally:
            free(m)
    # rare: entries outgrew 64 bits; redo exactly on a private copy
    work = [list(row) for row in rows]
    return len(_ref_object(work, ncols, 0, 0, 1, []))
