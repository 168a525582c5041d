# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernels; same contract as ``_kernels_py``."""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_SIZE, PyTuple_GET_ITEM
from cpython.ref cimport Py_INCREF


cdef inline tuple _add_exp(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = (<long>(<object>PyTuple_GET_ITEM(a, i))) + (<long>(<object>PyTuple_GET_ITEM(b, i)))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, c
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _add_exp(ea, eb)
            c = out.get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def axpy_inplace(dict a, dict b, coeff, shift):
    cdef tuple eb, e
    cdef object cb, c
    if shift is None:
        for eb, cb in b.items():
            c = a.get(eb)
            if c is None:
                a[eb] = coeff * cb
            else:
                c = c + coeff * cb
                if c:
                    a[eb] = c
                else:
                    del a[eb]
        return a
    cdef tuple s = <tuple>shift
    for eb, cb in b.items():
        e = _add_exp(eb, s)
        c = a.get(e)
        if c is None:
            a[e] = coeff * cb
        else:
            c = c + coeff * cb
            if c:
                a[e] = c
            else:
                del a[e]
    return a


cdef tuple _order_key(tuple rows, tuple exp):
    cdef Py_ssize_t i, j, m = PyTuple_GET_SIZE(rows), n = PyTuple_GET_SIZE(exp)
    cdef tuple row
    cdef long acc
    cdef tuple out = PyTuple_New(m)
    cdef object v
    for i in range(m):
        row = <tuple>PyTuple_GET_ITEM(rows, i)
        acc = 0
        for j in range(n):
            acc += (<long>(<object>PyTuple_GET_ITEM(row, j))) * (<long>(<object>PyTuple_GET_ITEM(exp, j)))
        v = acc
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def order_key(rows, exp):
    return _order_key(tuple(rows), tuple(exp))


def divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    for i in range(n):
        if (<long>(<object>PyTuple_GET_ITEM(a, i))) > (<long>(<object>PyTuple_GET_ITEM(b, i))):
            return False
    return True


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    for i in range(n):
        if (<long>(<object>PyTuple_GET_ITEM(a, i))) > (<long>(<object>PyTuple_GET_ITEM(b, i))):
            return False
    return True


def mono_lcm(tuple a, tuple b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_quo(tuple a, tuple b):
    return tuple([x - y for x, y in zip(a, b)])


def coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    for i in range(n):
        if (<long>(<object>PyTuple_GET_ITEM(a, i))) and (<long>(<object>PyTuple_GET_ITEM(b, i))):
            return False
    return True


cdef tuple _leading_exp(dict terms, tuple rows):
    cdef tuple best = None, best_key = None, k, e
    for e in terms:
        k = _order_key(rows, e)
        if best_key is None or k > best_key:
            best = e
            best_key = k
    return best


def leading_exp(dict terms, rows):
    return _leading_exp(terms, tuple(rows))


def reduce_full(dict terms, list basis, rows):
    cdef tuple r = tuple(rows)
    cdef dict p = dict(terms)
    cdef dict rem = {}
    cdef tuple e, lead, q
    cdef object c
    cdef dict body
    cdef bint hit
    while p:
        e = _leading_exp(p, r)
        c = p[e]
        hit = False
        for lead, body in basis:
            if _divides(lead, e):
                q = tuple([x - y for x, y in zip(e, lead)])
                axpy_inplace(p, body, -c, q)
                hit = True
                break
        if not hit:
            rem[e] = c
            del p[e]
    return rem
