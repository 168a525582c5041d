"""Pure-Python term kernels.

A polynomial body is a ``dict`` mapping exponent tuples to nonzero
coefficients.  Every function here either returns a fresh dict or mutates
only the dict passed as its first argument when the name says so.
"""


def mul_terms(a, b):
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            c = get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def axpy_inplace(a, b, coeff, shift):
    """a += coeff * X^shift * b, in place.  ``shift`` may be None."""
    get = a.get
    if shift is None:
        for e, cb in b.items():
            c = get(e)
            if c is None:
                a[e] = coeff * cb
            else:
                c = c + coeff * cb
                if c:
                    a[e] = c
                else:
                    del a[e]
        return a
    for eb, cb in b.items():
        e = tuple([x + y for x, y in zip(eb, shift)])
        c = get(e)
        if c is None:
            a[e] = coeff * cb
        else:
            c = c + coeff * cb
            if c:
                a[e] = c
            else:
                del a[e]
    return a


def order_key(rows, exp):
    return tuple([sum([r * e for r, e in zip(row, exp)]) for row in rows])


def divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_quo(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def leading_exp(terms, rows):
    best = None
    best_key = None
    for e in terms:
        k = order_key(rows, e)
        if best_key is None or k > best_key:
            best, best_key = e, k
    return best


def reduce_full(terms, basis, rows):
    """Full division of ``terms`` by monic ``basis`` under a global order.

    ``basis`` is a list of ``(lead_exp, body)`` with lead coefficient 1.
    Returns the remainder dict; ``terms`` is not modified.
    """
    p = dict(terms)
    rem = {}
    while p:
        e = leading_exp(p, rows)
        c = p[e]
        for lead, body in basis:
            if divides(lead, e):
                axpy_inplace(p, body, -c, mono_quo(e, lead))
                break
        else:
            rem[e] = c
            del p[e]
    return rem
