"""Brute-force reference counts computed without the library."""
import itertools


def commutative_monoids(n):
    """All (op, unit) pairs with op a dict on range(n) making a commutative monoid."""
    els = range(n)
    pairs = [(x, y) for x in els for y in els]
    out = []
    for values in itertools.product(els, repeat=len(pairs)):
        op = dict(zip(pairs, values))
        if any(op[x, y] != op[y, x] for x, y in pairs):
            continue
        if any(op[op[x, y], z] != op[x, op[y, z]] for x, y in pairs for z in els):
            continue
        units = [e for e in els if all(op[e, x] == x for x in els)]
        out.extend((op, e) for e in units)
    return out


def monotone_self_maps_of_chain(k):
    return sum(1 for f in itertools.product(range(k), repeat=k)
               if all(f[i] <= f[i + 1] for i in range(k - 1)))
