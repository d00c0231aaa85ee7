"""The exchange relation and chart transport along flips.

A flip replaces the diagonal {a, c} of a quadrilateral (a, b, c, d) by
{b, d}.  On chart values the transport fills in every coordinate supported
on the quadrilateral by induction on the total weight at b and d: each
application of the exchange relation expresses a coordinate through five
siblings of strictly smaller such weight, grounding in old-chart values.
All steps are subtraction free, so positivity propagates for free.
"""

from .polygon import ChartPoint, chart_indices, PolygonError


class MutationError(ValueError):
    pass


def exchange(ab, cd, bc, ad, ac):
    """One exchange step: (ab * cd + bc * ad) / ac."""
    if ac == 0:
        raise MutationError("zero denominator in exchange relation")
    return (ab * cd + bc * ad) / ac


def quad_weights(idx, quad):
    """Weights of a multi-index at the quadrilateral's four positions;
    None if the index has support outside the quadrilateral."""
    w = []
    support = {v - 1 for v in quad}
    for k, x in enumerate(idx):
        if x and k not in support:
            return None
    for v in quad:
        w.append(idx[v - 1])
    return tuple(w)


def flip_transport(p, d):
    """Chart point of the flipped triangulation for the same underlying point."""
    t = p.triangulation
    d = tuple(sorted(d))
    a, b, c, e = t.quadrilateral(d)
    n, m = t.n, p.m

    def old_value(i, j, k, l):
        idx = [0] * n
        idx[a - 1], idx[b - 1], idx[c - 1], idx[e - 1] = i, j, k, l
        return p.values[tuple(idx)]

    memo = {}

    def value(i, j, k, l):
        # induction on j + l, seeded by the old chart (j = 0 or l = 0)
        if j == 0 or l == 0:
            return old_value(i, j, k, l)
        key = (i, j, k, l)
        if key not in memo:
            memo[key] = exchange(
                value(i + 1, j, k, l - 1), value(i, j - 1, k + 1, l),
                value(i, j, k + 1, l - 1), value(i + 1, j - 1, k, l),
                value(i + 1, j - 1, k + 1, l - 1))
        return memo[key]

    t2 = t.flip(d)
    new_values = {}
    for idx in chart_indices(t2, m):
        if idx in p.values:
            new_values[idx] = p.values[idx]
        else:
            w = quad_weights(idx, (a, b, c, e))
            if w is None:
                raise MutationError("unexpected chart index %s after flip" % (idx,))
            new_values[idx] = value(*w)
    return ChartPoint(t2, m, new_values)


def transport(p, target):
    """Compose flip transports along a flip path to the target triangulation.

    The result does not depend on the chosen path; the verification harness
    checks this rather than assuming it.
    """
    from .polygon import flip_path

    if target.n != p.triangulation.n:
        raise PolygonError("mismatched polygon sizes")
    for d in flip_path(p.triangulation, target):
        p = flip_transport(p, d)
    assert p.triangulation == target
    return p
