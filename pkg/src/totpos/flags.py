"""Decorated flags, configurations, and their coordinate functions.

A decorated flag in R^m is stored as an m x m matrix whose prefix row spans
give the flag subspaces V_1 c ... c V_{m-1} and whose prefix wedges
r_1 ^ ... ^ r_i give the volume decorations.  Two representatives describe
the same decorated flag exactly when one is obtained from the other by
adding multiples of earlier rows to later rows (a lower-unitriangular left
move), which leaves every prefix wedge alone.

A configuration is an ordered tuple of n such flags taken modulo one global
unimodular right multiplication.  Its invariants are the coordinates
delta(idx): the determinant obtained by stacking, in vertex order, the first
idx[k] rows of flag k, for each multi-index idx with sum m and at least two
nonzero entries.  Equality of configurations is equality of all coordinates.

The reversal maps (orthogonal_flag, iota, theta) use the calibrated
sign/reversal convention from perp_constants; see calibrate.py for the
search that produced it.
"""

from fractions import Fraction
from itertools import combinations

from .rational import Mat, scalar, scalar_str, det
from .perp_constants import PERP_CONVENTIONS


class FlagError(ValueError):
    pass


class NotGenericError(FlagError):
    """A coordinate that must be nonzero vanished."""

    def __init__(self, index):
        self.index = tuple(index)
        super().__init__("vanishing coordinate at multi-index %s" % (self.index,))


class SignNormalizeError(FlagError):
    """No decoration sign pattern reaches the all-positive chamber."""

    def __init__(self, index):
        self.index = tuple(index)
        super().__init__(
            "no sign pattern makes all coordinates positive; "
            "witness multi-index %s" % (self.index,))


def admissible_indices(n, m):
    """All multi-indices (i_1..i_n) with sum m and at least two nonzero entries.

    Enumerated in lexicographic order.
    """
    out = []
    # stars and bars: bar positions in a row of m stars
    for bars in combinations(range(m + n - 1), n - 1):
        prev = -1
        idx = []
        for b in bars:
            idx.append(b - prev - 1)
            prev = b
        idx.append(m + n - 2 - prev)
        if sum(1 for x in idx if x) >= 2:
            out.append(tuple(idx))
    return out


def check_index(idx, n, m):
    idx = tuple(int(x) for x in idx)
    if len(idx) != n:
        raise FlagError("multi-index length %d != n = %d" % (len(idx), n))
    if any(x < 0 for x in idx) or sum(idx) != m:
        raise FlagError("multi-index %s does not sum to m = %d" % (idx, m))
    if sum(1 for x in idx if x) < 2:
        raise FlagError("multi-index %s needs at least two nonzero entries" % (idx,))
    return idx


class DecoratedFlag:
    """A complete flag of R^m with volume decorations, as an m x m matrix."""

    __slots__ = ("m", "rep")

    def __init__(self, rep, require_unimodular=True):
        if not isinstance(rep, Mat):
            rep = Mat(rep)
        if not rep.is_square:
            raise FlagError("flag representative must be square")
        self.m = rep.rows
        d = det(rep)
        if d == 0:
            raise FlagError("flag representative is singular")
        if require_unimodular and d != 1:
            raise FlagError("flag representative has det %s != 1" % scalar_str(d))
        self.rep = rep

    def __eq__(self, other):
        """Equality of decorated flags, i.e. of coset normal forms."""
        return (isinstance(other, DecoratedFlag)
                and self.canonicalize().rep == other.canonicalize().rep)

    def __hash__(self):
        return hash(self.canonicalize().rep)

    def __repr__(self):
        return "DecoratedFlag(%r)" % (self.rep,)

    def rows(self, k):
        """The first k rows of the representative."""
        return self.rep.entries[:k]

    def canonicalize(self):
        """The unique coset representative.

        Each row is reduced against the pivot columns of the earlier rows,
        using only additions of earlier rows; idempotent, and constant on
        cosets.
        """
        rows = [list(r) for r in self.rep.entries]
        pivots = []
        for t in range(self.m):
            for j, p in enumerate(pivots):
                if rows[t][p] != 0:
                    f = rows[t][p] / rows[j][p]
                    rows[t] = [a - f * b for a, b in zip(rows[t], rows[j])]
            piv = next(c for c, x in enumerate(rows[t]) if x != 0)
            pivots.append(piv)
        out = DecoratedFlag.__new__(DecoratedFlag)
        out.m = self.m
        out.rep = Mat(rows)
        return out

    def unimodularize(self):
        """Scale the last row so the representative has det 1.

        Only the top decoration changes, which no coordinate sees.
        """
        d = det(self.rep)
        if d == 1:
            return self
        return DecoratedFlag(self.rep.scale_row(self.m - 1, 1 / d))

    def orthogonal(self):
        """The orthogonal flag under the calibrated convention.

        Prefix spans of the result are the B-orthocomplements of the input's
        suffix spans; applying the map twice returns the same coset.
        """
        m = self.m
        try:
            eps, q = PERP_CONVENTIONS[m]
        except KeyError:
            raise FlagError("no calibrated orthogonal convention for m = %d" % m)
        return perp_with(self, eps, q)

    def scale_rows(self, factors):
        return DecoratedFlag(
            Mat([[scalar(f) * x for x in row]
                 for f, row in zip(factors, self.rep.entries)]),
            require_unimodular=False)


def perp_with(flag, eps, q):
    """Signed row reversal of the inverse transpose, times a fixed symmetric Q.

    This is the raw orthogonal map for one candidate convention; the shipped
    constants are chosen by calibration.search_conventions.
    """
    m = flag.m
    c = flag.rep.inverse_transpose()
    rows = [[eps[i] * x for x in c.entries[m - 1 - i]] for i in range(m)]
    out = Mat(rows) * Mat(q)
    return DecoratedFlag(out, require_unimodular=False).unimodularize()


class Configuration:
    """An ordered tuple of decorated flags modulo the global unimodular action."""

    __slots__ = ("m", "n", "flags")

    def __init__(self, flags):
        flags = tuple(flags)
        if len(flags) < 2:
            raise FlagError("a configuration needs at least two flags")
        m = flags[0].m
        if any(f.m != m for f in flags):
            raise FlagError("all flags must share the same ambient dimension")
        self.m = m
        self.n = len(flags)
        self.flags = flags

    def __repr__(self):
        return "Configuration(n=%d, m=%d)" % (self.n, self.m)

    def delta(self, idx):
        """The coordinate at a multi-index: one stacked determinant."""
        idx = check_index(idx, self.n, self.m)
        rows = []
        for k, i in enumerate(idx):
            if i:
                rows.extend(self.flags[k].rows(i))
        return det(Mat(rows))

    def all_deltas(self):
        """Every admissible coordinate, as a dict multi-index -> value."""
        return {idx: self.delta(idx) for idx in admissible_indices(self.n, self.m)}

    def first_nonpositive(self):
        for idx in admissible_indices(self.n, self.m):
            if self.delta(idx) <= 0:
                return idx
        return None

    def is_positive(self):
        return self.first_nonpositive() is None

    def is_regular(self):
        return all(v != 0 for v in self.all_deltas().values())

    def same_point(self, other):
        """Equality as configurations: every coordinate agrees exactly."""
        return (self.n == other.n and self.m == other.m
                and self.all_deltas() == other.all_deltas())

    # -- serialization ----------------------------------------------------

    def to_json(self):
        return {
            "m": self.m,
            "n": self.n,
            "flags": [[[scalar_str(x) for x in row] for row in f.rep.entries]
                      for f in self.flags],
        }

    @classmethod
    def from_json(cls, data):
        flags = [DecoratedFlag(Mat([[scalar(x) for x in row] for row in rows]))
                 for rows in data["flags"]]
        c = cls(flags)
        if c.m != data["m"] or c.n != data["n"]:
            raise FlagError("declared (n, m) does not match the flag data")
        return c


def sign_normalize(c):
    """Flip decoration signs per flag and level to reach the positive chamber.

    Solves, over GF(2), for sign flips of each flag's decorations making
    every coordinate positive.  Free choices (they exist for n = 2) are
    resolved by not flipping; raises SignNormalizeError with a witness
    multi-index when no pattern works, and NotGenericError on a vanishing
    coordinate.
    """
    m, n = c.m, c.n
    nvars = n * (m - 1)
    pivots = {}  # pivot bit -> (mask, rhs)
    for idx in admissible_indices(n, m):
        v = c.delta(idx)
        if v == 0:
            raise NotGenericError(idx)
        mask = 0
        for k, i in enumerate(idx):
            if 1 <= i <= m - 1:
                mask |= 1 << (k * (m - 1) + (i - 1))
        rhs = 1 if v < 0 else 0
        for b, (pm, pr) in pivots.items():
            if mask >> b & 1:
                mask ^= pm
                rhs ^= pr
        if mask == 0:
            if rhs:
                raise SignNormalizeError(idx)
            continue
        b = mask.bit_length() - 1
        # keep earlier pivot rows fully reduced (Gauss-Jordan)
        for pb in list(pivots):
            pm, pr = pivots[pb]
            if pm >> b & 1:
                pivots[pb] = (pm ^ mask, pr ^ rhs)
        pivots[b] = (mask, rhs)
    x = [0] * nvars
    for b, (_, rhs) in pivots.items():
        x[b] = rhs
    if not any(x):
        return c
    flags = []
    for k, f in enumerate(c.flags):
        s = [1] + [(-1) ** x[k * (m - 1) + i] for i in range(m - 1)] + [1]
        factors = [s[i] * s[i - 1] for i in range(1, m + 1)]
        if all(f == 1 for f in factors):
            flags.append(f)
        else:
            flags.append(f.scale_rows(factors))
    return Configuration(flags)


def _normalize_if_possible(c):
    try:
        return sign_normalize(c)
    except FlagError:
        return c


def relabel(c, perm):
    """New configuration whose flag at position i is the old flag perm[i].

    ``perm`` is 1-based: a tuple of length n with values in 1..n.
    """
    return Configuration([c.flags[p - 1] for p in perm])


def rotate(c):
    """Cyclic shift of a triangle; three applications give the identity."""
    if c.n != 3:
        raise FlagError("rotate needs a triangle configuration")
    return _normalize_if_possible(relabel(c, (3, 1, 2)))


def rotate_inv(c):
    if c.n != 3:
        raise FlagError("rotate needs a triangle configuration")
    return _normalize_if_possible(relabel(c, (2, 3, 1)))


def face(c, i):
    """The edge configuration obtained by forgetting flag i of a triangle.

    The remaining pair is kept in cyclic order starting after i, so that
    face(rotate(c), i) = face(c, i-1 mod 3).
    """
    if c.n != 3:
        raise FlagError("face needs a triangle configuration")
    if i not in (1, 2, 3):
        raise FlagError("face index must be 1, 2 or 3")
    a = i % 3 + 1
    b = a % 3 + 1
    return _normalize_if_possible(Configuration([c.flags[a - 1], c.flags[b - 1]]))


def iota(c):
    """The involution of edge configurations: swap and take orthogonals."""
    if c.n != 2:
        raise FlagError("iota needs an edge configuration")
    return sign_normalize(Configuration(
        [c.flags[1].orthogonal(), c.flags[0].orthogonal()]))


def theta(c):
    """The reversal involution of triangle configurations."""
    if c.n != 3:
        raise FlagError("theta needs a triangle configuration")
    return sign_normalize(Configuration(
        [c.flags[2].orthogonal(), c.flags[1].orthogonal(), c.flags[0].orthogonal()]))
