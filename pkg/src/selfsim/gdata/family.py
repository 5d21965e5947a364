"""Generator families of free abelian groups of infinite rank, given by index recursions.

Both families live on the (m+1)-ary tree with orbits {1..m} and {m+1}.

``infinite-rank``: alpha_1 = (e, ..., e, alpha_1, e)(1 2 ... m), alpha_{2i} = alpha_i^{x_2},
alpha_{2i-1} = alpha_i^{x_1} for i >= 2.  Each index only refers to smaller
ones (or to alpha_1 itself), so every generator is finite-state.

``finite-extension``: the shift construction over a simple virtual
endomorphism x -> x/m of Z: b_1 = (e, ..., e, b_1, e)(1 2 ... m) and
b_i = (b_i, ..., b_i, b_{i-1}).

Either family is also the induced representation of a rank-R truncation of
its G-data; ``family_data`` builds that truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..diagmonoid import x_i
from ..errors import InputError
from ..permsym import OrbitPartition
from ..report import Report
from ..treecore import commutator, compose, equal, from_rule, identity, is_trivial_at_depth, power
from .data import GDataSpec

VARIANTS = ("infinite-rank", "finite-extension")


@dataclass(frozen=True)
class IndexMapFamily:
    m: int
    variant: str

    def __post_init__(self):
        if self.m < 2:
            raise InputError("family needs m >= 2")
        if self.variant not in VARIANTS:
            raise InputError(f"unknown variant {self.variant!r}; choose from {', '.join(VARIANTS)}")

    @property
    def degree(self):
        return self.m + 1

    @property
    def partition(self):
        return OrbitPartition(self.degree, (tuple(range(1, self.m + 1)), (self.m + 1,)))

    @property
    def symbol(self):
        return "alpha" if self.variant == "infinite-rank" else "b"

    def rule(self, i):
        """Level-1 data of generator i: (root permutation, child indices with 0 for e)."""
        m = self.m
        if i == 0:
            return tuple(range(m + 1)), (0,) * (m + 1)
        if i < 0:
            raise InputError("generator indices start at 1")
        cycle = tuple(list(range(1, m)) + [0, m])
        ident = tuple(range(m + 1))
        if i == 1:
            return cycle, (0,) * (m - 1) + (1, 0)
        if self.variant == "infinite-rank":
            if i % 2 == 0:
                return ident, (0,) * m + (i // 2,)
            return ident, ((i + 1) // 2,) * m + (0,)
        return ident, (i,) * m + (i - 1,)

    def x_image(self, k, i):
        """Index j with (generator i)^{x_k} = generator j, or None when not a family member."""
        if self.variant != "infinite-rank":
            return None
        if k == 2:
            return 2 * i
        if k == 1 and i >= 2:
            return 2 * i - 1
        return None

    def name(self, i):
        return f"{self.symbol}_{i}"


def theorem_c_family(m=2, variant="infinite-rank"):
    return IndexMapFamily(m, variant)


@lru_cache(maxsize=None)
def realize(F, i):
    """Generator i of the family as a minimized finite-state automorphism."""
    if i < 1:
        raise InputError("generator indices start at 1")
    return from_rule(F.degree, F.rule, i, 0, namer=F.name, try_finite=True)


def family_data(F, rank):
    """G-data over Z^rank whose induced representation sends e_i to generator i (i <= rank)."""
    m, n = F.m, rank
    if n < 1:
        raise InputError("rank must be positive")
    H1 = [[m if (i == j == 0) else int(i == j) for j in range(n)] for i in range(n)]
    f1 = [[Fraction(0)] * n for _ in range(n)]
    f2 = [[Fraction(0)] * n for _ in range(n)]
    f1[0][0] = Fraction(1, m)
    for j in range(2, n + 1):  # column j-1 is the image of e_j
        if F.variant == "infinite-rank":
            if j % 2:
                f1[(j + 1) // 2 - 1][j - 1] = Fraction(1)
            else:
                f2[j // 2 - 1][j - 1] = Fraction(1)
        else:
            f1[j - 1][j - 1] = Fraction(1)
            f2[j - 2][j - 1] = Fraction(1)
    H2 = [[int(i == j) for j in range(n)] for i in range(n)]
    return GDataSpec.build(n, [(m, H1, f1), (1, H2, f2)])


def delta_invariance_check(F, bound=8):
    """alpha_i^{x_k} is exactly a family member for every i <= bound and k = 1, 2."""
    if F.variant != "infinite-rank":
        raise InputError("only the infinite-rank family declares Delta rules")
    rep = Report(f"Delta-invariance of the {F.variant} family, m = {F.m}, indices <= {bound}")
    part = F.partition
    bad = []
    for i in range(1, bound + 1):
        a = realize(F, i)
        for k in (1, 2):
            img = x_i(a, part, k)
            j = F.x_image(k, i)
            if j is not None:
                if not equal(img, realize(F, j)):
                    bad.append(f"{F.name(i)}^x{k} != {F.name(j)}")
            elif not equal(img, power(a, F.m)):
                bad.append(f"{F.name(i)}^x{k} is neither a member nor {F.name(i)}^{F.m}")
            else:
                rep.info(f"{F.name(i)}^x{k} = {F.name(i)}^{F.m} (in the group, not a generator)")
    rep.check("images under x_1, x_2 are family members", not bad, "; ".join(bad) or f"{2 * bound} images")
    return rep


def commutation_check(F, upto=6, depth=8):
    rep = Report(f"pairwise commutation of {F.name(1)}..{F.name(upto)} at depth {depth}")
    gens = [realize(F, i) for i in range(1, upto + 1)]
    bad = [(i + 1, j + 1) for i in range(upto) for j in range(i + 1, upto)
           if not is_trivial_at_depth(commutator(gens[i], gens[j]), depth)]
    rep.check("all commutators trivial", not bad, f"failing pairs {bad}" if bad else f"{upto * (upto - 1) // 2} pairs")
    return rep


def independence_check(F, coeff_bound=3, depth=10, r=3):
    """No product g_1^{c_1} ... g_r^{c_r} with 0 < max|c| <= coeff_bound is trivial at ``depth``."""
    rep = Report(f"independence of {F.name(1)}..{F.name(r)}, |c| <= {coeff_bound}, depth {depth}")
    gens = [realize(F, i) for i in range(1, r + 1)]
    rng = range(-coeff_bound, coeff_bound + 1)
    pows = [{c: power(g, c) for c in rng} for g in gens]
    relations = []
    tried = 0

    def walk(k, acc, coeffs):
        nonlocal tried
        if k == r:
            if any(coeffs):
                tried += 1
                if is_trivial_at_depth(acc, depth):
                    relations.append(coeffs)
            return
        for c in rng:
            walk(k + 1, compose(acc, pows[k][c]) if c else acc, coeffs + (c,))

    walk(0, identity(F.degree), ())
    rep.check("no relation found", not relations,
              f"{tried} nonzero coefficient vectors" + (f"; relations {relations[:5]}" if relations else ""))
    return rep
