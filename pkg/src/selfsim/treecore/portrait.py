"""Depth-truncated automorphisms (elements of the ambient group modulo Stab(d)).

A raw portrait tree of depth ``d`` is ``()`` when ``d == 0`` and otherwise
``(perm, (child_1, ..., child_m))`` with 0-based ``perm`` and children of depth
``d - 1``.  The raw functions below are the hot path of the centralizer solver;
:class:`Portrait` wraps a tree with its alphabet size and depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from ..errors import InputError
from .automaton import parse_word
from .permutation import Permutation

LEAF = ()


@lru_cache(maxsize=None)
def tree_identity(m, d):
    if d == 0:
        return LEAF
    child = tree_identity(m, d - 1)
    return (tuple(range(m)), (child,) * m)


def tree_mul(s, t):
    """Product of two trees of equal depth; ``s`` acts first."""
    if not s:
        return LEAF
    p, cs = s
    q, ds = t
    return (tuple([q[i] for i in p]), tuple([tree_mul(cs[y], ds[p[y]]) for y in range(len(p))]))


def tree_inv(s):
    if not s:
        return LEAF
    p, cs = s
    inv = [0] * len(p)
    for y, z in enumerate(p):
        inv[z] = y
    return (tuple(inv), tuple([tree_inv(cs[inv[y]]) for y in range(len(p))]))


def tree_conj(s, g):
    """``s^g = g^{-1} s g``."""
    return tree_mul(tree_mul(tree_inv(g), s), g)


def tree_pow(s, n, m, d):
    if n < 0:
        s, n = tree_inv(s), -n
    result = tree_identity(m, d)
    while n:
        if n & 1:
            result = tree_mul(result, s)
        n >>= 1
        if n:
            s = tree_mul(s, s)
    return result


def tree_is_identity(s):
    if not s:
        return True
    p, cs = s
    return all(i == y for y, i in enumerate(p)) and all(tree_is_identity(c) for c in cs)


def tree_depth(s):
    d = 0
    while s:
        s = s[1][0]
        d += 1
    return d


def tree_truncate(s, d):
    if d == 0 or not s:
        return LEAF
    p, cs = s
    return (p, tuple(tree_truncate(c, d - 1) for c in cs))


def tree_section(s, word0):
    for y in word0:
        s = s[1][y]
    return s


def tree_order(s, m, d):
    ident = tree_identity(m, d)
    acc = s
    n = 1
    while acc != ident:
        acc = tree_mul(acc, s)
        n += 1
    return n


def tree_from_sections(perm, children):
    return (tuple(perm), tuple(children))


def tree_leaf_perm(s, m, d):
    """Action on the m**d vertices of level d, indexed lexicographically (first letter most significant)."""
    if d == 0:
        return (0,)
    p, cs = s
    block = m ** (d - 1)
    out = [0] * (m * block)
    for y in range(m):
        sub = tree_leaf_perm(cs[y], m, d - 1)
        base, target = y * block, p[y] * block
        for r in range(block):
            out[base + r] = target + sub[r]
    return tuple(out)


def tree_from_leaf_perm(leaf, m, d):
    if d == 0:
        return LEAF
    block = m ** (d - 1)
    perm = tuple(int(leaf[y * block]) // block for y in range(m))
    kids = []
    for y in range(m):
        off = perm[y] * block
        kids.append(tree_from_leaf_perm([int(leaf[y * block + r]) - off for r in range(block)], m, d - 1))
    return (perm, tuple(kids))


def ambient_order(m, d):
    """|A_m / Stab(d)| = prod_{i<d} (m!)^(m^i)."""
    return factorial(m) ** sum(m ** i for i in range(d))


def iter_ambient(m, d):
    """Every depth-d tree, ordered by root permutation then children (lexicographic)."""
    if d == 0:
        yield LEAF
        return
    subs = list(iter_ambient(m, d - 1))
    for p in permutations(range(m)):
        for kids in product(subs, repeat=m):
            yield (p, kids)


def tree_str(s):
    """Compact readable form: root perm in cycles then sections, e.g. ``[(1 2); -, (1 2)]``."""
    if not s:
        return "-"
    p, cs = s
    perm = Permutation(p).cycle_str()
    if all(tree_is_identity(c) for c in cs):
        return perm if perm != "()" else "e"
    return f"[{perm}; " + ", ".join(tree_str(c) if not tree_is_identity(c) else "e" for c in cs) + "]"


@dataclass(frozen=True)
class Portrait:
    """An automorphism modulo Stab(depth): permutations at all vertices above level ``depth``."""

    m: int
    depth: int
    tree: tuple

    @classmethod
    def identity(cls, m, depth):
        return cls(m, depth, tree_identity(m, depth))

    def _check(self, other):
        if (self.m, self.depth) != (other.m, other.depth):
            raise InputError("portraits of different shape")

    def __mul__(self, other):
        self._check(other)
        return Portrait(self.m, self.depth, tree_mul(self.tree, other.tree))

    def inverse(self):
        return Portrait(self.m, self.depth, tree_inv(self.tree))

    def __pow__(self, n):
        return Portrait(self.m, self.depth, tree_pow(self.tree, n, self.m, self.depth))

    def conj(self, g):
        self._check(g)
        return Portrait(self.m, self.depth, tree_conj(self.tree, g.tree))

    def is_identity(self):
        return tree_is_identity(self.tree)

    @property
    def perm(self):
        if self.depth == 0:
            return Permutation.identity(self.m)
        return Permutation(self.tree[0])

    def section(self, word):
        w = parse_word(word, self.m)
        if len(w) > self.depth:
            raise InputError("section below the truncation depth")
        return Portrait(self.m, self.depth - len(w), tree_section(self.tree, w))

    def vertex_perm(self, word):
        """Permutation written at a vertex above the truncation level."""
        return self.section(word).perm

    def truncate(self, d):
        if d > self.depth:
            raise InputError("cannot extend a portrait")
        return Portrait(self.m, d, tree_truncate(self.tree, d))

    def order(self):
        return tree_order(self.tree, self.m, self.depth)

    def leaf_permutation(self):
        return tree_leaf_perm(self.tree, self.m, self.depth)

    def vertices(self):
        """(1-based word, Permutation) for every vertex above the truncation level, BFS order."""
        out = []
        level = [((), self.tree)]
        for _ in range(self.depth):
            nxt = []
            for w, t in level:
                out.append((tuple(y + 1 for y in w), Permutation(t[0])))
                nxt.extend((w + (y,), c) for y, c in enumerate(t[1]))
            level = nxt
        return out

    def __str__(self):
        return tree_str(self.tree)


def portrait(alpha, depth):
    """Depth-``depth`` portrait of an automorphism (finite or lazy)."""
    A = alpha.automaton
    m = alpha.m
    memo = {}

    def build(q, d):
        if d == 0:
            return LEAF
        key = (q, d)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if q == A.identity:
            t = tree_identity(m, d)
        else:
            p, kids = A.node(q)
            t = (p, tuple(build(c, d - 1) for c in kids))
        memo[key] = t
        return t

    return Portrait(m, depth, build(alpha.state, depth))
