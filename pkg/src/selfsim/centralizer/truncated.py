"""Finite groups of depth-k portraits and the brute-force centralizer oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial, lcm

import numpy as np

from ..errors import InputError, SizeError
from ..treecore import Automorphism, Portrait, portrait
from ..treecore.portrait import (
    tree_from_leaf_perm,
    tree_identity,
    tree_inv,
    tree_leaf_perm,
    tree_mul,
    tree_order,
)

BRUTE_GUARD = 10 ** 7
ENUM_LIMIT = 2_000_000


def as_tree(x, m, depth):
    """Raw depth-``depth`` tree of an Automorphism, Portrait or raw tree."""
    if isinstance(x, Automorphism):
        if x.m != m:
            raise InputError("generator on a different alphabet")
        return portrait(x, depth).tree
    if isinstance(x, Portrait):
        if (x.m, x.depth) != (m, depth):
            raise InputError("portrait of the wrong shape")
        return x.tree
    return x


def trees_of(gens, m, depth):
    return [as_tree(g, m, depth) for g in gens]


def tree_commutes(s, t):
    return tree_mul(s, t) == tree_mul(t, s)


@dataclass
class TruncatedGroup:
    """A subgroup of the ambient group modulo Stab(depth).

    Either the element set is known, or only generators plus an order and a
    membership test (for centralizers too large to list).
    """

    m: int
    depth: int
    elements: frozenset = None
    generators: tuple = ()
    known_order: int = None
    member: object = field(default=None, repr=False)

    def order(self):
        if self.elements is not None:
            return len(self.elements)
        if self.known_order is not None:
            return self.known_order
        raise SizeError("group order unknown without enumeration")

    def __contains__(self, x):
        t = as_tree(x, self.m, self.depth)
        if self.elements is not None:
            return t in self.elements
        if self.member is not None:
            return self.member(t)
        raise SizeError("membership undecidable without enumeration")

    def __iter__(self):
        if self.elements is None:
            raise SizeError("group not enumerated")
        return iter(sorted(self.elements))

    def __len__(self):
        return self.order()

    def gens(self):
        if self.generators:
            return list(self.generators)
        if self.elements is not None:
            return small_generating_set(self.elements, self.m, self.depth)
        return []

    def is_abelian(self):
        gens = self.gens()
        return all(tree_commutes(g, h) for i, g in enumerate(gens) for h in gens[i + 1:])

    def exponent(self):
        if self.elements is not None:
            return lcm(1, *(tree_order(t, self.m, self.depth) for t in self.elements))
        if self.generators and self.is_abelian():
            return lcm(1, *(tree_order(t, self.m, self.depth) for t in self.generators))
        raise SizeError("exponent needs an enumerated or abelian group")

    def same_elements(self, other):
        return self.elements is not None and other.elements is not None and self.elements == other.elements

    def root_perms(self):
        if self.elements is None:
            raise SizeError("group not enumerated")
        if self.depth == 0:
            return {tuple(range(self.m))}
        return {t[0] for t in self.elements}

    def portraits(self):
        return [Portrait(self.m, self.depth, t) for t in self]


def generated(gens, m, depth, limit=ENUM_LIMIT):
    """Enumerate the truncated group generated by ``gens`` (BFS closure)."""
    gens = [t for t in dict.fromkeys(trees_of(gens, m, depth))]
    ident = tree_identity(m, depth)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tree_mul(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise SizeError(f"generated group exceeds {limit} elements at depth {depth}")
                queue.append(y)
    return TruncatedGroup(m, depth, frozenset(seen), tuple(g for g in gens if g != ident))


def small_generating_set(elements, m, depth):
    """Greedy generators: add the smallest element not yet in the span."""
    span = {tree_identity(m, depth)}
    gens = []
    for t in sorted(elements):
        if t in span:
            continue
        gens.append(t)
        span = set(generated(gens, m, depth).elements)
        if len(span) == len(elements):
            break
    return gens


def ambient_size(m, depth):
    return factorial(m) ** sum(m ** i for i in range(depth))


def _ambient_leaf_perms(m, depth):
    """Every ambient element as a row of its level-``depth`` permutation.

    Row order matches ``iter_ambient``: root permutation first, then the
    children lexicographically.
    """
    if depth == 0:
        return np.zeros((1, 1), dtype=np.int32)
    prev = _ambient_leaf_perms(m, depth - 1)
    n_prev, block = prev.shape
    combos = np.indices((n_prev,) * m).reshape(m, -1).T  # first child most significant
    chunks = []
    for p in permutations(range(m)):
        rows = np.empty((combos.shape[0], m * block), dtype=np.int32)
        for y in range(m):
            rows[:, y * block:(y + 1) * block] = p[y] * block + prev[combos[:, y]]
        chunks.append(rows)
    return np.concatenate(chunks)


def _iter_ambient_chunks(m, depth, chunk=1 << 16):
    """Yield ambient leaf-permutation arrays in chunks of at most ``chunk`` rows."""
    if depth <= 1:
        yield _ambient_leaf_perms(m, depth)
        return
    prev = _ambient_leaf_perms(m, depth - 1)
    n_prev, block = prev.shape
    # split the first child index off when the full product is large
    tail = np.indices((n_prev,) * (m - 1)).reshape(m - 1, -1).T
    for p in permutations(range(m)):
        for k0 in range(n_prev):
            for start in range(0, tail.shape[0], chunk):
                part = tail[start:start + chunk]
                rows = np.empty((part.shape[0], m * block), dtype=np.int32)
                rows[:, :block] = p[0] * block + prev[k0]
                for y in range(1, m):
                    rows[:, y * block:(y + 1) * block] = p[y] * block + prev[part[:, y - 1]]
                yield rows


def centralizer_brute(X, m, depth, guard=BRUTE_GUARD):
    """{c in ambient : c x = x c mod Stab(depth) for all x in X}, by exhaustion."""
    size = ambient_size(m, depth)
    if size > guard:
        raise SizeError(f"ambient group of order {size} exceeds the brute-force guard {guard}")
    xs = [np.asarray(tree_leaf_perm(t, m, depth)) for t in trees_of(X, m, depth)]
    found = []
    for rows in _iter_ambient_chunks(m, depth):
        keep = np.ones(rows.shape[0], dtype=bool)
        for x in xs:
            # right action: (cx)[i] = x[c[i]], (xc)[i] = c[x[i]]
            keep &= np.all(x[rows] == rows[:, x], axis=1)
        for row in rows[keep]:
            found.append(tree_from_leaf_perm(row, m, depth))
    return TruncatedGroup(m, depth, frozenset(found))


def tree_conj_by(s, g):
    return tree_mul(tree_mul(tree_inv(g), s), g)
