"""Vertex monomorphisms, partial diagonals and the B(G) factorization.

Conventions: operators act on the right and compose left to right, so
``(a) delta_u delta_v`` means first place ``a`` at ``u``, then place the
result at ``v``; the net effect is ``a`` at the vertex ``vu``.
Delta-words ``x_{i1} x_{i2} ...`` are applied in reading order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InputError
from .permsym import OrbitPartition, activity_group, orbits, projection
from .treecore import (
    Automorphism,
    compose,
    conjugate,
    identity,
    parse_word,
    portrait,
    wreath,
)


def _is_prefix(u, v):
    return len(u) <= len(v) and v[: len(u)] == u


def _check_incomparable(words):
    for i, u in enumerate(words):
        for v in words[i + 1:]:
            if _is_prefix(u, v) or _is_prefix(v, u):
                raise InputError(
                    f"vertices {_fmt(u)} and {_fmt(v)} are comparable; the sum is not a monomorphism"
                )


def _fmt(w0):
    return " ".join(str(y + 1) for y in w0) or "()"


@dataclass(frozen=True)
class ConnectingSet:
    """Pairwise incomparable vertex words (0-based letters internally)."""

    m: int
    words: tuple

    @classmethod
    def of(cls, m, words):
        ws = tuple(parse_word(w, m) for w in words)
        _check_incomparable(ws)
        return cls(m, ws)

    def covers(self, depth):
        """Every vertex of length <= depth is comparable to some member."""
        for d in range(depth + 1):
            for v in product(range(self.m), repeat=d):
                if not any(_is_prefix(u, v) or _is_prefix(v, u) for u in self.words):
                    return False
        return True


@dataclass(frozen=True)
class DeltaWord:
    """A word over x_1..x_s, stored as 1-based generator indices."""

    letters: tuple

    @classmethod
    def parse(cls, text):
        letters = []
        for tok in text.replace(",", " ").split():
            tok = tok.strip()
            if not tok.startswith("x") or not tok[1:].isdigit():
                raise InputError(f"bad Delta letter {tok!r}; expected x1, x2, ...")
            letters.append(int(tok[1:]))
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"x{i}" for i in self.letters) or "1"


@dataclass(frozen=True)
class FactorDecomposition:
    partition: OrbitPartition
    factors: tuple

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]


def _placed(a, w0):
    """a at vertex w0, identity elsewhere, trivial permutations above."""
    m = a.m
    e = identity(m)
    result = a
    for y in reversed(w0):
        kids = [e] * m
        kids[y] = result
        result = wreath(tuple(range(m)), kids)
    return result


def delta_vertex(a, w):
    """(a) delta_w."""
    return _placed(a, parse_word(w, a.m))


def delta_set(a, N):
    """(a) delta_N: ``a`` at every vertex of the incomparable set N."""
    m = a.m
    words = [parse_word(w, m) for w in N]
    _check_incomparable(words)
    return _place_many(a, words, m)


def _place_many(a, words, m):
    e = identity(m)
    if not words:
        return e
    if words == [()]:
        return a
    kids = []
    for y in range(m):
        sub = [w[1:] for w in words if w and w[0] == y]
        kids.append(_place_many(a, sub, m) if sub else e)
    return wreath(tuple(range(m)), kids)


class MonoSum:
    """The operator sum_{u in U} delta_u for a pairwise incomparable vertex set U."""

    def __init__(self, m, vertices):
        self.m = m
        self.vertices = tuple(parse_word(w, m) for w in vertices)
        _check_incomparable(self.vertices)

    def __call__(self, a):
        if a.m != self.m:
            raise InputError("operator applied on a different alphabet")
        return _place_many(a, list(self.vertices), self.m)

    def injective_on(self, elements, depth):
        """Distinct depth-``depth`` inputs give distinct outputs at depth + max|u|."""
        reach = depth + max((len(u) for u in self.vertices), default=0)
        seen = {}
        for a in elements:
            key_in = portrait(a, depth).tree
            key_out = portrait(self(a), reach).tree
            prev = seen.get(key_out)
            if prev is not None and prev != key_in:
                return False
            seen[key_out] = key_in
        return True


def mono_sum(m, vertices):
    return MonoSum(m, vertices)


def conj_action(b, r):
    """(r) kappa applied to b: ``r^{-1} b r``."""
    return conjugate(b, r)


def _block(partition, i):
    if not 1 <= i <= partition.s:
        raise InputError(f"x_{i} undefined: partition has {partition.s} orbits")
    return partition.blocks[i - 1]


def x_i(a, partition, i):
    """Partial diagonal: ``a`` in every coordinate of O_(i), ``e`` elsewhere (i is 1-based)."""
    if a.m != partition.m:
        raise InputError("partition and automorphism on different alphabets")
    block = set(_block(partition, i))
    e = identity(a.m)
    return wreath(tuple(range(a.m)), [a if y in block else e for y in range(a.m)])


def apply_delta_word(a, word, partition):
    if isinstance(word, str):
        word = DeltaWord.parse(word)
    for i in word.letters:
        a = x_i(a, partition, i)
    return a


def _check_partition(gens, partition):
    for g in gens:
        if not partition.preserved_by(g.perm):
            raise InputError(
                f"activity of {g.name} does not preserve the partition {partition}; "
                "x_i is only defined for the orbit partition of the group"
            )


def factor(a, partition=None):
    """alpha = alpha_[1] ... alpha_[s] with alpha_[i] supported on O_(i)."""
    partition = partition or orbits(activity_group([a]))
    _check_partition([a], partition)
    e = identity(a.m)
    secs = a.sections()
    factors = []
    for i, block in enumerate(partition.blocks, 1):
        bs = set(block)
        sections = [secs[y] if y in bs else e for y in range(a.m)]
        factors.append(wreath(projection(a.perm, block), sections, name=f"{a.name}_[{i}]"))
    return FactorDecomposition(partition, tuple(factors))


def _dedupe(items):
    out = []
    seen = set()
    for g in items:
        key = g if g.is_finite else (id(g.automaton), g.state)
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return out


def b_group(gens, partition=None):
    """Generators of B(G): the nontrivial factors g_[i] of every generator."""
    gens = list(gens)
    partition = partition or orbits(activity_group(gens))
    _check_partition(gens, partition)
    out = []
    for g in gens:
        for f in factor(g, partition):
            if f.is_finite and f.is_identity():
                continue
            out.append(f)
    return _dedupe(out)


def delta_closure(gens, partition=None, length=0):
    """{g^w : g a generator, w a Delta-word with |w| <= length}, deduplicated."""
    gens = list(gens)
    if length < 0:
        raise InputError("length must be non-negative")
    partition = partition or orbits(activity_group(gens))
    _check_partition(gens, partition)
    layer = _dedupe(gens)
    out = list(layer)
    for _ in range(length):
        layer = _dedupe([x_i(g, partition, i) for g in layer for i in range(1, partition.s + 1)])
        out.extend(layer)
    out = _dedupe(out)
    return [g for g in out if not (g.is_finite and g.is_identity())] or [identity(partition.m)]


def delta_words(s, length):
    """All Delta-words of length exactly ``length`` over x_1..x_s, in lexicographic order."""
    return [DeltaWord(w) for w in product(range(1, s + 1), repeat=length)]


def product_of(elements, m):
    result = identity(m)
    for g in elements:
        result = compose(result, g)
    return result
