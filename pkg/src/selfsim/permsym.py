"""Small symmetric-group machinery: activity groups, orbits, rigid permutations, centralizers in Sym(m).

All groups here are enumerated outright; the intended alphabets stay at m <= 8.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations, product

from .errors import InputError, SizeError
from .treecore import Permutation

ENUM_GUARD = 12


@dataclass(frozen=True)
class OrbitPartition:
    """Ordered orbits O_(1), ..., O_(s) of a permutation group, 1-based letters."""

    m: int
    orbits: tuple

    def __post_init__(self):
        orbits = tuple(tuple(sorted(o)) for o in self.orbits)
        orbits = tuple(sorted(orbits, key=lambda o: o[0]))
        letters = sorted(y for o in orbits for y in o)
        if letters != list(range(1, self.m + 1)):
            raise InputError(f"orbits {orbits} do not partition 1..{self.m}")
        object.__setattr__(self, "orbits", orbits)

    @classmethod
    def from_blocks(cls, m, blocks):
        return cls(m, tuple(tuple(y + 1 for y in b) for b in blocks))

    @classmethod
    def parse(cls, text, m):
        """``"1 2 | 3 4"`` style."""
        return cls(m, tuple(tuple(int(t) for t in part.split()) for part in text.split("|")))

    @property
    def s(self):
        return len(self.orbits)

    @property
    def orbit_type(self):
        return tuple(len(o) for o in self.orbits)

    @property
    def blocks(self):
        """Orbits with 0-based letters."""
        return tuple(tuple(y - 1 for y in o) for o in self.orbits)

    def block_of(self, y0):
        """Index (0-based) of the orbit containing the 0-based letter ``y0``."""
        for i, b in enumerate(self.blocks):
            if y0 in b:
                return i
        raise InputError(f"letter {y0 + 1} not in partition")

    def preserved_by(self, perm):
        p = perm.images if isinstance(perm, Permutation) else perm
        return all({p[y] for y in b} == set(b) for b in self.blocks)

    def is_consecutive(self):
        flat = [y for o in self.orbits for y in o]
        return flat == list(range(1, self.m + 1))

    def relabeling(self):
        """Permutation moving each orbit onto a consecutive block, orbits kept in order.

        Conjugating by it puts a group into the layout O_(1) = {1..m_1}, ...
        """
        flat = [y - 1 for o in self.orbits for y in o]
        images = [0] * self.m
        for new, old in enumerate(flat):
            images[old] = new
        return Permutation(images)

    def __str__(self):
        return " | ".join(" ".join(map(str, o)) for o in self.orbits)


@dataclass(frozen=True)
class PermGroup:
    m: int
    generators: tuple
    _elements: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g) for g in self.generators)
        for g in gens:
            if g.m != self.m:
                raise InputError("generator on a different alphabet")
        object.__setattr__(self, "generators", gens)

    def elements(self):
        """Sorted tuple of all elements (BFS closure)."""
        if self._elements is None:
            if self.m > ENUM_GUARD:
                raise SizeError(f"refusing to enumerate a subgroup of Sym({self.m}) (guard m <= {ENUM_GUARD})")
            ident = Permutation.identity(self.m)
            seen = {ident}
            queue = deque([ident])
            while queue:
                x = queue.popleft()
                for g in self.generators:
                    y = x * g
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            object.__setattr__(self, "_elements", tuple(sorted(seen)))
        return self._elements

    def order(self):
        return len(self.elements())

    def __contains__(self, perm):
        return perm in set(self.elements())

    def is_abelian(self):
        return all(g * h == h * g for g in self.generators for h in self.generators)

    def same_elements(self, other):
        return self.m == other.m and set(self.elements()) == set(other.elements())

    def __str__(self):
        if not self.generators:
            return "<>"
        return "<" + ", ".join(g.cycle_str() for g in self.generators) + ">"


def trivial_group(m):
    return PermGroup(m, ())


def symmetric_group(m):
    if m == 1:
        return PermGroup(1, ())
    gens = [Permutation.from_cycles("(1 2)", m)]
    if m > 2:
        gens.append(Permutation.from_cycles("(" + " ".join(map(str, range(1, m + 1))) + ")", m))
    return PermGroup(m, tuple(gens))


def activity_group(gens):
    """P(G): the group generated by root permutations of the given automorphisms."""
    gens = list(gens)
    if not gens:
        raise InputError("empty generator list")
    m = gens[0].m
    if any(g.m != m for g in gens):
        raise InputError("generators on different alphabets")
    perms = []
    for g in gens:
        p = Permutation(g.perm)
        if not p.is_identity() and p not in perms:
            perms.append(p)
    return PermGroup(m, tuple(perms))


def orbits(P):
    """Orbits of P on {1..m}, ordered by minimal element. Needs no enumeration."""
    parent = list(range(P.m))

    def find(y):
        while parent[y] != y:
            parent[y] = parent[parent[y]]
            y = parent[y]
        return y

    for g in P.generators:
        for y, z in enumerate(g.images):
            a, b = find(y), find(z)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for y in range(P.m):
        groups.setdefault(find(y), []).append(y)
    return OrbitPartition.from_blocks(P.m, groups.values())


def permutation_type(P, partition=None):
    """Projections P_(i) of P onto each orbit, as subgroups of Sym(m) supported on O_(i)."""
    partition = partition or orbits(P)
    factors = []
    for block in partition.blocks:
        gens = []
        for g in P.generators:
            img = projection(g, block)
            if not img.is_identity() and img not in gens:
                gens.append(img)
        factors.append(PermGroup(P.m, tuple(gens)))
    return factors


def projection(perm, block):
    """sigma_(i): the permutation acting as ``perm`` on ``block`` and fixing everything else."""
    p = perm.images if isinstance(perm, Permutation) else perm
    images = list(range(len(p)))
    for y in block:
        images[y] = p[y]
    return Permutation(images)


def is_subdirect(P, partition=None):
    """P embeds in the product of the P_(i) and maps onto each factor."""
    partition = partition or orbits(P)
    factors = permutation_type(P, partition)
    elems = P.elements()
    for block, F in zip(partition.blocks, factors):
        if {projection(g, block) for g in elems} != set(F.elements()):
            return False
    # an element is recovered from its projections: the product of projections equals it
    for g in elems:
        prod = Permutation.identity(P.m)
        for block in partition.blocks:
            prod = prod * projection(g, block)
        if prod != g:
            return False
    return True


def is_transitive(P, letters=None):
    """Transitive on all of 1..m, or on the given 1-based letters."""
    part = orbits(P)
    if letters is None:
        return part.s == 1
    letters = set(letters)
    return any(set(o) == letters for o in part.orbits)


def is_rigid(xi, partition):
    """xi permutes the orbits and preserves the internal order of each."""
    p = xi.images if isinstance(xi, Permutation) else xi
    blocks = partition.blocks
    for b in blocks:
        image = [p[y] for y in b]
        target = next((c for c in blocks if image[0] in c), None)
        if target is None or len(target) != len(b) or list(target) != image:
            return False
    return True


def rigid_group(partition):
    """S(Q): rigid permutations; generated by order-preserving swaps of equal-length orbits."""
    blocks = partition.blocks
    m = partition.m
    gens = []
    for i, j in ((i, j) for i in range(len(blocks)) for j in range(i + 1, len(blocks))):
        if len(blocks[i]) != len(blocks[j]):
            continue
        # adjacent-in-size-class transpositions suffice, but all pairs are harmless
        images = list(range(m))
        for a, b in zip(blocks[i], blocks[j]):
            images[a], images[b] = b, a
        gens.append(Permutation(images))
    return PermGroup(m, tuple(gens))


def centralizer_sym_brute(Q):
    """All g in Sym(m) commuting with every generator of Q, by exhaustion."""
    if Q.m > ENUM_GUARD:
        raise SizeError(f"brute-force centralizer refused for m = {Q.m}")
    gens = Q.generators
    out = []
    for images in permutations(range(Q.m)):
        g = Permutation(images)
        if all(g * q == q * g for q in gens):
            out.append(g)
    return out


def centralizer_sym(Q, brute=False):
    """C_{Sym(m)}(Q) as an enumerated PermGroup.

    The structured path uses that a centralizing c is determined on an orbit by
    the image of one base point: ``(p^g)c = (pc)^g``.  It runs for any m up to
    32 provided Q itself is small enough to enumerate.
    """
    if brute:
        elems = centralizer_sym_brute(Q)
        return _group_from_elements(Q.m, elems)
    if Q.m > 32:
        raise SizeError("centralizer_sym guard is m <= 32")
    elems = _centralizer_structured(Q)
    return _group_from_elements(Q.m, elems)


def _orbit_maps(Q, block):
    """For base point block[0]: dict letter -> some element g (as image tuple) with base^g = letter."""
    base = block[0]
    reach = {base: tuple(range(Q.m))}
    queue = deque([base])
    while queue:
        y = queue.popleft()
        for g in Q.generators:
            z = g.images[y]
            if z not in reach:
                w = reach[y]
                reach[z] = tuple(g.images[w[i]] for i in range(Q.m))
                queue.append(z)
    return reach


def _centralizer_structured(Q):
    m = Q.m
    part = orbits(Q)
    blocks = part.blocks
    elems = [e.images for e in Q.elements()] if Q.generators else [tuple(range(m))]
    stabs = []
    for b in blocks:
        stabs.append(frozenset(g for g in elems if g[b[0]] == b[0]))
    maps = [_orbit_maps(Q, b) for b in blocks]

    def point_stab(y):
        return frozenset(g for g in elems if g[y] == y)

    # choices per orbit: (target orbit index, image point of the base)
    choices = []
    for i, b in enumerate(blocks):
        opts = []
        for j, c in enumerate(blocks):
            if len(c) != len(b):
                continue
            for q in c:
                if point_stab(q) == stabs[i]:
                    opts.append((j, q))
        choices.append(opts)
    result = []
    for pick in product(*choices):
        targets = [j for j, _ in pick]
        if len(set(targets)) != len(targets):
            continue
        images = [None] * m
        ok = True
        for i, (j, q) in enumerate(pick):
            for y, g in maps[i].items():
                z = g[q]
                if images[y] is None:
                    images[y] = z
                elif images[y] != z:
                    ok = False
                    break
            if not ok:
                break
        if not ok or sorted(images) != list(range(m)):
            continue
        c = Permutation(images)
        if all(c * g == g * c for g in Q.generators):
            result.append(c)
    return result


def _group_from_elements(m, elems):
    elems = sorted(set(elems))
    # greedy generating set
    gens = []
    span = {Permutation.identity(m)}
    for g in elems:
        if g in span:
            continue
        gens.append(g)
        span = set(PermGroup(m, tuple(gens)).elements())
    grp = PermGroup(m, tuple(gens))
    object.__setattr__(grp, "_elements", tuple(elems))
    return grp
