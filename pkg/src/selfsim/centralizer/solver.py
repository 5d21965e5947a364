"""Level-wise solver for systems ``u^c = v`` over depth-truncated portraits.

A centralizer is the special case where every pair is ``(x, x)``.  Writing
``c = (c_1, ..., c_m) pi``, the relation ``u c = c v`` holds iff
``sigma(u) pi = pi sigma(v)`` and ``u_y c_{(y)sigma(u)} = c_y v_{(y)pi}`` for every
letter y.  The second family propagates c_y along the orbits of the
sigma(u)'s: on each orbit every c_y is ``L_y^{-1} c_b R_y`` for the base point b,
and each closed loop adds a new pair ``(L, R)`` that c_b itself must satisfy
one level down.  Subproblems are memoized on (pair set, depth).
"""

from __future__ import annotations

from itertools import permutations, product

from ..errors import ResourceError, SizeError
from ..treecore.portrait import LEAF, tree_identity, tree_inv, tree_mul, tree_pow, tree_truncate
from .truncated import ENUM_LIMIT, TruncatedGroup, as_tree, trees_of

SOLVER_BUDGET = 2_000_000
ROOT_ENUM_MAX_M = 8


def _pmul(p, q):
    return tuple(q[i] for i in p)


class PairSolver:
    """Shared memo for all subproblems on one alphabet."""

    def __init__(self, m, budget=SOLVER_BUDGET, limit=ENUM_LIMIT):
        if m > ROOT_ENUM_MAX_M:
            raise SizeError(f"level-wise solver enumerates Sym(m); guard m <= {ROOT_ENUM_MAX_M}")
        self.m = m
        self.budget = budget
        self.limit = limit
        self.calls = 0
        self._perms = list(permutations(range(m)))
        self._roots = {}
        self._expand = {}
        self._count = {}
        self._enum = {}
        self._one = {}
        self._inv = {}

    # -- helpers
    def _tick(self):
        self.calls += 1
        if self.calls > self.budget:
            raise ResourceError(f"solver budget of {self.budget} subproblems exhausted")

    def _invert(self, t):
        hit = self._inv.get(t)
        if hit is None:
            hit = self._inv[t] = tree_inv(t)
        return hit

    def normalize(self, pairs, depth):
        ident = tree_identity(self.m, depth)
        out = {(u, v) for u, v in pairs if not (u == ident and v == ident)}
        return tuple(sorted(out))

    def roots(self, pairs):
        key = tuple(sorted({(u[0], v[0]) for u, v in pairs}))
        hit = self._roots.get(key)
        if hit is None:
            hit = [p for p in self._perms if all(_pmul(pu, p) == _pmul(p, pv) for pu, pv in key)]
            self._roots[key] = hit
        return hit

    def expand(self, pairs, depth, pi):
        """Orbit data for root ``pi``: list of (base, {y: (L_y, R_y)}, subpairs)."""
        key = (pairs, depth, pi)
        hit = self._expand.get(key)
        if hit is not None:
            return hit
        m = self.m
        ident = tree_identity(m, depth - 1)
        seen = set()
        out = []
        for b in range(m):
            if b in seen:
                continue
            members = {b: (ident, ident)}
            queue = [b]
            sub = set()
            while queue:
                y = queue.pop()
                Ly, Ry = members[y]
                for u, v in pairs:
                    z = u[0][y]
                    L2 = tree_mul(Ly, u[1][y])
                    R2 = tree_mul(Ry, v[1][pi[y]])
                    if z in members:
                        Lz, Rz = members[z]
                        sub.add((tree_mul(L2, self._invert(Lz)), tree_mul(R2, self._invert(Rz))))
                    else:
                        members[z] = (L2, R2)
                        queue.append(z)
            seen.update(members)
            out.append((b, members, self.normalize(sub, depth - 1)))
        self._expand[key] = out
        return out

    def _assemble(self, pi, orbit_data, picks):
        kids = [None] * self.m
        for (b, members, _), cb in zip(orbit_data, picks):
            for y, (L, R) in members.items():
                kids[y] = tree_mul(tree_mul(self._invert(L), cb), R) if y != b else cb
        return (pi, tuple(kids))

    # -- the three queries
    def count(self, pairs, depth, roots=None):
        if depth == 0:
            return 1
        key = (pairs, depth)
        if roots is None and key in self._count:
            return self._count[key]
        self._tick()
        total = 0
        for pi in self.roots(pairs):
            if roots is not None and pi not in roots:
                continue
            n = 1
            for _, _, sub in self.expand(pairs, depth, pi):
                n *= self.count(sub, depth - 1)
                if n == 0:
                    break
            total += n
        if roots is None:
            self._count[key] = total
        return total

    def enumerate(self, pairs, depth, roots=None):
        if depth == 0:
            return [LEAF]
        key = (pairs, depth)
        if roots is None and key in self._enum:
            return self._enum[key]
        n = self.count(pairs, depth, roots)
        if n > self.limit:
            raise SizeError(f"{n} solutions at depth {depth} exceed the enumeration limit {self.limit}")
        self._tick()
        out = []
        for pi in self.roots(pairs):
            if roots is not None and pi not in roots:
                continue
            data = self.expand(pairs, depth, pi)
            subs = [self.enumerate(sub, depth - 1) for _, _, sub in data]
            if any(not s for s in subs):
                continue
            for picks in product(*subs):
                out.append(self._assemble(pi, data, picks))
        if roots is None:
            self._enum[key] = out
        return out

    def project(self, pairs, depth, keep):
        """Truncations to ``keep`` levels of the solutions at ``depth`` (keep <= depth).

        Truncation is a homomorphism, so only the top ``keep`` levels are ever
        assembled; below that only existence (a nonzero count) matters.
        """
        if keep == 0:
            return [LEAF] if self.count(pairs, depth) else []
        key = ("proj", pairs, depth, keep)
        hit = self._enum.get(key)
        if hit is not None:
            return hit
        self._tick()
        out = set()
        for pi in self.roots(pairs):
            data = self.expand(pairs, depth, pi)
            subs = [self.project(sub, depth - 1, keep - 1) for _, _, sub in data]
            if any(not s for s in subs):
                continue
            cut = [(b, {y: (tree_truncate(L, keep - 1), tree_truncate(R, keep - 1)) for y, (L, R) in mem.items()}, sub)
                   for b, mem, sub in data]
            for picks in product(*subs):
                out.add(self._assemble(pi, cut, picks))
                if len(out) > self.limit:
                    raise SizeError(f"projected solution set exceeds {self.limit}")
        out = sorted(out)
        self._enum[key] = out
        return out

    def one(self, pairs, depth, roots=None):
        if depth == 0:
            return LEAF
        key = (pairs, depth)
        if roots is None and key in self._one:
            return self._one[key]
        self._tick()
        found = None
        for pi in self.roots(pairs):
            if roots is not None and pi not in roots:
                continue
            data = self.expand(pairs, depth, pi)
            picks = []
            for _, _, sub in data:
                c = self.one(sub, depth - 1)
                if c is None:
                    break
                picks.append(c)
            else:
                found = self._assemble(pi, data, picks)
                break
        if roots is None:
            self._one[key] = found
        return found


_SOLVERS = {}


def solver_for(m):
    if m not in _SOLVERS:
        _SOLVERS[m] = PairSolver(m)
    return _SOLVERS[m]


def centralizer_levelwise(X, m, depth, enumerate_limit=ENUM_LIMIT, solver=None):
    """Centralizer of X modulo Stab(depth), enumerated when it fits under the limit."""
    solver = solver or solver_for(m)
    xs = trees_of(X, m, depth)
    pairs = solver.normalize([(x, x) for x in xs], depth)
    n = solver.count(pairs, depth)

    def member(t):
        return all(tree_mul(t, x) == tree_mul(x, t) for x in xs)

    if n <= enumerate_limit:
        return TruncatedGroup(m, depth, frozenset(solver.enumerate(pairs, depth)), known_order=n, member=member)
    return TruncatedGroup(m, depth, None, known_order=n, member=member)


def centralizer_projected(X, m, depth, lookahead, solver=None):
    """Truncations to ``depth`` of the centralizer of X computed at ``depth + lookahead``.

    X holds automorphisms (their portraits are taken at the deeper level).
    Elements that do not extend ``lookahead`` further levels are discarded.
    """
    solver = solver or solver_for(m)
    deep = depth + lookahead
    xs = trees_of(X, m, deep)
    pairs = solver.normalize([(x, x) for x in xs], deep)
    elems = solver.project(pairs, deep, depth)
    xs_top = [tree_truncate(x, depth) for x in xs]

    def member(t):
        return all(tree_mul(t, x) == tree_mul(x, t) for x in xs_top)

    return TruncatedGroup(m, depth, frozenset(elems), member=member)


def find_conjugator(u, v, m, depth, roots=None, solver=None):
    """Some c with u^c = v modulo Stab(depth), or None when no such c exists at this depth."""
    solver = solver or solver_for(m)
    pairs = solver.normalize([(as_tree(u, m, depth), as_tree(v, m, depth))], depth)
    if not pairs:
        return tree_identity(m, depth)
    return solver.one(pairs, depth, roots)


def solve_pairs(pairs, m, depth, roots=None, solver=None):
    """All c with u^c = v for every (u, v) in ``pairs``."""
    solver = solver or solver_for(m)
    pairs = solver.normalize([(as_tree(u, m, depth), as_tree(v, m, depth)) for u, v in pairs], depth)
    return solver.enumerate(pairs, depth, roots)


def count_pairs(pairs, m, depth, roots=None, solver=None):
    solver = solver or solver_for(m)
    pairs = solver.normalize([(as_tree(u, m, depth), as_tree(v, m, depth)) for u, v in pairs], depth)
    return solver.count(pairs, depth, roots)


def conjugator_unit_power(a, xi, depth, solver=None):
    """g with (a^xi)^g = a modulo Stab(depth); None certifies non-conjugacy at this depth.

    Raises ResourceError when the search budget runs out, which is not the same
    as a negative answer.
    """
    m = a.m
    t = as_tree(a, m, depth)
    return find_conjugator(tree_pow(t, xi, m, depth), t, m, depth, solver=solver)
