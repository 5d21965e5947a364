"""Finite and lazy automata, and automorphisms of the m-ary tree built on them.

An automorphism is a pair (automaton, state).  Each state q carries a root
permutation and m child states, i.e. the wreath recursion
``alpha = (alpha_1, ..., alpha_m) sigma``.  The action is on the right:
``act(alpha * beta, w) == act(beta, act(alpha, w))``.

Every constructor in this module builds a lazy rule first.  When all the
ingredients are finite the rule is explored by reachability and collapsed to a
canonical minimized finite automaton, so finite automorphisms compare by
bisimulation.
"""

from __future__ import annotations

import threading
from collections import deque

from ..errors import InputError, ResourceError, StateExplosionError
from .permutation import Permutation

DEFAULT_STATE_BOUND = 100_000
DEFAULT_MEMO_BUDGET = 1_000_000


def _raw(perm):
    return perm.images if isinstance(perm, Permutation) else tuple(perm)


def _is_id_perm(p):
    return all(i == y for y, i in enumerate(p))


class Automaton:
    """A finite automaton over the alphabet {1..m} with indexed states."""

    is_finite = True

    def __init__(self, m, perms, children, names=None, identity=None):
        perms = [_raw(p) for p in perms]
        children = [tuple(int(c) for c in kids) for kids in children]
        if len(perms) != len(children):
            raise InputError("perms and children differ in length")
        n = len(perms)
        for q in range(n):
            if sorted(perms[q]) != list(range(m)):
                raise InputError(f"state {q}: perm is not a bijection of 1..{m}")
            if len(children[q]) != m or not all(0 <= c < n for c in children[q]):
                raise InputError(f"state {q}: bad child list {children[q]}")
        names = list(names) if names is not None else [f"q{q}" for q in range(n)]
        if identity is None:
            identity = next(
                (q for q in range(n)
                 if _is_id_perm(perms[q]) and all(c == q for c in children[q])),
                None,
            )
            if identity is None:
                identity = n
                perms.append(tuple(range(m)))
                children.append((n,) * m)
                names.append("e")
        elif not (_is_id_perm(perms[identity])
                  and all(c == identity for c in children[identity])):
            raise InputError("declared identity state is not trivial")
        self.m = m
        self.perms = tuple(perms)
        self.children = tuple(children)
        self.names = tuple(names)
        self.identity = identity

    def node(self, q):
        return self.perms[q], self.children[q]

    def name(self, q):
        return self.names[q]

    def __len__(self):
        return len(self.perms)

    def state(self, which):
        """Automorphism at a state given by index or name."""
        if isinstance(which, str):
            try:
                which = self.names.index(which)
            except ValueError:
                raise InputError(f"no state named {which!r}") from None
        return Automorphism(self, which)

    def __repr__(self):
        return f"Automaton(m={self.m}, states={len(self)})"


class LazyAutomaton:
    """Automaton whose states are produced on demand by ``rule(id) -> (perm, child ids)``.

    Evaluations are memoized under a lock, so concurrent readers always see
    the same data for an id.  ``budget`` caps the number of distinct ids ever
    evaluated.
    """

    is_finite = False

    def __init__(self, m, rule, identity, namer=None, budget=DEFAULT_MEMO_BUDGET):
        self.m = m
        self.rule = rule
        self.identity = identity
        self.namer = namer
        self.budget = budget
        self._memo = {identity: (tuple(range(m)), (identity,) * m)}
        self._lock = threading.Lock()

    def node(self, q):
        hit = self._memo.get(q)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._memo.get(q)
            if hit is not None:
                return hit
            if len(self._memo) >= self.budget:
                raise ResourceError(f"lazy automaton memo budget {self.budget} exhausted")
            perm, kids = self.rule(q)
            perm = _raw(perm)
            kids = tuple(kids)
            if len(perm) != self.m or len(kids) != self.m:
                raise InputError(f"rule for {q!r} returned data of the wrong arity")
            self._memo[q] = (perm, kids)
            return perm, kids

    def name(self, q):
        if q == self.identity:
            return "e"
        nm = self.namer(q) if self.namer else None
        return nm if nm else str(q)

    def __repr__(self):
        return f"LazyAutomaton(m={self.m}, evaluated={len(self._memo)})"


class Automorphism:
    """A tree automorphism given by an automaton and an initial state."""

    __slots__ = ("automaton", "state", "_key")

    def __init__(self, automaton, state):
        self.automaton = automaton
        self.state = state
        self._key = None

    @property
    def m(self):
        return self.automaton.m

    @property
    def is_finite(self):
        return self.automaton.is_finite

    @property
    def perm(self):
        """Root permutation as a raw 0-based tuple."""
        return self.automaton.node(self.state)[0]

    @property
    def permutation(self):
        return Permutation(self.perm)

    @property
    def name(self):
        return self.automaton.name(self.state)

    def child(self, y):
        """Section at the 0-based letter ``y``."""
        return Automorphism(self.automaton, self.automaton.node(self.state)[1][y])

    def sections(self):
        kids = self.automaton.node(self.state)[1]
        return tuple(Automorphism(self.automaton, c) for c in kids)

    def section(self, word):
        return section(self, word)

    def is_identity(self):
        if self.is_finite:
            return self.key() == identity(self.m).key()
        raise InputError("identity test on a lazy automorphism needs a depth; use equal_at_depth")

    def key(self):
        """Canonical form of the minimized automaton (finite-state only)."""
        if self._key is None:
            if not self.is_finite:
                raise InputError("canonical key requested for a lazy automorphism")
            self._key = _canonical(self.automaton, self.state)[0]
        return self._key

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, n):
        return power(self, n)

    def __invert__(self):
        return inverse(self)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        if self.is_finite and other.is_finite:
            return self.key() == other.key()
        return self.automaton is other.automaton and self.state == other.state

    def __hash__(self):
        if self.is_finite:
            return hash(self.key())
        return hash((id(self.automaton), self.state))

    def __repr__(self):
        kind = "" if self.is_finite else "lazy "
        return f"<{kind}automorphism {self.name} on T_{self.m}>"


# ---------------------------------------------------------------- canonical forms


def _explore(automaton, start, bound):
    """Reachable states from ``start`` in BFS order (letters in order)."""
    order = [start]
    index = {start: 0}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for c in automaton.node(q)[1]:
            if c not in index:
                if len(order) >= bound:
                    raise StateExplosionError(
                        f"more than {bound} states reachable; not finite-state within the bound"
                    )
                index[c] = len(order)
                order.append(c)
                queue.append(c)
    return order, index


def _refine(perms, children):
    """Moore partition refinement; returns a block id per state."""
    ids = {}
    block = [ids.setdefault(p, len(ids)) for p in perms]
    count = len(ids)
    while True:
        ids = {}
        new = [
            ids.setdefault((block[q], tuple(block[c] for c in children[q])), len(ids))
            for q in range(len(perms))
        ]
        if len(ids) == count:
            return new
        block, count = new, len(ids)


def _canonical(automaton, start, bound=DEFAULT_STATE_BOUND):
    """Minimize the part reachable from ``start`` and renumber by BFS.

    Returns ``(key, reps)`` where ``key`` is a hashable canonical description
    and ``reps[i]`` is an original state id for canonical state ``i``.
    """
    order, index = _explore(automaton, start, bound)
    perms = [automaton.node(q)[0] for q in order]
    children = [[index[c] for c in automaton.node(q)[1]] for q in order]
    block = _refine(perms, children)
    rep_of_block = {}
    for i, b in enumerate(block):
        rep_of_block.setdefault(b, i)
    canon = {block[0]: 0}
    seq = [block[0]]
    k = 0
    while k < len(seq):
        i = rep_of_block[seq[k]]
        for c in children[i]:
            b = block[c]
            if b not in canon:
                canon[b] = len(seq)
                seq.append(b)
        k += 1
    key_rows = []
    for b in seq:
        i = rep_of_block[b]
        key_rows.append((perms[i], tuple(canon[block[c]] for c in children[i])))
    reps = [order[rep_of_block[b]] for b in seq]
    return (automaton.m, tuple(key_rows)), reps


def _finalize(automaton, start, bound=DEFAULT_STATE_BOUND, namer=None):
    """Collapse the part of ``automaton`` reachable from ``start`` to a canonical finite automaton."""
    (m, rows), reps = _canonical(automaton, start, bound)
    perms = [r[0] for r in rows]
    children = [r[1] for r in rows]
    names = []
    used = set()
    for i, q in enumerate(reps):
        trivial = _is_id_perm(perms[i]) and all(c == i for c in children[i])
        if trivial:
            nm = "e"
        else:
            nm = namer(q) if namer else automaton.name(q)
            if not isinstance(nm, str) or nm == "e" or nm in used:
                nm = f"q{i}"
        used.add(nm)
        names.append(nm)
    fin = Automaton(m, perms, children, names)
    aut = Automorphism(fin, 0)
    aut._key = (m, rows)
    return aut


def _tmp_namer(q):
    return q if isinstance(q, str) else None


def _build(m, rule, start, finite, namer=None, bound=DEFAULT_STATE_BOUND):
    lazy = LazyAutomaton(m, rule, ("e",), namer=namer)
    if finite:
        return _finalize(lazy, start, bound, namer=namer or _tmp_namer)
    return Automorphism(lazy, start)


# ---------------------------------------------------------------- constructors


_IDENTITY = {}


def identity(m):
    if m not in _IDENTITY:
        _IDENTITY[m] = Automorphism(Automaton(m, [tuple(range(m))], [(0,) * m], ["e"], 0), 0)
    return _IDENTITY[m]


def from_recursion(m, table, init, names_lazy=False):
    """Build a finite automorphism from ``{name: (perm, [child names])}``.

    ``perm`` may be a :class:`Permutation`, a 0-based tuple, or cycle text.
    The name ``e`` is reserved for the identity and may be omitted.
    """
    names = list(table)
    if "e" in table:
        raise InputError("state name 'e' is reserved for the identity")
    names.append("e")
    index = {nm: i for i, nm in enumerate(names)}
    perms, children = [], []
    for nm in names[:-1]:
        perm, kids = table[nm]
        if isinstance(perm, str):
            perm = Permutation.parse(perm, m)
        if len(kids) != m:
            raise InputError(f"state {nm}: expected {m} children")
        try:
            children.append(tuple(index[k] for k in kids))
        except KeyError as exc:
            raise InputError(f"state {nm}: unknown child {exc.args[0]!r}") from None
        perms.append(_raw(perm))
    perms.append(tuple(range(m)))
    children.append((index["e"],) * m)
    aut = Automaton(m, perms, children, names, identity=index["e"])
    return _finalize(aut, index[init])


def from_rule(m, rule, start, identity_id, namer=None, try_finite=False, bound=DEFAULT_STATE_BOUND):
    """Automorphism given by a deterministic rule ``id -> (perm, child ids)``.

    With ``try_finite`` the reachable part is explored (up to ``bound`` states)
    and replaced by its canonical finite automaton.
    """
    lazy = LazyAutomaton(m, rule, identity_id, namer=namer)
    if try_finite:
        return _finalize(lazy, start, bound, namer=namer)
    return Automorphism(lazy, start)


class PowerAutomaton(LazyAutomaton):
    """States are the integer powers of ``a = (a^{i_1}, ..., a^{i_m}) sigma``; state n is a^n."""

    def __init__(self, perm, exponents, name="a", budget=DEFAULT_MEMO_BUDGET):
        perm = _raw(perm)
        m = len(perm)
        if len(exponents) != m:
            raise InputError(f"expected {m} exponents, got {len(exponents)}")
        if sorted(perm) != list(range(m)):
            raise InputError("not a permutation")
        self.base_perm = perm
        self.exponents = tuple(int(i) for i in exponents)
        self.base_name = name
        # each letter's cycle under sigma and prefix sums of exponents along it
        self._cycle = {}
        for y in range(m):
            cyc = [y]
            while perm[cyc[-1]] != y:
                cyc.append(perm[cyc[-1]])
            pref = [0]
            for z in cyc:
                pref.append(pref[-1] + self.exponents[z])
            self._cycle[y] = (cyc, pref)
        super().__init__(m, self._rule, 0, namer=self._name, budget=budget)

    def exponent(self, y, n):
        """Exponent of the section of a^n at the 0-based letter y."""
        cyc, pref = self._cycle[y]
        L, J = len(cyc), pref[-1]
        if n >= 0:
            q, r = divmod(n, L)
            return q * J + pref[r]
        q, r = divmod(-n, L)
        # the predecessors of y along the cycle, r of them
        back = J - pref[L - r] if r else 0
        return -(q * J + back)

    def _rule(self, n):
        cyc_perm = list(range(self.m))
        for y in range(self.m):
            cyc, _ = self._cycle[y]
            cyc_perm[y] = cyc[n % len(cyc)]
        return tuple(cyc_perm), tuple(self.exponent(y, n) for y in range(self.m))

    def _name(self, n):
        return self.base_name if n == 1 else f"{self.base_name}^{n}"


def power_recursion(perm, exponents, name="a"):
    """The automorphism ``a = (a^{i_1}, ..., a^{i_m}) sigma`` as a lazy automaton over powers of a."""
    if isinstance(perm, str):
        perm = Permutation.parse(perm, len(exponents))
    return Automorphism(PowerAutomaton(perm, exponents, name), 1)


def wreath(perm, sections, name=None):
    """The automorphism ``(sections[0], ..., sections[m-1]) perm``."""
    sections = list(sections)
    m = len(sections)
    perm = _raw(perm)
    if len(perm) != m or sorted(perm) != list(range(m)):
        raise InputError("root permutation does not match the number of sections")
    for s in sections:
        if s.m != m:
            raise InputError("sections on a different alphabet")
    autos = []
    for s in sections:
        if not any(a is s.automaton for a in autos):
            autos.append(s.automaton)
    slot = {id(a): k for k, a in enumerate(autos)}
    root = ("root",)
    root_kids = tuple(
        ("e",) if s.state == s.automaton.identity else (slot[id(s.automaton)], s.state)
        for s in sections
    )

    def rule(q):
        if q == root:
            return perm, root_kids
        k, sid = q
        a = autos[k]
        p, kids = a.node(sid)
        return p, tuple(("e",) if c == a.identity else (k, c) for c in kids)

    def namer(q):
        if q == root:
            return name
        k, sid = q
        return autos[k].name(sid)

    finite = all(s.is_finite for s in sections)
    return _build(m, rule, root, finite, namer=namer)


def compose(alpha, beta):
    """Product ``alpha * beta`` (first alpha, then beta)."""
    if alpha.m != beta.m:
        raise InputError(f"cannot compose automorphisms of T_{alpha.m} and T_{beta.m}")
    A, B = alpha.automaton, beta.automaton
    m = alpha.m

    def rule(q):
        p, r = q[1], q[2]
        pp, pk = A.node(p)
        rp, rk = B.node(r)
        perm = tuple(rp[i] for i in pp)
        kids = []
        for y in range(m):
            a, b = pk[y], rk[pp[y]]
            kids.append(("e",) if a == A.identity and b == B.identity else ("*", a, b))
        return perm, tuple(kids)

    start = ("*", alpha.state, beta.state)
    return _build(m, rule, start, alpha.is_finite and beta.is_finite)


def inverse(alpha):
    """``alpha^{-1}``; sections follow ``(alpha^{-1})_y = (alpha_{(y)sigma^{-1}})^{-1}``."""
    A = alpha.automaton
    m = alpha.m

    def rule(q):
        p, kids = A.node(q[1])
        inv = [0] * m
        for y, z in enumerate(p):
            inv[z] = y
        return tuple(inv), tuple(
            ("e",) if kids[inv[y]] == A.identity else ("inv", kids[inv[y]]) for y in range(m)
        )

    def namer(q):
        nm = A.name(q[1])
        return f"{nm}^-1"

    return _build(m, rule, ("inv", alpha.state), alpha.is_finite, namer=namer)


def power(alpha, n):
    if n < 0:
        return power(inverse(alpha), -n)
    result = identity(alpha.m)
    base = alpha
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def conjugate(b, r):
    """``b^r = r^{-1} b r``."""
    return compose(compose(inverse(r), b), r)


def commutator(a, b):
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


# ---------------------------------------------------------------- queries


def parse_word(word, m):
    """Normalize a vertex word (string ``"2 1"`` or sequence of 1-based letters) to 0-based."""
    if isinstance(word, str):
        toks = word.replace(",", " ").split()
    else:
        toks = list(word)
    out = []
    for t in toks:
        y = int(t)
        if not 1 <= y <= m:
            raise InputError(f"letter {y} outside 1..{m}")
        out.append(y - 1)
    return tuple(out)


def act(alpha, word):
    """Image of a vertex word; letters are 1-based in and out."""
    w = parse_word(word, alpha.m)
    A = alpha.automaton
    q = alpha.state
    out = []
    for y in w:
        p, kids = A.node(q)
        out.append(p[y] + 1)
        q = kids[y]
    return tuple(out)


def section(alpha, word):
    w = parse_word(word, alpha.m)
    A = alpha.automaton
    q = alpha.state
    for y in w:
        q = A.node(q)[1][y]
    return Automorphism(A, q)


def finite(alpha, bound=DEFAULT_STATE_BOUND):
    """Minimized finite-state version of ``alpha``; lazy inputs are explored up to ``bound`` states."""
    if alpha.is_finite and alpha._key is not None and alpha.state == 0:
        return alpha
    return _finalize(alpha.automaton, alpha.state, bound)


def states(alpha, bound=DEFAULT_STATE_BOUND):
    """The set Q(alpha) of bisimulation-distinct sections of alpha."""
    return frozenset(state_list(alpha, bound))


def state_list(alpha, bound=DEFAULT_STATE_BOUND):
    """Q(alpha) in canonical BFS order, alpha first."""
    fin = finite(alpha, bound)
    order, _ = _explore(fin.automaton, fin.state, bound)
    return [Automorphism(fin.automaton, q) for q in order]


def minimize(automaton):
    """Quotient of a finite automaton by bisimulation (all states kept, names of first representatives)."""
    if not automaton.is_finite:
        raise InputError("minimize needs a finite automaton")
    block = _refine(list(automaton.perms), [list(c) for c in automaton.children])
    first = {}
    for q, b in enumerate(block):
        first.setdefault(b, q)
    order = sorted(first.values())
    new_index = {block[q]: i for i, q in enumerate(order)}
    perms = [automaton.perms[q] for q in order]
    children = [tuple(new_index[block[c]] for c in automaton.children[q]) for q in order]
    names = [automaton.names[q] for q in order]
    ident = new_index[block[automaton.identity]]
    names[ident] = "e"
    return Automaton(automaton.m, perms, children, names, identity=ident)


def equal(alpha, beta):
    """Bisimulation equality of finite-state automorphisms."""
    if not (alpha.is_finite and beta.is_finite):
        raise InputError("equal() needs finite-state automorphisms; use equal_at_depth")
    return alpha.key() == beta.key()


def equal_at_depth(alpha, beta, depth):
    """True iff alpha and beta induce the same permutation of every level below ``depth``."""
    if alpha.m != beta.m:
        return False
    if depth <= 0:
        return True
    A, B = alpha.automaton, beta.automaton
    best = {}
    stack = [(alpha.state, beta.state, depth)]
    while stack:
        p, q, d = stack.pop()
        if best.get((p, q), 0) >= d:
            continue
        best[(p, q)] = d
        pp, pk = A.node(p)
        qp, qk = B.node(q)
        if pp != qp:
            return False
        if d > 1:
            for y in range(alpha.m):
                stack.append((pk[y], qk[y], d - 1))
    return True


def is_trivial_at_depth(alpha, depth):
    return equal_at_depth(alpha, identity(alpha.m), depth)
