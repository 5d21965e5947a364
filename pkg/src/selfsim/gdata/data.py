"""G-data over free abelian groups of finite rank and the representations they induce.

G = Z^n acts on the disjoint union of the coset spaces Z^n / H_i: letter (i, k)
is the coset H_i + t_k.  An element g sends it to the coset of t_k + g, with
representative t', and leaves behind the section phi(f_i(t_k + g - t')).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InputError
from ..report import Report
from ..treecore import Automorphism, LazyAutomaton, equal_at_depth, from_rule, identity
from ..treecore import finite as to_finite
from .lattice import Lattice, VirtualEndo, inf_norm, intersect, intersect_all, mat_inverse, mat_mul

DEFAULT_INDEX_BOUND = 10 ** 9
CONTRACTION_POWER = 64


@dataclass(frozen=True)
class Orbit:
    """One block of the data: index m_i, subgroup H_i, map f_i and a transversal of H_i."""

    m: int
    H: Lattice
    f: VirtualEndo
    transversal: tuple


@dataclass(frozen=True)
class GDataSpec:
    rank: int
    orbits: tuple

    @classmethod
    def build(cls, rank, blocks):
        """``blocks`` holds (m_i, H basis rows, f matrix rows[, transversal]) per orbit."""
        out = []
        for blk in blocks:
            m_i, H_rows, f_rows = blk[:3]
            trans = blk[3] if len(blk) > 3 else None
            H = Lattice.span(H_rows, rank)
            out.append(make_orbit(m_i, H, VirtualEndo(H, f_rows), trans))
        return cls(rank, tuple(out))

    @property
    def m_vector(self):
        return tuple(o.m for o in self.orbits)

    @property
    def degree(self):
        return sum(self.m_vector)

    @property
    def s(self):
        return len(self.orbits)

    def letters(self):
        """(orbit index, transversal index) for letters 1..m in order."""
        return [(i, k) for i, o in enumerate(self.orbits) for k in range(o.m)]


def make_orbit(m_i, H, f, transversal=None):
    if not H.is_full_rank or H.index() != m_i:
        idx = H.index() if H.is_full_rank else "infinite"
        raise InputError(f"[Z^n : H] = {idx}, but the orbit has size {m_i}")
    if f.domain != H:
        raise InputError("virtual endomorphism defined on a different subgroup")
    if transversal is None:
        transversal = H.digit_transversal()
    transversal = tuple(tuple(int(x) for x in t) for t in transversal)
    if len(transversal) != m_i:
        raise InputError(f"transversal has {len(transversal)} elements, expected {m_i}")
    if len({H.reduce(t) for t in transversal}) != m_i:
        raise InputError("transversal elements are congruent modulo H")
    return Orbit(m_i, H, f, transversal)


# ---------------------------------------------------------------- F-core


@dataclass
class CoreResult:
    verdict: str  # "trivial", "nontrivial" or "unknown"
    lattice: Lattice = None
    chain: list = field(default_factory=list)  # (rank, measure) along the iteration
    reason: str = ""

    def __str__(self):
        steps = [f"r{r}:{mu}" for r, mu in self.chain]
        if len(steps) > 6:
            steps = steps[:3] + [f"... {len(steps) - 5} more"] + steps[-2:]
        chain = " > ".join(steps)
        core = f" {self.lattice}" if self.verdict == "nontrivial" else ""
        return f"F-core {self.verdict}{core} ({self.reason}); chain {chain}"


def contraction_certificate(D, max_power=CONTRACTION_POWER):
    """Index i and power k with f_i invertible and ||M_i^k||_inf < 1, or None.

    Any f_i-invariant subgroup K of H_i then has f_i^k injective on K with
    every orbit of a nonzero integer vector shrinking to 0, so K = 0.
    """
    for i, o in enumerate(D.orbits):
        M = o.f.matrix
        if mat_inverse(M) is None:
            continue
        P = M
        for k in range(1, max_power + 1):
            if inf_norm(P) < 1:
                return i, k
            P = mat_mul(P, M)
    return None


def f_core(D, index_bound=DEFAULT_INDEX_BOUND):
    """Largest subgroup of the H_i's invariant under every f_i, by descending iteration."""
    n = D.rank
    K = intersect_all([o.H for o in D.orbits], n)
    chain = [(K.rank, K.measure())]
    while True:
        if K.rank == 0:
            return CoreResult("trivial", K, chain, "chain reached rank 0")
        K2 = K
        for o in D.orbits:
            K2 = intersect(K2, o.f.preimage(K))
        if K2 == K:
            return CoreResult("nontrivial", K, chain, "chain stabilized")
        K = K2
        chain.append((K.rank, K.measure()))
        if K.measure() > index_bound:
            break
    cert = contraction_certificate(D)
    if cert is not None:
        i, k = cert
        return CoreResult("trivial", None, chain, f"||f_{i + 1}^{k}|| < 1 with f_{i + 1} invertible")
    return CoreResult("unknown", K, chain, f"measure passed {index_bound} without a contraction certificate")


def is_recurrent(D, index_bound=DEFAULT_INDEX_BOUND):
    """True, False, or None when the F-core verdict is unknown."""
    if not all(o.f.is_epimorphism() for o in D.orbits):
        return False
    core = f_core(D, index_bound)
    if core.verdict == "trivial":
        return True
    if core.verdict == "nontrivial":
        return False
    return None


def strong_domains(D):
    """H_i intersected with the kernels of all the other f_j."""
    kernels = [o.f.kernel() for o in D.orbits]
    out = []
    for i, o in enumerate(D.orbits):
        L = o.H
        for j, k in enumerate(kernels):
            if j != i:
                L = intersect(L, k)
        out.append(L)
    return out


def is_strongly_recurrent(D, index_bound=DEFAULT_INDEX_BOUND):
    rec = is_recurrent(D, index_bound)
    if rec is False:
        return False
    for o, L in zip(D.orbits, strong_domains(D)):
        if not o.f.restrict(L).is_epimorphism():
            return False
    return rec


# ---------------------------------------------------------------- representation


def _rep_rule(D):
    n = D.rank
    offsets = []
    pos = 0
    for o in D.orbits:
        offsets.append(pos)
        pos += o.m
    lookup = [{o.H.reduce(t): k for k, t in enumerate(o.transversal)} for o in D.orbits]

    def rule(g):
        perm = [0] * D.degree
        kids = [None] * D.degree
        for i, o in enumerate(D.orbits):
            for k, t in enumerate(o.transversal):
                w = tuple(a + b for a, b in zip(t, g))
                k2 = lookup[i][o.H.reduce(w)]
                t2 = o.transversal[k2]
                perm[offsets[i] + k] = offsets[i] + k2
                kids[offsets[i] + k] = o.f(tuple(a - b for a, b in zip(w, t2)))
        return tuple(perm), tuple(kids)

    def namer(g):
        if n == 1:
            return "a" if g[0] == 1 else f"a^{g[0]}"
        return "phi(" + ",".join(map(str, g)) + ")"

    return rule, namer, (0,) * n


def represent(D, g, finite=False):
    """phi(g) as a lazy automorphism (finite-state canonical form with ``finite``)."""
    g = tuple(int(x) for x in g)
    if len(g) != D.rank:
        raise InputError(f"vector of length {len(g)} for rank {D.rank}")
    rule, namer, zero = _rep_rule(D)
    return from_rule(D.degree, rule, g, zero, namer=namer, try_finite=finite)


def induced_representation(D, finite=False):
    """Images of the standard basis vectors of Z^n, sharing one lazy automaton."""
    rule, namer, zero = _rep_rule(D)
    lazy = LazyAutomaton(D.degree, rule, zero, namer=namer)
    gens = [Automorphism(lazy, tuple(int(i == j) for j in range(D.rank))) for i in range(D.rank)]
    return [to_finite(g) for g in gens] if finite else gens


def check(D, depth=6, index_bound=DEFAULT_INDEX_BOUND):
    """Validation and recurrence report for a G-data."""
    rep = Report(f"G-data of rank {D.rank}, m = {D.m_vector}")
    for i, o in enumerate(D.orbits, 1):
        rep.info(f"orbit {i}: H = {o.H}, index {o.H.index()}, transversal {list(o.transversal)}")
        rep.info(f"  image f_{i} = {o.f.image()}, kernel f_{i} = {o.f.kernel()}, epimorphism {o.f.is_epimorphism()}")
    core = f_core(D, index_bound)
    rep.info(str(core))
    rec = is_recurrent(D, index_bound)
    strong = is_strongly_recurrent(D, index_bound)
    rep.info(f"recurrent: {_tri(rec)}")
    rep.info(f"strongly recurrent: {_tri(strong)}")
    if core.verdict == "nontrivial":
        ok = all(equal_at_depth(represent(D, v), identity(D.degree), depth) for v in core.lattice.basis)
        rep.check(f"F-core acts trivially to depth {depth}", ok)
    if core.lattice is not None and core.verdict != "unknown":
        K = core.lattice
        stable = all(intersect(K, o.f.preimage(K)) == K for o in D.orbits)
        rep.check("F-core is preimage-stable", stable)
    return rep


def _tri(x):
    return "unknown" if x is None else str(x).lower()


# ---------------------------------------------------------------- text format


def _frac(tok):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational entry {tok!r}") from exc


def parse_gdata(text):
    """Read the line format: ``rank n``, then per orbit ``orbit i index m_i``, ``H`` rows, ``f`` rows, optional ``transversal`` rows."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("rank"):
        raise InputError("G-data must start with 'rank n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise InputError("bad rank line") from exc
    blocks = []
    cur = None
    section = None
    for ln in lines[1:]:
        head = ln.split()
        if head[0] == "orbit":
            if len(head) != 4 or head[2] != "index":
                raise InputError(f"bad orbit line {ln!r}")
            cur = {"m": int(head[3]), "H": [], "f": [], "transversal": []}
            blocks.append(cur)
            section = None
        elif head[0] in ("H", "f", "transversal") and len(head) == 1:
            if cur is None:
                raise InputError(f"'{head[0]}' before any orbit line")
            section = head[0]
        else:
            if section is None:
                raise InputError(f"unexpected line {ln!r}")
            row = [_frac(t) for t in head]
            if len(row) != n:
                raise InputError(f"row {ln!r} has {len(row)} entries, rank is {n}")
            if section != "f" and any(x.denominator != 1 for x in row):
                raise InputError(f"non-integral {section} row {ln!r}")
            cur[section].append(row if section == "f" else [int(x) for x in row])
    if not blocks:
        raise InputError("no orbits")
    specs = []
    for b in blocks:
        if len(b["f"]) != n:
            raise InputError(f"f needs {n} rows")
        specs.append((b["m"], b["H"], b["f"], b["transversal"] or None))
    return GDataSpec.build(n, specs)


def format_gdata(D):
    out = [f"rank {D.rank}"]
    for i, o in enumerate(D.orbits, 1):
        out.append(f"orbit {i} index {o.m}")
        out.append("H")
        out.extend(" ".join(map(str, r)) for r in o.H.basis)
        out.append("f")
        out.extend(" ".join(str(x) for x in r) for r in o.f.matrix)
        out.append("transversal")
        out.extend(" ".join(map(str, t)) for t in o.transversal)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- standard and random data


def adding_data(m=2):
    """(Z, mZ, x/m): the data of the m-adding machine."""
    return GDataSpec.build(1, [(m, [[m]], [[Fraction(1, m)]])])


def double_adding_data():
    """((2,2), (2Z, 2Z), (x/2, x/2)): the data of the double adding machine."""
    half = [[Fraction(1, 2)]]
    return GDataSpec.build(1, [(2, [[2]], half), (2, [[2]], half)])


def _random_hnf(rng, n, index):
    diag = [1] * n
    k = index
    p = 2
    while k > 1:
        while k % p:
            p += 1
        diag[rng.randrange(n)] *= p
        k //= p
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = diag[i]
        for j in range(i + 1, n):
            row[j] = rng.randrange(diag[j]) if diag[j] > 1 else 0
        rows.append(row)
    return rows


def _random_unimodular(rng, n, entry_bound):
    if n == 1:
        return [[rng.choice((-1, 1))]]
    while True:
        U = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(2 * n):
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-2, -1, 1, 2))
            U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        if all(abs(x) <= entry_bound for row in U for x in row):
            return U


def random_gdata(rng=None, rank=None, s=2, max_index=3, entry_bound=5, epimorphic=False):
    """A random G-data over Z^rank with s orbits.

    f_i sends the k-th HNF basis vector of H_i to a random integer vector with
    entries in [-entry_bound, entry_bound]; a random subset of basis vectors
    goes to 0 and the other images are independent, so f_i is injective on
    the span of the surviving basis vectors.  With ``epimorphic`` the images
    form a basis of Z^n instead, so every f_i is onto.
    """
    rng = rng or random.Random()
    n = rank or rng.randint(1, 4)
    blocks = []
    for _ in range(s):
        m_i = rng.randint(1, max_index)
        H_rows = _random_hnf(rng, n, m_i)
        if epimorphic:
            N = _random_unimodular(rng, n, entry_bound)
        else:
            dead = {k for k in range(n) if rng.random() < 0.3}
            while True:
                N = [[0 if k in dead else rng.randint(-entry_bound, entry_bound) for k in range(n)] for _ in range(n)]
                # the surviving images must be independent
                if Lattice.span([list(c) for c in zip(*N)], n).rank == n - len(dead):
                    break
        # M B^T = N, so M = N (B^T)^{-1}
        Bt_inv = mat_inverse([list(c) for c in zip(*H_rows)])
        blocks.append((m_i, H_rows, mat_mul(N, Bt_inv)))
    return GDataSpec.build(n, blocks)
