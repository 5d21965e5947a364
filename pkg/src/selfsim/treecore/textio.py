"""Line-oriented text format for automata.

::

    m 4
    state a perm 2 1 4 3 to e a e a
    init a

The identity state ``e`` is implied and may be omitted.  Permutations may be
given as image lists or in cycle notation (``perm (1 2)(3 4) to ...``).
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from ..errors import InputError
from .automaton import _explore, finite, from_recursion
from .permutation import Permutation


def parse_automaton(text):
    """Parse the text format; returns the automorphism at the ``init`` state."""
    m = None
    table = {}
    init = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        if head == "m":
            if len(toks) != 2:
                raise InputError(f"line {lineno}: expected 'm <int>'")
            m = int(toks[1])
            if m < 1:
                raise InputError(f"line {lineno}: m must be positive")
        elif head == "state":
            if m is None:
                raise InputError(f"line {lineno}: 'state' before 'm'")
            try:
                p_at = toks.index("perm")
                t_at = toks.index("to")
            except ValueError:
                raise InputError(f"line {lineno}: expected 'state <name> perm ... to ...'") from None
            if p_at != 2:
                raise InputError(f"line {lineno}: state name must be a single token")
            name = toks[1]
            perm = Permutation.parse(" ".join(toks[p_at + 1:t_at]), m)
            kids = toks[t_at + 1:]
            if len(kids) != m:
                raise InputError(f"line {lineno}: expected {m} children, got {len(kids)}")
            if name == "e":
                if not perm.is_identity() or any(k != "e" for k in kids):
                    raise InputError(f"line {lineno}: state 'e' must be the identity")
                continue
            if name in table:
                raise InputError(f"line {lineno}: duplicate state {name!r}")
            table[name] = (perm, kids)
        elif head == "init":
            if len(toks) != 2:
                raise InputError(f"line {lineno}: expected 'init <name>'")
            init = toks[1]
        else:
            raise InputError(f"line {lineno}: unknown directive {head!r}")
    if m is None:
        raise InputError("missing 'm' header")
    if init is None:
        raise InputError("missing 'init' line")
    if init == "e":
        from .automaton import identity

        return identity(m)
    if init not in table:
        raise InputError(f"init state {init!r} is not defined")
    return from_recursion(m, table, init)


def format_automaton(alpha):
    """Serialize the minimized automaton of a finite-state automorphism."""
    fin = finite(alpha)
    A = fin.automaton
    order, _ = _explore(A, fin.state, len(A) + 1)
    names = {}
    used = {"e"}
    for q in order:
        if q == A.identity:
            names[q] = "e"
            continue
        nm = A.name(q)
        if not nm or nm in used or any(ch.isspace() for ch in nm):
            nm = f"q{len(names)}"
        used.add(nm)
        names[q] = nm
    lines = [f"m {A.m}"]
    for q in order:
        if q == A.identity:
            continue
        perm, kids = A.node(q)
        lines.append(
            f"state {names[q]} perm {Permutation(perm)} to " + " ".join(names[c] for c in kids)
        )
    lines.append(f"init {names[fin.state]}")
    return "\n".join(lines) + "\n"
