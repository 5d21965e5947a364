"""Graphviz DOT text for the state diagrams of finite-state automorphisms."""

from __future__ import annotations

from .errors import InputError
from .treecore import DEFAULT_STATE_BOUND, Automorphism, state_list


def _quote(s):
    return '"' + str(s).replace('"', r'\"') + '"'


def _collect(roots, bound):
    """Distinct states of all roots, roots first, then BFS order per root."""
    seen = {}
    order = []
    for r in roots:
        for q in state_list(r, bound):
            k = q.key()
            if k not in seen:
                seen[k] = len(order)
                order.append(q)
    return order, seen


def export_dot(alphas, merge=True, name="automaton", bound=DEFAULT_STATE_BOUND):
    """DOT digraph with one node per distinct state and ``in|out`` edge labels.

    With ``merge`` the labels of parallel edges are joined into one comma list
    (letters in increasing order); otherwise every (state, letter) gets its own edge.
    """
    if isinstance(alphas, Automorphism):
        alphas = [alphas]
    alphas = list(alphas)
    if not alphas:
        raise InputError("nothing to export")
    order, index = _collect(alphas, bound)
    names = []
    used = set()
    for q in order:
        nm = q.name
        while nm in used:
            nm += "'"
        used.add(nm)
        names.append(nm)
    roots = {index[a.key()] for a in alphas}
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    for i, q in enumerate(order):
        shape = "doublecircle" if i in roots else "circle"
        lines.append(f"  {_quote(names[i])} [shape={shape}];")
    for i, q in enumerate(order):
        perm = q.perm
        edges = {}
        for y, child in enumerate(q.sections()):
            j = index[child.key()]
            edges.setdefault(j, []).append(f"{y + 1}|{perm[y] + 1}")
        for j, labels in edges.items():
            groups = [labels] if merge else [[lab] for lab in labels]
            for g in groups:
                lines.append(f"  {_quote(names[i])} -> {_quote(names[j])} [label={_quote(','.join(g))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
