"""Self-similar groups of automorphisms of rooted m-ary trees.

Subpackages: ``treecore`` (automata and portraits), ``permsym`` (level-one
permutation groups), ``diagmonoid`` (vertex and partial diagonal operators),
``centralizer`` (truncated centralizers), ``gdata`` (virtual endomorphism
data), ``catalog`` and ``cli``.
"""

__version__ = "0.1.0"
