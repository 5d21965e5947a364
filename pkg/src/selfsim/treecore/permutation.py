"""Permutations of the alphabet {1..m}.

Images are stored 0-based; every textual form (``str``, parsing) is 1-based so
that ``(1 2)(3 4)`` reads exactly as written by hand.  Multiplication is
left-to-right, matching the right action ``(y)(pq) = ((y)p)q``.
"""

from __future__ import annotations

import re
from math import lcm

from ..errors import InputError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation of 0..{len(images) - 1}: {images}")
        if not images:
            raise InputError("alphabet size must be at least 1")
        self.images = images

    @classmethod
    def identity(cls, m):
        return cls(range(m))

    @classmethod
    def from_images(cls, images):
        """Build from 1-based images, e.g. ``[2, 1, 4, 3]``."""
        return cls(int(i) - 1 for i in images)

    @classmethod
    def from_cycles(cls, text, m):
        """Parse cycle notation such as ``(1 2)(3 4)``; ``()`` is the identity."""
        text = text.strip()
        if not text.startswith("("):
            raise InputError(f"cycle notation must start with '(': {text!r}")
        if _CYCLE_RE.sub("", text).strip():
            raise InputError(f"unparsable cycle notation: {text!r}")
        images = list(range(m))
        seen = set()
        for body in _CYCLE_RE.findall(text):
            letters = [int(tok) - 1 for tok in body.replace(",", " ").split()]
            for y in letters:
                if not 0 <= y < m:
                    raise InputError(f"letter {y + 1} outside 1..{m}")
                if y in seen:
                    raise InputError(f"letter {y + 1} repeated in {text!r}")
                seen.add(y)
            for a, b in zip(letters, letters[1:] + letters[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text, m=None):
        """Accept either cycle notation or a space-separated 1-based image list."""
        text = text.strip()
        if text.startswith("("):
            if m is None:
                nums = [int(t) for t in re.findall(r"\d+", text)]
                m = max(nums, default=1)
            return cls.from_cycles(text, m)
        perm = cls.from_images(text.split())
        if m is not None and perm.m != m:
            raise InputError(f"expected {m} images, got {perm.m}")
        return perm

    @property
    def m(self):
        return len(self.images)

    def __call__(self, y):
        return self.images[y]

    def __mul__(self, other):
        if self.m != other.m:
            raise InputError("permutations on different alphabets")
        q = other.images
        return Permutation([q[i] for i in self.images])

    def inverse(self):
        inv = [0] * self.m
        for y, z in enumerate(self.images):
            inv[z] = y
        return Permutation(inv)

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        result = Permutation.identity(self.m)
        for _ in range(abs(n) % self.order()):
            result = result * base
        return result

    def is_identity(self):
        return all(i == y for y, i in enumerate(self.images))

    def cycles(self, include_fixed=False):
        """Disjoint cycles (0-based), each starting at its minimal letter."""
        seen = set()
        out = []
        for start in range(self.m):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            y = self.images[start]
            while y != start:
                cyc.append(y)
                seen.add(y)
                y = self.images[y]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self):
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def cycle_str(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(y + 1) for y in c) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return " ".join(str(i + 1) for i in self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_str()!r}, m={self.m})"
