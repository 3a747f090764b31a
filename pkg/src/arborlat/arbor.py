"""Arbors: rooted trees on the blocks of a set partition of [n].

Provides the data model with validation, the octopus and linear chain
constructions, descendant sets, exhaustive enumeration of all arbors of a
given size, and the JSON form used by the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from math import comb


class InvalidArborError(ValueError):
    """The given blocks/parent data do not form an arbor."""


@dataclass(frozen=True)
class Arbor:
    """A rooted tree whose vertices are the blocks of a set partition of [n].

    blocks[i] is a strictly increasing tuple of elements of [n]; parent[i] is
    the index of the parent block, -1 for the unique root.  Construct through
    make_arbor / octopus / linear / enumerate_arbors to guarantee validity.
    """

    n: int
    blocks: tuple
    parent: tuple

    @property
    def root(self) -> int:
        return self.parent.index(-1)

    def children(self, v: int) -> list:
        return [i for i, p in enumerate(self.parent) if p == v]


def validate(a: Arbor):
    """Check all arbor invariants.  Returns (ok, diagnostic)."""
    if a.n < 1:
        return False, f"size must be positive, got {a.n}"
    if len(a.blocks) != len(a.parent):
        return False, "blocks and parent have different lengths"
    if not a.blocks:
        return False, "no blocks"
    seen = set()
    for b in a.blocks:
        if not b:
            return False, "empty block"
        if list(b) != sorted(set(b)):
            return False, f"block {b} not strictly increasing"
        if any(x < 1 or x > a.n for x in b):
            return False, f"block {b} has elements outside 1..{a.n}"
        if seen & set(b):
            return False, f"block {b} overlaps another block"
        seen |= set(b)
    if len(seen) != a.n:
        return False, "blocks do not cover 1..n"
    roots = [i for i, p in enumerate(a.parent) if p == -1]
    if len(roots) != 1:
        return False, f"expected exactly one root, found {len(roots)}"
    for i, p in enumerate(a.parent):
        if p != -1 and not (0 <= p < len(a.blocks)):
            return False, f"parent index {p} out of range"
    # Walk each block up to the root; a revisit inside one walk is a cycle.
    for i in range(len(a.blocks)):
        path = set()
        v = i
        while v != roots[0]:
            if v in path:
                return False, f"cycle through block index {v}"
            path.add(v)
            v = a.parent[v]
    return True, "ok"


def make_arbor(n, blocks, parent) -> Arbor:
    """Validated constructor; raises InvalidArborError on bad input."""
    a = Arbor(n, tuple(tuple(sorted(b)) for b in blocks), tuple(parent))
    ok, msg = validate(a)
    if not ok:
        raise InvalidArborError(msg)
    return a


def octopus(n: int, k: int) -> Arbor:
    """Root block {k+1,...,n} with singleton leaves {1},...,{k}.

    Requires 0 <= k < n since blocks are nonempty; the k = n cube is
    available through the direct inequality constructor in the lattice
    module instead.
    """
    if n < 1 or not 0 <= k < n:
        raise InvalidArborError(f"octopus needs n >= 1 and 0 <= k < n, got n={n}, k={k}")
    blocks = [tuple(range(k + 1, n + 1))] + [(i,) for i in range(1, k + 1)]
    parent = [-1] + [0] * k
    return make_arbor(n, blocks, parent)


def linear(n: int) -> Arbor:
    """The chain of singletons {1} <- {2} <- ... <- {n} rooted at {n}."""
    if n < 1:
        raise InvalidArborError(f"size must be positive, got {n}")
    blocks = [(i,) for i in range(1, n + 1)]
    parent = [i + 1 for i in range(n - 1)] + [-1]
    return make_arbor(n, blocks, parent)


def is_linear(a: Arbor) -> bool:
    """True iff the block tree is a chain (every block has at most one child)."""
    counts = [0] * len(a.blocks)
    for p in a.parent:
        if p != -1:
            counts[p] += 1
    return all(c <= 1 for c in counts)


@dataclass(frozen=True)
class DescendantTable:
    """Per block v, the set D(v) of elements in blocks weakly below v."""

    sets: tuple  # frozensets aligned with Arbor.blocks

    def size(self, v: int) -> int:
        return len(self.sets[v])


def descendant_sets(a: Arbor) -> DescendantTable:
    """D(v) = union of the blocks of v and all its descendants."""
    ok, msg = validate(a)
    if not ok:
        raise InvalidArborError(msg)
    b = len(a.blocks)
    sets = [set(blk) for blk in a.blocks]
    # Process children before parents: repeatedly fold leaves upward.
    order = []
    remaining = [sum(1 for p in a.parent if p == v) for v in range(b)]
    stack = [v for v in range(b) if remaining[v] == 0]
    while stack:
        v = stack.pop()
        order.append(v)
        p = a.parent[v]
        if p != -1:
            remaining[p] -= 1
            if remaining[p] == 0:
                stack.append(p)
    for v in order:
        p = a.parent[v]
        if p != -1:
            sets[p] |= sets[v]
    assert sets[a.root] == set(range(1, a.n + 1))
    return DescendantTable(tuple(frozenset(s) for s in sets))


def _set_partitions(n):
    """All set partitions of [n] as block lists ordered by minimum element.

    Restricted growth strings: element i goes to block a_i with
    a_i <= 1 + max of earlier entries, so blocks appear sorted by min.
    """
    a = [0] * n
    while True:
        b = max(a) + 1
        blocks = [[] for _ in range(b)]
        for i, ai in enumerate(a):
            blocks[ai].append(i + 1)
        yield [tuple(blk) for blk in blocks]
        # Next restricted growth string in lexicographic order.
        i = n - 1
        while i > 0:
            if a[i] <= max(a[:i]):
                a[i] += 1
                for j in range(i + 1, n):
                    a[j] = 0
                break
            a[i] = 0
            i -= 1
        else:
            return


def _rooted_parent_vectors(b):
    """All parent vectors of rooted labeled trees on b nodes (b^(b-1) of them)."""
    if b == 1:
        yield (-1,)
        return
    for root in range(b):
        rest = [v for v in range(b) if v != root]
        for choice in product(range(b), repeat=b - 1):
            parent = [-1] * b
            for v, p in zip(rest, choice):
                parent[v] = p
            # Keep only acyclic assignments: every block must reach the root.
            ok = True
            for v in rest:
                seen = set()
                u = v
                while u != root:
                    if u in seen:
                        ok = False
                        break
                    seen.add(u)
                    u = parent[u]
                if not ok:
                    break
            if ok:
                yield tuple(parent)


def enumerate_arbors(n: int):
    """Every arbor of size n exactly once, in deterministic order."""
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    for blocks in _set_partitions(n):
        for parent in _rooted_parent_vectors(len(blocks)):
            yield Arbor(n, tuple(blocks), parent)


def count_arbors(n: int) -> int:
    """Sum over b of S(n,b) * b^(b-1), for cross-checking the enumeration."""
    def stirling2(n, b):
        return sum((-1) ** j * comb(b, j) * (b - j) ** n for j in range(b + 1)) // _factorial(b)

    return sum(stirling2(n, b) * b ** (b - 1) for b in range(1, n + 1))


def _factorial(b):
    out = 1
    for i in range(2, b + 1):
        out *= i
    return out


def arbor_to_json(a: Arbor) -> str:
    """Byte-stable JSON: keys n, blocks, parent in this order, block elements ascending."""
    return json.dumps(
        {"n": a.n, "blocks": [list(b) for b in a.blocks], "parent": list(a.parent)},
        separators=(", ", ": "),
    )


def arbor_from_json(text: str) -> Arbor:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidArborError(f"not valid JSON: {e}") from e
    if not isinstance(data, dict) or not {"n", "blocks", "parent"} <= set(data):
        raise InvalidArborError("expected keys n, blocks, parent")
    return make_arbor(data["n"], data["blocks"], data["parent"])
