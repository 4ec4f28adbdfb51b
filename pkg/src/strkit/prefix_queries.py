"""Prefix queries on the failure tree of a preprocessed string.

The tree has one vertex per prefix length ``0..n``; the parent of vertex
``i`` is the border length of the length-``i`` prefix, and vertex 0 is the
root. Ancestors of ``j`` (including ``j``) are exactly the lengths ``i``
whose prefix equals the length-``i`` substring ending at ``j``, so both
query kinds reduce to ancestor tests:

* ``pq(i, j)``  - constant time via DFS intervals,
* ``lpq(j, k)`` - logarithmic time via a binary-lifting ancestor table,
* ``lpq_strided(j, k)`` - the linear-memory alternative, walking stride-c
  ancestors first and parents last.
"""
from __future__ import annotations

import numpy as np

from .primitives import Text, failure_function


class FailureTree:
    """Failure tree with DFS intervals and ancestor tables.

    Vertex ``v`` carries weight ``v`` (weights never decrease toward the
    leaves, so weight-bounded ancestor searches are monotone).
    """

    def __init__(self, text: Text, parent: list[int], dfs_num: list[int],
                 dfs_max: list[int], anc: list[list[int]],
                 stride: int | None, strided_anc: list[int] | None) -> None:
        self.text = text
        self.n = len(text)
        self.parent = parent
        self.dfs_num = dfs_num
        self.dfs_max = dfs_max
        self.anc = anc
        self.stride = stride
        self.strided_anc = strided_anc

    def pq(self, i: int, j: int) -> bool:
        """Does the length-``i`` prefix equal the substring ending at ``j``?"""
        if not 0 <= i <= j <= self.n:
            raise ValueError(f"need 0 <= i <= j <= {self.n}, got ({i}, {j})")
        return (self.dfs_num[i] <= self.dfs_num[j]
                and self.dfs_max[i] >= self.dfs_max[j])

    def lpq(self, j: int, k: int) -> int:
        """Largest ``i <= k`` with ``pq(i, j)``; 0 (the root) always qualifies."""
        if not 0 <= k <= j <= self.n:
            raise ValueError(f"need 0 <= k <= j <= {self.n}, got ({j}, {k})")
        v = j
        for level in range(len(self.anc) - 1, -1, -1):
            a = self.anc[level][v]
            if a > k:
                v = a
        if v > k:
            v = self.parent[v]
        return v

    def lpq_strided(self, j: int, k: int) -> int:
        """Same answer as ``lpq`` using the single strided-ancestor array."""
        if self.strided_anc is None:
            raise ValueError("tree was built without a stride")
        if not 0 <= k <= j <= self.n:
            raise ValueError(f"need 0 <= k <= j <= {self.n}, got ({j}, {k})")
        v = j
        while v != 0 and self.strided_anc[v] > k:
            v = self.strided_anc[v]
        while v != 0 and self.parent[v] > k:
            v = self.parent[v]
        if v != 0 and v > k:
            v = self.parent[v]
        return v


def build_failure_tree(s: Text, stride: int | None = None) -> FailureTree:
    """Preprocess ``s`` for prefix queries.

    The binary-lifting table is always built; a strided-ancestor array is
    added when ``stride`` is given. ``strided_anc[v]`` is the nearest proper
    ancestor lying on a depth divisible by ``stride`` (the root for shallow
    vertices), which bounds a strided walk by O(stride + n/stride) steps.
    """
    if len(s) == 0:
        raise ValueError("empty input")
    if stride is not None and stride < 1:
        raise ValueError("stride must be at least 1")
    n = len(s)
    p = failure_function(s)
    parent = [0] * (n + 1)
    children: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        parent[i] = int(p[i])
        children[parent[i]].append(i)

    # Iterative DFS: the chain-shaped trees of uniform strings would blow the
    # recursion limit. The path stack doubles as the strided-ancestor source.
    dfs_num = [0] * (n + 1)
    dfs_max = [0] * (n + 1)
    strided = [0] * (n + 1) if stride is not None else None
    counter = 1
    dfs_num[0] = 1
    ptr = [0] * (n + 1)
    stack = [0]
    path = [0]
    while stack:
        v = stack[-1]
        if ptr[v] < len(children[v]):
            c = children[v][ptr[v]]
            ptr[v] += 1
            counter += 1
            dfs_num[c] = counter
            path.append(c)
            if strided is not None:
                depth = len(path) - 1
                if depth > stride:
                    strided[c] = path[depth - 1 - ((depth - 1) % stride)]
            stack.append(c)
        else:
            dfs_max[v] = counter
            stack.pop()
            path.pop()

    levels = max(1, (n - 1).bit_length() + 1)  # ceil(log2(n)) + 1 rows
    anc_np = np.empty((levels, n + 1), dtype=np.int64)
    anc_np[0] = np.asarray(parent, dtype=np.int64)
    for lvl in range(1, levels):
        anc_np[lvl] = anc_np[lvl - 1][anc_np[lvl - 1]]
    anc = [row.tolist() for row in anc_np]
    return FailureTree(s, parent, dfs_num, dfs_max, anc, stride, strided)
