"""Ascending-order extraction from any subarray of a growing array.

Every level of a mergesort over the array is retained: level q holds the
sorted run of each complete block [k*2^q, (k+1)*2^q - 1].  Appending element
N completes one block per trailing zero bit of N+1, so total merge work stays
O(N log N).  A range query decomposes into at most two runs per size class;
a small heap of run cursors then pops the subarray in sorted order.  The
heap holds O(log K) cursors and consecutive pops usually hit the same run,
which the last-run cache exploits, so extraction of all K elements costs
O(K) comparisons up to a small factor.

Elements compare as (value, original index): ties come out in index order.
"""

from __future__ import annotations

import heapq
from typing import Any, List, Optional, Sequence, Tuple


class MergeTree:
    def __init__(self, values: Sequence = ()):
        self.values: List[Any] = []
        # levels[q]: dict block index -> sorted list of original indices
        self.levels: List[dict] = [{}]
        self.comparisons = 0
        for v in values:
            self.append(v)

    def __len__(self) -> int:
        return len(self.values)

    def append(self, value) -> None:
        n = len(self.values)
        self.values.append(value)
        self.levels[0][n] = [n]
        q = 0
        block = n
        while block % 2 == 1:
            lo = self.levels[q].get(block - 1)
            hi = self.levels[q][block]
            if q + 1 >= len(self.levels):
                self.levels.append({})
            self.levels[q + 1][block // 2] = self._merge(lo, hi)
            q += 1
            block //= 2

    def _merge(self, a: List[int], b: List[int]) -> List[int]:
        out = []
        i = j = 0
        va = self.values
        while i < len(a) and j < len(b):
            self.comparisons += 1
            if (va[a[i]], a[i]) <= (va[b[j]], b[j]):
                out.append(a[i]); i += 1
            else:
                out.append(b[j]); j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return out

    def _cover_runs(self, i: int, j: int) -> List[List[int]]:
        runs = []
        pos = i
        while pos <= j:
            q = 0
            while pos % (1 << (q + 1)) == 0 and pos + (1 << (q + 1)) - 1 <= j:
                q += 1
            runs.append(self.levels[q][pos >> q])
            pos += 1 << q
        return runs

    def open_range(self, i: int, j: int) -> "RangeHeap":
        if not 0 <= i <= j < len(self.values):
            raise ValueError("bad range")
        return RangeHeap(self, self._cover_runs(i, j))


class RangeHeap:
    """Pops (value, original_index) pairs of the subarray in sorted order."""

    def __init__(self, tree: MergeTree, runs: List[List[int]]):
        self.tree = tree
        self.runs = runs
        self.pos = [0] * len(runs)
        self.heap: List[Tuple[Any, int, int]] = []
        for r, run in enumerate(runs):
            if run:
                idx = run[0]
                self.heap.append((tree.values[idx], idx, r))
        heapq.heapify(self.heap)
        self.last_run: Optional[int] = None
        self.heap_ops = 0

    def _key(self, r: int):
        idx = self.runs[r][self.pos[r]]
        return (self.tree.values[idx], idx)

    def pop_min(self) -> Optional[Tuple[Any, int]]:
        tree = self.tree
        # Invariant: every unexhausted run has its head in the heap, except
        # the cached run that produced the previous minimum.
        lr = self.last_run
        if lr is not None:
            if self.pos[lr] >= len(self.runs[lr]):
                self.last_run = None
            else:
                key = self._key(lr)
                tree.comparisons += 1
                if not self.heap or key <= (self.heap[0][0], self.heap[0][1]):
                    self.pos[lr] += 1
                    return key
                # miss: demote the cache into the heap and fall through
                idx = self.runs[lr][self.pos[lr]]
                heapq.heappush(self.heap, (tree.values[idx], idx, lr))
                self.heap_ops += 1
                self.last_run = None
        if not self.heap:
            return None
        value, idx, r = heapq.heappop(self.heap)
        self.heap_ops += 1
        self.pos[r] += 1
        self.last_run = r
        return (value, idx)
