"""Backtracking search for injective edge-preserving maps (subgraph, not
induced) from a small pattern into a host, on bitmask adjacency."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, _bits


def _pattern_order(pattern: Graph) -> list[int]:
    """Most-constrained-first ordering: start at a max-degree vertex, then
    keep taking the vertex with most already-ordered neighbours."""
    n = pattern.n
    if n == 0:
        return []
    deg = pattern.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = max(remaining, key=lambda x: ((pattern.adj[x] & placed).bit_count(), deg[x], -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


class SiblingInfo:
    """Interchangeable vertex blocks of a host (copies of a component in a
    blow-up).  ``block_of[v]`` is ``(group, copy)`` or None for fixed
    vertices; copies of a group are pairwise swappable by an automorphism
    fixing everything else."""

    def __init__(self, n: int, block_of: Sequence[tuple[int, int] | None]):
        self.fixed = 0
        groups: dict[int, dict[int, int]] = {}
        for v, b in enumerate(block_of):
            if b is None:
                self.fixed |= 1 << v
            else:
                g, c = b
                groups.setdefault(g, {}).setdefault(c, 0)
                groups[g][c] |= 1 << v
        self.group_ids = sorted(groups)
        self.copy_masks = [[groups[g][c] for c in sorted(groups[g])] for g in self.group_ids]
        gindex = {g: i for i, g in enumerate(self.group_ids)}
        self.block = [None if b is None else (gindex[b[0]], sorted(groups[b[0]]).index(b[1])) for b in block_of]


class Matcher:
    """Enumerates embeddings of ``pattern`` into ``host``.

    ``fixed`` pre-assigns pattern vertices to host vertices.  With
    ``siblings`` the search only ever opens the lowest untouched copy of
    each interchangeable block, which is exact for existence questions.
    """

    def __init__(self, pattern: Graph, host: Graph, fixed: dict[int, int] | None = None, siblings: SiblingInfo | None = None):
        pattern.require_simple("subgraph matching (pattern)")
        self.pattern = pattern
        self.host_adj = host.adj
        self.hn = host.n
        self.fixed = dict(fixed or {})
        self.siblings = siblings
        free = [v for v in _pattern_order(pattern) if v not in self.fixed]
        self.order = list(self.fixed) + free
        pos = {v: i for i, v in enumerate(self.order)}
        self.back = [[pos[w] for w in _bits(pattern.adj[v]) if pos[w] < i] for i, v in enumerate(self.order)]
        hdeg = [r.bit_count() for r in host.adj]
        self.deg_ok = []
        for v in self.order:
            d = pattern.degree(v)
            self.deg_ok.append(sum(1 << x for x in range(host.n) if hdeg[x] >= d))
        self.full = (1 << host.n) - 1

    def _allowed_by_siblings(self, used_copies: list[int]) -> int:
        s = self.siblings
        mask = s.fixed
        for gi, masks in enumerate(s.copy_masks):
            k = used_copies[gi]
            for c in range(min(k + 1, len(masks))):
                mask |= masks[c]
        return mask

    def _consistent_fixed(self) -> bool:
        imgs = [self.fixed[v] for v in self.order[: len(self.fixed)]]
        if len(set(imgs)) != len(imgs):
            return False
        for i, v in enumerate(self.order[: len(self.fixed)]):
            for j in self.back[i]:
                if not self.host_adj[imgs[i]] >> imgs[j] & 1:
                    return False
        return True

    def count(self) -> int:
        """Number of injective edge-preserving maps (respecting ``fixed``)."""
        if self.siblings is not None:
            raise ValueError("sibling pruning is only valid for existence queries")
        return self._run(stop_at_first=False)

    def exists(self) -> bool:
        return self._run(stop_at_first=True) > 0

    def first(self) -> dict[int, int] | None:
        found: list = []
        self._run(stop_at_first=True, sink=found)
        return found[0] if found else None

    def _run(self, stop_at_first: bool, sink: list | None = None) -> int:
        k = len(self.order)
        if k == 0:
            return 1
        if k > self.hn:
            return 0
        nf = len(self.fixed)
        if nf and not self._consistent_fixed():
            return 0
        adj = self.host_adj
        back = self.back
        deg_ok = self.deg_ok
        img = [0] * k
        used = 0
        for i in range(nf):
            img[i] = self.fixed[self.order[i]]
            used |= 1 << img[i]
        if nf == k:
            if sink is not None:
                sink.append(dict(self.fixed))
            return 1
        sib = self.siblings
        used_copies = [0] * len(sib.copy_masks) if sib else None
        if sib:
            for i in range(nf):
                b = sib.block[img[i]]
                if b is not None:
                    used_copies[b[0]] = max(used_copies[b[0]], b[1] + 1)
        last = k - 1
        total = 0

        def candidates(i: int) -> int:
            c = deg_ok[i] & ~used
            for j in back[i]:
                c &= adj[img[j]]
            if sib:
                c &= self._allowed_by_siblings(used_copies)
            return c

        # explicit stack of (level, remaining candidate mask)
        stack = [(nf, candidates(nf))]
        while stack:
            i, cand = stack[-1]
            if i == last and sink is None:
                if stop_at_first:
                    if cand:
                        return 1
                    stack.pop()
                else:
                    total += cand.bit_count()
                    stack.pop()
                if stack:
                    pi = stack[-1][0]
                    x = img[pi]
                    used &= ~(1 << x)
                    if sib:
                        self._release(used_copies, x, img, pi)
                continue
            if not cand:
                stack.pop()
                if stack:
                    pi = stack[-1][0]
                    x = img[pi]
                    used &= ~(1 << x)
                    if sib:
                        self._release(used_copies, x, img, pi)
                continue
            low = cand & -cand
            stack[-1] = (i, cand ^ low)
            x = low.bit_length() - 1
            img[i] = x
            used |= low
            if sib:
                b = sib.block[x]
                if b is not None and b[1] + 1 > used_copies[b[0]]:
                    used_copies[b[0]] = b[1] + 1
            if i == last:
                # only reached with a sink
                sink.append({self.order[j]: img[j] for j in range(k)})
                return 1
            stack.append((i + 1, candidates(i + 1)))
        return total

    def _release(self, used_copies: list[int], x: int, img: list[int], level: int) -> None:
        b = self.siblings.block[x]
        if b is None:
            return
        g = b[0]
        top = 0
        for j in range(level):
            bj = self.siblings.block[img[j]]
            if bj is not None and bj[0] == g:
                top = max(top, bj[1] + 1)
        used_copies[g] = top


def count_embeddings(pattern: Graph, host: Graph, fixed: dict[int, int] | None = None) -> int:
    return Matcher(pattern, host, fixed).count()


def has_embedding(pattern: Graph, host: Graph, fixed: dict[int, int] | None = None, siblings: SiblingInfo | None = None) -> bool:
    return Matcher(pattern, host, fixed, siblings).exists()


def find_embedding(pattern: Graph, host: Graph, fixed: dict[int, int] | None = None) -> dict[int, int] | None:
    return Matcher(pattern, host, fixed).first()
