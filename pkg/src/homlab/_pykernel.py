"""Pure-Python backtracking counter (reference twin of ``_ckernel``)."""

from __future__ import annotations


def count_backtrack(nbr: list[int], doms: list[int], later: list[list[int]], tail: int) -> int:
    """Count colourings of vertices ``0..m-1`` taken in index order.

    ``nbr[c]`` is the neighbour mask of target vertex ``c``; ``doms[p]`` the
    initial candidate mask of position ``p``; ``later[p]`` the neighbours of
    ``p`` at higher positions.  Positions ``tail..m-1`` must be pairwise
    non-adjacent, so once everything before them is coloured their counts
    multiply.
    """
    m = len(doms)

    def rec(p: int, cur: list[int]) -> int:
        if p == tail:
            total = 1
            for v in range(tail, m):
                total *= cur[v].bit_count()
            return total
        total = 0
        cand = cur[p]
        fwd = later[p]
        while cand:
            low = cand & -cand
            cand ^= low
            row = nbr[low.bit_length() - 1]
            nxt = cur[:]
            for f in fwd:
                x = nxt[f] & row
                if not x:
                    break
                nxt[f] = x
            else:
                total += rec(p + 1, nxt)
        return total

    if any(d == 0 for d in doms):
        return 0
    return rec(0, list(doms))
