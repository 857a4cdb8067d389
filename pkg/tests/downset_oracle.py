"""Independent brute-force reference used by the tests.

Grows every n-cell down-set of the non-negative integer lattice one cell
at a time, deduplicating by frozenset.  This shares no code with the
library's layered array enumeration, so agreement between the two is a
real cross-check.
"""

import itertools


def addable_cells(cells, dim):
    """Lattice points that can extend a down-set by one cell."""
    seen = set()
    for cell in cells:
        for k in range(dim):
            cand = cell[:k] + (cell[k] + 1,) + cell[k + 1 :]
            if cand in cells or cand in seen:
                continue
            below_all_in = all(
                cand[:j] + (cand[j] - 1,) + cand[j + 1 :] in cells
                for j in range(dim)
                if cand[j] > 0
            )
            if below_all_in:
                seen.add(cand)
    return seen


def downsets_of_size(dim, n):
    """All down-sets with exactly n cells, as frozensets of tuples."""
    if n < 1:
        raise ValueError("n must be >= 1")
    level = {frozenset({(0,) * dim})}
    for _ in range(n - 1):
        nxt = set()
        for cells in level:
            for cand in addable_cells(cells, dim):
                nxt.add(cells | {cand})
        level = nxt
    return level


def oracle_count(m, n):
    """Number of m-dimensional partitions of n, via raw down-sets."""
    return len(downsets_of_size(m + 1, n))


def oracle_cell_sets(m, n):
    """Canonical sorted cell lists of every m-dimensional partition of n."""
    return sorted(tuple(sorted(cells)) for cells in downsets_of_size(m + 1, n))


def bruteforce_matching_total(src_points, dst_points, cost):
    """Exhaustive assignment optimum, written independently of the library."""
    best = None
    for perm in itertools.permutations(range(len(src_points))):
        total = sum(cost(src_points[i], dst_points[perm[i]]) for i in range(len(src_points)))
        if best is None or total < best:
            best = total
    return best
