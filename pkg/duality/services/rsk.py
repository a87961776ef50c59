"""RSK and Robinson-Schensted correspondences.

The biword of a matrix A lists the pairs (i, j) in lexicographic order, each
repeated a_ij times. Column indices are row-inserted into P and the row index
of each step is recorded in Q, so content(P) = column sums and
content(Q) = row sums.
"""

import logging
from bisect import bisect_left, bisect_right

from duality.core.exceptions import ShapeMismatchError
from duality.models.domain import CompositionMatrix, Partition, Permutation, Tableau

logger = logging.getLogger(__name__)


def _row_insert(rows: list[list[int]], value: int) -> int:
    """Insert ``value`` into ``rows`` in place; return the row index of the new cell."""
    for r, row in enumerate(rows):
        pos = bisect_right(row, value)
        if pos == len(row):
            row.append(value)
            return r
        row[pos], value = value, row[pos]
    rows.append([value])
    return len(rows) - 1


def rsk(matrix: CompositionMatrix) -> tuple[Tableau, Tableau]:
    """Insertion and recording tableaux (P, Q) of ``matrix``."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, row in enumerate(matrix.entries, start=1):
        for j, count in enumerate(row, start=1):
            for _ in range(count):
                r = _row_insert(p_rows, j)
                if r == len(q_rows):
                    q_rows.append([])
                q_rows[r].append(i)
    p, q = Tableau.from_lists(p_rows), Tableau.from_lists(q_rows)
    bound = min(matrix.rows, matrix.cols)
    assert p.shape.length <= bound, f"RSK shape {p.shape} longer than {bound}"
    return p, q


def inverse_rsk(
    p: Tableau, q: Tableau, n: int | None = None, m: int | None = None
) -> CompositionMatrix:
    """Matrix whose RSK image is (P, Q).

    ``n`` and ``m`` default to the largest entries of Q and P.
    """
    if p.shape != q.shape:
        raise ShapeMismatchError(f"P has shape {p.shape} but Q has shape {q.shape}")
    n = max(q.max_entry, 1) if n is None else n
    m = max(p.max_entry, 1) if m is None else m
    if q.max_entry > n or p.max_entry > m:
        raise ShapeMismatchError(f"tableau entries exceed the {n}x{m} matrix bounds")

    p_rows = [list(r) for r in p.rows]
    q_rows = [list(r) for r in q.rows]
    counts = [[0] * m for _ in range(n)]
    while q_rows:
        # The rightmost occurrence of the largest recording entry was inserted last.
        largest = max(row[-1] for row in q_rows)
        r = min(k for k, row in enumerate(q_rows) if row[-1] == largest)
        q_rows[r].pop()
        value = p_rows[r].pop()
        for above in range(r - 1, -1, -1):
            row = p_rows[above]
            pos = bisect_left(row, value) - 1
            row[pos], value = value, row[pos]
        if not q_rows[r]:
            q_rows.pop(r)
            p_rows.pop(r)
        counts[largest - 1][value - 1] += 1
    return CompositionMatrix.from_rows(counts)


def permutation_matrix(w: Permutation) -> CompositionMatrix:
    """Matrix with a 1 in position (i, w(i))."""
    d = w.size
    return CompositionMatrix.from_rows(
        [[1 if w.word[i] == j + 1 else 0 for j in range(d)] for i in range(d)]
    )


def rs_shape(w: Permutation) -> Partition:
    """Shape of the Robinson-Schensted insertion tableau of ``w``."""
    rows: list[list[int]] = []
    for value in w.word:
        _row_insert(rows, value)
    return Partition(parts=tuple(len(r) for r in rows))


def lds(w: Permutation) -> int:
    """Length of the longest strictly decreasing subsequence (quadratic scan)."""
    best = [1] * w.size
    for i in range(w.size):
        for j in range(i):
            if w.word[j] > w.word[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best, default=0)


def lis(w: Permutation) -> int:
    """Length of the longest strictly increasing subsequence (quadratic scan)."""
    best = [1] * w.size
    for i in range(w.size):
        for j in range(i):
            if w.word[j] < w.word[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best, default=0)
