"""Hand-written textbook recurrences, independent of the kernel contract.

These validate the kernel definitions themselves (the contract-driven
oracle shares pe_func with the engine, so it can only vouch for the
scheduling).  Classical (Q+1) x (R+1) matrices: entry [i][j] is the best
score over the first i query and j reference symbols; interior cell
(i, j) of the contract-driven matrices corresponds to [i+1][j+1].
"""

from __future__ import annotations


def nw_matrix(query, reference, match, mismatch, gap):
    """Global alignment with a linear gap price."""
    q_len = len(query)
    r_len = len(reference)
    h = [[0] * (r_len + 1) for _ in range(q_len + 1)]
    for j in range(1, r_len + 1):
        h[0][j] = j * gap
    for i in range(1, q_len + 1):
        h[i][0] = i * gap
        for j in range(1, r_len + 1):
            sub = match if query[i - 1] == reference[j - 1] else mismatch
            h[i][j] = max(
                h[i - 1][j - 1] + sub, h[i - 1][j] + gap, h[i][j - 1] + gap
            )
    return h


def nw_score(query, reference, match, mismatch, gap):
    return nw_matrix(query, reference, match, mismatch, gap)[-1][-1]


def sw_matrix(query, reference, match, mismatch, gap):
    """Local alignment with a linear gap price and zero clamp."""
    q_len = len(query)
    r_len = len(reference)
    h = [[0] * (r_len + 1) for _ in range(q_len + 1)]
    for i in range(1, q_len + 1):
        for j in range(1, r_len + 1):
            sub = match if query[i - 1] == reference[j - 1] else mismatch
            h[i][j] = max(
                0,
                h[i - 1][j - 1] + sub,
                h[i - 1][j] + gap,
                h[i][j - 1] + gap,
            )
    return h


def sw_best(query, reference, match, mismatch, gap):
    return max(max(row) for row in sw_matrix(query, reference, match, mismatch, gap))


def dtw_matrix(xs, ys, dist):
    """Classic warping-cost table: d[i][j] = dist + min of the three moves."""
    n = len(xs)
    m = len(ys)
    d = [[0.0] * m for _ in range(n)]
    d[0][0] = dist(xs[0], ys[0])
    for j in range(1, m):
        d[0][j] = d[0][j - 1] + dist(xs[0], ys[j])
    for i in range(1, n):
        d[i][0] = d[i - 1][0] + dist(xs[i], ys[0])
        for j in range(1, m):
            d[i][j] = dist(xs[i], ys[j]) + min(
                d[i - 1][j - 1], d[i - 1][j], d[i][j - 1]
            )
    return d


def dtw_cost(xs, ys, dist):
    return dtw_matrix(xs, ys, dist)[-1][-1]
