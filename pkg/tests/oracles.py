"""Slow, independent reference implementations used only by the tests.

Nothing here calls into the enumeration or operator code under test
except where noted, so agreement is evidence rather than tautology.
"""

from collections import Counter
from itertools import permutations, product


def partitions_brute(m):
    """Weakly decreasing compositions of m, found by filtering all compositions."""
    out = []
    for cuts in product((0, 1), repeat=max(m - 1, 0)):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        if all(a >= b for a, b in zip(parts, parts[1:])):
            out.append(tuple(parts))
    return sorted(set(out), reverse=True)


def _valid_ssyt(rows):
    for row in rows:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for r in range(1, len(rows)):
        for c, x in enumerate(rows[r]):
            if not rows[r - 1][c] < x:
                return False
    return True


def _fill(parts, letters):
    it = iter(letters)
    return tuple(tuple(next(it) for _ in range(p)) for p in parts)


def ssyt_brute(parts, n):
    """Every filling of the diagram with 1..n, kept when semistandard."""
    size = sum(parts)
    return sorted(rows for rows in (_fill(parts, w) for w in product(range(1, n + 1), repeat=size))
                  if _valid_ssyt(rows))


def syt_brute(parts):
    size = sum(parts)
    return sorted(rows for rows in (_fill(parts, w) for w in permutations(range(1, size + 1)))
                  if _valid_ssyt(rows))


def word_of(rows):
    return tuple(x for row in reversed(rows) for x in row)


def rows_of(parts, word):
    """Inverse of word_of for a given shape (top row comes first in the word)."""
    out, k = [], len(word)
    for p in parts:
        out.append(tuple(word[k - p:k]))
        k -= p
    return tuple(out)


def _unpaired(word, color):
    """Bracket rule: an i+1 cancels against a later i.  Returns unpaired positions."""
    opens, lone_i = [], []
    for k, x in enumerate(word):
        if x == color + 1:
            opens.append(k)
        elif x == color:
            if opens:
                opens.pop()
            else:
                lone_i.append(k)
    return lone_i, opens


def f_bracket(rows, color):
    parts = [len(r) for r in rows]
    w = list(word_of(rows))
    lone_i, _ = _unpaired(w, color)
    if not lone_i:
        return None
    w[lone_i[-1]] = color + 1
    return rows_of(parts, w)


def e_bracket(rows, color):
    parts = [len(r) for r in rows]
    w = list(word_of(rows))
    _, lone_next = _unpaired(w, color)
    if not lone_next:
        return None
    w[lone_next[0]] = color
    return rows_of(parts, w)


def f_inverse_search(rows, color, n, e_op):
    """Try every occurrence of ``color``; keep the unique valid u with e_op(u) = rows.

    ``e_op`` is passed in (rows -> rows or None) so the search is checked
    against whichever raising operator the caller trusts.
    """
    parts = [len(r) for r in rows]
    w = word_of(rows)
    hits = set()
    for k, x in enumerate(w):
        if x != color:
            continue
        cand = rows_of(parts, w[:k] + (color + 1,) + w[k + 1:])
        if _valid_ssyt(cand) and e_op(cand) == rows:
            hits.add(cand)
    assert len(hits) <= 1, f"inverse search found {len(hits)} candidates"
    return hits.pop() if hits else None


def kostka_brute(parts, n):
    return Counter(tuple(sum(row.count(a) for row in rows) for a in range(1, n + 1))
                   for rows in ssyt_brute(parts, n))


def hook_product_count(parts):
    from math import factorial
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    prod = 1
    for r, p in enumerate(parts):
        for c in range(p):
            prod *= (p - c - 1) + (conj[c] - r - 1) + 1
    return factorial(sum(parts)) // prod


def descent_signature(word):
    """+1 at i when i occurs before i+1 in the word."""
    pos = {x: k for k, x in enumerate(word)}
    return tuple(1 if pos[i] < pos[i + 1] else -1 for i in range(1, len(word)))


def ede_brute(word, i):
    """Dual equivalence move by cases on the relative positions of i-1, i, i+1."""
    pos = {x: k for k, x in enumerate(word)}
    a, b, c = pos[i - 1], pos[i], pos[i + 1]
    if min(a, c) < b < max(a, c):
        return tuple(word)
    if min(b, c) < a < max(b, c):
        swap = (i, i + 1)
    else:
        swap = (i - 1, i)
    table = {swap[0]: swap[1], swap[1]: swap[0]}
    return tuple(table.get(x, x) for x in word)


def brute_automorphisms(size, edges, signatures):
    """All vertex permutations preserving signatures and colored edges (tiny graphs only)."""
    edge_set = {(min(u, v), max(u, v), c) for u, v, c in edges}
    found = []
    for perm in permutations(range(size)):
        if any(signatures[perm[v]] != signatures[v] for v in range(size)):
            continue
        mapped = {(min(perm[u], perm[v]), max(perm[u], perm[v]), c) for u, v, c in edge_set}
        if mapped == edge_set:
            found.append(perm)
    return found
