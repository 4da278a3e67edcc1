"""Independent reference implementations used only by the tests.

None of these share code with the package: groups are realised as concrete
permutation groups, braid-monoid equality is decided by breadth-first search
over the defining relations, and conjugators are found by exhaustive search.
"""

from __future__ import annotations

import itertools
from collections import deque


# -- Coxeter groups as permutation groups -------------------------------------


def sym_generators(n):
    """Adjacent transpositions of {0..n-1}, the Coxeter generators of A_{n-1}."""
    gens = []
    for k in range(n - 1):
        p = list(range(n))
        p[k], p[k + 1] = p[k + 1], p[k]
        gens.append(tuple(p))
    return gens


def signed_generators(n):
    """Generators of the hyperoctahedral group acting on {±1..±n} (type B_n),
    stored as permutations of 0..2n-1 where i and i+n are opposite.  The
    first generator is the sign change of coordinate 1 so that the label-4
    edge sits between vertices 1 and 2, matching the builtin B_n."""
    size = 2 * n
    flip = list(range(size))
    flip[0], flip[n] = flip[n], flip[0]
    gens = [tuple(flip)]
    for k in range(n - 1):
        p = list(range(size))
        p[k], p[k + 1] = p[k + 1], p[k]
        p[k + n], p[k + 1 + n] = p[k + 1 + n], p[k + n]
        gens.append(tuple(p))
    return gens


def compose(p, q):
    """p ∘ q."""
    return tuple(p[i] for i in q)


def evaluate(gens, word):
    size = len(gens[0])
    g = tuple(range(size))
    for s in word:
        g = compose(g, gens[s])
    return g


def cayley_lengths(gens):
    """Word length of every group element, by breadth-first search."""
    e = tuple(range(len(gens[0])))
    dist = {e: 0}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    return dist


COXETER_ORACLES = {
    "A2": lambda: sym_generators(3),
    "A3": lambda: sym_generators(4),
    "B2": lambda: signed_generators(2),
    "B3": lambda: signed_generators(3),
}


def all_words(rank, max_len):
    for L in range(max_len + 1):
        yield from itertools.product(range(rank), repeat=L)


# -- braid monoid by relation rewriting ---------------------------------------


def braid_class(word, n_strands, limit=200000):
    """All positive words equal to ``word`` in B_n^+ (0-based letters),
    found by applying the braid relations in every position."""
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if abs(a - b) >= 2:
                v = w[:i] + (b, a) + w[i + 2 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        for i in range(len(w) - 2):
            a, b, c = w[i], w[i + 1], w[i + 2]
            if a == c and abs(a - b) == 1:
                v = w[:i] + (b, a, b) + w[i + 3 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) > limit:
            raise RuntimeError("congruence class too large")
    return frozenset(seen)


def prefix_classes(word, n_strands):
    """Canonical representatives (frozen congruence classes) of all left divisors."""
    cls = braid_class(word, n_strands)
    prefixes = set()
    for w in cls:
        for k in range(len(w) + 1):
            prefixes.add(w[:k])
    out = {}
    for p in prefixes:
        if p not in out:
            c = braid_class(p, n_strands)
            for q in c:
                out[q] = c
    return set(out.values())


def brute_meet(u, v, n_strands):
    """Greatest common left divisor of positive braid words, as a congruence class."""
    common = prefix_classes(u, n_strands) & prefix_classes(v, n_strands)
    return max(common, key=lambda c: len(next(iter(c))))


# -- free reduction, independent of the package -------------------------------


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def reduced_signed_words(n_letters, max_len):
    """Freely reduced signed words over letters 1..n_letters."""
    letters = [x for k in range(1, n_letters + 1) for x in (k, -k)]
    yield ()
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in letters:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        yield from nxt
        frontier = nxt


def braid_perm(n, word):
    """Permutation of a signed braid word (0-based, composed left to right)."""
    p = list(range(n))
    for x in word:
        k = abs(x) - 1
        p[k], p[k + 1] = p[k + 1], p[k]
    return tuple(p)


def cycle_type(p):
    seen, lengths = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        L, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            L += 1
        lengths.append(L)
    return tuple(sorted(lengths))
