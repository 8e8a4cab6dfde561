#!/usr/bin/env python3
"""Naive brute-force oracle for Hurwitz-orbit computations at tiny degree.

Independent of the C++ library: permutations are tuples of 0-based images,
products are (p*q)(i) = p(q(i)), orbits are found by plain graph search
over explicitly materialized word sets.

Usage:
    brute_force.py values      print the frozen scalar values used by the tests
    brute_force.py partitions  write tests/data/d3_transposition_partitions.txt
    brute_force.py d4n8        the d=4 length-8 scan row (slow)
"""

import itertools
import sys
from collections import Counter
from math import factorial
from pathlib import Path


def ident(d):
    return tuple(range(d))


def mul(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def inv(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def conj(g, a):
    return mul(mul(g, a), inv(g))


def cycles(p):
    seen, out = set(), []
    for s in range(len(p)):
        if s in seen:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(x)
            x = p[x]
        out.append(c)
    return out


def cycle_type(p):
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def transp(d, i, j):
    p = list(range(d))
    p[i - 1], p[j - 1] = j - 1, i - 1
    return tuple(p)


def from_cycles(d, cyc):
    p = list(range(d))
    for c in cyc:
        for k in range(len(c)):
            p[c[k] - 1] = c[(k + 1) % len(c)] - 1
    return tuple(p)


def fmt(p):
    cs = [c for c in cycles(p) if len(c) > 1]
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cs)


def product(word, d):
    r = ident(d)
    for g in word:
        r = mul(r, g)
    return r


def closure(gens, d):
    seen = {ident(d)}
    todo = [ident(d)]
    while todo:
        x = todo.pop()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def transitive(word, d):
    reach = {0}
    todo = [0]
    while todo:
        x = todo.pop()
        for g in word:
            for y in (g[x], inv(g)[x]):
                if y not in reach:
                    reach.add(y)
                    todo.append(y)
    return len(reach) == d


def neighbours(word):
    w = list(word)
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        yield tuple(w[:i] + [conj(a, b), a] + w[i + 2:])
        yield tuple(w[:i] + [b, conj(inv(b), a)] + w[i + 2:])


def orbit(word):
    seen = {word}
    todo = [word]
    while todo:
        x = todo.pop()
        for y in neighbours(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def partition(words, extra_edges=None):
    """Connected components of the move graph restricted to `words`."""
    words = set(words)
    left = set(words)
    parts = []
    while left:
        start = min(left)
        comp = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            nbrs = list(neighbours(x))
            if extra_edges:
                nbrs += extra_edges(x)
            for y in nbrs:
                if y in words and y not in comp:
                    comp.add(y)
                    todo.append(y)
        parts.append(comp)
        left -= comp
    return parts


def class_elements(d, ct):
    return [p for p in itertools.permutations(range(d)) if cycle_type(p) == ct]


def min_word(d, cls, target, limit=8):
    layer = {ident(d)}
    for m in range(1, limit + 1):
        layer = {mul(p, c) for p in layer for c in cls}
        if target in layer:
            return m
    return None


def fiber(d, alphabet, n, prod, constraint=None):
    out = []
    for w in itertools.product(alphabet, repeat=n):
        if product(w, d) != prod:
            continue
        if constraint == "full" and len(closure(w, d)) != factorial(d):
            continue
        if constraint == "transitive" and not transitive(w, d):
            continue
        out.append(w)
    return out


def values():
    T3 = [transp(3, 1, 2), transp(3, 1, 3), transp(3, 2, 3)]
    T4 = [transp(4, i, j) for i in range(1, 5) for j in range(i + 1, 5)]
    id3, id4 = ident(3), ident(4)
    v = {}

    v["compose((1,2),(2,3))"] = fmt(mul(transp(3, 1, 2), transp(3, 2, 3)))
    v["conj((1,2),(2,3))"] = fmt(conj(transp(3, 1, 2), transp(3, 2, 3)))
    v["conj((1,3),(1,2))"] = fmt(conj(transp(3, 1, 3), transp(3, 1, 2)))
    v["k([4],d=4)"] = len(class_elements(4, (4,)))

    four = class_elements(4, (4,))
    v["m_C(d=4,[4])"] = min_word(4, four, transp(4, 1, 2))
    four_fix = [p for p in class_elements(6, (4, 1, 1)) if p[4] == 4 and p[5] == 5]
    v["m_C_constrained(d=6,[4,1,1],fix={5,6})"] = min_word(6, four_fix, transp(6, 1, 2))
    v["m_C(d=6,[4,1,1])"] = min_word(6, class_elements(6, (4, 1, 1)), transp(6, 1, 2))
    v["|<3-cycles of S4>|"] = len(closure(class_elements(4, (3, 1)), 4))
    klein = [from_cycles(4, [[1, 2], [3, 4]]), from_cycles(4, [[1, 3], [2, 4]])]
    v["|<(12)(34),(13)(24)>|"] = len(closure(klein, 4))

    c4 = from_cycles(4, [[1, 2, 3, 4]])
    v["alpha(h,d=4)"] = fmt(mul(mul(c4, c4), c4))

    v["R1((1,2),(2,3))"] = " ".join(fmt(g) for g in list(neighbours((T3[0], T3[2])))[0])
    v["rho((1,3),((1,2),(2,3)))"] = " ".join(
        fmt(conj(transp(3, 1, 3), g)) for g in (T3[0], T3[2]))

    v["orbit((1,2),(2,3))"] = sorted(
        " ".join(fmt(g) for g in w) for w in orbit((T3[0], T3[2])))
    w3 = (T3[0], T3[2], T3[0])
    v["orbit((1,2),(2,3),(1,2)).size"] = len(orbit(w3))
    v["alpha((1,2),(2,3),(1,2))"] = fmt(product(w3, 3))
    v["orbit((1,2),(1,2))==orbit((1,3),(1,3))"] = (T3[1], T3[1]) in orbit((T3[0], T3[0]))

    v["fiber(d=3,T:2,(1,2))"] = len(fiber(3, T3, 2, transp(3, 1, 2)))
    v["fiber(d=3,T:2,id)"] = len(fiber(3, T3, 2, id3))
    v["fiber(d=3,T:4,id,transitive)"] = len(fiber(3, T3, 4, id3, "transitive"))
    v["fiber(d=3,T:4,id,full)"] = len(fiber(3, T3, 4, id3, "full"))
    v["fiber(d=3,T:4,id)"] = len(fiber(3, T3, 4, id3))
    v["orbits(d=3,T:2,id)"] = len(partition(fiber(3, T3, 2, id3)))
    v["orbits(d=3,T:4,id,full)"] = len(partition(fiber(3, T3, 4, id3, "full")))
    v["orbits(d=3,T:4,id)"] = len(partition(fiber(3, T3, 4, id3)))
    f46 = fiber(4, T4, 6, id4, "full")
    v["fiber(d=4,T:6,id,full)"] = len(f46)
    v["orbits(d=4,T:6,id,full)"] = len(partition(f46))
    f43 = fiber(4, T4, 3, transp(4, 1, 2), "full")
    v["orbits(d=4,T:3,(1,2),full)"] = len(partition(f43))
    f43a = fiber(4, T4, 3, transp(4, 1, 2))
    v["fiber(d=4,T:3,(1,2))"] = len(f43a)
    v["orbits(d=4,T:3,(1,2))"] = len(partition(f43a))

    for n in (2, 4, 6, 8):
        fb = fiber(3, T3, n, id3, "full")
        v[f"scan(d=3,T,id,full) n={n}"] = (len(fb), len(partition(fb)))
    for n in (2, 4, 6):
        fb = fiber(4, T4, n, id4, "full")
        v[f"scan(d=4,T,id,full) n={n}"] = (len(fb), len(partition(fb)))

    # components of HUR_{3,2}: all non-identity letters, product id, words
    # identified under Hurwitz moves and simultaneous conjugation
    nonid3 = [p for p in itertools.permutations(range(3)) if p != id3]
    gens3 = [transp(3, 1, 2), transp(3, 2, 3)]

    def conj_edges(w):
        return [tuple(conj(g, a) for a in w) for g in gens3]

    all2 = fiber(3, nonid3, 2, id3)
    v["HUR(d=3,b=2) words"] = len(all2)
    v["HUR(d=3,b=2) components, all"] = len(partition(all2, conj_edges))
    v["HUR(d=3,b=2) components, transitive"] = len(
        partition([w for w in all2 if transitive(w, 3)], conj_edges))
    all4 = fiber(3, nonid3, 4, id3, "full")
    by_type = Counter()
    for part in partition(all4):
        w = next(iter(part))
        by_type[tuple(sorted(Counter(cycle_type(g) for g in w).items()))] += 1
    v["HUR^S3(d=3,b=4) orbits by type"] = dict(by_type)

    # d=3 tail rewriting: every generating transposition word of length n
    # has an orbit member ending in h = ((1,2),(2,3))^3
    h = (T3[0], T3[2]) * 3
    for n in (6, 7, 8):
        bad = 0
        total = 0
        seen = set()
        for w in itertools.product(T3, repeat=n):
            if len(closure(w, 3)) != 6 or w in seen:
                continue
            orb = orbit(w)
            seen |= orb
            ok = any(x[-6:] == h for x in orb)
            total += len(orb)
            bad += 0 if ok else len(orb)
        v[f"tail h, d=3, n={n}: generating words / failures"] = (total, bad)

    for k, val in v.items():
        print(f"{k}: {val}")


def partitions(path):
    T3 = sorted([transp(3, 1, 2), transp(3, 1, 3), transp(3, 2, 3)])
    lines = []
    for n in range(1, 6):
        words = list(itertools.product(T3, repeat=n))
        for part in partition(words):
            lines.append(" | ".join(sorted(" ".join(fmt(g) for g in w) for w in part)))
    lines.sort()
    Path(path).write_text("d=3\n" + "\n".join(lines) + "\n")
    print(f"wrote {len(lines)} orbits to {path}")


def scan_d4_n8():
    # slow (~minutes): 6^8 words, kept out of `values`
    T4 = [transp(4, i, j) for i in range(1, 5) for j in range(i + 1, 5)]
    fb = fiber(4, T4, 8, ident(4), "full")
    print(f"scan(d=4,T,id,full) n=8: {(len(fb), len(partition(fb)))}")


if __name__ == "__main__":
    cmd = sys.argv[1] if len(sys.argv) > 1 else "values"
    if cmd == "values":
        values()
    elif cmd == "d4n8":
        scan_d4_n8()
    elif cmd == "partitions":
        out = Path(__file__).resolve().parent.parent / "data" / "d3_transposition_partitions.txt"
        partitions(out)
    else:
        sys.exit(__doc__)
