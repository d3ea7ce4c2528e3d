#!/usr/bin/env python3
"""Compute cd(G) for small permutation groups and emit a JSON Lines corpus.

Degrees come from the class-multiplication coefficients of Z(CG): the
central characters are the common eigenvectors of the class matrices,
and chi(1)^2 = |G| / sum_k |K_k| |chi(g_k)/chi(1)|^2.

Usage: python3 scripts/char_degrees.py > crates/core/data/corpus.jsonl
"""
import itertools
import json
import sys

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import (AlternatingGroup, DihedralGroup,
                                              SymmetricGroup)


def elements(group):
    return [tuple(p.array_form) for p in group.generate()]


def compose(a, b):
    # apply a then b
    return tuple(b[i] for i in a)


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def degree_set(group):
    elems = elements(group)
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    inv = [index[inverse(e)] for e in elems]
    table = [[index[compose(a, b)] for b in elems] for a in elems]
    cls = [-1] * n
    classes = []
    for i in range(n):
        if cls[i] >= 0:
            continue
        members = sorted({table[table[inv[g]][i]][g] for g in range(n)})
        for m in members:
            cls[m] = len(classes)
        classes.append(members)
    ident = index[tuple(range(len(elems[0])))]
    order = sorted(range(len(classes)), key=lambda c: ident not in classes[c])
    classes = [classes[c] for c in order]
    for c, members in enumerate(classes):
        for m in members:
            cls[m] = c
    r = len(classes)
    reps = [c[0] for c in classes]
    coeff = np.zeros((r, r, r))
    for i, ki in enumerate(classes):
        for k, g in enumerate(reps):
            for x in ki:
                y = table[inv[x]][g]
                coeff[i, cls[y], k] += 1
    rng = np.random.default_rng(7)
    weights = rng.normal(size=r)
    mat = np.tensordot(weights, coeff, axes=1)
    _, vecs = np.linalg.eig(mat)
    sizes = np.array([len(c) for c in classes], dtype=float)
    degrees = set()
    for col in range(r):
        w = vecs[:, col] / vecs[0, col]
        ratio = w / sizes
        d2 = n / np.sum(sizes * np.abs(ratio) ** 2)
        d = int(round(np.sqrt(d2.real)))
        assert abs(d * d - d2) < 1e-6, (d, d2)
        degrees.add(d)
    return sorted(degrees)


def affine_line(p, mults):
    gens = [Permutation([(x + 1) % p for x in range(p)])]
    gens += [Permutation([(m * x) % p for x in range(p)]) for m in mults]
    return PermutationGroup(gens)


def gf_mul(a, b, poly, k):
    out = 0
    for i in range(k):
        if (b >> i) & 1:
            out ^= a << i
    for i in range(2 * k - 2, k - 1, -1):
        if (out >> i) & 1:
            out ^= poly << (i - k)
    return out


def affine_gf2(k, poly, frobenius):
    size = 1 << k
    gens = [Permutation([x ^ 1 for x in range(size)]),
            Permutation([gf_mul(x, 2, poly, k) for x in range(size)])]
    if frobenius:
        gens.append(Permutation([gf_mul(x, x, poly, k) for x in range(size)]))
    return PermutationGroup(gens)


def linear_on_vectors(p, mats, affine=False):
    vecs = [v for v in itertools.product(range(p), repeat=2)]
    if not affine:
        vecs = [v for v in vecs if v != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(m, v):
        return ((m[0][0] * v[0] + m[0][1] * v[1]) % p,
                (m[1][0] * v[0] + m[1][1] * v[1]) % p)

    gens = [Permutation([idx[act(m, v)] for v in vecs]) for m in mats]
    if affine:
        gens.append(Permutation([idx[((v[0] + 1) % p, v[1])] for v in vecs]))
    return PermutationGroup(gens)


def projective_line(p, mats):
    pts = [(1, x) for x in range(p)] + [(0, 1)]

    def norm(v):
        v = (v[0] % p, v[1] % p)
        if v[0]:
            inv = pow(v[0], p - 2, p)
            return (1, v[1] * inv % p)
        return (0, 1)

    idx = {v: i for i, v in enumerate(pts)}
    gens = []
    for m in mats:
        perm = [idx[norm((m[0][0] * v[0] + m[0][1] * v[1],
                          m[1][0] * v[0] + m[1][1] * v[1]))] for v in pts]
        gens.append(Permutation(perm))
    return PermutationGroup(gens)


def direct_product(g, h):
    n = g.degree
    m = h.degree
    gens = [Permutation(list(p.array_form) + list(range(n, n + m))) for p in g.generators]
    gens += [Permutation(list(range(n)) + [x + n for x in p.array_form]) for p in h.generators]
    return PermutationGroup(gens)


SL23 = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]
GL23 = SL23 + [[[2, 0], [0, 1]]]
SL25 = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]
PSL27 = [[[1, 1], [0, 1]], [[0, 6], [1, 0]], [[3, 0], [0, 5]]]


def corpus():
    solvable = [
        ("S3", SymmetricGroup(3)),
        ("S4", SymmetricGroup(4)),
        ("A4", AlternatingGroup(4)),
        ("D8", DihedralGroup(4)),
        ("D10", DihedralGroup(5)),
        ("F20", affine_line(5, [2])),
        ("F21", affine_line(7, [2])),
        ("F42", affine_line(7, [3])),
        ("AGL(1,8)", affine_gf2(3, 0b1011, False)),
        ("AGammaL(1,8)", affine_gf2(3, 0b1011, True)),
        ("AGL(1,16)", affine_gf2(4, 0b10011, False)),
        ("SL(2,3)", linear_on_vectors(3, SL23)),
        ("GL(2,3)", linear_on_vectors(3, GL23)),
        ("ASL(2,3)", linear_on_vectors(3, SL23, affine=True)),
        ("S3xS3", direct_product(SymmetricGroup(3), SymmetricGroup(3))),
        ("F21xF20", direct_product(affine_line(7, [2]), affine_line(5, [2]))),
        ("S3xA4", direct_product(SymmetricGroup(3), AlternatingGroup(4))),
    ]
    nonsolvable = [
        ("A5", AlternatingGroup(5)),
        ("S5", SymmetricGroup(5)),
        ("PSL(2,7)", projective_line(7, PSL27)),
        ("A6", AlternatingGroup(6)),
        ("SL(2,5)", linear_on_vectors(5, SL25)),
    ]
    for name, g in solvable:
        assert g.is_solvable
        yield {"name": name, "degrees": degree_set(g), "tags": ["solvable"], "order": int(g.order())}
    for name, g in nonsolvable:
        assert not g.is_solvable
        yield {"name": name, "degrees": degree_set(g), "tags": ["nonsolvable"], "order": int(g.order())}


if __name__ == "__main__":
    for entry in corpus():
        order = entry.pop("order")
        print(json.dumps(entry, separators=(",", ":")))
        print(f"{entry['name']}: |G| = {order}", file=sys.stderr)
