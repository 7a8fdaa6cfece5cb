#!/usr/bin/env python3
"""Regenerate data/a7.json and data/2a7.json.

Both groups are built explicitly: A7 as even permutations of 7 points and
2.A7 as the even part of the spin double cover of S7, realized by 8x8
complex matrices t_i = (e_i - e_{i+1})/sqrt(2) with e_i = i*gamma_i.
Irreducible characters come from Burnside's class-multiplication algorithm;
exact values are recovered as eigenvalue multiplicities over roots of unity,
so every value in the output is a sum of roots of unity with integer
multiplicities. The C++ validator re-checks everything in exact arithmetic.

Usage: python3 tools/gen_chartables.py [out_dir]
"""
import itertools
import json
import math
import sys

import numpy as np


def perm_mul(p, q):
    # (p*q)(i) = p(q(i))
    return tuple(p[i] for i in q)


def perm_inv(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def perm_sign(p):
    seen, sign = set(), 1
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cycle_type(p):
    seen, parts = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


class PermGroup:
    def __init__(self, gens):
        ident = tuple(range(len(gens[0])))
        self.identity = ident
        self.gens = gens
        self.elements = [ident]
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = perm_mul(g, x)
                    if y not in seen:
                        seen.add(y)
                        self.elements.append(y)
                        nxt.append(y)
            frontier = nxt

    def key(self, x):
        return x

    def mul(self, a, b):
        return perm_mul(a, b)

    def inv(self, a):
        return perm_inv(a)

    def label(self, x):
        return cycle_type(x)


def gamma_matrices():
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    i2 = np.eye(2, dtype=complex)
    k = lambda a, b, c: np.kron(np.kron(a, b), c)
    return [k(sx, i2, i2), k(sy, i2, i2), k(sz, sx, i2), k(sz, sy, i2),
            k(sz, sz, sx), k(sz, sz, sy), k(sz, sz, sz)]


class SpinGroup:
    """Even part of 2.S7, elements are (matrix, permutation) pairs."""

    def __init__(self):
        gam = gamma_matrices()
        e = [1j * g for g in gam]
        for a, b in itertools.combinations(range(7), 2):
            assert np.allclose(e[a] @ e[b], -e[b] @ e[a])
        t = []
        for i in range(6):
            m = (e[i] - e[i + 1]) / math.sqrt(2)
            p = list(range(7))
            p[i], p[i + 1] = p[i + 1], p[i]
            t.append((m, tuple(p)))
        gens = [self.mul(t[0], t[i]) for i in range(1, 6)]
        gens += [self.mul(t[i], t[i + 1]) for i in range(5)]
        ident = (np.eye(8, dtype=complex), tuple(range(7)))
        self.identity = ident
        self.gens = gens
        self.elements = [ident]
        seen = {self.key(ident)}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(g, x)
                    ky = self.key(y)
                    if ky not in seen:
                        seen.add(ky)
                        self.elements.append(y)
                        nxt.append(y)
            frontier = nxt

    @staticmethod
    def key(x):
        return tuple(np.round(x[0].flatten().real * 1e6).astype(np.int64).tolist()
                     + np.round(x[0].flatten().imag * 1e6).astype(np.int64).tolist())

    @staticmethod
    def mul(a, b):
        return (a[0] @ b[0], perm_mul(a[1], b[1]))

    @staticmethod
    def inv(a):
        return (a[0].conj().T, perm_inv(a[1]))

    @staticmethod
    def label(x):
        return cycle_type(x[1])


def character_table(G, conductor):
    key = G.key
    index = {key(x): i for i, x in enumerate(G.elements)}
    n = len(G.elements)
    class_of = [-1] * n
    classes = []
    for i, x in enumerate(G.elements):
        if class_of[i] >= 0:
            continue
        c = len(classes)
        members = [i]
        class_of[i] = c
        stack = [x]
        while stack:
            y = stack.pop()
            for g in G.gens:
                z = G.mul(G.mul(g, y), G.inv(g))
                j = index[key(z)]
                if class_of[j] < 0:
                    class_of[j] = c
                    members.append(j)
                    stack.append(z)
        classes.append(members)

    def order(x):
        k, y = 1, x
        while key(y) != key(G.identity):
            y = G.mul(y, x)
            k += 1
        return k

    info = []
    for c, members in enumerate(classes):
        rep = G.elements[members[0]]
        info.append({"rep": rep, "size": len(members), "order": order(rep),
                     "label": G.label(rep)})
    # identity first, then by element order and class size (Atlas ordering)
    perm = sorted(range(len(classes)),
                  key=lambda c: (info[c]["order"], info[c]["size"],
                                 info[c]["label"], c))
    remap = {old: new for new, old in enumerate(perm)}
    classes = [classes[c] for c in perm]
    info = [info[c] for c in perm]
    class_of = [remap[c] for c in class_of]
    k = len(classes)

    def power_class(c, e):
        x = info[c]["rep"]
        y = G.identity
        for _ in range(e):
            y = G.mul(y, x)
        return class_of[index[key(y)]]

    # class multiplication coefficients a[r][s][t]
    a = np.zeros((k, k, k))
    for t in range(k):
        gt = info[t]["rep"]
        for r in range(k):
            for xi in classes[r]:
                y = G.mul(G.inv(G.elements[xi]), gt)
                a[r][class_of[index[key(y)]]][t] += 1
    rng = np.random.default_rng(7)
    coeffs = rng.standard_normal(k)
    m = sum(coeffs[r] * a[r] for r in range(k))
    _, vecs = np.linalg.eig(m)
    sizes = np.array([c["size"] for c in info], dtype=float)
    chars = []
    for col in range(k):
        w = vecs[:, col] / vecs[0, col]
        deg = math.sqrt(n / np.sum(np.abs(w) ** 2 / sizes))
        chars.append(w * deg / sizes)
    chars.sort(key=lambda ch: (round(ch[0].real), [round(v.real, 6) for v in ch],
                               [round(v.imag, 6) for v in ch]))

    irreps = []
    for idx, ch in enumerate(chars):
        values = []
        for c in range(k):
            val = ch[c]
            if abs(val.imag) < 1e-7 and abs(val.real - round(val.real)) < 1e-7:
                r = int(round(val.real))
                values.append([] if r == 0 else [[0, r]])
                continue
            mo = info[c]["order"]
            pw = [ch[power_class(c, e)] for e in range(mo)]
            mult = []
            for j in range(mo):
                s = sum(pw[e] * np.exp(-2j * math.pi * j * e / mo) for e in range(mo)) / mo
                assert abs(s - round(s.real)) < 1e-6, s
                mult.append(int(round(s.real)))
            low = min(mult)
            mult = [x - low for x in mult]
            recon = sum(mult[j] * np.exp(2j * math.pi * j / mo) for j in range(mo))
            assert abs(recon - val) < 1e-6
            step = conductor // mo
            values.append([[j * step, mult[j]] for j in range(mo) if mult[j]])
        irreps.append({"label": f"chi{idx + 1}", "degree": int(round(ch[0].real)),
                       "values": values})

    names, counter = [], {}
    for c in info:
        o = c["order"]
        counter[o] = counter.get(o, 0) + 1
        names.append(f"{o}{chr(ord('A') + counter[o] - 1)}")
    out_classes = []
    for c in range(k):
        out_classes.append({"name": names[c], "size": info[c]["size"],
                            "order": info[c]["order"],
                            "square_class": power_class(c, 2),
                            "cycle_type": list(info[c]["label"])})
    return out_classes, irreps


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "data"
    a7 = PermGroup([(1, 2, 3, 4, 5, 6, 0), (1, 2, 0, 3, 4, 5, 6)])
    assert len(a7.elements) == 2520
    cls, irr = character_table(a7, 420)
    with open(f"{out_dir}/a7.json", "w") as fh:
        json.dump({"group": "A7", "order": 2520, "conductor": 420,
                   "classes": cls, "irreps": irr}, fh, indent=1)
        fh.write("\n")
    spin = SpinGroup()
    assert len(spin.elements) == 5040, len(spin.elements)
    cls, irr = character_table(spin, 840)
    with open(f"{out_dir}/2a7.json", "w") as fh:
        json.dump({"group": "2.A7", "order": 5040, "conductor": 840,
                   "classes": cls, "irreps": irr}, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main()
