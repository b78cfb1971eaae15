"""Regenerates data/corpus/expected/*.json.

Independent of the C++ code: Alexander from the reduced Burau matrix in sympy,
Jones from a dictionary-based Temperley-Lieb state walk, signature from a
Fraction LDL of V + V^T, linking numbers by strand tracking.
"""
import json
import pathlib
import sys
from fractions import Fraction

import sympy as sp

t = sp.symbols("t")
ROOT = pathlib.Path(__file__).resolve().parents[2] / "data" / "corpus"


def expand(n, bands):
    out = []
    for i, j in bands:
        pre = list(range(i, j - 1))
        out += pre + [j - 1] + [-k for k in reversed(pre)]
    return out


def cycles(n, art):
    at = list(range(n))
    for g in art:
        k = abs(g) - 1
        at[k], at[k + 1] = at[k + 1], at[k]
    image = [0] * n
    for pos, s in enumerate(at):
        image[s] = pos
    seen, out = [False] * n, []
    for s in range(n):
        if not seen[s]:
            c, x = [], s
            while not seen[x]:
                seen[x] = True
                c.append(x)
                x = image[x]
            out.append(c)
    return out


def normalize(expr):
    expr = sp.cancel(expr)
    if expr == 0:
        return []
    num, _ = sp.fraction(expr)
    coeffs = sp.Poly(sp.expand(num), t).all_coeffs()[::-1]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return [[e, int(c)] for e, c in enumerate(coeffs) if c != 0]


def alexander(n, art):
    if n == 1:
        return [[0, 1]]
    m = sp.eye(n - 1)
    for g in art:
        k = abs(g) - 1
        b = sp.eye(n - 1)
        if g > 0:
            b[k, k] = -t
            if k > 0:
                b[k, k - 1] = t
            if k < n - 2:
                b[k, k + 1] = 1
        else:
            b[k, k] = -1 / t
            if k > 0:
                b[k, k - 1] = 1
            if k < n - 2:
                b[k, k + 1] = 1 / t
        m = m * b
    return normalize((sp.eye(n - 1) - m).det() * (1 - t) / (1 - t**n))


def extract(n, art, comp):
    keep = set(cycles(n, art)[comp])
    at, out = list(range(n)), []
    for g in art:
        k = abs(g) - 1
        if at[k] in keep and at[k + 1] in keep:
            idx = sum(1 for q in at[:k] if q in keep)
            out.append((idx + 1) * (1 if g > 0 else -1))
        at[k], at[k + 1] = at[k + 1], at[k]
    return len(keep), out


def linking(n, art):
    cs = cycles(n, art)
    cid = {s: ci for ci, c in enumerate(cs) for s in c}
    lk = [[0] * len(cs) for _ in cs]
    at = list(range(n))
    for g in art:
        k = abs(g) - 1
        a, b = cid[at[k]], cid[at[k + 1]]
        if a != b:
            s = 1 if g > 0 else -1
            lk[a][b] += s
            lk[b][a] += s
        at[k], at[k + 1] = at[k + 1], at[k]
    return [[x // 2 for x in row] for row in lk]


def seifert(n, art):
    cols = {}
    for pos, g in enumerate(art):
        cols.setdefault(abs(g), []).append(pos)
    gens = [(k, c[r], c[r + 1]) for k in sorted(cols) for c in [cols[k]] for r in range(len(c) - 1)]
    eps = [1 if g > 0 else -1 for g in art]
    v = [[0] * len(gens) for _ in gens]
    for i, (k, a, b) in enumerate(gens):
        v[i][i] = -(eps[a] + eps[b]) // 2
        for j, (l, c, d) in enumerate(gens):
            if k == l and b == c:
                if eps[b] > 0:
                    v[i][j] += 1
                else:
                    v[j][i] -= 1
            if l == k + 1:
                if a < c < b < d:
                    v[i][j] -= 1
                if c < a < d < b:
                    v[i][j] += 1
    return v


def signature(v):
    a = [[Fraction(v[i][j] + v[j][i]) for j in range(len(v))] for i in range(len(v))]
    sig = 0
    while a:
        n = len(a)
        p = next((i for i in range(n) if a[i][i] != 0), None)
        if p is None:
            q = next(((i, j) for i in range(n) for j in range(n) if a[i][j] != 0), None)
            if q is None:
                break
            i, j = q
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        piv = a[p][p]
        sig += 1 if piv > 0 else -1
        a = [[a[i][j] - a[i][p] * a[p][j] / piv for j in range(n) if j != p] for i in range(n) if i != p]
    return sig


def jones(n, art):
    """Exponents in powers of t^(1/2)."""
    ident = tuple(list(range(n, 2 * n)) + list(range(n)))
    state = {ident: {0: 1}}
    loop = {2: -1, -2: -1}

    def cap(m, k):
        m = list(m)
        a, b = n + k, n + k + 1
        if m[a] == b:
            return tuple(m), True
        x, y = m[a], m[b]
        m[x], m[y], m[a], m[b] = y, x, b, a
        return tuple(m), False

    def add(d, p, shift, mult=None):
        for e, c in p.items():
            for e2, c2 in (mult or {0: 1}).items():
                d[e + shift + e2] = d.get(e + shift + e2, 0) + c * c2

    for g in art:
        k, s = abs(g) - 1, (1 if g > 0 else -1)
        new = {}
        for m, p in state.items():
            add(new.setdefault(m, {}), p, s)
            m2, closed = cap(m, k)
            add(new.setdefault(m2, {}), p, -s, loop if closed else None)
        state = {m: {e: c for e, c in p.items() if c} for m, p in new.items()}
    total = {}
    for m, p in state.items():
        seen, loops = [False] * (2 * n), 0
        for s0 in range(2 * n):
            if seen[s0]:
                continue
            loops += 1
            x = s0
            while not seen[x]:
                seen[x] = True
                y = m[x]
                seen[y] = True
                x = y + n if y < n else y - n
        q = {0: 1}
        for _ in range(loops - 1):
            r = {}
            add(r, q, 0, loop)
            q = r
        add(total, p, 0, q)
    w = sum(1 if g > 0 else -1 for g in art)
    out = {}
    for e, c in total.items():
        if c:
            e2 = e - 3 * w
            assert e2 % 2 == 0
            out[-e2 // 2] = out.get(-e2 // 2, 0) + c * (-1) ** (w % 2)
    return [[e, c] for e, c in sorted(out.items()) if c]


def evaluate(poly, x):
    return sum(c * x**e for e, c in poly)


def main():
    entries = []
    for line in (ROOT / "corpus.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split()
        name, n = parts[0], int(parts[1])
        bands = [tuple(map(int, tok[2:-1].split(","))) for tok in parts[2:]]
        entries.append((name, n, bands))
    for name, n, bands in entries:
        art = expand(n, bands)
        comps = cycles(n, art)
        delta = alexander(n, art)
        record = {
            "name": name,
            "strands": n,
            "crossings": len(art),
            "components": len(comps),
            "euler": n - len(bands),
            "linking": linking(n, art),
            "alexander": delta,
            "determinant": abs(evaluate(delta, -1)),
            "signature": signature(seifert(n, art)),
            "component_alexander": [alexander(*extract(n, art, c)) for c in range(len(comps))],
            "jones": jones(n, art) if n <= 8 else None,
        }
        (ROOT / "expected" / f"{name}.json").write_text(json.dumps(record, indent=1) + "\n")
        print(name, record["alexander"], record["signature"], file=sys.stderr)


if __name__ == "__main__":
    main()
