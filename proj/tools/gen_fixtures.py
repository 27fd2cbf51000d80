#!/usr/bin/env python3
"""Writes the algebra, module and complex fixtures under fixtures/."""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def truncated_poly(name, p, n):
    mult = [[[1 if k == i + j else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    labels = ["1"] + ["x" if k == 1 else f"x^{k}" for k in range(1, n)]
    return dict(name=name, p=p, dim=n, basis=labels, idempotents=[0],
                radical=list(range(1, n)), mult=mult)


def from_products(name, p, labels, idempotents, radical, products):
    n = len(labels)
    idx = {l: i for i, l in enumerate(labels)}
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (a, b), c in products.items():
        mult[idx[a]][idx[b]][idx[c]] = 1
    return dict(name=name, p=p, dim=n, basis=labels, idempotents=idempotents,
                radical=radical, mult=mult)


def cyclic_nakayama(name, length):
    # 2-cycle a: 1 -> 2, b: 2 -> 1 modulo paths of the given length; words read left to right
    left = {"a": "e2", "b": "e1"}
    right = {"a": "e1", "b": "e2"}
    words = []
    for k in range(1, length):
        for first in "ab":
            words.append("".join("ab"[("ab".index(first) + i) % 2] for i in range(k)))
    pr = {("e1", "e1"): "e1", ("e2", "e2"): "e2"}
    for w in words:
        pr[(left[w[0]], w)] = w
        pr[(w, right[w[-1]])] = w
        for v in words:
            if right[w[-1]] == left[v[0]] and len(w) + len(v) < length:
                pr[(w, v)] = w + v
    labels = ["e1", "e2"] + words
    return from_products(name, 2, labels, [0, 1], list(range(2, len(labels))), pr)


def path_a2():
    pr = {("e1", "e1"): "e1", ("e2", "e2"): "e2", ("e2", "a"): "a", ("a", "e1"): "a"}
    return from_products("pathA2", 3, ["e1", "e2", "a"], [0, 1], [2], pr)


def uniserial(alg, i):
    n = alg["dim"]
    act = []
    for k in range(n):
        m = [[1 if r == c + k else 0 for c in range(i)] for r in range(i)]
        act.append(m)
    return {"algebra": alg["name"], "dim": i, "action": act}


def elem(n, k):
    v = [0] * n
    v[k] = 1
    return v


def write(name, obj):
    (OUT / name).write_text(json.dumps(obj, indent=1) + "\n")


def main():
    OUT.mkdir(exist_ok=True)
    algs = [truncated_poly("a2", 2, 2), truncated_poly("a3", 2, 3),
            truncated_poly("a5", 5, 5), cyclic_nakayama("n22", 2), cyclic_nakayama("n23", 3), cyclic_nakayama("n24", 4), path_a2()]
    for a in algs:
        write(f"{a['name']}.alg", a)
    for a in algs[:3]:
        n = a["dim"]
        for i in range(1, n + 1):
            write(f"{a['name']}_V{i}.mod", uniserial(a, i))
        write(f"{a['name']}_C0.cx", {"algebra": a["name"], "terms": {"0": [1]}, "diffs": {}})
        # top of P_S onto the socle of nu P_S
        write(f"{a['name']}_C1.cx", {"algebra": a["name"], "terms": {"1": [1], "0": [1]},
                                     "diffs": {"1": [[elem(n, n - 1)]]}})
        if n >= 3:
            write(f"{a['name']}_HS.cx", {"algebra": a["name"], "terms": {"2": [1], "1": [1], "0": [1]},
                                         "diffs": {"1": [[elem(n, n - 1)]], "2": [[elem(n, n - 1)]]}})
        write(f"{a['name']}_Lambda3.cx", {"algebra": a["name"], "terms": {"3": [1]}, "diffs": {}})


if __name__ == "__main__":
    main()
