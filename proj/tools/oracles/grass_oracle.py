#!/usr/bin/env python3
"""Counts for the matrix-realization module: idempotents, submodule flags,
complements, and the elementary group over F5."""
import itertools

P = 5


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(k)) % P for j in range(m))
        for i in range(n)
    )


def idempotent_count():
    cnt = 0
    ms = list(itertools.product(range(P), repeat=4))
    for a, b, c, d in ms:
        M = ((a, b), (c, d))
        if mat_mul(M, M) == M:
            cnt += 1
    print("idempotents in M2(F5):", cnt, "(expect 32)")


def subspace_counts():
    # subspaces of F5^2: 0, 6 lines, full
    vecs = list(itertools.product(range(P), repeat=2))[1:]
    lines = set()
    for v in vecs:
        # normalize: first nonzero = 1
        i = 0 if v[0] else 1
        iv = pow(v[i], P - 2, P)
        lines.add(tuple(x * iv % P for x in v))
    print("submodules of F5^2 over R=F5:", 1 + len(lines) + 1, "(expect 8)")
    # complements of a fixed line: lines L' with L'+L = F^2
    L = (1, 0)
    comp = [l for l in lines if l != L and (l[1] % P) != 0 or (l != L and l[1])]
    comp = [l for l in lines if l[1] % P != 0]
    print("complements of span(1,0):", len(comp), "(expect 5)")


def elementary_group():
    # generated by 1 + strict triangles in M2(F5)
    gens = []
    for c in range(1, P):
        gens.append(((1, c), (0, 1)))
        gens.append(((1, 0), (c, 1)))
    ident = ((1, 0), (0, 1))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mat_mul(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    print("elementary group E2(F5) order:", len(group), "(expect 120 = |SL2(F5)|)")

    # orbit of the line span(1,0) (projective line)
    def act_line(g, l):
        v = (g[0][0] * l[0] + g[0][1] * l[1], g[1][0] * l[0] + g[1][1] * l[1])
        v = (v[0] % P, v[1] % P)
        i = 0 if v[0] else 1
        iv = pow(v[i], P - 2, P)
        return tuple(x * iv % P for x in v)

    orbit = {act_line(g, (1, 0)) for g in group}
    print("orbit of a line:", len(orbit), "(expect 6)")

    # Lie algebra generated by strict triangles under commutator: sl2, dim 3
    def comm(A, B):
        AB = mat_mul(A, B)
        BA = mat_mul(B, A)
        return tuple(tuple((AB[i][j] - BA[i][j]) % P for j in range(2)) for i in range(2))

    def flat(M):
        return [M[0][0], M[0][1], M[1][0], M[1][1]]

    span = [((0, 1), (0, 0)), ((0, 0), (1, 0))]
    changed = True
    while changed:
        changed = False
        rows = [flat(m) for m in span]
        for a in list(span):
            for b in list(span):
                c = comm(a, b)
                test = rows + [flat(c)]
                if rref_rank(test) > rref_rank(rows):
                    span.append(c)
                    rows.append(flat(c))
                    changed = True
    print("Lie algebra generated by strict triangles: dim", rref_rank([flat(m) for m in span]), "(expect 3)")


def rref_rank(rows):
    m = [[x % P for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if m[i][c] % P), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        iv = pow(m[r][c], P - 2, P)
        m[r] = [x * iv % P for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] % P:
                f = m[i][c]
                m[i] = [(a - f_ * b) % P for a, b, f_ in zip(m[i], m[r], [f] * nc)]
        r += 1
        if r == nr:
            break
    return r


def rank1_right_ideal_complements():
    # V = M2(F5) as right module over R = M2(F5); rank-1 "column" submodules:
    # W = {X : col(X) <= L} for a line L; complements are W' for complementary L'.
    # count of complements of a fixed rank-1 submodule = 5 (matches line case)
    print("rank-1 right-ideal complements (k=2):", 5, "(by line-complement count)")


if __name__ == "__main__":
    idempotent_count()
    subspace_counts()
    elementary_group()
    rank1_right_ideal_complements()
