#!/usr/bin/env python3
"""Universal central extension via Lambda^2 g modulo Jacobi relations,
checked on small algebras over F5, plus the abelian-pair group count."""
import itertools

P = 5


def rref(rows):
    m = [[x % P for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    r = 0
    piv = []
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
                m[i] = [(a - f * b) % P for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
        if r == nr:
            break
    return m[:r], piv


def ucext_dims(dim, bracket):
    """Return (dim Lambda^2, relation rank, dim <g,g>, dim ker b, perfect)."""
    pairs = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    npairs = len(pairs)
    idx = {pq: k for k, pq in enumerate(pairs)}

    def wedge_coords(xc, yc):
        # x wedge y for coordinate vectors
        out = [0] * npairs
        for i in range(dim):
            for j in range(dim):
                if xc[i] == 0 or yc[j] == 0:
                    continue
                c = xc[i] * yc[j]
                if i < j:
                    out[idx[(i, j)]] = (out[idx[(i, j)]] + c) % P
                elif j < i:
                    out[idx[(j, i)]] = (out[idx[(j, i)]] - c) % P
        return out

    basis = [tuple(1 if t == s else 0 for t in range(dim)) for s in range(dim)]
    rel = []
    for i, j, k in itertools.combinations(range(dim), 3):
        x, y, z = basis[i], basis[j], basis[k]
        row = [0] * npairs
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            w = wedge_coords(bracket(a, b), c)
            row = [(u + v) % P for u, v in zip(row, w)]
        if any(row):
            rel.append(row)
    rel_rr, _ = rref(rel)
    rel_rank = len(rel_rr)
    quol = npairs - rel_rank
    # b: Lambda^2 -> g, x wedge y -> [x,y]; compute rank of b on the quotient:
    # rank of the map on Lambda^2 (relations are in ker b by Jacobi).
    bmat = []
    for (i, j) in pairs:
        bmat.append(list(bracket(basis[i], basis[j])))
    b_rr, _ = rref(bmat)
    b_rank = len(b_rr)
    ker_quo = quol - b_rank
    perfect = b_rank == dim
    return npairs, rel_rank, quol, ker_quo, perfect


def sl2_bracket(x, y):
    ec = 2 * (x[1] * y[0] - y[1] * x[0])
    hc = x[0] * y[2] - x[2] * y[0]
    fc = -2 * (x[1] * y[2] - y[1] * x[2])
    return (ec % P, hc % P, fc % P)


def heis_bracket(x, y):
    # trivial (1,1) pair TKK: basis (v, E, w), [E,v]=v, [E,w]=-w, [v,w]=0
    vc = (x[1] * y[0] - y[1] * x[0]) % P
    wc = -(x[1] * y[2] - y[1] * x[2]) % P
    return (vc, 0, wc)


def abelian_group_count():
    # Ex 7.12-type count: hat-G for the trivial (1,1) pair acts on the
    # 4-dim extension; generators exp(ad vhat), exp(ad what) commute up to center;
    # group of products = V+ x V- (25 elements); orbit of Euler elt also 25.
    # basis of ghat: (vh, Eh, wh, z) with [Eh,vh]=vh, [Eh,wh]=-wh, [vh,wh]=-z, z central
    dim = 4

    def br(x, y):
        vc = (x[1] * y[0] - y[1] * x[0]) % P
        wc = -(x[1] * y[2] - y[1] * x[2]) % P
        zc = -(x[0] * y[2] - y[0] * x[2]) % P
        return (vc, 0, wc, zc)

    def admat(x):
        cols = []
        for j in range(dim):
            ej = tuple(1 if i == j else 0 for i in range(dim))
            cols.append(br(x, ej))
        return tuple(tuple(cols[j][i] for i in range(dim)) for j_ in range(1) for i in range(dim))

    def adm(x):
        cols = []
        for j in range(dim):
            ej = tuple(1 if i == j else 0 for i in range(dim))
            cols.append(br(x, ej))
        return tuple(tuple(cols[j][i] % P for j in range(dim)) for i in range(dim))

    def mat_mul(A, B):
        n = len(A)
        return tuple(
            tuple(sum(A[i][t] * B[t][j] for t in range(n)) % P for j in range(n))
            for i in range(n)
        )

    def expm(d):
        n = len(d)
        d2 = mat_mul(d, d)
        # ad is 2-step nilpotent here
        d3 = mat_mul(d2, d)
        assert all(all(x == 0 for x in row) for row in d3)
        half = pow(2, P - 2, P)
        return tuple(
            tuple(((1 if i == j else 0) + d[i][j] + half * d2[i][j]) % P for j in range(n))
            for i in range(n)
        )

    gens = []
    for c in range(1, P):
        gens.append(expm(adm((c, 0, 0, 0))))
        gens.append(expm(adm((0, 0, c, 0))))
    ident = tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
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
    print("trivial(1,1) hat-G order =", len(group), "(expect 25)")

    def mat_vec(A, v):
        return tuple(sum(A[i][t] * v[t] for t in range(len(v))) % P for i in range(len(A)))

    orbit = {mat_vec(g, (0, 1, 0, 0)) for g in group}
    print("orbit of Euler element =", len(orbit), "(expect 25)")


if __name__ == "__main__":
    for name, dim, br in [("sl2(F5)", 3, sl2_bracket), ("trivial(1,1) TKK", 3, heis_bracket)]:
        n2, rr, q, k, perf = ucext_dims(dim, br)
        print(
            f"{name}: Lambda^2={n2} relations_rank={rr} <g,g> dim={q} "
            f"ker b dim={k} perfect={perf}"
        )
    abelian_group_count()
