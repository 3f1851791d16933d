"""Linear systems for Haar state values.

Enumerates m-doubly-stochastic counting matrices, expands powers of the
quantum determinant over the pseudo-basis, builds the full translation
invariance system of a given order, solves it exactly, and runs the
recursive Source-matrix scheme that yields h(x_{sigma_0}^m) on O(U_q(n))
without touching the full system.
"""

from itertools import permutations

from .scalars import QRational, ZERO, ONE, qq
from .algebra import (AlgebraElement, counting_matrix, stochastic_order,
                      pseudo_word, quantum_determinant_power, inversions,
                      _expand)
from . import haar

_NEG_ONE = QRational.from_int(-1)

# conservative solvability bounds for the full system and the Source matrix
_SYSTEM_BOUNDS = {2: 6, 3: 3, 4: 2}
_SOURCE_BOUNDS = {2: 6, 3: 4, 4: 3}


def _check_feasible(n, m, bounds, override=False):
    if override:
        return
    if n not in bounds or m > bounds[n]:
        raise ValueError(
            "rank %d order %d exceeds the feasibility guard; pass "
            "override_feasibility to force" % (n, m))


def enumerate_Bnm(n, m):
    """All n x n m-doubly-stochastic matrices, sorted lexicographically by
    their flattened vector (the order the pseudo-bases are indexed in)."""
    out = []
    rows = []

    def fill(i, colleft):
        if i == n:
            out.append(tuple(rows))
            return
        if i == n - 1:
            rows.append(tuple(colleft))
            fill(i + 1, None)
            rows.pop()
            return
        row = []

        def cell(j, left):
            if j == n:
                if left == 0:
                    rows.append(tuple(row))
                    fill(i + 1, [colleft[c] - row[c] for c in range(n)])
                    rows.pop()
                return
            for v in range(min(left, colleft[j]), -1, -1):
                row.append(v)
                cell(j + 1, left - v)
                row.pop()

        cell(0, m)

    fill(0, [m] * n)
    return sorted(out)


def detq_power_expand(n, m, override_feasibility=False):
    """Coefficients b_L of D_q^m over the canonical pseudo-basis, keyed by
    counting matrix."""
    _check_feasible(n, m, _SYSTEM_BOUNDS, override_feasibility)
    out = {}
    for (factors, det), c in quantum_determinant_power(n, m).terms.items():
        theta = counting_matrix(n, factors)
        assert det == 0 and stochastic_order(theta) == m
        assert pseudo_word(theta) == factors
        out[theta] = c
    return out


def _comultiply_filtered(n, m, factors):
    """Tensor terms of the coproduct of the given order-m word whose legs are
    both order-m words, with incremental pruning on the right-leg row sums.
    Returns a dict (left word, right word) -> coefficient (legs canonical)."""
    legs = {((), ()): ONE}
    for (i, j) in factors:
        nxt = {}
        for (lf, rf), c in legs.items():
            for k in range(1, n + 1):
                if sum(1 for (r, _) in rf if r == k) >= m:
                    continue
                for cl, ccl in _expand(lf + ((i, k),)).items():
                    for cr, ccr in _expand(rf + ((k, j),)).items():
                        key = (cl, cr)
                        s = nxt.get(key, ZERO) + c * ccl * ccr
                        if s.is_zero():
                            nxt.pop(key, None)
                        else:
                            nxt[key] = s
        legs = nxt
    alpha = [sum(r) for r in counting_matrix(n, factors)]
    beta = [sum(c) for c in zip(*counting_matrix(n, factors))]
    out = {}
    for (lf, rf), c in legs.items():
        tr = counting_matrix(n, rf)
        if stochastic_order(tr) != m:
            continue
        tl = counting_matrix(n, lf)
        assert stochastic_order(tl) == m
        assert [sum(r) for r in tl] == alpha
        assert [sum(col) for col in zip(*tl)] == [sum(r) for r in tr]
        assert [sum(col) for col in zip(*tr)] == beta
        out[(lf, rf)] = c
    return out


class HaarLinearSystem:
    """rows: list of (coefficient dict theta -> QRational, rhs, tag)."""

    def __init__(self, n, m, unknowns, rows):
        self.n = n
        self.m = m
        self.unknowns = unknowns
        self.rows = rows


def build_system(n, m, override_feasibility=False):
    """All translation invariance relations of order m plus normalization.

    For every equation basis x_M det^-m, (id (x) h) Delta(x_M det^-m) =
    h(x_M det^-m) * 1; comparing coefficients of each basis word x_L det^-m
    gives the row sum_K c^M_{L,K} h(x_K) = b_L h(x_M)."""
    _check_feasible(n, m, _SYSTEM_BOUNDS, override_feasibility)
    B = enumerate_Bnm(n, m)
    b = detq_power_expand(n, m, override_feasibility)
    rows = []
    for M in B:
        cM = {}
        for (lf, rf), c in _comultiply_filtered(n, m, pseudo_word(M)).items():
            L, K = counting_matrix(n, lf), counting_matrix(n, rf)
            key = (L, K)
            s = cM.get(key, ZERO) + c
            if s.is_zero():
                cM.pop(key, None)
            else:
                cM[key] = s
        for L in B:
            coeffs = {}
            for (LL, K), c in cM.items():
                if LL == L:
                    coeffs[K] = coeffs.get(K, ZERO) + c
            bL = b.get(L, ZERO)
            if not bL.is_zero():
                coeffs[M] = coeffs.get(M, ZERO) - bL
            coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}
            if coeffs:
                rows.append((coeffs, ZERO, ("invariance", M, L)))
    rows.append((dict(b), ONE, ("normalization",)))
    return HaarLinearSystem(n, m, B, rows)


def solve_system(sys):
    """Exact sparse elimination, always pivoting on the shortest remaining
    row; verifies that every emitted row has zero residual, then registers
    the values for haar_state."""
    pending = [(dict(row), rhs) for row, rhs, _tag in sys.rows]
    solved = {}
    while pending:
        pending.sort(key=lambda rv: len(rv[0]), reverse=True)
        row, rhs = pending.pop()
        if not row:
            if not rhs.is_zero():
                raise ValueError("inconsistent system")
            continue
        u = min(row)
        inv = ONE / row[u]
        expr = ({t: -c * inv for t, c in row.items() if t != u}, rhs * inv)
        solved[u] = expr
        nxt = []
        for orow, orhs in pending:
            f = orow.pop(u, None)
            if f is not None:
                for t, c in expr[0].items():
                    s = orow.get(t, ZERO) + f * c
                    if s.is_zero():
                        orow.pop(t, None)
                    else:
                        orow[t] = s
                orhs = orhs - f * expr[1]
            if orow or not orhs.is_zero():
                nxt.append((orow, orhs))
        pending = nxt
    if set(solved) != set(sys.unknowns):
        raise ValueError(
            "rank deficient system: %d unknowns undetermined"
            % (len(sys.unknowns) - len(solved)))
    # back-substitute in dependency order
    solution = {}
    def value(u):
        if u not in solution:
            row, rhs = solved[u]
            acc = rhs
            for t, c in row.items():
                acc = acc + c * value(t)
            solution[u] = acc
        return solution[u]
    for u in sys.unknowns:
        value(u)
    for row, rhs, tag in sys.rows:
        acc = ZERO
        for u, c in row.items():
            acc = acc + c * solution[u]
        if acc != rhs:
            raise ValueError("nonzero residual on row %r" % (tag,))
    for u, v in solution.items():
        haar.register_value(sys.n, u, v)
    return solution


# ---------------------------------------------------------------------
# the Source matrix


def _polarity(n, g):
    return (n + 1 - g[0] - g[1] > 0) - (n + 1 - g[0] - g[1] < 0)


def _class_sort(n, word):
    """Stable sort by polarity class (negative, neutral, positive from the
    right end to the left, i.e. negatives first) using only the switch rules
    that generate no extra terms."""
    w = list(word)
    coeff = ONE

    def key(g):
        return _polarity(n, g)

    changed = True
    while changed:
        changed = False
        for p in range(len(w) - 1):
            g1, g2 = w[p], w[p + 1]
            if key(g1) <= key(g2):
                continue
            if g1[0] == g2[0] or g1[1] == g2[1]:
                coeff = coeff * (qq(-1) if g1 > g2 else qq(1))
            else:
                # must be an anti-diagonal pair; a diagonal pair would spawn
                # an extra monomial and break the reduction
                assert (g1[0] - g2[0]) * (g1[1] - g2[1]) < 0, (g1, g2)
            w[p], w[p + 1] = g2, g1
            changed = True
    return w, coeff


def _eta_reduction(n, m, sigma, f):
    """h(eta_f det^-m) as a dict tau -> coefficient over the Source unknowns
    h(x_m^tau)."""
    word = []
    for r in range(1, n + 1):
        core = (r, n + 1 - r)
        if sigma[r - 1] == r:
            word.extend([core] * m)
        else:
            word.extend([core] * f[r - 1])
            word.append((sigma[r - 1], n + 1 - r))
            word.extend([core] * (m - 1 - f[r - 1]))
    swapped, coeff = _class_sort(n, word)
    neg = [g for g in swapped if _polarity(n, g) < 0]
    pos = [g for g in swapped if _polarity(n, g) > 0]
    fixed = [(r, n + 1 - r) for r in range(1, n + 1) if sigma[r - 1] == r]
    # the neutral block must be the anti-diagonal cores in row order, with the
    # fixed-point extras inline (all copies of a block's core are identical)
    neutrals = [g for g in swapped if _polarity(n, g) == 0]
    expected = []
    for r in range(1, n + 1):
        expected.extend([(r, n + 1 - r)] * (m - 1 + (sigma[r - 1] == r)))
    assert neutrals == expected and swapped == neg + neutrals + pos
    # modular transfer of the trailing neutral extras and positives
    d = sum(2 * n + 2 - 2 * i - 2 * j for (i, j) in fixed + pos)
    coeff = coeff * qq(d)
    prefix = tuple(fixed + pos + neg)
    out = {}
    for cw, cc in _expand(prefix).items():
        tau = tuple(j for (_i, j) in cw)
        assert sorted(tau) == list(range(1, n + 1))
        out[tau] = out.get(tau, ZERO) + coeff * cc
    return out


def source_matrix_solve(n, m, override_feasibility=False):
    """h(x_{sigma_0}^m) on O(U_q(n)) through the recursive Source-matrix
    scheme: n! unknowns h(x_mu^sigma) per order mu, solved for mu = 1..m."""
    if n < 2 or m < 1:
        raise ValueError("need rank >= 2 and order >= 1")
    _check_feasible(n, m, _SOURCE_BOUNDS, override_feasibility)
    sigma0 = tuple(range(n, 0, -1))
    perms = list(permutations(range(1, n + 1)))
    prev = ONE
    value = ONE
    for mu in range(1, m + 1):
        b = {}
        for (factors, _det), c in quantum_determinant_power(n, mu).terms.items():
            b[counting_matrix(n, factors)] = c
        rows = []
        for sigma in perms:
            if sigma == tuple(range(1, n + 1)):
                continue
            moving = [r for r in range(1, n + 1) if sigma[r - 1] != r]
            theta = tuple(tuple((mu - 1) * (i == j) + (j == sigma[i - 1])
                                for j in range(1, n + 1))
                          for i in range(1, n + 1))
            coeffs = {}
            for mask in range(mu ** len(moving)):
                f = [0] * n
                v = mask
                for r in moving:
                    f[r - 1] = v % mu
                    v //= mu
                zw = []
                for r in range(1, n + 1):
                    if sigma[r - 1] == r:
                        zw.extend([(r, r)] * mu)
                    else:
                        zw.extend([(r, r)] * f[r - 1])
                        zw.append((r, sigma[r - 1]))
                        zw.extend([(r, r)] * (mu - 1 - f[r - 1]))
                # the zeta leg row-reorders onto the comparing basis without
                # extra terms, contributing a single power of q
                exp = _expand(tuple(zw))
                assert len(exp) == 1 and pseudo_word(theta) in exp
                lam = exp[pseudo_word(theta)]
                for tau, c in _eta_reduction(n, mu, sigma, f).items():
                    coeffs[tau] = coeffs.get(tau, ZERO) + lam * c
            bL = b.get(theta, ZERO)
            coeffs[sigma0] = coeffs.get(sigma0, ZERO) - bL
            rows.append({k: v for k, v in coeffs.items()
                         if not v.is_zero()})
        # elimination over the n! unknowns plus the nonzero-rhs relation
        unknowns = perms
        mat = [[row.get(u, ZERO) for u in unknowns] for row in rows]
        rhs = [ZERO] * len(rows)
        norm = [ (_NEG_ONE ** inversions(u)) * qq(inversions(u))
                 for u in unknowns]
        mat.append(norm)
        rhs.append(prev)
        sol = _gauss(mat, rhs, len(unknowns))
        value = sol[unknowns.index(sigma0)]
        theta0 = tuple(tuple(mu * (j == n + 1 - i) for j in range(1, n + 1))
                       for i in range(1, n + 1))
        haar.register_value(n, theta0, value)
        prev = value
    return value


def _gauss(mat, rhs, k):
    rows = [ (list(r), v) for r, v in zip(mat, rhs) ]
    values = [None] * k
    selected = []
    for col in range(k):
        pivot = next((i for i, (r, _v) in enumerate(rows)
                      if not r[col].is_zero()), None)
        if pivot is None:
            raise ValueError("rank deficient Source matrix at column %d" % col)
        vec, v = rows.pop(pivot)
        inv = ONE / vec[col]
        vec = [c * inv for c in vec]
        v = v * inv
        for svec, sv in selected:
            fct = svec[col]
            if not fct.is_zero():
                for t in range(k):
                    svec[t] = svec[t] - fct * vec[t]
                sv[0] = sv[0] - fct * v
        nxt = []
        for ovec, ov in rows:
            fct = ovec[col]
            if not fct.is_zero():
                ovec = [ovec[t] - fct * vec[t] for t in range(k)]
                ov = ov - fct * v
            if any(not c.is_zero() for c in ovec) or not ov.is_zero():
                nxt.append((ovec, ov))
        rows = nxt
        selected.append((vec, [v]))
    if rows:
        raise ValueError("inconsistent Source matrix")
    for col, (vec, v) in enumerate(selected):
        values[col] = v[0]
    return values
