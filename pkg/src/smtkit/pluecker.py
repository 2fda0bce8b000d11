"""Type-A concretization: Grassmannian and SL(n)/B minors over exact arithmetic.

Plücker conventions.  A point of Gr(r, n) is the row space of an r x n
matrix; p_I is the determinant of the r x r submatrix on columns I (rows in
order).  Indices are 1-based strictly increasing tuples, ordered
componentwise.  Internally a point sample is stored transposed (an n x r
matrix whose columns span the subspace), so p_I is the minor on rows I.

Symbolic layer.  Polynomials in the r x n generic matrix entries are sparse
dicts mapping dense exponent tuples (row-major variable order) to integer
coefficients.  The lex-leading monomial of the product of two minors on
column sets I, J is the "double diagonal" x_{1,min} ... x_{r,max}, which
determines the standard pair (I', J') uniquely.  Straightening therefore
solves the linear system in monomial-coefficient space by unit-triangular
elimination: repeatedly subtract the standard product whose leading monomial
matches, until the remainder is exactly zero.  Coefficients stay integers,
and a decode failure would mean the "system" is singular, i.e. a bug.

Randomized layer.  Points of a Schubert variety are sampled as products of
one-parameter unipotents u_i(t) s_i along a reduced word, over a large prime
field (Schwartz-Zippel style, seeded and reproducible).  Opposite Schubert
varieties are sampled through the longest-element twist.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

__all__ = [
    "PlueckerIndex",
    "StraighteningRelation",
    "index_leq",
    "all_indices",
    "standard_monomials_grassmann",
    "straighten",
    "relation_residual",
    "schubert_point_sample",
    "PointSample",
    "rank_mod_p",
    "verify_hodge_i",
    "verify_hodge_iii",
    "restriction_table",
    "sample_flag_point",
    "flag_monomial_evaluate",
    "perm_from_word",
    "MERSENNE_PRIME",
]

MERSENNE_PRIME = 2**31 - 1

PlueckerIndex = tuple[int, ...]


def _check_index(I, r: int, n: int) -> PlueckerIndex:
    I = tuple(int(i) for i in I)
    if len(I) != r:
        raise ValueError(f"index {I} does not have {r} entries")
    if any(not 1 <= i <= n for i in I) or any(a >= b for a, b in zip(I, I[1:])):
        raise ValueError(f"index {I} is not strictly increasing in 1..{n}")
    return I


def index_leq(I: PlueckerIndex, J: PlueckerIndex) -> bool:
    """Componentwise order: i_1 <= j_1, ..., i_r <= j_r."""
    if len(I) != len(J):
        raise ValueError("indices of different shape are incomparable")
    return all(a <= b for a, b in zip(I, J))


def all_indices(r: int, n: int) -> list[PlueckerIndex]:
    return [tuple(c) for c in itertools.combinations(range(1, n + 1), r)]


def standard_monomials_grassmann(r: int, n: int, m: int) -> list[tuple[PlueckerIndex, ...]]:
    """All weakly increasing chains I_1 <= ... <= I_m, in lexicographic order."""
    if not 1 <= r < n:
        raise ValueError("need 1 <= r < n")
    if m < 0:
        raise ValueError("degree must be nonnegative")
    indices = all_indices(r, n)
    chains: list[tuple[PlueckerIndex, ...]] = [()]
    for _ in range(m):
        chains = [
            ch + (J,)
            for ch in chains
            for J in indices
            if not ch or index_leq(ch[-1], J)
        ]
    return chains


# ---------------------------------------------------------------------------
# exact polynomials in the r x n generic matrix entries
# ---------------------------------------------------------------------------

Poly = dict[tuple[int, ...], int]


def _poly_sub_scaled(a: Poly, b: Poly, c: int) -> Poly:
    """a - c*b, dropping zero terms."""
    out = dict(a)
    for mono, coeff in b.items():
        v = out.get(mono, 0) - c * coeff
        if v:
            out[mono] = v
        else:
            out.pop(mono, None)
    return out


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(mono, 0) + ca * cb
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def _minor_poly(I: PlueckerIndex, r: int, n: int) -> Poly:
    """det of the generic r x r submatrix on columns I, as a sparse polynomial."""
    out: Poly = {}
    for perm in itertools.permutations(range(r)):
        sign = 1
        for a in range(r):
            for b in range(a + 1, r):
                if perm[a] > perm[b]:
                    sign = -sign
        exps = [0] * (r * n)
        for row in range(r):
            exps[row * n + (I[perm[row]] - 1)] += 1
        out[tuple(exps)] = sign
    return out


def _decode_leading(mono: tuple[int, ...], r: int, n: int) -> tuple[PlueckerIndex, PlueckerIndex]:
    """Recover the standard pair whose product has this leading monomial."""
    lo, hi = [], []
    for row in range(r):
        cols = []
        for col in range(n):
            cols.extend([col + 1] * mono[row * n + col])
        if len(cols) != 2:
            raise AssertionError("monomial is not a product of two minor diagonals")
        lo.append(min(cols))
        hi.append(max(cols))
    I2, J2 = tuple(lo), tuple(hi)
    if any(a >= b for a, b in zip(I2, I2[1:])) or any(a >= b for a, b in zip(J2, J2[1:])):
        raise AssertionError("leading monomial does not decode to a standard pair")
    return I2, J2


@dataclass(frozen=True)
class StraighteningRelation:
    """p_I p_J = sum of c * p_{I'} p_{J'} over standard pairs I' <= J'."""

    r: int
    n: int
    lhs: tuple[PlueckerIndex, PlueckerIndex]
    rhs: tuple[tuple[int, tuple[PlueckerIndex, PlueckerIndex]], ...]


def straighten(I, J, r: int, n: int) -> StraighteningRelation:
    """Expand the non-standard product p_I p_J in the standard degree-2 basis.

    The linear system in monomial-coefficient space is unit-triangular with
    respect to lex-leading monomials of standard products, so it is solved by
    direct elimination; the remainder reaching exactly zero IS the polynomial
    identity.  The order condition I' <= I, J <= J' is asserted on the way out.
    """
    I = _check_index(I, r, n)
    J = _check_index(J, r, n)
    if index_leq(I, J) or index_leq(J, I):
        raise ValueError(f"pair ({I}, {J}) is already standard; nothing to straighten")

    minors: dict[PlueckerIndex, Poly] = {}

    def minor(K: PlueckerIndex) -> Poly:
        if K not in minors:
            minors[K] = _minor_poly(K, r, n)
        return minors[K]

    residual = _poly_mul(minor(I), minor(J))
    terms: list[tuple[int, tuple[PlueckerIndex, PlueckerIndex]]] = []
    while residual:
        mono = max(residual)
        I2, J2 = _decode_leading(mono, r, n)
        c = residual[mono]  # leading coefficient of a standard product is +1
        terms.append((c, (I2, J2)))
        residual = _poly_sub_scaled(residual, _poly_mul(minor(I2), minor(J2)), c)

    for _c, (I2, J2) in terms:
        if not (index_leq(I2, I) and index_leq(J, J2)):
            raise AssertionError("straightening term violates the order condition")
    return StraighteningRelation(r, n, (I, J), tuple(terms))


def relation_residual(rel: StraighteningRelation) -> Poly:
    """Symbolic re-expansion of lhs - rhs; the zero dict iff the relation is exact."""
    r, n = rel.r, rel.n
    res = _poly_mul(_minor_poly(rel.lhs[0], r, n), _minor_poly(rel.lhs[1], r, n))
    for c, (I2, J2) in rel.rhs:
        res = _poly_sub_scaled(res, _poly_mul(_minor_poly(I2, r, n), _minor_poly(J2, r, n)), c)
    return res


# ---------------------------------------------------------------------------
# permutations and reduced words (one-line notation, 1-based values)
# ---------------------------------------------------------------------------


def perm_from_word(word, n: int) -> tuple[int, ...]:
    """One-line permutation of 1..n for a word in 0-based simple reflections."""
    p = list(range(1, n + 1))
    for j in word:
        p[j], p[j + 1] = p[j + 1], p[j]
    return tuple(p)


def _reduced_word_of_perm(p) -> tuple[int, ...]:
    """Any reduced word (0-based letters) for a one-line permutation."""
    p = list(p)
    word: list[int] = []
    while True:
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                p[j], p[j + 1] = p[j + 1], p[j]
                word.append(j)
                break
        else:
            return tuple(reversed(word))


def _grassmann_perm(I: PlueckerIndex, n: int) -> tuple[int, ...]:
    """The minimal coset representative sending {1..r} to I."""
    rest = [i for i in range(1, n + 1) if i not in I]
    return tuple(list(I) + rest)


# ---------------------------------------------------------------------------
# mod-p point samples
# ---------------------------------------------------------------------------


def _mat_mul_mod(a, b, p):
    n, k, m = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    return [[sum(a[i][t] * bt[j][t] for t in range(k)) % p for j in range(m)] for i in range(n)]


def _group_element_along(word, ts, n: int, p: int):
    """The matrix  prod_j u_{i_j}(t_j) s_{i_j}  over F_p."""
    g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for j, t in zip(word, ts):
        f = [[1 if i == k else 0 for k in range(n)] for i in range(n)]
        # u_j(t) * s_j in the j, j+1 block: [[t, -1], [1, 0]]
        f[j][j] = t % p
        f[j][j + 1] = p - 1
        f[j + 1][j] = 1
        f[j + 1][j + 1] = 0
        g = _mat_mul_mod(g, f, p)
    return g


def _det_mod(rows, p: int) -> int:
    """Determinant of a small square matrix over F_p (fraction-free pivoting)."""
    m = [row[:] for row in rows]
    k = len(m)
    det = 1
    for col in range(k):
        piv = next((i for i in range(col, k) if m[i][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        inv = pow(m[col][col], p - 2, p)
        det = det * m[col][col] % p
        for i in range(col + 1, k):
            f = m[i][col] * inv % p
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[col])]
    return det % p


@dataclass(frozen=True)
class PointSample:
    """Evaluation functional at one sampled point of a Schubert variety.

    matrix is n x r over F_p; its columns span the sampled subspace.
    """

    r: int
    n: int
    prime: int
    matrix: tuple[tuple[int, ...], ...]

    def plucker(self, J) -> int:
        J = _check_index(J, self.r, self.n)
        return _det_mod([list(self.matrix[j - 1]) for j in J], self.prime)

    def chain_value(self, chain) -> int:
        v = 1
        for J in chain:
            v = v * self.plucker(J) % self.prime
        return v


def schubert_point_sample(
    I,
    r: int,
    n: int,
    rng: random.Random,
    prime: int = MERSENNE_PRIME,
    opposite: bool = False,
    max_retries: int = 8,
) -> PointSample:
    """A random point of the Schubert variety X_I in Gr(r, n) over F_p.

    With opposite=True, samples the opposite Schubert variety X^I through
    the longest-element twist.  Retries (bounded) if every Plücker
    coordinate vanishes, which cannot happen for an honest group element but
    guards the contract.
    """
    if prime <= 2**30:
        raise ValueError("prime must exceed 2^30")
    I = _check_index(I, r, n)
    sample_index = tuple(sorted(n + 1 - i for i in I)) if opposite else I
    word = _reduced_word_of_perm(_grassmann_perm(sample_index, n))
    for _ in range(max_retries):
        ts = [rng.randrange(1, prime) for _ in word]
        g = _group_element_along(word, ts, n, prime)
        cols = [row[:r] for row in g]
        if opposite:
            cols = cols[::-1]
        point = PointSample(r, n, prime, tuple(tuple(row) for row in cols))
        if any(point.plucker(K) for K in all_indices(r, n)):
            return point
    raise RuntimeError("degenerate sample: all Plücker coordinates vanish")


def rank_mod_p(rows, p: int) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        for i in range(rank + 1, len(m)):
            f = m[i][col] * inv % p
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# randomized verification reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RankReport:
    passed: bool
    expected_rank: int
    ranks_by_seed: tuple[tuple[int, int], ...]
    vanishing_ok: bool


def _evaluation_matrix(chains, points):
    return [[pt.chain_value(ch) for ch in chains] for pt in points]


def verify_hodge_i(
    r: int,
    n: int,
    m: int,
    seeds=(1, 2, 3),
    prime: int = MERSENNE_PRIME,
    num_samples: int | None = None,
) -> RankReport:
    """Rank of the degree-m standard-chain evaluation matrix on the Grassmannian."""
    top = tuple(range(n - r + 1, n + 1))
    return verify_hodge_iii(top, r, n, m, seeds=seeds, prime=prime, num_samples=num_samples)


def verify_hodge_iii(
    I,
    r: int,
    n: int,
    m: int,
    seeds=(1, 2, 3),
    prime: int = MERSENNE_PRIME,
    num_samples: int | None = None,
) -> RankReport:
    """On X_I: standard-on-X_I monomials have full rank, others vanish.

    The rank check passes if any single seed reaches the expected rank; the
    vanishing check must hold at every sample of every seed (those values
    are identically zero on X_I, so any nonzero is a hard failure).
    """
    I = _check_index(I, r, n)
    chains = standard_monomials_grassmann(r, n, m)
    on_X = [ch for ch in chains if m == 0 or index_leq(ch[-1], I)]
    off_X = [ch for ch in chains if ch not in on_X]
    k = len(on_X)
    if num_samples is None:
        num_samples = 2 * k + 4
    ranks = []
    vanish_ok = True
    passed_rank = False
    for seed in seeds:
        rng = random.Random(seed)
        points = [schubert_point_sample(I, r, n, rng, prime) for _ in range(num_samples)]
        rank = rank_mod_p(_evaluation_matrix(on_X, points), prime)
        ranks.append((seed, rank))
        if rank == k:
            passed_rank = True
        for pt in points:
            if any(pt.chain_value(ch) for ch in off_X):
                vanish_ok = False
    return RankReport(passed_rank and vanish_ok, k, tuple(ranks), vanish_ok)


def restriction_table(
    r: int, n: int, seeds=(1, 2, 3), prime: int = MERSENNE_PRIME, num_samples: int = 6
) -> dict[tuple[PlueckerIndex, PlueckerIndex], bool]:
    """Observed nonvanishing of p_J on samples of X_I, for all pairs (I, J).

    The value at (I, J) is True iff p_J was nonzero at some sample over the
    seeds.  Agreement with index_leq(J, I) is the caller's assertion.
    """
    out: dict[tuple[PlueckerIndex, PlueckerIndex], bool] = {}
    idx = all_indices(r, n)
    for I in idx:
        hits = {J: False for J in idx}
        for seed in seeds:
            rng = random.Random(seed)
            for _ in range(num_samples):
                pt = schubert_point_sample(I, r, n, rng, prime)
                for J in idx:
                    if pt.plucker(J):
                        hits[J] = True
        for J in idx:
            out[(I, J)] = hits[J]
    return out


# ---------------------------------------------------------------------------
# SL(n)/B: extremal monomials as products of top-justified minors
# ---------------------------------------------------------------------------


def sample_flag_point(
    word, n: int, rng: random.Random, prime: int = MERSENNE_PRIME
):
    """A random point of the Schubert variety X_w in SL(n)/B, as a matrix.

    word is a reduced word (0-based letters) for w; the point is the full
    n x n group element, from which every top-justified minor can be read.
    """
    ts = [rng.randrange(1, prime) for _ in word]
    return _group_element_along(word, ts, n, prime)


def extremal_minor(g, perm, i: int, prime: int = MERSENNE_PRIME) -> int:
    """p_{x(omega_i)} at the flag point: the i x i minor on rows x({1..i}),
    columns 1..i, where x is given in one-line notation."""
    rows = sorted(perm[:i])
    sub = [[g[a - 1][b] for b in range(i)] for a in rows]
    return _det_mod(sub, prime)


def flag_monomial_evaluate(g, factors, prime: int = MERSENNE_PRIME) -> int:
    """Evaluate a product of extremal vectors at a flag point.

    factors is an iterable of (perm, i): the extremal vector of the i-th
    fundamental weight indexed by the class of perm.  Only trivial
    (extremal) factors have a minor realization here; that is all the
    SL(3) verification needs.
    """
    v = 1
    for perm, i in factors:
        v = v * extremal_minor(g, perm, i, prime) % prime
    return v
