"""Weyl groups, Bruhat order, parabolic quotients, and Deodhar lifts.

An element is identified by its action matrix on the weight lattice in the
fundamental-weight basis (reduced words are not unique, matrices are).  The
whole group is enumerated once by breadth-first search from the identity, so
every element carries its length and the lexicographically least reduced word
("shortlex" BFS visits words in exactly that order).

Bruhat order uses the length-recursive criterion

    x <= y  iff  min(x, s x) <= s y    for any left descent s of y,

memoised per group; the exponential subword test is kept alongside as an
independent cross-check for the test suite.

Parabolic quotients store the minimal coset representatives W^P sorted by
(length, word).  The Deodhar lifts ("lambda-maximal in w" / "lambda-minimal
on w") are computed by brute-force scan over the lifts of a coset, asserting
uniqueness of the extremal element; a failure of that uniqueness would
contradict Deodhar's lemma and raises immediately.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rootdata import Root, RootSystem, Weight

__all__ = [
    "WeylElement",
    "WeylGroup",
    "ParabolicQuotient",
    "enumerate_weyl",
    "bruhat_leq",
    "bruhat_leq_subword",
    "minimal_coset_reps",
    "stabilizer_subset",
    "lambda_maximal_lift",
    "lambda_minimal_lift",
    "unique_extremal",
    "format_word",
    "DEFAULT_ORDER_CAP",
]

Matrix = tuple[tuple[int, ...], ...]

DEFAULT_ORDER_CAP = 50_000


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: weight-lattice action, length, canonical word."""

    action: Matrix
    length: int
    word: tuple[int, ...]

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self) -> int:
        return hash(self.action)

    @property
    def canonical_word(self) -> tuple[int, ...]:
        return self.word

    def apply(self, lam: Weight) -> Weight:
        return Weight(
            tuple(
                sum(row[j] * lam.coords[j] for j in range(len(row)))
                for row in self.action
            )
        )

    def __repr__(self) -> str:
        return f"W[{format_word(self.word)}]"


def format_word(word: tuple[int, ...]) -> str:
    """Serialize a reduced word as "s1.s2.s1"; the identity is "e"."""
    if not word:
        return "e"
    return ".".join(f"s{i + 1}" for i in word)


def parse_word(text: str, rank: int) -> tuple[int, ...]:
    """Inverse of format_word; 1-based letters "s1".."s<rank>"."""
    text = text.strip()
    if text in ("e", ""):
        return ()
    out = []
    for part in text.split("."):
        part = part.strip()
        if not (part.startswith("s") and part[1:].isdigit()):
            raise ValueError(f"cannot parse word letter {part!r}")
        i = int(part[1:]) - 1
        if not 0 <= i < rank:
            raise ValueError(f"letter {part!r} out of range for rank {rank}")
        out.append(i)
    return tuple(out)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


class WeylGroup:
    """A fully enumerated finite Weyl group with order and descent tables."""

    def __init__(self, rs: RootSystem, order_cap: int = DEFAULT_ORDER_CAP):
        self.rs = rs
        n = rs.rank
        ident: Matrix = tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )
        simple_mats = [rs.reflection_weight_matrix(a) for a in rs.simple_roots]

        elements: list[WeylElement] = [WeylElement(ident, 0, ())]
        index: dict[Matrix, int] = {ident: 0}
        rmult: list[list[int]] = []
        queue = [0]
        while queue:
            nxt: list[int] = []
            for ei in queue:
                el = elements[ei]
                row = []
                for j in range(n):
                    m2 = _mat_mul(el.action, simple_mats[j])
                    k = index.get(m2)
                    if k is None:
                        k = len(elements)
                        if k >= order_cap:
                            raise ValueError(
                                f"group order exceeds cap {order_cap} for {rs.cartan_type}"
                            )
                        elements.append(WeylElement(m2, el.length + 1, el.word + (j,)))
                        index[m2] = k
                        nxt.append(k)
                    row.append(k)
                rmult.append(row)
            queue = nxt

        self.elements: tuple[WeylElement, ...] = tuple(elements)
        self.index = index
        self.rank = n
        self.identity = elements[0]
        self.simple = tuple(elements[index[m]] for m in simple_mats)
        self.rmult = rmult
        self.lmult = [
            [index[_mat_mul(simple_mats[j], el.action)] for j in range(n)]
            for el in elements
        ]
        top_len = max(el.length for el in elements)
        longest = [el for el in elements if el.length == top_len]
        assert len(longest) == 1, "longest element is not unique"
        self.w_o = longest[0]

        # s_beta action matrix -> beta, for recovering the reflection of a cover
        self._reflections = {
            rs.reflection_weight_matrix(b): b for b in rs.positive_roots
        }
        self._leq_memo: dict[tuple[Matrix, Matrix], bool] = {}

    # -- basic group operations ------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def element(self, i: int) -> WeylElement:
        return self.elements[i]

    def idx(self, x: WeylElement) -> int:
        return self.index[x.action]

    def mul(self, x: WeylElement, y: WeylElement) -> WeylElement:
        return self.elements[self.index[_mat_mul(x.action, y.action)]]

    def inv(self, x: WeylElement) -> WeylElement:
        return self.from_word(reversed(x.word))

    def rmul_s(self, x: WeylElement, j: int) -> WeylElement:
        return self.elements[self.rmult[self.idx(x)][j]]

    def lmul_s(self, j: int, x: WeylElement) -> WeylElement:
        return self.elements[self.lmult[self.idx(x)][j]]

    def from_word(self, word) -> WeylElement:
        el = self.identity
        for j in word:
            el = self.rmul_s(el, j)
        return el

    def left_descents(self, x: WeylElement) -> list[int]:
        xi = self.idx(x)
        return [
            j
            for j in range(self.rank)
            if self.elements[self.lmult[xi][j]].length < x.length
        ]

    def right_descents(self, x: WeylElement) -> list[int]:
        xi = self.idx(x)
        return [
            j
            for j in range(self.rank)
            if self.elements[self.rmult[xi][j]].length < x.length
        ]

    def reflection_root(self, x: WeylElement) -> Root | None:
        """The positive root beta with x = s_beta, or None."""
        return self._reflections.get(x.action)

    def root_image(self, x: WeylElement, beta: Root) -> Root:
        """x(beta), computed by folding simple reflections on root coordinates."""
        c = list(beta.coords)
        n = self.rank
        for i in reversed(x.word):
            ci = sum(self.rs.cartan[i][j] * c[j] for j in range(n))
            c[i] -= ci
        return Root.from_coords(tuple(c))

    def inversions(self, x: WeylElement) -> int:
        return sum(
            1 for b in self.rs.positive_roots if not self.root_image(x, b).is_positive
        )

    def reduced_words(self, x: WeylElement):
        """Yield every reduced word of x (exponential; test-sized inputs only)."""
        if x.length == 0:
            yield ()
            return
        for j in self.right_descents(x):
            for w in self.reduced_words(self.rmul_s(x, j)):
                yield w + (j,)

    # -- Bruhat order ------------------------------------------------------

    def leq(self, x: WeylElement, y: WeylElement) -> bool:
        """Bruhat order, by the length-recursive descent criterion."""
        if x.length > y.length:
            return False
        if x.action == y.action:
            return True
        key = (x.action, y.action)
        memo = self._leq_memo
        cached = memo.get(key)
        if cached is not None:
            return cached
        j = self.left_descents(y)[0]
        sy = self.lmul_s(j, y)
        sx = self.lmul_s(j, x)
        if sx.length < x.length:
            res = self.leq(sx, sy)
        else:
            res = self.leq(x, sy)
        memo[key] = res
        return res


def enumerate_weyl(rs: RootSystem, order_cap: int = DEFAULT_ORDER_CAP) -> WeylGroup:
    """Enumerate W with lengths and canonical words; identity comes first."""
    return WeylGroup(rs, order_cap=order_cap)


def bruhat_leq(group: WeylGroup, x: WeylElement, y: WeylElement) -> bool:
    return group.leq(x, y)


def bruhat_leq_subword(group: WeylGroup, x: WeylElement, y: WeylElement) -> bool:
    """Independent subword-property oracle (exhaustive, exponential in l(y))."""
    k = x.length
    if k > y.length:
        return False
    for positions in itertools.combinations(range(y.length), k):
        if group.from_word(y.word[p] for p in positions) == x:
            return True
    return False


class ParabolicQuotient:
    """Minimal coset representatives W^P with the induced Bruhat order."""

    def __init__(self, group: WeylGroup, subset):
        self.group = group
        self.subset = frozenset(int(i) for i in subset)
        for i in self.subset:
            if not 0 <= i < group.rank:
                raise ValueError(f"simple root index {i} out of range")
        self.min_reps: tuple[WeylElement, ...] = tuple(
            x
            for x in group.elements
            if all(group.rmul_s(x, j).length > x.length for j in self.subset)
        )
        self.pos = {x: i for i, x in enumerate(self.min_reps)}
        subgroup = [x for x in group.elements if self.project(x) == group.identity]
        self.w_oP = max(subgroup, key=lambda e: e.length)
        # order relation restricted to min_reps, precomputed
        self.leq_table: dict[tuple[WeylElement, WeylElement], bool] = {}
        for x in self.min_reps:
            for y in self.min_reps:
                self.leq_table[(x, y)] = group.leq(x, y)

    @property
    def root_subset(self) -> frozenset[int]:
        return self.subset

    def __len__(self) -> int:
        return len(self.min_reps)

    def __contains__(self, x: WeylElement) -> bool:
        return x in self.pos

    def project(self, x: WeylElement) -> WeylElement:
        """Minimal-length representative of the coset x W_P."""
        g = self.group
        while True:
            for j in self.subset:
                y = g.rmul_s(x, j)
                if y.length < x.length:
                    x = y
                    break
            else:
                return x

    def leq(self, x: WeylElement, y: WeylElement) -> bool:
        return self.leq_table[(x, y)]

    def of_length(self, k: int) -> list[WeylElement]:
        return [x for x in self.min_reps if x.length == k]

    def interval(self, v: WeylElement, w: WeylElement) -> list[WeylElement]:
        return [x for x in self.min_reps if self.leq(v, x) and self.leq(x, w)]

    def top(self) -> WeylElement:
        return max(self.min_reps, key=lambda e: e.length)

    def order_reversing_involution(self, w: WeylElement) -> WeylElement:
        """The map w -> w_o w w_{o,P}; lands back in W^P and reverses <=."""
        g = self.group
        img = g.mul(g.mul(g.w_o, w), self.w_oP)
        if img not in self.pos:
            raise AssertionError("involution left W^P")
        return img

    def max_lower_bounds(self, xs) -> list[WeylElement]:
        xs = list(xs)
        common = [
            z for z in self.min_reps if all(self.leq(z, x) for x in xs)
        ]
        return [
            z
            for z in common
            if not any(z2 is not z and self.leq(z, z2) for z2 in common)
        ]

    def min_upper_bounds(self, xs) -> list[WeylElement]:
        xs = list(xs)
        common = [
            z for z in self.min_reps if all(self.leq(x, z) for x in xs)
        ]
        return [
            z
            for z in common
            if not any(z2 is not z and self.leq(z2, z) for z2 in common)
        ]


def minimal_coset_reps(group: WeylGroup, subset) -> ParabolicQuotient:
    """The quotient W^P for the parabolic generated by the given simple roots."""
    return ParabolicQuotient(group, subset)


def stabilizer_subset(rs: RootSystem, lam: Weight) -> frozenset[int]:
    """Indices i with <lam, alpha_i^vee> = 0; generates the isotropy group W_lam."""
    if not lam.is_dominant:
        raise ValueError("weight is not dominant")
    return frozenset(i for i, c in enumerate(lam.coords) if c == 0)


def _lifts(quot_p: ParabolicQuotient, quot_lam: ParabolicQuotient, x_class: WeylElement):
    return [x for x in quot_p.min_reps if quot_lam.project(x) == x_class]


def unique_extremal(group: WeylGroup, candidates, want_max: bool) -> WeylElement:
    """The unique greatest (or least) element of a nonempty candidate set.

    Uniqueness here is Deodhar's lemma; its failure is a hard error, never a
    silently arbitrary choice.
    """
    if want_max:
        ext = [c for c in candidates if not any(d is not c and group.leq(c, d) for d in candidates)]
    else:
        ext = [c for c in candidates if not any(d is not c and group.leq(d, c) for d in candidates)]
    if len(ext) != 1:
        raise AssertionError("Deodhar uniqueness failed: multiple extremal lifts")
    e = ext[0]
    for c in candidates:
        ok = group.leq(c, e) if want_max else group.leq(e, c)
        if not ok:
            raise AssertionError("Deodhar uniqueness failed: incomparable lift")
    return e


def lambda_maximal_lift(
    quot_p: ParabolicQuotient,
    quot_lam: ParabolicQuotient,
    x_class: WeylElement,
    w: WeylElement,
) -> WeylElement | None:
    """The greatest lift of x_class in W^P below w, i.e. the lift that is
    lambda-maximal in w.  Returns None when no lift fits below w."""
    group = quot_p.group
    cands = [x for x in _lifts(quot_p, quot_lam, x_class) if group.leq(x, w)]
    if not cands:
        return None
    return unique_extremal(group, cands, want_max=True)


def lambda_minimal_lift(
    quot_p: ParabolicQuotient,
    quot_lam: ParabolicQuotient,
    x_class: WeylElement,
    w: WeylElement,
) -> WeylElement | None:
    """The least lift of x_class in W^P above w (lambda-minimal on w)."""
    group = quot_p.group
    cands = [x for x in _lifts(quot_p, quot_lam, x_class) if group.leq(w, x)]
    if not cands:
        return None
    return unique_extremal(group, cands, want_max=False)
