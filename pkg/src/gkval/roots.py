"""Relative (restricted) root systems of quasi-split reductive groups.

An absolute Dynkin diagram together with a diagram automorphism of order
1, 2 or 3 is folded onto the fixed subspace of the automorphism.  The
reduced relative roots are kept (a divisible root ``2*beta`` is recorded
only through a flag and through the orbit attached to ``beta``).  Each
reduced relative root carries:

* ``d_alpha``   -- the degree over the ground field of the field of
  definition of its rank-one Levi subgroup,
* ``rank_one_type`` -- ``"SL2"`` for a restriction of scalars of SL(2),
  ``"SU21"`` for a quasi-split special unitary group in three variables,
* ``length_class``  -- ``"long"`` / ``"short"`` / ``"single"``.

Length classes follow the classification tables reproduced by
:func:`proposition_table`; for a triality fold (automorphism of order 3)
the tables record the orbit-of-three roots as *long*, which is the
opposite of the metric ordering induced by the projection, and we follow
the tables.

Weyl-group elements of the relative system are reduced words in the
simple reflections (0-based node indices in the order reported by
``RelativeRootSystem.simple_roots``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class RootSystemError(ValueError):
    """Invalid diagram, automorphism or Weyl datum."""


MAX_NODES = 12

SL2 = "SL2"
SU21 = "SU21"


# ---------------------------------------------------------------------------
# absolute diagrams


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> in Bourbaki ordering."""
    n = rank
    limits = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
    if family not in limits:
        raise RootSystemError(f"unknown family {family!r}")
    if n < limits[family]:
        raise RootSystemError(f"{family}{n}: rank too small")
    if family in "EFG" and (family, n) not in {
        ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
    }:
        raise RootSystemError(f"{family}{n}: no such diagram")
    if n > MAX_NODES:
        raise RootSystemError(f"{family}{n}: more than {MAX_NODES} nodes")

    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def single(i: int, j: int) -> None:
        a[i][j] = a[j][i] = -1

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            single(i, i + 1)
        if family == "B" and n >= 2:
            a[n - 2][n - 1] = -2   # alpha_{n} short
            a[n - 1][n - 2] = -1
        if family == "C" and n >= 2:
            a[n - 2][n - 1] = -1   # alpha_{n} long
            a[n - 1][n - 2] = -2
    elif family == "D":
        for i in range(n - 3):
            single(i, i + 1)
        single(n - 3, n - 2)
        single(n - 3, n - 1)
    elif family == "E":
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            single(i, j)
        single(1, 3)
    elif family == "F":
        single(0, 1)
        single(2, 3)
        a[1][2] = -2
        a[2][1] = -1
    else:  # G2
        a[0][1] = -1
        a[1][0] = -3
    return a


def _validate_cartan(a: Sequence[Sequence[int]]) -> None:
    n = len(a)
    if n == 0 or n > MAX_NODES:
        raise RootSystemError("diagram must have between 1 and 12 nodes")
    for i in range(n):
        if len(a[i]) != n or a[i][i] != 2:
            raise RootSystemError("malformed Cartan matrix")
        for j in range(n):
            if i != j:
                if a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0):
                    raise RootSystemError("malformed Cartan matrix")
    # positive definiteness of the symmetrized matrix
    d = _symmetrizer(a)
    g = [[d[i] * a[j][i] for j in range(n)] for i in range(n)]
    m = [row[:] for row in g]
    for k in range(n):
        piv = m[k][k]
        if piv <= 0:
            raise RootSystemError("Cartan matrix is not of finite type")
        for i in range(k + 1, n):
            f = Fraction(m[i][k], 1) / piv
            m[i] = [mi - f * mk for mi, mk in zip(m[i], m[k])]


def _symmetrizer(a: Sequence[Sequence[int]]) -> list[Fraction]:
    """d with d_i * a[j][i] symmetric; (alpha_i, alpha_i) = 2 d_i."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i != j and a[i][j] != 0 and d[j] is None:
                    # d_j a_ij = d_i a_ji
                    d[j] = d[i] * a[j][i] / a[i][j]
                    queue.append(j)
    return [x if x is not None else Fraction(1) for x in d]


def _generate_roots(a: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All roots as integer vectors in the simple-root basis."""
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for j in range(n):
                pairing = sum(v[i] * a[i][j] for i in range(n))
                w = list(v)
                w[j] -= pairing
                tw = tuple(w)
                if tw not in seen:
                    seen.add(tw)
                    nxt.append(tw)
        frontier = nxt
    return sorted(seen)


# ---------------------------------------------------------------------------
# group datum


@dataclass(frozen=True)
class GroupDatum:
    """Absolute diagram, folding automorphism and scalar-restriction degree.

    ``res_degree`` is the degree d' of the field over which the absolute
    datum lives, relative to the ground field (restriction of scalars).
    """

    cartan: tuple[tuple[int, ...], ...]
    automorphism: tuple[int, ...]
    automorphism_order: int
    res_degree: int
    label: str = ""

    def __post_init__(self) -> None:
        _validate_cartan(self.cartan)
        n = len(self.cartan)
        perm = self.automorphism
        if sorted(perm) != list(range(n)):
            raise RootSystemError("automorphism is not a permutation of the nodes")
        for i in range(n):
            for j in range(n):
                if self.cartan[perm[i]][perm[j]] != self.cartan[i][j]:
                    raise RootSystemError("automorphism does not preserve the diagram")
        if self.automorphism_order not in (1, 2, 3):
            raise RootSystemError("automorphism order must be 1, 2 or 3")
        p = list(range(n))
        for _ in range(self.automorphism_order):
            p = [perm[i] for i in p]
        if p != list(range(n)):
            raise RootSystemError("permutation order does not divide the declared order")
        if self.res_degree < 1:
            raise RootSystemError("res_degree must be a positive integer")

    @property
    def rank_absolute(self) -> int:
        return len(self.cartan)


def datum_from_type(
    family: str,
    rank: int,
    automorphism: Sequence[int] | None = None,
    automorphism_order: int = 1,
    res_degree: int = 1,
    label: str = "",
) -> GroupDatum:
    a = cartan_matrix(family, rank)
    perm = tuple(automorphism) if automorphism is not None else tuple(range(rank))
    return GroupDatum(
        cartan=tuple(tuple(row) for row in a),
        automorphism=perm,
        automorphism_order=automorphism_order,
        res_degree=res_degree,
        label=label or f"{family}{rank}",
    )


def split_datum(family: str, rank: int, res_degree: int = 1) -> GroupDatum:
    return datum_from_type(family, rank, res_degree=res_degree,
                           label=f"split-{family}{rank}")


def su_datum(p: int, q: int, res_degree: int = 1) -> GroupDatum:
    """Quasi-split special unitary group SU(p, q) with |p - q| <= 1."""
    if not (abs(p - q) <= 1 and p + q >= 3):
        raise RootSystemError("need |p - q| <= 1 and p + q >= 3")
    n = p + q - 1  # A_n folded by the flip
    perm = tuple(n - 1 - i for i in range(n))
    return datum_from_type("A", n, perm, 2, res_degree, label=f"2A{n}")


def spin_minus_datum(n: int, res_degree: int = 1) -> GroupDatum:
    """Quasi-split outer form of Spin(2n) (folding of D_n)."""
    if n < 4:
        raise RootSystemError("D_n folding implemented for n >= 4")
    perm = list(range(n))
    perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
    return datum_from_type("D", n, tuple(perm), 2, res_degree, label=f"2D{n}")


def triality_datum(res_degree: int = 1) -> GroupDatum:
    """Triality form of D4."""
    # D4 nodes: 0 - 1 - {2, 3}; outer nodes 0, 2, 3 are cycled.
    return datum_from_type("D", 4, (2, 1, 3, 0), 3, res_degree, label="3D4")


def quasi_split_e6_datum(res_degree: int = 1) -> GroupDatum:
    perm = (5, 1, 4, 3, 2, 0)
    return datum_from_type("E", 6, perm, 2, res_degree, label="2E6")


# ---------------------------------------------------------------------------
# relative roots

Vec = tuple[Fraction, ...]


@dataclass(frozen=True)
class RelativeRoot:
    index: int
    coords: tuple[int, ...]  # in the basis of relative simple roots
    orbit: tuple[tuple[int, ...], ...]  # absolute roots over beta and 2*beta
    length_class: str
    d_alpha: int
    rank_one_type: str
    norm2: Fraction
    abs_norm2: Fraction  # squared length of the absolute roots over beta
    component: int
    positive: bool = True

    @property
    def height(self) -> int:
        return sum(self.coords)


class RelativeRootSystem:
    """Reduced relative root system produced by :func:`restrict_roots`."""

    def __init__(
        self,
        datum: GroupDatum,
        simple_orbits: list[list[int]],
        positive_roots: list[RelativeRoot],
        cartan: list[list[int]],
        gram: list[list[Fraction]],
        components: list[tuple[str, tuple[int, ...]]],
        has_divisible: bool,
    ) -> None:
        self.datum = datum
        self.simple_orbits = simple_orbits
        self.positive_roots = tuple(positive_roots)
        self.cartan = tuple(tuple(row) for row in cartan)
        self.gram = tuple(tuple(row) for row in gram)
        self.components = tuple(components)
        self.has_divisible = has_divisible
        self.rank = len(cartan)
        self._by_coords = {r.coords: r for r in positive_roots}

    # -- basic queries ----------------------------------------------------

    @property
    def simple_roots(self) -> tuple[RelativeRoot, ...]:
        return self.positive_roots[: self.rank]

    def root_by_coords(self, coords: Sequence[int]) -> RelativeRoot:
        key = tuple(coords)
        try:
            return self._by_coords[key]
        except KeyError:
            raise RootSystemError(f"{key} is not a positive reduced root") from None

    def bilinear(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        g = self.gram
        return sum(
            Fraction(u[i]) * g[i][j] * Fraction(v[j])
            for i in range(self.rank)
            for j in range(self.rank)
            if u[i] and g[i][j] and v[j]
        ) or Fraction(0)

    def coroot_pairing_vector(self, alpha: RelativeRoot) -> tuple[Fraction, ...]:
        """Coefficients c_i with <lambda, alpha^vee> = sum c_i lambda_i.

        The pairing is normalized so that along the principal ray it takes
        the value d_alpha * s on an SL2-type root and 4 d_alpha * s on an
        SU21-type root: c_i = d' * 2 (gamma_i, beta) / (beta, beta).
        """
        beta = alpha.coords
        out = []
        for i in range(self.rank):
            e = tuple(Fraction(int(i == j)) for j in range(self.rank))
            val = self.datum.res_degree * 2 * self.bilinear(e, beta) / alpha.norm2
            out.append(val)
        return tuple(out)

    def principal_ray(self) -> tuple[Fraction, ...]:
        """Direction x with <x, beta_i^vee> = d_beta (SL2) or 4 d_beta (SU21)
        on every relative simple root."""
        n = self.rank
        dp = self.datum.res_degree
        rhs = []
        for b in self.simple_roots:
            target = b.d_alpha if b.rank_one_type == SL2 else 4 * b.d_alpha
            rhs.append(Fraction(target) * b.norm2 / (2 * dp))
        return _solve(
            [[self.gram[i][j] for j in range(n)] for i in range(n)], rhs
        )

    # -- Weyl combinatorics ----------------------------------------------

    def _reflection_matrix(self, j: int) -> list[list[int]]:
        n = self.rank
        m = [[int(i == k) for k in range(n)] for i in range(n)]
        # s_j(gamma_k) = gamma_k - C[k][j] gamma_j
        for k in range(n):
            m[j][k] -= self.cartan[k][j]
        return m

    def _apply_word(self, word: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        cur = list(v)
        for j in reversed(list(word)):
            pairing = sum(cur[i] * self.cartan[i][j] for i in range(self.rank))
            cur[j] -= pairing
        return tuple(cur)

    def apply(self, w: "WeylElement", root: RelativeRoot) -> tuple[int, ...]:
        return self._apply_word(w.word, root.coords)

    def inversion_set(self, w: "WeylElement") -> tuple[RelativeRoot, ...]:
        """Positive reduced roots sent to negative roots by w."""
        out = []
        for r in self.positive_roots:
            img = self._apply_word(w.word, r.coords)
            if all(c <= 0 for c in img):
                out.append(r)
        return tuple(out)

    def length(self, w: "WeylElement") -> int:
        return len(self.inversion_set(w))

    def normalize(self, word: Sequence[int]) -> "WeylElement":
        """Lexicographically least reduced word, by descent stripping."""
        for j in word:
            if not 0 <= j < self.rank:
                raise RootSystemError(f"reflection index {j} out of range")
        n = self.rank
        # columns of w^{-1}
        inv_cols = [
            list(self._apply_word(list(reversed(list(word))),
                                  [int(i == j) for i in range(n)]))
            for j in range(n)
        ]
        result: list[int] = []
        while True:
            descent = next(
                (j for j in range(n) if all(c <= 0 for c in inv_cols[j])), None
            )
            if descent is None:
                break
            result.append(descent)
            # w <- s_d w, so w^{-1} <- w^{-1} s_d
            s = self._reflection_matrix(descent)
            inv_cols = [
                [
                    sum(inv_cols[k][i] * s[k][j] for k in range(n))
                    for i in range(n)
                ]
                for j in range(n)
            ]
        return WeylElement(tuple(result))

    def multiply(self, w1: "WeylElement", w2: "WeylElement") -> "WeylElement":
        return self.normalize(tuple(w1.word) + tuple(w2.word))

    def longest_element(self) -> "WeylElement":
        word: list[int] = []
        while True:
            asc = next(
                (
                    j
                    for j in range(self.rank)
                    if not all(
                        c <= 0
                        for c in self._apply_word(
                            word, [int(i == j) for i in range(self.rank)]
                        )
                    )
                ),
                None,
            )
            if asc is None:
                break
            word.append(asc)
        return self.normalize(word)

    def weyl_enumerate(self, limit: int = 4000) -> list["WeylElement"]:
        seen = {(): WeylElement(())}
        frontier = [()]
        while frontier:
            nxt = []
            for wd in frontier:
                for j in range(self.rank):
                    w = self.normalize(wd + (j,))
                    if w.word not in seen:
                        seen[w.word] = w
                        nxt.append(w.word)
                        if len(seen) > limit:
                            raise RootSystemError("Weyl group too large to enumerate")
            frontier = nxt
        return sorted(seen.values(), key=lambda w: (len(w.word), w.word))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl-group element as a (not necessarily reduced) word."""

    word: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word)

    @property
    def is_identity(self) -> bool:
        return not self.word


# ---------------------------------------------------------------------------
# folding


def _solve(mat: list[list[Fraction]], rhs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(mat)
    m = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def restrict_roots(datum: GroupDatum) -> RelativeRootSystem:
    """Fold the absolute system of ``datum`` to its relative reduced system."""
    a = datum.cartan
    n = len(a)
    d = _symmetrizer(a)
    gram_abs = [[d[i] * a[j][i] for j in range(n)] for i in range(n)]

    def bil(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return sum(
            Fraction(u[i]) * gram_abs[i][j] * Fraction(v[j])
            for i in range(n)
            for j in range(n)
            if u[i] and v[j]
        ) or Fraction(0)

    perm = datum.automorphism
    order = datum.automorphism_order

    def sigma(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * n
        for i, c in enumerate(v):
            out[perm[i]] = Fraction(c)
        return tuple(out)

    def project(v: Sequence[int]) -> Vec:
        cur: tuple[Fraction, ...] = tuple(Fraction(c) for c in v)
        acc = list(cur)
        for _ in range(order - 1):
            cur = sigma(cur)
            acc = [x + y for x, y in zip(acc, cur)]
        return tuple(x / order for x in acc)

    roots_abs = _generate_roots(a)
    pos_abs = [r for r in roots_abs if all(c >= 0 for c in r)]

    images: dict[Vec, list[tuple[int, ...]]] = {}
    for r in pos_abs:
        images.setdefault(project(r), []).append(r)

    def half(v: Vec) -> Vec:
        return tuple(c / 2 for c in v)

    def double(v: Vec) -> Vec:
        return tuple(c * 2 for c in v)

    reduced = [v for v in images if half(v) not in images]
    has_divisible = len(reduced) != len(images)

    # relative simple roots: images of absolute simple roots, orbit by orbit
    simple_orbits: list[list[int]] = []
    seen_nodes: set[int] = set()
    for i in range(n):
        if i in seen_nodes:
            continue
        orbit = [i]
        j = perm[i]
        while j != i:
            orbit.append(j)
            j = perm[j]
        seen_nodes.update(orbit)
        simple_orbits.append(sorted(orbit))
    rel_rank = len(simple_orbits)
    simple_images = [
        project(tuple(int(k == orb[0]) for k in range(n))) for orb in simple_orbits
    ]
    if any(v not in images or v not in reduced for v in simple_images):
        raise RootSystemError("internal: simple image is not a reduced relative root")

    gram_rel = [
        [bil(simple_images[i], simple_images[j]) for j in range(rel_rank)]
        for i in range(rel_rank)
    ]
    cartan_rel = [
        [2 * gram_rel[i][j] / gram_rel[j][j] for j in range(rel_rank)]
        for i in range(rel_rank)
    ]
    if any(x.denominator != 1 for row in cartan_rel for x in row):
        raise RootSystemError("internal: relative Cartan matrix is not integral")
    cartan_rel_int = [[int(x) for x in row] for row in cartan_rel]

    # coordinates of each reduced image in the relative simple basis
    def rel_coords(v: Vec) -> tuple[int, ...]:
        rhs = [bil(simple_images[i], v) for i in range(rel_rank)]
        x = _solve([row[:] for row in gram_rel], rhs)
        if any(c.denominator != 1 for c in x):
            raise RootSystemError("internal: non-integral relative coordinates")
        return tuple(int(c) for c in x)

    # component structure of the relative diagram
    comp_of_node = [-1] * rel_rank
    comps: list[list[int]] = []
    for i in range(rel_rank):
        if comp_of_node[i] >= 0:
            continue
        stack, nodes = [i], []
        comp_of_node[i] = len(comps)
        while stack:
            k = stack.pop()
            nodes.append(k)
            for j in range(rel_rank):
                if cartan_rel_int[k][j] != 0 and comp_of_node[j] < 0:
                    comp_of_node[j] = len(comps)
                    stack.append(j)
        comps.append(sorted(nodes))

    # rank-one data per reduced root
    dprime = datum.res_degree
    entries = []
    for v in reduced:
        orbit_roots = list(images[v]) + list(images.get(double(v), []))
        # connected components of the orbit under non-orthogonality
        k = len(orbit_roots)
        comp_id = list(range(k))

        def find(x: int) -> int:
            while comp_id[x] != x:
                comp_id[x] = comp_id[comp_id[x]]
                x = comp_id[x]
            return x

        for x, y in itertools.combinations(range(k), 2):
            if bil(orbit_roots[x], orbit_roots[y]) != 0:
                comp_id[find(x)] = find(y)
        ncomp = len({find(x) for x in range(k)})
        su21 = bool(images.get(double(v)))
        if su21 and k != 3 * ncomp:
            raise RootSystemError("internal: unexpected unitary orbit shape")
        entries.append(
            dict(
                image=v,
                coords=rel_coords(v),
                orbit=tuple(sorted(images[v]) + sorted(images.get(double(v), []))),
                d_alpha=dprime * ncomp,
                rank_one_type=SU21 if su21 else SL2,
                norm2=bil(v, v),
                abs_norm2=bil(images[v][0], images[v][0]),
                component=comp_of_node[
                    next(i for i, c in enumerate(rel_coords(v)) if c != 0)
                ],
            )
        )

    # length classes per component; a triality fold records the orbit-of-three
    # roots as long, matching the classification tables.
    has_triality = any(len(o) == 3 for o in simple_orbits)
    for ci in range(len(comps)):
        norms = sorted({e["norm2"] for e in entries if e["component"] == ci})
        for e in entries:
            if e["component"] != ci:
                continue
            if len(norms) == 1:
                e["length_class"] = "single"
            else:
                small = e["norm2"] == norms[0]
                if has_triality and norms[-1] / norms[0] == 3:
                    small = not small
                e["length_class"] = "short" if small else "long"

    # order: simples first (orbit order), then by height and coordinates
    simple_keys = [rel_coords(v) for v in simple_images]
    key_index = {k: i for i, k in enumerate(simple_keys)}

    def sort_key(e: dict) -> tuple:
        c = e["coords"]
        if c in key_index:
            return (0, key_index[c])
        return (1, sum(c), c)

    entries.sort(key=sort_key)
    rel_roots = [
        RelativeRoot(
            index=i,
            coords=e["coords"],
            orbit=e["orbit"],
            length_class=e["length_class"],
            d_alpha=e["d_alpha"],
            rank_one_type=e["rank_one_type"],
            norm2=e["norm2"],
            abs_norm2=e["abs_norm2"],
            component=e["component"],
        )
        for i, e in enumerate(entries)
    ]

    components = [
        (_component_type(cartan_rel_int, gram_rel, nodes), tuple(nodes))
        for nodes in comps
    ]
    return RelativeRootSystem(
        datum=datum,
        simple_orbits=simple_orbits,
        positive_roots=rel_roots,
        cartan=cartan_rel_int,
        gram=gram_rel,
        components=components,
        has_divisible=has_divisible,
    )


def _component_type(
    cartan: list[list[int]], gram: list[list[Fraction]], nodes: Sequence[int]
) -> str:
    """Classify an irreducible relative diagram ('B2' stands for B2 = C2)."""
    k = len(nodes)
    bonds = [
        (i, j, cartan[i][j] * cartan[j][i])
        for i, j in itertools.combinations(nodes, 2)
        if cartan[i][j] != 0
    ]
    if any(b == 3 for *_, b in bonds):
        return f"G{k}"
    if any(b == 2 for *_, b in bonds):
        if k == 2:
            return "B2"
        norms = [gram[i][i] for i in nodes]
        top = max(norms)
        nlong = sum(1 for x in norms if x == top)
        if nlong == 2 and k == 4 and sum(1 for x in norms if x != top) == 2:
            return "F4"
        return f"C{k}" if nlong == 1 else f"B{k}"
    # simply laced: look at the branch node, if any
    degree = {i: 0 for i in nodes}
    for i, j, _ in bonds:
        degree[i] += 1
        degree[j] += 1
    branch = [i for i in nodes if degree[i] == 3]
    if not branch:
        return f"A{k}"
    arms = sorted(_arm_lengths(bonds, branch[0], nodes))
    if arms[:2] == [1, 1]:
        return f"D{k}"
    return f"E{k}"


def _arm_lengths(bonds: list, branch: int, nodes: Sequence[int]) -> list[int]:
    adj: dict[int, list[int]] = {i: [] for i in nodes}
    for i, j, _ in bonds:
        adj[i].append(j)
        adj[j].append(i)
    arms = []
    for start in adj[branch]:
        length, prev, cur = 1, branch, start
        while True:
            ahead = [x for x in adj[cur] if x != prev]
            if not ahead:
                break
            prev, cur = cur, ahead[0]
            length += 1
        arms.append(length)
    return arms


# ---------------------------------------------------------------------------
# classification tables


FAMILIES = ("split", "SU(n,n+1)", "SU(n,n)", "Spin2n-", "3D4", "2E6")


def proposition_table(family: str, n: int = 0, d_prime: int = 1) -> dict[str, int]:
    """Degrees d_alpha per length class for the standard quasi-split families."""
    if d_prime < 1:
        raise RootSystemError("d_prime must be positive")
    if family == "split":
        return {"all": d_prime}
    if family == "SU(n,n+1)":
        if n < 2:
            raise RootSystemError("SU(n,n+1) table needs n >= 2")
        return {"long": 2 * d_prime, "short": d_prime}
    if family == "SU(n,n)":
        if n < 2:
            raise RootSystemError("SU(n,n) table needs n >= 2")
        return {"short": 2 * d_prime, "long": d_prime}
    if family == "Spin2n-":
        if n < 4:
            raise RootSystemError("Spin2n- table needs n >= 4")
        return {"short": 2 * d_prime, "long": d_prime}
    if family == "3D4":
        return {"long": 3 * d_prime, "short": d_prime}
    if family == "2E6":
        return {"short": 2 * d_prime, "long": d_prime}
    raise RootSystemError(f"unknown family {family!r}")


def family_datum(family: str, n: int = 0, d_prime: int = 1) -> GroupDatum:
    """The group datum whose folding realizes a table family."""
    if family == "SU(n,n+1)":
        return su_datum(n, n + 1, d_prime)
    if family == "SU(n,n)":
        return su_datum(n, n, d_prime)
    if family == "Spin2n-":
        return spin_minus_datum(n, d_prime)
    if family == "3D4":
        return triality_datum(d_prime)
    if family == "2E6":
        return quasi_split_e6_datum(d_prime)
    raise RootSystemError(f"no folded datum for family {family!r}")


def derived_table(system: RelativeRootSystem) -> dict[str, int]:
    """Length class -> d_alpha, read off the computed relative roots."""
    out: dict[str, set[int]] = {}
    for r in system.positive_roots:
        key = "all" if r.length_class == "single" else r.length_class
        out.setdefault(key, set()).add(r.d_alpha)
    bad = {k: v for k, v in out.items() if len(v) != 1}
    if bad:
        raise RootSystemError(f"inhomogeneous degrees within a length class: {bad}")
    return {k: v.pop() for k, v in out.items()}
