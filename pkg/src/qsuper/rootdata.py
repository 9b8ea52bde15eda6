"""Distinguished root data for the basic Lie superalgebras.

Supported kinds: A(m,n), B(m,n), B(0,n), C(n+1), D(m,n), D(2,1;alpha),
F(4), G(3).  Each datum fixes an ambient coordinate space spanned by
epsilon/delta basis vectors with a (possibly indefinite) symmetric form,
the distinguished simple system with exactly one odd simple root, the
split lists of positive roots, rho, the Weyl group of the even part, and
the root order D of the formal variable v (v^D = q).

Weights are stored in ambient coordinates.  For A(m,n) with m != n the
component orthogonal to all roots is projected away, so every stored
weight lies in the rational span of the simple roots.  For A(n,n) the
ambient value only matters modulo the null vector gamma; weights are
canonicalized by zeroing the last delta coordinate and, where the free
lattice matters (gradings, the partial order), carry an explicit
representative over the simple roots.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .scalars import Scalar, q_power

Vec = Tuple[Fraction, ...]


class Weight:
    """A point of h* in epsilon/delta coordinates, plus an optional
    free representative over the simple roots (used for A(n,n))."""

    __slots__ = ("coords", "rep")

    def __init__(self, coords: Sequence[Fraction], rep: Optional[Sequence[Fraction]] = None):
        self.coords = tuple(Fraction(c) for c in coords)
        self.rep = tuple(Fraction(c) for c in rep) if rep is not None else None

    def __add__(self, other: "Weight") -> "Weight":
        rep = None
        if self.rep is not None and other.rep is not None:
            rep = tuple(a + b for a, b in zip(self.rep, other.rep))
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), rep)

    def __sub__(self, other: "Weight") -> "Weight":
        rep = None
        if self.rep is not None and other.rep is not None:
            rep = tuple(a - b for a, b in zip(self.rep, other.rep))
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), rep)

    def __neg__(self) -> "Weight":
        rep = tuple(-a for a in self.rep) if self.rep is not None else None
        return Weight(tuple(-a for a in self.coords), rep)

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        rep = tuple(c * a for a in self.rep) if self.rep is not None else None
        return Weight(tuple(c * a for a in self.coords), rep)

    def __rmul__(self, c) -> "Weight":
        return self.scale(c)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"Weight({list(self.coords)})"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _solve(columns: Sequence[Vec], target: Vec) -> List[Fraction]:
    """Solve sum_j x_j columns[j] = target exactly; free variables are set
    to zero; raises ValueError when the system is inconsistent."""
    nrows = len(target)
    ncols = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivots: List[Tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if aug[r][ncols] != 0:
            raise ValueError("weight is not in the span of the simple roots")
    x = [Fraction(0)] * ncols
    for r, c in pivots:
        x[c] = aug[r][ncols]
    return x


class RootDatum:
    """All root-system data of one basic Lie superalgebra with its
    distinguished simple system.  Built via build_root_datum."""

    def __init__(self, kind: str, params: tuple, labels: Sequence[str],
                 ambient: Sequence[Sequence[Fraction]], simple_coords: Sequence[Vec],
                 pos_even_coords: Sequence[Vec], pos_odd_coords: Sequence[Vec], s: int):
        self.kind = kind
        self.params = params
        self.labels = tuple(labels)
        self.ambient = tuple(tuple(Fraction(x) for x in row) for row in ambient)
        self.rank = len(simple_coords)
        self.s = s  # 1-based position of the odd simple root
        self._raw_simple = [tuple(Fraction(x) for x in v) for v in simple_coords]
        self._vec_cache: Dict[Tuple[Fraction, ...], Tuple[Fraction, ...]] = {}

        # Null direction handling for type A.
        self._gamma: Optional[Vec] = None
        self._project = False
        if kind == "A":
            m, n = params
            dim = len(labels)
            gamma = tuple(Fraction(1) if i <= m else Fraction(-1) for i in range(dim))
            self._gamma = gamma
            if m != n:
                self._project = True

        # Relation vector of the free cover for A(n,n): the K-grading and
        # the partial order live in Z^r modulo integer multiples of it.
        self.torsion: Optional[Tuple[int, ...]] = None
        if kind == "A" and params[0] == params[1]:
            np1 = params[0] + 1
            self.torsion = tuple(list(range(1, np1 + 1)) + list(range(np1 - 1, 0, -1)))

        unit = [Fraction(0)] * self.rank
        self.simple = tuple(
            Weight(self._canonical_coords(v),
                   rep=tuple(unit[:i]) + (Fraction(1),) + tuple(unit[i + 1:]))
            for i, v in enumerate(self._raw_simple)
        )
        self.pos_even = tuple(self._weight_from_ambient(v) for v in pos_even_coords)
        self.pos_odd = tuple(self._weight_from_ambient(v) for v in pos_odd_coords)

        self.gram = tuple(
            tuple(self._form_coords(a.coords, b.coords) for b in self.simple)
            for a in self.simple
        )
        self.parity = tuple(1 if i + 1 == s else 0 for i in range(self.rank))
        self.d = tuple(
            self.gram[i][i] / 2 if self.gram[i][i] != 0 else Fraction(1)
            for i in range(self.rank)
        )
        self.cartan = tuple(
            tuple(self.gram[i][j] / self.d[i] for j in range(self.rank))
            for i in range(self.rank)
        )
        self.D = 2 * reduce(_lcm, (x.denominator for row in self.gram for x in row), 1)
        self.qi = tuple(q_power(di, self.D) for di in self.d)

        self.iso_pos = tuple(b for b in self.pos_odd if self.form(b, b) == 0)
        half = Fraction(1, 2)
        rho = Weight((Fraction(0),) * len(self.labels))
        for a in self.pos_even:
            rho = rho + a.scale(half)
        for b in self.pos_odd:
            rho = rho - b.scale(half)
        self.rho = self._reweight(rho)

        self.simple_vec = tuple(
            tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.rank))
            for i in range(self.rank)
        )
        self.pos_even_vec = tuple(self.vec_from_weight(a) for a in self.pos_even)
        self.pos_odd_vec = tuple(self.vec_from_weight(b) for b in self.pos_odd)
        self.iso_pos_vec = tuple(self.vec_from_weight(b) for b in self.iso_pos)
        self.rho_vec = self.vec_from_weight(self.rho)

        self.weyl_simple = tuple(self._even_simple_system())
        self._weyl_cache: Optional[List[Tuple[tuple, int]]] = None

    # -- construction helpers ------------------------------------------------

    def _canonical_coords(self, coords: Sequence[Fraction]) -> Vec:
        coords = tuple(Fraction(c) for c in coords)
        g = self._gamma
        if g is None:
            return coords
        if self._project:
            gg = self._form_coords(g, g)
            t = self._form_coords(coords, g) / gg
            return tuple(c - t * gi for c, gi in zip(coords, g))
        t = coords[-1] / g[-1]
        return tuple(c - t * gi for c, gi in zip(coords, g))

    def _form_coords(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                row = self.ambient[i]
                for j, bj in enumerate(b):
                    if bj and row[j]:
                        total += ai * row[j] * bj
        return total

    def _weight_from_ambient(self, coords: Sequence[Fraction]) -> Weight:
        rep = None
        if self.torsion is not None:
            # Solve against the raw (independent) simple system so that
            # positive roots get their honest nonnegative expansions.
            try:
                rep = _solve(self._raw_simple, tuple(Fraction(c) for c in coords))
            except ValueError:
                rep = None
        return Weight(self._canonical_coords(coords), rep)

    def _reweight(self, w: Weight) -> Weight:
        return self._weight_from_ambient(w.coords)

    def _even_simple_system(self) -> List[Weight]:
        pos = list(self.pos_even)
        posset = set(pos)
        out = []
        for a in pos:
            if not any((a - b) in posset for b in pos if b != a):
                out.append(a)
        return out

    # -- public queries --------------------------------------------------------

    @property
    def descriptor(self) -> str:
        if self.kind == "A":
            return f"A({self.params[0]},{self.params[1]})"
        if self.kind == "B":
            return f"B({self.params[0]},{self.params[1]})"
        if self.kind == "C":
            return f"C({self.params[0]})"
        if self.kind == "D":
            return f"D({self.params[0]},{self.params[1]})"
        if self.kind == "D21":
            a = self.params[0]
            return f"D(2,1;{a})"
        return {"F4": "F(4)", "G3": "G(3)"}[self.kind]

    def form(self, lam: Weight, mu: Weight) -> Fraction:
        return self._form_coords(lam.coords, mu.coords)

    def bracket(self, lam: Weight, mu: Weight) -> Fraction:
        mm = self.form(mu, mu)
        if mm == 0:
            raise ValueError("bracket <lambda,mu> undefined: mu is isotropic")
        return 2 * self.form(lam, mu) / mm

    def form_vec(self, u: Sequence[Fraction], w: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.gram[i]
                for j, wj in enumerate(w):
                    if wj and row[j]:
                        total += ui * row[j] * wj
        return total

    def q(self, e) -> Scalar:
        return q_power(Fraction(e), self.D)

    def weight_from_vec(self, vec: Sequence[Fraction]) -> Weight:
        coords = tuple(
            sum((Fraction(c) * a.coords[i] for c, a in zip(vec, self.simple)),
                Fraction(0))
            for i in range(len(self.labels))
        )
        rep = tuple(Fraction(c) for c in vec) if self.torsion is not None else None
        return Weight(coords, rep)

    def vec_from_weight(self, lam: Weight) -> Vec:
        if self.torsion is not None and lam.rep is not None:
            return lam.rep
        cached = self._vec_cache.get(lam.coords)
        if cached is None:
            cached = tuple(_solve([a.coords for a in self.simple], lam.coords))
            self._vec_cache[lam.coords] = cached
        return cached

    def canonical(self, lam: Weight) -> Weight:
        return Weight(self._canonical_coords(lam.coords), lam.rep)

    def unit_weight(self, label: str) -> Weight:
        i = self.labels.index(label)
        coords = tuple(Fraction(1) if j == i else Fraction(0)
                       for j in range(len(self.labels)))
        return self._weight_from_ambient(coords)

    # -- Weyl group ------------------------------------------------------------

    def reflect(self, alpha: Weight, lam: Weight) -> Weight:
        aa = self.form(alpha, alpha)
        if aa == 0:
            raise ValueError("cannot reflect in an isotropic root")
        t = 2 * self.form(lam, alpha) / aa
        moved = Weight(tuple(c - t * a for c, a in zip(lam.coords, alpha.coords)))
        return self._reweight(moved)

    def weyl_orbit(self, lam: Weight) -> List[Weight]:
        start = self._reweight(lam)
        seen = {start}
        queue = [start]
        while queue:
            w = queue.pop()
            for a in self.weyl_simple:
                nxt = self.reflect(a, w)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return sorted(seen, key=lambda x: x.coords)

    def weyl_elements(self) -> List[Tuple[tuple, int]]:
        """All elements of W as ambient matrices, with their determinants."""
        if self._weyl_cache is not None:
            return self._weyl_cache
        dim = len(self.labels)
        ident = tuple(tuple(Fraction(1) if i == j else Fraction(0)
                            for j in range(dim)) for i in range(dim))
        gens = []
        for a in self.weyl_simple:
            aa = self.form(a, a)
            mat = tuple(
                tuple(ident[i][j]
                      - 2 * self._form_coords(ident[j], a.coords) / aa * a.coords[i]
                      for j in range(dim))
                for i in range(dim)
            )
            gens.append(mat)
        seen = {ident: 1}
        queue = [ident]
        while queue:
            w = queue.pop()
            dw = seen[w]
            for g in gens:
                prod = tuple(
                    tuple(sum(g[i][k] * w[k][j] for k in range(dim))
                          for j in range(dim))
                    for i in range(dim)
                )
                if prod not in seen:
                    seen[prod] = -dw
                    queue.append(prod)
        self._weyl_cache = [(m, d) for m, d in seen.items()]
        return self._weyl_cache

    def apply_matrix(self, mat: tuple, lam: Weight) -> Weight:
        coords = tuple(
            sum((mat[i][j] * lam.coords[j] for j in range(len(lam.coords))),
                Fraction(0))
            for i in range(len(lam.coords))
        )
        return self._reweight(Weight(coords))

    # -- lattices ----------------------------------------------------------------

    def lattice_tests(self, lam: Weight) -> Dict[str, bool]:
        try:
            vec = self.vec_from_weight(self.canonical(lam))
            if self.torsion is not None:
                # Membership in ZPhi only depends on the class modulo the
                # relation vector, whose last entry is 1: zero the last slot.
                t = vec[-1]
                vec = tuple(x - t * c for x, c in zip(vec, self.torsion))
            in_zphi = all(c.denominator == 1 for c in vec)
        except ValueError:
            in_zphi = False
        brackets = [self.bracket(lam, a) for a in self.pos_even]
        in_lambda = all(b.denominator == 1 for b in brackets)
        in_even = in_zphi and in_lambda and all(b % 2 == 0 for b in brackets)
        in_plus = in_lambda and all(b >= 0 for b in brackets)
        return {
            "in_ZPhi": in_zphi,
            "in_Lambda": in_lambda,
            "in_2Lambda_cap_ZPhi": in_even,
            "in_Lambda_plus": in_plus,
        }

    def partial_order_leq(self, lam: Weight, mu: Weight) -> bool:
        """lam <= mu iff mu - lam is a nonnegative integer combination of
        simple roots (taken in the free lattice for A(n,n))."""
        if self.torsion is not None:
            if lam.rep is None or mu.rep is None:
                raise ValueError(
                    "partial order for A(n,n) needs free-lattice representatives")
            diff = tuple(b - a for a, b in zip(lam.rep, mu.rep))
        else:
            try:
                diff = self.vec_from_weight(self.canonical(mu - lam))
            except ValueError:
                return False
        return all(c.denominator == 1 and c >= 0 for c in diff)

    def dominant_even(self, lam: Weight) -> bool:
        return all(self.bracket(lam, a) >= 0 for a in self.pos_even)

    def typical(self, lam: Weight) -> bool:
        lr = lam + self.rho
        return all(self.form(lr, b) != 0 for b in self.iso_pos)

    # -- rendering -----------------------------------------------------------------

    def render_weight(self, lam: Weight) -> str:
        parts = []
        for c, label in zip(lam.coords, self.labels):
            if c == 0:
                continue
            if c == 1:
                body = label
            elif c == -1:
                body = f"-{label}"
            else:
                body = f"{c}*{label}"
            if parts and not body.startswith("-"):
                parts.append(f"+{body}")
            else:
                parts.append(body)
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"RootDatum({self.descriptor})"


def _diag(*entries: Fraction) -> List[List[Fraction]]:
    n = len(entries)
    return [[entries[i] if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def _unit(dim: int, i: int) -> List[Fraction]:
    return [Fraction(1) if j == i else Fraction(0) for j in range(dim)]


def _addv(a, b):
    return [x + y for x, y in zip(a, b)]


def _subv(a, b):
    return [x - y for x, y in zip(a, b)]


def _negv(a):
    return [-x for x in a]


def _build_A(m: int, n: int) -> RootDatum:
    if (m, n) == (1, 1):
        raise ValueError(
            "A(1,1) is not supported: the image of the Harish-Chandra "
            "homomorphism has not been determined for this type")
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"invalid parameters for A(m,n): ({m},{n})")
    dim = m + n + 2
    labels = [f"eps{i + 1}" for i in range(m + 1)] + [f"delta{j + 1}" for j in range(n + 1)]
    gram = _diag(*([Fraction(1)] * (m + 1) + [Fraction(-1)] * (n + 1)))
    e = [_unit(dim, i) for i in range(m + 1)]
    d = [_unit(dim, m + 1 + j) for j in range(n + 1)]
    simple = [_subv(e[i], e[i + 1]) for i in range(m)]
    simple.append(_subv(e[m], d[0]))
    simple += [_subv(d[j], d[j + 1]) for j in range(n)]
    pos_even = [_subv(e[i], e[j]) for i in range(m + 1) for j in range(i + 1, m + 1)]
    pos_even += [_subv(d[i], d[j]) for i in range(n + 1) for j in range(i + 1, n + 1)]
    pos_odd = [_subv(e[i], d[j]) for i in range(m + 1) for j in range(n + 1)]
    return RootDatum("A", (m, n), labels, gram, simple, pos_even, pos_odd, s=m + 1)


def _build_B(m: int, n: int) -> RootDatum:
    if n < 1 or m < 0:
        raise ValueError(f"invalid parameters for B(m,n): ({m},{n})")
    dim = m + n
    labels = [f"delta{i + 1}" for i in range(n)] + [f"eps{j + 1}" for j in range(m)]
    gram = _diag(*([Fraction(-1)] * n + [Fraction(1)] * m))
    d = [_unit(dim, i) for i in range(n)]
    e = [_unit(dim, n + j) for j in range(m)]
    simple = [_subv(d[i], d[i + 1]) for i in range(n - 1)]
    if m == 0:
        simple.append(d[n - 1])
    else:
        simple.append(_subv(d[n - 1], e[0]))
        simple += [_subv(e[j], e[j + 1]) for j in range(m - 1)]
        simple.append(e[m - 1])
    pos_even = []
    pos_even += [_subv(d[i], d[j]) for i in range(n) for j in range(i + 1, n)]
    pos_even += [_addv(d[i], d[j]) for i in range(n) for j in range(i + 1, n)]
    pos_even += [_addv(d[i], d[i]) for i in range(n)]
    pos_even += [_subv(e[i], e[j]) for i in range(m) for j in range(i + 1, m)]
    pos_even += [_addv(e[i], e[j]) for i in range(m) for j in range(i + 1, m)]
    pos_even += [e[j] for j in range(m)]
    pos_odd = [_subv(d[i], e[j]) for i in range(n) for j in range(m)]
    pos_odd += [_addv(d[i], e[j]) for i in range(n) for j in range(m)]
    pos_odd += [d[i] for i in range(n)]
    return RootDatum("B", (m, n), labels, gram, simple, pos_even, pos_odd, s=n)


def _build_C(k: int) -> RootDatum:
    n = k - 1
    if n < 1:
        raise ValueError(f"invalid parameter for C(n+1): ({k})")
    dim = n + 1
    labels = ["eps"] + [f"delta{i + 1}" for i in range(n)]
    gram = _diag(*([Fraction(1)] + [Fraction(-1)] * n))
    e = _unit(dim, 0)
    d = [_unit(dim, 1 + i) for i in range(n)]
    simple = [_subv(e, d[0])]
    simple += [_subv(d[i], d[i + 1]) for i in range(n - 1)]
    simple.append(_addv(d[n - 1], d[n - 1]))
    pos_even = [_subv(d[i], d[j]) for i in range(n) for j in range(i + 1, n)]
    pos_even += [_addv(d[i], d[j]) for i in range(n) for j in range(i + 1, n)]
    pos_even += [_addv(d[i], d[i]) for i in range(n)]
    pos_odd = [_subv(e, d[i]) for i in range(n)] + [_addv(e, d[i]) for i in range(n)]
    return RootDatum("C", (k,), labels, gram, simple, pos_even, pos_odd, s=1)


def _build_D(m: int, n: int) -> RootDatum:
    if m < 2 or n < 1:
        raise ValueError(f"invalid parameters for D(m,n): ({m},{n})")
    dim = m + n
    labels = [f"delta{i + 1}" for i in range(n)] + [f"eps{j + 1}" for j in range(m)]
    gram = _diag(*([Fraction(-1)] * n + [Fraction(1)] * m))
    d = [_unit(dim, i) for i in range(n)]
    e = [_unit(dim, n + j) for j in range(m)]
    simple = [_subv(d[i], d[i + 1]) for i in range(n - 1)]
    simple.append(_subv(d[n - 1], e[0]))
    simple += [_subv(e[j], e[j + 1]) for j in range(m - 1)]
    simple.append(_addv(e[m - 2], e[m - 1]))
    pos_even = []
    pos_even += [_subv(d[i], d[j]) for i in range(n) for j in range(i + 1, n)]
    pos_even += [_addv(d[i], d[j]) for i in range(n) for j in range(i + 1, n)]
    pos_even += [_addv(d[i], d[i]) for i in range(n)]
    pos_even += [_subv(e[i], e[j]) for i in range(m) for j in range(i + 1, m)]
    pos_even += [_addv(e[i], e[j]) for i in range(m) for j in range(i + 1, m)]
    pos_odd = [_subv(d[i], e[j]) for i in range(n) for j in range(m)]
    pos_odd += [_addv(d[i], e[j]) for i in range(n) for j in range(m)]
    return RootDatum("D", (m, n), labels, gram, simple, pos_even, pos_odd, s=n)


def _build_D21(alpha: Fraction) -> RootDatum:
    alpha = Fraction(alpha)
    if alpha in (0, -1):
        raise ValueError(
            f"D(2,1;{alpha}) is degenerate: alpha must avoid 0 and -1")
    labels = ["eps1", "eps2", "eps3"]
    gram = _diag(Fraction(-1) - alpha, Fraction(1), alpha)
    e = [_unit(3, i) for i in range(3)]
    simple = [_addv(_addv(e[0], e[1]), e[2]), _negv(_addv(e[1], e[1])),
              _negv(_addv(e[2], e[2]))]
    pos_even = [_addv(e[0], e[0]), _negv(_addv(e[1], e[1])), _negv(_addv(e[2], e[2]))]
    pos_odd = [
        _addv(_addv(e[0], e[1]), e[2]),
        _subv(_addv(e[0], e[1]), e[2]),
        _addv(_subv(e[0], e[1]), e[2]),
        _subv(_subv(e[0], e[1]), e[2]),
    ]
    return RootDatum("D21", (alpha,), labels, gram, simple, pos_even, pos_odd, s=1)


def _build_F4() -> RootDatum:
    labels = ["delta", "eps1", "eps2", "eps3"]
    gram = _diag(Fraction(-3), Fraction(1), Fraction(1), Fraction(1))
    dl = _unit(4, 0)
    e = [_unit(4, 1 + i) for i in range(3)]
    half = Fraction(1, 2)
    def comb(s1, s2, s3):
        out = [half, s1 * half, s2 * half, s3 * half]
        return out
    simple = [comb(-1, -1, -1), e[2], _subv(e[1], e[2]), _subv(e[0], e[1])]
    pos_even = [dl] + e[:]
    pos_even += [_subv(e[i], e[j]) for i in range(3) for j in range(i + 1, 3)]
    pos_even += [_addv(e[i], e[j]) for i in range(3) for j in range(i + 1, 3)]
    pos_odd = [comb(s1, s2, s3) for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)]
    return RootDatum("F4", (), labels, gram, simple, pos_even, pos_odd, s=1)


def _build_G3() -> RootDatum:
    labels = ["delta", "eps1", "eps2"]
    gram = [[Fraction(-2), Fraction(0), Fraction(0)],
            [Fraction(0), Fraction(2), Fraction(-1)],
            [Fraction(0), Fraction(-1), Fraction(2)]]
    dl = _unit(3, 0)
    e1 = _unit(3, 1)
    e2 = _unit(3, 2)
    e12 = _addv(e1, e2)
    simple = [_subv(dl, e12), e1, _subv(e2, e1)]
    pos_even = [_addv(dl, dl), e1, e2, _subv(e2, e1), _addv(e2, e1),
                _addv(_addv(e1, e1), e2), _addv(e1, _addv(e2, e2))]
    pos_odd = [dl, _addv(dl, e1), _subv(dl, e1), _addv(dl, e2), _subv(dl, e2),
               _subv(dl, e12), _addv(dl, e12)]
    return RootDatum("G3", (), labels, gram, simple, pos_even, pos_odd, s=1)


_DESC_RE = re.compile(
    r"^\s*([ABCDFG])\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?(?:;\s*(-?\d+(?:\s*/\s*\d+)?)\s*)?\)\s*$"
)


def parse_descriptor(text: str) -> Tuple[str, tuple]:
    m = _DESC_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse root-datum descriptor {text!r}")
    letter, p1, p2, alpha = m.groups()
    if alpha is not None:
        if letter != "D" or int(p1) != 2 or p2 is None or int(p2) != 1:
            raise ValueError(f"cannot parse root-datum descriptor {text!r}")
        return "D21", (Fraction(alpha.replace(" ", "")),)
    if letter in ("F", "G"):
        if p2 is not None:
            raise ValueError(f"cannot parse root-datum descriptor {text!r}")
        if letter == "F" and int(p1) == 4:
            return "F4", ()
        if letter == "G" and int(p1) == 3:
            return "G3", ()
        raise ValueError(f"unsupported type {text!r}")
    if letter == "C":
        if p2 is not None:
            raise ValueError(f"cannot parse root-datum descriptor {text!r}")
        return "C", (int(p1),)
    if p2 is None:
        raise ValueError(f"type {letter} needs two parameters, got {text!r}")
    return letter, (int(p1), int(p2))


_BUILDERS = {
    "A": _build_A,
    "B": lambda m, n: _build_B(m, n),
    "C": _build_C,
    "D": _build_D,
    "D21": _build_D21,
    "F4": _build_F4,
    "G3": _build_G3,
}

_cache: Dict[Tuple[str, tuple], RootDatum] = {}


def build_root_datum(kind, params: tuple = None) -> RootDatum:
    """Build the distinguished root datum; kind may be a descriptor string
    like 'A(1,0)' or a kind letter with explicit params."""
    if params is None:
        kind, params = parse_descriptor(kind)
    key = (kind, tuple(params))
    if key not in _cache:
        _cache[key] = _BUILDERS[kind](*params)
    return _cache[key]
