"""Weight modules: truncated Vermas, simple quotients via the contravariant
form, duals, tensor products, parity shifts, and character oracles.

All module data is exact: basis weights, parities and generator action
matrices over the scalar field.  A module remembers the depth cutoff it was
built with and whether its dimensions stabilized below that cutoff.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (
    AlgebraElement, Monomial, antipode, gen_e, gen_f, get_algebra,
)
from .pairing import word_vec
from .rootdata import RootDatum, Weight
from .scalars import ONE, ZERO, Scalar, scalar_to_json

Matrix = List[List[Scalar]]


def _zero_matrix(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = _zero_matrix(n, m)
    for i in range(n):
        row = a[i]
        for t in range(k):
            x = row[t]
            if x.is_zero():
                continue
            bt = b[t]
            orow = out[i]
            for j in range(m):
                if not bt[j].is_zero():
                    orow[j] = orow[j] + x * bt[j]
    return out


def echelon_columns(matrix: Matrix) -> Tuple[List[int], List[List[Scalar]]]:
    """Column-pivot data of an exact matrix.

    Returns the pivot column indices and, for every column, its coefficients
    over the pivot columns (a pivot column reduces to itself).
    """
    if not matrix:
        return [], []
    n, m = len(matrix), len(matrix[0])
    work = [row[:] for row in matrix]
    pivot_rows: List[int] = []
    pivot_cols: List[int] = []
    r = 0
    for c in range(m):
        pr = None
        for rr in range(r, n):
            if not work[rr][c].is_zero():
                pr = rr
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for rr in range(n):
            if rr != r and not work[rr][c].is_zero():
                f = work[rr][c]
                work[rr] = [x - f * y for x, y in zip(work[rr], work[r])]
        pivot_rows.append(r)
        pivot_cols.append(c)
        r += 1
        if r == n:
            break
    reduction = []
    for c in range(m):
        reduction.append([work[i][c] for i in range(len(pivot_cols))])
    return pivot_cols, reduction


class WeightModule:
    """A finite-dimensional weight module given by exact action matrices.

    ``e_action[i]`` and ``f_action[i]`` hold the matrices of E_i and F_i in
    the stored basis (entry [r][c] is the coefficient of basis vector r in
    the image of basis vector c).  K_mu acts diagonally by q^{(eta, mu)} on
    a vector of weight eta.
    """

    __slots__ = ("datum", "name", "weights", "parities", "e_action",
                 "f_action", "highest_weight", "depth", "status")

    def __init__(self, datum: RootDatum, name: str, weights: List[Weight],
                 parities: List[int], e_action: List[Matrix],
                 f_action: List[Matrix], highest_weight: Optional[Weight],
                 depth: int, status: str):
        self.datum = datum
        self.name = name
        self.weights = list(weights)
        self.parities = list(parities)
        self.e_action = e_action
        self.f_action = f_action
        self.highest_weight = highest_weight
        self.depth = depth
        self.status = status

    @property
    def dim(self) -> int:
        return len(self.weights)

    def k_diagonal(self, kvec: Sequence[int]) -> List[Scalar]:
        mu = self.datum.weight_from_vec(kvec)
        return [self.datum.q(self.datum.form(eta, mu)) for eta in self.weights]

    def apply_monomial(self, m: Monomial) -> Matrix:
        n = self.dim
        out = None
        for i in reversed(m.eword):
            out = self.e_action[i] if out is None else _mat_mul(self.e_action[i], out)
        if any(m.kexp):
            diag = self.k_diagonal(m.kexp)
            if out is None:
                out = [[diag[r] if r == c else ZERO for c in range(n)] for r in range(n)]
            else:
                out = [[diag[r] * out[r][c] for c in range(n)] for r in range(n)]
        for i in reversed(m.fword):
            out = self.f_action[i] if out is None else _mat_mul(self.f_action[i], out)
        if out is None:
            out = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
        return out

    def apply_element(self, elem: AlgebraElement) -> Matrix:
        n = self.dim
        out = _zero_matrix(n, n)
        for m, c in elem.terms.items():
            mat = self.apply_monomial(m)
            for r in range(n):
                for s in range(n):
                    if not mat[r][s].is_zero():
                        out[r][s] = out[r][s] + c * mat[r][s]
        return out

    def weight_spaces(self) -> Dict[Weight, List[int]]:
        spaces: Dict[Weight, List[int]] = {}
        for idx, w in enumerate(self.weights):
            spaces.setdefault(w, []).append(idx)
        return spaces

    def to_payload(self) -> dict:
        def wvec(w: Weight) -> List[str]:
            return [str(c) for c in self.datum.vec_from_weight(w)]

        return {
            "datum": self.datum.descriptor,
            "name": self.name,
            "dim": self.dim,
            "status": self.status,
            "depth": self.depth,
            "highest_weight": wvec(self.highest_weight) if self.highest_weight else None,
            "weights": [wvec(w) for w in self.weights],
            "parities": list(self.parities),
            "e_action": [[[scalar_to_json(x) for x in row] for row in mat]
                         for mat in self.e_action],
            "f_action": [[[scalar_to_json(x) for x in row] for row in mat]
                         for mat in self.f_action],
        }

    def __repr__(self) -> str:
        return "WeightModule(%s, %s, dim=%d, %s)" % (
            self.datum.descriptor, self.name, self.dim, self.status)


def _require_half_lattice(datum: RootDatum, lam: Weight) -> None:
    """Weights must live in (1/2) ZPhi so every K-eigenvalue is a power of
    the base v; anything else is rejected rather than approximated."""
    try:
        vec = datum.vec_from_weight(lam)
    except ValueError:
        raise ValueError(
            "highest weight must lie in one half of the root lattice")
    if any(c.denominator > 2 for c in vec):
        raise ValueError(
            "highest weight must lie in one half of the root lattice")


def _lam_eval(datum: RootDatum, lam: Weight, kvec: Sequence[int]) -> Scalar:
    return datum.q(datum.form(lam, datum.weight_from_vec(kvec)))


def _height_vecs(datum: RootDatum, height: int) -> List[Tuple[int, ...]]:
    """Non-negative simple-root vectors of the given height with a nonzero
    lower weight space, in lexicographic order."""
    ctx = get_algebra(datum)
    out = []

    def rec(prefix, rest, pos):
        if pos == datum.rank - 1:
            out.append(prefix + (rest,))
            return
        for a in range(rest + 1):
            rec(prefix + (a,), rest - a, pos + 1)

    rec((), height, 0)
    return [v for v in out if ctx.wsb("-", v).dim > 0]


def _word_elem(datum: RootDatum, word: Tuple[int, ...]) -> AlgebraElement:
    return AlgebraElement(datum, {Monomial(word, (0,) * datum.rank, ()): ONE})


def _eword_elem(datum: RootDatum, word: Tuple[int, ...]) -> AlgebraElement:
    return AlgebraElement(datum, {Monomial((), (0,) * datum.rank, word): ONE})


class _LowerBasisIndex:
    """Bookkeeping shared by the Verma and simple-quotient builders: an
    ordered basis indexed by (weight vector, position)."""

    def __init__(self):
        self.order: List[Tuple[Tuple[int, ...], int]] = []
        self.lookup: Dict[Tuple[Tuple[int, ...], int], int] = {}

    def add(self, vec: Tuple[int, ...], pos: int) -> int:
        idx = len(self.order)
        self.order.append((vec, pos))
        self.lookup[(vec, pos)] = idx
        return idx


def verma_module(datum: RootDatum, lam: Weight, depth: int = 8) -> WeightModule:
    """Verma module with highest weight lam, truncated below the depth."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    _require_half_lattice(datum, lam)
    ctx = get_algebra(datum)
    index = _LowerBasisIndex()
    vec_words: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for h in range(depth + 1):
        for vec in _height_vecs(datum, h):
            words = ctx.wsb("-", vec).words
            vec_words[vec] = words
            for pos in range(len(words)):
                index.add(vec, pos)

    n = len(index.order)
    weights = []
    parities = []
    for vec, pos in index.order:
        word = vec_words[vec][pos]
        weights.append(datum.canonical(lam - datum.weight_from_vec(vec)))
        parities.append(sum(datum.parity[i] for i in word) & 1)

    f_action = [_zero_matrix(n, n) for _ in range(datum.rank)]
    e_action = [_zero_matrix(n, n) for _ in range(datum.rank)]
    for col, (vec, pos) in enumerate(index.order):
        word = vec_words[vec][pos]
        for i in range(datum.rank):
            up = tuple(v + (1 if a == i else 0) for a, v in enumerate(vec))
            if up in vec_words:
                for w2, c in ctx.reduce_word("-", (i,) + word):
                    row = index.lookup[(up, vec_words[up].index(w2))]
                    f_action[i][row][col] = f_action[i][row][col] + c
            prod = gen_e(datum, i) * _word_elem(datum, word)
            for m, c in prod.terms.items():
                if m.eword:
                    continue
                val = c * _lam_eval(datum, lam, m.kexp)
                down = word_vec(m.fword, datum.rank)
                if down not in vec_words:
                    continue
                row = index.lookup[(down, vec_words[down].index(m.fword))]
                e_action[i][row][col] = e_action[i][row][col] + val
    return WeightModule(datum, "verma", weights, parities, e_action,
                        f_action, lam, depth, "truncated")


def _contravariant_gram(datum: RootDatum, lam: Weight,
                        words: List[Tuple[int, ...]]) -> Matrix:
    out = _zero_matrix(len(words), len(words))
    for a, wa in enumerate(words):
        ta = _eword_elem(datum, tuple(reversed(wa)))
        for b, wb in enumerate(words):
            prod = ta * _word_elem(datum, wb)
            total = ZERO
            for m, c in prod.terms.items():
                if not m.fword and not m.eword:
                    total = total + c * _lam_eval(datum, lam, m.kexp)
            out[a][b] = total
    return out


def simple_quotient(datum: RootDatum, lam: Weight, depth: int = 8) -> WeightModule:
    """Quotient of the Verma by the radical of the contravariant form.

    The radical is removed degree by degree; the module status reports
    whether the dimensions stabilized (two consecutive heights with no
    surviving vectors) below the depth cutoff.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    _require_half_lattice(datum, lam)
    ctx = get_algebra(datum)
    index = _LowerBasisIndex()
    vec_words: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    vec_pivots: Dict[Tuple[int, ...], List[int]] = {}
    vec_reduce: Dict[Tuple[int, ...], List[List[Scalar]]] = {}

    empty_run = 0
    status = "inconclusive"
    for h in range(depth + 1):
        total_here = 0
        for vec in _height_vecs(datum, h):
            words = ctx.wsb("-", vec).words
            gram = _contravariant_gram(datum, lam, words)
            pivots, reduction = echelon_columns(gram)
            if not pivots:
                continue
            vec_words[vec] = words
            vec_pivots[vec] = pivots
            vec_reduce[vec] = reduction
            for pos in pivots:
                index.add(vec, pos)
            total_here += len(pivots)
        if h == 0 and total_here == 0:
            break
        if h > 0:
            empty_run = empty_run + 1 if total_here == 0 else 0
            if empty_run >= 2:
                status = "finite"
                break

    n = len(index.order)
    weights = []
    parities = []
    for vec, pos in index.order:
        word = vec_words[vec][pos]
        weights.append(datum.canonical(lam - datum.weight_from_vec(vec)))
        parities.append(sum(datum.parity[i] for i in word) & 1)

    def reduce_to_basis(vec, word):
        """Coefficients of a lower word over the module basis at vec."""
        if vec not in vec_words:
            return []
        out = []
        for w2, c in ctx.reduce_word("-", word):
            col = vec_words[vec].index(w2)
            for t, coeff in enumerate(vec_reduce[vec][col]):
                if not coeff.is_zero():
                    pos = vec_pivots[vec][t]
                    out.append((index.lookup[(vec, pos)], c * coeff))
        return out

    f_action = [_zero_matrix(n, n) for _ in range(datum.rank)]
    e_action = [_zero_matrix(n, n) for _ in range(datum.rank)]
    for col, (vec, pos) in enumerate(index.order):
        word = vec_words[vec][pos]
        for i in range(datum.rank):
            up = tuple(v + (1 if a == i else 0) for a, v in enumerate(vec))
            for row, c in reduce_to_basis(up, (i,) + word):
                f_action[i][row][col] = f_action[i][row][col] + c
            prod = gen_e(datum, i) * _word_elem(datum, word)
            for m, c in prod.terms.items():
                if m.eword:
                    continue
                val = c * _lam_eval(datum, lam, m.kexp)
                down = word_vec(m.fword, datum.rank)
                for row, c2 in reduce_to_basis(down, m.fword):
                    e_action[i][row][col] = e_action[i][row][col] + val * c2
    return WeightModule(datum, "simple", weights, parities, e_action,
                        f_action, lam, depth, status)


def vector_module(datum: RootDatum, depth: int = 8) -> WeightModule:
    """The natural (vector) representation of the series types."""
    kind = datum.kind
    if kind == "A":
        m, n = datum.params
        if m == n:
            raise ValueError("the vector module is not defined for this datum")
        lam = datum.unit_weight("eps1")
    elif kind in ("B", "D"):
        lam = datum.unit_weight("delta1")
    elif kind == "C":
        lam = datum.unit_weight("eps")
    else:
        raise ValueError("the vector module is not defined for this datum")
    mod = simple_quotient(datum, datum.canonical(lam), depth)
    mod.name = "vector"
    return mod


# -- derived modules ---------------------------------------------------------


def dual_module(mod: WeightModule) -> WeightModule:
    """Dual module with (a f)(m) = (-1)^{|a||f|} f(S(a) m)."""
    datum = mod.datum
    n = mod.dim
    weights = [datum.canonical(-w) for w in mod.weights]
    parities = list(mod.parities)
    e_action = []
    f_action = []
    for i in range(datum.rank):
        se = mod.apply_element(antipode(gen_e(datum, i)))
        sf = mod.apply_element(antipode(gen_f(datum, i)))
        pe = datum.parity[i]
        em = _zero_matrix(n, n)
        fm = _zero_matrix(n, n)
        for j in range(n):
            sign = -1 if (pe and mod.parities[j]) else 1
            for k in range(n):
                if not se[j][k].is_zero():
                    em[k][j] = se[j][k] if sign > 0 else ZERO - se[j][k]
                if not sf[j][k].is_zero():
                    fm[k][j] = sf[j][k] if sign > 0 else ZERO - sf[j][k]
        e_action.append(em)
        f_action.append(fm)
    return WeightModule(datum, "dual(%s)" % mod.name, weights, parities,
                        e_action, f_action, None, mod.depth, mod.status)


def tensor_module(left: WeightModule, right: WeightModule) -> WeightModule:
    """Tensor product via the coproduct with the graded sign rule."""
    datum = left.datum
    nl, nr = left.dim, right.dim
    n = nl * nr
    weights = []
    parities = []
    for a in range(nl):
        for b in range(nr):
            weights.append(datum.canonical(left.weights[a] + right.weights[b]))
            parities.append((left.parities[a] + right.parities[b]) & 1)
    e_action = []
    f_action = []
    for i in range(datum.rank):
        pe = datum.parity[i]
        em = _zero_matrix(n, n)
        fm = _zero_matrix(n, n)
        kdiag_l = [datum.q(datum.form(w, datum.simple[i])) for w in left.weights]
        kdiag_r_inv = [datum.q(-datum.form(w, datum.simple[i])) for w in right.weights]
        for c in range(nl):
            sign = -1 if (pe and left.parities[c]) else 1
            for d in range(nr):
                col = c * nr + d
                # Delta(E_i) = K_i (x) E_i + E_i (x) 1
                for s in range(nr):
                    v = right.e_action[i][s][d]
                    if not v.is_zero():
                        v = kdiag_l[c] * v
                        em[c * nr + s][col] = em[c * nr + s][col] + (
                            v if sign > 0 else ZERO - v)
                for r in range(nl):
                    v = left.e_action[i][r][c]
                    if not v.is_zero():
                        em[r * nr + d][col] = em[r * nr + d][col] + v
                # Delta(F_i) = 1 (x) F_i + F_i (x) K_i^{-1}
                for s in range(nr):
                    v = right.f_action[i][s][d]
                    if not v.is_zero():
                        fm[c * nr + s][col] = fm[c * nr + s][col] + (
                            v if sign > 0 else ZERO - v)
                for r in range(nl):
                    v = left.f_action[i][r][c]
                    if not v.is_zero():
                        fm[r * nr + d][col] = fm[r * nr + d][col] + v * kdiag_r_inv[d]
        e_action.append(em)
        f_action.append(fm)
    status = "finite" if left.status == right.status == "finite" else "truncated"
    return WeightModule(datum, "tensor(%s,%s)" % (left.name, right.name),
                        weights, parities, e_action, f_action, None,
                        min(left.depth, right.depth), status)


def parity_shift_module(mod: WeightModule) -> WeightModule:
    return WeightModule(mod.datum, "shift(%s)" % mod.name, list(mod.weights),
                        [1 - p for p in mod.parities],
                        [[row[:] for row in m] for m in mod.e_action],
                        [[row[:] for row in m] for m in mod.f_action],
                        mod.highest_weight, mod.depth, mod.status)


def derived_modules(left: WeightModule, right: Optional[WeightModule],
                    which: str) -> WeightModule:
    if which == "dual":
        return dual_module(left)
    if which == "tensor":
        if right is None:
            raise ValueError("tensor requires two modules")
        return tensor_module(left, right)
    if which == "parity_shift":
        return parity_shift_module(left)
    raise ValueError("which must be dual, tensor or parity_shift")


# -- characters ---------------------------------------------------------------


class CharacterElement:
    """A finite integer combination of formal exponentials e^mu."""

    __slots__ = ("datum", "coeffs")

    def __init__(self, datum: RootDatum, coeffs: Dict[Weight, int]):
        self.datum = datum
        self.coeffs = {w: c for w, c in coeffs.items() if c}

    @staticmethod
    def exponential(datum: RootDatum, w: Weight, c: int = 1) -> "CharacterElement":
        return CharacterElement(datum, {datum.canonical(w): c})

    def __add__(self, other: "CharacterElement") -> "CharacterElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return CharacterElement(self.datum, out)

    def __sub__(self, other: "CharacterElement") -> "CharacterElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) - c
        return CharacterElement(self.datum, out)

    def __neg__(self) -> "CharacterElement":
        return CharacterElement(self.datum, {w: -c for w, c in self.coeffs.items()})

    def __mul__(self, other: "CharacterElement") -> "CharacterElement":
        out: Dict[Weight, int] = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                key = self.datum.canonical(w1 + w2)
                out[key] = out.get(key, 0) + c1 * c2
        return CharacterElement(self.datum, out)

    def coefficient(self, w: Weight) -> int:
        return self.coeffs.get(self.datum.canonical(w), 0)

    def total(self) -> int:
        return sum(self.coeffs.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        bits = ["%+d e^(%s)" % (c, self.datum.render_weight(w))
                for w, c in self.coeffs.items()]
        return " ".join(bits) if bits else "0"

    def to_payload(self) -> List[dict]:
        items = []
        for w, c in self.coeffs.items():
            vec = [str(x) for x in self.datum.vec_from_weight(w)]
            items.append({"weight": vec, "coeff": c})
        items.sort(key=lambda d: d["weight"])
        return items


def characters(mod: WeightModule) -> Tuple[CharacterElement, CharacterElement]:
    """(character, supercharacter) of a module from its weight data."""
    ch: Dict[Weight, int] = {}
    sch: Dict[Weight, int] = {}
    for w, p in zip(mod.weights, mod.parities):
        ch[w] = ch.get(w, 0) + 1
        sch[w] = sch.get(w, 0) + (-1 if p else 1)
    return CharacterElement(mod.datum, ch), CharacterElement(mod.datum, sch)


def kernel_expansion(datum: RootDatum, height: int,
                     signed: bool = False) -> Dict[Tuple[int, ...], int]:
    """Coefficients of prod (1 +/- e^{-beta}) / prod (1 - e^{-alpha}) over
    the positive root cone, truncated above the height."""
    out: Dict[Tuple[int, ...], int] = {(0,) * datum.rank: 1}

    def mul_factor(series: Dict[Tuple[int, ...], int]):
        nonlocal out
        new: Dict[Tuple[int, ...], int] = {}
        for v1, c1 in out.items():
            h1 = sum(v1)
            for v2, c2 in series.items():
                if h1 + sum(v2) > height:
                    continue
                key = tuple(a + b for a, b in zip(v1, v2))
                new[key] = new.get(key, 0) + c1 * c2
        out = {k: v for k, v in new.items() if v}

    for alpha in datum.pos_even_vec:
        ha = sum(alpha)
        series = {}
        k = 0
        while k * ha <= height:
            series[tuple(k * a for a in alpha)] = 1
            k += 1
        mul_factor(series)
    for beta in datum.pos_odd_vec:
        if sum(beta) > height:
            continue
        mul_factor({(0,) * datum.rank: 1, tuple(beta): -1 if signed else 1})
    return out


def kac_verma_character(datum: RootDatum, lam: Weight,
                        height: int) -> CharacterElement:
    """Verma character from the product formula, truncated at the height."""
    _require_half_lattice(datum, lam)
    coeffs: Dict[Weight, int] = {}
    for vec, c in kernel_expansion(datum, height).items():
        w = datum.canonical(lam - datum.weight_from_vec(vec))
        coeffs[w] = coeffs.get(w, 0) + c
    return CharacterElement(datum, coeffs)


def kac_typical_character(datum: RootDatum, lam: Weight,
                          height: int) -> CharacterElement:
    """Typical simple character: the Verma kernel convolved with the
    alternating Weyl orbit sum of e^{w(lam+rho)-rho}."""
    _require_half_lattice(datum, lam)
    if not datum.typical(lam):
        raise ValueError("the typical character formula requires a typical weight")
    if not datum.dominant_even(lam):
        raise ValueError("the typical character formula requires an even-dominant weight")
    kernel = kernel_expansion(datum, height)
    lam_rho = lam + datum.rho
    coeffs: Dict[Weight, int] = {}
    for mat, det in datum.weyl_elements():
        mu = datum.apply_matrix(mat, lam_rho) - datum.rho
        try:
            shift = datum.vec_from_weight(lam - mu)
        except ValueError:
            continue
        hshift = sum(shift)
        if hshift > height or any(x < 0 for x in shift):
            continue
        for vec, c in kernel.items():
            if sum(vec) + hshift > height:
                continue
            w = datum.canonical(mu - datum.weight_from_vec(vec))
            coeffs[w] = coeffs.get(w, 0) + det * c
    return CharacterElement(datum, coeffs)


def kac_characters(datum: RootDatum, lam: Weight,
                   height: int) -> Tuple[CharacterElement, CharacterElement]:
    return (kac_verma_character(datum, lam, height),
            kac_typical_character(datum, lam, height))
