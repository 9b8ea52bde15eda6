"""The Drinfeld-double skew pairing on the free half-algebras.

Everything here works on free words over the simple-root alphabet: a word
(i1, ..., ik) stands for F_{i1}...F_{ik} on the lower side and for
E_{i1}...E_{ik} on the upper side, with indices 0-based.  Linear
combinations are dicts mapping words to Scalars.  The pairing is defined
recursively through the r-derivations and is well defined before any
quotient is taken; weight spaces of the half-algebras are then cut out as
free words modulo the radical of the Gram matrix of the pairing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import cache
from .rootdata import RootDatum
from .scalars import ONE, ZERO, Scalar, scalar_from_json, scalar_to_json

Word = Tuple[int, ...]
FreeElement = Dict[Word, Scalar]


def word_vec(word: Word, rank: int) -> Tuple[int, ...]:
    counts = [0] * rank
    for i in word:
        counts[i] += 1
    return tuple(counts)


def weight_words(vec: Sequence[int]) -> List[Word]:
    """All words with the given letter multiplicities, in lexicographic order."""
    counts = list(vec)
    out: List[Word] = []
    word: List[int] = []

    def rec():
        if not any(counts):
            out.append(tuple(word))
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                word.append(i)
                rec()
                word.pop()
                counts[i] += 1

    rec()
    return out


def free_add(a: FreeElement, b: FreeElement, coeff: Scalar = ONE) -> FreeElement:
    out = dict(a)
    for w, c in b.items():
        s = out.get(w, ZERO) + coeff * c
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s
    return out


def free_scale(a: FreeElement, coeff: Scalar) -> FreeElement:
    if coeff.is_zero():
        return {}
    return {w: coeff * c for w, c in a.items()}


class PairContext:
    """Per-datum pairing state: r-derivation and pairing memo tables and
    the Gram blocks of each weight."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.gen_pair = tuple(
            ZERO - (qi - qi.inverse()).inverse() for qi in datum.qi
        )  # (F_i, E_i) = -1/(q_i - q_i^{-1})
        self.two_rho = tuple(2 * x for x in datum.rho_vec)
        self._r: Dict[Tuple[int, Word], FreeElement] = {}
        self._rp: Dict[Tuple[int, Word], FreeElement] = {}
        self._re: Dict[Tuple[int, Word], FreeElement] = {}
        self._rpe: Dict[Tuple[int, Word], FreeElement] = {}
        self._pairs: Dict[Tuple[Word, Word], Scalar] = {}
        self._blocks: Dict[Tuple[int, ...], "GramBlock"] = {}
        self.cache_warnings: List[str] = []

    def parity(self, word: Word) -> int:
        odd = self.datum.s - 1
        return sum(1 for i in word if i == odd) & 1

    def r_der(self, i: int, word: Word) -> FreeElement:
        """r_i on a lower-side free word."""
        key = (i, word)
        hit = self._r.get(key)
        if hit is not None:
            return hit
        if not word:
            out: FreeElement = {}
        else:
            j, rest = word[0], word[1:]
            dat = self.datum
            out = {}
            tail = self.r_der(i, rest)
            if tail:
                q = dat.q(dat.gram[j][i])
                for w, c in tail.items():
                    out = free_add(out, {(j,) + w: q * c})
            if j == i:
                sign = -1 if (dat.parity[i] and self.parity(rest)) else 1
                out = free_add(out, {rest: Scalar.from_int(sign)})
        self._r[key] = out
        return out

    def rp_der(self, i: int, word: Word) -> FreeElement:
        """r'_i on a lower-side free word."""
        key = (i, word)
        hit = self._rp.get(key)
        if hit is not None:
            return hit
        if not word:
            out: FreeElement = {}
        else:
            j, rest = word[0], word[1:]
            dat = self.datum
            out = {}
            tail = self.rp_der(i, rest)
            if tail:
                sign = ONE if not (dat.parity[j] and dat.parity[i]) else -ONE
                for w, c in tail.items():
                    out = free_add(out, {(j,) + w: sign * c})
            if j == i:
                mu = word_vec(rest, dat.rank)
                q = dat.q(sum(
                    (Fraction(m) * dat.gram[k][i] for k, m in enumerate(mu) if m),
                    Fraction(0)))
                out = free_add(out, {rest: q})
        self._rp[key] = out
        return out

    def r_der_e(self, i: int, word: Word) -> FreeElement:
        """r_i on an upper-side free word."""
        key = (i, word)
        hit = self._re.get(key)
        if hit is not None:
            return hit
        if not word:
            out: FreeElement = {}
        else:
            j, rest = word[0], word[1:]
            dat = self.datum
            out = {}
            tail = self.r_der_e(i, rest)
            if tail:
                for w, c in tail.items():
                    out = free_add(out, {(j,) + w: c})
            if j == i:
                mu = word_vec(rest, dat.rank)
                q = dat.q(sum(
                    (Fraction(m) * dat.gram[k][i] for k, m in enumerate(mu) if m),
                    Fraction(0)))
                sign = -1 if (dat.parity[i] and self.parity(rest)) else 1
                out = free_add(out, {rest: q if sign > 0 else ZERO - q})
        self._re[key] = out
        return out

    def rp_der_e(self, i: int, word: Word) -> FreeElement:
        """r'_i on an upper-side free word."""
        key = (i, word)
        hit = self._rpe.get(key)
        if hit is not None:
            return hit
        if not word:
            out: FreeElement = {}
        else:
            j, rest = word[0], word[1:]
            dat = self.datum
            out = {}
            tail = self.rp_der_e(i, rest)
            if tail:
                q = dat.q(dat.gram[j][i])
                if dat.parity[j] and dat.parity[i]:
                    q = ZERO - q
                for w, c in tail.items():
                    out = free_add(out, {(j,) + w: q * c})
            if j == i:
                out = free_add(out, {rest: ONE})
        self._rpe[key] = out
        return out

    def pair_word(self, y: Word, x: Word) -> Scalar:
        """(F-word, E-word) by peeling letters of x from the left."""
        key = (y, x)
        hit = self._pairs.get(key)
        if hit is not None:
            return hit
        if not x:
            out = ONE if not y else ZERO
        else:
            i, rest = x[0], x[1:]
            total = ZERO
            for w, c in self.r_der(i, y).items():
                total = total + c * self.pair_word(w, rest)
            out = self.gen_pair[i] * total
        self._pairs[key] = out
        return out

    def pair(self, y, x) -> Scalar:
        """Bilinear extension; words of unequal weight pair to zero."""
        if isinstance(y, tuple):
            y = {y: ONE}
        if isinstance(x, tuple):
            x = {x: ONE}
        total = ZERO
        for yw, yc in y.items():
            for xw, xc in x.items():
                p = self.pair_word(yw, xw)
                if not p.is_zero():
                    total = total + yc * xc * p
        return total

    def gram_block(self, vec: Sequence[int]) -> "GramBlock":
        vec = tuple(int(c) for c in vec)
        block = self._blocks.get(vec)
        if block is None:
            key = ["gram", self.datum.descriptor, list(vec)]
            payload = None
            try:
                payload = cache.load(key)
            except cache.CacheCorruption as exc:
                self.cache_warnings.append(str(exc))
            if payload is not None:
                block = GramBlock.from_payload(vec, payload)
            else:
                block = GramBlock(self, vec)
                cache.store(key, block.to_payload())
            self._blocks[vec] = block
        return block

    def dual_bases(self, vec: Sequence[int]) -> Tuple[List[FreeElement], List[FreeElement]]:
        """Bases (v_i) of U^-_mu and (u_j) of U^+_mu with (v_i, u_j) = delta_ij."""
        block = self.gram_block(vec)
        lower = []
        for i in range(block.rank):
            el: FreeElement = {}
            for a, r in enumerate(block.pivot_rows):
                c = block.inv[i][a]
                if not c.is_zero():
                    el[block.words[r]] = c
            lower.append(el)
        upper = [{block.words[c]: ONE} for c in block.pivot_cols]
        return lower, upper


class GramBlock:
    """Pairing matrix of one weight space of the half-algebras, with the
    pivot data needed for dual bases and word reduction."""

    def __init__(self, ctx: PairContext = None, vec: Tuple[int, ...] = None):
        if ctx is None:
            return  # populated by from_payload
        self.weight = vec
        self.words = weight_words(vec)
        n = len(self.words)
        self.matrix = [
            [ctx.pair_word(self.words[a], self.words[b]) for b in range(n)]
            for a in range(n)
        ]
        self._decompose()

    def _decompose(self):
        n = len(self.words)
        work = [row[:] for row in self.matrix]
        pivot_rows: List[int] = []
        pivot_cols: List[int] = []
        used_rows = set()
        for col in range(n):
            pivot = next(
                (r for r in range(n) if r not in used_rows and not work[r][col].is_zero()),
                None)
            if pivot is None:
                continue
            used_rows.add(pivot)
            pivot_rows.append(pivot)
            pivot_cols.append(col)
            pv = work[pivot][col]
            for r in range(n):
                if r != pivot and not work[r][col].is_zero():
                    f = work[r][col] / pv
                    work[r] = [a - f * b for a, b in zip(work[r], work[pivot])]
        self.pivot_rows = pivot_rows
        self.pivot_cols = pivot_cols
        self.rank = len(pivot_rows)
        sub = [[self.matrix[r][c] for c in pivot_cols] for r in pivot_rows]
        self.inv = _invert(sub)
        # Every word reduces to a combination of pivot words modulo the
        # radical; columns against pivot rows and rows against pivot cols.
        self.reduce_plus = []
        for b in range(n):
            g = [self.matrix[r][b] for r in pivot_rows]
            self.reduce_plus.append(_matvec(self.inv, g))
        self.reduce_minus = []
        for a in range(n):
            g = [self.matrix[a][c] for c in pivot_cols]
            self.reduce_minus.append(
                [sum((self.inv[j][i] * g[j] for j in range(self.rank)), ZERO)
                 for i in range(self.rank)])

    def to_payload(self) -> dict:
        return {
            "words": [list(w) for w in self.words],
            "matrix": [[scalar_to_json(x) for x in row] for row in self.matrix],
            "rank": self.rank,
            "pivot_rows": self.pivot_rows,
            "pivot_cols": self.pivot_cols,
            "inv": [[scalar_to_json(x) for x in row] for row in self.inv],
            "reduce_plus": [[scalar_to_json(x) for x in row] for row in self.reduce_plus],
            "reduce_minus": [[scalar_to_json(x) for x in row] for row in self.reduce_minus],
        }

    @classmethod
    def from_payload(cls, vec: Tuple[int, ...], payload: dict) -> "GramBlock":
        self = cls()
        self.weight = vec
        self.words = [tuple(w) for w in payload["words"]]
        self.matrix = [[scalar_from_json(x) for x in row] for row in payload["matrix"]]
        self.rank = payload["rank"]
        self.pivot_rows = list(payload["pivot_rows"])
        self.pivot_cols = list(payload["pivot_cols"])
        self.inv = [[scalar_from_json(x) for x in row] for row in payload["inv"]]
        self.reduce_plus = [[scalar_from_json(x) for x in row]
                            for row in payload["reduce_plus"]]
        self.reduce_minus = [[scalar_from_json(x) for x in row]
                             for row in payload["reduce_minus"]]
        return self


def _invert(matrix: List[List[Scalar]]) -> List[List[Scalar]]:
    n = len(matrix)
    work = [row[:] + [ONE if i == j else ZERO for j in range(n)]
            for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if not work[r][col].is_zero())
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def _matvec(mat: List[List[Scalar]], vec: List[Scalar]) -> List[Scalar]:
    return [sum((row[j] * vec[j] for j in range(len(vec))), ZERO) for row in mat]


_contexts: Dict[str, PairContext] = {}


def get_context(datum: RootDatum) -> PairContext:
    ctx = _contexts.get(datum.descriptor)
    if ctx is None:
        ctx = PairContext(datum)
        _contexts[datum.descriptor] = ctx
    return ctx


def skew_pair(ctx: PairContext, y, x) -> Scalar:
    """The skew pairing of a lower-side element against an upper-side
    element, both given as free words or word dicts."""
    return ctx.pair(y, x)


def rosso_form(ctx: PairContext, a, b) -> Scalar:
    """Rosso form of two normal-ordered elements.

    Each term y K_eta x with y of weight -nu is read as (y K_nu) K_lambda x
    with lambda = eta - nu; a block pairs the second argument's lower part
    against the first argument's upper part and vice versa."""
    dat = ctx.datum
    total = ZERO
    for m1, c1 in a.terms.items():
        nu1 = word_vec(m1.fword, dat.rank)
        mu1 = word_vec(m1.eword, dat.rank)
        lam1 = tuple(Fraction(k) - n for k, n in zip(m1.kexp, nu1))
        for m2, c2 in b.terms.items():
            nu2 = word_vec(m2.fword, dat.rank)
            mu2 = word_vec(m2.eword, dat.rank)
            if mu1 != nu2 or mu2 != nu1:
                continue
            lam2 = tuple(Fraction(k) - n for k, n in zip(m2.kexp, nu2))
            p1 = ctx.pair_word(m2.fword, m1.eword)
            if p1.is_zero():
                continue
            p2 = ctx.pair_word(m1.fword, m2.eword)
            if p2.is_zero():
                continue
            sign = -ONE if ctx.parity(m1.fword) else ONE
            weight_factor = dat.q(
                ctx_form(dat, ctx.two_rho, nu1) - ctx_form(dat, lam1, lam2) / 2)
            total = total + c1 * c2 * sign * p1 * p2 * weight_factor
    return total


def ctx_form(dat: RootDatum, u, w) -> Fraction:
    return dat.form_vec([Fraction(x) for x in u], [Fraction(x) for x in w])
