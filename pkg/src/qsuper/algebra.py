"""Normal-form arithmetic for the quantized enveloping superalgebra.

Elements are stored in the triangular normal order F * K * E.  A monomial
keeps a word of F-generator indices, an integer K-exponent vector over the
simple roots, and a word of E-generator indices.  Products are straightened
with the defining relations and both words are rewritten against the echelon
basis of their weight space, so equal elements always have equal term maps.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import cache
from .pairing import PairContext, Word, get_context, weight_words, word_vec
from .rootdata import RootDatum
from .scalars import ONE, ZERO, Scalar, scalar_from_json, scalar_to_json

KVec = Tuple[int, ...]


class Monomial(NamedTuple):
    fword: Word
    kexp: KVec
    eword: Word


def _zero_vec(rank: int) -> KVec:
    return (0,) * rank


def _vec_add(a: Sequence[int], b: Sequence[int]) -> KVec:
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub(a: Sequence[int], b: Sequence[int]) -> KVec:
    return tuple(x - y for x, y in zip(a, b))


def _vec_neg(a: Sequence[int]) -> KVec:
    return tuple(-x for x in a)


def canon_kexp(datum: RootDatum, vec: Sequence[int]) -> KVec:
    """Canonical K-exponent vector; quotients by the torsion relation when
    the datum has one (series with a degenerate Cartan matrix)."""
    vec = tuple(int(x) for x in vec)
    tor = getattr(datum, "torsion", None)
    if tor is not None and vec[-1] != 0:
        m = vec[-1]
        vec = tuple(x - m * t for x, t in zip(vec, tor))
    return vec


def mono_parity(datum: RootDatum, m: Monomial) -> int:
    odd = datum.s - 1
    n = sum(1 for i in m.fword if i == odd) + sum(1 for i in m.eword if i == odd)
    return n & 1


def mono_qdegree(datum: RootDatum, m: Monomial) -> KVec:
    """Degree in the root lattice grading: wt(eword) - wt(fword)."""
    return _vec_sub(word_vec(m.eword, datum.rank), word_vec(m.fword, datum.rank))


class WeightSpaceBasis:
    """Echelon basis of one weight space of a half-algebra.

    ``all_words`` lists every free word of the weight, ``words`` the subset
    chosen as basis (pivot words), and ``reduction[a]`` the coefficients
    writing ``all_words[a]`` over ``words`` modulo the radical of the
    pairing form.
    """

    def __init__(self, sign: str, weight: KVec, all_words: List[Word],
                 words: List[Word], reduction: List[List[Scalar]]):
        self.sign = sign
        self.weight = weight
        self.all_words = all_words
        self.words = words
        self.reduction = reduction
        self.dim = len(words)
        self.index = {w: a for a, w in enumerate(all_words)}

    def reduce(self, word: Word) -> List[Tuple[Word, Scalar]]:
        row = self.reduction[self.index[word]]
        return [(self.words[i], c) for i, c in enumerate(row) if not c.is_zero()]

    def to_payload(self) -> dict:
        return {
            "all_words": [list(w) for w in self.all_words],
            "words": [list(w) for w in self.words],
            "reduction": [[scalar_to_json(c) for c in row] for row in self.reduction],
            "dim": self.dim,
        }

    @staticmethod
    def from_payload(sign: str, weight: KVec, payload: dict) -> "WeightSpaceBasis":
        return WeightSpaceBasis(
            sign, weight,
            [tuple(w) for w in payload["all_words"]],
            [tuple(w) for w in payload["words"]],
            [[scalar_from_json(c) for c in row] for row in payload["reduction"]],
        )


class AlgebraContext:
    """Per-datum normalization state: straightening memo tables and the
    weight-space bases used to rewrite words."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.pctx: PairContext = get_context(datum)
        self._emul: Dict[Tuple[int, Word], Dict] = {}
        self._cross: Dict[Tuple[Word, Word], Dict] = {}
        self._mprod: Dict[Tuple[Monomial, Monomial], Dict[Monomial, Scalar]] = {}
        self._wsb: Dict[Tuple[str, KVec], WeightSpaceBasis] = {}

    # -- weight spaces -------------------------------------------------

    def wsb(self, sign: str, vec: Sequence[int]) -> WeightSpaceBasis:
        vec = tuple(int(x) for x in vec)
        hit = self._wsb.get((sign, vec))
        if hit is not None:
            return hit
        key = ["wsb", self.datum.descriptor, sign, list(vec)]
        payload = None
        try:
            payload = cache.load(key)
        except cache.CacheCorruption as exc:
            self.pctx.cache_warnings.append(str(exc))
        if payload is not None:
            basis = WeightSpaceBasis.from_payload(sign, vec, payload)
        else:
            block = self.pctx.gram_block(vec)
            if sign == "+":
                pivots = block.pivot_cols
                reduction = [row[:] for row in block.reduce_plus]
            else:
                pivots = block.pivot_rows
                reduction = [row[:] for row in block.reduce_minus]
            basis = WeightSpaceBasis(
                sign, vec, list(block.words),
                [block.words[p] for p in pivots], reduction)
            cache.store(key, basis.to_payload())
        self._wsb[(sign, vec)] = basis
        return basis

    def reduce_word(self, sign: str, word: Word) -> List[Tuple[Word, Scalar]]:
        if not word:
            return [((), ONE)]
        basis = self.wsb(sign, word_vec(word, self.datum.rank))
        return basis.reduce(word)

    # -- straightening -------------------------------------------------

    def emul(self, i: int, fword: Word) -> Dict[Tuple[Word, KVec, Word], Scalar]:
        """E_i times an F-word, as raw (fword, kexp, eword) triples."""
        key = (i, fword)
        hit = self._emul.get(key)
        if hit is not None:
            return hit
        dat = self.datum
        zero = _zero_vec(dat.rank)
        if not fword:
            out = {((), zero, (i,)): ONE}
        else:
            j, rest = fword[0], fword[1:]
            out = {}
            sign = -1 if (dat.parity[i] and dat.parity[j]) else 1
            for (f, k, e), c in self.emul(i, rest).items():
                cc = c if sign > 0 else ZERO - c
                _acc(out, ((j,) + f, k, e), cc)
            if j == i:
                qi = dat.qi[i]
                inv = (qi - qi.inverse()).inverse()
                mu = word_vec(rest, dat.rank)
                up = tuple(1 if a == i else 0 for a in range(dat.rank))
                pair = dat.form_vec(up, mu)
                _acc(out, (rest, up, ()), inv * dat.q(-pair))
                _acc(out, (rest, _vec_neg(up), ()), ZERO - inv * dat.q(pair))
        out = {t: c for t, c in out.items() if not c.is_zero()}
        self._emul[key] = out
        return out

    def cross(self, eword: Word, fword: Word) -> Dict[Tuple[Word, KVec, Word], Scalar]:
        """Straighten an E-word times an F-word into raw triples."""
        if not eword or not fword:
            return {(fword, _zero_vec(self.datum.rank), eword): ONE}
        key = (eword, fword)
        hit = self._cross.get(key)
        if hit is not None:
            return hit
        dat = self.datum
        out: Dict[Tuple[Word, KVec, Word], Scalar] = {}
        i = eword[-1]
        for (f1, k1, e1), c1 in self.emul(i, fword).items():
            for (f2, k2, e2), c2 in self.cross(eword[:-1], f1).items():
                coeff = c1 * c2
                if any(k1):
                    shift = dat.form_vec(k1, word_vec(e2, dat.rank))
                    if shift:
                        coeff = coeff * dat.q(-shift)
                _acc(out, (f2, _vec_add(k2, k1), e2 + e1), coeff)
        out = {t: c for t, c in out.items() if not c.is_zero()}
        self._cross[key] = out
        return out

    def normalize(self, raw: Dict[Tuple[Word, KVec, Word], Scalar]) -> Dict[Monomial, Scalar]:
        """Rewrite raw triples against the weight-space bases."""
        terms: Dict[Monomial, Scalar] = {}
        for (f, k, e), c in raw.items():
            if c.is_zero():
                continue
            k = canon_kexp(self.datum, k)
            for fp, cf in self.reduce_word("-", f):
                for ep, ce in self.reduce_word("+", e):
                    m = Monomial(fp, k, ep)
                    cur = terms.get(m)
                    val = (cur + c * cf * ce) if cur is not None else c * cf * ce
                    if val.is_zero():
                        terms.pop(m, None)
                    else:
                        terms[m] = val
        return terms

    def mono_mul(self, m1: Monomial, m2: Monomial) -> Dict[Monomial, Scalar]:
        """Normal form of the product of two monomials."""
        key = (m1, m2)
        hit = self._mprod.get(key)
        if hit is not None:
            return hit
        dat = self.datum
        raw: Dict[Tuple[Word, KVec, Word], Scalar] = {}
        for (f, kv, e), c in self.cross(m1.eword, m2.fword).items():
            coeff = c
            if any(m1.kexp):
                shift = dat.form_vec(m1.kexp, word_vec(f, dat.rank))
                if shift:
                    coeff = coeff * dat.q(-shift)
            if any(m2.kexp):
                shift = dat.form_vec(m2.kexp, word_vec(e, dat.rank))
                if shift:
                    coeff = coeff * dat.q(-shift)
            k_total = _vec_add(_vec_add(m1.kexp, kv), m2.kexp)
            _acc(raw, (m1.fword + f, k_total, e + m2.eword), coeff)
        out = self.normalize(raw)
        self._mprod[key] = out
        return out


_contexts: Dict[str, AlgebraContext] = {}


def get_algebra(datum: RootDatum) -> AlgebraContext:
    ctx = _contexts.get(datum.descriptor)
    if ctx is None:
        ctx = AlgebraContext(datum)
        _contexts[datum.descriptor] = ctx
    return ctx


def _acc(store: dict, key, coeff: Scalar) -> None:
    cur = store.get(key)
    if cur is None:
        if not coeff.is_zero():
            store[key] = coeff
    else:
        val = cur + coeff
        if val.is_zero():
            del store[key]
        else:
            store[key] = val


def _coerce_scalar(x) -> Optional[Scalar]:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    return None


class AlgebraElement:
    """A finite linear combination of normal-ordered monomials.

    Instances are immutable; every operation returns a new element whose
    term map holds no zero coefficients, so equality is term-map equality.
    """

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum, terms: Dict[Monomial, Scalar]):
        self.datum = datum
        self.terms = dict(terms)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(datum: RootDatum) -> "AlgebraElement":
        return AlgebraElement(datum, {})

    @staticmethod
    def unit(datum: RootDatum) -> "AlgebraElement":
        m = Monomial((), _zero_vec(datum.rank), ())
        return AlgebraElement(datum, {m: ONE})

    def is_zero(self) -> bool:
        return not self.terms

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _acc_mono(terms, m, c)
        return AlgebraElement(self.datum, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _acc_mono(terms, m, ZERO - c)
        return AlgebraElement(self.datum, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.datum, {m: ZERO - c for m, c in self.terms.items()})

    def __mul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        ctx = get_algebra(self.datum)
        terms: Dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, cm in ctx.mono_mul(m1, m2).items():
                    _acc_mono(terms, m, c * cm)
        return AlgebraElement(self.datum, terms)

    def __rmul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        return NotImplemented

    def __pow__(self, n: int) -> "AlgebraElement":
        if not isinstance(n, int) or n < 0:
            raise ValueError("element powers must be non-negative integers")
        out = AlgebraElement.unit(self.datum)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, s: Scalar) -> "AlgebraElement":
        if s.is_zero():
            return AlgebraElement.zero(self.datum)
        return AlgebraElement(self.datum, {m: s * c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.datum.descriptor == other.datum.descriptor and self.terms == other.terms

    def __hash__(self):
        return hash((self.datum.descriptor, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "<0>"
        bits = []
        for m, c in sorted(self.terms.items()):
            bits.append("%s*[F%s K%s E%s]" % (c, list(m.fword), list(m.kexp), list(m.eword)))
        return "<" + " + ".join(bits) + ">"

    # -- structure queries -------------------------------------------------

    def parity(self) -> Optional[int]:
        """Common parity of all monomials, or None if mixed or zero."""
        seen = {mono_parity(self.datum, m) for m in self.terms}
        if len(seen) == 1:
            return seen.pop()
        return None

    def qdegree(self) -> Optional[KVec]:
        """Common root-lattice degree of all monomials, or None if mixed."""
        seen = {mono_qdegree(self.datum, m) for m in self.terms}
        if len(seen) == 1:
            return seen.pop()
        return None

    def is_cartan(self) -> bool:
        """True when every monomial is a pure K-monomial."""
        return all(not m.fword and not m.eword for m in self.terms)

    def parity_split(self) -> Tuple["AlgebraElement", "AlgebraElement"]:
        even: Dict[Monomial, Scalar] = {}
        odd: Dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            (odd if mono_parity(self.datum, m) else even)[m] = c
        return AlgebraElement(self.datum, even), AlgebraElement(self.datum, odd)


def _acc_mono(terms: Dict[Monomial, Scalar], m: Monomial, c: Scalar) -> None:
    cur = terms.get(m)
    if cur is None:
        if not c.is_zero():
            terms[m] = c
    else:
        val = cur + c
        if val.is_zero():
            del terms[m]
        else:
            terms[m] = val


# -- generator elements ------------------------------------------------------


def gen_e(datum: RootDatum, i: int) -> AlgebraElement:
    m = Monomial((), _zero_vec(datum.rank), (i,))
    return AlgebraElement(datum, {m: ONE})


def gen_f(datum: RootDatum, i: int) -> AlgebraElement:
    m = Monomial((i,), _zero_vec(datum.rank), ())
    return AlgebraElement(datum, {m: ONE})


def gen_k(datum: RootDatum, vec: Sequence[int]) -> AlgebraElement:
    m = Monomial((), canon_kexp(datum, vec), ())
    return AlgebraElement(datum, {m: ONE})


def scalar_element(datum: RootDatum, s) -> AlgebraElement:
    c = _coerce_scalar(s)
    if c is None:
        raise TypeError("expected a scalar, int or Fraction")
    return AlgebraElement.unit(datum).scale(c)


def k_two_rho(datum: RootDatum, negate: bool = False) -> AlgebraElement:
    vec = []
    for x in datum.rho_vec:
        t = 2 * x
        if t.denominator != 1:
            raise ValueError("2*rho is not in the root lattice for this datum")
        vec.append(-int(t) if negate else int(t))
    return gen_k(datum, vec)


def normalize_product(datum: RootDatum, factors: Iterable[AlgebraElement]) -> AlgebraElement:
    """Normal form of a left-to-right product of elements."""
    out = AlgebraElement.unit(datum)
    for f in factors:
        out = out * f
    return out


# -- tensor square -----------------------------------------------------------


class TensorElement:
    """A linear combination of monomial tensors a (x) b with the graded
    product rule (a1 (x) b1)(a2 (x) b2) = (-1)^{|a2||b1|} a1 a2 (x) b1 b2."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum, terms: Dict[Tuple[Monomial, Monomial], Scalar]):
        self.datum = datum
        self.terms = dict(terms)

    @staticmethod
    def zero(datum: RootDatum) -> "TensorElement":
        return TensorElement(datum, {})

    @staticmethod
    def unit(datum: RootDatum) -> "TensorElement":
        m = Monomial((), _zero_vec(datum.rank), ())
        return TensorElement(datum, {(m, m): ONE})

    @staticmethod
    def of(a: AlgebraElement, b: AlgebraElement) -> "TensorElement":
        terms: Dict[Tuple[Monomial, Monomial], Scalar] = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                _acc(terms, (m1, m2), c1 * c2)
        return TensorElement(a.datum, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        terms = dict(self.terms)
        for t, c in other.terms.items():
            _acc(terms, t, c)
        return TensorElement(self.datum, terms)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        terms = dict(self.terms)
        for t, c in other.terms.items():
            _acc(terms, t, ZERO - c)
        return TensorElement(self.datum, terms)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.datum, {t: ZERO - c for t, c in self.terms.items()})

    def scale(self, s: Scalar) -> "TensorElement":
        if s.is_zero():
            return TensorElement.zero(self.datum)
        return TensorElement(self.datum, {t: s * c for t, c in self.terms.items()})

    def __mul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, TensorElement):
            return NotImplemented
        ctx = get_algebra(self.datum)
        dat = self.datum
        terms: Dict[Tuple[Monomial, Monomial], Scalar] = {}
        for (a1, b1), c1 in self.terms.items():
            pb1 = mono_parity(dat, b1)
            for (a2, b2), c2 in other.terms.items():
                c = c1 * c2
                if pb1 and mono_parity(dat, a2):
                    c = ZERO - c
                left = ctx.mono_mul(a1, a2)
                right = ctx.mono_mul(b1, b2)
                for ma, ca in left.items():
                    for mb, cb in right.items():
                        _acc(terms, (ma, mb), c * ca * cb)
        return TensorElement(self.datum, terms)

    def __rmul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.datum.descriptor == other.datum.descriptor and self.terms == other.terms

    def __hash__(self):
        return hash((self.datum.descriptor, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "<0 (x) 0>"
        bits = []
        for (a, b), c in self.terms.items():
            bits.append("%s*[F%s K%s E%s (x) F%s K%s E%s]" % (
                c, list(a.fword), list(a.kexp), list(a.eword),
                list(b.fword), list(b.kexp), list(b.eword)))
        return "<" + " + ".join(bits) + ">"

    def flip(self) -> "TensorElement":
        """Graded flip a (x) b -> (-1)^{|a||b|} b (x) a."""
        dat = self.datum
        terms: Dict[Tuple[Monomial, Monomial], Scalar] = {}
        for (a, b), c in self.terms.items():
            if mono_parity(dat, a) and mono_parity(dat, b):
                c = ZERO - c
            _acc(terms, (b, a), c)
        return TensorElement(self.datum, terms)


# -- Hopf structure -----------------------------------------------------------


def _letters(m: Monomial) -> List[Tuple[str, object]]:
    out: List[Tuple[str, object]] = [("F", i) for i in m.fword]
    if any(m.kexp):
        out.append(("K", m.kexp))
    out.extend(("E", i) for i in m.eword)
    return out


def _delta_letter(datum: RootDatum, kind: str, val) -> TensorElement:
    one = AlgebraElement.unit(datum)
    if kind == "E":
        ki = gen_k(datum, tuple(1 if a == val else 0 for a in range(datum.rank)))
        return TensorElement.of(ki, gen_e(datum, val)) + TensorElement.of(gen_e(datum, val), one)
    if kind == "F":
        kin = gen_k(datum, tuple(-1 if a == val else 0 for a in range(datum.rank)))
        return TensorElement.of(one, gen_f(datum, val)) + TensorElement.of(gen_f(datum, val), kin)
    kv = gen_k(datum, val)
    return TensorElement.of(kv, kv)


def coproduct(elem: AlgebraElement) -> TensorElement:
    """Coproduct, with both tensor legs in normal order."""
    datum = elem.datum
    out = TensorElement.zero(datum)
    for m, c in elem.terms.items():
        part = TensorElement.unit(datum)
        for kind, val in _letters(m):
            part = part * _delta_letter(datum, kind, val)
        out = out + part.scale(c)
    return out


def counit(elem: AlgebraElement) -> Scalar:
    total = ZERO
    for m, c in elem.terms.items():
        if not m.fword and not m.eword:
            total = total + c
    return total


def _antipode_letter(datum: RootDatum, kind: str, val) -> AlgebraElement:
    if kind == "E":
        kin = gen_k(datum, tuple(-1 if a == val else 0 for a in range(datum.rank)))
        return -(kin * gen_e(datum, val))
    if kind == "F":
        ki = gen_k(datum, tuple(1 if a == val else 0 for a in range(datum.rank)))
        return -(gen_f(datum, val) * ki)
    return gen_k(datum, _vec_neg(val))


def antipode(elem: AlgebraElement) -> AlgebraElement:
    """Antipode; anti-multiplicative with the graded sign rule."""
    datum = elem.datum
    out = AlgebraElement.zero(datum)
    odd_idx = datum.s - 1
    for m, c in elem.terms.items():
        letters = _letters(m)
        k = sum(1 for kind, val in letters if kind != "K" and val == odd_idx)
        sign = -1 if (k * (k - 1) // 2) & 1 else 1
        part = AlgebraElement.unit(datum)
        for kind, val in reversed(letters):
            part = part * _antipode_letter(datum, kind, val)
        out = out + part.scale(c if sign > 0 else ZERO - c)
    return out


# -- algebra maps --------------------------------------------------------------


def omega(elem: AlgebraElement) -> AlgebraElement:
    """The involution E_i -> (-1)^{|E_i|} F_i, F_i -> E_i, K_mu -> K_{-mu}."""
    datum = elem.datum
    out = AlgebraElement.zero(datum)
    for m, c in elem.terms.items():
        part = AlgebraElement.unit(datum)
        for kind, val in _letters(m):
            if kind == "F":
                part = part * gen_e(datum, val)
            elif kind == "E":
                img = gen_f(datum, val)
                if datum.parity[val]:
                    img = -img
                part = part * img
            else:
                part = part * gen_k(datum, _vec_neg(val))
        out = out + part.scale(c)
    return out


def tau(elem: AlgebraElement) -> AlgebraElement:
    """The anti-automorphism swapping E_i and F_i and fixing K_mu."""
    datum = elem.datum
    out = AlgebraElement.zero(datum)
    for m, c in elem.terms.items():
        part = AlgebraElement.unit(datum)
        for kind, val in reversed(_letters(m)):
            if kind == "F":
                part = part * gen_e(datum, val)
            elif kind == "E":
                part = part * gen_f(datum, val)
            else:
                part = part * gen_k(datum, val)
        out = out + part.scale(c)
    return out


def sigma_twist(elem: AlgebraElement, signs: Sequence[int]) -> AlgebraElement:
    """Twist by a sign character of the root lattice, given on simple roots.

    K_mu picks up sigma(mu), F_i picks up sigma(alpha_i), E_i is fixed.
    """
    datum = elem.datum
    if len(signs) != datum.rank or any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1/-1, one per simple root")
    tor = getattr(datum, "torsion", None)
    if tor is not None:
        if sum(t for t, s in zip(tor, signs) if s < 0) & 1:
            raise ValueError("sign character does not descend to the root lattice")
    terms: Dict[Monomial, Scalar] = {}
    for m, c in elem.terms.items():
        neg = sum(1 for i in m.fword if signs[i] < 0)
        neg += sum(e for e, s in zip(m.kexp, signs) if s < 0)
        if neg & 1:
            c = ZERO - c
        _acc_mono(terms, m, c)
    return AlgebraElement(elem.datum, terms)


# -- adjoint action -------------------------------------------------------------


def _ad_letter(datum: RootDatum, kind: str, val, v: AlgebraElement) -> AlgebraElement:
    if kind == "K":
        return gen_k(datum, val) * v * gen_k(datum, _vec_neg(val))
    even, odd = v.parity_split()
    if kind == "E":
        e = gen_e(datum, val)
        up = tuple(1 if a == val else 0 for a in range(datum.rank))
        ki, kin = gen_k(datum, up), gen_k(datum, _vec_neg(up))
        out = e * v - ki * even * kin * e
        if datum.parity[val]:
            out = out + ki * odd * kin * e
        else:
            out = out - ki * odd * kin * e
        return out
    f = gen_f(datum, val)
    up = tuple(1 if a == val else 0 for a in range(datum.rank))
    ki = gen_k(datum, up)
    out = f * v - even * f
    if datum.parity[val]:
        out = out + odd * f
    else:
        out = out - odd * f
    return out * ki


def adjoint_action(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """ad(u)(v) with ad(xy) = ad(x) after ad(y), letter by letter."""
    datum = u.datum
    out = AlgebraElement.zero(datum)
    for m, c in u.terms.items():
        cur = v
        for kind, val in reversed(_letters(m)):
            cur = _ad_letter(datum, kind, val, cur)
        out = out + cur.scale(c)
    return out


# -- skew derivations ------------------------------------------------------------


def r_derivations(elem: AlgebraElement, i: int) -> Tuple[AlgebraElement, AlgebraElement]:
    """The pair (r_i, r'_i) on a homogeneous element of a half-algebra."""
    datum = elem.datum
    has_e = any(m.eword for m in elem.terms)
    has_f = any(m.fword for m in elem.terms)
    has_k = any(any(m.kexp) for m in elem.terms)
    if (has_e and has_f) or has_k:
        raise ValueError("input is not homogeneous in U+ or U-")
    ctx = get_algebra(datum)
    pctx = ctx.pctx
    r_raw: Dict[Tuple[Word, KVec, Word], Scalar] = {}
    rp_raw: Dict[Tuple[Word, KVec, Word], Scalar] = {}
    zero = _zero_vec(datum.rank)
    for m, c in elem.terms.items():
        if has_e:
            for w, cw in pctx.r_der_e(i, m.eword).items():
                _acc(r_raw, ((), zero, w), c * cw)
            for w, cw in pctx.rp_der_e(i, m.eword).items():
                _acc(rp_raw, ((), zero, w), c * cw)
        else:
            for w, cw in pctx.r_der(i, m.fword).items():
                _acc(r_raw, (w, zero, ()), c * cw)
            for w, cw in pctx.rp_der(i, m.fword).items():
                _acc(rp_raw, (w, zero, ()), c * cw)
    return (AlgebraElement(datum, ctx.normalize(r_raw)),
            AlgebraElement(datum, ctx.normalize(rp_raw)))


def weight_space_basis(datum: RootDatum, sign: str, weight: Sequence[int]) -> WeightSpaceBasis:
    """Echelon basis of U^sign at the given element of the positive root cone."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    vec = tuple(int(x) for x in weight)
    if any(x < 0 for x in vec):
        raise ValueError("weight must be a non-negative combination of simple roots")
    return get_algebra(datum).wsb(sign, vec)
