"""Quasi-R-matrix truncations and the central elements they produce.

The quasi-R-matrix is assembled weight block by weight block from dual
bases of the half-algebras.  Applying a module action to its first leg
gives unipotent operator-valued matrices; from those, the gamma operator,
Casimir elements and the supertrace-defined z-elements are built.
"""

from typing import Dict, List, NamedTuple, Sequence, Tuple

from .algebra import (
    AlgebraElement, Monomial, TensorElement, canon_kexp, coproduct, gen_e,
    gen_f, gen_k, get_algebra, k_two_rho, mono_qdegree,
)
from .modules import WeightModule
from .pairing import get_context
from .rootdata import RootDatum
from .scalars import ONE, ZERO, Scalar


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; results would be unreliable."""


def _zero_kvec(datum: RootDatum) -> Tuple[int, ...]:
    return (0,) * datum.rank


def theta_block(datum: RootDatum, vec: Sequence[int]) -> TensorElement:
    """The weight-vec component of the quasi-R-matrix: sum of v_i (x) u_i
    over dual bases of the two half-algebras at that weight."""
    vec = tuple(int(x) for x in vec)
    if any(x < 0 for x in vec):
        raise ValueError("weight vector must be non-negative")
    zero = _zero_kvec(datum)
    if not any(vec):
        return TensorElement.unit(datum)
    lower, upper = get_context(datum).dual_bases(vec)
    terms: Dict[Tuple[Monomial, Monomial], Scalar] = {}
    for el, xword in zip(lower, upper):
        (eword,) = xword.keys()
        right = Monomial((), zero, eword)
        for fword, c in el.items():
            terms[(Monomial(fword, zero, ()), right)] = c
    return TensorElement(datum, terms)


def quasi_r_matrix(datum: RootDatum, cutoff: int) -> TensorElement:
    """Quasi-R-matrix truncated to weight components of height <= cutoff."""
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    total = TensorElement.zero(datum)
    for vec in _cone_vecs(datum.rank, cutoff):
        total = total + theta_block(datum, vec)
    return total


def _cone_vecs(rank: int, height: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []

    def rec(prefix, budget, pos):
        if pos == rank - 1:
            for a in range(budget + 1):
                out.append(prefix + (a,))
            return
        for a in range(budget + 1):
            rec(prefix + (a,), budget - a, pos + 1)

    if rank == 0:
        return [()]
    rec((), height, 0)
    return out


def phi_twist(t: TensorElement) -> TensorElement:
    """The Cartan twist: a (x) b maps to a K_{-deg b} (x) K_{-deg a} b."""
    dat = t.datum
    ctx = get_algebra(dat)
    terms: Dict[Tuple[Monomial, Monomial], Scalar] = {}
    for (a, b), c in t.terms.items():
        da = mono_qdegree(dat, a)
        db = mono_qdegree(dat, b)
        ka = Monomial((), canon_kexp(dat, tuple(-x for x in db)), ())
        kb = Monomial((), canon_kexp(dat, tuple(-x for x in da)), ())
        left = ctx.mono_mul(a, ka)
        right = ctx.mono_mul(kb, b)
        for ma, ca in left.items():
            for mb, cb in right.items():
                key = (ma, mb)
                cur = terms.get(key, ZERO) + c * ca * cb
                if cur.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = cur
    return TensorElement(dat, terms)


class EndoValuedElement:
    """A square matrix of algebra elements: an element of End(M) (x) U.

    Entry [r][c] collects the algebra-valued coefficient sending basis
    vector c to basis vector r.  Products insert the graded sign between
    the algebra leg of the left factor and the operator leg of the right
    factor; the operator parity of a position is read off the basis
    parities, which is valid because a map component supported at [r][c]
    is homogeneous of parity p_r + p_c.
    """

    __slots__ = ("module", "entries")

    def __init__(self, module: WeightModule, entries: List[List[AlgebraElement]]):
        self.module = module
        self.entries = entries

    @staticmethod
    def zero(module: WeightModule) -> "EndoValuedElement":
        z = AlgebraElement(module.datum, {})
        n = module.dim
        return EndoValuedElement(module, [[z] * n for _ in range(n)])

    @staticmethod
    def identity(module: WeightModule) -> "EndoValuedElement":
        one = AlgebraElement.unit(module.datum)
        z = AlgebraElement(module.datum, {})
        n = module.dim
        return EndoValuedElement(
            module, [[one if r == c else z for c in range(n)] for r in range(n)])

    @staticmethod
    def from_tensor(module: WeightModule, t: TensorElement) -> "EndoValuedElement":
        """Apply the module action to the first leg."""
        out = EndoValuedElement.zero(module)
        n = module.dim
        for (a, b), c in t.terms.items():
            mat = module.apply_monomial(a)
            for r in range(n):
                row = mat[r]
                for s in range(n):
                    if not row[s].is_zero():
                        out.entries[r][s] = out.entries[r][s] + AlgebraElement(
                            module.datum, {b: c * row[s]})
        return out

    @staticmethod
    def cartan_envelope(module: WeightModule) -> "EndoValuedElement":
        """Diagonal matrix with K_{2 eta} at each basis vector of weight eta."""
        dat = module.datum
        out = EndoValuedElement.zero(module)
        for i, w in enumerate(module.weights):
            vec = dat.vec_from_weight(w)
            kvec = []
            for x in vec:
                t = 2 * x
                if t.denominator != 1:
                    raise ValueError(
                        "module weights must lie in one half of the root lattice")
                kvec.append(int(t))
            out.entries[i][i] = gen_k(dat, kvec)
        return out

    def is_zero(self) -> bool:
        return all(not e.terms for row in self.entries for e in row)

    def __add__(self, other: "EndoValuedElement") -> "EndoValuedElement":
        n = self.module.dim
        return EndoValuedElement(self.module, [
            [self.entries[r][c] + other.entries[r][c] for c in range(n)]
            for r in range(n)])

    def __sub__(self, other: "EndoValuedElement") -> "EndoValuedElement":
        n = self.module.dim
        return EndoValuedElement(self.module, [
            [self.entries[r][c] - other.entries[r][c] for c in range(n)]
            for r in range(n)])

    def __mul__(self, other: "EndoValuedElement") -> "EndoValuedElement":
        if not isinstance(other, EndoValuedElement):
            return NotImplemented
        n = self.module.dim
        par = self.module.parities
        out = EndoValuedElement.zero(self.module)
        for r in range(n):
            for k in range(n):
                left = self.entries[r][k]
                if not left.terms:
                    continue
                even, odd = left.parity_split()
                for c in range(n):
                    right = other.entries[k][c]
                    if not right.terms:
                        continue
                    acc = out.entries[r][c]
                    if even.terms:
                        acc = acc + even * right
                    if odd.terms:
                        prod = odd * right
                        acc = acc + (-prod if (par[k] + par[c]) & 1 else prod)
                    out.entries[r][c] = acc
        return out

    def commutator(self, other: "EndoValuedElement") -> "EndoValuedElement":
        return self * other - other * self

    def power(self, k: int) -> "EndoValuedElement":
        out = EndoValuedElement.identity(self.module)
        for _ in range(k):
            out = out * self
        return out

    def inverse_unipotent(self) -> "EndoValuedElement":
        """Inverse of identity + nilpotent, by the finite geometric series."""
        ident = EndoValuedElement.identity(self.module)
        n = self - ident
        out = ident
        term = ident
        sign = -1
        for _ in range(len(set(w.coords for w in self.module.weights)) + 1):
            term = term * n
            if term.is_zero():
                return out
            out = (out - term) if sign < 0 else (out + term)
            sign = -sign
        raise ConsistencyError("operator expected to be unipotent is not")

    def supertrace_first(self) -> AlgebraElement:
        total = AlgebraElement(self.module.datum, {})
        for i, p in enumerate(self.module.parities):
            e = self.entries[i][i]
            total = (total - e) if p else (total + e)
        return total


class GammaData(NamedTuple):
    theta: TensorElement
    r_matrix: EndoValuedElement
    r_op_phi: EndoValuedElement
    envelope: EndoValuedElement
    gamma: EndoValuedElement


def _module_vecs(module: WeightModule) -> List[Tuple[int, ...]]:
    """Weight differences of the module that lie in the positive cone;
    only these components of the quasi-R-matrix act nontrivially."""
    dat = module.datum
    seen = set()
    for wc in module.weights:
        for wr in module.weights:
            try:
                vec = dat.vec_from_weight(wc - wr)
            except ValueError:
                continue
            if all(x.denominator == 1 and x >= 0 for x in vec):
                seen.add(tuple(int(x) for x in vec))
    return sorted(seen, key=lambda v: (sum(v), v))


def gamma_operator(module: WeightModule) -> GammaData:
    """The gamma operator of a module, with its R-matrix ingredients.

    Raises ConsistencyError when the result fails to commute with the
    image of the coproduct on the generators.
    """
    dat = module.datum
    theta = TensorElement.zero(dat)
    for vec in _module_vecs(module):
        theta = theta + theta_block(dat, vec)
    r_matrix = EndoValuedElement.from_tensor(module, theta).inverse_unipotent()
    r_op_phi = EndoValuedElement.from_tensor(
        module, phi_twist(theta.flip())).inverse_unipotent()
    envelope = EndoValuedElement.cartan_envelope(module)
    gamma = envelope * r_op_phi * r_matrix

    unit_vecs = [tuple(1 if j == i else 0 for j in range(dat.rank))
                 for i in range(dat.rank)]
    gens = [gen_e(dat, i) for i in range(dat.rank)]
    gens += [gen_f(dat, i) for i in range(dat.rank)]
    gens += [gen_k(dat, v) for v in unit_vecs]
    for g in gens:
        image = EndoValuedElement.from_tensor(module, coproduct(g))
        if not gamma.commutator(image).is_zero():
            raise ConsistencyError(
                "gamma operator does not commute with the coproduct image")
    return GammaData(theta, r_matrix, r_op_phi, envelope, gamma)


def casimir(module: WeightModule, k: int,
            gamma: GammaData = None) -> AlgebraElement:
    """k-th Casimir element of the module: the first-leg supertrace of
    zeta(K_{2 rho}) gamma^k."""
    if not 1 <= k <= 4:
        raise ValueError("the power k must be between 1 and 4")
    if gamma is None:
        gamma = gamma_operator(module)
    dat = module.datum
    power = gamma.gamma.power(k)
    two_rho = 2 * dat.rho
    total = AlgebraElement(dat, {})
    for i, (w, p) in enumerate(zip(module.weights, module.parities)):
        piece = power.entries[i][i] * dat.q(dat.form(two_rho, w))
        total = (total - piece) if p else (total + piece)
    return total


def z_element(module: WeightModule) -> AlgebraElement:
    """The central element z_M determined by pairing against supertraces:
    the Rosso form of u with z_M equals the supertrace of u K_{2 rho}^{-1}
    acting on M, for every u."""
    dat = module.datum
    ctx = get_context(dat)
    two_rho = 2 * dat.rho
    if module.status != "finite":
        raise ValueError(
            "z_element needs a finite-dimensional module, got status %r"
            % module.status)
    for w in module.weights:
        if any(x.denominator > 2 for x in dat.vec_from_weight(w)):
            raise ValueError(
                "module weights must lie in one half of the root lattice")

    terms: Dict[Monomial, Scalar] = {}
    for nu in _module_vecs(module):
        nu_weight = dat.weight_from_vec(nu)
        block_parity = sum(dat.parity[i] * int(n) for i, n in enumerate(nu)) & 1
        if any(nu):
            lower, upper = ctx.dual_bases(nu)
        else:
            lower, upper = [{(): ONE}], [{(): ONE}]
        lower_mats = []
        for el in lower:
            mat = None
            for fword, c in el.items():
                m = module.apply_monomial(Monomial(fword, _zero_kvec(dat), ()))
                scaled = [[c * x for x in row] for row in m]
                if mat is None:
                    mat = scaled
                else:
                    mat = [[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(mat, scaled)]
            lower_mats.append(mat)
        upper_mats = []
        for xw in upper:
            (eword,) = xw.keys()
            upper_mats.append(
                module.apply_monomial(Monomial((), _zero_kvec(dat), eword)))

        weight_of = {w.coords: w for w in module.weights}
        for c_idx, ymat in enumerate(lower_mats):
            for d_idx, xmat in enumerate(upper_mats):
                diag_by_weight: Dict[tuple, Scalar] = {}
                for k, (w, p) in enumerate(zip(module.weights, module.parities)):
                    val = ZERO
                    for t in range(module.dim):
                        if not ymat[k][t].is_zero() and not xmat[t][k].is_zero():
                            val = val + ymat[k][t] * xmat[t][k]
                    if val.is_zero():
                        continue
                    if p:
                        val = ZERO - val
                    key = w.coords
                    cur = diag_by_weight.get(key)
                    diag_by_weight[key] = val if cur is None else cur + val
                if not diag_by_weight:
                    continue
                for key, s_val in diag_by_weight.items():
                    w = weight_of[key]
                    coef = s_val * dat.q(
                        -dat.form(two_rho, nu_weight)
                        - dat.form(two_rho, w)
                        + dat.form(w + nu_weight, nu_weight))
                    if block_parity:
                        coef = ZERO - coef
                    if coef.is_zero():
                        continue
                    wvec = dat.vec_from_weight(w)
                    kvec = canon_kexp(
                        dat, tuple(int(-2 * a) - int(n)
                                   for a, n in zip(wvec, nu)))
                    xword = next(iter(upper[c_idx].keys()))
                    for fword, fc in lower[d_idx].items():
                        mono = Monomial(fword, kvec, xword)
                        cur = terms.get(mono, ZERO) + coef * fc
                        if cur.is_zero():
                            terms.pop(mono, None)
                        else:
                            terms[mono] = cur
    return AlgebraElement(dat, terms)


def is_central(elem: AlgebraElement) -> bool:
    """True when the element commutes with every generator."""
    dat = elem.datum
    gens = [gen_e(dat, i) for i in range(dat.rank)]
    gens += [gen_f(dat, i) for i in range(dat.rank)]
    gens += [gen_k(dat, tuple(1 if j == i else 0 for j in range(dat.rank)))
             for i in range(dat.rank)]
    for g in gens:
        diff = elem * g - g * elem
        if diff.terms:
            return False
    return True


def str_q(module: WeightModule, elem: AlgebraElement) -> Scalar:
    """Quantum supertrace of an algebra element on a module."""
    mat = module.apply_element(elem * k_two_rho(module.datum, negate=True))
    total = ZERO
    for i, p in enumerate(module.parities):
        total = (total - mat[i][i]) if p else (total + mat[i][i])
    return total
