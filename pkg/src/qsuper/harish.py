"""Harish-Chandra projection onto the Cartan part and its image tests.

Projecting a weight-zero element keeps the pure K-monomials and twists the
result by the shift automorphism attached to -rho.  Images of central
elements are W-invariant Laurent combinations of K-monomials whose
coefficients also satisfy a sum rule along every line in the direction of
an isotropic root; ``wsup_membership`` verifies that rule either by direct
line sums or by division against K_alpha^2 - 1, and the two routes must
reach the same verdict.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Dict, List, Optional, Tuple, Union

from .algebra import AlgebraElement, KVec, Monomial, canon_kexp, mono_qdegree
from .center import ConsistencyError
from .modules import CharacterElement, WeightModule, characters
from .rootdata import RootDatum, Weight
from .scalars import ONE, ZERO, Scalar, scal_sum, scalar_from_json, scalar_to_json


def _as_scalar(x) -> Optional[Scalar]:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_fraction(x)
    return None


class LaurentInvariant:
    """A finite combination sum_mu a_mu K_mu of Cartan monomials.

    Keys are integer exponent vectors over the simple roots, values are
    scalars.  The term map never stores zero coefficients, so equality is
    term-map equality, exactly as for :class:`AlgebraElement`.
    """

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum, terms: Dict[KVec, Scalar]):
        clean: Dict[KVec, Scalar] = {}
        for vec, c in terms.items():
            if c.is_zero():
                continue
            key = canon_kexp(datum, vec)
            cur = clean.get(key)
            val = c if cur is None else cur + c
            if val.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = val
        self.datum = datum
        self.terms = clean

    @staticmethod
    def zero(datum: RootDatum) -> "LaurentInvariant":
        return LaurentInvariant(datum, {})

    @staticmethod
    def unit(datum: RootDatum) -> "LaurentInvariant":
        return LaurentInvariant(datum, {(0,) * datum.rank: ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[KVec]:
        return sorted(self.terms)

    def coefficient(self, vec) -> Scalar:
        return self.terms.get(canon_kexp(self.datum, vec), ZERO)

    def coefficient_at(self, mu: Weight) -> Scalar:
        """Coefficient of K_mu, or zero when mu is not an exponent vector."""
        vec = self.datum.vec_from_weight(mu)
        if any(x.denominator != 1 for x in vec):
            return ZERO
        return self.coefficient(vec)

    def __add__(self, other: "LaurentInvariant") -> "LaurentInvariant":
        if not isinstance(other, LaurentInvariant):
            return NotImplemented
        terms = dict(self.terms)
        for vec, c in other.terms.items():
            cur = terms.get(vec)
            val = c if cur is None else cur + c
            if val.is_zero():
                terms.pop(vec, None)
            else:
                terms[vec] = val
        return LaurentInvariant(self.datum, terms)

    def __sub__(self, other: "LaurentInvariant") -> "LaurentInvariant":
        if not isinstance(other, LaurentInvariant):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LaurentInvariant":
        return LaurentInvariant(self.datum, {v: ZERO - c for v, c in self.terms.items()})

    def __mul__(self, other):
        s = _as_scalar(other)
        if s is not None:
            return LaurentInvariant(self.datum, {v: s * c for v, c in self.terms.items()})
        if not isinstance(other, LaurentInvariant):
            return NotImplemented
        terms: Dict[KVec, Scalar] = {}
        for v1, c1 in self.terms.items():
            for v2, c2 in other.terms.items():
                key = canon_kexp(self.datum, tuple(a + b for a, b in zip(v1, v2)))
                cur = terms.get(key)
                val = c1 * c2 if cur is None else cur + c1 * c2
                if val.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = val
        return LaurentInvariant(self.datum, terms)

    def __rmul__(self, other):
        s = _as_scalar(other)
        if s is not None:
            return self * s
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentInvariant):
            return NotImplemented
        return self.datum.descriptor == other.datum.descriptor and self.terms == other.terms

    def __hash__(self):
        return hash((self.datum.descriptor, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "<0>"
        bits = ["%s*K%s" % (c, list(v)) for v, c in sorted(self.terms.items())]
        return "<" + " + ".join(bits) + ">"

    def to_element(self) -> AlgebraElement:
        return AlgebraElement(
            self.datum, {Monomial((), v, ()): c for v, c in self.terms.items()}
        )

    def to_payload(self) -> list:
        return [
            {"kexp": list(v), "coefficient": scalar_to_json(self.terms[v])}
            for v in self.support()
        ]

    @staticmethod
    def from_payload(datum: RootDatum, payload: list) -> "LaurentInvariant":
        terms = {
            tuple(int(x) for x in row["kexp"]): scalar_from_json(row["coefficient"])
            for row in payload
        }
        return LaurentInvariant(datum, terms)


# -- the projection -----------------------------------------------------------


def cartan_part(elem: AlgebraElement) -> LaurentInvariant:
    """Drop every monomial with a nonempty word, keeping the K-part.

    The input must lie in the weight-zero component; a monomial whose words
    do not cancel in the root lattice grading is an error rather than a
    term to discard.
    """
    datum = elem.datum
    for m in elem.terms:
        if any(mono_qdegree(datum, m)):
            raise ValueError("the element does not have weight zero")
    return LaurentInvariant(
        datum, {m.kexp: c for m, c in elem.terms.items() if not m.fword and not m.eword}
    )


def gamma_shift(inv: LaurentInvariant, lam: Weight) -> LaurentInvariant:
    """Rescale each K_mu by q^{(lam, mu)}.

    Composing two shifts adds the weights, so the shift by -lam inverts
    the shift by lam.
    """
    datum = inv.datum
    terms = {}
    for vec, c in inv.terms.items():
        mu = datum.weight_from_vec(vec)
        terms[vec] = c * datum.q(datum.form(lam, mu))
    return LaurentInvariant(datum, terms)


def hc_project(elem: AlgebraElement) -> LaurentInvariant:
    """Harish-Chandra projection: Cartan part followed by the -rho shift."""
    return gamma_shift(cartan_part(elem), -elem.datum.rho)


def _constant_integer(s: Scalar) -> Optional[int]:
    if s.is_zero():
        return 0
    if s.den == {0: 1} and set(s.num) == {0}:
        return s.num[0]
    return None


def iota_image(inv: LaurentInvariant) -> CharacterElement:
    """Reinterpret K_mu as the formal exponential e^{-mu/2}.

    Raises ValueError when a coefficient is not a constant integer, since
    character elements have integer coefficients.
    """
    datum = inv.datum
    coeffs: Dict[Weight, int] = {}
    for vec, c in inv.terms.items():
        n = _constant_integer(c)
        if n is None:
            raise ValueError("a coefficient is not a constant integer")
        w = datum.canonical(datum.weight_from_vec(vec).scale(Fraction(-1, 2)))
        coeffs[w] = coeffs.get(w, 0) + n
    return CharacterElement(datum, coeffs)


def sch_compare(module: WeightModule, z: AlgebraElement) -> bool:
    """Test iota(HC(z)) == Sch(module) as character elements."""
    if module.status != "finite":
        raise ValueError("the module must be a finite-dimensional weight module")
    inv = hc_project(z)
    try:
        image = iota_image(inv)
    except ValueError:
        return False
    return image == characters(module)[1]


def central_eigenvalue(lam: Weight, z: AlgebraElement) -> Scalar:
    """Scalar by which z acts on a highest weight vector of weight lam.

    Evaluates the Cartan part of z at lam, sending K_mu to q^{(lam, mu)}.
    """
    datum = z.datum
    inv = cartan_part(z)
    total = ZERO
    for vec, c in inv.terms.items():
        total = total + c * datum.q(datum.form(lam, datum.weight_from_vec(vec)))
    return total


# -- image membership ---------------------------------------------------------


@dataclass(frozen=True)
class MembershipReport:
    ok: bool
    mode: str
    reasons: Tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def _line_groups(support: List[KVec], avec) -> List[List[Tuple[Fraction, KVec]]]:
    """Partition support vectors into lines nu + Z*alpha.

    Two vectors share a line exactly when their difference is an integer
    multiple of alpha, so the key is the alpha-free base point together
    with the fractional part of the step parameter.
    """
    pivot = next(i for i, a in enumerate(avec) if a)
    groups: Dict[tuple, List[Tuple[Fraction, KVec]]] = {}
    for vec in support:
        t = Fraction(vec[pivot]) / avec[pivot]
        base = tuple(Fraction(x) - t * a for x, a in zip(vec, avec))
        groups.setdefault((base, t - floor(t)), []).append((t, vec))
    return [groups[key] for key in sorted(groups)]


def wsup_membership(
    h: Union[AlgebraElement, LaurentInvariant], mode: str = "both"
) -> MembershipReport:
    """Decide membership in the ring of W-supersymmetric Laurent invariants.

    Failures are reported as results, never raised.  Mode "A" checks the
    defining conditions: every exponent lies in 2*Lambda meeting the root
    lattice, the coefficients are Weyl invariant, and for every positive
    isotropic root alpha the coefficients along each line A^alpha_nu with
    (nu, alpha) != 0 sum to zero.  Mode "B" replaces the line sums by the
    requirement that the derivation D_alpha, acting on K_mu by the factor
    (mu, alpha), lands in the ideal generated by K_alpha^2 - 1; the
    remainder is computed line by line.  Mode "both" runs the two and
    insists they agree.
    """
    key = mode.strip().lower()
    if key not in ("a", "b", "both"):
        raise ValueError("mode must be 'A', 'B' or 'both'")
    label = "both" if key == "both" else key.upper()

    if isinstance(h, AlgebraElement):
        if not h.is_cartan():
            return MembershipReport(
                False, label, ("some terms lie outside the Cartan subalgebra",)
            )
        inv = LaurentInvariant(h.datum, {m.kexp: c for m, c in h.terms.items()})
    elif isinstance(h, LaurentInvariant):
        inv = h
    else:
        raise TypeError("expected an AlgebraElement or a LaurentInvariant")

    datum = inv.datum
    support = inv.support()
    weights = {vec: datum.weight_from_vec(vec) for vec in support}

    shared: List[str] = []
    for vec in support:
        if not datum.lattice_tests(weights[vec])["in_2Lambda_cap_ZPhi"]:
            shared.append(
                "the exponent %s is outside 2*Lambda meeting the root lattice"
                % datum.render_weight(weights[vec])
            )

    checked = set()
    for vec in support:
        if vec in checked:
            continue
        ref = inv.terms[vec]
        for x in datum.weyl_orbit(weights[vec]):
            xv = datum.vec_from_weight(x)
            if all(a.denominator == 1 for a in xv):
                ikey = canon_kexp(datum, xv)
                checked.add(ikey)
                c = inv.terms.get(ikey, ZERO)
            else:
                c = ZERO
            if c != ref:
                shared.append(
                    "the coefficients at %s and at %s differ under the Weyl group"
                    % (datum.render_weight(weights[vec]), datum.render_weight(x))
                )
                break

    a_reasons: List[str] = []
    b_reasons: List[str] = []
    iso = [v for v in datum.pos_odd_vec if datum.form_vec(v, v) == 0]
    for avec in iso:
        alpha = datum.weight_from_vec(avec)
        for pts in _line_groups(support, avec):
            nu = weights[pts[0][1]]
            if datum.form(nu, alpha) == 0:
                continue
            total = scal_sum(inv.terms[v] for _, v in pts)
            if not total.is_zero():
                a_reasons.append(
                    "the coefficients along the %s line through %s do not sum to zero"
                    % (datum.render_weight(alpha), datum.render_weight(nu))
                )
            t0 = min(t for t, _ in pts)
            even = scal_sum(inv.terms[v] for t, v in pts if int(t - t0) % 2 == 0)
            odd = scal_sum(inv.terms[v] for t, v in pts if int(t - t0) % 2 == 1)
            if not (even.is_zero() and odd.is_zero()):
                b_reasons.append(
                    "dividing the %s derivative by K^2 - 1 leaves a remainder "
                    "on the line through %s"
                    % (datum.render_weight(alpha), datum.render_weight(nu))
                )

    if key == "a":
        reasons = shared + a_reasons
    elif key == "b":
        reasons = shared + b_reasons
    else:
        ok_a = not (shared or a_reasons)
        ok_b = not (shared or b_reasons)
        if ok_a != ok_b:
            raise ConsistencyError("the two membership tests disagree")
        reasons = shared + a_reasons + b_reasons
    return MembershipReport(not reasons, label, tuple(reasons))
